#include "compdual/phi.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace compdual;

namespace {

TWord left(std::initializer_list<int> set, int i)
{
    return TWord(WordSide::Left, IndexSet(set), i);
}

TWord right(std::initializer_list<int> set, int i)
{
    return TWord(WordSide::Right, IndexSet(set), i);
}

}  // namespace

TEST_CASE("TWord construction and parts")
{
    CHECK_THROWS_AS(left({1, 2}, 3), std::invalid_argument);
    const auto w = left({1, 4, 5, 6}, 4);
    CHECK(w.lower() == IndexSet{1});
    CHECK(w.upper() == IndexSet{5, 6});
    CHECK(w.evaluate(Composition{2, 6, 1, 4}) == OpResult(WeakComposition{2, 4, 0, 4}));
    CHECK(w.evaluate(Composition{2, 6, 1, 4}) ==
          eval_word(w.word(), WeakComposition{2, 6, 1, 4}));
}

TEST_CASE("word sets for (2,1,3)")
{
    const Composition alpha{2, 1, 3};
    const auto sets = build_word_sets(alpha);
    CHECK(sets.index_bound == 4);
    CHECK(sets.Q == std::set<TWord>{left({1}, 1), left({2}, 2), left({3}, 3)});
    CHECK(sets.P == std::set<TWord>{right({1}, 1), right({2}, 2), right({3}, 3), right({4}, 4)});
    // independent check straight from the operators, indices up to 5
    std::size_t q = 0, p = 0;
    for (int i = 1; i <= 5; ++i) {
        q += !eval_word({t(i), d(i)}, alpha.as_weak()).is_zero();
        p += !eval_word({d(i), t(i)}, alpha.as_weak()).is_zero();
    }
    CHECK(q == 3);
    CHECK(p == 4);
    CHECK(eval_word({d(4), t(4)}, alpha.as_weak()) == OpResult(alpha.as_weak()));
    for (const auto& w : sets.Z)
        CHECK(w.index() <= 3);
}

TEST_CASE("phi and psi on singleton words")
{
    const Composition a21{2, 1};
    CHECK(phi(left({1}, 1), a21) == right({1}, 1));
    CHECK(left({1}, 1).evaluate(a21) == OpResult(WeakComposition{1, 2, 0}));
    CHECK(right({1}, 1).evaluate(a21) == OpResult(WeakComposition{1, 2, 0}));
    CHECK(psi(right({1}, 1), a21) == left({1}, 1));

    const Composition a213{2, 1, 3};
    CHECK(phi(left({2}, 2), a213) == right({2}, 2));
    CHECK(left({2}, 2).evaluate(a213) == OpResult(a213.as_weak()));
    CHECK(right({2}, 2).evaluate(a213) == OpResult(a213.as_weak()));
    CHECK(psi(right({2}, 2), a213) == left({2}, 2));
}

TEST_CASE("worked Phi example")
{
    const Composition alpha{2, 6, 1, 4};
    const auto w = left({1, 4, 5, 6}, 4);
    const auto image = phi(w, alpha);
    CHECK(image == right({1, 3, 5, 6}, 3));
    CHECK(flatten(image.evaluate(alpha).value()) == flatten(w.evaluate(alpha).value()));
    CHECK(psi(image, alpha) == w);
}

TEST_CASE("phi rejects words outside Y")
{
    CHECK_THROWS_AS(phi(left({4}, 4), Composition{2, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(psi(left({1}, 1), Composition{2, 1}), std::invalid_argument);
}

TEST_CASE("empty composition")
{
    const auto sets = build_word_sets(Composition{});
    CHECK(sets.Y.empty());
    CHECK(sets.Z.empty());
    CHECK(sets.Q.empty());
    CHECK(sets.X == std::set<TWord>{right({1}, 1)});
    CHECK(verify_phi(Composition{}).passed());
}

TEST_CASE("verify_phi on every composition of size <= 5")
{
    for (const auto& alpha : enumerate_compositions_upto(5)) {
        const auto report = verify_phi(alpha);
        INFO(to_string(alpha));
        for (const auto& c : report.clauses) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.passed);
        }
        CHECK(report.y_size == report.z_size);
        CHECK(report.case_counts[0] + report.case_counts[1] + report.case_counts[2] == report.y_size);
    }
}

TEST_CASE("phi table rows")
{
    const auto rows = phi_table(Composition{2, 6, 1, 4});
    CHECK_FALSE(rows.empty());
    for (const auto& r : rows) {
        CHECK(phi(r.word, Composition{2, 6, 1, 4}) == r.image);
        CHECK(flatten(r.word_value.value()) == flatten(r.image_value.value()));
    }
}
