#include "compdual/operators.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace compdual;

namespace {

oracle::Res to_ref(const WeakComposition& w)
{
    return oracle::Seq(w.parts().begin(), w.parts().end());
}

oracle::Res to_ref(const OpResult& r)
{
    if (r.is_zero())
        return std::nullopt;
    return to_ref(r.value());
}

const std::vector<WeakComposition>& universe()
{
    static const auto u = enumerate_weak(6, 5);
    return u;
}

}  // namespace

TEST_CASE("IndexSet")
{
    CHECK(IndexSet::range(3) == IndexSet{1, 2, 3});
    CHECK(IndexSet::range(0).empty());
    CHECK(IndexSet::from_mask(0b1010) == IndexSet{2, 4});
    CHECK(IndexSet{3, 1, 2} == IndexSet{1, 2, 3});
    CHECK_THROWS_AS(IndexSet({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet({0, 2}), std::invalid_argument);
    CHECK(IndexSet{1, 2, 4}.shifted_down() == IndexSet{1, 3});
    const IndexSet s{1, 4, 5, 6};
    CHECK(s.below(4) == IndexSet{1});
    CHECK(s.above(4) == IndexSet{5, 6});
    CHECK(s.without(4).with(3) == IndexSet{1, 3, 5, 6});
    CHECK(s.max() == 6);
    CHECK(to_string(IndexSet{2, 4}) == "{2,4}");
}

TEST_CASE("box_remove examples")
{
    const WeakComposition a{2, 1, 3};
    CHECK(box_remove(1, a) == OpResult(WeakComposition{2, 0, 3}));
    CHECK(box_remove(3, a) == OpResult(WeakComposition{2, 1, 2}));
    CHECK(box_remove(4, a).is_zero());
    CHECK(box_remove(1, WeakComposition{}).is_zero());
    // rightmost occurrence
    CHECK(box_remove(1, WeakComposition{1, 2, 1}) == OpResult(WeakComposition{1, 2, 0}));
}

TEST_CASE("box_remove_set examples")
{
    CHECK(box_remove_set(IndexSet{1, 2, 3}, WeakComposition{3, 1, 4, 2, 1}) ==
          OpResult(WeakComposition{2, 1, 4, 1, 0}));
    CHECK(box_remove_set(IndexSet{2, 4}, WeakComposition{4, 1, 4, 2, 1}) ==
          OpResult(WeakComposition{4, 1, 3, 1, 1}));
    CHECK(box_remove_set(IndexSet{}, WeakComposition{2, 1, 3}) == OpResult(WeakComposition{2, 1, 3}));
}

TEST_CASE("append examples")
{
    CHECK(append(2, WeakComposition{2, 1, 3}) == WeakComposition{2, 1, 3, 2});
    CHECK(append(0, WeakComposition{2, 1, 3}) == WeakComposition{2, 1, 3, 0});
    CHECK(append(1, WeakComposition{}) == WeakComposition{1});
    CHECK(append(1, OpResult::zero()).is_zero());
}

TEST_CASE("jdt_add examples")
{
    CHECK(jdt_add(4, WeakComposition{3, 1, 4, 2, 1}) == OpResult(WeakComposition{2, 1, 4, 1, 0, 4}));
    CHECK(jdt_add(1, WeakComposition{2, 1}) == OpResult(WeakComposition{2, 1, 1}));
    CHECK(jdt_add(2, WeakComposition{2, 1, 3}) == OpResult(WeakComposition{2, 0, 3, 2}));
    CHECK(jdt_add(5, WeakComposition{2, 1, 3}).is_zero());
    CHECK(to_ref(jdt_add(5, WeakComposition{2, 1, 3})) == oracle::jdt(5, oracle::Seq{2, 1, 3}));
}

TEST_CASE("jdt_add_set applies the smallest index first")
{
    CHECK(jdt_add_set(IndexSet{}, WeakComposition{1, 2}) == OpResult(WeakComposition{1, 2}));
    CHECK(jdt_add_set(IndexSet{1}, WeakComposition{2}) == OpResult(WeakComposition{2, 1}));
    const auto got = jdt_add_set(IndexSet{1, 2}, WeakComposition{1});
    CHECK(got == OpResult(WeakComposition{1, 0, 2}));
    CHECK(to_ref(got) == oracle::jdt(2, oracle::jdt(1, oracle::Seq{1})));
}

TEST_CASE("box_add examples")
{
    const WeakComposition b{3, 1, 4, 2, 1};
    CHECK(box_add(1, b) == OpResult(WeakComposition{1, 3, 1, 4, 2, 1}));
    CHECK(box_add(3, b) == OpResult(WeakComposition{3, 1, 4, 3, 1}));
    for (int i = 6; i <= 10; ++i)
        CHECK(box_add(i, b).is_zero());
    CHECK(box_add(1, WeakComposition{}) == OpResult(WeakComposition{1}));
}

TEST_CASE("eval_word")
{
    const WeakComposition b{3, 1, 4, 2, 1};
    CHECK(eval_word({a(4), d(1), d(2), d(3)}, b) == OpResult(WeakComposition{2, 1, 4, 1, 0, 4}));
    CHECK(eval_word(OperatorWord{}, b) == OpResult(b));
    CHECK(eval_word({t(4), d(1), d(4), d(5), d(6)}, WeakComposition{2, 6, 1, 4}) ==
          OpResult(WeakComposition{2, 4, 0, 4}));
    // index 0 is the identity except for appending
    CHECK(eval_word({d(0), u(0), t(0)}, b) == OpResult(b));
    CHECK(eval_word({a(0)}, b) == OpResult(WeakComposition{3, 1, 4, 2, 1, 0}));
    // zero absorbs
    CHECK(eval_word({a(1), d(9)}, b).is_zero());
    CHECK(box_remove_word(IndexSet{1, 4}) == OperatorWord{d(1), d(4)});
    CHECK(to_string(OperatorWord{t(2), d(2)}) == "t2 d2");
}

TEST_CASE("hand-checked relation instances")
{
    const WeakComposition a213{2, 1, 3};
    // u_1 d_1 = d_2 u_2 on (2,1,3)
    const auto lhs = eval_word({u(1), d(1)}, a213);
    CHECK(lhs == OpResult(WeakComposition{2, 0, 3, 1}));
    CHECK(lhs == eval_word({d(2), u(2)}, a213));
    // d_2 t_2 and t_2 d_2 both fix (2,1,3)
    CHECK(eval_word({d(2), t(2)}, a213) == OpResult(a213));
    CHECK(eval_word({t(2), d(2)}, a213) == OpResult(a213));
}

TEST_CASE("operators agree with the reference implementation")
{
    for (const auto& w : universe()) {
        const auto ref = to_ref(w);
        for (int i = 0; i <= 8; ++i) {
            CHECK(to_ref(box_remove(i, w)) == oracle::remove(i, ref));
            CHECK(to_ref(jdt_add(i, w)) == oracle::jdt(i, ref));
            CHECK(to_ref(box_add(i, w)) == oracle::add(i, ref));
            CHECK(to_ref(append(i, w)) == oracle::append(i, ref));
        }
    }
}

TEST_CASE("d_I agrees with the reference for every subset of [1..6]")
{
    const auto sets = oracle::nonempty_subsets(6);
    for (const auto& w : enumerate_weak(5, 4))
        for (const auto& s : sets)
            CHECK(to_ref(box_remove_set(IndexSet(s), w)) == oracle::remove_set(s, to_ref(w)));
}

TEST_CASE("size shifts")
{
    for (const auto& w : universe()) {
        const long n = size(w);
        for (int i = 1; i <= 8; ++i) {
            if (auto r = box_remove(i, w))
                CHECK(size(r.value()) == n - 1);
            if (auto r = jdt_add(i, w))
                CHECK(size(r.value()) == n + 1);
            if (auto r = box_add(i, w))
                CHECK(size(r.value()) == n + 1);
            CHECK(size(append(i, w)) == n + i);
        }
    }
}

TEST_CASE("zero parts are inert")
{
    for (const auto& w : universe()) {
        const auto f = flatten(w).as_weak();
        for (int i = 1; i <= 8; ++i) {
            for (const Atom atom : {d(i), u(i), t(i), a(i)}) {
                const auto raw = apply(atom, w);
                const auto flat = apply(atom, f);
                REQUIRE(raw.is_zero() == flat.is_zero());
                if (raw)
                    CHECK(flatten(raw.value()) == flatten(flat.value()));
            }
        }
    }
}

TEST_CASE("last-part law and t-distinctness")
{
    for (const auto& w : universe()) {
        std::set<Composition, CanonicalLess> ups, adds;
        std::size_t nonzero_u = 0, nonzero_t = 0;
        for (int i = 1; i <= 8; ++i) {
            if (auto r = jdt_add(i, w)) {
                const auto p = r.value().parts();
                CHECK(p.back() == i);
                ups.insert(flatten(r.value()));
                ++nonzero_u;
            }
            if (auto r = box_add(i, w)) {
                adds.insert(flatten(r.value()));
                ++nonzero_t;
            }
        }
        CHECK(ups.size() == nonzero_u);
        CHECK(adds.size() == nonzero_t);
    }
}

TEST_CASE("finiteness")
{
    for (const auto& w : universe()) {
        const int m = largest_part(w);
        for (int i = m + 2; i <= m + 6; ++i) {
            CHECK(jdt_add(i, w).is_zero());
            CHECK(box_add(i, w).is_zero());
        }
        for (int i = m + 1; i <= m + 6; ++i)
            CHECK(box_remove(i, w).is_zero());
    }
}

TEST_CASE("op letters round-trip")
{
    for (OpKind k : {OpKind::BoxRemove, OpKind::Append, OpKind::JdtAdd, OpKind::BoxAdd})
        CHECK(op_kind_from_letter(op_letter(k)) == k);
    CHECK_THROWS(op_kind_from_letter('x'));
}
