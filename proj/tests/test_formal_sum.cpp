#include "compdual/formal_sum.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace compdual;

namespace {

FormalSum from_ref(const oracle::Sum& s)
{
    FormalSum out;
    for (const auto& [seq, k] : s)
        out.add(Composition(seq), k);
    return out;
}

oracle::Seq seq(const Composition& c)
{
    return {c.parts().begin(), c.parts().end()};
}

}  // namespace

TEST_CASE("arithmetic drops zero coefficients")
{
    FormalSum s{{Composition{1, 2}, 3}, {Composition{2}, -1}};
    s += FormalSum{{Composition{1, 2}, -3}};
    CHECK(s == FormalSum{{Composition{2}, -1}});
    CHECK(s.support_size() == 1);
    CHECK(s.coefficient(Composition{1, 2}) == 0);
    s -= s;
    CHECK(s.empty());
    CHECK(to_string(s) == "0");
}

TEST_CASE("adding an operator result flattens and skips zero")
{
    FormalSum s;
    s.add(OpResult(WeakComposition{2, 0, 3}), 2);
    s.add(OpResult::zero(), 5);
    s.add(OpResult(WeakComposition{0}), 1);
    CHECK(s == FormalSum{{Composition{2, 3}, 2}, {Composition{}, 1}});
}

TEST_CASE("coefficients are arbitrary precision")
{
    Coeff big = 1;
    big <<= 100;
    FormalSum s;
    s.add(Composition{1}, big);
    s.add(Composition{1}, big);
    CHECK(s.coefficient(Composition{1}) == big * 2);
}

TEST_CASE("compact formatting")
{
    const FormalSum s{{Composition{2, 1, 3}, 1}, {Composition{1, 2}, 2}};
    CHECK(compact_string(s) == "2*12 + 213");
    CHECK(to_string(FormalSum::basis(Composition{2, 1})) == "(2, 1)");
}

TEST_CASE("up_R, down_Q, up_L, down_filtered small cases")
{
    CHECK(up_R(FormalSum{{Composition{1}, 2}}) ==
          FormalSum{{Composition{1, 1}, 2}, {Composition{2}, 2}});
    CHECK(down_Q(FormalSum::basis(Composition{1, 2})) ==
          FormalSum{{Composition{2}, 1}, {Composition{1, 1}, 1}});
    CHECK(up_L(FormalSum::basis(Composition{1, 2})) ==
          FormalSum{{Composition{1, 1, 2}, 1}, {Composition{2, 2}, 1}, {Composition{1, 3}, 1}});
    CHECK(down_filtered(FormalSum::basis(Composition{2, 1})) ==
          FormalSum{{Composition{2}, 1}, {Composition{1, 1}, 1}, {Composition{1}, 1}});
    CHECK(down_Q(FormalSum::basis(Composition{})).empty());
    CHECK(up_R(FormalSum::basis(Composition{})) == FormalSum::basis(Composition{1}));
}

TEST_CASE("sum operators agree with reference expansions on all compositions of size <= 7")
{
    for (const auto& c : enumerate_compositions_upto(7)) {
        const auto s = FormalSum::basis(c);
        const auto ref = seq(c);
        const int m = oracle::largest(ref);
        oracle::Sum u, dn, t;
        for (int i = 1; i <= m + 4; ++i) {
            oracle::accumulate(u, oracle::jdt(i, ref), 1);
            oracle::accumulate(dn, oracle::remove(i, ref), 1);
            oracle::accumulate(t, oracle::add(i, ref), 1);
        }
        CHECK(up_R(s) == from_ref(u));
        CHECK(down_Q(s) == from_ref(dn));
        CHECK(up_L(s) == from_ref(t));
        CHECK(down_filtered(s) == from_ref(oracle::filtered_down(ref)));
    }
}

TEST_CASE("operators are linear")
{
    const auto all = enumerate_compositions_upto(5);
    const LinearOp ops[] = {LinearOp::up_R(), LinearOp::down_Q(), LinearOp::up_L(), LinearOp::down_filtered()};
    for (std::size_t k = 0; k + 1 < all.size(); k += 3) {
        const auto x = FormalSum::basis(all[k]);
        const auto y = FormalSum::basis(all[k + 1]);
        const auto combo = Coeff(3) * x + Coeff(-2) * y;
        for (const auto& op : ops)
            CHECK(op(combo) == Coeff(3) * op(x) + Coeff(-2) * op(y));
    }
}

TEST_CASE("rank homogeneity")
{
    for (const auto& c : enumerate_compositions_upto(6)) {
        const long n = size(c);
        const auto s = FormalSum::basis(c);
        const auto up_R_s = up_R(s);
        for (const auto& [x, k] : up_R_s.terms())
            CHECK(size(x) == n + 1);
        const auto up_L_s = up_L(s);
        for (const auto& [x, k] : up_L_s.terms())
            CHECK(size(x) == n + 1);
        const auto down_Q_s = down_Q(s);
        for (const auto& [x, k] : down_Q_s.terms())
            CHECK(size(x) == n - 1);
        const auto down_filtered_s = down_filtered(s);
        for (const auto& [x, k] : down_filtered_s.terms())
            CHECK(size(x) < n);
    }
}

TEST_CASE("LinearOp algebra")
{
    const auto U = LinearOp::up_R();
    const auto D = LinearOp::down_Q();
    const auto Id = LinearOp::identity();
    const auto s = FormalSum::basis(Composition{2, 1, 3});
    CHECK((D * U - U * D)(s) == s);
    CHECK(commutator_minus(D, U, s) == (D * U - U * D)(s));
    CHECK((Id + Id)(s) == Coeff(2) * s);
    CHECK_FALSE(U.name().empty());
}

TEST_CASE("self-assignment arithmetic")
{
    FormalSum s{{Composition{1}, 2}};
    s += s;
    CHECK(s == FormalSum{{Composition{1}, 4}});
    s -= s;
    CHECK(s.empty());
}
