#pragma once

// Integer-linear combinations of compositions and the up/down operators
// U = sum u_i, D = sum d_i, U~ = sum t_i and D~ = sum over nonempty I of d_I.

#include "compdual/composition.hpp"
#include "compdual/operators.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace compdual {

using Coeff = boost::multiprecision::cpp_int;

/// Finitely supported map Composition -> integer. Zero coefficients are never
/// stored; keys iterate in canonical order.
class FormalSum {
public:
    using Terms = std::map<Composition, Coeff, CanonicalLess>;

    FormalSum() = default;
    FormalSum(std::initializer_list<std::pair<Composition, long>> terms);
    static FormalSum basis(const Composition& c) { return FormalSum{{c, 1}}; }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Coeff coefficient(const Composition& c) const;

    void add(const Composition& c, const Coeff& k);
    /// Adds flatten(r) with coefficient k unless r is Zero.
    void add(const OpResult& r, const Coeff& k);

    FormalSum& operator+=(const FormalSum& rhs);
    FormalSum& operator-=(const FormalSum& rhs);
    FormalSum& operator*=(const Coeff& k);

    friend FormalSum operator+(FormalSum lhs, const FormalSum& rhs) { return lhs += rhs; }
    friend FormalSum operator-(FormalSum lhs, const FormalSum& rhs) { return lhs -= rhs; }
    friend FormalSum operator*(const Coeff& k, FormalSum rhs) { return rhs *= k; }

    bool operator==(const FormalSum&) const = default;

private:
    Terms terms_;
};

/// "2*(2, 1, 3) + (1, 2) - ..." or "0".
std::string to_string(const FormalSum& s);
/// Compact form "213 + 2*12".
std::string compact_string(const FormalSum& s);

/// Applies a per-composition map linearly: sum_k c_k * flatten(f(alpha_k)),
/// dropping Zero results. f may return several results per basis element.
FormalSum apply_pointwise(const FormalSum& s,
                          const std::function<void(const Composition&, std::vector<OpResult>&)>& f);

FormalSum up_R(const FormalSum& s);
FormalSum down_Q(const FormalSum& s);
FormalSum up_L(const FormalSum& s);
FormalSum down_filtered(const FormalSum& s);

/// Expression over the basic operators; applied linearly to formal sums.
class LinearOp {
public:
    enum class Kind { UpR, DownQ, UpL, DownFiltered, Identity, Sum, Difference, Product };

    static LinearOp up_R() { return LinearOp(Kind::UpR); }
    static LinearOp down_Q() { return LinearOp(Kind::DownQ); }
    static LinearOp up_L() { return LinearOp(Kind::UpL); }
    static LinearOp down_filtered() { return LinearOp(Kind::DownFiltered); }
    static LinearOp identity() { return LinearOp(Kind::Identity); }

    Kind kind() const { return kind_; }
    FormalSum operator()(const FormalSum& s) const;
    std::string name() const;

    friend LinearOp operator+(const LinearOp& a, const LinearOp& b) { return {Kind::Sum, a, b}; }
    friend LinearOp operator-(const LinearOp& a, const LinearOp& b) { return {Kind::Difference, a, b}; }
    /// Composition: (a * b)(s) = a(b(s)).
    friend LinearOp operator*(const LinearOp& a, const LinearOp& b) { return {Kind::Product, a, b}; }

private:
    explicit LinearOp(Kind kind) : kind_(kind) {}
    LinearOp(Kind kind, const LinearOp& lhs, const LinearOp& rhs);

    Kind kind_;
    std::shared_ptr<const LinearOp> lhs_;
    std::shared_ptr<const LinearOp> rhs_;
};

/// A(B(s)) - B(A(s)).
FormalSum commutator_minus(const LinearOp& A, const LinearOp& B, const FormalSum& s);

}  // namespace compdual
