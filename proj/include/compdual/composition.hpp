#pragma once

// Weak compositions, compositions and the Zero operator output.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compdual {

using Part = int;

/// Finite sequence of nonnegative parts. The empty sequence is allowed.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<Part> parts);
    WeakComposition(std::initializer_list<Part> parts);

    std::span<const Part> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Part operator[](std::size_t i) const { return parts_[i]; }

    bool operator==(const WeakComposition&) const = default;

private:
    std::vector<Part> parts_;
};

/// Finite sequence of strictly positive parts; the vertex type of every graph.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Part> parts);
    Composition(std::initializer_list<Part> parts);

    std::span<const Part> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Part operator[](std::size_t i) const { return parts_[i]; }

    WeakComposition as_weak() const { return WeakComposition(parts_); }

    bool operator==(const Composition&) const = default;

private:
    std::vector<Part> parts_;
};

/// Output of an operator: a weak composition or the annihilating Zero.
/// Zero is never the same thing as the empty composition ().
class OpResult {
public:
    OpResult(WeakComposition value) : value_(std::move(value)) {}
    static OpResult zero() { return OpResult(); }

    bool is_zero() const { return !value_.has_value(); }
    explicit operator bool() const { return value_.has_value(); }
    const WeakComposition& value() const;

    bool operator==(const OpResult&) const = default;

private:
    OpResult() = default;
    std::optional<WeakComposition> value_;
};

Composition flatten(const WeakComposition& w);

long size(const WeakComposition& w);
long size(const Composition& c);

/// Maximum part; 0 for the empty or all-zero sequence.
Part largest_part(const WeakComposition& w);
Part largest_part(const Composition& c);

/// Ascending by size, then by length, then lexicographically on parts.
struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const;
    bool operator()(const WeakComposition& a, const WeakComposition& b) const;
};

std::strong_ordering canonical_compare(std::span<const Part> a, std::span<const Part> b);

/// All compositions of size exactly n, in canonical order.
std::vector<Composition> enumerate_compositions(int n);

/// All compositions of size at most n, in canonical order.
std::vector<Composition> enumerate_compositions_upto(int n);

/// All sequences of length <= max_len with parts in [0, max_part], ordered by
/// length then lexicographically.
std::vector<WeakComposition> enumerate_weak(int max_part, int max_len);

/// "(2, 1, 3)", "()" and "0" for Zero.
std::string to_string(const WeakComposition& w);
std::string to_string(const Composition& c);
std::string to_string(const OpResult& r);

/// Compact form "213" used for short listings (parts > 9 separated by dots).
std::string compact_string(std::span<const Part> parts);

/// Parses "2,1,3" or "empty" (also "" and "()").
Composition parse_composition(std::string_view text);
WeakComposition parse_weak_composition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const WeakComposition& w);
std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const OpResult& r);

}  // namespace compdual
