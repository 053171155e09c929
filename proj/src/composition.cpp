#include "compdual/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace compdual {

namespace {

std::string join_parts(std::span<const Part> parts)
{
    std::string out = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k != 0)
            out += ", ";
        out += std::to_string(parts[k]);
    }
    out += ")";
    return out;
}

std::vector<Part> parse_parts(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    if (text.empty() || text == "empty")
        return {};

    std::vector<Part> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        Part value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed composition part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return parts;
}

}  // namespace

WeakComposition::WeakComposition(std::vector<Part> parts) : parts_(std::move(parts))
{
    for (Part p : parts_)
        if (p < 0)
            throw std::invalid_argument("weak composition parts must be nonnegative");
}

WeakComposition::WeakComposition(std::initializer_list<Part> parts)
    : WeakComposition(std::vector<Part>(parts))
{
}

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts))
{
    for (Part p : parts_)
        if (p < 1)
            throw std::invalid_argument("composition parts must be positive");
}

Composition::Composition(std::initializer_list<Part> parts) : Composition(std::vector<Part>(parts)) {}

const WeakComposition& OpResult::value() const
{
    if (!value_)
        throw std::logic_error("value() called on Zero");
    return *value_;
}

Composition flatten(const WeakComposition& w)
{
    std::vector<Part> out;
    out.reserve(w.length());
    std::copy_if(w.parts().begin(), w.parts().end(), std::back_inserter(out),
                 [](Part p) { return p != 0; });
    return Composition(std::move(out));
}

long size(const WeakComposition& w)
{
    return std::accumulate(w.parts().begin(), w.parts().end(), 0L);
}

long size(const Composition& c)
{
    return std::accumulate(c.parts().begin(), c.parts().end(), 0L);
}

Part largest_part(const WeakComposition& w)
{
    return w.empty() ? 0 : *std::max_element(w.parts().begin(), w.parts().end());
}

Part largest_part(const Composition& c)
{
    return c.empty() ? 0 : *std::max_element(c.parts().begin(), c.parts().end());
}

std::strong_ordering canonical_compare(std::span<const Part> a, std::span<const Part> b)
{
    long sa = std::accumulate(a.begin(), a.end(), 0L);
    long sb = std::accumulate(b.begin(), b.end(), 0L);
    if (auto c = sa <=> sb; c != 0)
        return c;
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool CanonicalLess::operator()(const Composition& a, const Composition& b) const
{
    return canonical_compare(a.parts(), b.parts()) < 0;
}

bool CanonicalLess::operator()(const WeakComposition& a, const WeakComposition& b) const
{
    return canonical_compare(a.parts(), b.parts()) < 0;
}

std::vector<Composition> enumerate_compositions(int n)
{
    if (n < 0)
        throw std::invalid_argument("composition size must be nonnegative");
    if (n == 0)
        return {Composition{}};
    if (n > 30)
        throw std::out_of_range("composition size too large to enumerate");

    // Bit k of mask set <=> a cut after the (k+1)-th box.
    std::vector<Composition> out;
    const unsigned long count = 1UL << (n - 1);
    out.reserve(count);
    for (unsigned long mask = 0; mask < count; ++mask) {
        std::vector<Part> parts;
        Part run = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (mask & (1UL << k)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<Composition> enumerate_compositions_upto(int n)
{
    std::vector<Composition> out;
    for (int k = 0; k <= n; ++k) {
        auto level = enumerate_compositions(k);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

std::vector<WeakComposition> enumerate_weak(int max_part, int max_len)
{
    if (max_part < 0 || max_len < 0)
        throw std::invalid_argument("enumerate_weak bounds must be nonnegative");

    std::vector<WeakComposition> out;
    for (int len = 0; len <= max_len; ++len) {
        std::vector<Part> parts(len, 0);
        while (true) {
            out.emplace_back(parts);
            // Odometer increment, last position fastest.
            int pos = len - 1;
            while (pos >= 0 && parts[pos] == max_part) {
                parts[pos] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++parts[pos];
        }
    }
    return out;
}

std::string to_string(const WeakComposition& w) { return join_parts(w.parts()); }
std::string to_string(const Composition& c) { return join_parts(c.parts()); }
std::string to_string(const OpResult& r) { return r.is_zero() ? "0" : to_string(r.value()); }

std::string compact_string(std::span<const Part> parts)
{
    if (parts.empty())
        return "()";
    bool wide = std::any_of(parts.begin(), parts.end(), [](Part p) { return p > 9; });
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (wide && k != 0)
            out += '.';
        out += std::to_string(parts[k]);
    }
    return out;
}

Composition parse_composition(std::string_view text) { return Composition(parse_parts(text)); }

WeakComposition parse_weak_composition(std::string_view text)
{
    return WeakComposition(parse_parts(text));
}

std::ostream& operator<<(std::ostream& os, const WeakComposition& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const OpResult& r) { return os << to_string(r); }

}  // namespace compdual
