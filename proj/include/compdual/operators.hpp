#pragma once

// The four operator families on weak compositions:
//
//   box_remove  d_i   subtract 1 from the rightmost part equal to i
//   append      a_i   append a part i (a_0 appends a literal 0)
//   jdt_add     u_i   a_i d_{[i-1]}
//   box_add     t_i   prepend 1 (i = 1) or increment the leftmost part equal to i-1
//
// plus the set-indexed products d_I, u_I and a generic word evaluator.

#include "compdual/composition.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace compdual {

/// Finite strictly ascending set of positive integers.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elements);
    IndexSet(std::initializer_list<int> elements);

    /// {1, ..., n}; empty for n = 0.
    static IndexSet range(int n);
    /// Subset of {1, ..., n} selected by the bits of mask (bit k <=> k+1).
    static IndexSet from_mask(unsigned long mask);

    const std::vector<int>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }
    bool contains(int i) const;
    int max() const { return elements_.empty() ? 0 : elements_.back(); }

    IndexSet with(int i) const;
    IndexSet without(int i) const;
    IndexSet below(int i) const;  ///< elements < i
    IndexSet above(int i) const;  ///< elements > i
    /// I - 1: subtract 1 from every element and drop the resulting 0.
    IndexSet shifted_down() const;

    auto operator<=>(const IndexSet&) const = default;

private:
    std::vector<int> elements_;
};

std::string to_string(const IndexSet& s);

OpResult box_remove(int i, const WeakComposition& w);
OpResult box_remove_set(const IndexSet& set, const WeakComposition& w);
WeakComposition append(int i, const WeakComposition& w);
OpResult jdt_add(int i, const WeakComposition& w);
OpResult jdt_add_set(const IndexSet& set, const WeakComposition& w);
OpResult box_add(int i, const WeakComposition& w);

OpResult box_remove(int i, const OpResult& r);
OpResult box_remove_set(const IndexSet& set, const OpResult& r);
OpResult append(int i, const OpResult& r);
OpResult jdt_add(int i, const OpResult& r);
OpResult box_add(int i, const OpResult& r);

enum class OpKind { BoxRemove, Append, JdtAdd, BoxAdd };

struct Atom {
    OpKind kind;
    int index;

    bool operator==(const Atom&) const = default;
};

OpResult apply(const Atom& atom, const WeakComposition& w);

/// Operator word; letters()[0] is the leftmost letter and is applied last.
class OperatorWord {
public:
    OperatorWord() = default;
    explicit OperatorWord(std::vector<Atom> letters);
    OperatorWord(std::initializer_list<Atom> letters);

    const std::vector<Atom>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    /// this * rhs, i.e. rhs applied first.
    OperatorWord then_after(const OperatorWord& rhs) const;

    bool operator==(const OperatorWord&) const = default;

private:
    std::vector<Atom> letters_;
};

inline Atom d(int i) { return {OpKind::BoxRemove, i}; }
inline Atom a(int i) { return {OpKind::Append, i}; }
inline Atom u(int i) { return {OpKind::JdtAdd, i}; }
inline Atom t(int i) { return {OpKind::BoxAdd, i}; }

/// d_I as a word: d_{i_1} d_{i_2} ... d_{i_k}.
OperatorWord box_remove_word(const IndexSet& set);

OpResult eval_word(const OperatorWord& word, const WeakComposition& w);
OpResult eval_word(const OperatorWord& word, const OpResult& r);

char op_letter(OpKind kind);
OpKind op_kind_from_letter(char c);
std::string to_string(const Atom& atom);
std::string to_string(const OperatorWord& word);

}  // namespace compdual
