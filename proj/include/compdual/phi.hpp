#pragma once

// The bijection Phi : Y -> Z (inverse Psi) between words t_i d_I and d_I t_i
// relative to a fixed composition alpha, which cancels the commutator terms
// for the left composition poset.
//
//   X = { d_I t_i : i in I, d_I t_i(alpha) != 0 }
//   Y = { t_i d_I : i in I, t_i d_I(alpha) != 0 }
//   Z = { d_I t_i in X : i <= m }            m = largest part of alpha
//   P = { d_i t_i != 0 },  Q = { t_i d_i != 0 }

#include "compdual/composition.hpp"
#include "compdual/formal_sum.hpp"
#include "compdual/operators.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace compdual {

enum class WordSide {
    Left,   ///< t_i d_I
    Right,  ///< d_I t_i
};

/// A word t_i d_I or d_I t_i with i in I, compared structurally.
class TWord {
public:
    TWord(WordSide side, IndexSet set, int i);

    WordSide side() const { return side_; }
    const IndexSet& set() const { return set_; }
    int index() const { return index_; }
    IndexSet lower() const { return set_.below(index_); }  ///< A
    IndexSet upper() const { return set_.above(index_); }  ///< B

    OperatorWord word() const;
    OpResult evaluate(const Composition& alpha) const;

    auto operator<=>(const TWord&) const = default;

private:
    WordSide side_;
    IndexSet set_;
    int index_;
};

std::string to_string(const TWord& w);

struct WordSets {
    Composition alpha;
    int index_bound = 0;
    std::set<TWord> X, Y, Z, P, Q;
};

/// I ranges over nonempty subsets of [1..index_bound].
WordSets build_word_sets(const Composition& alpha, int index_bound);
/// index_bound = largest_part(alpha) + 1.
WordSets build_word_sets(const Composition& alpha);

/// Throws std::invalid_argument unless w is in Y for alpha.
TWord phi(const TWord& w, const Composition& alpha);
/// Throws std::invalid_argument unless w is in Z for alpha.
TWord psi(const TWord& w, const Composition& alpha);

enum class PhiCase {
    IndexOne,        ///< i = 1: equal as weak compositions
    NotSmallest,     ///< i >= 2, not the smallest part of d_B(alpha): equal
    Smallest,        ///< i >= 2, smallest part of d_B(alpha): Phi(w)(alpha) = (0, w(alpha))
};

PhiCase classify_phi_case(const TWord& w, const Composition& alpha);
std::string to_string(PhiCase c);

struct ClauseResult {
    std::string name;
    bool passed = true;
    std::string detail;  ///< first failure, empty on pass
};

struct PhiReport {
    Composition alpha;
    std::size_t x_size = 0, y_size = 0, z_size = 0, p_size = 0, q_size = 0;
    std::size_t case_counts[3] = {0, 0, 0};
    std::vector<ClauseResult> clauses;

    bool passed() const;
};

PhiReport verify_phi(const Composition& alpha);

struct PhiRow {
    TWord word;
    TWord image;
    OpResult word_value;
    OpResult image_value;
    PhiCase kind;
};

std::vector<PhiRow> phi_table(const Composition& alpha);

/// Sum of flatten(w(alpha)) over a word set.
FormalSum sum_over(const std::set<TWord>& words, const Composition& alpha);

}  // namespace compdual
