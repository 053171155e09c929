#pragma once

// Exhaustive checks of the operator relations and the dual graded / dual
// filtered identities over bounded universes.
//
// Relation checks compare OpResult values strictly (weak compositions part by
// part, zeros included). Theorem checks compare FormalSums, i.e. at the level
// of flattened compositions.

#include "compdual/composition.hpp"
#include "compdual/formal_sum.hpp"
#include "compdual/operators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace compdual {

struct Counterexample {
    std::string input;
    std::vector<int> indices;
    std::string lhs_word;
    std::string rhs_word;
    std::string lhs_value;
    std::string rhs_value;
    std::string trace;
};

struct RelationCheck {
    std::string name;
    std::string statement;
    std::string universe;
    std::size_t instances = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
    double seconds = 0.0;
};

enum class Relation {
    AppendShift,        ///< a_i = d_{i+1} a_{i+1}, i >= 0
    AppendChain,        ///< d_j d_{j+1} ... d_i a_i = a_{j-1}, i >= j >= 1
    RemoveAppend,       ///< d_i a_j = a_j d_i, i != j
    RemoveFar,          ///< d_i d_j = d_j d_i, |i - j| >= 2
    RemoveBraidLower,   ///< d_i^2 d_{i+1} = d_i d_{i+1} d_i
    RemoveBraidUpper,   ///< d_i d_{i+1}^2 = d_{i+1} d_i d_{i+1}
    JdtRemove,          ///< u_i d_j = d_j u_i, i != j
    JdtRemoveShift,     ///< u_i d_i = d_{i+1} u_{i+1}
    BoxAddRemove,       ///< t_i d_j = d_j t_i, i != j
};

const std::vector<Relation>& all_relations();
std::string relation_name(Relation r);
std::string relation_statement(Relation r);
Relation relation_from_name(const std::string& name);

struct UniverseBounds {
    int max_part = 6;
    int max_len = 5;
    int max_index = 8;
};

/// Strict weak-composition equality of both sides over every weak
/// composition in enumerate_weak(max_part, max_len) and every admissible index
/// tuple with entries <= max_index.
RelationCheck verify_relation(Relation r, const UniverseBounds& bounds = {});

/// All nine relations; results are in all_relations() order whatever the
/// scheduling.
std::vector<RelationCheck> verify_all_relations(const UniverseBounds& bounds = {});

enum class ZeroCase {
    OneBoth,        ///< i = 1, alpha has a part 1
    OneNeither,     ///< i = 1, no part 1
    Both,           ///< i >= 2, parts i and i-1
    OnlyI,          ///< i >= 2, part i, no part i-1
    OnlyIMinusOne,  ///< i >= 2, part i-1, no part i
    Neither,        ///< i >= 2, neither
};

ZeroCase classify_zero_case(int i, const WeakComposition& w);
std::string to_string(ZeroCase c);

/// Case-by-case conclusions for d_i t_i versus t_i d_i, plus the closing
/// claim that the two agree whenever both are nonzero.
RelationCheck verify_zero_contribution(const UniverseBounds& bounds = {});

/// For i > largest_part + 1: u_i, t_i are Zero; for i > largest_part: d_i is
/// Zero. Also that d_I with an index above largest_part is Zero.
RelationCheck verify_index_inertness(const UniverseBounds& bounds = {});

enum class DualPair { RcQc, LcQc, RcQct, LcQct };
std::string to_string(DualPair p);
DualPair dual_pair_from_string(const std::string& s);
bool is_filtered(DualPair p);

/// DU - UD = Id on every composition of size <= max_size (graded pairs).
RelationCheck verify_dual_graded(DualPair pair, int max_size);
/// D~U - UD~ = D~ + Id on every composition of size <= max_size.
RelationCheck verify_dual_filtered(DualPair pair, int max_size);
RelationCheck verify_dual(DualPair pair, int max_size);

/// DU - UD computed on sums equals d_1 u_1 applied pointwise.
RelationCheck verify_commutator_is_d1u1(int max_size);

std::string describe_universe(const UniverseBounds& bounds);

}  // namespace compdual
