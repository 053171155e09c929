#pragma once

// Rank-bounded builds of the right/left composition posets (covers u_i, t_i),
// the quasisymmetric composition poset (covers d_i) and the strong filtered
// graph whose edges are multi-box removals d_I.

#include "compdual/composition.hpp"
#include "compdual/formal_sum.hpp"
#include "compdual/operators.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace compdual {

inline constexpr int kMaxGraphRank = 12;

enum class Flavor { Graded, StrongFiltered };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

struct Edge {
    Composition from;  ///< lower rank
    Composition to;    ///< higher rank
    long mult = 1;

    bool operator==(const Edge&) const = default;
};

class RankedGraph {
public:
    using Neighbours = std::map<Composition, long, CanonicalLess>;

    /// Vertex set is every composition of size <= max_rank. Throws if an edge
    /// violates the flavor's rank law or leaves the vertex set.
    RankedGraph(Flavor flavor, int max_rank, const std::vector<Edge>& edges = {});

    Flavor flavor() const { return flavor_; }
    int max_rank() const { return max_rank_; }

    const std::vector<Composition>& vertices() const { return vertices_; }
    std::vector<Composition> vertices_of_rank(int rank) const;
    bool has_vertex(const Composition& c) const;

    /// Edges ordered canonically by (from, to).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const { return edge_count_; }
    long multiplicity(const Composition& from, const Composition& to) const;

    const Neighbours& above(const Composition& c) const;
    const Neighbours& below(const Composition& c) const;

    void add_edge(const Composition& from, const Composition& to, long mult = 1);

    bool operator==(const RankedGraph& other) const;

private:
    Flavor flavor_;
    int max_rank_;
    std::vector<Composition> vertices_;
    std::map<Composition, Neighbours, CanonicalLess> up_;
    std::map<Composition, Neighbours, CanonicalLess> down_;
    std::size_t edge_count_ = 0;
};

RankedGraph build_Rc(int max_rank);
RankedGraph build_Lc(int max_rank);
RankedGraph build_Qc(int max_rank);
RankedGraph build_Qct(int max_rank);

enum class GraphName { Rc, Lc, Qc, Qct };
std::string to_string(GraphName g);
GraphName graph_name_from_string(const std::string& s);
RankedGraph build_graph(GraphName g, int max_rank);

/// U(x) = sum_y m(x, y) y. Throws std::out_of_range if a term would move past
/// max_rank, std::invalid_argument for strong filtered graphs (unbounded up).
FormalSum graph_up(const RankedGraph& g, const FormalSum& s);
/// D(y) = sum_x m(x, y) x. Throws std::out_of_range for terms above max_rank.
FormalSum graph_down(const RankedGraph& g, const FormalSum& s);

/// Edges whose rank difference breaks the flavor's law (empty when sound).
std::vector<Edge> rank_law_violations(const RankedGraph& g);
/// Vertices of positive rank with no incoming edge.
std::vector<Composition> unreachable_vertices(const RankedGraph& g);

struct NonTransitivityReport {
    OpResult step1 = OpResult::zero();  ///< d_{1,4}((4,1,4,1))
    OpResult step2 = OpResult::zero();  ///< d_{1,4}(step1)
    std::optional<IndexSet> direct_witness;
    std::size_t subsets_searched = 0;
    bool graded_path_exists = false;  ///< (3,3) below (4,1,4,1) in the graded poset
    bool singletons_match_covers = false;

    bool passed() const;
};

NonTransitivityReport check_nontransitivity();

/// Witnessing sets I with flatten(d_I(alpha)) == beta, I nonempty, I within
/// [1..largest_part(alpha)].
std::vector<IndexSet> filtered_witnesses(const Composition& alpha, const Composition& beta);

struct MultiplicitySurvey {
    int max_size = 0;
    std::size_t edges = 0;
    std::size_t edges_with_multiplicity = 0;
    long max_multiplicity = 0;
    std::optional<Edge> first_example;
    std::vector<IndexSet> first_example_witnesses;
};

MultiplicitySurvey survey_filtered_multiplicities(int max_size);

}  // namespace compdual
