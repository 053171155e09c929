#include "compdual/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace compdual {

namespace {

void check_rank_bound(int max_rank)
{
    if (max_rank < 0 || max_rank > kMaxGraphRank)
        throw std::out_of_range("graph rank bound must lie in [0, " +
                                std::to_string(kMaxGraphRank) + "]");
}

const RankedGraph::Neighbours kNoNeighbours;

}  // namespace

std::string to_string(Flavor f)
{
    return f == Flavor::Graded ? "graded" : "strong-filtered";
}

Flavor flavor_from_string(const std::string& s)
{
    if (s == "graded")
        return Flavor::Graded;
    if (s == "strong-filtered")
        return Flavor::StrongFiltered;
    throw std::invalid_argument("unknown graph flavor '" + s + "'");
}

RankedGraph::RankedGraph(Flavor flavor, int max_rank, const std::vector<Edge>& edges)
    : flavor_(flavor), max_rank_(max_rank)
{
    check_rank_bound(max_rank);
    vertices_ = enumerate_compositions_upto(max_rank);
    for (const auto& e : edges)
        add_edge(e.from, e.to, e.mult);
}

std::vector<Composition> RankedGraph::vertices_of_rank(int rank) const
{
    std::vector<Composition> out;
    std::copy_if(vertices_.begin(), vertices_.end(), std::back_inserter(out),
                 [rank](const Composition& c) { return size(c) == rank; });
    return out;
}

bool RankedGraph::has_vertex(const Composition& c) const
{
    return size(c) <= max_rank_;
}

void RankedGraph::add_edge(const Composition& from, const Composition& to, long mult)
{
    if (mult < 1)
        throw std::invalid_argument("edge multiplicity must be positive");
    if (!has_vertex(from) || !has_vertex(to))
        throw std::out_of_range("edge " + to_string(from) + " -> " + to_string(to) +
                                " leaves the vertex set");
    const long gap = size(to) - size(from);
    if (flavor_ == Flavor::Graded ? gap != 1 : gap <= 0)
        throw std::invalid_argument("edge " + to_string(from) + " -> " + to_string(to) +
                                    " violates the " + compdual::to_string(flavor_) + " rank law");
    auto& slot = up_[from][to];
    if (slot == 0)
        ++edge_count_;
    slot += mult;
    down_[to][from] += mult;
}

std::vector<Edge> RankedGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [from, targets] : up_)
        for (const auto& [to, mult] : targets)
            out.push_back({from, to, mult});
    return out;
}

long RankedGraph::multiplicity(const Composition& from, const Composition& to) const
{
    auto it = up_.find(from);
    if (it == up_.end())
        return 0;
    auto jt = it->second.find(to);
    return jt == it->second.end() ? 0 : jt->second;
}

const RankedGraph::Neighbours& RankedGraph::above(const Composition& c) const
{
    auto it = up_.find(c);
    return it == up_.end() ? kNoNeighbours : it->second;
}

const RankedGraph::Neighbours& RankedGraph::below(const Composition& c) const
{
    auto it = down_.find(c);
    return it == down_.end() ? kNoNeighbours : it->second;
}

bool RankedGraph::operator==(const RankedGraph& other) const
{
    return flavor_ == other.flavor_ && max_rank_ == other.max_rank_ && up_ == other.up_;
}

RankedGraph build_Rc(int max_rank)
{
    RankedGraph g(Flavor::Graded, max_rank);
    for (const auto& beta : g.vertices()) {
        if (size(beta) >= max_rank)
            break;
        auto w = beta.as_weak();
        for (int i = 1; i <= largest_part(beta) + 1; ++i)
            if (auto r = jdt_add(i, w))
                g.add_edge(beta, flatten(r.value()));
    }
    return g;
}

RankedGraph build_Lc(int max_rank)
{
    RankedGraph g(Flavor::Graded, max_rank);
    for (const auto& beta : g.vertices()) {
        if (size(beta) >= max_rank)
            break;
        auto w = beta.as_weak();
        for (int i = 1; i <= largest_part(beta) + 1; ++i)
            if (auto r = box_add(i, w))
                g.add_edge(beta, flatten(r.value()));
    }
    return g;
}

RankedGraph build_Qc(int max_rank)
{
    RankedGraph g(Flavor::Graded, max_rank);
    for (const auto& alpha : g.vertices()) {
        auto w = alpha.as_weak();
        for (int i = 1; i <= largest_part(alpha); ++i)
            if (auto r = box_remove(i, w))
                g.add_edge(flatten(r.value()), alpha);
    }
    return g;
}

RankedGraph build_Qct(int max_rank)
{
    RankedGraph g(Flavor::StrongFiltered, max_rank);
    for (const auto& alpha : g.vertices()) {
        auto w = alpha.as_weak();
        const int m = largest_part(alpha);
        for (unsigned long mask = 1; mask < (1UL << m); ++mask)
            if (auto r = box_remove_set(IndexSet::from_mask(mask), w))
                g.add_edge(flatten(r.value()), alpha);
    }
    return g;
}

std::string to_string(GraphName g)
{
    switch (g) {
    case GraphName::Rc:
        return "rc";
    case GraphName::Lc:
        return "lc";
    case GraphName::Qc:
        return "qc";
    case GraphName::Qct:
        return "qct";
    }
    return "?";
}

GraphName graph_name_from_string(const std::string& s)
{
    if (s == "rc")
        return GraphName::Rc;
    if (s == "lc")
        return GraphName::Lc;
    if (s == "qc")
        return GraphName::Qc;
    if (s == "qct")
        return GraphName::Qct;
    throw std::invalid_argument("unknown graph '" + s + "' (expected rc, lc, qc or qct)");
}

RankedGraph build_graph(GraphName g, int max_rank)
{
    switch (g) {
    case GraphName::Rc:
        return build_Rc(max_rank);
    case GraphName::Lc:
        return build_Lc(max_rank);
    case GraphName::Qc:
        return build_Qc(max_rank);
    case GraphName::Qct:
        return build_Qct(max_rank);
    }
    throw std::logic_error("unknown graph");
}

FormalSum graph_up(const RankedGraph& g, const FormalSum& s)
{
    if (g.flavor() != Flavor::Graded)
        throw std::invalid_argument("graph_up: up moves in a strong filtered graph are unbounded in rank");
    FormalSum out;
    for (const auto& [x, k] : s.terms()) {
        if (size(x) + 1 > g.max_rank())
            throw std::out_of_range("graph_up: " + to_string(x) + " moves past max_rank " +
                                    std::to_string(g.max_rank()));
        for (const auto& [y, mult] : g.above(x))
            out.add(y, k * mult);
    }
    return out;
}

FormalSum graph_down(const RankedGraph& g, const FormalSum& s)
{
    FormalSum out;
    for (const auto& [y, k] : s.terms()) {
        if (size(y) > g.max_rank())
            throw std::out_of_range("graph_down: " + to_string(y) + " exceeds max_rank " +
                                    std::to_string(g.max_rank()));
        for (const auto& [x, mult] : g.below(y))
            out.add(x, k * mult);
    }
    return out;
}

std::vector<Edge> rank_law_violations(const RankedGraph& g)
{
    std::vector<Edge> out;
    for (const auto& e : g.edges()) {
        const long gap = size(e.to) - size(e.from);
        if (g.flavor() == Flavor::Graded ? gap != 1 : gap <= 0)
            out.push_back(e);
    }
    return out;
}

std::vector<Composition> unreachable_vertices(const RankedGraph& g)
{
    std::vector<Composition> out;
    for (const auto& v : g.vertices())
        if (size(v) > 0 && g.below(v).empty())
            out.push_back(v);
    return out;
}

std::vector<IndexSet> filtered_witnesses(const Composition& alpha, const Composition& beta)
{
    std::vector<IndexSet> out;
    const int m = largest_part(alpha);
    auto w = alpha.as_weak();
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
        auto set = IndexSet::from_mask(mask);
        auto r = box_remove_set(set, w);
        if (r && flatten(r.value()) == beta)
            out.push_back(set);
    }
    return out;
}

bool NonTransitivityReport::passed() const
{
    return !step1.is_zero() && flatten(step1.value()) == Composition{4, 1, 3} &&
           !step2.is_zero() && flatten(step2.value()) == Composition{3, 3} &&
           !direct_witness.has_value() && graded_path_exists && singletons_match_covers;
}

NonTransitivityReport check_nontransitivity()
{
    const Composition top{4, 1, 4, 1};
    const Composition middle{4, 1, 3};
    const Composition bottom{3, 3};
    const IndexSet pair{1, 4};

    NonTransitivityReport report;
    report.step1 = box_remove_set(pair, top.as_weak());
    report.step2 = box_remove_set(pair, middle.as_weak());

    // Exhaustive over all nonempty I within [1..4]; larger indices annihilate.
    const int m = largest_part(top);
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
        ++report.subsets_searched;
        auto set = IndexSet::from_mask(mask);
        auto r = box_remove_set(set, top.as_weak());
        if (r && flatten(r.value()) == bottom && !report.direct_witness)
            report.direct_witness = set;
    }

    // Chains of single-box covers do compose.
    const auto qc = build_Qc(static_cast<int>(size(top)));
    std::set<Composition, CanonicalLess> seen{top};
    std::deque<Composition> frontier{top};
    while (!frontier.empty()) {
        auto v = frontier.front();
        frontier.pop_front();
        if (v == bottom) {
            report.graded_path_exists = true;
            break;
        }
        for (const auto& [x, mult] : qc.below(v))
            if (seen.insert(x).second)
                frontier.push_back(x);
    }

    // d_{{i}} = d_i, so singleton-set edges are exactly the graded covers.
    const auto qct = build_Qct(static_cast<int>(size(middle)));
    report.singletons_match_covers = true;
    for (const auto& alpha : qct.vertices()) {
        for (int i = 1; i <= largest_part(alpha); ++i) {
            auto via_set = box_remove_set(IndexSet{i}, alpha.as_weak());
            auto via_cover = box_remove(i, alpha.as_weak());
            if (via_set != via_cover ||
                (via_set && qct.multiplicity(flatten(via_set.value()), alpha) == 0))
                report.singletons_match_covers = false;
        }
    }
    return report;
}

MultiplicitySurvey survey_filtered_multiplicities(int max_size)
{
    MultiplicitySurvey survey;
    survey.max_size = max_size;
    const auto g = build_Qct(max_size);
    for (const auto& e : g.edges()) {
        ++survey.edges;
        survey.max_multiplicity = std::max(survey.max_multiplicity, e.mult);
        if (e.mult > 1) {
            ++survey.edges_with_multiplicity;
            if (!survey.first_example) {
                survey.first_example = e;
                survey.first_example_witnesses = filtered_witnesses(e.to, e.from);
            }
        }
    }
    return survey;
}

}  // namespace compdual
