#pragma once

// Graph serialization (JSON, DOT, TikZ) and comparison against the
// transcribed rank-4 reference edge lists.

#include "compdual/graph.hpp"
#include "compdual/json_io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace compdual {

enum class ExportFormat { Dot, Tikz, Json };

ExportFormat export_format_from_string(const std::string& s);

struct ExportOptions {
    /// Collapse multiplicities to plain edges.
    bool simple_edges = false;
    /// DOT only: one edge line with a "mult" label instead of repeated lines.
    bool label_multiplicity = false;
};

std::string export_graph(const RankedGraph& g, ExportFormat format, const ExportOptions& opts = {});

Json graph_to_json(const RankedGraph& g, const ExportOptions& opts = {});
/// Throws std::invalid_argument if the document is malformed or its vertex
/// list is not the full set of compositions up to max_rank.
RankedGraph graph_from_json(const Json& j);

struct EdgeFixture {
    std::string name;  ///< Rc4, Lc4, Qc4
    int max_rank = 4;
    std::vector<std::pair<Composition, Composition>> edges;
};

EdgeFixture fixture_from_json(const Json& j);
EdgeFixture load_fixture(const std::filesystem::path& path);
/// Loads <dir>/<name>.json.
EdgeFixture load_fixture(const std::filesystem::path& dir, const std::string& name);
GraphName fixture_graph(const std::string& fixture_name);

struct FixtureDiff {
    std::vector<std::pair<Composition, Composition>> missing;  ///< in fixture, not built
    std::vector<std::pair<Composition, Composition>> extra;    ///< built, not in fixture

    bool empty() const { return missing.empty() && extra.empty(); }
};

/// Symmetric difference of edge sets, multiplicities collapsed to presence.
FixtureDiff compare_fixture(const RankedGraph& g, const EdgeFixture& f);

}  // namespace compdual
