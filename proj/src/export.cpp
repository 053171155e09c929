#include "compdual/export.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace compdual {

Json to_json(const Composition& c) { return Json(std::vector<Part>(c.parts().begin(), c.parts().end())); }
Json to_json(const WeakComposition& w) { return Json(std::vector<Part>(w.parts().begin(), w.parts().end())); }
Json to_json(const OpResult& r) { return r.is_zero() ? Json(nullptr) : to_json(r.value()); }

Json to_json(const OperatorWord& word)
{
    Json out = Json::array();
    for (const auto& atom : word.letters())
        out.push_back({{"op", std::string(1, op_letter(atom.kind))}, {"i", atom.index}});
    return out;
}

Json to_json(const FormalSum& s)
{
    Json out = Json::array();
    for (const auto& [c, k] : s.terms()) {
        Json coeff;
        if (k >= std::numeric_limits<long long>::min() && k <= std::numeric_limits<long long>::max())
            coeff = k.convert_to<long long>();
        else
            coeff = k.str();
        out.push_back({{"comp", to_json(c)}, {"coeff", coeff}});
    }
    return out;
}

Composition composition_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("composition must be a JSON array");
    std::vector<Part> parts;
    for (const auto& p : j) {
        if (!p.is_number_integer())
            throw std::invalid_argument("composition parts must be integers");
        parts.push_back(p.get<Part>());
    }
    return Composition(std::move(parts));
}

OperatorWord word_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("operator word must be a JSON array");
    std::vector<Atom> letters;
    for (const auto& atom : j) {
        const auto op = atom.at("op").get<std::string>();
        if (op.size() != 1)
            throw std::invalid_argument("operator letter must be one of d, a, u, t");
        letters.push_back({op_kind_from_letter(op[0]), atom.at("i").get<int>()});
    }
    return OperatorWord(std::move(letters));
}

FormalSum formal_sum_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("formal sum must be a JSON array");
    FormalSum out;
    for (const auto& term : j) {
        const auto& coeff = term.at("coeff");
        Coeff k = coeff.is_string() ? Coeff(coeff.get<std::string>()) : Coeff(coeff.get<long long>());
        out.add(composition_from_json(term.at("comp")), k);
    }
    return out;
}

ExportFormat export_format_from_string(const std::string& s)
{
    if (s == "dot")
        return ExportFormat::Dot;
    if (s == "tikz")
        return ExportFormat::Tikz;
    if (s == "json")
        return ExportFormat::Json;
    throw std::invalid_argument("unsupported format '" + s + "' (expected dot, tikz or json)");
}

Json graph_to_json(const RankedGraph& g, const ExportOptions& opts)
{
    Json vertices = Json::array();
    for (const auto& v : g.vertices())
        vertices.push_back(to_json(v));
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"from", to_json(e.from)}, {"to", to_json(e.to)},
                         {"mult", opts.simple_edges ? 1L : e.mult}});
    Json out;
    out["flavor"] = to_string(g.flavor());
    out["max_rank"] = g.max_rank();
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

RankedGraph graph_from_json(const Json& j)
{
    try {
        const auto flavor = flavor_from_string(j.at("flavor").get<std::string>());
        const int max_rank = j.at("max_rank").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back({composition_from_json(e.at("from")), composition_from_json(e.at("to")),
                             e.value("mult", 1L)});
        RankedGraph g(flavor, max_rank, edges);

        std::vector<Composition> listed;
        for (const auto& v : j.at("vertices"))
            listed.push_back(composition_from_json(v));
        if (listed != g.vertices())
            throw std::invalid_argument("vertex list is not every composition of size <= max_rank in canonical order");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

namespace {

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::map<Composition, std::size_t, CanonicalLess> vertex_ids(const RankedGraph& g)
{
    std::map<Composition, std::size_t, CanonicalLess> ids;
    for (const auto& v : g.vertices())
        ids.emplace(v, ids.size());
    return ids;
}

std::string export_dot(const RankedGraph& g, const ExportOptions& opts)
{
    const auto ids = vertex_ids(g);
    std::ostringstream os;
    os << "digraph \"" << to_string(g.flavor()) << "\" {\n";
    os << "  rankdir=BT;\n";
    for (const auto& v : g.vertices())
        os << "  n" << ids.at(v) << " [label=\"" << dot_escape(to_string(v)) << "\"];\n";
    for (const auto& e : g.edges()) {
        const long mult = opts.simple_edges ? 1 : e.mult;
        const auto line = "  n" + std::to_string(ids.at(e.from)) + " -> n" + std::to_string(ids.at(e.to));
        if (opts.label_multiplicity) {
            os << line;
            if (mult > 1)
                os << " [label=\"" << mult << "\"]";
            os << ";\n";
        } else {
            for (long k = 0; k < mult; ++k)
                os << line << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_tikz(const RankedGraph& g, const ExportOptions& opts)
{
    constexpr double kLayerGap = 51.0;
    constexpr double kSiblingGap = 64.0;

    const auto ids = vertex_ids(g);
    std::size_t widest = 1;
    for (int r = 0; r <= g.max_rank(); ++r)
        widest = std::max(widest, g.vertices_of_rank(r).size());
    const double centre = (static_cast<double>(widest) - 1.0) * kSiblingGap / 2.0 + 10.0;

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "\\begin{tikzpicture}[>=latex,line join=bevel, scale=0.75, every node/.style={font=\\small}]\n";
    for (int r = 0; r <= g.max_rank(); ++r) {
        const auto level = g.vertices_of_rank(r);
        const double left = centre - (static_cast<double>(level.size()) - 1.0) * kSiblingGap / 2.0;
        for (std::size_t k = 0; k < level.size(); ++k) {
            os << "  \\node (node_" << ids.at(level[k]) << ") at (" << left + kSiblingGap * k << "bp,"
               << 7.0 + kLayerGap * r << "bp) [draw,draw=none] {${" << to_string(level[k]) << "}$};\n";
        }
    }
    for (const auto& e : g.edges()) {
        os << "  \\draw [black] (node_" << ids.at(e.from) << ") to ";
        if (!opts.simple_edges && e.mult > 1)
            os << "node[midway,right] {" << e.mult << "} ";
        os << "(node_" << ids.at(e.to) << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace

std::string export_graph(const RankedGraph& g, ExportFormat format, const ExportOptions& opts)
{
    switch (format) {
    case ExportFormat::Dot:
        return export_dot(g, opts);
    case ExportFormat::Tikz:
        return export_tikz(g, opts);
    case ExportFormat::Json:
        return graph_to_json(g, opts).dump() + "\n";
    }
    throw std::invalid_argument("unsupported export format");
}

EdgeFixture fixture_from_json(const Json& j)
{
    try {
        EdgeFixture f;
        f.name = j.at("name").get<std::string>();
        f.max_rank = j.at("max_rank").get<int>();
        for (const auto& e : j.at("edges"))
            f.edges.emplace_back(composition_from_json(e.at("from")), composition_from_json(e.at("to")));
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed fixture: ") + e.what());
    }
}

EdgeFixture load_fixture(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open fixture " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("fixture " + path.string() + " is not valid JSON: " + e.what());
    }
    return fixture_from_json(j);
}

EdgeFixture load_fixture(const std::filesystem::path& dir, const std::string& name)
{
    return load_fixture(dir / (name + ".json"));
}

GraphName fixture_graph(const std::string& fixture_name)
{
    if (fixture_name == "Rc4")
        return GraphName::Rc;
    if (fixture_name == "Lc4")
        return GraphName::Lc;
    if (fixture_name == "Qc4")
        return GraphName::Qc;
    throw std::invalid_argument("unknown fixture '" + fixture_name + "'");
}

FixtureDiff compare_fixture(const RankedGraph& g, const EdgeFixture& f)
{
    using Pair = std::pair<Composition, Composition>;
    auto less = [](const Pair& x, const Pair& y) {
        if (auto c = canonical_compare(x.first.parts(), y.first.parts()); c != 0)
            return c < 0;
        return canonical_compare(x.second.parts(), y.second.parts()) < 0;
    };
    std::vector<Pair> built;
    for (const auto& e : g.edges())
        built.emplace_back(e.from, e.to);
    std::vector<Pair> expected = f.edges;
    std::sort(built.begin(), built.end(), less);
    std::sort(expected.begin(), expected.end(), less);
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

    FixtureDiff diff;
    std::set_difference(expected.begin(), expected.end(), built.begin(), built.end(),
                        std::back_inserter(diff.missing), less);
    std::set_difference(built.begin(), built.end(), expected.begin(), expected.end(),
                        std::back_inserter(diff.extra), less);
    return diff;
}

}  // namespace compdual
