// compdual: build composition posets, export them, and replay or verify the
// operator relations and dual graph identities.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage or I/O error.

#include "compdual/export.hpp"
#include "compdual/golden.hpp"
#include "compdual/graph.hpp"
#include "compdual/phi.hpp"
#include "compdual/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace compdual;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int clamp_rank(int n, const char* flag)
{
    const int clamped = std::clamp(n, 0, kMaxGraphRank);
    if (clamped != n)
        std::cerr << "note: " << flag << " clamped to " << clamped << "\n";
    return clamped;
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

Json check_to_json(const RelationCheck& c)
{
    Json j{{"name", c.name},         {"statement", c.statement}, {"universe", c.universe},
           {"instances", c.instances}, {"passed", c.passed},     {"seconds", c.seconds}};
    if (c.counterexample) {
        const auto& x = *c.counterexample;
        j["counterexample"] = {{"input", x.input},         {"indices", x.indices},
                               {"lhs_word", x.lhs_word},   {"rhs_word", x.rhs_word},
                               {"lhs", x.lhs_value},       {"rhs", x.rhs_value},
                               {"trace", x.trace}};
    }
    return j;
}

void print_check(const RelationCheck& c)
{
    std::cout << (c.passed ? "PASS" : "FAIL") << ": " << c.name << "  " << c.statement << "  ["
              << c.instances << " instances over " << c.universe << ", " << std::fixed
              << std::setprecision(3) << c.seconds << " s]\n";
    if (c.counterexample) {
        const auto& x = *c.counterexample;
        std::cout << "  counterexample at " << x.input;
        if (!x.indices.empty()) {
            std::cout << " indices";
            for (int i : x.indices)
                std::cout << ' ' << i;
        }
        std::cout << "\n    " << x.lhs_word << " -> " << x.lhs_value << "\n    " << x.rhs_word << " -> "
                  << x.rhs_value << "\n    " << x.trace << "\n";
    }
}

int report_checks(const std::vector<RelationCheck>& checks, bool json)
{
    bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    if (json) {
        Json out = Json::array();
        for (const auto& c : checks)
            out.push_back(check_to_json(c));
        std::cout << Json{{"passed", ok}, {"checks", out}}.dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            print_check(c);
    }
    return ok ? 0 : kExitFail;
}

Json survey_to_json(const MultiplicitySurvey& s)
{
    Json j{{"max_size", s.max_size},
           {"edges", s.edges},
           {"edges_with_multiplicity", s.edges_with_multiplicity},
           {"max_multiplicity", s.max_multiplicity}};
    if (s.first_example) {
        Json witnesses = Json::array();
        for (const auto& w : s.first_example_witnesses)
            witnesses.push_back(w.elements());
        j["example"] = {{"from", to_json(s.first_example->from)},
                        {"to", to_json(s.first_example->to)},
                        {"mult", s.first_example->mult},
                        {"witnesses", witnesses}};
    }
    return j;
}

void print_survey(const MultiplicitySurvey& s)
{
    std::cout << "Q~_c multiplicity survey (sizes <= " << s.max_size << "): " << s.edges << " edges, "
              << s.edges_with_multiplicity << " with multiplicity > 1, max multiplicity "
              << s.max_multiplicity << "\n";
    if (s.first_example) {
        std::cout << "  e.g. " << s.first_example->from << " -> " << s.first_example->to << " via";
        for (const auto& w : s.first_example_witnesses)
            std::cout << ' ' << to_string(w);
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Operators on compositions, composition posets and dual graph verification"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    // build
    auto* build = app.add_subcommand("build", "Build a graph and print a summary or export it");
    std::string graph_name = "rc";
    int max_rank = 6;
    std::string format;
    std::string output;
    bool simple_edges = false;
    bool label_mult = false;
    bool survey = false;
    build->add_option("--graph", graph_name, "rc, lc, qc or qct")->capture_default_str();
    build->add_option("--max-rank", max_rank, "Rank bound, clamped to [0, 12]")->capture_default_str();
    build->add_option("--format", format, "dot, tikz or json (omit for a summary)");
    build->add_option("--output,-o", output, "Output file (default stdout)");
    build->add_flag("--simple-edges", simple_edges, "Collapse edge multiplicities");
    build->add_flag("--label-mult", label_mult, "DOT: label multiple edges instead of repeating them");
    build->add_flag("--survey", survey, "qct only: survey edges with multiplicity > 1");

    // export
    auto* exp = app.add_subcommand("export", "Export a built or previously exported graph");
    std::string input;
    std::string exp_format = "json";
    exp->add_option("--input,-i", input, "Graph JSON to re-export (instead of --graph)");
    exp->add_option("--graph", graph_name, "rc, lc, qc or qct")->capture_default_str();
    exp->add_option("--max-rank", max_rank, "Rank bound, clamped to [0, 12]")->capture_default_str();
    exp->add_option("--format", exp_format, "dot, tikz or json")->capture_default_str();
    exp->add_option("--output,-o", output, "Output file (default stdout)");
    exp->add_flag("--simple-edges", simple_edges, "Collapse edge multiplicities");
    exp->add_flag("--label-mult", label_mult, "DOT: label multiple edges instead of repeating them");

    // verify
    auto* verify = app.add_subcommand("verify", "Check DU - UD = Id or D~U - UD~ = D~ + Id");
    std::string pair = "all";
    int max_size = -1;
    verify->add_option("--pair", pair, "rc-qc, lc-qc, rc-qct, lc-qct or all")->capture_default_str();
    verify->add_option("--max-size", max_size, "Largest composition size (default 8 graded, 7 filtered)");

    // relations
    auto* relations = app.add_subcommand("relations", "Check the operator relations on weak compositions");
    std::string relation = "all";
    UniverseBounds bounds;
    relations->add_option("--relation", relation, "Relation name or all")->capture_default_str();
    relations->add_option("--max-part", bounds.max_part, "Largest part in the weak-composition universe")->capture_default_str();
    relations->add_option("--max-len", bounds.max_len, "Longest weak composition")->capture_default_str();
    relations->add_option("--max-index", bounds.max_index, "Largest operator index")->capture_default_str();

    // phi-table
    auto* phi_cmd = app.add_subcommand("phi-table", "Tabulate Phi on Y for a composition");
    std::string alpha_text;
    bool phi_verify = false;
    phi_cmd->add_option("--alpha", alpha_text, "Composition, e.g. 2,6,1,4 or empty")->required();
    phi_cmd->add_flag("--verify", phi_verify, "Also run every Phi property check");

    // examples
    auto* examples = app.add_subcommand("examples", "Replay every worked example");

    // compare-fixtures
    auto* compare = app.add_subcommand("compare-fixtures", "Compare rank-4 graphs with reference edge lists");
    std::string fixture_dir = COMPDUAL_FIXTURE_DIR;
    compare->add_option("--fixtures", fixture_dir, "Fixture directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        ExportOptions opts{simple_edges, label_mult};

        if (*build) {
            const auto g = build_graph(graph_name_from_string(graph_name), clamp_rank(max_rank, "--max-rank"));
            if (survey) {
                if (graph_name != "qct")
                    throw UsageError("--survey applies to --graph qct only");
                const auto s = survey_filtered_multiplicities(g.max_rank());
                if (json)
                    std::cout << survey_to_json(s).dump(2) << "\n";
                else
                    print_survey(s);
                return 0;
            }
            if (!format.empty()) {
                write_output(export_graph(g, export_format_from_string(format), opts), output);
                return 0;
            }
            const auto bad = rank_law_violations(g);
            const auto orphans = unreachable_vertices(g);
            if (json) {
                std::cout << Json{{"graph", graph_name},
                                  {"flavor", to_string(g.flavor())},
                                  {"max_rank", g.max_rank()},
                                  {"vertices", g.vertices().size()},
                                  {"edges", g.edge_count()},
                                  {"rank_law_violations", bad.size()},
                                  {"unreachable_vertices", orphans.size()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << graph_name << " (" << to_string(g.flavor()) << ", rank <= " << g.max_rank()
                          << "): " << g.vertices().size() << " vertices, " << g.edge_count() << " edges, "
                          << bad.size() << " rank-law violations, " << orphans.size()
                          << " unreachable vertices\n";
            }
            return bad.empty() && orphans.empty() ? 0 : kExitFail;
        }

        if (*exp) {
            RankedGraph g = [&] {
                if (input.empty())
                    return build_graph(graph_name_from_string(graph_name), clamp_rank(max_rank, "--max-rank"));
                std::ifstream in(input);
                if (!in)
                    throw std::runtime_error("cannot open " + input);
                Json j;
                in >> j;
                return graph_from_json(j);
            }();
            write_output(export_graph(g, export_format_from_string(exp_format), opts), output);
            return 0;
        }

        if (*verify) {
            std::vector<DualPair> pairs;
            if (pair == "all")
                pairs = {DualPair::RcQc, DualPair::LcQc, DualPair::RcQct, DualPair::LcQct};
            else
                pairs = {dual_pair_from_string(pair)};
            std::vector<RelationCheck> checks;
            for (auto p : pairs) {
                int n = max_size >= 0 ? max_size : (is_filtered(p) ? 7 : 8);
                checks.push_back(verify_dual(p, clamp_rank(n, "--max-size")));
            }
            if (!json) {
                for (const auto& c : checks)
                    std::cout << (c.passed ? "PASS" : "FAIL") << ": " << c.statement << " on "
                              << c.instances << " compositions (" << c.name << ", " << c.universe << ")\n";
                for (const auto& c : checks)
                    if (c.counterexample)
                        print_check(c);
                return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; })
                           ? 0
                           : kExitFail;
            }
            return report_checks(checks, json);
        }

        if (*relations) {
            std::vector<RelationCheck> checks;
            if (relation == "all") {
                checks = verify_all_relations(bounds);
                checks.push_back(verify_zero_contribution(bounds));
                checks.push_back(verify_index_inertness(bounds));
            } else if (relation == "zero-contribution") {
                checks.push_back(verify_zero_contribution(bounds));
            } else if (relation == "index-inertness") {
                checks.push_back(verify_index_inertness(bounds));
            } else {
                checks.push_back(verify_relation(relation_from_name(relation), bounds));
            }
            return report_checks(checks, json);
        }

        if (*phi_cmd) {
            const auto alpha = parse_composition(alpha_text);
            const auto rows = phi_table(alpha);
            const auto report = phi_verify ? verify_phi(alpha) : PhiReport{};
            if (json) {
                Json table = Json::array();
                for (const auto& row : rows)
                    table.push_back({{"w", to_string(row.word)},
                                     {"phi_w", to_string(row.image)},
                                     {"w_alpha", to_json(row.word_value)},
                                     {"phi_w_alpha", to_json(row.image_value)},
                                     {"case", to_string(row.kind)}});
                Json out{{"alpha", to_json(alpha)}, {"rows", table}};
                if (phi_verify) {
                    Json clauses = Json::array();
                    for (const auto& c : report.clauses)
                        clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                    out["clauses"] = clauses;
                    out["passed"] = report.passed();
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::size_t wide = 1, wide_image = 1, wide_value = 1;
                for (const auto& row : rows) {
                    wide = std::max(wide, to_string(row.word).size());
                    wide_image = std::max(wide_image, to_string(row.image).size());
                    wide_value = std::max(wide_value, to_string(row.word_value).size());
                }
                std::cout << "alpha = " << alpha << ", |Y| = " << rows.size() << "\n";
                for (const auto& row : rows)
                    std::cout << std::left << std::setw(static_cast<int>(wide)) << to_string(row.word)
                              << "  ->  " << std::setw(static_cast<int>(wide_image)) << to_string(row.image)
                              << "   w(alpha) = " << std::setw(static_cast<int>(wide_value))
                              << to_string(row.word_value) << "   phi(w)(alpha) = " << row.image_value
                              << "   [" << to_string(row.kind) << "]\n";
                for (const auto& c : report.clauses)
                    std::cout << (c.passed ? "PASS" : "FAIL") << ": " << c.name
                              << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
            }
            return !phi_verify || report.passed() ? 0 : kExitFail;
        }

        if (*examples) {
            const auto results = replay_examples();
            bool ok = true;
            Json out = Json::array();
            for (const auto& r : results) {
                ok = ok && r.passed;
                if (json)
                    out.push_back({{"group", r.group}, {"name", r.name}, {"expected", r.expected},
                                   {"actual", r.actual}, {"passed", r.passed}});
                else
                    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.group << "] " << r.name << " = "
                              << r.actual << (r.passed ? "" : "   (expected " + r.expected + ")") << "\n";
            }
            if (json)
                std::cout << Json{{"passed", ok}, {"examples", out}}.dump(2) << "\n";
            else
                std::cout << results.size() << " examples, " << (ok ? "all passed" : "FAILURES") << "\n";
            return ok ? 0 : kExitFail;
        }

        if (*compare) {
            bool ok = true;
            Json out = Json::array();
            for (const std::string name : {"Rc4", "Lc4", "Qc4"}) {
                const auto fixture = load_fixture(fixture_dir, name);
                const auto g = build_graph(fixture_graph(name), fixture.max_rank);
                const auto diff = compare_fixture(g, fixture);
                ok = ok && diff.empty();
                if (json) {
                    auto pairs = [](const auto& v) {
                        Json a = Json::array();
                        for (const auto& [x, y] : v)
                            a.push_back({to_json(x), to_json(y)});
                        return a;
                    };
                    out.push_back({{"fixture", name}, {"built_edges", g.edge_count()},
                                   {"fixture_edges", fixture.edges.size()}, {"missing", pairs(diff.missing)},
                                   {"extra", pairs(diff.extra)}, {"passed", diff.empty()}});
                } else {
                    std::cout << (diff.empty() ? "PASS" : "FAIL") << ": " << name << "  built "
                              << g.edge_count() << " edges, fixture " << fixture.edges.size() << " edges\n";
                    for (const auto& [x, y] : diff.missing)
                        std::cout << "  missing " << x << " -> " << y << "\n";
                    for (const auto& [x, y] : diff.extra)
                        std::cout << "  extra   " << x << " -> " << y << "\n";
                }
            }
            if (json)
                std::cout << Json{{"passed", ok}, {"fixtures", out}}.dump(2) << "\n";
            return ok ? 0 : kExitFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
