// Acceptance suite: one PASS/FAIL line per criterion, exact equality, with a
// wall-clock limit per criterion. Exit status is 0 only if every line passes.

#include "compdual/export.hpp"
#include "compdual/golden.hpp"
#include "compdual/graph.hpp"
#include "compdual/phi.hpp"
#include "compdual/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace compdual;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass)
        ++failures;
    std::printf("%s  %d. %-34s %8.3fs (limit %.0fs)  %s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                limit_seconds, out.detail.c_str(), in_time ? "" : " [time limit exceeded]");
    std::fflush(stdout);
}

Outcome golden()
{
    const auto results = replay_examples();
    Outcome out;
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            ++passed;
        } else if (out.ok) {
            out.ok = false;
            out.detail = "first mismatch " + r.name + ": expected " + r.expected + ", got " + r.actual + "; ";
        }
    }
    out.detail += std::to_string(passed) + "/" + std::to_string(results.size()) + " examples";
    return out;
}

Outcome theorems()
{
    Outcome out;
    std::ostringstream detail;
    for (auto p : {DualPair::RcQc, DualPair::LcQc, DualPair::RcQct, DualPair::LcQct}) {
        const int n = is_filtered(p) ? 7 : 8;
        const auto check = verify_dual(p, n);
        const std::size_t expected = 1UL << n;  // every composition of size <= n
        if (!check.passed || check.instances != expected)
            out.ok = false;
        detail << check.name << " " << check.instances << " ";
    }
    out.detail = detail.str();
    return out;
}

Outcome lemmas()
{
    const UniverseBounds bounds{6, 5, 8};
    Outcome out;
    std::size_t instances = 0;
    auto checks = verify_all_relations(bounds);
    checks.push_back(verify_zero_contribution(bounds));
    for (const auto& c : checks) {
        instances += c.instances;
        if (!c.passed || c.instances == 0) {
            out.ok = false;
            out.detail += c.name + " failed; ";
        }
    }
    out.detail += std::to_string(checks.size()) + " statements, " + std::to_string(instances) + " instances";
    return out;
}

Outcome fixtures()
{
    Outcome out;
    const std::pair<const char*, std::size_t> expected[] = {{"Rc4", 17}, {"Lc4", 17}, {"Qc4", 22}};
    for (const auto& [name, count] : expected) {
        const auto f = load_fixture(COMPDUAL_FIXTURE_DIR, name);
        const auto g = build_graph(fixture_graph(name), 4);
        const bool ok = compare_fixture(g, f).empty() && f.edges.size() == count && g.edge_count() == count;
        out.ok = out.ok && ok;
        out.detail += std::string(name) + "=" + std::to_string(g.edge_count()) + " ";
    }
    return out;
}

Outcome phi_suite()
{
    Outcome out;
    std::size_t count = 0;
    for (const auto& alpha : enumerate_compositions_upto(6)) {
        ++count;
        const auto report = verify_phi(alpha);
        if (!report.passed() && out.ok) {
            out.ok = false;
            for (const auto& c : report.clauses)
                if (!c.passed) {
                    out.detail = to_string(alpha) + " " + c.name + ": " + c.detail + "; ";
                    break;
                }
        }
    }
    out.detail += std::to_string(count) + " compositions";
    return out;
}

Outcome nontransitivity()
{
    const auto r = check_nontransitivity();
    Outcome out{r.passed(), ""};
    const auto flat = [](const OpResult& x) { return x ? to_string(flatten(x.value())) : std::string("0"); };
    out.detail = "d{1,4}(4141)~" + flat(r.step1) + ", d{1,4}(413)~" + flat(r.step2) + ", " +
                 std::to_string(r.subsets_searched) + " subsets searched, direct witness: " +
                 (r.direct_witness ? to_string(*r.direct_witness) : "none");
    return out;
}

// Adjoint of an operator family read off by brute force: the coefficient of
// beta in the result is the number of (x, i) with x of size |v| + shift and
// flatten(op_i(x)) = v.
FormalSum preimages(const Composition& v, long shift,
                    const std::function<void(const Composition&, std::vector<OpResult>&)>& op)
{
    FormalSum out;
    const long n = size(v) + shift;
    if (n < 0)
        return out;
    for (const auto& x : enumerate_compositions(static_cast<int>(n))) {
        std::vector<OpResult> images;
        op(x, images);
        for (const auto& r : images)
            if (r && flatten(r.value()) == v)
                out.add(x, 1);
    }
    return out;
}

void all_u(const Composition& x, std::vector<OpResult>& out)
{
    for (int i = 1; i <= largest_part(x) + 1; ++i)
        out.push_back(jdt_add(i, x.as_weak()));
}

void all_t(const Composition& x, std::vector<OpResult>& out)
{
    for (int i = 1; i <= largest_part(x) + 1; ++i)
        out.push_back(box_add(i, x.as_weak()));
}

void all_d(const Composition& x, std::vector<OpResult>& out)
{
    for (int i = 1; i <= largest_part(x); ++i)
        out.push_back(box_remove(i, x.as_weak()));
}

Outcome consistency()
{
    Outcome out;
    const int n = 6;
    std::size_t checked = 0;
    for (auto name : {GraphName::Rc, GraphName::Lc, GraphName::Qc, GraphName::Qct}) {
        const auto g = build_graph(name, n);
        for (const auto& v : g.vertices()) {
            const auto s = FormalSum::basis(v);
            const bool top = size(v) == n;
            bool ok = true;
            switch (name) {
            case GraphName::Rc:
                ok = (top || graph_up(g, s) == up_R(s)) && graph_down(g, s) == preimages(v, -1, all_u);
                break;
            case GraphName::Lc:
                ok = (top || graph_up(g, s) == up_L(s)) && graph_down(g, s) == preimages(v, -1, all_t);
                break;
            case GraphName::Qc:
                ok = graph_down(g, s) == down_Q(s) && (top || graph_up(g, s) == preimages(v, 1, all_d));
                break;
            case GraphName::Qct:
                ok = graph_down(g, s) == down_filtered(s);
                break;
            }
            ++checked;
            if (!ok && out.ok) {
                out.ok = false;
                out.detail = to_string(name) + " disagrees at " + to_string(v) + "; ";
            }
        }
    }
    out.detail += std::to_string(checked) + " vertex checks over rc, lc, qc, qct";
    return out;
}

Outcome structure()
{
    Outcome out;
    std::ostringstream detail;
    for (auto name : {GraphName::Rc, GraphName::Lc, GraphName::Qc, GraphName::Qct}) {
        const auto g = build_graph(name, 8);
        if (!rank_law_violations(g).empty())
            out.ok = false;
        for (const auto& e : g.edges()) {
            const long gap = size(e.to) - size(e.from);
            const bool graded = name != GraphName::Qct;
            if (graded ? gap != 1 : gap < 1)
                out.ok = false;
            if ((name == GraphName::Rc || name == GraphName::Lc) && e.mult != 1)
                out.ok = false;
        }
    }
    const auto survey = survey_filtered_multiplicities(8);
    detail << "Q~_c survey (size <= 8): " << survey.edges << " edges, " << survey.edges_with_multiplicity
           << " with multiplicity > 1, max " << survey.max_multiplicity;
    out.detail = detail.str();
    return out;
}

}  // namespace

int main()
{
    criterion(1, "golden examples", 1, golden);
    criterion(2, "dual graded/filtered theorems", 60, theorems);
    criterion(3, "operator relations + zero lemma", 60, lemmas);
    criterion(4, "rank-4 fixture match", 1, fixtures);
    criterion(5, "Phi bijection suite", 30, phi_suite);
    criterion(6, "non-transitivity witness", 1, nontransitivity);
    criterion(7, "graph/operator consistency", 10, consistency);
    criterion(8, "structural laws", 60, structure);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
