#include "compdual/verifier.hpp"

#include <chrono>
#include <future>
#include <stdexcept>

namespace compdual {

namespace {

using Clock = std::chrono::steady_clock;

RelationCheck new_check(std::string name, std::string statement, std::string universe)
{
    RelationCheck check;
    check.name = std::move(name);
    check.statement = std::move(statement);
    check.universe = std::move(universe);
    return check;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
    std::vector<int> indices;
    OperatorWord lhs;
    OperatorWord rhs;
};

std::vector<Instance> instances_of(Relation r, int max_index)
{
    std::vector<Instance> out;
    switch (r) {
    case Relation::AppendShift:
        for (int i = 0; i + 1 <= max_index; ++i)
            out.push_back({{i}, {a(i)}, {d(i + 1), a(i + 1)}});
        break;
    case Relation::AppendChain:
        for (int i = 1; i <= max_index; ++i)
            for (int j = 1; j <= i; ++j) {
                std::vector<Atom> lhs;
                for (int k = j; k <= i; ++k)
                    lhs.push_back(d(k));
                lhs.push_back(a(i));
                out.push_back({{i, j}, OperatorWord(lhs), {a(j - 1)}});
            }
        break;
    case Relation::RemoveAppend:
        for (int i = 1; i <= max_index; ++i)
            for (int j = 1; j <= max_index; ++j)
                if (i != j)
                    out.push_back({{i, j}, {d(i), a(j)}, {a(j), d(i)}});
        break;
    case Relation::RemoveFar:
        for (int i = 1; i <= max_index; ++i)
            for (int j = 1; j <= max_index; ++j)
                if (i - j >= 2 || j - i >= 2)
                    out.push_back({{i, j}, {d(i), d(j)}, {d(j), d(i)}});
        break;
    case Relation::RemoveBraidLower:
        for (int i = 1; i + 1 <= max_index; ++i)
            out.push_back({{i}, {d(i), d(i), d(i + 1)}, {d(i), d(i + 1), d(i)}});
        break;
    case Relation::RemoveBraidUpper:
        for (int i = 1; i + 1 <= max_index; ++i)
            out.push_back({{i}, {d(i), d(i + 1), d(i + 1)}, {d(i + 1), d(i), d(i + 1)}});
        break;
    case Relation::JdtRemove:
        for (int i = 1; i <= max_index; ++i)
            for (int j = 1; j <= max_index; ++j)
                if (i != j)
                    out.push_back({{i, j}, {u(i), d(j)}, {d(j), u(i)}});
        break;
    case Relation::JdtRemoveShift:
        for (int i = 1; i + 1 <= max_index; ++i)
            out.push_back({{i}, {u(i), d(i)}, {d(i + 1), u(i + 1)}});
        break;
    case Relation::BoxAddRemove:
        for (int i = 1; i <= max_index; ++i)
            for (int j = 1; j <= max_index; ++j)
                if (i != j)
                    out.push_back({{i, j}, {t(i), d(j)}, {d(j), t(i)}});
        break;
    }
    return out;
}

std::string trace_word(const OperatorWord& word, const WeakComposition& w)
{
    std::string out = to_string(w);
    OpResult r = w;
    const auto& letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        r = r ? apply(*it, r.value()) : r;
        out += " -" + to_string(*it) + "-> " + to_string(r);
    }
    return out;
}

Counterexample make_counterexample(const WeakComposition& w, const Instance& inst,
                                   const OpResult& lhs, const OpResult& rhs)
{
    return {to_string(w),
            inst.indices,
            to_string(inst.lhs),
            to_string(inst.rhs),
            to_string(lhs),
            to_string(rhs),
            "lhs: " + trace_word(inst.lhs, w) + "; rhs: " + trace_word(inst.rhs, w)};
}

void check_bounds(const UniverseBounds& b)
{
    if (b.max_part < 1 || b.max_len < 1 || b.max_index < 1)
        throw std::invalid_argument("universe bounds must be >= 1");
}

bool has_part(const WeakComposition& w, int value)
{
    for (Part p : w.parts())
        if (p == value)
            return true;
    return false;
}

WeakComposition prepend_zero(const WeakComposition& w)
{
    std::vector<Part> parts{0};
    parts.insert(parts.end(), w.parts().begin(), w.parts().end());
    return WeakComposition(std::move(parts));
}

}  // namespace

const std::vector<Relation>& all_relations()
{
    static const std::vector<Relation> relations{
        Relation::AppendShift,      Relation::AppendChain,      Relation::RemoveAppend,
        Relation::RemoveFar,        Relation::RemoveBraidLower, Relation::RemoveBraidUpper,
        Relation::JdtRemove,        Relation::JdtRemoveShift,   Relation::BoxAddRemove,
    };
    return relations;
}

std::string relation_name(Relation r)
{
    switch (r) {
    case Relation::AppendShift:
        return "append-shift";
    case Relation::AppendChain:
        return "append-chain";
    case Relation::RemoveAppend:
        return "remove-append";
    case Relation::RemoveFar:
        return "remove-far";
    case Relation::RemoveBraidLower:
        return "remove-braid-lower";
    case Relation::RemoveBraidUpper:
        return "remove-braid-upper";
    case Relation::JdtRemove:
        return "jdt-remove";
    case Relation::JdtRemoveShift:
        return "jdt-remove-shift";
    case Relation::BoxAddRemove:
        return "boxadd-remove";
    }
    return "?";
}

std::string relation_statement(Relation r)
{
    switch (r) {
    case Relation::AppendShift:
        return "a_i = d_{i+1} a_{i+1} (i >= 0)";
    case Relation::AppendChain:
        return "d_j d_{j+1} ... d_i a_i = a_{j-1} (i >= j >= 1)";
    case Relation::RemoveAppend:
        return "d_i a_j = a_j d_i (i != j)";
    case Relation::RemoveFar:
        return "d_i d_j = d_j d_i (|i-j| >= 2)";
    case Relation::RemoveBraidLower:
        return "d_i d_i d_{i+1} = d_i d_{i+1} d_i";
    case Relation::RemoveBraidUpper:
        return "d_i d_{i+1} d_{i+1} = d_{i+1} d_i d_{i+1}";
    case Relation::JdtRemove:
        return "u_i d_j = d_j u_i (i != j)";
    case Relation::JdtRemoveShift:
        return "u_i d_i = d_{i+1} u_{i+1}";
    case Relation::BoxAddRemove:
        return "t_i d_j = d_j t_i (i != j)";
    }
    return "?";
}

Relation relation_from_name(const std::string& name)
{
    for (Relation r : all_relations())
        if (relation_name(r) == name)
            return r;
    throw std::invalid_argument("unknown relation '" + name + "'");
}

std::string describe_universe(const UniverseBounds& b)
{
    return "weak compositions with parts <= " + std::to_string(b.max_part) + " and length <= " +
           std::to_string(b.max_len) + ", indices <= " + std::to_string(b.max_index);
}

RelationCheck verify_relation(Relation r, const UniverseBounds& bounds)
{
    check_bounds(bounds);
    const auto start = Clock::now();
    auto check = new_check(relation_name(r), relation_statement(r), describe_universe(bounds));

    const auto universe = enumerate_weak(bounds.max_part, bounds.max_len);
    const auto insts = instances_of(r, bounds.max_index);
    for (const auto& w : universe) {
        for (const auto& inst : insts) {
            ++check.instances;
            auto lhs = eval_word(inst.lhs, w);
            auto rhs = eval_word(inst.rhs, w);
            if (lhs != rhs && check.passed) {
                check.passed = false;
                check.counterexample = make_counterexample(w, inst, lhs, rhs);
            }
        }
    }
    check.seconds = seconds_since(start);
    return check;
}

std::vector<RelationCheck> verify_all_relations(const UniverseBounds& bounds)
{
    std::vector<std::future<RelationCheck>> jobs;
    for (Relation r : all_relations())
        jobs.push_back(std::async(std::launch::async, [r, bounds] { return verify_relation(r, bounds); }));
    std::vector<RelationCheck> out;
    for (auto& job : jobs)
        out.push_back(job.get());
    return out;
}

ZeroCase classify_zero_case(int i, const WeakComposition& w)
{
    if (i < 1)
        throw std::invalid_argument("classify_zero_case: index must be positive");
    if (i == 1)
        return has_part(w, 1) ? ZeroCase::OneBoth : ZeroCase::OneNeither;
    const bool hi = has_part(w, i);
    const bool lo = has_part(w, i - 1);
    if (hi && lo)
        return ZeroCase::Both;
    if (hi)
        return ZeroCase::OnlyI;
    if (lo)
        return ZeroCase::OnlyIMinusOne;
    return ZeroCase::Neither;
}

std::string to_string(ZeroCase c)
{
    switch (c) {
    case ZeroCase::OneBoth:
        return "i=1, part 1 present";
    case ZeroCase::OneNeither:
        return "i=1, no part 1";
    case ZeroCase::Both:
        return "parts i and i-1 present";
    case ZeroCase::OnlyI:
        return "part i only";
    case ZeroCase::OnlyIMinusOne:
        return "part i-1 only";
    case ZeroCase::Neither:
        return "neither part";
    }
    return "?";
}

RelationCheck verify_zero_contribution(const UniverseBounds& bounds)
{
    check_bounds(bounds);
    const auto start = Clock::now();
    auto check = new_check("zero-contribution",
                        "six-case comparison of d_i t_i and t_i d_i; equal whenever both nonzero",
                        describe_universe(bounds));

    for (const auto& w : enumerate_weak(bounds.max_part, bounds.max_len)) {
        for (int i = 1; i <= bounds.max_index; ++i) {
            ++check.instances;
            const Instance inst{{i}, {d(i), t(i)}, {t(i), d(i)}};
            const auto dt = eval_word(inst.lhs, w);
            const auto td = eval_word(inst.rhs, w);

            bool ok = false;
            switch (classify_zero_case(i, w)) {
            case ZeroCase::OneBoth:
            case ZeroCase::Both:
                ok = !dt.is_zero() && dt == td;
                break;
            case ZeroCase::OneNeither:
                // t_1 prepends the box that d_1 then empties: (0, alpha) as a
                // weak composition, alpha once flattened.
                ok = dt == OpResult(prepend_zero(w)) && flatten(dt.value()) == flatten(w) &&
                     td.is_zero();
                break;
            case ZeroCase::OnlyI:
                ok = dt.is_zero() && td == OpResult(w);
                break;
            case ZeroCase::OnlyIMinusOne:
                ok = dt == OpResult(w) && td.is_zero();
                break;
            case ZeroCase::Neither:
                ok = dt.is_zero() && td.is_zero();
                break;
            }
            if (!dt.is_zero() && !td.is_zero() && dt != td)
                ok = false;

            if (!ok && check.passed) {
                check.passed = false;
                check.counterexample = make_counterexample(w, inst, dt, td);
                check.counterexample->trace += "; case: " + to_string(classify_zero_case(i, w));
            }
        }
    }
    check.seconds = seconds_since(start);
    return check;
}

RelationCheck verify_index_inertness(const UniverseBounds& bounds)
{
    check_bounds(bounds);
    const auto start = Clock::now();
    auto check = new_check("index-inertness",
                        "u_i, t_i = 0 for i > m+1; d_i = 0 for i > m; d_I = 0 if max(I) > m",
                        describe_universe(bounds));
    const int reach = bounds.max_part + 3;
    for (const auto& w : enumerate_weak(bounds.max_part, bounds.max_len)) {
        const int m = largest_part(w);
        for (int i = 1; i <= reach; ++i) {
            ++check.instances;
            bool ok = true;
            if (i > m + 1)
                ok = jdt_add(i, w).is_zero() && box_add(i, w).is_zero();
            if (i > m)
                ok = ok && box_remove(i, w).is_zero() &&
                     box_remove_set(IndexSet::range(i - 1).with(i), w).is_zero() &&
                     box_remove_set(IndexSet{i}, w).is_zero();
            if (!ok && check.passed) {
                check.passed = false;
                check.counterexample =
                    Counterexample{to_string(w), {i}, "u/t/d at index " + std::to_string(i), "0",
                                   "nonzero", "0", "largest part " + std::to_string(m)};
            }
        }
    }
    check.seconds = seconds_since(start);
    return check;
}

std::string to_string(DualPair p)
{
    switch (p) {
    case DualPair::RcQc:
        return "rc-qc";
    case DualPair::LcQc:
        return "lc-qc";
    case DualPair::RcQct:
        return "rc-qct";
    case DualPair::LcQct:
        return "lc-qct";
    }
    return "?";
}

DualPair dual_pair_from_string(const std::string& s)
{
    for (DualPair p : {DualPair::RcQc, DualPair::LcQc, DualPair::RcQct, DualPair::LcQct})
        if (to_string(p) == s)
            return p;
    throw std::invalid_argument("unknown pair '" + s + "' (expected rc-qc, lc-qc, rc-qct or lc-qct)");
}

bool is_filtered(DualPair p)
{
    return p == DualPair::RcQct || p == DualPair::LcQct;
}

namespace {

LinearOp up_side(DualPair p)
{
    return (p == DualPair::RcQc || p == DualPair::RcQct) ? LinearOp::up_R() : LinearOp::up_L();
}

RelationCheck verify_commutator(DualPair pair, int max_size, bool filtered)
{
    if (max_size < 0)
        throw std::invalid_argument("max_size must be nonnegative");
    const auto start = Clock::now();
    const LinearOp up = up_side(pair);
    const LinearOp down = filtered ? LinearOp::down_filtered() : LinearOp::down_Q();
    auto check = new_check(to_string(pair),
                        filtered ? down.name() + up.name() + " - " + up.name() + down.name() + " = D~ + Id"
                                 : down.name() + up.name() + " - " + up.name() + down.name() + " = Id",
                        "compositions of size <= " + std::to_string(max_size));

    for (const auto& alpha : enumerate_compositions_upto(max_size)) {
        ++check.instances;
        const auto s = FormalSum::basis(alpha);
        const auto lhs = commutator_minus(down, up, s);
        const auto rhs = filtered ? down_filtered(s) + s : s;
        if (lhs != rhs && check.passed) {
            check.passed = false;
            const auto du = down(up(s));
            const auto ud = up(down(s));
            check.counterexample = Counterexample{
                to_string(alpha), {}, down.name() + up.name() + " - " + up.name() + down.name(),
                filtered ? "D~ + Id" : "Id", compact_string(lhs), compact_string(rhs),
                "DU = " + compact_string(du) + "; UD = " + compact_string(ud)};
        }
    }
    check.seconds = seconds_since(start);
    return check;
}

}  // namespace

RelationCheck verify_dual_graded(DualPair pair, int max_size)
{
    if (is_filtered(pair))
        throw std::invalid_argument("verify_dual_graded: " + to_string(pair) + " is a filtered pair");
    return verify_commutator(pair, max_size, false);
}

RelationCheck verify_dual_filtered(DualPair pair, int max_size)
{
    if (!is_filtered(pair))
        throw std::invalid_argument("verify_dual_filtered: " + to_string(pair) + " is a graded pair");
    return verify_commutator(pair, max_size, true);
}

RelationCheck verify_dual(DualPair pair, int max_size)
{
    return is_filtered(pair) ? verify_dual_filtered(pair, max_size) : verify_dual_graded(pair, max_size);
}

RelationCheck verify_commutator_is_d1u1(int max_size)
{
    const auto start = Clock::now();
    auto check = new_check("commutator-d1u1", "DU - UD = d_1 u_1 (pointwise)",
                        "compositions of size <= " + std::to_string(max_size));
    const auto U = LinearOp::up_R();
    const auto D = LinearOp::down_Q();
    for (const auto& alpha : enumerate_compositions_upto(max_size)) {
        ++check.instances;
        const auto s = FormalSum::basis(alpha);
        const auto lhs = commutator_minus(D, U, s);
        const auto rhs = apply_pointwise(s, [](const Composition& c, std::vector<OpResult>& out) {
            out.push_back(eval_word({d(1), u(1)}, c.as_weak()));
        });
        if (lhs != rhs && check.passed) {
            check.passed = false;
            check.counterexample = Counterexample{to_string(alpha), {}, "DU - UD", "d1 u1",
                                                  compact_string(lhs), compact_string(rhs), ""};
        }
    }
    check.seconds = seconds_since(start);
    return check;
}

}  // namespace compdual
