#include "compdual/phi.hpp"

#include <algorithm>
#include <stdexcept>

namespace compdual {

namespace {

IndexSet assemble(const IndexSet& lower, int middle, const IndexSet& upper)
{
    std::vector<int> out = lower.elements();
    out.push_back(middle);
    out.insert(out.end(), upper.elements().begin(), upper.elements().end());
    return IndexSet(std::move(out));  // throws on a repeated index
}

/// Smallest nonzero part of w that is >= floor, or 0 if none.
int smallest_part_at_least(const WeakComposition& w, int floor)
{
    int best = 0;
    for (Part p : w.parts())
        if (p >= floor && p > 0 && (best == 0 || p < best))
            best = p;
    return best;
}

WeakComposition prepend_zero(const WeakComposition& w)
{
    std::vector<Part> parts{0};
    parts.insert(parts.end(), w.parts().begin(), w.parts().end());
    return WeakComposition(std::move(parts));
}

class ClauseRecorder {
public:
    explicit ClauseRecorder(std::string name) { result_.name = std::move(name); }

    void fail(const std::string& detail)
    {
        if (result_.passed) {
            result_.passed = false;
            result_.detail = detail;
        }
    }
    void require(bool ok, const std::string& detail)
    {
        if (!ok)
            fail(detail);
    }
    ClauseResult result() const { return result_; }

private:
    ClauseResult result_;
};

}  // namespace

TWord::TWord(WordSide side, IndexSet set, int i) : side_(side), set_(std::move(set)), index_(i)
{
    if (!set_.contains(i))
        throw std::invalid_argument("TWord: index " + std::to_string(i) + " not in " + compdual::to_string(set_));
}

OperatorWord TWord::word() const
{
    const auto removals = box_remove_word(set_);
    const OperatorWord add{t(index_)};
    return side_ == WordSide::Left ? add.then_after(removals) : removals.then_after(add);
}

OpResult TWord::evaluate(const Composition& alpha) const
{
    return eval_word(word(), alpha.as_weak());
}

std::string to_string(const TWord& w)
{
    const auto set = to_string(w.set());
    const auto add = "t" + std::to_string(w.index());
    return w.side() == WordSide::Left ? add + " d" + set : "d" + set + " " + add;
}

WordSets build_word_sets(const Composition& alpha, int index_bound)
{
    if (index_bound < largest_part(alpha) + 1)
        throw std::invalid_argument("build_word_sets: index_bound must be at least largest_part + 1");
    if (index_bound >= 63)
        throw std::out_of_range("build_word_sets: index_bound too large");

    WordSets sets{alpha, index_bound, {}, {}, {}, {}, {}};
    const int m = largest_part(alpha);
    for (unsigned long mask = 1; mask < (1UL << index_bound); ++mask) {
        const auto set = IndexSet::from_mask(mask);
        for (int i : set.elements()) {
            TWord right(WordSide::Right, set, i);
            if (!right.evaluate(alpha).is_zero()) {
                sets.X.insert(right);
                if (i <= m)
                    sets.Z.insert(right);
                if (set.size() == 1)
                    sets.P.insert(right);
            }
            TWord left(WordSide::Left, set, i);
            if (!left.evaluate(alpha).is_zero()) {
                sets.Y.insert(left);
                if (set.size() == 1)
                    sets.Q.insert(left);
            }
        }
    }
    return sets;
}

WordSets build_word_sets(const Composition& alpha)
{
    return build_word_sets(alpha, largest_part(alpha) + 1);
}

TWord phi(const TWord& w, const Composition& alpha)
{
    if (w.side() != WordSide::Left || w.evaluate(alpha).is_zero())
        throw std::invalid_argument("phi: " + to_string(w) + " is not in Y for " + to_string(alpha));

    // k = largest part of alpha strictly below i, 0 if there is none.
    int k = 0;
    for (Part p : alpha.parts())
        if (p < w.index())
            k = std::max(k, p);
    const int shifted = k + 1;
    return TWord(WordSide::Right, assemble(w.lower(), shifted, w.upper()), shifted);
}

TWord psi(const TWord& w, const Composition& alpha)
{
    if (w.side() != WordSide::Right || w.evaluate(alpha).is_zero() || w.index() > largest_part(alpha))
        throw std::invalid_argument("psi: " + to_string(w) + " is not in Z for " + to_string(alpha));

    const auto stripped = box_remove_set(w.upper(), alpha.as_weak());
    if (stripped.is_zero())
        throw std::logic_error("psi: d_B(alpha) is zero for " + to_string(w));
    const int target = smallest_part_at_least(stripped.value(), w.index());
    if (target == 0)
        throw std::logic_error("psi: no part of d_B(alpha) is >= " + std::to_string(w.index()));
    return TWord(WordSide::Left, assemble(w.lower(), target, w.upper()), target);
}

PhiCase classify_phi_case(const TWord& w, const Composition& alpha)
{
    if (w.index() == 1)
        return PhiCase::IndexOne;
    const auto stripped = box_remove_set(w.upper(), alpha.as_weak());
    if (stripped.is_zero())
        throw std::invalid_argument("classify_phi_case: d_B(alpha) is zero");
    return smallest_part_at_least(stripped.value(), 1) == w.index() ? PhiCase::Smallest
                                                                     : PhiCase::NotSmallest;
}

std::string to_string(PhiCase c)
{
    switch (c) {
    case PhiCase::IndexOne:
        return "i=1";
    case PhiCase::NotSmallest:
        return "i>=2, not smallest";
    case PhiCase::Smallest:
        return "i>=2, smallest";
    }
    return "?";
}

FormalSum sum_over(const std::set<TWord>& words, const Composition& alpha)
{
    FormalSum out;
    for (const auto& w : words)
        out.add(w.evaluate(alpha), 1);
    return out;
}

bool PhiReport::passed() const
{
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

PhiReport verify_phi(const Composition& alpha)
{
    const auto sets = build_word_sets(alpha);
    const int m = largest_part(alpha);
    PhiReport report;
    report.alpha = alpha;
    report.x_size = sets.X.size();
    report.y_size = sets.Y.size();
    report.z_size = sets.Z.size();
    report.p_size = sets.P.size();
    report.q_size = sets.Q.size();

    // Indices above m + 1 contribute nothing to any of the sets.
    {
        ClauseRecorder clause("index-universe");
        const auto wider = build_word_sets(alpha, m + 2);
        clause.require(wider.X == sets.X && wider.Y == sets.Y && wider.Z == sets.Z &&
                           wider.P == sets.P && wider.Q == sets.Q,
                       "index " + std::to_string(m + 2) + " contributes a nonzero word");
        report.clauses.push_back(clause.result());
    }

    ClauseRecorder image("phi-maps-Y-onto-Z");
    ClauseRecorder inverse("psi-inverts-phi");
    ClauseRecorder injective("phi-injective");
    ClauseRecorder action("phi-preserves-action");
    ClauseRecorder cases("phi-strict-cases");

    std::set<TWord> images;
    for (const auto& w : sets.Y) {
        TWord w2 = w;
        try {
            w2 = phi(w, alpha);
        } catch (const std::exception& e) {
            image.fail(to_string(w) + ": " + e.what());
            continue;
        }
        if (!sets.Z.count(w2))
            image.fail(to_string(w) + " -> " + to_string(w2) + " is not in Z");
        if (!images.insert(w2).second)
            injective.fail(to_string(w2) + " has two preimages");

        try {
            const auto back = psi(w2, alpha);
            inverse.require(back == w, "psi(phi(" + to_string(w) + ")) = " + to_string(back));
        } catch (const std::exception& e) {
            inverse.fail("psi(phi(" + to_string(w) + ")): " + e.what());
        }

        const auto before = w.evaluate(alpha);
        const auto after = w2.evaluate(alpha);
        if (after.is_zero()) {
            action.fail(to_string(w2) + " annihilates " + to_string(alpha));
            continue;
        }
        action.require(flatten(after.value()) == flatten(before.value()),
                       to_string(w) + ": " + to_string(before) + " vs " + to_string(after));

        const auto kind = classify_phi_case(w, alpha);
        ++report.case_counts[static_cast<int>(kind)];
        const bool strict_ok = kind == PhiCase::Smallest
                                   ? after == OpResult(prepend_zero(before.value()))
                                   : after == before;
        cases.require(strict_ok, to_string(w) + " [" + to_string(kind) + "]: w(alpha) = " +
                                     to_string(before) + ", phi(w)(alpha) = " + to_string(after));
    }
    image.require(images == sets.Z, "image of Y has " + std::to_string(images.size()) +
                                        " words, Z has " + std::to_string(sets.Z.size()));

    for (const auto& w : sets.Z) {
        try {
            const auto pre = psi(w, alpha);
            inverse.require(sets.Y.count(pre) && phi(pre, alpha) == w,
                            "phi(psi(" + to_string(w) + ")) != " + to_string(w));
        } catch (const std::exception& e) {
            inverse.fail("phi(psi(" + to_string(w) + ")): " + e.what());
        }
    }

    report.clauses.push_back(image.result());
    report.clauses.push_back(inverse.result());
    report.clauses.push_back(injective.result());
    report.clauses.push_back(action.result());
    report.clauses.push_back(cases.result());

    const TWord top(WordSide::Right, IndexSet{m + 1}, m + 1);
    {
        ClauseRecorder clause("phi-Q-onto-P-minus-top");
        std::set<TWord> expected = sets.P;
        expected.erase(top);
        std::set<TWord> got;
        for (const auto& w : sets.Q)
            got.insert(phi(w, alpha));
        clause.require(got == expected, "phi(Q) has " + std::to_string(got.size()) +
                                            " words, P minus top has " + std::to_string(expected.size()));
        report.clauses.push_back(clause.result());
    }
    {
        // For alpha = () the top word is d_1 t_1, which leaves a single 0 part.
        ClauseRecorder clause("top-word-fixes-alpha");
        const auto r = top.evaluate(alpha);
        const bool ok = m == 0 ? (!r.is_zero() && flatten(r.value()) == alpha)
                               : r == OpResult(alpha.as_weak());
        clause.require(ok, to_string(top) + "(alpha) = " + to_string(r));
        report.clauses.push_back(clause.result());
    }
    {
        ClauseRecorder clause("graded-cancellation");
        const auto diff = sum_over(sets.P, alpha) - sum_over(sets.Q, alpha);
        clause.require(diff == FormalSum::basis(alpha), "sum P - sum Q = " + compact_string(diff));
        report.clauses.push_back(clause.result());
    }
    {
        ClauseRecorder clause("filtered-cancellation");
        std::set<TWord> outside;
        std::set_difference(sets.X.begin(), sets.X.end(), sets.Z.begin(), sets.Z.end(),
                            std::inserter(outside, outside.end()));
        const auto basis = FormalSum::basis(alpha);
        const auto lhs = sum_over(outside, alpha);
        const auto rhs = down_filtered(basis) + basis;
        clause.require(lhs == rhs, "sum over X\\Z = " + compact_string(lhs) + ", expected " +
                                       compact_string(rhs));
        report.clauses.push_back(clause.result());
    }
    {
        ClauseRecorder clause("commutators-match-word-sums");
        const auto basis = FormalSum::basis(alpha);
        const auto graded = commutator_minus(LinearOp::down_Q(), LinearOp::up_L(), basis);
        const auto filtered = commutator_minus(LinearOp::down_filtered(), LinearOp::up_L(), basis);
        clause.require(graded == sum_over(sets.P, alpha) - sum_over(sets.Q, alpha),
                       "DU~ - U~D differs from sum P - sum Q");
        clause.require(filtered == sum_over(sets.X, alpha) - sum_over(sets.Y, alpha),
                       "D~U~ - U~D~ differs from sum X - sum Y");
        report.clauses.push_back(clause.result());
    }
    {
        ClauseRecorder clause("bijection-sizes");
        clause.require(sets.Y.size() == sets.Z.size(),
                       "|Y| = " + std::to_string(sets.Y.size()) + ", |Z| = " + std::to_string(sets.Z.size()));
        report.clauses.push_back(clause.result());
    }
    return report;
}

std::vector<PhiRow> phi_table(const Composition& alpha)
{
    std::vector<PhiRow> rows;
    for (const auto& w : build_word_sets(alpha).Y) {
        auto image = phi(w, alpha);
        rows.push_back({w, image, w.evaluate(alpha), image.evaluate(alpha), classify_phi_case(w, alpha)});
    }
    return rows;
}

}  // namespace compdual
