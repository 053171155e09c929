#include "compdual/golden.hpp"

#include "compdual/formal_sum.hpp"
#include "compdual/graph.hpp"
#include "compdual/operators.hpp"
#include "compdual/phi.hpp"

#include <algorithm>
#include <sstream>

namespace compdual {

namespace {

/// Digit-string weak composition, e.g. "2032" -> (2,0,3,2).
WeakComposition digits(const std::string& s)
{
    std::vector<Part> parts;
    for (char c : s)
        parts.push_back(c - '0');
    return WeakComposition(std::move(parts));
}

/// Sum of flattened digit strings separated by '+'.
FormalSum digit_sum(const std::string& s)
{
    FormalSum out;
    std::istringstream in(s);
    std::string term;
    while (std::getline(in, term, '+'))
        out.add(OpResult(digits(term)), 1);
    return out;
}

class Replay {
public:
    void group(std::string g) { group_ = std::move(g); }

    template <typename T>
    void check(const std::string& name, const T& expected, const T& actual)
    {
        out_.push_back({group_, name, render(expected), render(actual), expected == actual});
    }

    std::vector<GoldenResult> take() { return std::move(out_); }

private:
    static std::string render(const OpResult& r) { return to_string(r); }
    static std::string render(const WeakComposition& w) { return to_string(w); }
    static std::string render(const Composition& c) { return to_string(c); }
    static std::string render(const FormalSum& s) { return compact_string(s); }
    static std::string render(const IndexSet& s) { return to_string(s); }
    static std::string render(const std::string& s) { return s; }
    static std::string render(const Coeff& k) { return k.str(); }
    static std::string render(bool b) { return b ? "true" : "false"; }

    std::string group_;
    std::vector<GoldenResult> out_;
};

}  // namespace

std::vector<GoldenResult> replay_examples()
{
    Replay r;
    const WeakComposition a213{2, 1, 3};
    const WeakComposition b31421{3, 1, 4, 2, 1};

    r.group("box removing");
    r.check("d1(213)", OpResult(digits("203")), box_remove(1, a213));
    r.check("d2(213)", OpResult(digits("113")), box_remove(2, a213));
    r.check("d3(213)", OpResult(digits("212")), box_remove(3, a213));
    for (int i = 4; i <= 8; ++i)
        r.check("d" + std::to_string(i) + "(213)", OpResult::zero(), box_remove(i, a213));
    r.check("I-1 for I={1,2,4}", IndexSet{1, 3}, IndexSet{1, 2, 4}.shifted_down());
    r.check("d[3](31421)", OpResult(digits("21410")), box_remove_set(IndexSet::range(3), b31421));

    r.group("appending");
    r.check("a2(213)", digits("2132"), append(2, a213));
    r.check("a2 d4(213)", OpResult::zero(), eval_word({a(2), d(4)}, a213));

    r.group("jdt");
    r.check("u4(31421)", OpResult(digits("214104")), jdt_add(4, b31421));
    r.check("a4 d[3](31421)", OpResult(digits("214104")),
            eval_word({a(4), d(1), d(2), d(3)}, b31421));

    r.group("box adding");
    r.check("t1(31421)", OpResult(digits("131421")), box_add(1, b31421));
    r.check("t2(31421)", OpResult(digits("32421")), box_add(2, b31421));
    r.check("t3(31421)", OpResult(digits("31431")), box_add(3, b31421));
    r.check("t4(31421)", OpResult(digits("41421")), box_add(4, b31421));
    r.check("t5(31421)", OpResult(digits("31521")), box_add(5, b31421));
    for (int i = 6; i <= 9; ++i)
        r.check("t" + std::to_string(i) + "(31421)", OpResult::zero(), box_add(i, b31421));

    r.group("covers");
    r.check("R_c cover u4(31421)", Composition{2, 1, 4, 1, 4}, flatten(jdt_add(4, b31421).value()));
    r.check("L_c cover t4(31421)", Composition{4, 1, 4, 2, 1}, flatten(box_add(4, b31421).value()));
    r.check("Q_c cover d4(41421)", OpResult(digits("41321")), box_remove(4, digits("41421")));
    r.check("Q~_c edge d{2,4}(41421)", OpResult(digits("41311")),
            box_remove_set(IndexSet{2, 4}, digits("41421")));
    {
        const auto witnesses = filtered_witnesses(Composition{4, 1, 4, 2, 1}, Composition{4, 1, 3, 1, 1});
        r.check("{2,4} witnesses 41311 -> 41421 in Q~_c", true,
                std::find(witnesses.begin(), witnesses.end(), IndexSet{2, 4}) != witnesses.end());
    }

    const auto s213 = FormalSum::basis(Composition{2, 1, 3});
    const auto s12 = FormalSum::basis(Composition{1, 2});
    const auto U = LinearOp::up_R();
    const auto D = LinearOp::down_Q();
    const auto Ut = LinearOp::up_L();
    const auto Dt = LinearOp::down_filtered();

    r.group("R_c and Q_c");
    {
        std::string weak;
        for (int i = 1; i <= 4; ++i)
            weak += (i > 1 ? " + " : "") + to_string(jdt_add(i, a213));
        r.check("u_i(213), i=1..4, as weak compositions",
                std::string("(2, 1, 3, 1) + (2, 0, 3, 2) + (1, 0, 3, 3) + (2, 1, 0, 4)"), weak);
    }
    r.check("U(213)", digit_sum("2131+2032+1033+2104"), U(s213));
    r.check("D(213)", digit_sum("203+113+212"), D(s213));
    r.check("DU(213)", digit_sum("2130+1131+2121+2031+2022+0033+1032+2004+1104+2103"), D(U(s213)));
    r.check("UD(213)", digit_sum("2031+0033+2004+1131+1032+1104+2121+2022+2103"), U(D(s213)));
    r.check("(DU-UD)(213)", s213, commutator_minus(D, U, s213));

    r.group("R_c and Q~_c");
    r.check("D~(12)", digit_sum("02+11+10"), Dt(s12));
    r.check("U(12)", digit_sum("121+022+103"), U(s12));
    r.check("D~U(12)", digit_sum("120+111+110+021+020+003+102+002+101+100"), Dt(U(s12)));
    r.check("UD~(12)", digit_sum("021+003+111+102+101+002"), U(Dt(s12)));
    r.check("(D~U-UD~)(12)", digit_sum("2+11+1+12"), commutator_minus(Dt, U, s12));

    r.group("L_c and Q_c");
    r.check("U~(213)", digit_sum("1213+223+313+214"), Ut(s213));
    r.check("DU~(213)", digit_sum("1203+1113+1212+213+222+303+312+204+114+213"), D(Ut(s213)));
    r.check("U~D(213)", digit_sum("1203+303+204+1113+213+114+1212+222+312"), Ut(D(s213)));
    r.check("coefficient of 213 in DU~(213)", Coeff(2), D(Ut(s213)).coefficient(Composition{2, 1, 3}));
    r.check("coefficient of 213 in U~D(213)", Coeff(1), Ut(D(s213)).coefficient(Composition{2, 1, 3}));
    r.check("(DU~-U~D)(213)", s213, commutator_minus(D, Ut, s213));

    r.group("L_c and Q~_c");
    r.check("U~(12)", digit_sum("112+22+13"), Ut(s12));
    r.check("D~U~(12)", digit_sum("102+111+110+21+20+03+12+02+11+10"), Dt(Ut(s12)));
    r.check("U~D~(12)", digit_sum("102+03+111+21+110+20"), Ut(Dt(s12)));
    r.check("(D~U~-U~D~)(12)", digit_sum("2+11+1+12"), commutator_minus(Dt, Ut, s12));

    r.group("Phi");
    {
        const Composition alpha{2, 6, 1, 4};
        const TWord w(WordSide::Left, IndexSet{1, 4, 5, 6}, 4);
        const TWord image(WordSide::Right, IndexSet{1, 3, 5, 6}, 3);
        r.check("w(2614), w = t4 d{1,4,5,6}", OpResult(digits("2404")), w.evaluate(alpha));
        r.check("w = d{1} t4 d4 d{5,6}", w.evaluate(alpha),
                eval_word({d(1), t(4), d(4), d(5), d(6)}, alpha.as_weak()));
        r.check("w in Y", true, build_word_sets(alpha).Y.count(w) == 1);
        r.check("Phi(w)", to_string(image), to_string(phi(w, alpha)));
        r.check("Phi(w)(2614)", OpResult(digits("2404")), phi(w, alpha).evaluate(alpha));
        r.check("Phi(w) = d{1} d3 t3 d{5,6}", phi(w, alpha).evaluate(alpha),
                eval_word({d(1), d(3), t(3), d(5), d(6)}, alpha.as_weak()));
        r.check("d_B(2614), B = {5,6}", OpResult(digits("2414")),
                box_remove_set(IndexSet{5, 6}, alpha.as_weak()));
        r.check("Psi(Phi(w))", to_string(w), to_string(psi(phi(w, alpha), alpha)));
    }

    r.group("non-transitivity");
    {
        const auto report = check_nontransitivity();
        r.check("d{1,4}(4141)", OpResult(digits("4130")), report.step1);
        r.check("d{1,4}(4141) flattened", std::string("(4, 1, 3)"),
                report.step1 ? to_string(flatten(report.step1.value())) : std::string("0"));
        r.check("d{1,4}(413) flattened", std::string("(3, 3)"),
                report.step2 ? to_string(flatten(report.step2.value())) : std::string("0"));
        r.check("no I with d_I(4141) = 33", std::string("none"),
                report.direct_witness ? to_string(*report.direct_witness) : std::string("none"));
    }
    return r.take();
}

}  // namespace compdual
