#include "sdforge/prolong.hpp"

#include <algorithm>

namespace sdf {

namespace {

Variable level_up(const Variable& v) {
    if (v.is_base()) return Variable::prolong(v.base, 1);
    if (v.kind == VarKind::Prolong) return Variable::prolong(v.base, v.a + 1);
    throw Error("prolongation frame cannot contain " + v.str());
}

uint32_t level_of(const Variable& v) {
    if (v.is_base()) return 0;
    if (v.kind == VarKind::Prolong) return v.a;
    throw Error("variable " + v.str() + " is not a prolongation coordinate");
}

}  // namespace

Poly prolongation_derivative(const Poly& p, const ParamTable& params) {
    Poly result;
    for (auto& [m, c] : p.terms()) {
        CoeffElem dc = params.apply_d(c);
        if (!dc.is_zero()) result += Poly::term(m, dc);
        for (auto& [v, e] : m.factors()) {
            Monomial rest = *m.divide(Monomial::var(v));
            result += Poly::term(rest * Monomial::var(level_up(v)), c * CoeffElem(Int(e)));
        }
    }
    return result;
}

ProlongedVariety tau(const IdealPresentation& V, uint32_t m, const ParamTable& params) {
    for (auto& v : V.ambient())
        if (!v.is_base()) throw Error("tau: ambient variable " + v.str() + " is not base-level");

    ProlongedVariety pv;
    pv.base = V;
    pv.level = m;
    pv.level_gens.push_back(V.generators());
    for (uint32_t k = 1; k <= m; ++k) {
        std::vector<Poly> next;
        for (auto& g : pv.level_gens.back()) next.push_back(prolongation_derivative(g, params));
        pv.level_gens.push_back(std::move(next));
    }

    std::vector<Variable> ambient = V.ambient();
    for (uint32_t k = 1; k <= m; ++k)
        for (auto& v : V.ambient()) ambient.push_back(Variable::prolong(v.base, k));
    std::vector<Poly> gens;
    for (auto& lvl : pv.level_gens)
        for (auto& g : lvl) gens.push_back(g);
    pv.presentation = IdealPresentation(std::move(ambient), std::move(gens), V.order_kind());
    pv.presentation.assert_prime(V.assume_prime());
    return pv;
}

IdealPresentation ProlongedVariety::slice(uint32_t m) const {
    if (m > level) throw Error("slice level exceeds prolongation level");
    std::vector<Variable> ambient = base.ambient();
    for (uint32_t k = 1; k <= m; ++k)
        for (auto& v : base.ambient()) ambient.push_back(Variable::prolong(v.base, k));
    std::vector<Poly> gens;
    for (uint32_t k = 0; k <= m; ++k)
        for (auto& g : level_gens[k]) gens.push_back(g);
    return IdealPresentation(std::move(ambient), std::move(gens), base.order_kind());
}

NormalFormReport normal_form_check(const IdealPresentation& W, const ParamTable& params,
                                   Budget& budget) {
    uint32_t m = 0;
    for (auto& v : W.ambient()) m = std::max(m, level_of(v));
    // frame completeness: every level k <= m of every base must be present
    for (auto& v : W.ambient()) {
        if (!v.is_base()) continue;
        for (uint32_t k = 1; k <= m; ++k) {
            Variable need = Variable::prolong(v.base, k);
            if (std::find(W.ambient().begin(), W.ambient().end(), need) == W.ambient().end())
                throw Error("prolongation frame is missing " + need.str());
        }
    }

    NormalFormReport report;
    for (uint32_t i = 0; i < m; ++i) {
        std::vector<Variable> drop;
        for (auto& v : W.ambient())
            if (level_of(v) > i) drop.push_back(v);
        IdealPresentation slice_ideal = eliminate(W, drop, budget);
        for (auto& g : slice_ideal.generators()) {
            Poly image = prolongation_derivative(g, params);
            if (!ideal_member(W, image, budget)) {
                report.normal = false;
                report.fail_level = i;
                report.fail_generator = g;
                report.defect = normal_form(image, W.groebner_basis(budget), budget);
                return report;
            }
        }
    }
    return report;
}

NormalFormReport normal_form_check(const IdealPresentation& W, const ParamTable& params) {
    Budget unlimited;
    return normal_form_check(W, params, unlimited);
}

DominanceReport dominance_check(const IdealPresentation& W, const IdealPresentation& V,
                                std::span<const Variable> target, Budget& budget) {
    std::vector<Variable> drop;
    for (auto& v : W.ambient())
        if (std::find(target.begin(), target.end(), v) == target.end()) drop.push_back(v);
    IdealPresentation projected = eliminate(W, drop, budget);

    std::vector<Variable> tv(target.begin(), target.end());
    std::vector<Variable> va = V.ambient();
    {
        auto a = tv, b = va;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw Error("dominance_check: target coordinates do not match V's frame");
    }
    IdealPresentation reframed(va, projected.generators(), V.order_kind());

    DominanceReport rep;
    for (auto& g : reframed.generators())
        if (!ideal_member(V, g, budget)) {
            rep.dominant = false;
            rep.detail = "projection satisfies " + g.str() + " which does not vanish on the target";
            return rep;
        }
    for (auto& g : V.generators())
        if (!ideal_member(reframed, g, budget)) {
            rep.dominant = false;
            rep.detail = "target relation " + g.str() + " is not implied by the projection";
            return rep;
        }
    rep.detail = "elimination ideal equals the target ideal";
    return rep;
}

DominanceReport dominance_check(const IdealPresentation& W, const IdealPresentation& V,
                                std::span<const Variable> target) {
    Budget unlimited;
    return dominance_check(W, V, target, unlimited);
}

namespace {

ConditionReport run_condition(const std::function<DominanceReport()>& f) {
    ConditionReport r;
    try {
        DominanceReport d = f();
        r.verdict = d.dominant ? Verdict::True : Verdict::False;
        r.detail = d.detail;
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::Inconclusive;
        r.detail = e.what();
    }
    return r;
}

}  // namespace

AxiomReport dcfa_axiom_check(const IdealPresentation& V, std::span<const Variable> v_sigma_frame,
                             const IdealPresentation& U, const IdealPresentation& W,
                             uint32_t scan_depth, const ParamTable& params, Budget& budget) {
    if (v_sigma_frame.size() != V.ambient().size())
        throw Error("dcfa_axiom_check: V^sigma frame size mismatch");
    const auto& X = V.ambient();
    std::vector<Variable> Xs(v_sigma_frame.begin(), v_sigma_frame.end());
    std::vector<Variable> X1, Xs1;
    for (auto& v : X) X1.push_back(Variable::prolong(v.base, 1));
    for (auto& v : Xs) Xs1.push_back(Variable::prolong(v.base, 1));

    AxiomReport report;

    // (a) U projects generically onto V and onto V^sigma
    report.a_onto_v = run_condition([&] { return dominance_check(U, V, X, budget); });
    std::map<Variable, Variable> to_sigma_frame;
    for (size_t i = 0; i < X.size(); ++i) to_sigma_frame[X[i]] = Xs[i];
    IdealPresentation v_sigma = rename_ambient(variety_sigma(V, params), to_sigma_frame, Xs);
    report.a_onto_vsigma = run_condition([&] { return dominance_check(U, v_sigma, Xs, budget); });

    // (b) W projects generically onto U
    std::vector<Variable> u_frame = U.ambient();
    report.b_onto_u = run_condition([&] { return dominance_check(W, U, u_frame, budget); });

    // (c) pi_1(W)^sigma = pi_2(W) under the frame identification
    try {
        std::vector<Variable> drop1 = Xs;
        drop1.insert(drop1.end(), Xs1.begin(), Xs1.end());
        std::vector<Variable> drop2 = X;
        drop2.insert(drop2.end(), X1.begin(), X1.end());
        IdealPresentation pi1 = eliminate(W, drop1, budget);
        IdealPresentation pi2 = eliminate(W, drop2, budget);

        std::map<Variable, Variable> twist = to_sigma_frame;
        for (size_t i = 0; i < X1.size(); ++i) twist[X1[i]] = Xs1[i];
        std::vector<Variable> pi2_frame;
        for (auto& v : pi1.ambient()) pi2_frame.push_back(twist.at(v));
        IdealPresentation pi1_sigma = rename_ambient(variety_sigma(pi1, params), twist, pi2_frame);
        IdealPresentation pi2_reframed(pi2_frame, pi2.generators(), pi2.order_kind());
        bool eq = ideal_equal(pi1_sigma, pi2_reframed, budget);
        report.c_twist.verdict = eq ? Verdict::True : Verdict::False;
        report.c_twist.detail = eq ? "pi_1(W)^sigma and pi_2(W) present the same ideal"
                                   : "pi_1(W)^sigma and pi_2(W) differ";

        // normal-form sub-checks on the two projections
        report.nf_pi1 = normal_form_check(pi1, params, budget);
        report.nf_pi2 = normal_form_check(IdealPresentation(pi2.ambient(), pi2.generators()),
                                          params, budget);
    } catch (const BudgetExceeded& e) {
        report.c_twist.verdict = Verdict::Inconclusive;
        report.c_twist.detail = e.what();
    }

    // dimension data per the reduction m = dim W - dim V + 1
    try {
        report.dim_v = krull_dim(V, budget);
        report.dim_w = krull_dim(W, budget);
        report.suggested_m =
            static_cast<int64_t>(*report.dim_w) - static_cast<int64_t>(*report.dim_v) + 1;
    } catch (const Error&) {
        // unit ideal or budget: dimensions stay unset
    }

    // ADVISORY: consequence scan of the induced (sigma,D)-system
    if (scan_depth > 0) {
        SystemSpec sys;
        std::map<Variable, Poly> to_sigma_d;
        for (size_t i = 0; i < X.size(); ++i) {
            const std::string& base = X[i].base;
            sys.bases.push_back(base);
            to_sigma_d[X[i]] = Poly::var(Variable::sigma_d(base, 0, 0));
            to_sigma_d[X1[i]] = Poly::var(Variable::sigma_d(base, 0, 1));
            to_sigma_d[Xs[i]] = Poly::var(Variable::sigma_d(base, 1, 0));
            to_sigma_d[Xs1[i]] = Poly::var(Variable::sigma_d(base, 1, 1));
        }
        for (auto& g : W.generators()) sys.generators.push_back(substitute(g, to_sigma_d));
        report.advisory = hidden_relation_scan(sys, scan_depth, params, budget);
        report.advisory_ran = true;
    }
    return report;
}

}  // namespace sdf
