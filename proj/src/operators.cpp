#include "sdforge/operators.hpp"

#include <algorithm>
#include <random>

namespace sdf {

Poly apply_d(const Poly& p, const ParamTable& params) {
    Poly result;
    for (auto& [m, c] : p.terms()) {
        // D(c * prod v^e) = D(c) * prod v^e + c * sum_i e_i v_i^(e_i-1) D(v_i) * rest
        CoeffElem dc = params.apply_d(c);
        if (!dc.is_zero()) result += Poly::term(m, dc);
        for (auto& [v, e] : m.factors()) {
            if (v.kind != VarKind::SigmaD)
                throw Error("apply_d: variable " + v.str() + " is not a sigma-D variable");
            Variable dv = Variable::sigma_d(v.base, v.a, v.b + 1);
            Monomial rest = *m.divide(Monomial::var(v));
            result += Poly::term(rest * Monomial::var(dv), c * CoeffElem(Int(e)));
        }
    }
    return result;
}

Poly apply_sigma(const Poly& p, uint32_t k, const ParamTable& params) {
    Poly result;
    for (auto& [m, c] : p.terms()) {
        Monomial shifted;
        for (auto& [v, e] : m.factors()) {
            if (v.kind != VarKind::SigmaD)
                throw Error("apply_sigma: variable " + v.str() + " is not a sigma-D variable");
            shifted = shifted * Monomial::var(Variable::sigma_d(v.base, v.a + k, v.b), e);
        }
        result += Poly::term(shifted, params.apply_sigma(c, k));
    }
    return result;
}

IdealPresentation variety_sigma(const IdealPresentation& V, const ParamTable& params) {
    std::vector<Poly> gens;
    for (auto& g : V.generators()) {
        std::vector<Term> ts;
        for (auto& [m, c] : g.terms()) ts.emplace_back(m, params.apply_sigma(c, 1));
        gens.push_back(Poly::from_terms(std::move(ts)));
    }
    IdealPresentation r(V.ambient(), std::move(gens), V.order_kind());
    r.assert_prime(V.assume_prime());
    return r;
}

RewriteRule::RewriteRule(Variable lhs_var, Poly rhs_poly)
    : lhs(std::move(lhs_var)), rhs(std::move(rhs_poly)) {
    if (lhs.kind != VarKind::SigmaD || lhs.a == 0)
        throw Error("rewrite rule must eliminate a variable of positive sigma-power");
    for (auto& v : rhs.variables()) {
        if (v.kind != VarKind::SigmaD)
            throw Error("rewrite rule right-hand side must be in sigma-D variables");
        if (v.a >= lhs.a)
            throw Error("rule is not orientable: right-hand side variable " + v.str() +
                        " does not lower the sigma-power of " + lhs.str());
    }
}

namespace {

const RewriteRule* matching_rule(const Variable& v, const std::vector<RewriteRule>& rules) {
    const RewriteRule* best = nullptr;
    for (auto& r : rules) {
        if (v.kind != VarKind::SigmaD || v.base != r.lhs.base) continue;
        if (v.a < r.lhs.a || v.b < r.lhs.b) continue;
        // prefer the most specific match: highest D-order, then sigma-power
        if (!best || r.lhs.b > best->lhs.b || (r.lhs.b == best->lhs.b && r.lhs.a > best->lhs.a))
            best = &r;
    }
    return best;
}

}  // namespace

Poly sigma_reduce(const Poly& p, const std::vector<RewriteRule>& rules, const ParamTable& params,
                  ReduceStrategy strategy, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Poly cur = p;
    while (true) {
        // collect rewritable variables present in cur
        std::vector<std::pair<Variable, const RewriteRule*>> hits;
        for (auto& v : cur.variables())
            if (auto* r = matching_rule(v, rules)) hits.emplace_back(v, r);
        if (hits.empty()) return cur;

        size_t pick = 0;
        if (strategy == ReduceStrategy::Outermost) {
            for (size_t i = 1; i < hits.size(); ++i)
                if (hits[i].first.a > hits[pick].first.a) pick = i;
        } else {
            pick = std::uniform_int_distribution<size_t>(0, hits.size() - 1)(rng);
        }
        auto& [v, rule] = hits[pick];
        Poly image = rule->rhs;
        for (uint32_t j = rule->lhs.b; j < v.b; ++j) image = apply_d(image, params);
        if (v.a > rule->lhs.a) image = apply_sigma(image, v.a - rule->lhs.a, params);
        cur = substitute(cur, {{v, image}});
    }
}

ScanResult hidden_relation_scan(const SystemSpec& S, uint32_t depth, const ParamTable& params,
                                Budget& budget) {
    auto normalized = [&](const Poly& g) {
        return S.rules.empty() ? g : sigma_reduce(g, S.rules, params);
    };

    std::vector<Poly> inputs;
    for (auto& g : S.generators) inputs.push_back(normalized(g));

    // window: the variables of the (normalized) input generators
    std::vector<Variable> window;
    for (auto& g : inputs)
        for (auto& v : g.variables()) window.push_back(v);
    std::sort(window.begin(), window.end());
    window.erase(std::unique(window.begin(), window.end()), window.end());

    ScanResult result;
    result.window = window;

    // closure under sigma^i D^j for i + j <= depth (the operators commute)
    std::vector<Poly> closure;
    bool complete = true;
    try {
        for (auto& g : inputs) {
            Poly d_tower = g;
            for (uint32_t j = 0; j <= depth; ++j) {
                Poly s_tower = d_tower;
                for (uint32_t i = 0; i + j <= depth; ++i) {
                    Poly h = normalized(s_tower);
                    if (!h.is_zero()) closure.push_back(h);
                    if (i + j < depth) s_tower = apply_sigma(s_tower, 1, params);
                }
                if (j < depth) d_tower = apply_d(d_tower, params);
            }
        }
    } catch (const BudgetExceeded&) {
        complete = false;
    }

    std::vector<Variable> ambient;
    for (auto& g : closure)
        for (auto& v : g.variables()) ambient.push_back(v);
    std::sort(ambient.begin(), ambient.end());
    ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
    for (auto& v : window)
        if (std::find(ambient.begin(), ambient.end(), v) == ambient.end()) ambient.push_back(v);

    std::vector<Variable> drop;
    for (auto& v : ambient)
        if (std::find(window.begin(), window.end(), v) == window.end()) drop.push_back(v);

    IdealPresentation consequences(ambient, closure);
    IdealPresentation input_ideal(window, inputs);
    try {
        IdealPresentation projected = eliminate(consequences, drop, budget);
        // rebuild over the window frame (eliminate keeps relative order)
        result.window_ideal = IdealPresentation(window, projected.generators());
        for (auto& g : projected.generators())
            if (!ideal_member(input_ideal, g, budget)) result.new_relations.push_back(g);
        result.complete = complete;
    } catch (const BudgetExceeded&) {
        result.complete = false;
        result.window_ideal = input_ideal;
    }
    return result;
}

ScanResult hidden_relation_scan(const SystemSpec& S, uint32_t depth, const ParamTable& params) {
    Budget unlimited;
    return hidden_relation_scan(S, depth, params, unlimited);
}

}  // namespace sdf
