#include "sdforge/groebner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sdf {

// ------------------------------------------------------------ MonomialOrder

std::vector<uint32_t> MonomialOrder::exps(const Monomial& m) const {
    std::vector<uint32_t> e(vars_.size(), 0);
    for (auto& [v, x] : m.factors()) {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) throw Error("monomial order: variable " + v.str() + " not in frame");
        e[static_cast<size_t>(it - vars_.begin())] = x;
    }
    return e;
}

int MonomialOrder::cmp_grevlex(std::span<const uint32_t> a, std::span<const uint32_t> b) {
    uint64_t da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller trailing exponent is larger
    }
    return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    auto ea = exps(a), eb = exps(b);
    switch (kind_) {
        case Kind::Lex:
            for (size_t i = 0; i < ea.size(); ++i)
                if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
            return 0;
        case Kind::Grevlex:
            return cmp_grevlex(ea, eb);
        case Kind::Block: {
            int c = cmp_grevlex(std::span(ea).first(split_), std::span(eb).first(split_));
            if (c != 0) return c;
            return cmp_grevlex(std::span(ea).subspan(split_), std::span(eb).subspan(split_));
        }
    }
    return 0;
}

// ------------------------------------------------------- IdealPresentation

IdealPresentation::IdealPresentation(std::vector<Variable> ambient, std::vector<Poly> generators,
                                     MonomialOrder::Kind order_kind)
    : ambient_(std::move(ambient)), order_kind_(order_kind) {
    for (auto& g : generators)
        if (!g.is_zero()) gens_.push_back(std::move(g));
    for (auto& g : gens_)
        for (auto& v : g.variables())
            if (std::find(ambient_.begin(), ambient_.end(), v) == ambient_.end())
                throw Error("generator mentions variable " + v.str() + " outside the ambient frame");
}

const Basis& IdealPresentation::groebner_basis(Budget& budget) const {
    if (!basis_) basis_ = std::make_shared<const Basis>(buchberger(gens_, order(), budget));
    return *basis_;
}

const Basis& IdealPresentation::groebner_basis() const {
    Budget unlimited;
    return groebner_basis(unlimited);
}

std::string IdealPresentation::str() const {
    std::ostringstream os;
    os << "{ ";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    if (gens_.empty()) os << "0";
    os << " }";
    return os.str();
}

// -------------------------------------------------- indexed internal forms

namespace {

// exponent-vector representation relative to a fixed frame; all hot-path
// comparisons avoid variable lookups
struct IMono {
    std::vector<uint32_t> e;
    uint64_t deg = 0;
};

struct ITerm {
    IMono m;
    CoeffElem c;
};

struct IPoly {
    std::vector<ITerm> t;  // sorted descending by the active order
    bool zero() const { return t.empty(); }
    const IMono& lm() const { return t.front().m; }
    const CoeffElem& lc() const { return t.front().c; }
};

struct Ctx {
    MonomialOrder::Kind kind;
    size_t split;
    std::vector<Variable> vars;
    std::map<Variable, size_t> pos;

    explicit Ctx(const MonomialOrder& ord)
        : kind(ord.kind()), split(ord.block_split()), vars(ord.vars()) {
        for (size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = i;
    }

    int cmp_range(const IMono& a, const IMono& b, size_t lo, size_t hi) const {
        uint64_t da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = hi; i-- > lo;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

    int cmp(const IMono& a, const IMono& b) const {
        switch (kind) {
            case MonomialOrder::Kind::Lex:
                for (size_t i = 0; i < a.e.size(); ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            case MonomialOrder::Kind::Grevlex:
                if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
                return cmp_range(a, b, 0, a.e.size());
            case MonomialOrder::Kind::Block: {
                int c = cmp_range(a, b, 0, split);
                if (c != 0) return c;
                return cmp_range(a, b, split, a.e.size());
            }
        }
        return 0;
    }

    IMono to_imono(const Monomial& m) const {
        IMono r;
        r.e.assign(vars.size(), 0);
        for (auto& [v, x] : m.factors()) {
            auto it = pos.find(v);
            if (it == pos.end())
                throw Error("monomial order: variable " + v.str() + " not in frame");
            r.e[it->second] = x;
        }
        r.deg = m.degree();
        return r;
    }

    Monomial to_monomial(const IMono& m) const {
        Monomial r;
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) r = r * Monomial::var(vars[i], m.e[i]);
        return r;
    }

    IPoly to_ipoly(const Poly& p) const {
        IPoly r;
        r.t.reserve(p.terms().size());
        for (auto& [m, c] : p.terms()) r.t.push_back({to_imono(m), c});
        std::sort(r.t.begin(), r.t.end(),
                  [&](const ITerm& a, const ITerm& b) { return cmp(a.m, b.m) > 0; });
        return r;
    }

    Poly to_poly(const IPoly& p) const {
        std::vector<Term> ts;
        ts.reserve(p.t.size());
        for (auto& [m, c] : p.t) ts.emplace_back(to_monomial(m), c);
        return Poly::from_terms(std::move(ts));
    }
};

bool divides(const IMono& a, const IMono& b) {  // a | b
    if (a.deg > b.deg) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

IMono quotient(const IMono& b, const IMono& a) {  // b / a
    IMono r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    r.deg = b.deg - a.deg;
    return r;
}

IMono lcm(const IMono& a, const IMono& b) {
    IMono r;
    r.e.resize(a.e.size());
    r.deg = 0;
    for (size_t i = 0; i < a.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

IMono product(const IMono& a, const IMono& b) {
    IMono r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    r.deg = a.deg + b.deg;
    return r;
}

bool coprime(const IMono& a, const IMono& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

bool equal(const IMono& a, const IMono& b) { return a.deg == b.deg && a.e == b.e; }

// a - c * m * b
IPoly subtract_scaled(const IPoly& a, const CoeffElem& c, const IMono& m, const IPoly& b,
                      const Ctx& ctx) {
    IPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    IMono mb;
    bool mb_valid = false;
    while (i < a.t.size() || j < b.t.size()) {
        int s;
        if (j < b.t.size() && !mb_valid) {
            mb = product(b.t[j].m, m);
            mb_valid = true;
        }
        if (i == a.t.size())
            s = -1;
        else if (j == b.t.size())
            s = 1;
        else
            s = ctx.cmp(a.t[i].m, mb);
        if (s > 0) {
            r.t.push_back(a.t[i++]);
        } else if (s < 0) {
            r.t.push_back({mb, -(c * b.t[j].c)});
            ++j;
            mb_valid = false;
        } else {
            CoeffElem x = a.t[i].c - c * b.t[j].c;
            if (!x.is_zero()) r.t.push_back({a.t[i].m, std::move(x)});
            ++i, ++j;
            mb_valid = false;
        }
    }
    return r;
}

// full normal form: every term reduced
IPoly reduce_full(IPoly p, const std::vector<IPoly>& basis, const Ctx& ctx, Budget& budget) {
    IPoly tail;
    while (!p.zero()) {
        bool reduced = false;
        for (auto& g : basis) {
            if (g.zero() || !divides(g.lm(), p.lm())) continue;
            budget.spend();
            p = subtract_scaled(p, p.lc() / g.lc(), quotient(p.lm(), g.lm()), g, ctx);
            reduced = true;
            break;
        }
        if (!reduced) {
            tail.t.push_back(std::move(p.t.front()));
            p.t.erase(p.t.begin());
        }
    }
    return tail;
}

IPoly make_monic(IPoly p) {
    if (p.zero() || p.lc().is_one()) return p;
    CoeffElem inv = p.lc().inverse();
    for (auto& [_, c] : p.t) c *= inv;
    return p;
}

}  // namespace

Basis buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord, Budget& budget) {
    Ctx ctx(ord);
    std::vector<IPoly> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        auto r = reduce_full(ctx.to_ipoly(g), G, ctx, budget);
        if (!r.zero()) G.push_back(make_monic(std::move(r)));
    }

    struct Pair {
        size_t i, j;
        IMono l;
    };
    // pending pairs plus the treated-set for Buchberger's chain criterion
    std::vector<Pair> pending;
    std::vector<std::vector<bool>> treated;  // treated[j][i], i < j
    auto add_element_pairs = [&](size_t j) {
        treated.resize(G.size());
        treated[j].assign(j, false);
        for (size_t i = 0; i < j; ++i) pending.push_back({i, j, lcm(G[i].lm(), G[j].lm())});
    };
    for (size_t j = 0; j < G.size(); ++j) add_element_pairs(j);

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.l.deg != b.l.deg) return a.l.deg < b.l.deg;
        int c = ctx.cmp(a.l, b.l);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    while (!pending.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k)
            if (pair_less(pending[k], pending[best])) best = k;
        Pair p = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        treated[p.j][p.i] = true;
        budget.spend();

        if (coprime(G[p.i].lm(), G[p.j].lm())) continue;  // first criterion
        // chain criterion: some k with lm_k | lcm and both subpairs treated
        bool chain = false;
        for (size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == p.i || k == p.j || !divides(G[k].lm(), p.l)) continue;
            auto is_treated = [&](size_t a, size_t b) {
                if (a > b) std::swap(a, b);
                return treated[b][a];
            };
            if (is_treated(p.i, k) && is_treated(p.j, k)) chain = true;
        }
        if (chain) continue;

        IPoly lhs;
        lhs.t.reserve(G[p.i].t.size());
        IMono mi = quotient(p.l, G[p.i].lm());
        for (auto& [m, c] : G[p.i].t) lhs.t.push_back({product(m, mi), c / G[p.i].lc()});
        IPoly s = subtract_scaled(lhs, G[p.j].lc().inverse(), quotient(p.l, G[p.j].lm()), G[p.j], ctx);
        auto r = reduce_full(std::move(s), G, ctx, budget);
        if (!r.zero()) {
            G.push_back(make_monic(std::move(r)));
            add_element_pairs(G.size() - 1);
        }
    }

    // minimalize: drop members whose lead is divisible by another lead
    std::vector<char> keep(G.size(), 1);
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(G[j].lm(), G[i].lm()) && (!equal(G[i].lm(), G[j].lm()) || j < i))
                keep[i] = 0;
        }
    std::vector<IPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(G[i]));

    // inter-reduce tails
    std::vector<IPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<IPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(make_monic(reduce_full(minimal[i], others, ctx, budget)));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const IPoly& a, const IPoly& b) { return ctx.cmp(a.lm(), b.lm()) > 0; });

    Basis basis;
    basis.order = ord;
    for (auto& g : reduced)
        if (!g.zero()) basis.polys.push_back(ctx.to_poly(g));
    return basis;
}

Poly normal_form(const Poly& p, const Basis& basis, Budget& budget) {
    Ctx ctx(basis.order);
    std::vector<IPoly> G;
    G.reserve(basis.polys.size());
    for (auto& g : basis.polys) G.push_back(ctx.to_ipoly(g));
    return ctx.to_poly(reduce_full(ctx.to_ipoly(p), G, ctx, budget));
}

bool ideal_member(const IdealPresentation& I, const Poly& p, Budget& budget) {
    if (p.is_zero()) return true;
    return normal_form(p, I.groebner_basis(budget), budget).is_zero();
}

bool ideal_member(const IdealPresentation& I, const Poly& p) {
    Budget unlimited;
    return ideal_member(I, p, unlimited);
}

IdealPresentation eliminate(const IdealPresentation& I, std::span<const Variable> drop,
                            Budget& budget) {
    std::vector<Variable> kept;
    for (auto& v : I.ambient())
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) kept.push_back(v);
    for (auto& v : drop)
        if (std::find(I.ambient().begin(), I.ambient().end(), v) == I.ambient().end())
            throw Error("eliminate: variable " + v.str() + " not in the ambient frame");
    if (drop.empty()) return I;

    std::vector<Variable> frame(drop.begin(), drop.end());
    frame.insert(frame.end(), kept.begin(), kept.end());
    MonomialOrder block{MonomialOrder::Kind::Block, frame, drop.size()};
    Basis b = buchberger(I.generators(), block, budget);

    std::vector<Poly> kept_gens;
    for (auto& g : b.polys) {
        bool mentions_dropped = false;
        for (auto& v : g.variables())
            if (std::find(drop.begin(), drop.end(), v) != drop.end()) {
                mentions_dropped = true;
                break;
            }
        if (!mentions_dropped) kept_gens.push_back(g);
    }
    return IdealPresentation(kept, kept_gens, I.order_kind());
}

IdealPresentation eliminate(const IdealPresentation& I, std::span<const Variable> drop) {
    Budget unlimited;
    return eliminate(I, drop, unlimited);
}

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J, Budget& budget) {
    if (I.ambient() != J.ambient()) throw Error("ideal_equal: ambient frames differ");
    for (auto& g : I.generators())
        if (!ideal_member(J, g, budget)) return false;
    for (auto& g : J.generators())
        if (!ideal_member(I, g, budget)) return false;
    return true;
}

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J) {
    Budget unlimited;
    return ideal_equal(I, J, unlimited);
}

size_t krull_dim(const IdealPresentation& I, Budget& budget) {
    // dimension via maximal independent variable subsets modulo LT(I);
    // needs a graded order
    const Basis* basis;
    IdealPresentation graded;
    if (I.order_kind() == MonomialOrder::Kind::Grevlex) {
        basis = &I.groebner_basis(budget);
    } else {
        graded = IdealPresentation(I.ambient(), I.generators(), MonomialOrder::Kind::Grevlex);
        basis = &graded.groebner_basis(budget);
    }
    const Basis& b = *basis;
    for (auto& g : b.polys)
        if (g.is_constant() && !g.is_zero()) throw Error("krull_dim: unit ideal (empty variety)");

    size_t n = I.ambient().size();
    std::vector<uint64_t> lead_masks;
    for (auto& g : b.polys) {
        uint64_t mask = 0;
        Monomial lm;
        bool first = true;
        for (auto& [m, _] : g.terms())
            if (first || b.order.cmp(m, lm) > 0) {
                lm = m;
                first = false;
            }
        for (auto& [v, _] : lm.factors()) {
            auto it = std::find(I.ambient().begin(), I.ambient().end(), v);
            mask |= uint64_t(1) << (it - I.ambient().begin());
        }
        lead_masks.push_back(mask);
    }
    if (n > 62) throw Error("krull_dim: too many variables");
    for (size_t k = n;; --k) {
        // any independent subset of size k?
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            uint64_t mask = 0;
            for (auto i : idx) mask |= uint64_t(1) << i;
            bool independent = true;
            for (auto lm : lead_masks)
                if ((lm & ~mask) == 0) {
                    independent = false;
                    break;
                }
            if (independent) return k;
            size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (k == 0) break;
    }
    return 0;
}

size_t krull_dim(const IdealPresentation& I) {
    Budget unlimited;
    return krull_dim(I, unlimited);
}

IdealPresentation rename_ambient(const IdealPresentation& I,
                                 const std::map<Variable, Variable>& names,
                                 std::vector<Variable> new_ambient) {
    std::map<Variable, Poly> binds;
    for (auto& [from, to] : names) binds[from] = Poly::var(to);
    std::vector<Poly> gens;
    for (auto& g : I.generators()) gens.push_back(substitute(g, binds));
    return IdealPresentation(std::move(new_ambient), std::move(gens), I.order_kind());
}

}  // namespace sdf
