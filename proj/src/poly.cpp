#include "sdforge/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sdf {

std::string Variable::str() const {
    switch (kind) {
        case VarKind::SigmaD:
            if (a == 0 && b == 0) return base;
            return base + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case VarKind::Prolong:
            return base + "@" + std::to_string(a);
        case VarKind::Arc:
            return base + "~" + std::to_string(a);
        case VarKind::Plain:
            return base;
    }
    return base;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Variable v, uint32_t exp) {
    Monomial m;
    if (exp > 0) m.e_.emplace_back(std::move(v), exp);
    return m;
}

uint64_t Monomial::degree() const {
    uint64_t d = 0;
    for (auto& [_, e] : e_) d += e;
    return d;
}

uint32_t Monomial::exponent(const Variable& v) const {
    for (auto& [w, e] : e_)
        if (w == v) return e;
    return 0;
}

bool Monomial::mentions_only(std::span<const Variable> vars) const {
    for (auto& [w, _] : e_)
        if (std::find(vars.begin(), vars.end(), w) == vars.end()) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first))
            r.e_.push_back(*a++);
        else if (a == e_.end() || b->first < a->first)
            r.e_.push_back(*b++);
        else {
            r.e_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = e_.begin();
    for (auto& [v, e] : o.e_) {
        while (a != e_.end() && a->first < v) r.e_.push_back(*a++);
        if (a == e_.end() || a->first != v || a->second < e) return std::nullopt;
        if (a->second > e) r.e_.emplace_back(a->first, a->second - e);
        ++a;
    }
    while (a != e_.end()) r.e_.push_back(*a++);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.e_.begin(), j = b.e_.begin();
    while (i != a.e_.end() || j != b.e_.end()) {
        if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first))
            r.e_.push_back(*i++);
        else if (i == a.e_.end() || j->first < i->first)
            r.e_.push_back(*j++);
        else {
            r.e_.emplace_back(i->first, std::max(i->second, j->second));
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first == b->first) return false;
        if (a->first < b->first)
            ++a;
        else
            ++b;
    }
    return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto i = a.e_.begin();
    auto j = b.e_.begin();
    while (i != a.e_.end() && j != b.e_.end()) {
        if (i->first != j->first) return i->first < j->first ? 1 : -1;
        if (i->second != j->second) return i->second < j->second ? -1 : 1;
        ++i, ++j;
    }
    if (i != a.e_.end()) return 1;
    if (j != b.e_.end()) return -1;
    return 0;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : e_) {
        if (!first) os << "*";
        first = false;
        os << v.str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

// -------------------------------------------------------------------- Poly

Poly::Poly(CoeffElem c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

Poly Poly::var(Variable v, uint32_t exp) {
    Poly p;
    p.terms_.emplace_back(Monomial::var(std::move(v), exp), CoeffElem(Int(1)));
    return p;
}

Poly Poly::term(Monomial m, CoeffElem c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

Poly Poly::from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return Monomial::cmp(a.first, b.first) > 0; });
    Poly r;
    for (auto& [m, c] : ts) {
        if (!r.terms_.empty() && r.terms_.back().first == m)
            r.terms_.back().second += c;
        else
            r.terms_.emplace_back(std::move(m), std::move(c));
        if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
    }
    return r;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

const CoeffElem& Poly::constant_value() const {
    static const CoeffElem zero;
    if (terms_.empty()) return zero;
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_[0].second;
}

uint64_t Poly::total_degree() const {
    uint64_t d = 0;
    for (auto& [m, _] : terms_) d = std::max(d, m.degree());
    return d;
}

CoeffElem Poly::coefficient(const Monomial& m) const {
    for (auto& [mm, c] : terms_)
        if (mm == m) return c;
    return CoeffElem{};
}

std::vector<Variable> Poly::variables() const {
    std::vector<Variable> vs;
    for (auto& [m, _] : terms_)
        for (auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [_, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        int c;
        if (a == terms_.end())
            c = -1;
        else if (b == o.terms_.end())
            c = 1;
        else
            c = Monomial::cmp(a->first, b->first);
        if (c > 0)
            r.terms_.push_back(*a++);
        else if (c < 0)
            r.terms_.push_back(*b++);
        else {
            CoeffElem s = a->second + b->second;
            if (!s.is_zero()) r.terms_.emplace_back(a->first, std::move(s));
            ++a, ++b;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) ts.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(ts));
}

Poly Poly::operator*(const CoeffElem& c) const {
    if (c.is_zero()) return {};
    Poly r(*this);
    for (auto& [_, x] : r.terms_) x *= c;
    return r;
}

Poly Poly::operator/(const CoeffElem& c) const { return *this * c.inverse(); }

Poly Poly::pow(uint32_t k) const {
    Poly r{CoeffElem(Int(1))};
    for (uint32_t i = 0; i < k; ++i) r *= *this;
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        CoeffElem ac = c;
        bool neg = false;
        if (auto r = c.as_rational()) {
            if (*r < 0) {
                neg = true;
                ac = -c;
            }
        } else if (c.num().leading_coeff() < 0) {
            neg = true;
            ac = -c;
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (m.is_one()) {
            os << ac.str();
        } else if (ac.is_one()) {
            os << m.str();
        } else {
            std::string cs = ac.str();
            // parenthesize multi-term numerators when gluing onto a monomial
            if (ac.den().is_one() && ac.num().terms().size() > 1) cs = "(" + cs + ")";
            os << cs << "*" << m.str();
        }
    }
    return os.str();
}

// ------------------------------------------------------------ substitution

Poly substitute(const Poly& p, const std::map<Variable, Poly>& bindings) {
    Poly r;
    for (auto& [m, c] : p.terms()) {
        Poly t{c};
        Monomial rest;
        for (auto& [v, e] : m.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                rest = rest * Monomial::var(v, e);
            else
                t *= it->second.pow(e);
        }
        r += t * Poly::term(rest, CoeffElem(Int(1)));
    }
    return r;
}

CoeffElem evaluate(const Poly& p, const Point& a) {
    CoeffElem r;
    for (auto& [m, c] : p.terms()) {
        CoeffElem t = c;
        for (auto& [v, e] : m.factors()) {
            auto it = a.find(v);
            if (it == a.end()) throw Error("evaluate: point not total, missing " + v.str());
            t *= it->second.pow(e);
        }
        r += t;
    }
    return r;
}

Poly partial(const Poly& p, const Variable& v) {
    std::vector<Term> ts;
    for (auto& [m, c] : p.terms()) {
        uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial q = *m.divide(Monomial::var(v));
        ts.emplace_back(std::move(q), c * CoeffElem(Int(e)));
    }
    return Poly::from_terms(std::move(ts));
}

Poly scaled_partial(const Poly& p, std::span<const Variable> frame, std::span<const uint32_t> s) {
    if (frame.size() != s.size()) throw Error("scaled_partial: frame/multi-index size mismatch");
    Poly r = p;
    Int fact(1);
    for (size_t i = 0; i < frame.size(); ++i) {
        for (uint32_t k = 0; k < s[i]; ++k) {
            r = partial(r, frame[i]);
            fact *= Int(k + 1);
        }
    }
    return r / CoeffElem(fact);
}

std::vector<std::vector<uint32_t>> multi_indices(size_t nvars, uint32_t m) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(nvars, 0);
    // within each total degree, first position varies most significantly
    auto rec = [&](auto&& self, size_t pos, uint32_t remaining) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (uint32_t e = remaining; e + 1 != 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    for (uint32_t d = 1; d <= m; ++d)
        if (nvars > 0) rec(rec, 0, d);
    return out;
}

std::vector<CoeffElem> taylor_row(const Poly& p, const Point& a, uint32_t m,
                                  std::span<const Variable> frame) {
    // shift to local coordinates: coefficients of p(a + X) are the D_s p(a)
    std::map<Variable, Poly> shift;
    for (auto& v : frame) {
        auto it = a.find(v);
        if (it == a.end()) throw Error("taylor_row: point missing " + v.str());
        shift[v] = Poly::var(v) + Poly(it->second);
    }
    Poly q = substitute(p, shift);
    std::vector<CoeffElem> row;
    for (auto& s : multi_indices(frame.size(), m)) {
        Monomial mono;
        for (size_t i = 0; i < frame.size(); ++i)
            if (s[i] > 0) mono = mono * Monomial::var(frame[i], s[i]);
        row.push_back(q.coefficient(mono));
    }
    return row;
}

}  // namespace sdf
