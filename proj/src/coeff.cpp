#include "sdforge/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace sdf {

// ---------------------------------------------------------------- PMonomial

PMonomial PMonomial::var(const std::string& name, uint32_t exp) {
    PMonomial m;
    if (exp > 0) m.e_.emplace_back(name, exp);
    return m;
}

uint64_t PMonomial::degree() const {
    uint64_t d = 0;
    for (auto& [_, e] : e_) d += e;
    return d;
}

uint32_t PMonomial::exponent(const std::string& name) const {
    for (auto& [n, e] : e_)
        if (n == name) return e;
    return 0;
}

PMonomial PMonomial::operator*(const PMonomial& o) const {
    PMonomial r;
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

std::optional<PMonomial> PMonomial::divide(const PMonomial& o) const {
    PMonomial r;
    auto a = e_.begin();
    for (auto& [n, e] : o.e_) {
        while (a != e_.end() && a->first < n) r.e_.push_back(*a++);
        if (a == e_.end() || a->first != n || a->second < e) return std::nullopt;
        if (a->second > e) r.e_.emplace_back(a->first, a->second - e);
        ++a;
    }
    while (a != e_.end()) r.e_.push_back(*a++);
    return r;
}

int PMonomial::cmp(const PMonomial& a, const PMonomial& b) {
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

std::string PMonomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [n, e] : e_) {
        if (!first) os << "*";
        first = false;
        os << n;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(Int c) {
    if (c != 0) terms_.emplace_back(PMonomial{}, std::move(c));
}

ParamPoly ParamPoly::var(const std::string& name) {
    ParamPoly p;
    p.terms_.emplace_back(PMonomial::var(name), Int(1));
    return p;
}

ParamPoly ParamPoly::term(PMonomial m, Int c) {
    ParamPoly p;
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

uint64_t ParamPoly::degree() const {
    uint64_t d = 0;
    for (auto& [m, _] : terms_) d = std::max(d, m.degree());
    return d;
}

uint32_t ParamPoly::degree_in(const std::string& name) const {
    uint32_t d = 0;
    for (auto& [m, _] : terms_) d = std::max(d, m.exponent(name));
    return d;
}

const Int& ParamPoly::leading_coeff() const {
    static const Int zero(0);
    return terms_.empty() ? zero : terms_.front().second;
}

void ParamPoly::param_names(std::vector<std::string>& out) const {
    for (auto& [m, _] : terms_)
        for (auto& [n, e] : m.factors()) out.push_back(n);
}

ParamPoly ParamPoly::from_unsorted(std::vector<std::pair<PMonomial, Int>> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return PMonomial::cmp(a.first, b.first) > 0; });
    ParamPoly r;
    for (auto& [m, c] : ts) {
        if (!r.terms_.empty() && r.terms_.back().first == m)
            r.terms_.back().second += c;
        else
            r.terms_.emplace_back(std::move(m), std::move(c));
        if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
    }
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& [_, c] : r.terms_) c = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r;
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        int c;
        if (a == terms_.end())
            c = -1;
        else if (b == o.terms_.end())
            c = 1;
        else
            c = PMonomial::cmp(a->first, b->first);
        if (c > 0)
            r.terms_.push_back(*a++);
        else if (c < 0)
            r.terms_.push_back(*b++);
        else {
            Int s = a->second + b->second;
            if (s != 0) r.terms_.emplace_back(a->first, std::move(s));
            ++a, ++b;
        }
    }
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    std::vector<std::pair<PMonomial, Int>> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) ts.emplace_back(ma * mb, ca * cb);
    return from_unsorted(std::move(ts));
}

ParamPoly ParamPoly::operator*(const Int& c) const {
    if (c == 0) return {};
    ParamPoly r(*this);
    for (auto& [_, x] : r.terms_) x *= c;
    return r;
}

ParamPoly ParamPoly::derivative(const std::string& name) const {
    std::vector<std::pair<PMonomial, Int>> ts;
    for (auto& [m, c] : terms_) {
        uint32_t e = m.exponent(name);
        if (e == 0) continue;
        PMonomial q = *m.divide(PMonomial::var(name));
        ts.emplace_back(std::move(q), c * e);
    }
    return from_unsorted(std::move(ts));
}

Int ParamPoly::content() const {
    Int g(0);
    for (auto& [_, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g < 0 ? Int(-g) : g;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw Error("exact_div: division by zero polynomial");
    ParamPoly rem = a, quot;
    while (!rem.is_zero()) {
        auto& [lm, lc] = rem.terms_.front();
        auto q = lm.divide(b.terms_.front().first);
        if (!q || lc % b.terms_.front().second != 0)
            throw Error("exact_div: inexact polynomial division");
        ParamPoly t = term(*q, lc / b.terms_.front().second);
        quot = quot + t;
        rem = rem - t * b;
    }
    return quot;
}

namespace {

// dense univariate view in parameter v; coefficients do not mention v
std::vector<ParamPoly> univariate_view(const ParamPoly& p, const std::string& v) {
    std::vector<ParamPoly> cs(p.degree_in(v) + 1);
    for (auto& [m, c] : p.terms()) {
        uint32_t e = m.exponent(v);
        PMonomial rest = *m.divide(PMonomial::var(v, e));
        cs[e] = cs[e] + ParamPoly::term(rest, c);
    }
    return cs;
}

ParamPoly from_univariate(const std::vector<ParamPoly>& cs, const std::string& v) {
    ParamPoly r;
    for (size_t e = 0; e < cs.size(); ++e) {
        ParamPoly ve = ParamPoly::term(PMonomial::var(v, static_cast<uint32_t>(e)), Int(1));
        r = r + cs[e] * ve;
    }
    return r;
}

ParamPoly vec_content(const std::vector<ParamPoly>& cs) {
    ParamPoly g;
    for (auto& c : cs) g = ParamPoly::gcd(g, c);
    return g;
}

size_t vec_deg(const std::vector<ParamPoly>& cs) {
    size_t d = cs.size();
    while (d > 0 && cs[d - 1].is_zero()) --d;
    return d;  // number of coefficients; degree + 1, 0 for zero
}

// pseudo-remainder of f by g, both univariate coefficient vectors in v
std::vector<ParamPoly> pseudo_rem(std::vector<ParamPoly> f, const std::vector<ParamPoly>& g) {
    size_t df = vec_deg(f), dg = vec_deg(g);
    const ParamPoly& lg = g[dg - 1];
    while (df >= dg) {
        ParamPoly lf = f[df - 1];
        for (size_t i = 0; i < df; ++i) f[i] = f[i] * lg;
        for (size_t i = 0; i < dg; ++i) f[df - dg + i] = f[df - dg + i] - lf * g[i];
        f[df - 1] = ParamPoly{};
        size_t nd = vec_deg(f);
        if (nd == df) throw Error("pseudo_rem: no degree drop");
        df = nd;
        if (df == 0) break;
    }
    f.resize(std::max<size_t>(df, 1));
    return f;
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    auto norm_sign = [](ParamPoly p) {
        if (!p.terms_.empty() && p.terms_.front().second < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return norm_sign(b);
    if (b.is_zero()) return norm_sign(a);
    if (a.is_constant() && b.is_constant())
        return ParamPoly(boost::multiprecision::gcd(a.leading_coeff(), b.leading_coeff()));

    std::vector<std::string> names;
    a.param_names(names);
    b.param_names(names);
    std::string v = *std::max_element(names.begin(), names.end());

    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // main variable missing from one side: gcd divides its content
        const ParamPoly& flat = a.degree_in(v) == 0 ? a : b;
        const ParamPoly& other = a.degree_in(v) == 0 ? b : a;
        ParamPoly g = flat;
        for (auto& c : univariate_view(other, v)) g = gcd(g, c);
        return norm_sign(g);
    }

    auto fa = univariate_view(a, v);
    auto fb = univariate_view(b, v);
    ParamPoly ca = vec_content(fa), cb = vec_content(fb);
    for (auto& c : fa) c = exact_div(c, ca);
    for (auto& c : fb) c = exact_div(c, cb);

    // primitive PRS
    std::vector<ParamPoly> f = std::move(fa), g = std::move(fb);
    if (vec_deg(f) < vec_deg(g)) std::swap(f, g);
    ParamPoly pp_gcd;
    while (true) {
        auto r = pseudo_rem(f, g);
        if (vec_deg(r) == 0) {
            pp_gcd = from_univariate(g, v);  // g divides f up to content
            break;
        }
        if (vec_deg(r) == 1) {
            pp_gcd = ParamPoly(Int(1));  // primitive parts coprime in v
            break;
        }
        ParamPoly cr = vec_content(r);
        for (auto& c : r) c = exact_div(c, cr);
        f = std::move(g);
        g = std::move(r);
    }
    return norm_sign(gcd(ca, cb) * pp_gcd);
}

CoeffElem ParamPoly::substituted(const std::function<CoeffElem(const std::string&)>& image) const {
    CoeffElem r;
    for (auto& [m, c] : terms_) {
        CoeffElem t{c};
        for (auto& [n, e] : m.factors()) t *= image(n).pow(e);
        r += t;
    }
    return r;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one())
            os << ac.str();
        else if (ac == 1)
            os << m.str();
        else
            os << ac.str() << "*" << m.str();
    }
    return os.str();
}

// ---------------------------------------------------------------- CoeffElem

CoeffElem::CoeffElem(const Rat& r)
    : num_(Int(boost::multiprecision::numerator(r))),
      den_(Int(boost::multiprecision::denominator(r))) {}

CoeffElem::CoeffElem(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("CoeffElem: zero denominator");
    normalize();
}

CoeffElem CoeffElem::param(const std::string& name) {
    CoeffElem c;
    c.num_ = ParamPoly::var(name);
    return c;
}

void CoeffElem::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(Int(1));
        return;
    }
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = ParamPoly::exact_div(num_, g);
        den_ = ParamPoly::exact_div(den_, g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<Rat> CoeffElem::as_rational() const {
    if (!is_rational()) return std::nullopt;
    Int n = num_.is_zero() ? Int(0) : num_.leading_coeff();
    return Rat(n, den_.leading_coeff());
}

CoeffElem CoeffElem::operator-() const {
    CoeffElem r(*this);
    r.num_ = -r.num_;
    return r;
}

CoeffElem CoeffElem::operator+(const CoeffElem& o) const {
    return CoeffElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CoeffElem CoeffElem::operator-(const CoeffElem& o) const {
    return CoeffElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

CoeffElem CoeffElem::operator*(const CoeffElem& o) const {
    return CoeffElem(num_ * o.num_, den_ * o.den_);
}

CoeffElem CoeffElem::operator/(const CoeffElem& o) const {
    if (o.is_zero()) throw Error("CoeffElem: division by zero");
    return CoeffElem(num_ * o.den_, den_ * o.num_);
}

CoeffElem CoeffElem::pow(uint32_t k) const {
    CoeffElem r{Int(1)};
    for (uint32_t i = 0; i < k; ++i) r *= *this;
    return r;
}

CoeffElem CoeffElem::inverse() const { return CoeffElem{Int(1)} / *this; }

int CoeffElem::cmp(const CoeffElem& a, const CoeffElem& b) {
    auto lexcmp = [](const ParamPoly& x, const ParamPoly& y) {
        const auto& tx = x.terms();
        const auto& ty = y.terms();
        for (size_t i = 0; i < std::min(tx.size(), ty.size()); ++i) {
            int c = PMonomial::cmp(tx[i].first, ty[i].first);
            if (c != 0) return c;
            if (tx[i].second != ty[i].second) return tx[i].second < ty[i].second ? -1 : 1;
        }
        if (tx.size() != ty.size()) return tx.size() < ty.size() ? -1 : 1;
        return 0;
    };
    int c = lexcmp(a.num_, b.num_);
    if (c != 0) return c;
    return lexcmp(a.den_, b.den_);
}

void CoeffElem::param_names(std::vector<std::string>& out) const {
    num_.param_names(out);
    den_.param_names(out);
}

std::string CoeffElem::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    if (den_.terms().size() > 1 || (!den_.is_constant() && den_.terms()[0].second != 1) ||
        den_.degree() > 1)
        d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------- ParamTable

void ParamTable::declare(const std::string& name) {
    declare(name, CoeffElem{Int(0)}, CoeffElem::param(name));
}

void ParamTable::declare(const std::string& name, CoeffElem d_image, CoeffElem sigma_image) {
    if (known(name)) throw Error("parameter '" + name + "' already declared");
    std::vector<std::string> mentioned;
    d_image.param_names(mentioned);
    sigma_image.param_names(mentioned);
    for (auto& m : mentioned)
        if (m != name && !known(m))
            throw Error("parameter image of '" + name + "' mentions undeclared parameter '" + m + "'");
    decls_.push_back({name, std::move(d_image), std::move(sigma_image)});
    names_.push_back(name);
    check_commutation(decls_.back());
}

bool ParamTable::known(const std::string& name) const {
    for (auto& d : decls_)
        if (d.name == name) return true;
    return false;
}

const ParamTable::Decl& ParamTable::find(const std::string& name) const {
    for (auto& d : decls_)
        if (d.name == name) return d;
    throw Error("unknown parameter '" + name + "'");
}

const CoeffElem& ParamTable::d_image(const std::string& name) const { return find(name).d_image; }
const CoeffElem& ParamTable::sigma_image(const std::string& name) const {
    return find(name).sigma_image;
}

CoeffElem ParamTable::apply_d(const CoeffElem& c) const {
    // quotient rule over the declared derivation
    auto d_poly = [&](const ParamPoly& p) {
        CoeffElem r;
        std::vector<std::string> names;
        p.param_names(names);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        for (auto& n : names) {
            ParamPoly dp = p.derivative(n);
            r += CoeffElem(dp, ParamPoly(Int(1))) * d_image(n);
        }
        return r;
    };
    CoeffElem dn = d_poly(c.num()), dd = d_poly(c.den());
    CoeffElem den{c.den(), ParamPoly(Int(1))};
    CoeffElem num{c.num(), ParamPoly(Int(1))};
    return (dn * den - num * dd) / (den * den);
}

CoeffElem ParamTable::apply_sigma(const CoeffElem& c, uint32_t k) const {
    CoeffElem r = c;
    for (uint32_t i = 0; i < k; ++i) {
        CoeffElem n = r.num().substituted([&](const std::string& name) { return sigma_image(name); });
        CoeffElem d = r.den().substituted([&](const std::string& name) { return sigma_image(name); });
        r = n / d;
    }
    return r;
}

void ParamTable::check_commutation(const Decl& d) const {
    // require D(sigma(c)) == sigma(D(c)); both sides are computable from the
    // declared images since images mention only declared parameters
    CoeffElem lhs = apply_d(d.sigma_image);
    CoeffElem rhs = apply_sigma(d.d_image, 1);
    if (!(lhs == rhs))
        throw Error("images of parameter '" + d.name + "' do not commute: D(sigma(" + d.name +
                    ")) = " + lhs.str() + " but sigma(D(" + d.name + ")) = " + rhs.str());
}

}  // namespace sdf
