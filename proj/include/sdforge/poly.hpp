#pragma once
// Structured variables and sparse polynomials over the exact coefficient
// field, plus the Taylor-coefficient operators used by the jet machinery.

#include "sdforge/coeff.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sdf {

enum class VarKind : uint8_t {
    SigmaD = 0,   // sigma^i D^j x
    Prolong = 1,  // prolongation coordinate Y_m over a base variable
    Arc = 2,      // arc coordinate x_{i,t}
    Plain = 3,    // free symbol
};

struct Variable {
    VarKind kind = VarKind::Plain;
    std::string base;
    uint32_t a = 0;  // sigma power | prolongation level | epsilon order
    uint32_t b = 0;  // D-order (SigmaD only)

    static Variable sigma_d(std::string name, uint32_t i = 0, uint32_t j = 0) {
        return {VarKind::SigmaD, std::move(name), i, j};
    }
    static Variable prolong(std::string name, uint32_t level) {
        return {VarKind::Prolong, std::move(name), level, 0};
    }
    static Variable arc(std::string name, uint32_t t) {
        return {VarKind::Arc, std::move(name), t, 0};
    }
    static Variable plain(std::string name) { return {VarKind::Plain, std::move(name), 0, 0}; }

    // base-level coordinate of an algebraic ambient space
    bool is_base() const {
        return kind == VarKind::Plain || (kind == VarKind::SigmaD && a == 0 && b == 0);
    }

    auto operator<=>(const Variable&) const = default;
    std::string str() const;
};

// Power product of variables; factors sorted, exponents positive.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(Variable v, uint32_t exp = 1);

    bool is_one() const { return e_.empty(); }
    uint64_t degree() const;
    uint32_t exponent(const Variable& v) const;
    const std::vector<std::pair<Variable, uint32_t>>& factors() const { return e_; }
    bool mentions_only(std::span<const Variable> vars) const;

    Monomial operator*(const Monomial& o) const;
    std::optional<Monomial> divide(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    // canonical storage order: graded, then variable-wise lexicographic
    static int cmp(const Monomial& a, const Monomial& b);

    std::string str() const;

private:
    std::vector<std::pair<Variable, uint32_t>> e_;
};

using Term = std::pair<Monomial, CoeffElem>;

// Sparse polynomial; terms sorted descending in Monomial::cmp order with
// nonzero coefficients. Arithmetic is exact.
class Poly {
public:
    Poly() = default;
    Poly(CoeffElem c);
    Poly(Int c) : Poly(CoeffElem(std::move(c))) {}
    Poly(long c) : Poly(CoeffElem(c)) {}
    static Poly var(Variable v, uint32_t exp = 1);
    static Poly term(Monomial m, CoeffElem c);
    static Poly from_terms(std::vector<Term> ts);  // normalizes

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const CoeffElem& constant_value() const;  // requires is_constant
    const std::vector<Term>& terms() const { return terms_; }
    uint64_t total_degree() const;
    CoeffElem coefficient(const Monomial& m) const;
    std::vector<Variable> variables() const;  // sorted, unique

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const CoeffElem& c) const;
    Poly operator/(const CoeffElem& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly pow(uint32_t k) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::vector<Term> terms_;
};

// Total assignment of coefficient values to variables.
using Point = std::map<Variable, CoeffElem>;

// Simultaneous substitution of polynomials for variables; unbound variables
// are left in place.
Poly substitute(const Poly& p, const std::map<Variable, Poly>& bindings);

// Exact evaluation at a point total on p's variables.
CoeffElem evaluate(const Poly& p, const Point& a);

// Plain partial derivative in one variable.
Poly partial(const Poly& p, const Variable& v);

// Scaled partial D_s p = (1 / prod s_i!) d^|s| p / dX^s over the given frame.
Poly scaled_partial(const Poly& p, std::span<const Variable> frame, std::span<const uint32_t> s);

// Multi-indices 1 <= |s| <= m over `nvars` positions, in the fixed graded
// enumeration shared with the jet matrices.
std::vector<std::vector<uint32_t>> multi_indices(size_t nvars, uint32_t m);

// Vector (D_s p(a))_{1 <= |s| <= m} in the enumeration above.
std::vector<CoeffElem> taylor_row(const Poly& p, const Point& a, uint32_t m,
                                  std::span<const Variable> frame);

}  // namespace sdf
