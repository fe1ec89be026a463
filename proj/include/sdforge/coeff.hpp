#pragma once
// Exact scalar arithmetic: big integers, rationals, and rational functions
// in declared parameter symbols carrying sigma- and D-images.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// Step budget threaded through the Groebner-backed operations. Exhaustion
// throws BudgetExceeded; results are never silently truncated.
class Budget {
public:
    Budget() = default;
    explicit Budget(uint64_t limit) : limit_(limit) {}

    void spend(uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceeded("computation budget exceeded after " + std::to_string(used_) + " steps");
    }
    uint64_t used() const { return used_; }

private:
    uint64_t limit_ = UINT64_MAX;
    uint64_t used_ = 0;
};

// Power product in parameter symbols, e.g. c^2*d. Exponents positive,
// factors sorted by name.
class PMonomial {
public:
    PMonomial() = default;

    static PMonomial var(const std::string& name, uint32_t exp = 1);

    bool is_one() const { return e_.empty(); }
    uint64_t degree() const;
    uint32_t exponent(const std::string& name) const;
    const std::vector<std::pair<std::string, uint32_t>>& factors() const { return e_; }

    PMonomial operator*(const PMonomial& o) const;
    // quotient, or nullopt when not divisible
    std::optional<PMonomial> divide(const PMonomial& o) const;

    bool operator==(const PMonomial& o) const { return e_ == o.e_; }
    // graded order: total degree, then name-wise lexicographic
    static int cmp(const PMonomial& a, const PMonomial& b);

    std::string str() const;

private:
    std::vector<std::pair<std::string, uint32_t>> e_;
    friend class ParamPoly;
};

class CoeffElem;

// Integer-coefficient sparse polynomial in parameter symbols. Terms are
// kept sorted descending in PMonomial::cmp order with nonzero coefficients.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(Int c);              // constant
    ParamPoly(long c) : ParamPoly(Int(c)) {}
    static ParamPoly var(const std::string& name);
    static ParamPoly term(PMonomial m, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const std::vector<std::pair<PMonomial, Int>>& terms() const { return terms_; }
    uint64_t degree() const;
    uint32_t degree_in(const std::string& name) const;
    const Int& leading_coeff() const;   // w.r.t. canonical order; 0 polynomial -> static zero
    void param_names(std::vector<std::string>& out) const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator*(const Int& c) const;
    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

    ParamPoly derivative(const std::string& name) const;

    // Exact division; throws on non-exact input (internal invariant).
    static ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b);
    // Polynomial gcd including integer content (primitive PRS). Result has a
    // positive leading coefficient.
    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
    // gcd of the integer coefficients (nonnegative)
    Int content() const;

    // Evaluate by substituting every parameter; used by the sigma action and
    // by randomized canonicalization cross-checks.
    CoeffElem substituted(const std::function<CoeffElem(const std::string&)>& image) const;

    std::string str() const;

private:
    std::vector<std::pair<PMonomial, Int>> terms_;
    void push_term(PMonomial m, Int c);   // append assuming order
    static ParamPoly from_unsorted(std::vector<std::pair<PMonomial, Int>> ts);
    friend class CoeffElem;
};

// Element of the coefficient field: num/den with den != 0, normalized so
// that gcd(num, den) = 1 and den has positive leading coefficient. Equality
// is representation equality of the canonical forms.
class CoeffElem {
public:
    CoeffElem() : num_(), den_(Int(1)) {}
    CoeffElem(Int c) : num_(std::move(c)), den_(Int(1)) {}
    CoeffElem(long c) : CoeffElem(Int(c)) {}
    CoeffElem(const Rat& r);
    CoeffElem(ParamPoly num, ParamPoly den);
    static CoeffElem param(const std::string& name);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    std::optional<Rat> as_rational() const;

    CoeffElem operator-() const;
    CoeffElem operator+(const CoeffElem& o) const;
    CoeffElem operator-(const CoeffElem& o) const;
    CoeffElem operator*(const CoeffElem& o) const;
    CoeffElem operator/(const CoeffElem& o) const;   // o != 0
    CoeffElem& operator+=(const CoeffElem& o) { return *this = *this + o; }
    CoeffElem& operator-=(const CoeffElem& o) { return *this = *this - o; }
    CoeffElem& operator*=(const CoeffElem& o) { return *this = *this * o; }
    CoeffElem& operator/=(const CoeffElem& o) { return *this = *this / o; }
    CoeffElem pow(uint32_t k) const;
    CoeffElem inverse() const;

    bool operator==(const CoeffElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    static int cmp(const CoeffElem& a, const CoeffElem& b);

    void param_names(std::vector<std::string>& out) const;
    std::string str() const;

private:
    ParamPoly num_, den_;
    void normalize();
};

// Declared parameters with their operator images. Defaults follow the
// convention D(c) = 0, sigma(c) = c; images may mention previously declared
// parameters and must satisfy the commutation D(sigma(c)) = sigma(D(c)).
class ParamTable {
public:
    void declare(const std::string& name);
    void declare(const std::string& name, CoeffElem d_image, CoeffElem sigma_image);
    bool known(const std::string& name) const;
    size_t size() const { return decls_.size(); }

    const CoeffElem& d_image(const std::string& name) const;
    const CoeffElem& sigma_image(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }

    CoeffElem apply_d(const CoeffElem& c) const;
    CoeffElem apply_sigma(const CoeffElem& c, uint32_t k = 1) const;

private:
    struct Decl {
        std::string name;
        CoeffElem d_image;
        CoeffElem sigma_image;
    };
    std::vector<Decl> decls_;
    std::vector<std::string> names_;
    const Decl& find(const std::string& name) const;
    void check_commutation(const Decl& d) const;
};

}  // namespace sdf
