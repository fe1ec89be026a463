#pragma once
// Exact Buchberger engine: reduced bases, ideal membership, elimination,
// ideal equality and Krull dimension.

#include "sdforge/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdf {

// Total well-order on monomials compatible with multiplication, relative to
// an explicit ambient frame listed in descending significance.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    MonomialOrder() = default;
    MonomialOrder(Kind kind, std::vector<Variable> vars, size_t block_split = 0)
        : kind_(kind), vars_(std::move(vars)), split_(block_split) {}

    Kind kind() const { return kind_; }
    const std::vector<Variable>& vars() const { return vars_; }
    size_t block_split() const { return split_; }

    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

private:
    Kind kind_ = Kind::Grevlex;
    std::vector<Variable> vars_;
    size_t split_ = 0;
    std::vector<uint32_t> exps(const Monomial& m) const;
    static int cmp_grevlex(std::span<const uint32_t> a, std::span<const uint32_t> b);
};

// Reduced Groebner basis: monic, auto-reduced, sorted descending by leading
// monomial. Unique for (ideal, order).
struct Basis {
    std::vector<Poly> polys;
    MonomialOrder order;
};

class IdealPresentation {
public:
    IdealPresentation() = default;
    IdealPresentation(std::vector<Variable> ambient, std::vector<Poly> generators,
                      MonomialOrder::Kind order_kind = MonomialOrder::Kind::Grevlex);

    const std::vector<Variable>& ambient() const { return ambient_; }
    const std::vector<Poly>& generators() const { return gens_; }
    MonomialOrder::Kind order_kind() const { return order_kind_; }
    MonomialOrder order() const { return {order_kind_, ambient_}; }

    void assert_prime(bool f) { assume_prime_ = f; }
    bool assume_prime() const { return assume_prime_; }

    // cached reduced basis; computed on first use
    const Basis& groebner_basis(Budget& budget) const;
    const Basis& groebner_basis() const;
    bool has_cached_basis() const { return basis_ != nullptr; }

    std::string str() const;

private:
    std::vector<Variable> ambient_;
    std::vector<Poly> gens_;
    MonomialOrder::Kind order_kind_ = MonomialOrder::Kind::Grevlex;
    bool assume_prime_ = false;
    mutable std::shared_ptr<const Basis> basis_;
};

// Reduced basis of `gens` under `order`; deterministic across runs.
Basis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order, Budget& budget);

// Full normal form of p modulo a basis.
Poly normal_form(const Poly& p, const Basis& basis, Budget& budget);

// true iff the normal form of p modulo I's reduced basis is zero.
bool ideal_member(const IdealPresentation& I, const Poly& p, Budget& budget);
bool ideal_member(const IdealPresentation& I, const Poly& p);

// Generators of I intersected with the subring omitting `drop`.
IdealPresentation eliminate(const IdealPresentation& I, std::span<const Variable> drop,
                            Budget& budget);
IdealPresentation eliminate(const IdealPresentation& I, std::span<const Variable> drop);

// Mutual membership of generators; requires identical ambient frames.
bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J, Budget& budget);
bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J);

// Krull dimension of the quotient by I: maximal size of a variable subset
// independent modulo the leading-term ideal. Throws on the unit ideal.
size_t krull_dim(const IdealPresentation& I, Budget& budget);
size_t krull_dim(const IdealPresentation& I);

// Rename variables across frames (used when identifying sigma-twisted
// coordinate frames). Every ambient variable must be mapped or absent.
IdealPresentation rename_ambient(const IdealPresentation& I,
                                 const std::map<Variable, Variable>& names,
                                 std::vector<Variable> new_ambient);

}  // namespace sdf
