#include <doctest.h>

#include "sdforge/prolong.hpp"

#include <random>

using namespace sdf;

namespace {

const Variable vx = Variable::sigma_d("x");
const Variable vy = Variable::sigma_d("y");
const Variable x_1 = Variable::prolong("x", 1);
const Variable y_1 = Variable::prolong("y", 1);

Poly px() { return Poly::var(vx); }
Poly py() { return Poly::var(vy); }

ParamTable no_params;

// random univariate polynomial in x of degree <= d with nonzero lead
Poly random_f(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    Poly f;
    for (int k = 0; k < d; ++k) f += Poly::var(vx, k) * CoeffElem(Int(coeff(rng)));
    int lead = coeff(rng);
    f += Poly::var(vx, d) * CoeffElem(Int(lead == 0 ? 1 : lead));
    return f;
}

// map prolongation coordinates to D-towers so the operator oracle applies
std::map<Variable, Poly> prolong_to_sigma_d(const std::vector<Variable>& frame) {
    std::map<Variable, Poly> binds;
    for (auto& v : frame)
        if (v.kind == VarKind::Prolong)
            binds[v] = Poly::var(Variable::sigma_d(v.base, 0, v.a));
    return binds;
}

}  // namespace

TEST_SUITE_BEGIN("prolong");

TEST_CASE("tau of the parabola") {
    IdealPresentation V({vx, vy}, {py() - px() * px()});
    auto t1 = tau(V, 1, no_params);
    REQUIRE(t1.level_gens.size() == 2);
    CHECK(t1.level_gens[1][0] == Poly::var(y_1) - Poly(2L) * px() * Poly::var(x_1));

    auto t2 = tau(V, 2, no_params);
    Variable x2 = Variable::prolong("x", 2), y2 = Variable::prolong("y", 2);
    Poly expect = Poly::var(y2) - Poly(2L) * px() * Poly::var(x2) -
                  Poly(2L) * Poly::var(x_1) * Poly::var(x_1);
    CHECK(t2.level_gens[2][0] == expect);
}

TEST_CASE("tau of affine space is unconstrained") {
    IdealPresentation A({vx}, {});
    auto t3 = tau(A, 3, no_params);
    CHECK(t3.presentation.generators().empty());
    CHECK(t3.presentation.ambient().size() == 4);
}

TEST_CASE("tau through declared coefficient derivations") {
    ParamTable t;
    t.declare("c", CoeffElem::param("c") * CoeffElem::param("c"), CoeffElem::param("c"));
    IdealPresentation V({vx, vy}, {py() - px() * CoeffElem::param("c")});
    auto t1 = tau(V, 1, t);
    // F^D contributes the derived coefficient on x
    Poly expect = Poly::var(y_1) - Poly::var(x_1) * CoeffElem::param("c") -
                  px() * (CoeffElem::param("c") * CoeffElem::param("c"));
    CHECK(t1.level_gens[1][0] == expect);
}

TEST_CASE("prolongation dimension law on random graphs") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 6; ++trial) {
        IdealPresentation V({vx, vy}, {py() - random_f(rng, deg(rng))});
        size_t d = krull_dim(V);
        REQUIRE(d == 1);
        for (uint32_t m = 1; m <= 3; ++m)
            CHECK(krull_dim(tau(V, m, no_params).presentation) == (m + 1) * d);
    }
}

TEST_CASE("slice consistency") {
    std::mt19937_64 rng(29);
    IdealPresentation V({vx, vy}, {py() - random_f(rng, 3)});
    auto t3 = tau(V, 3, no_params);
    for (uint32_t m = 1; m < 3; ++m) {
        auto direct = tau(V, m, no_params);
        CHECK(ideal_equal(t3.slice(m), direct.presentation));
    }
}

TEST_CASE("derivation coherence with the operator oracle") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 5; ++trial) {
        Poly f = random_f(rng, deg(rng));
        IdealPresentation V({vx, vy}, {py() - f});
        auto t3 = tau(V, 3, no_params);
        auto binds = prolong_to_sigma_d(t3.presentation.ambient());
        Poly oracle = py() - f;
        for (uint32_t k = 1; k <= 3; ++k) {
            oracle = apply_d(oracle, no_params);
            CHECK(substitute(t3.level_gens[k][0], binds) == oracle);
        }
    }
}

TEST_CASE("normal form verdicts") {
    IdealPresentation V({vx, vy}, {py() - px() * px()});
    auto t1 = tau(V, 1, no_params);
    CHECK(normal_form_check(t1.presentation, no_params).normal);

    IdealPresentation W({vx, vy, x_1, y_1}, {py() - px() * px(), Poly::var(y_1) - Poly(2L) * px() * Poly::var(x_1)});
    CHECK(normal_form_check(W, no_params).normal);

    IdealPresentation Wbad({vx, vy, x_1, y_1}, {py() - px() * px(), Poly::var(y_1) - Poly(1L)});
    auto rep = normal_form_check(Wbad, no_params);
    REQUIRE_FALSE(rep.normal);
    CHECK(*rep.fail_level == 0);
    CHECK(*rep.fail_generator == px() * px() - py());  // monic elimination generator
    // the defect reduces to 2x*x@1 - 1 modulo I(W')
    CHECK(*rep.defect == Poly(2L) * px() * Poly::var(x_1) - Poly(1L));
}

TEST_CASE("normal form check extends to shifted products of generators") {
    std::mt19937_64 rng(37);
    IdealPresentation V({vx, vy}, {py() - random_f(rng, 3)});
    auto t2 = tau(V, 2, no_params);
    // products h*G for G below the top level must also satisfy the defect
    // condition
    std::vector<Poly> multipliers{px(), py(), px() * py(), px() * px() + Poly(1L)};
    for (auto& h : multipliers)
        for (uint32_t lvl = 0; lvl < 2; ++lvl)
            for (auto& g : t2.level_gens[lvl]) {
                Poly image = prolongation_derivative(h * g, no_params);
                CHECK(ideal_member(t2.presentation, image));
            }
}

TEST_CASE("dominance") {
    IdealPresentation V({vx, vy}, {py() - px() * px()});
    IdealPresentation W({vx, vy, x_1, y_1},
                        {py() - px() * px(), Poly::var(y_1) - Poly(2L) * px() * Poly::var(x_1)});
    std::vector<Variable> target{vx, vy};
    CHECK(dominance_check(W, V, target).dominant);

    // V x {point}
    IdealPresentation Wpt({vx, vy, x_1}, {py() - px() * px(), Poly::var(x_1)});
    CHECK(dominance_check(Wpt, V, target).dominant);

    IdealPresentation origin({vx}, {px()});
    IdealPresentation line({vx}, {});
    std::vector<Variable> tx{vx};
    auto rep = dominance_check(origin, line, tx);
    CHECK_FALSE(rep.dominant);
    CHECK(!rep.detail.empty());
}

TEST_CASE("dcfa axiom check on tau of affine space") {
    // V = A^1, U = A^2, W = tau_1(U)
    Variable xp = Variable::sigma_d("xp");
    IdealPresentation V({vx}, {});
    IdealPresentation U({vx, xp}, {});
    Variable xp1 = Variable::prolong("xp", 1);
    IdealPresentation W({vx, xp, x_1, xp1}, {});
    std::vector<Variable> image{xp};
    Budget b;
    auto rep = dcfa_axiom_check(V, image, U, W, 0, no_params, b);
    CHECK(rep.abc_true());
    CHECK(rep.nf_pi1.normal);
    CHECK(rep.nf_pi2.normal);
    CHECK(*rep.dim_v == 1);
    CHECK(*rep.dim_w == 4);
}

TEST_CASE("dcfa axiom check on the hidden-relation example") {
    // sigma(x) = Dx, D sigma(x) = x^2 presented over (x, xp, x@1, xp@1)
    Variable xp = Variable::sigma_d("xp");
    Variable xp1 = Variable::prolong("xp", 1);
    IdealPresentation V({vx}, {});
    IdealPresentation U({vx, xp}, {});
    IdealPresentation W({vx, xp, x_1, xp1},
                        {Poly::var(x_1) - Poly::var(xp), Poly::var(xp1) - px() * px()});
    std::vector<Variable> image{xp};
    Budget b;
    auto rep = dcfa_axiom_check(V, image, U, W, 2, no_params, b);
    CHECK(rep.abc_true());
    REQUIRE(rep.advisory_ran);
    Poly target = Poly::var(Variable::sigma_d("x", 0, 1)) * Poly::var(Variable::sigma_d("x", 0, 1)) -
                  Poly(2L) * Poly::var(Variable::sigma_d("x")) * Poly::var(Variable::sigma_d("x", 0, 1));
    CHECK(ideal_member(rep.advisory.window_ideal, target));
    CHECK_FALSE(rep.advisory.new_relations.empty());
}

TEST_CASE("dcfa axiom check reports failed dominance") {
    // U = V x {0} does not dominate V^sigma
    Variable xp = Variable::sigma_d("xp");
    Variable xp1 = Variable::prolong("xp", 1);
    IdealPresentation V({vx}, {});
    IdealPresentation U({vx, xp}, {Poly::var(xp)});
    IdealPresentation W({vx, xp, x_1, xp1}, {Poly::var(xp), Poly::var(xp1)});
    std::vector<Variable> image{xp};
    Budget b;
    auto rep = dcfa_axiom_check(V, image, U, W, 0, no_params, b);
    CHECK(rep.a_onto_v.verdict == Verdict::True);
    CHECK(rep.a_onto_vsigma.verdict == Verdict::False);
    CHECK(!rep.a_onto_vsigma.detail.empty());
}

TEST_SUITE_END();
