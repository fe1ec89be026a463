#include <doctest.h>

#include "sdforge/operators.hpp"

#include <random>

using namespace sdf;

namespace {

Variable sd(const char* base, uint32_t i = 0, uint32_t j = 0) {
    return Variable::sigma_d(base, i, j);
}

Poly v(const char* base, uint32_t i = 0, uint32_t j = 0) { return Poly::var(sd(base, i, j)); }

Int binom(unsigned n, unsigned k) {
    Int r(1);
    for (unsigned i = 0; i < k; ++i) r = r * Int(n - i) / Int(i + 1);
    return r;
}

Poly random_sd_poly(std::mt19937_64& rng, bool with_param) {
    std::uniform_int_distribution<int> nterms(1, 3), coeff(-5, 5), idx(0, 2);
    Poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m = Monomial::var(sd("x", idx(rng), idx(rng)), 1 + idx(rng) % 2);
        if (idx(rng) == 0) m = m * Monomial::var(sd("y", idx(rng), idx(rng)));
        int c = coeff(rng);
        if (c == 0) c = 2;
        CoeffElem ce{Int(c)};
        if (with_param && idx(rng) == 1) ce = ce * CoeffElem::param("c");
        p += Poly::term(m, ce);
    }
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("apply_d worked examples") {
    ParamTable none;
    CHECK(apply_d(v("x") * v("y"), none) == v("x") * v("y", 0, 1) + v("y") * v("x", 0, 1));
    CHECK(apply_d(v("x", 2, 3), none) == v("x", 2, 4));

    ParamTable t;
    t.declare("c", CoeffElem::param("c") * CoeffElem::param("c"), CoeffElem::param("c"));
    Poly cx = v("x") * CoeffElem::param("c");
    Poly expect = v("x", 0, 1) * CoeffElem::param("c") +
                  v("x") * (CoeffElem::param("c") * CoeffElem::param("c"));
    CHECK(apply_d(cx, t) == expect);
}

TEST_CASE("apply_sigma worked examples") {
    ParamTable none;
    CHECK(apply_sigma(v("x", 0, 3), 1, none) == v("x", 1, 3));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Poly p = random_sd_poly(rng, false), q = random_sd_poly(rng, false);
        CHECK(apply_sigma(p * q, 1, none) == apply_sigma(p, 1, none) * apply_sigma(q, 1, none));
    }
    CHECK(apply_sigma(apply_d(v("x"), none), 1, none) == apply_d(apply_sigma(v("x"), 1, none), none));
}

TEST_CASE("sigma and D commute on random polynomials") {
    ParamTable t;
    t.declare("c", CoeffElem(Int(0)), CoeffElem::param("c") + CoeffElem(Int(1)));
    t.declare("a", CoeffElem::param("a") * CoeffElem::param("a"), CoeffElem::param("a"));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        Poly p = random_sd_poly(rng, true);
        CHECK(apply_d(apply_sigma(p, 1, t), t) == apply_sigma(apply_d(p, t), 1, t));
    }
}

TEST_CASE("Leibniz on random polynomials") {
    ParamTable t;
    t.declare("c", CoeffElem::param("c") * CoeffElem::param("c"), CoeffElem::param("c"));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        Poly p = random_sd_poly(rng, true), q = random_sd_poly(rng, true);
        CHECK(apply_d(p * q, t) == p * apply_d(q, t) + q * apply_d(p, t));
    }
}

TEST_CASE("variety_sigma") {
    Variable x = sd("x"), y = sd("y");
    ParamTable shift;
    shift.declare("c", CoeffElem(Int(0)), CoeffElem::param("c") + CoeffElem(Int(1)));

    IdealPresentation V({x, y}, {Poly::var(y) - Poly::var(x, 2) * CoeffElem::param("c")});
    auto Vs = variety_sigma(V, shift);
    Poly expect = Poly::var(y) - Poly::var(x, 2) * (CoeffElem::param("c") + CoeffElem(Int(1)));
    REQUIRE(Vs.generators().size() == 1);
    CHECK(Vs.generators()[0] == expect);

    ParamTable none;
    IdealPresentation Q({x, y}, {Poly::var(y) - Poly::var(x, 2)});
    CHECK(variety_sigma(Q, none).generators() == Q.generators());

    ParamTable unshift;
    unshift.declare("c", CoeffElem(Int(0)), CoeffElem::param("c") - CoeffElem(Int(1)));
    auto round = variety_sigma(Vs, unshift);
    CHECK(round.generators() == V.generators());
}

TEST_CASE("sigma_reduce on the quadratic shift rule") {
    ParamTable none;
    // sigma(a) = a^2 + 1
    std::vector<RewriteRule> rules;
    rules.emplace_back(sd("a", 1, 0), v("a") * v("a") + Poly(1L));

    CHECK(sigma_reduce(v("a", 1, 1), rules, none) == Poly(2L) * v("a") * v("a", 0, 1));
    CHECK(sigma_reduce(v("a", 1, 2), rules, none) ==
          Poly(2L) * v("a") * v("a", 0, 2) + Poly(2L) * v("a", 0, 1) * v("a", 0, 1));
    CHECK(sigma_reduce(v("a", 1, 1), {}, none) == v("a", 1, 1));
}

TEST_CASE("binomial law for sigma of D^n") {
    ParamTable none;
    std::vector<RewriteRule> rules;
    rules.emplace_back(sd("a", 1, 0), v("a") * v("a") + Poly(1L));
    for (unsigned n = 1; n <= 6; ++n) {
        Poly expect;
        for (unsigned i = 0; i <= n; ++i)
            expect += v("a", 0, i) * v("a", 0, n - i) * CoeffElem(binom(n, i));
        CHECK(sigma_reduce(v("a", 1, n), rules, none) == expect);
    }
}

TEST_CASE("sigma_reduce is strategy independent") {
    ParamTable none;
    std::vector<RewriteRule> rules;
    rules.emplace_back(sd("a", 1, 0), v("a") * v("a") + Poly(1L));
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> idx(0, 2), coeff(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        Poly p;
        for (int t = 0; t < 3; ++t) {
            int c = coeff(rng);
            p += Poly::var(sd("a", idx(rng), idx(rng)), 1 + idx(rng) % 2) *
                 CoeffElem(Int(c == 0 ? 3 : c));
        }
        Poly base = sigma_reduce(p, rules, none);
        for (uint64_t seed = 1; seed <= 4; ++seed)
            CHECK(sigma_reduce(p, rules, none, ReduceStrategy::Random, seed) == base);
    }
}

TEST_CASE("rule orientation is enforced") {
    CHECK_THROWS_AS(RewriteRule(sd("a", 0, 1), v("a")), Error);
    CHECK_THROWS_AS(RewriteRule(sd("a", 1, 0), v("a", 1, 0) + Poly(1L)), Error);
}

TEST_CASE("hidden relation scan finds the DCFA example relation") {
    ParamTable none;
    SystemSpec S;
    S.bases = {"x"};
    S.generators = {v("x", 1, 0) - v("x", 0, 1), v("x", 1, 1) - v("x") * v("x")};
    auto r = hidden_relation_scan(S, 2, none);
    CHECK(r.complete);
    CHECK_FALSE(r.new_relations.empty());
    Poly target = v("x", 0, 1) * v("x", 0, 1) - Poly(2L) * v("x") * v("x", 0, 1);
    CHECK(ideal_member(r.window_ideal, target));
    IdealPresentation inputs(r.window, S.generators);
    CHECK_FALSE(ideal_member(inputs, target));
}

TEST_CASE("hidden relation scan trivial cases") {
    ParamTable none;
    SystemSpec d_only{{"x"}, {v("x", 0, 1)}, {}};
    CHECK(hidden_relation_scan(d_only, 3, none).new_relations.empty());

    SystemSpec algebraic{{"x", "y"}, {v("y") - v("x") * v("x")}, {}};
    CHECK(hidden_relation_scan(algebraic, 1, none).new_relations.empty());
}

TEST_SUITE_END();
