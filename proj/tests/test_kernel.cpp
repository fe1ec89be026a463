#include <doctest.h>

#include "sdforge/poly.hpp"

#include <random>

using namespace sdf;

namespace {

Variable X() { return Variable::plain("x"); }
Variable Y() { return Variable::plain("y"); }
Variable T() { return Variable::plain("t"); }

Poly px() { return Poly::var(X()); }
Poly py() { return Poly::var(Y()); }

// small random polynomial over variables vs, optionally with a parameter
Poly random_poly(std::mt19937_64& rng, const std::vector<Variable>& vs, bool with_param = false) {
    std::uniform_int_distribution<int> nterms(1, 4), coeff(-6, 6), expo(0, 2);
    Poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (auto& v : vs) {
            int e = expo(rng);
            if (e > 0) m = m * Monomial::var(v, static_cast<uint32_t>(e));
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        CoeffElem ce{Int(c)};
        if (with_param && expo(rng) == 2) ce = ce * CoeffElem::param("c");
        p += Poly::term(m, ce);
    }
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("kernel");

TEST_CASE("rational and coefficient canonical forms") {
    CHECK(CoeffElem(Rat(3, 6)) == CoeffElem(Rat(1, 2)));
    CHECK(CoeffElem(Rat(-2, 4)).str() == "-1/2");
    CHECK((CoeffElem(Int(1)) + CoeffElem(Int(-1))).is_zero());

    // (c^2 - 1)/(c - 1) reduces to c + 1
    CoeffElem c = CoeffElem::param("c");
    CoeffElem one{Int(1)};
    CoeffElem q = (c * c - one) / (c - one);
    CHECK(q == c + one);

    // cross-multiplied equality matches canonical equality on random values
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        CoeffElem a = (c + CoeffElem(Int(d(rng)))) / (c * c + CoeffElem(Int(1)));
        CoeffElem b = a * (c - CoeffElem(Int(2))) / (c - CoeffElem(Int(2)));
        CHECK(a == b);
        // evaluate both at random rational parameter values avoiding denominators
        for (int k = 0; k < 5; ++k) {
            Rat val(d(rng), 1 + std::abs(d(rng)));
            if (val == 2) continue;
            auto ev = [&](const CoeffElem& x) {
                return x.num().substituted([&](const std::string&) { return CoeffElem(val); }) /
                       x.den().substituted([&](const std::string&) { return CoeffElem(val); });
            };
            CHECK(ev(a) == ev(b));
        }
    }
}

TEST_CASE("parameter tables enforce commuting images") {
    ParamTable t;
    t.declare("c", CoeffElem(Int(0)), CoeffElem::param("c") + CoeffElem(Int(1)));  // sigma(c)=c+1
    ParamTable t2;
    t2.declare("a", CoeffElem::param("a") * CoeffElem::param("a"), CoeffElem::param("a"));
    CHECK(t2.apply_d(CoeffElem::param("a")) == CoeffElem::param("a") * CoeffElem::param("a"));
    CHECK(t.apply_sigma(CoeffElem::param("c"), 2) ==
          CoeffElem::param("c") + CoeffElem(Int(2)));

    ParamTable bad;
    // sigma(b)=b^2 with D(b)=1 does not commute
    CHECK_THROWS_AS(bad.declare("b", CoeffElem(Int(1)),
                                CoeffElem::param("b") * CoeffElem::param("b")),
                    Error);
}

TEST_CASE("poly_arith worked examples") {
    CHECK((px() + (-px())).is_zero());
    CHECK((px() + py()) * (px() - py()) == px() * px() - py() * py());
    Poly half_x = px() * CoeffElem(Rat(1, 2));
    Poly two_y = py() * CoeffElem(Int(2));
    CHECK(half_x * two_y == px() * py());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    std::vector<Variable> vs{X(), Y()};
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(rng, vs), b = random_poly(rng, vs), c = random_poly(rng, vs);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("substitute") {
    Poly p = py() - px() * px();
    std::map<Variable, Poly> bind{{X(), Poly::var(T()) + Poly(1L)}, {Y(), Poly::var(T(), 2)}};
    Poly expect = Poly::var(T()) * CoeffElem(Int(-2)) - Poly(1L);
    CHECK(substitute(p, bind) == expect);

    CHECK(substitute(p, {}) == p);
    CHECK(substitute(px() * py(), {{X(), Poly{}}}).is_zero());
    CHECK_THROWS_AS(evaluate(px() * py(), Point{{X(), CoeffElem(Int(1))}}), Error);
}

TEST_CASE("scaled partials") {
    std::vector<Variable> frame{X(), Y()};
    Poly p = py() - px() * px();
    uint32_t s20[] = {2, 0}, s01[] = {0, 1}, s11[] = {1, 1};
    CHECK(scaled_partial(p, frame, s20) == Poly(-1L));
    CHECK(scaled_partial(p, frame, s01) == Poly(1L));
    CHECK(scaled_partial(px() * py(), frame, s11) == Poly(1L));
}

TEST_CASE("evaluate") {
    Poly p = py() - px() * px();
    Point on{{X(), CoeffElem(Int(1))}, {Y(), CoeffElem(Int(1))}};
    Point off{{X(), CoeffElem(Int(1))}, {Y(), CoeffElem(Int(2))}};
    CHECK(evaluate(p, on).is_zero());
    CHECK(evaluate(p, off) == CoeffElem(Int(1)));
    Poly cx = px() * CoeffElem::param("c");
    CHECK(evaluate(cx, Point{{X(), CoeffElem(Int(1))}}) == CoeffElem::param("c"));
}

TEST_CASE("taylor_row") {
    std::vector<Variable> frame{X(), Y()};
    Poly p = py() - px() * px();
    Point a{{X(), CoeffElem(Int(1))}, {Y(), CoeffElem(Int(1))}};

    auto r1 = taylor_row(p, a, 1, frame);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == CoeffElem(Int(-2)));
    CHECK(r1[1] == CoeffElem(Int(1)));

    auto r2 = taylor_row(p, a, 2, frame);
    REQUIRE(r2.size() == 5);
    CHECK(r2[0] == CoeffElem(Int(-2)));
    CHECK(r2[1] == CoeffElem(Int(1)));
    CHECK(r2[2] == CoeffElem(Int(-1)));
    CHECK(r2[3].is_zero());
    CHECK(r2[4].is_zero());

    auto rc = taylor_row(Poly(7L), a, 3, frame);
    for (auto& c : rc) CHECK(c.is_zero());
}

TEST_CASE("taylor reconstruction") {
    std::mt19937_64 rng(99);
    std::vector<Variable> frame{X(), Y()};
    for (int trial = 0; trial < 25; ++trial) {
        Poly p = random_poly(rng, frame);
        uint32_t m = static_cast<uint32_t>(p.total_degree());
        if (m == 0) continue;
        Point a{{X(), CoeffElem(Int(2))}, {Y(), CoeffElem(Int(-1))}};
        auto row = taylor_row(p, a, m, frame);
        auto idx = multi_indices(frame.size(), m);
        Poly rebuilt{evaluate(p, a)};
        for (size_t k = 0; k < idx.size(); ++k) {
            Poly mono{CoeffElem(Int(1))};
            for (size_t i = 0; i < frame.size(); ++i)
                mono *= (Poly::var(frame[i]) - Poly(a.at(frame[i]))).pow(idx[k][i]);
            rebuilt += mono * row[k];
        }
        CHECK(rebuilt == p);
    }
}

TEST_CASE("printing round trips through canonical forms") {
    Poly p = py() - px() * px();
    CHECK(p.str() == "-x^2 + y");
    Poly q = px() * CoeffElem(Rat(1, 2)) + Poly(CoeffElem(Rat(-3, 4)));
    CHECK(q.str() == "1/2*x - 3/4");
    Poly withparam = px() * (CoeffElem::param("c") + CoeffElem(Int(1)));
    CHECK(withparam.str() == "(c + 1)*x");
}

TEST_SUITE_END();
