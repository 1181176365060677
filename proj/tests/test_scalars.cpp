#include "cherednik/scalars.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cherednik;

namespace {
AffineForm c0f(int r = 1) { return AffineForm::c0(r); }
AffineForm one(int r = 1) { return AffineForm::constant(r, Rational(1)); }
}  // namespace

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("affine forms print and evaluate") {
    AffineForm f = one() + c0f() * Rational(2);
    CHECK(f.str() == "1 + 2*c0");
    ParameterPoint p(1, Rational(-1, 2), {Rational(0)});
    CHECK(f.evaluate(p).is_zero());
    AffineForm g = AffineForm::d(2, 0) - AffineForm::d(2, 1) + Rational(1);
    CHECK(g.str() == "1 + d0 - d1");
    CHECK(g.evaluate(ParameterPoint(2, Rational(5), {Rational(0), Rational(1)})).is_zero());
}

TEST_CASE("shifted forms use d indices mod r") {
    // k - (d_a - d_b) - r m c0
    AffineForm f = AffineForm::shifted(2, 1, 1, 3, Rational(0));
    CHECK(f == AffineForm::constant(2, Rational(1)) - AffineForm::d(2, 1) + AffineForm::d(2, 1));
    AffineForm g = AffineForm::shifted(2, 1, 1, 0, Rational(-1));
    CHECK(g.str() == "1 + 2*c0 + d0 - d1");
}

TEST_CASE("canonical forms are primitive with positive lead") {
    AffineForm f = (one() * Rational(2) + c0f() * Rational(4)) * Rational(-3);
    auto [scale, prim] = f.canonical();
    CHECK(prim.str() == "1 + 2*c0");
    CHECK(scale == Rational(-6));
}

TEST_CASE("factored scalar evaluation and poles") {
    FactoredScalar s(1, Rational(2));
    s.mul(one() + c0f() * Rational(2));
    ParameterPoint p(1, Rational(-1, 2), {Rational(0)});
    CHECK(s.evaluate(p).is_zero());
    FactoredScalar q(1);
    q.div(c0f());
    CHECK_THROWS_AS(q.evaluate(ParameterPoint::zero(1)), PoleError);
}

TEST_CASE("normalize cancels and merges") {
    FactoredScalar s(1);
    s.mul(one() + c0f());
    s.mul(one() + c0f() * Rational(2));
    s.div(one() + c0f());
    CHECK(normalize(s).str() == "(1 + 2*c0)");

    FactoredScalar t(1, Rational(2));
    t.mul(one() * Rational(2) + c0f() * Rational(2));
    t.div(one() + c0f());
    FactoredScalar n = normalize(t);
    CHECK(n.factor_count() == 0);
    CHECK(n.coefficient() == Rational(4));
    CHECK(n.str() == "4");
}

TEST_CASE("proportional") {
    FactoredScalar a(1, Rational(2));
    a.mul(one() + c0f());
    FactoredScalar b(one() + c0f());
    auto k = proportional(a, b);
    REQUIRE(k.has_value());
    CHECK(*k == Rational(2));
    CHECK_FALSE(proportional(FactoredScalar(one() + c0f()), FactoredScalar(one() + c0f() * Rational(2))).has_value());
}

TEST_CASE("pochhammer") {
    FactoredScalar p = pochhammer(c0f(), 3);
    ParameterPoint q(1, Rational(2), {Rational(0)});
    CHECK(p.evaluate(q) == Rational(2 * 3 * 4));
    CHECK(pochhammer(c0f(), 0).evaluate(q) == Rational(1));
}

TEST_CASE("parameter conventions") {
    auto h = convert_parameters(ParameterPoint(1, Rational(1, 2), {Rational(0)}), Convention::hecke);
    CHECK(h.values.front().first == "q");
    CHECK(h.values.front().second == Rational(-1, 2));

    auto g = convert_parameters(ParameterPoint(2, Rational(3), {Rational(1), Rational(-1)}), Convention::gordon);
    std::map<std::string, Rational> gv(g.values.begin(), g.values.end());
    CHECK(gv.at("H1") == Rational(1));
    CHECK(gv.at("h") == Rational(-3));

    auto ro = convert_parameters(ParameterPoint::zero(3), Convention::rouquier);
    for (const auto& [k, v] : ro.values)
        if (k != "h") CHECK(v.is_zero());
}

TEST_CASE("random points are reproducible") {
    std::mt19937_64 a(5), b(5);
    auto p = random_point(3, a), q = random_point(3, b);
    CHECK(p.c0 == q.c0);
    CHECK(p.d == q.d);
    CHECK_THROWS_AS(ParameterPoint(2, Rational(1), {Rational(0)}), DomainError);
}
