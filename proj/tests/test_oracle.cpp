#include "cherednik/oracle_suite.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cherednik;

namespace {
MultiPartition sh(const char* s) { return MultiPartition::parse(s); }
}  // namespace

TEST_CASE("irreducible models pass the relation check") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n)
            for (const auto& s : enumerate_multipartitions(r, n)) {
                IrrepModel I = build_irrep(s);
                CHECK(I.dim() == static_cast<int>(enumerate_syt(s).size()));
                for (int t = 0; t < I.dim(); ++t) CHECK(I.gram(t).sign() > 0);
            }
}

TEST_CASE("dimension identity") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n) CHECK(check_syt_count(r, n).passed());
}

TEST_CASE("degree zero eigenvectors") {
    IrrepModel I = build_irrep(sh("2|1"));
    ParameterPoint p(2, Rational(2, 7), {Rational(1, 3), Rational(-1, 5)});
    StandardModule M(I, p);
    for (int t = 0; t < I.dim(); ++t) {
        ModuleElement f = M.f_eigen({0, 0, 0}, t);
        CHECK(f.degree() == 0);
        CHECK(f == M.e_basis({0, 0, 0}, t));
        auto ev = M.eigenvalues(f);
        REQUIRE(ev.has_value());
        CHECK(*ev == M.predicted_eigenvalues({0, 0, 0}, t));
    }
}

TEST_CASE("symmetrizing the trivial module multiplies by n!") {
    IrrepModel I = build_irrep(sh("3"));
    StandardModule M(I, ParameterPoint(1, Rational(3, 4), {Rational(0)}));
    ModuleElement v = ModuleElement::basis({0, 0, 0}, 0);
    CHECK(M.symmetrize(M.f_eigen({0, 0, 0}, 0)) == v * Rational(6));
}

TEST_CASE("spectrum matches the oracle for ((1),(1)), mu = (1,0)") {
    IrrepModel I = build_irrep(sh("1|1"));
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 3; ++rep)
        with_generic_point(2, rng, [&](const ParameterPoint& p) {
            StandardModule M(I, p);
            for (int t = 0; t < I.dim(); ++t) {
                auto f = M.f_eigen({1, 0}, t);
                auto ev = M.eigenvalues(f);
                REQUIRE(ev.has_value());
                CHECK(*ev == M.predicted_eigenvalues({1, 0}, t));
            }
            return 0;
        });
}

TEST_CASE("frozen oracle norms for ((1),(1)), mu = (1,0)") {
    IrrepModel I = build_irrep(sh("1|1"));
    ParameterPoint p(2, Rational(1, 3), {Rational(1, 5), Rational(-2, 7)});
    StandardModule M(I, p);
    const Rational expect[] = {Rational(4859, 4095), Rational(-992, 2835)};
    for (int t = 0; t < 2; ++t) {
        auto f = M.f_eigen({1, 0}, t, 7);
        CHECK(M.norm(f) / I.gram(t) == expect[t]);
        CHECK(evaluate(norm_f({1, 0}, I.tableau(t)), p) == expect[t]);
    }
}

TEST_CASE("norm_f against the oracle at five random points") {
    IrrepModel I = build_irrep(sh("1|1"));
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 5; ++rep)
        with_generic_point(2, rng, [&](const ParameterPoint& p) {
            StandardModule M(I, p);
            for (int t = 0; t < I.dim(); ++t)
                CHECK(M.norm(M.f_eigen({1, 0}, t)) / I.gram(t) == evaluate(norm_f({1, 0}, I.tableau(t)), p));
            return 0;
        });
}

TEST_CASE("norm of g_S for (1,1), S = (0;1)") {
    IrrepModel I = build_irrep(sh("1,1"));
    std::mt19937_64 rng(9);
    ShapeAssignment S(sh("1,1"), {0, 1});
    for (int rep = 0; rep < 3; ++rep)
        with_generic_point(1, rng, [&](const ParameterPoint& p) {
            StandardModule M(I, p);
            int t = -1;
            ModuleElement g = g_S(M, S, &t);
            CHECK(M.norm(g) / I.gram(t) == evaluate(norm_gS(S), p));
            CHECK(M.norm(g) / I.gram(t) == Rational(2) * (Rational(1) + Rational(2) * p.c0));
            return 0;
        });
}

TEST_CASE("a tied pair breaks the printed g_S norm, the tie constant repairs it") {
    IrrepModel I = build_irrep(sh("2"));
    ShapeAssignment S(sh("2"), {0, 0});
    StandardModule M(I, ParameterPoint(1, Rational(2, 9), {Rational(0)}));
    int t = -1;
    ModuleElement g = g_S(M, S, &t);
    Rational oracle = M.norm(g) / I.gram(t);
    CHECK(oracle == Rational(4));
    CHECK(evaluate(norm_gS(S), M.point()) == Rational(2));
    CHECK(evaluate(norm_gS_tie_corrected(S), M.point()) == oracle);
}

TEST_CASE("symmetrizer identity") {
    CHECK(symmetrizer_identity_check(2, {Rational(0), Rational(1)}, Rational(3, 7)));
    CHECK(symmetrizer_identity_check(3, {Rational(0), Rational(1), Rational(5)}, Rational(0)));
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; ++n) CHECK(check_symmetrizer_identity(n, 20, rng).passed());
}

TEST_CASE("structural suite on (2,2)") {
    SuiteOptions o;
    o.r = 2;
    o.n = 2;
    o.degree = 2;
    o.seed = 4;
    auto results = run_oracle_suite(o);
    std::map<std::string, CheckResult> by;
    for (const auto& c : results) by[c.name] = c;
    for (const char* name : {"contravariant_form", "defining_relations", "intertwiners", "irrep_relations",
                             "jacks_lemma", "leading_term", "norm_f", "norm_g_tie_corrected",
                             "minimal_norm_tie_corrected", "symmetrizer_identity", "syt_dimension_identity",
                             "y_commute", "z_commute", "z_triangular"}) {
        INFO(name << ": " << by[name].first_failure);
        CHECK(by.at(name).passed());
    }
    // the tie-free closed forms miss on shapes with tied boxes
    CHECK_FALSE(by.at("norm_g").passed());
    CHECK_FALSE(by.at("minimal_norm").passed());
    CHECK(by.at("norm_g").failures < by.at("norm_g").cases);
}

TEST_CASE("the suite is deterministic for a fixed seed") {
    SuiteOptions o;
    o.r = 1;
    o.n = 3;
    o.degree = 2;
    o.seed = 8;
    auto a = run_oracle_suite(o), b = run_oracle_suite(o);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].cases == b[i].cases);
        CHECK(a[i].failures == b[i].failures);
        CHECK(a[i].first_failure == b[i].first_failure);
    }
}
