#pragma once

// Identity checks run against the brute-force module. Each returns a
// CheckResult with case counts, the first failure, and wall time.

#include "cherednik/oracle.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cherednik {

struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;
    double seconds = 0;
    std::string note;

    bool passed() const { return failures == 0 && cases > 0; }
    void record(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (!ok && failures++ == 0) first_failure = what();
    }
    void merge(const CheckResult& o) {
        cases += o.cases;
        if (o.failures && failures == 0) first_failure = o.first_failure;
        failures += o.failures;
        seconds += o.seconds;
    }
};

namespace detail {

template <class Fn>
CheckResult timed(std::string name, Fn&& fn) {
    CheckResult res;
    res.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(res);
    } catch (const std::exception& e) {
        res.record(false, [&] { return std::string("exception: ") + e.what(); });
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline std::vector<BasisKey> degree_basis(const IrrepModel& I, int d) {
    std::vector<BasisKey> out;
    for (const auto& nu : monomials(I.n(), d))
        for (int t = 0; t < I.dim(); ++t) out.push_back({nu, t});
    return out;
}

inline ModuleElement random_element(const std::vector<BasisKey>& basis, std::mt19937_64& rng, int terms = 4) {
    ModuleElement v;
    if (basis.empty()) return v;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int k = 0; k < terms; ++k) v.add(basis[pick(rng)], Rational(coef(rng)));
    return v;
}

inline std::string key_str(const MultiPartition& sh, const BasisKey& k) {
    return sh.str() + " nu=(" + StandardModule::comp_str(k.exps) + ") T#" + std::to_string(k.tab);
}

inline std::string case_str(const MultiPartition& sh, const Composition& mu, int t) {
    return sh.str() + " mu=(" + StandardModule::comp_str(mu) + ") T#" + std::to_string(t);
}

} // namespace detail

// Closed form of |f_{mu,T}|^2 against the oracle, normalized by gamma_T.
inline CheckResult check_norm_f(const MultiPartition& sh, int max_degree, int points, std::mt19937_64& rng) {
    return detail::timed("norm_f", [&](CheckResult& res) {
        IrrepModel I = build_irrep(sh);
        for (int rep = 0; rep < points; ++rep) {
            std::uint64_t s = rng();
            with_generic_point(sh.r(), rng, [&](const ParameterPoint& p) {
                StandardModule M(I, p);
                CheckResult local;
                for (int d = 0; d <= max_degree; ++d)
                    for (const auto& mu : monomials(sh.size(), d))
                        for (int t = 0; t < I.dim(); ++t) {
                            ModuleElement f = M.f_eigen(mu, t, s);
                            Rational lhs = M.norm(f) / I.gram(t);
                            Rational rhs = evaluate(norm_f(mu, I.tableau(t)), p);
                            local.record(lhs == rhs, [&] {
                                return detail::case_str(sh, mu, t) + ": oracle " + lhs.str() + " closed " + rhs.str();
                            });
                        }
                res.merge(local);
                return 0;
            });
        }
    });
}

// Closed form of |g_S|^2 against the oracle. With corrected = true the
// closed form is multiplied by symmetrizer_tie_constant.
inline CheckResult check_norm_g(const MultiPartition& sh, int max_entry, int points, std::mt19937_64& rng,
                                bool corrected) {
    return detail::timed(corrected ? "norm_g_tie_corrected" : "norm_g", [&](CheckResult& res) {
        IrrepModel I = build_irrep(sh);
        auto fillings = enumerate_column_strict(sh, max_entry, true);
        for (int rep = 0; rep < points; ++rep) {
            std::uint64_t s = rng();
            with_generic_point(sh.r(), rng, [&](const ParameterPoint& p) {
                StandardModule M(I, p);
                CheckResult local;
                for (const auto& S : fillings) {
                    auto t = tableau_for(I, S);
                    require(t.has_value(), "no tableau for " + S.str());
                    ModuleElement g = M.symmetrize(M.f_eigen(S.sorted_entries(), *t, s));
                    Rational lhs = M.norm(g) / I.gram(*t);
                    Rational rhs = evaluate(norm_gS(S), p);
                    if (corrected) rhs *= symmetrizer_tie_constant(S.sorted_entries(), I.tableau(*t));
                    local.record(lhs == rhs, [&] {
                        return sh.str() + " S=" + S.str() + ": oracle " + lhs.str() + " closed " + rhs.str();
                    });
                }
                res.merge(local);
                return 0;
            });
        }
    });
}

// Minimal invariant g_{lambda} against n! H E, up to the tie constant.
inline CheckResult check_minimal_norm(const MultiPartition& sh, int points, std::mt19937_64& rng, bool corrected) {
    return detail::timed(corrected ? "minimal_norm_tie_corrected" : "minimal_norm", [&](CheckResult& res) {
        IrrepModel I = build_irrep(sh);
        ShapeAssignment S = minimal_tableau(sh);
        auto t = tableau_for(I, S);
        require(t.has_value(), "no tableau for " + S.str());
        for (int rep = 0; rep < points; ++rep) {
            std::uint64_t s = rng();
            with_generic_point(sh.r(), rng, [&](const ParameterPoint& p) {
                StandardModule M(I, p);
                ModuleElement g = M.symmetrize(M.f_eigen(S.sorted_entries(), *t, s));
                Rational lhs = M.norm(g) / I.gram(*t);
                Rational rhs = evaluate(minimal_norm(sh), p);
                if (corrected) rhs *= symmetrizer_tie_constant(S.sorted_entries(), I.tableau(*t));
                res.record(lhs == rhs, [&] { return sh.str() + ": oracle " + lhs.str() + " closed " + rhs.str(); });
                return 0;
            });
        }
    });
}

// Both commutation relations hold for every j, not only the one the recursion used.
inline CheckResult check_defining_relations(StandardModule& M, int max_degree) {
    return detail::timed("defining_relations", [&](CheckResult& res) {
        const int n = M.n();
        for (int d = 0; d < max_degree; ++d)
            for (const auto& k : detail::degree_basis(M.irrep(), d)) {
                ModuleElement F = ModuleElement::basis(k.exps, k.tab);
                for (int i = 1; i <= n; ++i) {
                    ModuleElement yF = M.y(i, F);
                    if (d == 0) res.record(yF.is_zero(), [&] { return "y does not kill " + detail::key_str(M.irrep().shape(), k); });
                    else res.record(yF.degree() == d - 1 || yF.is_zero(), [&] { return "y degree " + detail::key_str(M.irrep().shape(), k); });
                    for (int j = 1; j <= n; ++j) {
                        ModuleElement lhs = M.y(i, M.x(j, F));
                        ModuleElement rhs = M.x(j, yF) + M.bracket(i, j, F);
                        res.record(lhs == rhs, [&] {
                            return "y_" + std::to_string(i) + " x_" + std::to_string(j) + " on " +
                                   detail::key_str(M.irrep().shape(), k);
                        });
                    }
                }
            }
    });
}

inline CheckResult check_y_commute(StandardModule& M, int max_degree) {
    return detail::timed("y_commute", [&](CheckResult& res) {
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& k : detail::degree_basis(M.irrep(), d)) {
                ModuleElement F = ModuleElement::basis(k.exps, k.tab);
                for (int i = 1; i <= M.n(); ++i)
                    for (int j = i + 1; j <= M.n(); ++j)
                        res.record(M.y(i, M.y(j, F)) == M.y(j, M.y(i, F)), [&] {
                            return "[y_" + std::to_string(i) + ", y_" + std::to_string(j) + "] on " +
                                   detail::key_str(M.irrep().shape(), k);
                        });
            }
    });
}

inline CheckResult check_z_commute(StandardModule& M, int max_degree) {
    return detail::timed("z_commute", [&](CheckResult& res) {
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& k : detail::degree_basis(M.irrep(), d)) {
                ModuleElement F = ModuleElement::basis(k.exps, k.tab);
                for (int i = 1; i <= M.n(); ++i) {
                    ModuleElement zi = M.z(i, F);
                    res.record(zi.is_zero() || zi.degree() == d, [&] { return "z not degree preserving"; });
                    for (int j = i + 1; j <= M.n(); ++j)
                        res.record(M.z(j, zi) == M.z(i, M.z(j, F)), [&] {
                            return "[z_" + std::to_string(i) + ", z_" + std::to_string(j) + "] on " +
                                   detail::key_str(M.irrep().shape(), k);
                        });
                }
            }
    });
}

// Symmetry, z self-adjointness, S_n invariance and orthogonality of distinct zeta weights.
inline CheckResult check_form(StandardModule& M, int max_degree, std::mt19937_64& rng, int samples = 4) {
    return detail::timed("contravariant_form", [&](CheckResult& res) {
        const int n = M.n();
        for (int d = 0; d <= max_degree; ++d) {
            auto basis = detail::degree_basis(M.irrep(), d);
            for (int s = 0; s < samples; ++s) {
                ModuleElement u = detail::random_element(basis, rng), v = detail::random_element(basis, rng);
                Rational uv = M.pairing(u, v);
                res.record(uv == M.pairing(v, u), [&] { return "form not symmetric in degree " + std::to_string(d); });
                for (int i = 1; i <= n; ++i)
                    res.record(M.pairing(M.z(i, u), v) == M.pairing(u, M.z(i, v)),
                               [&] { return "z_" + std::to_string(i) + " not self-adjoint in degree " + std::to_string(d); });
                for (int i = 1; i < n; ++i)
                    res.record(M.pairing(M.s_ij(i, i + 1, u), M.s_ij(i, i + 1, v)) == uv,
                               [&] { return "s_" + std::to_string(i) + " not an isometry in degree " + std::to_string(d); });
            }
            for (std::size_t a = 0; a < basis.size(); ++a)
                for (std::size_t b = a + 1; b < basis.size(); ++b)
                    if (M.weights(basis[a]) != M.weights(basis[b])) {
                        ModuleElement u = ModuleElement::basis(basis[a].exps, basis[a].tab);
                        ModuleElement v = ModuleElement::basis(basis[b].exps, basis[b].tab);
                        res.record(M.pairing(u, v).is_zero(), [&] { return "distinct zeta weights not orthogonal"; });
                    }
        }
    });
}

// z_i e_{mu,T} = (predicted) e_{mu,T} + terms at strictly lower compositions.
inline CheckResult check_triangularity(StandardModule& M, int max_degree) {
    return detail::timed("z_triangular", [&](CheckResult& res) {
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& mu : monomials(M.n(), d))
                for (int t = 0; t < M.irrep().dim(); ++t) {
                    ModuleElement e = M.e_basis(mu, t);
                    auto lam = M.predicted_eigenvalues(mu, t);
                    auto w = M.weight_of(e);
                    res.record(w && *w == M.predicted_weights(mu, t), [&] {
                        return "zeta weight of " + detail::case_str(M.irrep().shape(), mu, t);
                    });
                    for (int i = 1; i <= M.n(); ++i) {
                        ModuleElement rest = M.z(i, e) - e * lam[i - 1];
                        bool ok = true;
                        for (const auto& [k, c] : M.e_coordinates(rest))
                            if (composition_compare(k.exps, mu) != Order::less) ok = false;
                        res.record(ok, [&] {
                            return "z_" + std::to_string(i) + " on " + detail::case_str(M.irrep().shape(), mu, t);
                        });
                    }
                }
    });
}

// sigma_i^2 = 1 - g^2, norm scaling, the braid relation, and agreement with f_{s_i mu, T}.
inline CheckResult check_intertwiners(StandardModule& M, int max_degree, std::uint64_t seed) {
    return detail::timed("intertwiners", [&](CheckResult& res) {
        const int n = M.n();
        const auto& sh = M.irrep().shape();
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& mu : monomials(n, d))
                for (int t = 0; t < M.irrep().dim(); ++t) {
                    ModuleElement f = M.f_eigen(mu, t, seed);
                    Rational nf = M.norm(f);
                    for (int i = 1; i < n; ++i) {
                        Rational g = M.intertwiner_scalar(i, f);
                        ModuleElement sf = M.intertwiner_apply(i, f);
                        ModuleElement ssf = sf.is_zero() ? sf : M.intertwiner_apply(i, sf);
                        Rational one_minus = Rational(1) - g * g;
                        res.record(ssf == f * one_minus, [&] { return "sigma^2 at i=" + std::to_string(i) + " " + detail::case_str(sh, mu, t); });
                        res.record(M.norm(sf) == one_minus * nf, [&] { return "sigma norm at i=" + std::to_string(i) + " " + detail::case_str(sh, mu, t); });
                        if (mu[i - 1] < mu[i]) {
                            Composition nu = mu;
                            std::swap(nu[i - 1], nu[i]);
                            res.record(sf == M.f_eigen(nu, t, seed), [&] {
                                return "sigma_" + std::to_string(i) + " f != f_{s_i mu} for " + detail::case_str(sh, mu, t);
                            });
                        }
                        if (i + 1 < n) {
                            auto chain = [&](std::vector<int> word) {
                                ModuleElement v = f;
                                for (int k : word) {
                                    if (v.is_zero()) break;
                                    v = M.intertwiner_apply(k, v);
                                }
                                return v;
                            };
                            res.record(chain({i + 1, i, i + 1}) == chain({i, i + 1, i}), [&] {
                                return "braid at i=" + std::to_string(i) + " " + detail::case_str(sh, mu, t);
                            });
                        }
                    }
                }
    });
}

// e.f = 0 when S(mu,T) is not column-strict (mu non-decreasing), with
// sigma_i f = 0 and s_i f = -f at a vertical tie; e.f_{mu,T1} and e.f_{mu,T2}
// proportional when S agrees.
inline CheckResult check_jacks_lemma(StandardModule& M, int max_degree, std::uint64_t seed) {
    return detail::timed("jacks_lemma", [&](CheckResult& res) {
        const int n = M.n();
        const auto& I = M.irrep();
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& mu : monomials(n, d)) {
                if (!std::is_sorted(mu.begin(), mu.end())) continue;
                std::map<ShapeAssignment, std::vector<int>> classes;
                Permutation w = w_mu(mu);
                for (int t = 0; t < I.dim(); ++t) {
                    ShapeAssignment S = shape_assignment(mu, I.tableau(t));
                    classes[S].push_back(t);
                    if (S.is_column_strict()) continue;
                    ModuleElement f = M.f_eigen(mu, t, seed);
                    res.record(M.symmetrize(f).is_zero(), [&] { return "e.f != 0 for " + detail::case_str(I.shape(), mu, t); });
                    for (int i = 1; i < n; ++i) {
                        BoxRef b = I.tableau(t).box(w(i + 1)), below = I.tableau(t).box(w(i));
                        if (mu[i - 1] != mu[i] || below.component != b.component || below.column != b.column ||
                            below.row != b.row + 1)
                            continue;
                        res.record(M.intertwiner_apply(i, f).is_zero(), [&] { return "sigma f != 0 for " + detail::case_str(I.shape(), mu, t); });
                        res.record(M.s_ij(i, i + 1, f) == f * Rational(-1), [&] { return "s f != -f for " + detail::case_str(I.shape(), mu, t); });
                    }
                }
                for (const auto& [S, ts] : classes) {
                    if (ts.size() < 2) continue;
                    ModuleElement g0 = M.symmetrize(M.f_eigen(mu, ts[0], seed));
                    for (std::size_t k = 1; k < ts.size(); ++k) {
                        ModuleElement gk = M.symmetrize(M.f_eigen(mu, ts[k], seed));
                        bool ok = g0.is_zero() ? gk.is_zero() : gk.ratio_to(g0).has_value();
                        res.record(ok, [&] { return "e.f not proportional for " + I.shape().str() + " S=" + S.str(); });
                    }
                }
            }
    });
}

// The x^{mu+} part of g_{lambda} does not depend on the point.
inline CheckResult check_leading_term(const MultiPartition& sh, int points, std::mt19937_64& rng) {
    return detail::timed("leading_term", [&](CheckResult& res) {
        IrrepModel I = build_irrep(sh);
        ShapeAssignment S = minimal_tableau(sh);
        auto t = tableau_for(I, S);
        require(t.has_value(), "no tableau for " + S.str());
        Composition plus = sorted_plus(S.sorted_entries()).parts();
        plus.resize(sh.size(), 0);
        std::optional<ModuleElement> first;
        for (int rep = 0; rep < points; ++rep) {
            std::uint64_t s = rng();
            ModuleElement lead = with_generic_point(sh.r(), rng, [&](const ParameterPoint& p) {
                StandardModule M(I, p);
                ModuleElement g = M.symmetrize(M.f_eigen(S.sorted_entries(), *t, s));
                ModuleElement out;
                for (const auto& [k, c] : g.terms())
                    if (k.exps == plus) out.add(k, c);
                return out;
            });
            res.record(!lead.is_zero(), [&] { return sh.str() + ": no x^{mu+} term"; });
            if (!first) first = lead;
            else res.record(lead == *first, [&] { return sh.str() + ": leading term moved with the point"; });
        }
    });
}

inline CheckResult check_syt_count(int r, int n) {
    return detail::timed("syt_dimension_identity", [&](CheckResult& res) {
        Rational total;
        for (const auto& sh : enumerate_multipartitions(r, n)) {
            Rational dim(static_cast<long>(enumerate_syt(sh).size()));
            total += dim * dim;
        }
        Rational want = Rational(r).pow(n) * factorial(n);
        res.record(total == want, [&] { return "sum dim^2 = " + total.str() + ", want " + want.str(); });
    });
}

inline CheckResult check_symmetrizer_identity(int n, int samples, std::mt19937_64& rng) {
    return detail::timed("symmetrizer_identity", [&](CheckResult& res) {
        for (int s = 0; s < samples; ++s) {
            std::vector<Rational> zv;
            while (static_cast<int>(zv.size()) < n) {
                Rational v = random_rational(rng);
                if (std::find(zv.begin(), zv.end(), v) == zv.end()) zv.push_back(v);
            }
            Rational c0 = s == 0 ? Rational(0) : random_rational(rng);
            res.record(symmetrizer_identity_check(n, zv, c0), [&] { return "n=" + std::to_string(n); });
        }
    });
}

struct SuiteOptions {
    int r = 2;
    int n = 2;
    int degree = 3;
    std::uint64_t seed = 1;
    std::optional<MultiPartition> shape;
    int points = 3;
};

// Everything the oracle certifies for one (r, n), or one shape.
inline std::vector<CheckResult> run_oracle_suite(const SuiteOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<MultiPartition> shapes;
    if (opt.shape) {
        require(opt.shape->r() == opt.r && opt.shape->size() == opt.n, "oracle verify: shape does not match --r/--n");
        shapes.push_back(*opt.shape);
    } else {
        shapes = enumerate_multipartitions(opt.r, opt.n);
    }
    std::map<std::string, CheckResult> acc;
    auto add = [&](const CheckResult& c) {
        auto [it, fresh] = acc.try_emplace(c.name, c);
        if (!fresh) it->second.merge(c);
    };
    add(check_syt_count(opt.r, opt.n));
    add(check_symmetrizer_identity(opt.n, 20, rng));
    for (const auto& sh : shapes) {
        add(detail::timed("irrep_relations", [&](CheckResult& res) {
            build_irrep(sh);
            res.record(true, [] { return std::string(); });
        }));
        IrrepModel I = build_irrep(sh);
        ParameterPoint p = random_point(opt.r, rng);
        StandardModule M(I, p);
        add(check_defining_relations(M, opt.degree));
        add(check_y_commute(M, opt.degree));
        add(check_z_commute(M, opt.degree));
        add(check_form(M, opt.degree, rng));
        add(check_triangularity(M, opt.degree));
        std::uint64_t s = rng();
        add(check_intertwiners(M, std::min(opt.degree, 2), s));
        add(check_jacks_lemma(M, opt.degree, s));
        add(check_norm_f(sh, opt.degree, opt.points, rng));
        add(check_norm_g(sh, opt.degree, opt.points, rng, false));
        add(check_norm_g(sh, opt.degree, opt.points, rng, true));
        add(check_minimal_norm(sh, opt.points, rng, false));
        add(check_minimal_norm(sh, opt.points, rng, true));
        add(check_leading_term(sh, opt.points, rng));
    }
    std::vector<CheckResult> out;
    for (auto& [k, v] : acc) {
        if (k == "norm_g" || k == "minimal_norm")
            v.note = "closed form without the tied-pair factors";
        out.push_back(v);
    }
    return out;
}

} // namespace cherednik
