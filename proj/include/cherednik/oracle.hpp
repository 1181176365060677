#pragma once

// Brute-force standard module M(lambda) = Q[x_1..x_n] (x) S^lambda at a rational
// parameter point, built from the defining relations only. It certifies the
// closed formulas of norms.hpp.
//
// Every operator here (x, y, s_ij, z, e_ij) maps zeta-weight vectors to
// zeta-weight vectors with rational coefficients, so module elements are kept
// over Q in the weight basis x^nu (x) v_T. The cyclotomic field only enters
// when the irrep's zeta_i matrices are validated.

#include "cherednik/combinatorics.hpp"
#include "cherednik/cyclotomic.hpp"
#include "cherednik/norms.hpp"
#include "cherednik/scalars.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace cherednik {

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix identity_matrix(int d) {
    RatMatrix m(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix c(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

// ---------------------------------------------------------------------------
// Irreducible representation in seminormal form

class IrrepModel {
public:
    const MultiPartition& shape() const { return shape_; }
    int r() const { return shape_.r(); }
    int n() const { return shape_.size(); }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<StandardTableau>& basis() const { return basis_; }
    const StandardTableau& tableau(int t) const { return basis_[t]; }
    int index_of(const StandardTableau& T) const { return index_.at(T); }

    // Matrix of s_i, 1 <= i < n; column t is the image of v_t.
    const RatMatrix& s(int i) const { return s_[i - 1]; }
    // zeta_i v_t = zeta^{zeta_exponent(i, t)} v_t
    int zeta_exponent(int i, int t) const { return basis_[t].box(i).component; }
    const Rational& gram(int t) const { return gram_[t]; }
    const std::vector<Rational>& gram() const { return gram_; }

    // Matrix of an arbitrary permutation, via a reduced word.
    RatMatrix perm(const Permutation& w) const {
        RatMatrix m = identity_matrix(dim());
        for (int k : w.reduced_word()) m = m * s(k);
        return m;
    }
    RatMatrix transposition(int i, int j) const { return perm(Permutation::transposition(n(), i, j)); }

    friend IrrepModel build_irrep(const MultiPartition& shape);

private:
    MultiPartition shape_;
    std::vector<StandardTableau> basis_;
    std::map<StandardTableau, int> index_;
    std::vector<RatMatrix> s_;
    std::vector<Rational> gram_;
};

namespace detail {

inline void validate(bool ok, const std::string& what, const MultiPartition& shape) {
    if (!ok) throw ValidationError("irrep " + shape.str() + ": " + what);
}

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

inline CycMatrix to_cyc(const RatMatrix& m, int r) {
    CycMatrix c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) c[i].push_back(Cyclotomic(r, x));
    return c;
}

inline CycMatrix mul(const CycMatrix& a, const CycMatrix& b, int r) {
    const std::size_t n = a.size();
    CycMatrix c(n, std::vector<Cyclotomic>(n, Cyclotomic(r)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

} // namespace detail

inline IrrepModel build_irrep(const MultiPartition& shape) {
    IrrepModel M;
    M.shape_ = shape;
    M.basis_ = enumerate_syt(shape);
    const int d = M.dim(), n = shape.size(), r = shape.r();
    for (int t = 0; t < d; ++t) M.index_[M.basis_[t]] = t;

    for (int i = 1; i < n; ++i) {
        RatMatrix m(d, std::vector<Rational>(d));
        for (int t = 0; t < d; ++t) {
            const StandardTableau& T = M.basis_[t];
            const BoxRef& a = T.box(i);
            const BoxRef& b = T.box(i + 1);
            if (a.component != b.component) {
                m[M.index_of(T.swapped(i))][t] = 1;
            } else if (a.row == b.row) {
                m[t][t] = 1;
            } else if (a.column == b.column) {
                m[t][t] = -1;
            } else {
                Rational rho(b.content() - a.content());
                int u = M.index_of(T.swapped(i));
                m[t][t] = rho.inverse();
                // v_T -> v_{s_i T} carries 1 when rho > 0, the partner carries 1 - 1/rho^2.
                m[u][t] = rho.sign() > 0 ? Rational(1) : Rational(1) - rho.inverse() * rho.inverse();
            }
        }
        M.s_.push_back(std::move(m));
    }

    // Diagonal gram making every s_i self-adjoint, spread along s_i-edges.
    std::vector<std::optional<Rational>> g(d);
    if (d > 0) g[0] = Rational(1);
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size() && d > 0; ++q) {
        int t = queue[q];
        for (int i = 1; i < n; ++i) {
            const auto& m = M.s_[i - 1];
            for (int u = 0; u < d; ++u) {
                if (u == t || m[u][t].is_zero() || g[u]) continue;
                g[u] = *g[t] * m[t][u] / m[u][t];
                queue.push_back(u);
            }
        }
    }
    for (int t = 0; t < d; ++t) {
        detail::validate(g[t].has_value(), "tableau graph is disconnected", shape);
        M.gram_.push_back(*g[t]);
        detail::validate(M.gram_.back().sign() > 0, "gram entry not positive", shape);
    }

    // Relation suite.
    RatMatrix one = identity_matrix(d);
    for (int i = 1; i < n; ++i) {
        const auto& si = M.s_[i - 1];
        detail::validate(si * si == one, "s_" + std::to_string(i) + "^2 != 1", shape);
        for (int u = 0; u < d; ++u)
            for (int t = 0; t < d; ++t)
                detail::validate(M.gram_[u] * si[u][t] == M.gram_[t] * si[t][u],
                                 "s_" + std::to_string(i) + " not self-adjoint", shape);
        if (i + 1 < n) {
            const auto& sj = M.s_[i];
            detail::validate(si * sj * si == sj * si * sj, "braid relation fails at " + std::to_string(i), shape);
        }
        for (int j = i + 2; j < n; ++j)
            detail::validate(si * M.s_[j - 1] == M.s_[j - 1] * si, "distant s_i do not commute", shape);
    }
    // zeta_i as diagonal matrices over Q(zeta_r).
    std::vector<detail::CycMatrix> Z;
    for (int i = 1; i <= n; ++i) {
        detail::CycMatrix z(d, std::vector<Cyclotomic>(d, Cyclotomic(r)));
        for (int t = 0; t < d; ++t) z[t][t] = Cyclotomic::zeta_power(r, M.zeta_exponent(i, t));
        Z.push_back(std::move(z));
    }
    detail::CycMatrix cone = detail::to_cyc(one, r);
    for (int i = 1; i <= n; ++i) {
        detail::CycMatrix p = cone;
        for (int k = 0; k < r; ++k) p = detail::mul(p, Z[i - 1], r);
        detail::validate(p == cone, "zeta_" + std::to_string(i) + "^r != 1", shape);
        for (int t = 0; t < d; ++t) {
            const Cyclotomic& zt = Z[i - 1][t][t];
            detail::validate(zt.conj() * zt == Cyclotomic(r, Rational(1)), "zeta not unitary", shape);
        }
        for (int j = i + 1; j <= n; ++j)
            detail::validate(detail::mul(Z[i - 1], Z[j - 1], r) == detail::mul(Z[j - 1], Z[i - 1], r),
                             "zeta_i do not commute", shape);
    }
    for (int i = 1; i < n; ++i) {
        detail::CycMatrix si = detail::to_cyc(M.s_[i - 1], r);
        detail::validate(detail::mul(detail::mul(si, Z[i - 1], r), si, r) == Z[i],
                         "s_i zeta_i s_i != zeta_{i+1} at " + std::to_string(i), shape);
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1)
                detail::validate(detail::mul(si, Z[j - 1], r) == detail::mul(Z[j - 1], si, r),
                                 "s_i does not commute with zeta_j", shape);
    }
    return M;
}

// ---------------------------------------------------------------------------
// Module elements

struct BasisKey {
    std::vector<int> exps;  // nu
    int tab;                // index into the irrep basis
    auto operator<=>(const BasisKey&) const = default;
    bool operator==(const BasisKey&) const = default;
};

class ModuleElement {
public:
    using Map = std::map<BasisKey, Rational>;

    ModuleElement() = default;
    static ModuleElement basis(std::vector<int> exps, int tab) {
        ModuleElement e;
        e.terms_[{std::move(exps), tab}] = 1;
        return e;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const BasisKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int degree() const {
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, std::accumulate(k.exps.begin(), k.exps.end(), 0));
        return d;
    }

    void add(const BasisKey& k, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(const ModuleElement& o, const Rational& s = Rational(1)) {
        if (s.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, v * s);
    }

    ModuleElement& operator+=(const ModuleElement& o) {
        add(o);
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& o) {
        add(o, Rational(-1));
        return *this;
    }
    ModuleElement& operator*=(const Rational& s) {
        if (s.is_zero()) terms_.clear();
        else
            for (auto& [k, v] : terms_) v *= s;
        return *this;
    }
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(ModuleElement a, const Rational& s) { return a *= s; }
    friend ModuleElement operator*(const Rational& s, ModuleElement a) { return a *= s; }
    bool operator==(const ModuleElement&) const = default;

    // Some c with *this = c * o, if any.
    std::optional<Rational> ratio_to(const ModuleElement& o) const {
        if (o.is_zero()) return is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
        const auto& [k0, v0] = *o.terms_.begin();
        Rational c = coeff(k0) / v0;
        if (!(*this == o * c)) return std::nullopt;
        return c;
    }

private:
    Map terms_;
};

// All exponent vectors of length n and total degree d.
inline std::vector<std::vector<int>> monomials(int n, int d) { return enumerate_compositions(n, d); }

// ---------------------------------------------------------------------------
// Operators on M(lambda) at a fixed point

class StandardModule {
public:
    StandardModule(IrrepModel irrep, ParameterPoint point) : irrep_(std::move(irrep)), p_(std::move(point)) {
        require(p_.r == irrep_.r(), "standard module: point and shape disagree on r");
        const int n = irrep_.n();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) trans_[{i, j}] = irrep_.transposition(i, j);
    }

    const IrrepModel& irrep() const { return irrep_; }
    const ParameterPoint& point() const { return p_; }
    int n() const { return irrep_.n(); }
    int r() const { return irrep_.r(); }

    // zeta_i weight exponent of a basis vector.
    int weight(const BasisKey& k, int i) const { return mod(irrep_.zeta_exponent(i, k.tab) - k.exps[i - 1], r()); }
    std::vector<int> weights(const BasisKey& k) const {
        std::vector<int> a;
        for (int i = 1; i <= n(); ++i) a.push_back(weight(k, i));
        return a;
    }
    // Joint zeta-weight of a homogeneous-weight element; empty if mixed or zero.
    std::optional<std::vector<int>> weight_of(const ModuleElement& v) const {
        std::optional<std::vector<int>> w;
        for (const auto& [k, c] : v.terms()) {
            auto a = weights(k);
            if (w && *w != a) return std::nullopt;
            w = a;
        }
        return w;
    }

    ModuleElement x(int j, const ModuleElement& v) const {
        ModuleElement out;
        for (const auto& [k, c] : v.terms()) {
            BasisKey k2 = k;
            ++k2.exps[j - 1];
            out.add(k2, c);
        }
        return out;
    }

    ModuleElement act(const Permutation& w, const ModuleElement& v) const {
        RatMatrix m = irrep_.perm(w);
        return act_with(w, m, v);
    }
    ModuleElement s_ij(int i, int j, const ModuleElement& v) const {
        if (i > j) std::swap(i, j);
        return act_with(Permutation::transposition(n(), i, j), trans_.at({i, j}), v);
    }

    // [y_i, x_j] applied to v (may mix weights; computed per basis term).
    ModuleElement bracket(int i, int j, const ModuleElement& v) const {
        ModuleElement out;
        const Rational rc0 = Rational(r()) * p_.c0;
        for (const auto& [k, c] : v.terms()) {
            ModuleElement b = ModuleElement::basis(k.exps, k.tab);
            auto a = weights(k);
            if (i == j) {
                out.add(b, c * (Rational(1) - (p_.d_at(a[i - 1]) - p_.d_at(a[i - 1] - 1))));
                for (int l = 1; l <= n(); ++l)
                    if (l != i && a[l - 1] == a[i - 1]) out.add(s_ij(i, l, b), -c * rc0);
            } else if (mod(a[j - 1] - a[i - 1] - 1, r()) == 0) {
                out.add(s_ij(i, j, b), c * rc0);
            }
        }
        return out;
    }

    ModuleElement y(int i, const ModuleElement& v) {
        ModuleElement out;
        for (const auto& [k, c] : v.terms()) out.add(y_basis(i, k), c);
        return out;
    }

    // z_i = y_i x_i + c0 sum_{j<i} sum_l zeta_i^l s_ij zeta_i^{-l}
    ModuleElement z(int i, const ModuleElement& v) {
        ModuleElement out = y(i, x(i, v));
        const Rational rc0 = Rational(r()) * p_.c0;
        for (const auto& [k, c] : v.terms()) {
            auto a = weights(k);
            ModuleElement b = ModuleElement::basis(k.exps, k.tab);
            for (int j = 1; j < i; ++j)
                if (a[j - 1] == a[i - 1]) out.add(s_ij(j, i, b), c * rc0);
        }
        return out;
    }

    // <u, v> = sum u_{nu,T} gamma_T (y^nu v)_{0,T}; coefficients are real here.
    Rational pairing(const ModuleElement& u, const ModuleElement& v) {
        Rational total;
        std::map<std::vector<int>, ModuleElement> cache;
        for (const auto& [k, c] : u.terms()) {
            auto it = cache.find(k.exps);
            if (it == cache.end()) {
                ModuleElement w = v;
                for (int i = 1; i <= n(); ++i)
                    for (int e = 0; e < k.exps[i - 1]; ++e) w = y(i, w);
                it = cache.emplace(k.exps, std::move(w)).first;
            }
            total += c * irrep_.gram(k.tab) * it->second.coeff({std::vector<int>(n(), 0), k.tab});
        }
        return total;
    }
    Rational norm(const ModuleElement& v) { return pairing(v, v); }

    ModuleElement symmetrize(const ModuleElement& v) const {
        ModuleElement out;
        std::vector<int> img(n());
        std::iota(img.begin(), img.end(), 1);
        do {
            out += act(Permutation(img), v);
        } while (std::next_permutation(img.begin(), img.end()));
        return out;
    }

    // e_{nu,S} = x^nu (x) w_nu^{-1} v_S
    ModuleElement e_basis(const std::vector<int>& nu, int S) const {
        RatMatrix m = irrep_.perm(w_mu(nu).inverse());
        ModuleElement out;
        for (int t = 0; t < irrep_.dim(); ++t) out.add({nu, t}, m[t][S]);
        return out;
    }
    // Coordinates in the e-basis.
    std::map<BasisKey, Rational> e_coordinates(const ModuleElement& v) const {
        std::map<std::vector<int>, std::vector<Rational>> parts;
        for (const auto& [k, c] : v.terms()) {
            auto& vec = parts[k.exps];
            vec.resize(irrep_.dim());
            vec[k.tab] = c;
        }
        std::map<BasisKey, Rational> out;
        for (auto& [nu, c] : parts) {
            RatMatrix m = irrep_.perm(w_mu(nu));
            for (int s = 0; s < irrep_.dim(); ++s) {
                Rational a;
                for (int t = 0; t < irrep_.dim(); ++t) a += m[s][t] * c[t];
                if (!a.is_zero()) out[{nu, s}] = a;
            }
        }
        return out;
    }

    // Predicted z eigenvalues of e_{nu,S} at the point.
    std::vector<Rational> predicted_eigenvalues(const std::vector<int>& nu, int S) const {
        std::vector<Rational> out;
        for (const auto& sd : spectrum(nu, irrep_.tableau(S))) out.push_back(sd.z_eigenvalue.evaluate(p_));
        return out;
    }
    std::vector<int> predicted_weights(const std::vector<int>& nu, int S) const {
        std::vector<int> out;
        for (const auto& sd : spectrum(nu, irrep_.tableau(S))) out.push_back(sd.zeta_residue);
        return out;
    }

    // z eigenvalues of a joint eigenvector; nullopt if v is not one.
    std::optional<std::vector<Rational>> eigenvalues(const ModuleElement& v) {
        if (v.is_zero()) return std::nullopt;
        std::vector<Rational> out;
        for (int i = 1; i <= n(); ++i) {
            auto c = z(i, v).ratio_to(v);
            if (!c) return std::nullopt;
            out.push_back(*c);
        }
        return out;
    }

    // Unique eigenvector with leading term e_{mu,T}.
    ModuleElement f_eigen(const std::vector<int>& mu, int T, std::uint64_t seed = 1) {
        require(static_cast<int>(mu.size()) == n(), "f_eigen: composition length must be n");
        const int d = std::accumulate(mu.begin(), mu.end(), 0);
        const auto target_w = predicted_weights(mu, T);
        const auto target = predicted_eigenvalues(mu, T);

        // Weight-compatible basis in decreasing order of (nu+ lex, l(w_nu)).
        struct Item {
            std::vector<int> nu;
            int S;
            Partition plus;
            int len;
        };
        std::vector<Item> items;
        for (const auto& nu : monomials(n(), d))
            for (int S = 0; S < irrep_.dim(); ++S)
                if (predicted_weights(nu, S) == target_w && !(nu == mu && S == T))
                    items.push_back({nu, S, sorted_plus(nu), w_mu(nu).length()});
        std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            if (a.plus != b.plus) return a.plus.parts() > b.plus.parts();
            return a.len > b.len;
        });
        std::mt19937_64 rng(seed);
        std::vector<Rational> alpha;
        for (int i = 0; i < n(); ++i) alpha.push_back(random_rational(rng, false));
        auto Z = [&](const ModuleElement& v) {
            ModuleElement out;
            for (int i = 1; i <= n(); ++i) out.add(z(i, v), alpha[i - 1]);
            return out;
        };
        auto lambda_of = [&](const std::vector<Rational>& ev) {
            Rational s;
            for (int i = 0; i < n(); ++i) s += alpha[i] * ev[i];
            return s;
        };
        const Rational lam = lambda_of(target);

        ModuleElement f = e_basis(mu, T);
        // residual = (Z - lam) f, expressed in e-coordinates
        std::vector<Rational> gaps;
        for (const auto& it : items) {
            gaps.push_back(lambda_of(predicted_eigenvalues(it.nu, it.S)) - lam);
            if (gaps.back().is_zero())
                throw CollisionError("f_eigen: eigenvalue collision between (" + comp_str(mu) + ") and (" +
                                     comp_str(it.nu) + ") at this point");
        }
        ModuleElement Zf = Z(f);
        ModuleElement res = Zf - f * lam;
        for (std::size_t idx = 0; idx < items.size(); ++idx) {
            auto coords = e_coordinates(res);
            BasisKey key{items[idx].nu, items[idx].S};
            auto itc = coords.find(key);
            if (itc == coords.end()) continue;
            Rational c = -itc->second / gaps[idx];
            ModuleElement e = e_basis(items[idx].nu, items[idx].S);
            f.add(e, c);
            // (Z - lam) e = gap * e + lower terms
            ModuleElement de = Z(e) - e * lam;
            res.add(de, c);
        }
        // exact verification
        for (int i = 1; i <= n(); ++i) {
            ModuleElement chk = z(i, f) - f * target[i - 1];
            if (!chk.is_zero())
                throw ValidationError("f_eigen: result is not a z_" + std::to_string(i) + " eigenvector for (" +
                                      comp_str(mu) + ")");
        }
        return f;
    }

    // sigma_i v = s_i v + g v, with g = r c0 / (z_i - z_{i+1}) when the weights at i, i+1 agree.
    ModuleElement intertwiner_apply(int i, const ModuleElement& v) {
        if (v.is_zero()) return v;
        auto ev = eigenvalues(v);
        auto w = weight_of(v);
        if (!ev || !w) throw DomainError("intertwiner_apply: argument is not a weight eigenvector");
        ModuleElement out = s_ij(i, i + 1, v);
        if ((*w)[i - 1] == (*w)[i]) {
            Rational gap = (*ev)[i - 1] - (*ev)[i];
            if (gap.is_zero()) throw PoleError("intertwiner_apply: zero gap z_i - z_{i+1}");
            out.add(v, Rational(r()) * p_.c0 / gap);
        }
        return out;
    }
    // Scalar g_{alpha_i} on a weight eigenvector.
    Rational intertwiner_scalar(int i, const ModuleElement& v) {
        auto ev = eigenvalues(v);
        auto w = weight_of(v);
        if (!ev || !w) throw DomainError("intertwiner_scalar: argument is not a weight eigenvector");
        if ((*w)[i - 1] != (*w)[i]) return Rational(0);
        Rational gap = (*ev)[i - 1] - (*ev)[i];
        if (gap.is_zero()) throw PoleError("intertwiner_scalar: zero gap");
        return Rational(r()) * p_.c0 / gap;
    }

    static std::string comp_str(const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    }

private:
    ModuleElement act_with(const Permutation& w, const RatMatrix& m, const ModuleElement& v) const {
        ModuleElement out;
        for (const auto& [k, c] : v.terms()) {
            std::vector<int> e2 = act(w, k.exps);
            for (int t = 0; t < irrep_.dim(); ++t)
                if (!m[t][k.tab].is_zero()) out.add({e2, t}, c * m[t][k.tab]);
        }
        return out;
    }
    static std::vector<int> act(const Permutation& w, const std::vector<int>& e) { return cherednik::act(w, e); }

    const ModuleElement& y_basis(int i, const BasisKey& k) {
        auto key = std::make_pair(i, k);
        auto it = ymemo_.find(key);
        if (it != ymemo_.end()) return it->second;
        ModuleElement out;
        int j = 0;
        for (int l = 1; l <= n(); ++l)
            if (k.exps[l - 1] > 0) {
                j = l;
                break;
            }
        if (j != 0) {
            BasisKey g = k;
            --g.exps[j - 1];
            ModuleElement G = ModuleElement::basis(g.exps, g.tab);
            ModuleElement yg = y(i, G);
            out = x(j, yg) + bracket(i, j, G);
        }
        return ymemo_.emplace(key, std::move(out)).first->second;
    }

    IrrepModel irrep_;
    ParameterPoint p_;
    std::map<std::pair<int, int>, RatMatrix> trans_;
    std::map<std::pair<int, BasisKey>, ModuleElement> ymemo_;
};

// Runs fn(point) at random points until no collision, up to 5 tries.
template <class Fn>
auto with_generic_point(int r, std::mt19937_64& rng, Fn&& fn) {
    for (int attempt = 0;; ++attempt) {
        ParameterPoint p = random_point(r, rng);
        try {
            return fn(p);
        } catch (const CollisionError&) {
            if (attempt >= 4) throw;
        } catch (const PoleError&) {
            if (attempt >= 4) throw;
        }
    }
}

// First SYT T with S(mu, T) = S, mu the sorted entries of S.
inline std::optional<int> tableau_for(const IrrepModel& irrep, const ShapeAssignment& S) {
    Composition mu = S.sorted_entries();
    for (int t = 0; t < irrep.dim(); ++t)
        if (shape_assignment(mu, irrep.tableau(t)) == S) return t;
    return std::nullopt;
}

// g_S = e . f_{mu,T}
inline ModuleElement g_S(StandardModule& M, const ShapeAssignment& S, int* chosen = nullptr) {
    auto t = tableau_for(M.irrep(), S);
    require(t.has_value(), "g_S: no standard tableau realizes " + S.str());
    if (chosen) *chosen = *t;
    return M.symmetrize(M.f_eigen(S.sorted_entries(), *t));
}

// Sum over S_n of prod_{inversions}(1 + t/(z_i-z_j)) prod_{others}(1 - t/(z_i-z_j)) with t = r c0.
inline bool symmetrizer_identity_check(int n, const std::vector<Rational>& zv, const Rational& c0, int r = 1) {
    require(static_cast<int>(zv.size()) == n, "symmetrizer_identity_check: need n values");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) require(zv[i] != zv[j], "symmetrizer_identity_check: coincident z values");
    const Rational t = Rational(r) * c0;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    Rational total;
    do {
        Rational term(1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rational q = t / (zv[i] - zv[j]);
                term *= img[i] > img[j] ? Rational(1) + q : Rational(1) - q;
            }
        total += term;
    } while (std::next_permutation(img.begin(), img.end()));
    return total == factorial(n);
}

} // namespace cherednik
