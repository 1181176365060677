#pragma once

// The orders >=_c, >='_c and the equivalence ==_c on r-partitions, beta
// numbers, and the (core, quotient) <-> partition bijection.

#include "cherednik/combinatorics.hpp"
#include "cherednik/scalars.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cherednik {

class OrderContext {
public:
    explicit OrderContext(ParameterPoint p) : p_(std::move(p)) {}
    const ParameterPoint& point() const { return p_; }
    int r() const { return p_.r; }

    // d_beta / (r c0) + ct
    Rational theta(const BoxRef& b) const {
        require(!p_.c0.is_zero(), "order context: c0 must be nonzero");
        return p_.d_at(b.component) / (Rational(p_.r) * p_.c0) + Rational(b.content());
    }
    // ct + (d_beta - beta) / (r c0)
    Rational theta_tilde(const BoxRef& b) const {
        require(!p_.c0.is_zero(), "order context: c0 must be nonzero");
        return Rational(b.content()) + (p_.d_at(b.component) - Rational(b.component)) / (Rational(p_.r) * p_.c0);
    }
    // a_i = d_{r-i} / (r c0), i = 1..r, when all are integers.
    std::optional<std::vector<long>> integer_charges() const {
        std::vector<long> a;
        for (int i = 1; i <= p_.r; ++i) {
            Rational q = p_.d_at(p_.r - i) / (Rational(p_.r) * p_.c0);
            if (!q.is_integer()) return std::nullopt;
            a.push_back(q.to_long());
        }
        return a;
    }

private:
    ParameterPoint p_;
};

namespace detail {

inline void require_positive_c0(const OrderContext& ctx) {
    require(ctx.point().c0.sign() > 0, "the order >=_c needs c0 > 0");
}

inline void require_same_size(const MultiPartition& a, const MultiPartition& b, const OrderContext& ctx) {
    require(a.r() == ctx.r() && b.r() == ctx.r(), "shapes and parameters disagree on r");
    require(a.size() == b.size(), "shapes of different sizes are not compared");
}

// |{b : theta(b) > j, or theta(b) = j and beta(b) <= l}|
inline long counting(const MultiPartition& shape, const OrderContext& ctx, const Rational& j, int l) {
    long c = 0;
    for (const auto& b : shape.boxes()) {
        Rational t = ctx.theta(b);
        if (t > j || (t == j && b.component <= l)) ++c;
    }
    return c;
}

} // namespace detail

// Thresholds j range over realized theta values. Between them the counting
// functions equal their value at the next realized value up.
inline bool geq_c(const MultiPartition& lam, const MultiPartition& chi, const OrderContext& ctx) {
    detail::require_positive_c0(ctx);
    detail::require_same_size(lam, chi, ctx);
    std::set<Rational> js;
    for (const auto& b : lam.boxes()) js.insert(ctx.theta(b));
    for (const auto& b : chi.boxes()) js.insert(ctx.theta(b));
    for (const auto& j : js)
        for (int l = 0; l < ctx.r(); ++l)
            if (detail::counting(lam, ctx, j, l) < detail::counting(chi, ctx, j, l)) return false;
    return true;
}

// Same check on a dense grid of thresholds, for validation of the reduction.
inline bool geq_c_dense(const MultiPartition& lam, const MultiPartition& chi, const OrderContext& ctx, int per_unit = 12) {
    detail::require_positive_c0(ctx);
    detail::require_same_size(lam, chi, ctx);
    std::vector<Rational> th;
    for (const auto& b : lam.boxes()) th.push_back(ctx.theta(b));
    for (const auto& b : chi.boxes()) th.push_back(ctx.theta(b));
    if (th.empty()) return true;
    Rational lo = *std::min_element(th.begin(), th.end()) - Rational(1);
    Rational hi = *std::max_element(th.begin(), th.end()) + Rational(1);
    std::vector<Rational> js(th);
    for (Rational j = lo; j <= hi; j += Rational(1, per_unit)) js.push_back(j);
    for (const auto& j : js)
        for (int l = 0; l < ctx.r(); ++l)
            if (detail::counting(lam, ctx, j, l) < detail::counting(chi, ctx, j, l)) return false;
    return true;
}

inline Order compare_c(const MultiPartition& lam, const MultiPartition& chi, const OrderContext& ctx) {
    if (lam == chi) return Order::equal;
    bool ge = geq_c(lam, chi, ctx), le = geq_c(chi, lam, ctx);
    if (ge && le) return Order::equal;
    if (ge) return Order::greater;
    if (le) return Order::less;
    return Order::incomparable;
}

// theta~ multisets agree modulo 1/c0, i.e. theta~ * c0 agree modulo 1.
inline bool equiv_c(const MultiPartition& lam, const MultiPartition& chi, const OrderContext& ctx) {
    require(!ctx.point().c0.is_zero(), "==_c needs c0 != 0");
    detail::require_same_size(lam, chi, ctx);
    auto classes = [&](const MultiPartition& s) {
        std::multiset<Rational> out;
        for (const auto& b : s.boxes()) {
            Rational x = ctx.theta_tilde(b) * ctx.point().c0;
            out.insert(x - Rational(x.floor()));
        }
        return out;
    };
    return classes(lam) == classes(chi);
}

struct LinkagePair {
    BoxRef box;      // in lambda
    BoxRef partner;  // in chi
    long mu;
};

// mu = d_beta(b) - d_beta(b') + r (ct b - ct b') c0, a non-negative integer
// with beta(b) - mu = beta(b') mod r.
inline std::optional<long> linkage_mu(const BoxRef& b, const BoxRef& bp, const OrderContext& ctx) {
    const auto& p = ctx.point();
    Rational mu = p.d_at(b.component) - p.d_at(bp.component) +
                  Rational(p.r) * Rational(b.content() - bp.content()) * p.c0;
    if (!mu.is_integer() || mu.sign() < 0) return std::nullopt;
    long m = mu.to_long();
    if (mod(b.component - m - bp.component, p.r) != 0) return std::nullopt;
    return m;
}

// Perfect matching on admissible pairs, augmenting paths in box order.
inline std::optional<std::vector<LinkagePair>> linkage_matching(const MultiPartition& lam, const MultiPartition& chi,
                                                                const OrderContext& ctx) {
    detail::require_same_size(lam, chi, ctx);
    auto A = lam.boxes(), B = chi.boxes();
    const std::size_t n = A.size();
    std::vector<std::vector<std::pair<int, long>>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (auto m = linkage_mu(A[i], B[j], ctx)) adj[i].push_back({static_cast<int>(j), *m});
    std::vector<int> owner(n, -1);
    std::vector<long> mu_of(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> seen(n, 0);
        auto augment = [&](auto&& self, int u) -> bool {
            for (auto [v, m] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                if (owner[v] < 0 || self(self, owner[v])) {
                    owner[v] = u;
                    mu_of[v] = m;
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, static_cast<int>(i))) return std::nullopt;
    }
    std::vector<LinkagePair> out(n);
    for (std::size_t v = 0; v < n; ++v) out[owner[v]] = {A[owner[v]], B[v], mu_of[v]};
    return out;
}

// ---------------------------------------------------------------------------
// Beta numbers

class BetaSet {
public:
    BetaSet(Partition lambda, Rational s) : lambda_(std::move(lambda)), s_(std::move(s)) {}
    const Partition& partition() const { return lambda_; }
    const Rational& shift() const { return s_; }

    // lambda_j + s - j + 1
    Rational member(int j) const { return Rational(lambda_.row(j)) + s_ - Rational(j - 1); }
    std::vector<Rational> first(int count) const {
        std::vector<Rational> out;
        for (int j = 1; j <= count; ++j) out.push_back(member(j));
        return out;
    }
    bool contains(const Rational& x) const {
        Rational t = x - s_;
        if (!t.is_integer()) return false;
        long v = t.to_long();  // lambda_j - j + 1 = v
        for (int j = 1; j <= lambda_.length() + 1; ++j)
            if (lambda_.row(j) - j + 1 == v) return true;
        return v <= -lambda_.length();
    }
    // |{x in B : x >= t}|
    long count_at_least(const Rational& t) const {
        long c = 0;
        for (int j = 1;; ++j) {
            if (member(j) < t) break;
            ++c;
        }
        return c;
    }

    // From the top `members`, assumed to continue downward by steps of 1
    // below the last one.
    static BetaSet reconstruct(const std::vector<Rational>& members) {
        require(!members.empty(), "beta set reconstruction needs at least one member");
        for (std::size_t i = 1; i < members.size(); ++i)
            require(members[i] < members[i - 1], "beta numbers must be strictly decreasing");
        const int K = static_cast<int>(members.size());
        Rational s = members.back() + Rational(K - 1);
        std::vector<int> parts;
        for (int j = 1; j <= K; ++j) {
            Rational v = members[j - 1] - s + Rational(j - 1);
            require(v.is_integer() && v.sign() >= 0, "beta numbers do not come from a partition");
            parts.push_back(static_cast<int>(v.to_long()));
        }
        for (std::size_t i = 1; i < parts.size(); ++i)
            require(parts[i] <= parts[i - 1], "beta numbers do not come from a partition");
        return BetaSet(Partition(parts), s);
    }

    bool operator==(const BetaSet&) const = default;

private:
    Partition lambda_;
    Rational s_;
};

inline BetaSet beta_numbers(const Partition& lambda, const Rational& s) { return BetaSet(lambda, s); }

// |{b in lambda : ct(b) = k}| read off the beta numbers
inline long content_count_via_beta(const BetaSet& B, long k) {
    long c = B.count_at_least(Rational(k) + B.shift() + Rational(1));
    return k >= 0 ? c : c + k;
}

inline long content_count(const Partition& lambda, long k) {
    long c = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        if (k + i >= 1 && k + i <= lambda.row(i)) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// Core and quotient

using CorePoint = std::vector<long>;  // a_1..a_r, sum zero

inline void validate_core_point(const CorePoint& a, int r) {
    require(static_cast<int>(a.size()) == r, "core point needs r = " + std::to_string(r) + " entries");
    long s = 0;
    for (long x : a) s += x;
    require(s == 0, "core point entries must sum to zero");
}

// lambda^{(i)} = lambda^{r-i}; B_0(lambda) = U_i {i + r(x-1) : x in B_{a_i}(lambda^{(i)})}
inline Partition assemble(const CorePoint& a, const MultiPartition& quotient) {
    const int r = quotient.r();
    validate_core_point(a, r);
    auto comp = [&](int i) -> const Partition& { return quotient.component(mod(r - i, r)); };
    long x0 = 0;
    bool first = true;
    for (int i = 1; i <= r; ++i) {
        long v = a[i - 1] - comp(i).length();
        x0 = first ? v : std::min(x0, v);
        first = false;
    }
    const long xmin = x0 - 1;
    std::set<long, std::greater<>> ys;
    for (int i = 1; i <= r; ++i) {
        BetaSet B(comp(i), Rational(a[i - 1]));
        for (int j = 1;; ++j) {
            long x = B.member(j).to_long();
            if (x < xmin) break;
            ys.insert(i + r * (x - 1));
        }
    }
    const long ylo = r * xmin;
    std::vector<Rational> members;
    for (long y : ys)
        if (y >= ylo) members.push_back(Rational(y));
    BetaSet B = BetaSet::reconstruct(members);
    require(B.shift().is_zero(), "assembled beta set has charge " + B.shift().str());
    return B.partition();
}

struct CoreQuotient {
    CorePoint a;
    MultiPartition quotient;
};

inline CoreQuotient disassemble(const Partition& lambda, int r) {
    require(r >= 1, "disassemble needs r >= 1");
    const int N = lambda.length() + 2 * r;
    BetaSet B(lambda, Rational(0));
    std::vector<std::vector<Rational>> cls(r + 1);
    for (int j = 1; j <= N; ++j) {
        long y = B.member(j).to_long();
        int i = mod(y, r);
        if (i == 0) i = r;
        cls[i].push_back(Rational((y - i) / r + 1));
    }
    CoreQuotient out{CorePoint(r), MultiPartition::empty(r)};
    std::vector<Partition> comps(r);
    for (int i = 1; i <= r; ++i) {
        BetaSet Bi = BetaSet::reconstruct(cls[i]);
        out.a[i - 1] = Bi.shift().to_long();
        comps[mod(r - i, r)] = Bi.partition();
    }
    out.quotient = MultiPartition(std::move(comps));
    return out;
}

inline Partition core_of(const CorePoint& a) { return assemble(a, MultiPartition::empty(static_cast<int>(a.size()))); }

// Dominance of the lifts through a_i = d_{r-i} / (r c0).
inline bool geq_prime_c(const MultiPartition& lam, const MultiPartition& chi, const OrderContext& ctx) {
    detail::require_same_size(lam, chi, ctx);
    auto a = ctx.integer_charges();
    require(a.has_value(), ">='_c needs d_l / (r c0) integral for every l");
    Order o = dominance_compare(assemble(*a, lam), assemble(*a, chi));
    return o == Order::greater || o == Order::equal;
}

// ---------------------------------------------------------------------------
// Counting identity relating box counts of the lift to >=_c counting functions.
//
// The printed chain rounds the threshold x >= (k-l+1)/r + 1 to (k-m_k)/r + 1,
// which is exact only for l = m_k + 1. The per-k term it writes down at k is
// the true term at k - (r-1), so the identity holds after moving (ii) and
// (iii) to n_j + r - 1 and adding sum_{n_j <= k < min(n_j + r - 1, 0)} k to (ii).

namespace detail {

// f(a, t) for an integer threshold t
inline long counting_f(const CorePoint& a, long t) {
    const int r = static_cast<int>(a.size());
    long amax = 0;
    for (long x : a) amax = std::max(amax, x);
    const long kend = r * (amax + 2);
    long f = 0;
    for (long k = t; k < 0; ++k) f += k;
    for (long k = t; k <= kend; ++k) {
        const long mk = mod(k, r);
        const long q = (k - mk) / r;
        for (int l = 1; l <= r; ++l) {
            long X = l <= mk + 1 ? q - a[l - 1] : q - a[l - 1] - 1;
            if (X < 0) f -= X;
        }
    }
    return f;
}

// theta(b) = ct(b) + a_{r - beta(b)}, i.e. d_l / (r c0) = a_{r-l}
inline long counting_rhs(const MultiPartition& lam, const CorePoint& a, long t) {
    const int r = lam.r();
    auto C = [&](long th0, int l) {
        long c = 0;
        for (const auto& b : lam.boxes()) {
            long th = b.content() + a[r - b.component - 1];
            if (th > th0 || (th == th0 && b.component <= l)) ++c;
        }
        return c;
    };
    const long mj = mod(t, r);
    const long qj = (t - mj) / r;
    long rhs = 0;
    for (int l = 0; l < r; ++l) rhs += l < r - mj - 1 ? C(qj - 1, l) : C(qj, l);
    return rhs;
}

} // namespace detail

struct CountingReport {
    long lift_count;      // (i)
    long f_value;         // (ii)
    long rhs;             // (iii)
    long shifted_f;       // (ii) at n_j + r - 1, plus the k-sum correction
    long shifted_rhs;     // (iii) at n_j + r - 1
    bool holds() const { return lift_count - f_value == rhs; }
    bool holds_shifted() const { return lift_count - shifted_f == shifted_rhs; }
};

inline CountingReport counting_identity_check(const MultiPartition& lam, const CorePoint& a, const Rational& j) {
    const int r = lam.r();
    validate_core_point(a, r);
    Partition lift = assemble(a, lam);
    CountingReport rep{0, 0, 0, 0, 0};
    for (int i = 1; i <= lift.length(); ++i)
        for (int c = 1; c <= lift.row(i); ++c)
            if (Rational(c - i) >= j) ++rep.lift_count;
    const long nj = j.ceil().get_si();
    rep.f_value = detail::counting_f(a, nj);
    rep.rhs = detail::counting_rhs(lam, a, nj);
    const long shifted = nj + r - 1;
    rep.shifted_f = detail::counting_f(a, shifted);
    for (long k = nj; k < std::min(shifted, 0L); ++k) rep.shifted_f += k;
    rep.shifted_rhs = detail::counting_rhs(lam, a, shifted);
    return rep;
}

} // namespace cherednik
