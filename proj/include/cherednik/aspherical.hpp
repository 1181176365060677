#pragma once

// The aspherical hyperplane arrangement for G(r,1,n), its twists by linear
// characters and the G(r,p,n) restriction.

#include "cherednik/combinatorics.hpp"
#include "cherednik/norms.hpp"
#include "cherednik/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace cherednik {

struct HyperplaneTag {
    enum Kind { c0, d } kind;
    int k;
    int l;  // -1 for the c0 family
    int m;  // denominator for the c0 family, content for the d family
    auto operator<=>(const HyperplaneTag&) const = default;
    bool operator==(const HyperplaneTag&) const = default;
    std::string str() const {
        if (kind == c0) return "c0(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
        return "d(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ",m=" + std::to_string(m) + ")";
    }
};

struct Hyperplane {
    AffineForm form;  // primitive, first nonzero coefficient positive
    std::vector<HyperplaneTag> tags;

    bool contains(const ParameterPoint& p) const { return form.evaluate(p).is_zero(); }
    // Kind of the first tag; forms from both families never coincide.
    HyperplaneTag::Kind kind() const { return tags.front().kind; }
};

using Arrangement = std::vector<Hyperplane>;  // sorted by form

class ArrangementBuilder {
public:
    explicit ArrangementBuilder(int r) : r_(r) {}
    void add(const AffineForm& f, const HyperplaneTag& tag) {
        auto [scale, prim] = f.canonical();
        require(!scale.is_zero() && !prim.is_constant(), "hyperplane with constant form");
        auto& tags = byform_[prim];
        if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
    }
    Arrangement build() const {
        Arrangement out;
        for (const auto& [f, tags] : byform_) {
            auto t = tags;
            std::sort(t.begin(), t.end());
            out.push_back({f, std::move(t)});
        }
        return out;
    }
    int r() const { return r_; }

private:
    int r_;
    std::map<AffineForm, std::vector<HyperplaneTag>> byform_;
};

namespace detail {

// m c0 + s k  (c0 = -s k / m)
inline AffineForm c0_form(int r, int k, int m, int s) {
    return AffineForm::c0(r) * Rational(m) + Rational(s * k);
}

// d_a - d_b + s r m c0 - k
inline AffineForm d_form(int r, int a, int b, int k, int m, int s) {
    return AffineForm::d(r, mod(a, r)) - AffineForm::d(r, mod(b, r)) + AffineForm::c0(r) * Rational(s * r * m) -
           Rational(k);
}

inline void add_c0_family(ArrangementBuilder& B, int n, int s) {
    for (int m = 2; m <= n; ++m)
        for (int k = 1; k < m; ++k) B.add(c0_form(B.r(), k, m, s), {HyperplaneTag::c0, k, -1, m});
}

} // namespace detail

// Rectangles with x rows and y columns, xy <= n, corner content y - x.
inline Arrangement hyperplanes_twisted(int r, int n, int sign_exponent, int rotation) {
    require(r >= 1 && n >= 1, "hyperplanes: need r, n >= 1");
    require(sign_exponent == 0 || sign_exponent == 1, "linear character: sign exponent must be 0 or 1");
    require(rotation >= 0 && rotation < r, "linear character: rotation must lie in [0, r)");
    const int s = sign_exponent ? -1 : 1;
    ArrangementBuilder B(r);
    detail::add_c0_family(B, n, s);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; x * y <= n; ++y) {
            const int ct = y - x;
            for (int l = 0; l < r; ++l)
                for (int k = 1; k <= l + (x - 1) * r; ++k) {
                    if (k % r == 0) continue;
                    B.add(detail::d_form(r, l + rotation, l + rotation - k, k, ct, s), {HyperplaneTag::d, k, l, ct});
                }
        }
    return B.build();
}

inline Arrangement hyperplanes_rectangle(int r, int n) { return hyperplanes_twisted(r, n, 0, 0); }

// Largest t >= 0 with (t+1)(t+1+m) <= n and t+1+m >= 1, or -1.
inline int sqrt_bound(int n, int m) {
    int best = -1;
    for (int t = 0; t + 1 <= n; ++t) {
        if (t + 1 + m < 1) continue;
        if ((t + 1) * (t + 1 + m) <= n) best = t;
        else break;
    }
    return best;
}

inline Arrangement hyperplanes_sqrt(int r, int n) {
    require(r >= 1 && n >= 1, "hyperplanes: need r, n >= 1");
    ArrangementBuilder B(r);
    detail::add_c0_family(B, n, 1);
    for (int m = -(n - 1); m <= n - 1; ++m) {
        int t = sqrt_bound(n, m);
        if (t < 0) continue;
        for (int l = 0; l < r; ++l)
            for (int k = 1; k <= l + t * r; ++k)
                if (k % r != 0) B.add(detail::d_form(r, l, l - k, k, m, 1), {HyperplaneTag::d, k, l, m});
    }
    return B.build();
}

// The displayed square-root bound read with a real t: with A = (k-l)/r + 1,
// A + m/2 <= sqrt(n + m^2/4) iff A + m/2 <= 0 or A(A + m) <= n.
inline bool sqrt_bound_literal(int r, int n, int m, int l, int k) {
    Rational A = Rational(k - l, r) + Rational(1);
    if (A + Rational(m, 2) <= Rational(0)) return true;
    return A * (A + Rational(m)) <= Rational(n);
}

inline Arrangement hyperplanes_sqrt_literal(int r, int n) {
    ArrangementBuilder B(r);
    detail::add_c0_family(B, n, 1);
    for (int m = -(n - 1); m <= n - 1; ++m)
        for (int l = 0; l < r; ++l)
            for (int k = 1; k <= l + 2 * n * r; ++k)
                if (k % r != 0 && sqrt_bound_literal(r, n, m, l, k))
                    B.add(detail::d_form(r, l, l - k, k, m, 1), {HyperplaneTag::d, k, l, m});
    return B.build();
}

inline bool same_hyperplanes(const Arrangement& a, const Arrangement& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].form == b[i].form)) return false;
    return true;
}

// Forms of a that are missing from b.
inline std::vector<AffineForm> hyperplane_difference(const Arrangement& a, const Arrangement& b) {
    std::vector<AffineForm> out;
    for (const auto& h : a) {
        bool found = false;
        for (const auto& g : b)
            if (g.form == h.form) found = true;
        if (!found) out.push_back(h.form);
    }
    return out;
}

struct AsphericalTest {
    bool aspherical;
    std::vector<Hyperplane> witnesses;
};

inline AsphericalTest is_aspherical(const ParameterPoint& p, int r, int n) {
    require(p.r == r, "is_aspherical: point has " + std::to_string(p.r) + " d-values, need r=" + std::to_string(r));
    AsphericalTest out{false, {}};
    for (const auto& h : hyperplanes_rectangle(r, n))
        if (h.contains(p)) out.witnesses.push_back(h);
    out.aspherical = !out.witnesses.empty();
    return out;
}

// d_l -> d_{l mod q}
inline AffineForm fold_to_quotient(const AffineForm& f, int q) {
    require(q >= 1 && f.r() % q == 0, "fold_to_quotient: q must divide r");
    auto v = f.coefficients();
    std::vector<Rational> d(q);
    for (int l = 0; l < f.r(); ++l) d[l % q] += v[2 + l];
    return AffineForm(q, v[0], v[1], std::move(d));
}

// Restriction to d_i = d_j for i = j mod r/p, in coordinates (1, c0, d_0..d_{r/p-1}).
// Forms that fold to a nonzero constant have no solutions and are dropped.
inline Arrangement hyperplanes_rpn(int r, int p, int n) {
    require(p >= 1 && r % p == 0, "hyperplanes_rpn: p must divide r");
    require(n >= 3, "hyperplanes_rpn: n >= 3 is required");
    const int q = r / p;
    ArrangementBuilder B(q);
    for (const auto& h : hyperplanes_rectangle(r, n)) {
        auto f = fold_to_quotient(h.form, q);
        if (f.is_constant()) continue;
        for (const auto& t : h.tags) B.add(f, t);
    }
    return B.build();
}

// Zero hyperplanes of minimal norms against the arrangement, both directions.
struct FactorCoverReport {
    bool factors_in_arrangement = true;
    bool arrangement_covered = true;
    long factors_seen = 0;
    std::vector<std::string> violations;
    bool passed() const { return factors_in_arrangement && arrangement_covered; }
};

inline FactorCoverReport factor_cover_check(int r, int n) {
    FactorCoverReport rep;
    Arrangement arr = hyperplanes_rectangle(r, n);
    std::map<AffineForm, bool> hit;
    for (const auto& h : arr) hit[h.form] = false;
    for (const auto& shape : enumerate_multipartitions(r, n)) {
        FactoredScalar s = normalize(minimal_norm(shape));
        for (const auto& f : s.numerator()) {
            ++rep.factors_seen;
            auto it = hit.find(f);
            if (it == hit.end()) {
                rep.factors_in_arrangement = false;
                rep.violations.push_back(shape.str() + ": factor (" + f.str() + ") is not in the arrangement");
            } else {
                it->second = true;
            }
        }
        if (!s.denominator().empty()) {
            rep.factors_in_arrangement = false;
            rep.violations.push_back(shape.str() + ": minimal norm has a denominator");
        }
    }
    for (const auto& [f, seen] : hit)
        if (!seen) {
            rep.arrangement_covered = false;
            rep.violations.push_back("hyperplane (" + f.str() + ") = 0 is no factor of any minimal norm");
        }
    return rep;
}

} // namespace cherednik
