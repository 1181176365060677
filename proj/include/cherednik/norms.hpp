#pragma once

// Closed-form spectra and norms of the nonsymmetric and symmetric
// generalized Jack polynomials.

#include "cherednik/combinatorics.hpp"
#include "cherednik/scalars.hpp"

#include <utility>
#include <vector>

namespace cherednik {

struct SpectralDatum {
    int index;              // i, 1-based
    int zeta_residue;       // zeta_i acts by zeta^{zeta_residue}
    AffineForm z_eigenvalue;
};

inline std::vector<SpectralDatum> spectrum(const Composition& mu, const StandardTableau& T) {
    const int n = T.size();
    const int r = T.shape().r();
    require(static_cast<int>(mu.size()) == n,
            "spectrum: composition has " + std::to_string(mu.size()) + " entries, shape has " + std::to_string(n) + " boxes");
    Permutation w = w_mu(mu);
    std::vector<SpectralDatum> out;
    for (int i = 1; i <= n; ++i) {
        BoxRef b = T.box(w(i));
        int m = mu[i - 1];
        out.push_back({i, mod(b.component - m, r), AffineForm::shifted(r, m + 1, b.component, b.component - m - 1, b.content())});
    }
    return out;
}

namespace detail {

// (A - r c0)(A + r c0) / A^2
inline void mul_pair_ratio(FactoredScalar& s, const AffineForm& A) {
    const int r = A.r();
    AffineForm rc0 = AffineForm::c0(r) * Rational(r);
    s.mul(A - rc0);
    s.mul(A + rc0);
    s.mul(A, -2);
}

} // namespace detail

inline FactoredScalar norm_f(const Composition& mu, const StandardTableau& T) {
    const int n = T.size();
    const int r = T.shape().r();
    require(static_cast<int>(mu.size()) == n, "norm_f: composition length must equal the shape size");
    Permutation w = w_mu(mu);
    std::vector<int> a(n + 1), b(n + 1);
    for (int i = 1; i <= n; ++i) {
        BoxRef box = T.box(w(i));
        a[i] = box.content();
        b[i] = box.component;
    }
    FactoredScalar s(r);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= mu[i - 1]; ++k) s.mul(AffineForm::shifted(r, k, b[i], b[i] - k, a[i]));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int mi = mu[i - 1], mj = mu[j - 1];
            if (mi > mj)
                for (int k = 1; k <= mi - mj; ++k)
                    if (mod(k - (b[i] - b[j]), r) == 0)
                        detail::mul_pair_ratio(s, AffineForm::shifted(r, k, b[i], b[j], a[i] - a[j]));
            if (mi < mj - 1)
                for (int k = 1; k <= mj - mi - 1; ++k)
                    if (mod(k - (b[j] - b[i]), r) == 0)
                        detail::mul_pair_ratio(s, AffineForm::shifted(r, k, b[j], b[i], a[j] - a[i]));
        }
    return s;
}

// First line of the symmetric norm for a single box with value S.
inline void mul_box_line(FactoredScalar& s, const BoxRef& b, int S) {
    const int r = s.r();
    for (int k = 1; k <= S; ++k) s.mul(AffineForm::shifted(r, k, b.component, b.component - k, b.content()));
}

// Ratio lines for an ordered pair (b, b').
inline void mul_pair_lines(FactoredScalar& s, const BoxRef& b, int Sb, const BoxRef& bp, int Sbp) {
    const int r = s.r();
    const int ct = b.content() - bp.content();
    for (int k = 1; k <= Sb - Sbp; ++k) {
        if (mod(k - (b.component - bp.component), r) != 0) continue;
        s.mul(AffineForm::shifted(r, k, b.component, bp.component, ct - 1));
        s.div(AffineForm::shifted(r, k, b.component, bp.component, ct));
    }
    for (int k = 1; k <= Sb - Sbp - r; ++k) {
        if (mod(k - (b.component - bp.component), r) != 0) continue;
        s.mul(AffineForm::shifted(r, k, b.component, bp.component, ct + 1));
        s.div(AffineForm::shifted(r, k, b.component, bp.component, ct));
    }
}

inline FactoredScalar norm_gS(const ShapeAssignment& S) {
    const auto& shape = S.shape();
    require(S.is_column_strict(), "norm_gS: filling " + S.str() + " is not column-strict");
    require(S.satisfies_residue(), "norm_gS: filling " + S.str() + " violates S(b) = beta(b) mod r");
    FactoredScalar s(shape.r(), factorial(shape.size()));
    auto boxes = shape.boxes();
    for (const auto& b : boxes) mul_box_line(s, b, S.value(b));
    for (const auto& b : boxes)
        for (const auto& bp : boxes) mul_pair_lines(s, b, S.value(b), bp, S.value(bp));
    return s;
}

// prod over i<j with mu_i = mu_j (same component) of 1 - g_{alpha}, which is the
// parameter-free (D+1)/D with D the content difference. The closed form
// above leaves these k = 0 factors out; the norm of e.f_{mu,T} carries them.
inline Rational symmetrizer_tie_constant(const Composition& mu, const StandardTableau& T) {
    const int n = T.size();
    require(static_cast<int>(mu.size()) == n, "symmetrizer_tie_constant: composition length must equal the shape size");
    Permutation w = w_mu(mu);
    Rational c(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (mu[i - 1] != mu[j - 1]) continue;
            BoxRef a = T.box(w(i)), b = T.box(w(j));
            if (a.component != b.component) continue;
            int D = a.content() - b.content();
            require(D != 0, "symmetrizer_tie_constant: tied boxes on one diagonal");
            c *= Rational(D + 1, D);
        }
    return c;
}

// First standard tableau (enumeration order) with shape_assignment(sorted S, T) = S.
// The tie constant depends on T when equal values sit in different rows.
inline StandardTableau realizing_tableau(const ShapeAssignment& S) {
    Composition mu = S.sorted_entries();
    for (const auto& T : enumerate_syt(S.shape()))
        if (shape_assignment(mu, T) == S) return T;
    throw DomainError("no standard tableau realizes " + S.str());
}

// |e f_{mu,T}|^2 with the tied-pair factors restored, T = realizing_tableau(S).
inline FactoredScalar norm_gS_tie_corrected(const ShapeAssignment& S) {
    FactoredScalar s = norm_gS(S);
    s.mul(symmetrizer_tie_constant(S.sorted_entries(), realizing_tableau(S)));
    return s;
}

inline int minimal_value(const BoxRef& b, int r) { return b.component + (b.row - 1) * r; }

inline ShapeAssignment minimal_tableau(const MultiPartition& shape) {
    std::vector<int> vals;
    for (const auto& b : shape.boxes()) vals.push_back(minimal_value(b, shape.r()));
    return ShapeAssignment(shape, std::move(vals));
}

struct CornerDatum {
    BoxRef box;  // lower-left corner; row 0 for an empty component
    int S;
    int content;
};

struct HookData {
    MultiPartition shape;
    std::vector<BoxRef> lower_rim;
    std::vector<BoxRef> right_rim;
    std::vector<CornerDatum> corners;  // indexed by component
};

inline HookData hook_data(const MultiPartition& shape) {
    HookData h{shape, {}, {}, {}};
    const int r = shape.r();
    for (const auto& b : shape.boxes()) {
        if (!shape.contains({b.component, b.row + 1, b.column})) h.lower_rim.push_back(b);
        if (!shape.contains({b.component, b.row, b.column + 1})) h.right_rim.push_back(b);
    }
    for (int l = 0; l < r; ++l) {
        int len = shape.component(l).length();
        BoxRef corner{l, len, 1};
        h.corners.push_back({corner, l + (len - 1) * r, 1 - len});
    }
    return h;
}

inline FactoredScalar hook_product(const MultiPartition& shape) {
    const int r = shape.r();
    HookData h = hook_data(shape);
    FactoredScalar s(r);
    for (const auto& b : h.lower_rim)
        for (const auto& bp : h.right_rim) {
            int top = minimal_value(b, r) - minimal_value(bp, r);
            for (int k = 1; k <= top; ++k)
                if (mod(k - (b.component - bp.component), r) == 0)
                    s.mul(AffineForm::shifted(r, k, b.component, bp.component, b.content() - bp.content() - 1));
        }
    return s;
}

inline FactoredScalar extra_product(const MultiPartition& shape) {
    const int r = shape.r();
    HookData h = hook_data(shape);
    FactoredScalar s(r);
    for (const auto& b : shape.boxes())
        for (int l = 0; l < r; ++l) {
            const auto& c = h.corners[l];
            int top = minimal_value(b, r) - c.S - r;
            for (int k = 1; k <= top; ++k)
                if (mod(k - (b.component - l), r) == 0)
                    s.mul(AffineForm::shifted(r, k, b.component, l, b.content() - c.content + 1));
        }
    return s;
}

inline FactoredScalar minimal_norm(const MultiPartition& shape) {
    FactoredScalar s(shape.r(), factorial(shape.size()));
    s *= hook_product(shape);
    s *= extra_product(shape);
    return s;
}

// Removable boxes b of the shape whose minimal value is maximal.
inline std::vector<BoxRef> maximal_removable_boxes(const MultiPartition& shape) {
    const int r = shape.r();
    int best = -1;
    for (const auto& b : shape.boxes()) best = std::max(best, minimal_value(b, r));
    std::vector<BoxRef> out;
    for (const auto& b : shape.boxes()) {
        bool removable = !shape.contains({b.component, b.row + 1, b.column}) &&
                         !shape.contains({b.component, b.row, b.column + 1});
        if (removable && minimal_value(b, r) == best) out.push_back(b);
    }
    return out;
}

inline MultiPartition remove_box(const MultiPartition& shape, const BoxRef& b) {
    std::vector<Partition> comps = shape.components();
    std::vector<int> parts = comps[b.component].parts();
    require(b.row >= 1 && b.row <= static_cast<int>(parts.size()) && parts[b.row - 1] == b.column,
            "remove_box: box is not at the end of its row");
    --parts[b.row - 1];
    comps[b.component] = Partition(parts);
    return MultiPartition(std::move(comps));
}

// n * |g_chi|^2 * (first line for b) * (ratio lines of b against chi),
// which must equal the minimal norm of the shape chi + b.
inline FactoredScalar recurrence_rhs(const MultiPartition& shape, const BoxRef& b) {
    const int r = shape.r();
    MultiPartition chi = remove_box(shape, b);
    FactoredScalar s = minimal_norm(chi);
    s.mul(Rational(shape.size()));
    const int Sb = minimal_value(b, r);
    mul_box_line(s, b, Sb);
    for (const auto& bp : chi.boxes()) mul_pair_lines(s, b, Sb, bp, minimal_value(bp, r));
    return s;
}

// Pochhammer-form rewrites of H and E. Conjugates of empty partitions are (0).
inline std::pair<FactoredScalar, FactoredScalar> alt_hook_extra(const MultiPartition& shape) {
    const int r = shape.r();
    FactoredScalar H(r), E(r);
    std::vector<Partition> lam, tlam;
    for (int l = 0; l < r; ++l) {
        lam.push_back(shape.component(l));
        tlam.push_back(shape.component(l).conjugate());
    }
    auto t1 = [&](int l) { return tlam[l].row(1); };
    // base + (d_l - d_k)/r + c0 * m
    auto arg = [&](int base_num, int k, int l, int m) {
        AffineForm x = AffineForm::constant(r, Rational(base_num, r));
        x += (AffineForm::d(r, l) - AffineForm::d(r, k)) * Rational(1, r);
        x += AffineForm::c0(r) * Rational(m);
        return x;
    };
    for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
            const bool low = l < k;
            const int base = low ? k - l : r + k - l;
            for (int i = 1; i <= std::min(t1(k), t1(l)); ++i)
                for (int j = 1; j <= lam[k].row(i); ++j) {
                    int m = tlam[k].row(j) + lam[l].row(i) - i - j + 1;
                    int len = tlam[k].row(j) - i + (low ? 1 : 0);
                    H *= pochhammer(arg(base, k, l, m), len);
                }
            for (int i = t1(l) + (low ? 1 : 2); i <= t1(k); ++i)
                for (int j = 1; j <= lam[k].row(i); ++j) {
                    int m = i - j - t1(l);
                    int len = i - t1(l) - (low ? 0 : 1);
                    E *= pochhammer(arg(base, k, l, m), len);
                }
        }
    return {H, E};
}

} // namespace cherednik
