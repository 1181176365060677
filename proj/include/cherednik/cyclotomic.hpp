#pragma once

// Q(zeta_r) as polynomials in zeta reduced modulo the r-th cyclotomic polynomial.

#include "cherednik/error.hpp"
#include "cherednik/rational.hpp"

#include <vector>

namespace cherednik {

namespace detail {

using Poly = std::vector<Rational>;  // low degree first

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division a / b, remainder required to vanish.
inline Poly exact_div(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    require(a.empty(), "cyclotomic polynomial division left a remainder");
    return q;
}

inline Poly cyclotomic_poly(int r) {
    Poly p(static_cast<std::size_t>(r + 1));
    p[0] = -1;
    p[r] = 1;
    for (int d = 1; d < r; ++d)
        if (r % d == 0) p = exact_div(p, cyclotomic_poly(d));
    return p;
}

} // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int r, Rational v = Rational(0)) : r_(r) {
        init();
        c_.assign(phi_.size() - 1, Rational(0));
        c_[0] = v;
    }
    // zeta^k
    static Cyclotomic zeta_power(int r, long k) {
        Cyclotomic out(r, Rational(1));
        for (int i = 0; i < mod(k, r); ++i) out = out.times_zeta();
        return out;
    }

    int r() const { return r_; }
    int degree() const { return static_cast<int>(c_.size()); }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        require(a.r_ == b.r_, "cyclotomic product over different fields");
        detail::Poly prod(a.c_.size() + b.c_.size(), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        Cyclotomic out(a.r_);
        out.c_ = a.reduce(prod);
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& q) {
        Cyclotomic out = a;
        for (auto& x : out.c_) x *= q;
        return out;
    }

    // Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conj() const {
        Cyclotomic out(r_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) out += zeta_power(r_, -static_cast<long>(i)) * c_[i];
        return out;
    }

    bool operator==(const Cyclotomic& o) const { return r_ == o.r_ && c_ == o.c_; }

private:
    void init() {
        require(r_ >= 1, "cyclotomic field needs r >= 1");
        phi_ = detail::cyclotomic_poly(r_);
    }
    Cyclotomic times_zeta() const {
        detail::Poly p(c_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) p[i + 1] = c_[i];
        Cyclotomic out(r_);
        out.c_ = reduce(p);
        return out;
    }
    detail::Poly reduce(detail::Poly p) const {
        const std::size_t deg = phi_.size() - 1;
        for (std::size_t top = p.size(); top-- > deg;) {
            Rational c = p[top];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i <= deg; ++i) p[top - deg + i] -= c * phi_[i];
        }
        p.resize(deg, Rational(0));
        return p;
    }

    int r_;
    detail::Poly phi_;  // monic
    std::vector<Rational> c_;
};

} // namespace cherednik
