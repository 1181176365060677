#pragma once

// Affine-linear forms in (c0, d_0..d_{r-1}) and factored products/quotients
// of them, with exact evaluation at rational parameter points.

#include "cherednik/error.hpp"
#include "cherednik/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cherednik {

struct ParameterPoint {
    int r = 1;
    Rational c0;
    std::vector<Rational> d;  // size r

    ParameterPoint() : d(1) {}
    ParameterPoint(int r_, Rational c0_, std::vector<Rational> d_) : r(r_), c0(std::move(c0_)), d(std::move(d_)) {
        require(r >= 1, "parameter point needs r >= 1");
        require(static_cast<int>(d.size()) == r, "parameter point needs exactly r values of d (got " +
                                                     std::to_string(d.size()) + ", r=" + std::to_string(r) + ")");
    }
    static ParameterPoint zero(int r) { return ParameterPoint(r, Rational(0), std::vector<Rational>(r)); }

    const Rational& d_at(long l) const { return d[mod(l, r)]; }
    bool sums_to_zero() const {
        Rational s;
        for (const auto& v : d) s += v;
        return s.is_zero();
    }
};

// Random rational with numerator and denominator in [1, 10^6] and random sign.
inline Rational random_rational(std::mt19937_64& rng, bool allow_negative = true) {
    std::uniform_int_distribution<long> dist(1, 1000000);
    long num = dist(rng), den = dist(rng);
    if (allow_negative && (rng() & 1)) num = -num;
    return Rational(num, den);
}

inline ParameterPoint random_point(int r, std::mt19937_64& rng) {
    std::vector<Rational> d;
    for (int l = 0; l < r; ++l) d.push_back(random_rational(rng));
    return ParameterPoint(r, random_rational(rng), std::move(d));
}

class AffineForm {
public:
    AffineForm() : AffineForm(1) {}
    explicit AffineForm(int r) : r_(r), d_(static_cast<std::size_t>(r)) { require(r >= 1, "affine form needs r >= 1"); }
    AffineForm(int r, Rational constant, Rational c0, std::vector<Rational> d)
        : r_(r), constant_(std::move(constant)), c0_(std::move(c0)), d_(std::move(d)) {
        require(static_cast<int>(d_.size()) == r_, "affine form needs r d-coefficients");
    }

    static AffineForm constant(int r, Rational v) {
        AffineForm f(r);
        f.constant_ = std::move(v);
        return f;
    }
    static AffineForm c0(int r) {
        AffineForm f(r);
        f.c0_ = 1;
        return f;
    }
    // d_l, with l reduced mod r.
    static AffineForm d(int r, long l) {
        AffineForm f(r);
        f.d_[mod(l, r)] = 1;
        return f;
    }
    // k - (d_a - d_b) - r*m*c0, the shape of nearly every factor.
    static AffineForm shifted(int r, long k, long a, long b, const Rational& m) {
        AffineForm f(r);
        f.constant_ = Rational(k);
        f.d_[mod(a, r)] -= 1;
        f.d_[mod(b, r)] += 1;
        f.c0_ = -Rational(r) * m;
        return f;
    }

    int r() const { return r_; }
    const Rational& constant_term() const { return constant_; }
    const Rational& c0_coeff() const { return c0_; }
    const Rational& d_coeff(long l) const { return d_[mod(l, r_)]; }
    const std::vector<Rational>& d_coeffs() const { return d_; }

    // Coefficients over the basis (1, c0, d_0, ..., d_{r-1}).
    std::vector<Rational> coefficients() const {
        std::vector<Rational> v{constant_, c0_};
        v.insert(v.end(), d_.begin(), d_.end());
        return v;
    }
    static AffineForm from_coefficients(const std::vector<Rational>& v) {
        require(v.size() >= 3, "coefficient vector too short");
        int r = static_cast<int>(v.size()) - 2;
        return AffineForm(r, v[0], v[1], std::vector<Rational>(v.begin() + 2, v.end()));
    }

    bool is_zero() const { return constant_.is_zero() && is_constant(); }
    bool is_constant() const {
        if (!c0_.is_zero()) return false;
        for (const auto& x : d_)
            if (!x.is_zero()) return false;
        return true;
    }

    Rational evaluate(const ParameterPoint& p) const {
        require(p.r == r_, "evaluate: point has r=" + std::to_string(p.r) + " but form has r=" + std::to_string(r_));
        Rational v = constant_ + c0_ * p.c0;
        for (int l = 0; l < r_; ++l) v += d_[l] * p.d[l];
        return v;
    }

    AffineForm& operator+=(const AffineForm& o) {
        check_r(o);
        constant_ += o.constant_;
        c0_ += o.c0_;
        for (int l = 0; l < r_; ++l) d_[l] += o.d_[l];
        return *this;
    }
    AffineForm& operator-=(const AffineForm& o) { return *this += -o; }
    AffineForm& operator*=(const Rational& s) {
        constant_ *= s;
        c0_ *= s;
        for (auto& x : d_) x *= s;
        return *this;
    }
    AffineForm operator-() const {
        AffineForm f(*this);
        f *= Rational(-1);
        return f;
    }
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(AffineForm a, const Rational& s) { return a *= s; }
    friend AffineForm operator*(const Rational& s, AffineForm a) { return a *= s; }
    AffineForm operator+(const Rational& s) const { return *this + constant(r_, s); }
    AffineForm operator-(const Rational& s) const { return *this - constant(r_, s); }

    // Splits into scale * primitive where primitive has coprime integer
    // coefficients and first nonzero coefficient positive. Zero form: scale 0.
    std::pair<Rational, AffineForm> canonical() const {
        auto v = coefficients();
        mpz_class lcm_den = 1, gcd_num = 0;
        int first_sign = 0;
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (first_sign == 0) first_sign = x.sign();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
            mpz_class a = ::abs(x.num());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), a.get_mpz_t());
        }
        if (first_sign == 0) return {Rational(0), *this};
        Rational scale(mpq_class(gcd_num, lcm_den));
        if (first_sign < 0) scale = -scale;
        AffineForm prim = *this;
        prim *= scale.inverse();
        return {scale, prim};
    }

    // Canonical text: "k + a*c0 + b*d{l}", basis order, zero terms dropped.
    std::string str() const {
        std::string out;
        auto term = [&](const Rational& coef, const std::string& name) {
            if (coef.is_zero()) return;
            Rational mag = coef.abs();
            std::string body;
            if (name.empty()) body = mag.str();
            else if (mag == Rational(1)) body = name;
            else body = mag.str() + "*" + name;
            if (out.empty()) out = (coef.sign() < 0 ? "-" : "") + body;
            else out += (coef.sign() < 0 ? " - " : " + ") + body;
        };
        term(constant_, "");
        term(c0_, "c0");
        for (int l = 0; l < r_; ++l) term(d_[l], "d" + std::to_string(l));
        return out.empty() ? "0" : out;
    }

    bool operator==(const AffineForm& o) const {
        return r_ == o.r_ && constant_ == o.constant_ && c0_ == o.c0_ && d_ == o.d_;
    }
    auto operator<=>(const AffineForm& o) const {
        if (auto c = r_ <=> o.r_; c != 0) return c;
        return coefficients() <=> o.coefficients();
    }

private:
    void check_r(const AffineForm& o) const {
        require(r_ == o.r_, "affine forms over different r (" + std::to_string(r_) + " vs " + std::to_string(o.r_) + ")");
    }

    int r_;
    Rational constant_;
    Rational c0_;
    std::vector<Rational> d_;
};

class FactoredScalar {
public:
    FactoredScalar() : FactoredScalar(1) {}
    explicit FactoredScalar(int r, Rational coef = Rational(1)) : r_(r), coef_(std::move(coef)) {}
    explicit FactoredScalar(const AffineForm& f) : r_(f.r()), coef_(1) { mul(f); }

    int r() const { return r_; }
    const Rational& coefficient() const { return coef_; }
    const std::vector<AffineForm>& numerator() const { return num_; }
    const std::vector<AffineForm>& denominator() const { return den_; }
    bool is_zero() const { return coef_.is_zero(); }
    int factor_count() const { return static_cast<int>(num_.size() + den_.size()); }

    // Multiplies by f^e (e may be negative). Factors are stored canonically,
    // with their scale folded into the coefficient.
    FactoredScalar& mul(const AffineForm& f, int e = 1) {
        require(f.r() == r_, "factor over r=" + std::to_string(f.r()) + " in scalar over r=" + std::to_string(r_));
        if (e == 0) return *this;
        if (f.is_constant()) {
            if (f.is_zero() && e < 0) throw DomainError("zero factor in denominator");
            mul(f.constant_term().pow(e));
            return *this;
        }
        auto [scale, prim] = f.canonical();
        coef_ *= scale.pow(e);
        auto& bag = e > 0 ? num_ : den_;
        for (int i = 0; i < (e > 0 ? e : -e); ++i) bag.insert(std::upper_bound(bag.begin(), bag.end(), prim), prim);
        if (coef_.is_zero()) clear_factors();
        return *this;
    }
    FactoredScalar& div(const AffineForm& f) { return mul(f, -1); }
    FactoredScalar& mul(const Rational& q) {
        coef_ *= q;
        if (coef_.is_zero()) clear_factors();
        return *this;
    }

    FactoredScalar& operator*=(const FactoredScalar& o) {
        require(o.r_ == r_, "scalars over different r");
        if (o.is_zero() || is_zero()) {
            coef_ = 0;
            clear_factors();
            return *this;
        }
        coef_ *= o.coef_;
        for (const auto& f : o.num_) num_.insert(std::upper_bound(num_.begin(), num_.end(), f), f);
        for (const auto& f : o.den_) den_.insert(std::upper_bound(den_.begin(), den_.end(), f), f);
        return *this;
    }
    FactoredScalar& operator/=(const FactoredScalar& o) { return *this *= o.inverse(); }
    friend FactoredScalar operator*(FactoredScalar a, const FactoredScalar& b) { return a *= b; }
    friend FactoredScalar operator/(FactoredScalar a, const FactoredScalar& b) { return a /= b; }

    FactoredScalar inverse() const {
        if (is_zero()) throw DomainError("inverse of the zero scalar");
        FactoredScalar out(r_, coef_.inverse());
        out.num_ = den_;
        out.den_ = num_;
        return out;
    }

    // Cancels equal canonical factors between numerator and denominator.
    FactoredScalar normalized() const {
        FactoredScalar out(r_, coef_);
        if (is_zero()) return out;
        std::size_t i = 0, j = 0;
        while (i < num_.size() || j < den_.size()) {
            if (j == den_.size() || (i < num_.size() && num_[i] < den_[j])) out.num_.push_back(num_[i++]);
            else if (i == num_.size() || den_[j] < num_[i]) out.den_.push_back(den_[j++]);
            else {
                ++i;
                ++j;
            }
        }
        return out;
    }

    Rational evaluate(const ParameterPoint& p) const {
        if (is_zero()) return Rational(0);
        Rational v = coef_;
        for (const auto& f : num_) v *= f.evaluate(p);
        for (const auto& f : den_) {
            Rational x = f.evaluate(p);
            if (x.is_zero()) throw PoleError("pole: denominator factor (" + f.str() + ") vanishes at the point");
            v /= x;
        }
        return v;
    }

    // "coef * (f1) * (f2)^2 / ((g1) * (g2))"
    std::string str() const {
        auto group = [](const std::vector<AffineForm>& bag) {
            std::vector<std::string> parts;
            for (std::size_t i = 0; i < bag.size();) {
                std::size_t j = i;
                while (j < bag.size() && bag[j] == bag[i]) ++j;
                std::string s = "(" + bag[i].str() + ")";
                if (j - i > 1) s += "^" + std::to_string(j - i);
                parts.push_back(s);
                i = j;
            }
            return parts;
        };
        auto join = [](const std::vector<std::string>& parts) {
            std::string s;
            for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " * " : "") + parts[i];
            return s;
        };
        if (is_zero()) return "0";
        auto n = group(num_), d = group(den_);
        std::string out;
        if (n.empty()) out = coef_.str();
        else if (coef_ == Rational(1)) out = join(n);
        else out = coef_.str() + " * " + join(n);
        if (!d.empty()) out += " / " + (d.size() == 1 ? d[0] : "(" + join(d) + ")");
        return out;
    }

    bool operator==(const FactoredScalar& o) const {
        return r_ == o.r_ && coef_ == o.coef_ && num_ == o.num_ && den_ == o.den_;
    }

private:
    void clear_factors() {
        num_.clear();
        den_.clear();
    }

    int r_;
    Rational coef_;
    std::vector<AffineForm> num_;
    std::vector<AffineForm> den_;
};

inline FactoredScalar normalize(const FactoredScalar& s) { return s.normalized(); }

inline Rational evaluate(const AffineForm& f, const ParameterPoint& p) { return f.evaluate(p); }
inline Rational evaluate(const FactoredScalar& s, const ParameterPoint& p) { return s.evaluate(p); }

// a = const * b as rational functions. Normalized factors of a/b must cancel
// completely; random evaluation confirms the constant.
inline std::optional<Rational> proportional(const FactoredScalar& a, const FactoredScalar& b,
                                            std::uint64_t seed = 0x5eed) {
    if (a.r() != b.r() || a.is_zero() || b.is_zero()) return std::nullopt;
    FactoredScalar q = normalize(a / b);
    if (q.factor_count() != 0) return std::nullopt;
    Rational ratio = q.coefficient();
    std::mt19937_64 rng(seed);
    int wanted = 3 + a.factor_count() + b.factor_count();
    for (int found = 0, tries = 0; found < wanted && tries < 20 * wanted; ++tries) {
        ParameterPoint p = random_point(a.r(), rng);
        try {
            Rational va = a.evaluate(p), vb = b.evaluate(p);
            if (vb.is_zero()) continue;
            if (va != ratio * vb) return std::nullopt;
            ++found;
        } catch (const PoleError&) {
        }
    }
    return ratio;
}

// (x)_n = x (x+1) ... (x+n-1)
inline FactoredScalar pochhammer(const AffineForm& x, int n) {
    require(n >= 0, "pochhammer: negative length " + std::to_string(n));
    FactoredScalar out(x.r());
    for (int i = 0; i < n; ++i) out.mul(x + Rational(i));
    return out;
}

enum class Convention { gordon, rouquier, hecke };

struct ConvertedParameters {
    Convention convention;
    // name -> value; for hecke the values are phase exponents t with e^{2 pi i t}.
    std::vector<std::pair<std::string, Rational>> values;
};

inline ConvertedParameters convert_parameters(const ParameterPoint& p, Convention conv) {
    ConvertedParameters out{conv, {}};
    const Rational r(p.r);
    switch (conv) {
    case Convention::gordon:
        for (int j = 0; j < p.r; ++j) out.values.emplace_back("H" + std::to_string(j), (p.d_at(j - 1) - p.d_at(j)) / r);
        out.values.emplace_back("h", -p.c0);
        break;
    case Convention::rouquier:
        for (int j = 0; j < p.r; ++j) out.values.emplace_back("h" + std::to_string(j), -p.d_at(j) / r);
        out.values.emplace_back("h", -p.c0);
        break;
    case Convention::hecke:
        out.values.emplace_back("q", -p.c0);
        for (int j = 0; j < p.r; ++j) out.values.emplace_back("Q" + std::to_string(j), -p.d_at(j) / r);
        break;
    }
    return out;
}

} // namespace cherednik
