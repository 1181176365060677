#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cherednik {

// Exact rational number, always stored in lowest terms with a positive
// denominator. Thin value wrapper over mpq_class so that expression
// templates never leak into `auto` deductions.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    // Parses "p", "-p", "p/q".
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto strip = [](std::string& t) {
            while (!t.empty() && (t.front() == ' ' || t.front() == '+')) t.erase(t.begin());
            while (!t.empty() && t.back() == ' ') t.pop_back();
        };
        strip(s);
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        auto valid_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        strip(num);
        strip(den);
        if (!valid_int(num) || !valid_int(den))
            throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
        mpz_class n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Exact floor.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    long to_long() const {
        if (!is_integer() || !q_.get_num().fits_slong_p())
            throw std::domain_error("rational " + str() + " is not a machine integer");
        return q_.get_num().get_si();
    }
    double to_double() const { return q_.get_d(); }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const { return Rational(1) / *this; }
    Rational pow(int e) const {
        Rational base = e < 0 ? inverse() : *this;
        Rational out(1);
        for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
        return out;
    }

private:
    mpq_class q_;
};

inline Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(f);
}

// Non-negative residue of a mod m.
inline int mod(long a, long m) {
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace cherednik
