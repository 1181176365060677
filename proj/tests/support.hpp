#pragma once

// Shared sampling helpers for the tests and the acceptance run.

#include "cherednik/orders.hpp"

#include <random>
#include <vector>

namespace cherednik::testing {

// c0 > 0 on a small grid; for r = 2 either integral charges (d = r c0 (a, -a))
// or those shifted by an integer, which keeps linkage possible.
inline std::vector<ParameterPoint> order_points(int r) {
    std::vector<ParameterPoint> out;
    const Rational c0s[] = {Rational(1, 2), Rational(1), Rational(2, 3), Rational(3, 2), Rational(2)};
    for (const auto& c0 : c0s) {
        if (r == 1) {
            out.emplace_back(1, c0, std::vector<Rational>{Rational(0)});
            continue;
        }
        for (long a = -2; a <= 2; ++a)
            for (long shift : {0L, 1L, -1L}) {
                Rational d0 = Rational(r) * c0 * Rational(a);
                std::vector<Rational> d{d0 + Rational(shift), -d0};
                for (int l = 2; l < r; ++l) d.push_back(Rational(0));
                out.emplace_back(r, c0, std::move(d));
            }
    }
    return out;
}

struct CountingCase {
    MultiPartition lam;
    CorePoint a;
    Rational j;
};

// r <= 3, n <= 6, |a_i| <= 2, j = p/q in [-n-2, n+2] with q <= 3.
inline std::vector<CountingCase> counting_cases(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CountingCase> out;
    while (static_cast<int>(out.size()) < count) {
        int r = 1 + static_cast<int>(rng() % 3);
        int n = static_cast<int>(rng() % 7);
        auto shapes = enumerate_multipartitions(r, n);
        CountingCase c{shapes[rng() % shapes.size()], CorePoint(r), Rational(0)};
        long s = 0;
        for (int i = 0; i < r - 1; ++i) {
            c.a[i] = static_cast<long>(rng() % 5) - 2;
            s += c.a[i];
        }
        c.a[r - 1] = -s;
        long den = 1 + static_cast<long>(rng() % 3);
        long span = 2 * (n + 2) * den;
        long num = static_cast<long>(rng() % (span + 1)) - (n + 2) * den;
        if (c.a[r - 1] < -2 || c.a[r - 1] > 2) continue;
        c.j = Rational(num, den);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace cherednik::testing
