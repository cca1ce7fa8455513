#ifndef WRONQ_TESTS_TEST_UTIL_HPP
#define WRONQ_TESTS_TEST_UTIL_HPP

#include <wronq/qseries.hpp>

#include <random>
#include <vector>

// Shared oracle helpers for the test suites. Everything here works on plain
// integer vectors so the expected values never route through QSeries
// arithmetic.

namespace testutil {

// Coefficients of prod_{n>=1} (1 - q^n)^r at q^0..q^{count-1}, r >= 0.
inline std::vector<long long> euler_product_int(int r, int count) {
    std::vector<long long> v(static_cast<std::size_t>(count), 0);
    v[0] = 1;
    for (int n = 1; n < count; ++n)
        for (int rep = 0; rep < r; ++rep)
            for (int j = count - 1; j >= n; --j)
                v[static_cast<std::size_t>(j)] -= v[static_cast<std::size_t>(j - n)];
    return v;
}

// Euler's pentagonal sum: coefficient of q^{((6k+1)^2 - 1)/24} is (-1)^k.
inline std::vector<long long> pentagonal_int(int count) {
    std::vector<long long> v(static_cast<std::size_t>(count), 0);
    for (long long k = -count; k <= count; ++k) {
        long long n = 6 * k + 1;
        long long e = (n * n - 1) / 24;
        if (e >= 0 && e < count) v[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return v;
}

// Jacobi's cube sum: coefficient of q^{((2n+1)^2 - 1)/8} is (-1)^n (2n+1).
inline std::vector<long long> jacobi_cube_int(int count) {
    std::vector<long long> v(static_cast<std::size_t>(count), 0);
    for (long long n = 0;; ++n) {
        long long m = 2 * n + 1;
        long long e = (m * m - 1) / 8;
        if (e >= count) break;
        v[static_cast<std::size_t>(e)] += (n % 2 == 0) ? m : -m;
    }
    return v;
}

// Long division of integer coefficient vectors: a / b where b[0] = +-1,
// both indexed from the same base exponent. Exact in integers.
inline std::vector<long long> divide_unit_int(const std::vector<long long>& a,
                                              const std::vector<long long>& b) {
    std::vector<long long> q(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long acc = a[i];
        for (std::size_t j = 1; j <= i && j < b.size(); ++j)
            acc -= b[j] * q[i - j];
        q[i] = acc / b[0];
    }
    return q;
}

inline wronq::Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    return wronq::make_rat(num(rng), den(rng));
}

inline wronq::QSeries random_series(std::mt19937_64& rng) {
    static const long long lattices[] = {1, 2, 3, 4, 6, 8, 12, 24};
    std::uniform_int_distribution<std::size_t> pick(0, 7);
    long long den = lattices[pick(rng)];
    std::uniform_int_distribution<int> nterms(0, 7);
    std::uniform_int_distribution<long long> expnum(-8, 20);
    std::vector<std::pair<long long, wronq::Rat>> terms;
    long long hi = 8;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        long long e = expnum(rng);
        hi = std::max(hi, e);
        terms.emplace_back(e, random_rat(rng));
    }
    std::uniform_int_distribution<long long> extra(1, 16);
    return wronq::QSeries::from_terms(den, std::move(terms), wronq::make_rat(hi + extra(rng), den));
}

} // namespace testutil

#endif // WRONQ_TESTS_TEST_UTIL_HPP
