#ifndef WRONQ_MODFORMS_HPP
#define WRONQ_MODFORMS_HPP

#include <wronq/qseries.hpp>

#include <string>
#include <tuple>
#include <vector>

namespace wronq {

// Exact Bernoulli number B_n (B_1 = -1/2), via the standard recurrence with
// a process-wide memo table guarded by a mutex.
Rat bernoulli(unsigned n);

// E_{2k}(q) = 1 - (4k/B_{2k}) sum_{n>=1} sigma_{2k-1}(n) q^n on lattice 1,
// with coefficients known strictly below q^terms. two_k = 2 yields the
// quasimodular E_2; decompose() refuses weight 2, so E_2 cannot leak into
// the holomorphic decomposition path.
QSeries eisenstein(unsigned two_k, long terms);

// Delta = (E4^3 - E6^2)/1728. Both this definition and eta^24 are expanded
// and compared term-for-term; a mismatch would be an internal defect.
QSeries delta_form(long terms);

// j = 1728 E4^3 / (E4^3 - E6^2), leading term q^{-1}.
QSeries j_function(long terms);

/// Exact rational polynomial in the variable j, ascending coefficients.
struct JPolynomial {
    std::vector<Rat> coeffs;

    JPolynomial() = default;
    explicit JPolynomial(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }

    void trim();
    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    Rat coeff(std::size_t d) const { return d < coeffs.size() ? coeffs[d] : Rat(0); }
    Rat eval(const Rat& x) const;
    JPolynomial derivative() const;
    std::string display(const std::string& var = "j") const;

    friend bool operator==(const JPolynomial& a, const JPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
};

/// f = Delta^t E4^delta E6^epsilon G(f, j) with weight = 12t + 4*delta + 6*epsilon.
struct Decomposition {
    long t = 0;
    int delta = 0;
    int epsilon = 0;
    JPolynomial g;
};

// Solves weight = 12t + 4*delta + 6*epsilon with 0 <= delta <= 2,
// 0 <= epsilon <= 1, t >= 0. Throws WeightUnrepresentable (weight 2, odd
// or negative weights).
std::tuple<long, int, int> weight_exponents(long weight);

// Strips Delta^t E4^delta E6^epsilon and extracts G by cancelling the most
// negative j-power greedily; the remainder must vanish to the tracked order
// or NonzeroRemainder is thrown. Input must be a holomorphic-at-infinity
// expansion on the integer lattice.
Decomposition decompose(const QSeries& f, long weight);

// m! [y^m] (eta(q e^y)/eta(q))^3, computed as the closed-form theta sum
// sum_n (-1)^n (2n+1)^{2m+1} 8^{-m} q^{(2n+1)^2/8} divided by eta^3.
// Equals the m-th moment (q d/dq)^m(eta^3)/eta^3.
QSeries jacobi_moment(unsigned m, const Rat& order);

// Normalization of jacobi_moment with leading coefficient 1 (E_{2m,3}).
QSeries e2m3(unsigned m, const Rat& order);

} // namespace wronq

#endif // WRONQ_MODFORMS_HPP
