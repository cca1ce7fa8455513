#ifndef WRONQ_MODP_HPP
#define WRONQ_MODP_HPP

#include <wronq/qseries.hpp>

#include <limits>
#include <optional>
#include <tuple>

namespace wronq {

// v_p(0); ordered above every finite valuation.
inline constexpr long long kInfiniteValuation = std::numeric_limits<long long>::max();

// Exact p-adic valuation of a rational. Throws NotPrime.
long long p_valuation(const Rat& x, long long p);

// Residue of a p-integral rational mod p^e, via the modular inverse of the
// denominator; in [0, p^e). Throws NotPIntegral when p divides the
// denominator.
Int residue_mod(const Rat& x, long long p, int e);

struct CongruenceReport {
    enum class Kind { Assertion, Evidence };
    long long p = 0;
    int modulus_exp = 1;
    Rat checked_order;
    bool holds = false;
    // exponent, lhs coefficient, rhs coefficient at the first failure
    std::optional<std::tuple<Rat, Rat, Rat>> first_failure;
    // smallest v_p over every coefficient examined
    long long min_valuation = kInfiniteValuation;
    Kind kind = Kind::Assertion;
};

// Coefficient-wise v_p >= 0 below the order.
CongruenceReport is_p_integral(const QSeries& a, long long p);

// Coefficient-wise congruence mod p^e up to the common order. Both inputs
// must be p-integral throughout (NotPIntegral otherwise; skipping would
// mask failures).
CongruenceReport congruent_mod(const QSeries& a, const QSeries& b, long long p, int e);

// theta^{(k+1)}_{k,i} == (4(k+2))^{-(k+1)} theta_{k,i} (mod p), p = 2k+3,
// checked for every i = 1..k+1.
CongruenceReport check_theta_congruence(long k, const Rat& order);

// m! [y^m](eta(q e^y)/eta(q))^3 == 2^{-3m} (mod p) with m = (p-1)/2.
CongruenceReport check_jacobi_moment_congruence(long long p, const Rat& order);

struct FIntegralityReport {
    long long p = 0;
    bool vacuous = false;  // k = 2i^2-2: F = 0 and there is nothing to check
    bool holds = false;
    Rat a0;                          // leading coefficient of F = W'/W
    Rat a0_product;                  // prod_{i=1}^{k+1} (h_{k,i} - c_k/24)
    bool a0_matches = false;
    long long a0_valuation = 0;      // the theorem's v_p(a_0) = 1
    Rat w_lead;                      // leading coeff of W on the monic basis
    Rat w_lead_product;              // prod_{1<=m<n<=k+1} (m^2-n^2)/(4(k+2))
    bool w_lead_matches = false;     // up to sign
    long long w_lead_valuation = 0;  // must be 0 (a p-unit)
    CongruenceReport f_integrality;  // normalized F is p-integral
};

// The three sub-checks of the p-integrality theorem for p = 2k+3 prime,
// delivered to n_terms integral powers.
FIntegralityReport check_f_integrality(long k, long n_terms);

// Conjectured congruence: normalized F == 1 (mod p). Evidence kind.
CongruenceReport check_hasse_conjecture(long k, long n_terms);

struct ModP2ProbeReport {
    long long p = 0;
    std::optional<Rat> h;        // witness with W' == h W (mod p^2)
    CongruenceReport congruence; // evidence kind
};

// Exploratory: solves h from the leading coefficients and tests
// W' == h W (mod p^2) coefficient-wise.
ModP2ProbeReport probe_w_congruence_mod_p2(long k, long n_terms);

} // namespace wronq

#endif // WRONQ_MODP_HPP
