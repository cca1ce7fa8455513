#ifndef WRONQ_CHARACTERS_HPP
#define WRONQ_CHARACTERS_HPP

#include <wronq/qseries.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wronq {

/// The module L(k, i-1): level k, index 1 <= i <= k+1.
struct AffineCharSpec {
    long level = 1;
    long index = 1;
};

/// Minimal-model module of M(p, p'), canonical representative with
/// p'r - ps > 0 ((r, s) and (p-r, p'-s) label the same character).
struct VirasoroCharSpec {
    long p = 2;
    long pp = 3;
    long r = 1;
    long s = 1;
};

AffineCharSpec make_affine_spec(long k, long i);
VirasoroCharSpec make_virasoro_spec(long p, long pp, long r, long s);
void validate_virasoro_pair(long p, long pp);

// c_k = 3k/(k+2), h_{k,i} = (i^2-1)/(4(k+2)).
Rat central_charge_affine(long k);
Rat conformal_weight_affine(long k, long i);
// h_{k,i} - c_k/24 = i^2/(4(k+2)) - 1/8, the character's leading exponent.
Rat affine_char_lead(long k, long i);

// c_{p,p'} = 1 - 6(p-p')^2/(pp'), h^{r,s} = ((p'r-ps)^2 - (p-p')^2)/(4pp').
Rat central_charge_virasoro(long p, long pp);
Rat conformal_weight_virasoro(long p, long pp, long r, long s);
Rat virasoro_char_lead(long p, long pp, long r, long s);

// theta_{k,i} = sum_m (i + 2m(k+2)) q^{(i+2m(k+2))^2/4(k+2)}, lattice 4(k+2).
QSeries affine_theta(long k, long i, const Rat& order);

// ch_{k,i} = theta_{k,i} / eta^3, printed normalization (leading coefficient
// is the index i).
QSeries affine_char(long k, long i, const Rat& order);

// ch^{r,s}_{p,p'} = (sum_n q^{(2npp'+p'r-ps)^2/4pp'} - q^{(2npp'+p'r+ps)^2/4pp'}) / eta,
// leading coefficient 1.
QSeries virasoro_char(long p, long pp, long r, long s, const Rat& order);

struct VanishingClassification {
    bool vanishes = false;
    std::optional<long> affine_witness;                     // i with k = 2i^2 - 2
    std::optional<std::pair<long, long>> virasoro_witness;  // (pt, ppt)
    bool six_square = false;                                // pp' = 6m^2 necessary cond.
    std::optional<long> six_square_m;
};

// Exact arithmetic tests of Theorem "k = 2i^2-2" / "(p,p') = (2pt^2, 3ppt^2)";
// the Virasoro test accepts either ordering of the pair.
VanishingClassification classify_vanishing_affine(long k);
VanishingClassification classify_vanishing_virasoro(long p, long pp);

// Indices of the integral-power characters in a vanishing family; each
// returned character is asserted by expansion to have exponents in Z>=0.
// Throws NotAVanishingCase otherwise.
std::vector<long> integral_power_modules_affine(long k);
std::vector<std::pair<long, long>> integral_power_modules_virasoro(long p, long pp);

struct IdentityReport {
    bool holds = false;
    Rat constant;                   // the expected constant value
    std::string resolved;           // convention that verified, with notes
    QSeries residual;               // verified-reading sum minus the constant
    std::optional<std::pair<Rat, Rat>> first_failure;  // exponent, residual coeff
};

// sum_{j=0}^{i-1} (-1)^j ch_{2i^2-2, i(2j+1)} = i. The subscript reading
// i(2j+1) vs j(2i+1) is settled by expansion; both are evaluated and the
// report records the outcome.
IdentityReport verify_affine_identity(long i, const Rat& order);

// Signed sum of the integral-power characters of M(2pt^2, 3ppt^2) equals 1.
// Three sign conventions are evaluated: the two printed exponent formulas
// and the sign each term needs to land on Euler's pentagonal series.
IdentityReport verify_virasoro_identity(long pt, long ppt, const Rat& order);

// The mod-2i rearrangement of Jacobi's cube identity, compared against
// prod (1-q^n)^3 term for term.
IdentityReport verify_jacobi_rearrangement(long i, const Rat& order);

// Sign conventions frozen after the resolution runs (regression-tested).
inline constexpr const char* kAffineIdentityReading = "i(2j+1)";
inline constexpr const char* kVirasoroIdentitySigns = "euler";

// All canonical (r, s) labels of M(p, p'), sorted; size (p-1)(p'-1)/2.
std::vector<VirasoroCharSpec> virasoro_module_list(long p, long pp);

} // namespace wronq

#endif // WRONQ_CHARACTERS_HPP
