#ifndef WRONQ_WRONSKIAN_HPP
#define WRONQ_WRONSKIAN_HPP

#include <wronq/characters.hpp>
#include <wronq/qseries.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wronq {

enum class Family { Affine, Virasoro };

/// Either the full character basis of L(k Lambda_0) (all i = 1..k+1) or of
/// M(p, p') (all canonical (r, s)).
struct FamilySpec {
    Family family = Family::Affine;
    long k = 1;   // affine level
    long p = 2;   // virasoro pair
    long pp = 3;

    static FamilySpec affine(long k) { return {Family::Affine, k, 0, 0}; }
    static FamilySpec virasoro(long p, long pp) { return {Family::Virasoro, 0, p, pp}; }

    std::string label() const;
    long basis_size() const;            // m
    long weight() const { return 2 * basis_size(); }
    long eta_exponent() const;          // closed-form exponent of the W theorem
    VanishingClassification classify() const;
};

// Wronskian determinant w.r.t. q d/dq: row j holds the j-th derivative,
// j = 0..m-1. Basis elements are aligned pairwise as needed.
QSeries wronskian(const std::vector<QSeries>& basis);

// Wronskian of the first derivatives: rows are derivative orders 1..m.
QSeries wronskian_prime(const std::vector<QSeries>& basis);

// Fraction-free (Bareiss) elimination determinant with valuation-aware
// pivoting; divisions are by series with known nonzero leading coefficient.
QSeries determinant_bareiss(std::vector<std::vector<QSeries>> m);

// Laplace-expansion determinant, the cross-check oracle for small m.
QSeries determinant_leibniz(const std::vector<std::vector<QSeries>>& m);

struct WronskianResult {
    FamilySpec spec;
    long weight = 0;            // 2m
    bool vanishes = false;      // F zero to order, classifier concurring
    QSeries w;                  // W_V
    QSeries w_prime;            // W'_V
    QSeries w_monic;            // normalized W with leading coefficient 1
    std::optional<QSeries> f;            // W'/W when nonzero
    std::optional<QSeries> f_normalized; // leading coefficient 1
};

// Character basis of the family expanded to `order` (paper normalization;
// monic divides each character by its leading coefficient).
std::vector<QSeries> character_basis(const FamilySpec& spec, const Rat& order,
                                     bool monic = false);

// Assembles W, W', F = W'/W and the normalization, delivering n_terms
// integral q-powers of F (or certifying F = 0 that far). The character
// order budget starts at lead + n + m + 10 lattice steps and escalates to
// lead + n + m(m+1)/2 + 10 before raising InsufficientOrder; the delivered
// orders are always validated against the tracked ones. Numeric zeroness
// must agree with the exact classifier or ClassifierMismatch is thrown.
WronskianResult f_form(const FamilySpec& spec, long n_terms);

// Single-attempt variant with an explicit relative budget (lattice steps
// above each leading exponent); raises InsufficientOrder instead of
// escalating.
WronskianResult f_form_with_budget(const FamilySpec& spec, long n_terms, long budget_steps);

struct EtaCheckReport {
    bool holds = false;
    long eta_exponent = 0;
    std::optional<Rat> first_mismatch;
};

// Compares the monic W against eta^{2k(k+1)} (affine) or
// eta^{(p-1)(p'-1)(pp'-p-p'-1)/2} (virasoro) term-for-term to n_terms
// integral powers past the lead.
EtaCheckReport verify_eta_closed_form(const FamilySpec& spec, long n_terms);

} // namespace wronq

#endif // WRONQ_WRONSKIAN_HPP
