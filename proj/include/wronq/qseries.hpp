#ifndef WRONQ_QSERIES_HPP
#define WRONQ_QSERIES_HPP

#include <wronq/errors.hpp>
#include <wronq/rational.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace wronq {

/**
 * Truncated formal q-series with exact rational coefficients and exponents
 * on the lattice (1/N)Z.
 *
 * A series knows its guaranteed order O: every coefficient at exponent < O
 * is correct and stored (zero coefficients are never stored); coefficients
 * at exponent >= O are unknown. O itself lies on the lattice. Values are
 * immutable after construction, so concurrent reads are safe.
 *
 * Order bookkeeping through arithmetic:
 *   a + b     : O = min(Oa, Ob)
 *   a * b     : O = min(Oa + lead(b), Ob + lead(a)), where lead(x) means
 *               the smallest stored exponent, or Ox when x stores nothing
 *   invert(a) : O = Oa - 2*lead(a)
 *   derive    : O unchanged
 */
class QSeries {
public:
    // The zero series on lattice 1 with order 0 (knows nothing).
    QSeries();

    static QSeries zero(long long lattice_den, const Rat& order);
    static QSeries constant(const Rat& c, const Rat& order);
    static QSeries monomial(const Rat& coeff, const Rat& exponent,
                            long long lattice_den, const Rat& order);
    // terms: pairs (exponent numerator, coefficient); zeros and terms at or
    // beyond the order are dropped.
    static QSeries from_terms(long long lattice_den,
                              std::vector<std::pair<long long, Rat>> terms,
                              const Rat& order);

    long long lattice_den() const { return den_; }
    long long order_num() const { return order_num_; }
    Rat order() const;

    const std::map<long long, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    // True when no coefficient below the order is nonzero. Exact zeroness
    // is a statement the classifier layers make, never this one.
    bool is_zero_to_order() const { return terms_.empty(); }

    // Smallest stored exponent and its coefficient; throws ZeroSeries when
    // nothing is stored.
    std::pair<Rat, Rat> leading_term() const;
    Rat leading_exponent() const;
    Rat leading_coeff() const;

    // Coefficient at exponent e: nullopt when e >= order (unknown),
    // otherwise the stored value or exact 0.
    std::optional<Rat> coeff(const Rat& e) const;

    QSeries rescaled(long long new_den) const;    // den must divide new_den
    QSeries truncated(const Rat& order) const;    // cap order, drop terms
    QSeries shifted(const Rat& delta) const;      // multiply by q^delta
    QSeries scaled(const Rat& c) const;           // c * this

    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    QSeries(long long den, long long order_num, std::map<long long, Rat> terms);

    long long den_;                   // lattice denominator N >= 1
    long long order_num_;             // order = order_num_ / den_
    std::map<long long, Rat> terms_;  // exponent numerator -> nonzero coeff

    void prune();

    friend QSeries operator+(const QSeries&, const QSeries&);
    friend QSeries operator-(const QSeries&, const QSeries&);
    friend QSeries operator-(const QSeries&);
    friend QSeries operator*(const QSeries&, const QSeries&);
    friend QSeries invert(const QSeries&);
    friend std::pair<QSeries, QSeries> aligned(const QSeries&, const QSeries&);
};

// Ring operations (operands are aligned to the lcm lattice first).
QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);

// Both series rescaled to lattice lcm(Na, Nb); values unchanged.
std::pair<QSeries, QSeries> aligned(const QSeries& a, const QSeries& b);

// Multiplicative inverse to the contracted order O - 2*lead.
// Throws InversionOfZero when a stores no terms.
QSeries invert(const QSeries& a);

// a * invert(b).
QSeries div(const QSeries& a, const QSeries& b);

// s-fold Ramanujan derivative (q d/dq): coefficient at e picks up e^s.
QSeries derive(const QSeries& a, unsigned s = 1);

// a^e for e >= 0 (e = 0 gives 1 carrying a's relative precision);
// e < 0 inverts the positive power.
QSeries pow_series(const QSeries& a, long e);

// q^{r/24} * prod_{n>=1} (1 - q^n)^r expanded exactly below `order`,
// on lattice 24. Negative r goes through the inverse product.
// Requires order > r/24.
QSeries eta_power(long r, const Rat& order);

// First exponent below min(Oa, Ob, cap) where the two series disagree.
std::optional<Rat> first_difference(const QSeries& a, const QSeries& b);

// Term-for-term agreement below `order`; throws InsufficientOrder when
// either operand is not guaranteed that far.
bool agree_to(const QSeries& a, const QSeries& b, const Rat& order);

std::string to_string(const QSeries& a, std::size_t max_terms = 12);

} // namespace wronq

#endif // WRONQ_QSERIES_HPP
