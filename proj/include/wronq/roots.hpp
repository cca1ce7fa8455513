#ifndef WRONQ_ROOTS_HPP
#define WRONQ_ROOTS_HPP

#include <wronq/modforms.hpp>

#include <string>
#include <utility>
#include <vector>

namespace wronq {

/// Closed interval [lo, hi] carrying a sign change of the polynomial
/// (lo == hi marks an exact rational root).
struct Interval {
    Rat lo, hi;
};

// gcd(g, g') is constant. Degree-0 polynomials count as squarefree;
// throws ZeroPolynomial on the zero polynomial.
bool is_squarefree(const JPolynomial& g);

// One disjoint interval per real root, by Sturm sign-variation counting
// over the Cauchy bound, exact arithmetic throughout. Exact rational roots
// hit by a split point come back as degenerate intervals.
// Throws NotSquarefree.
std::vector<Interval> isolate_real_roots(const JPolynomial& g);

// Bisection to `digits` significant decimal digits; the returned string is
// correctly rounded (trailing zeros kept). Throws NoSignChange when the
// interval does not bracket a root.
std::string refine_root(const JPolynomial& g, Interval iv, int digits = 10);

struct RootReport {
    JPolynomial polynomial;
    bool squarefree = false;
    bool all_real = false;
    bool all_in_0_1728 = false;
    std::vector<std::pair<Interval, std::string>> roots;
};

// Conjecture-style evidence report: simple zeros, all real, all inside
// [0, 1728]. A non-squarefree input yields a falsifying report rather than
// an exception; degree-0 polynomials yield the vacuous true report.
RootReport check_zero_location(const JPolynomial& g);

} // namespace wronq

#endif // WRONQ_ROOTS_HPP
