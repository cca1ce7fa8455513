#include <wronq/roots.hpp>

#include <wronq/errors.hpp>

#include <algorithm>
#include <sstream>

namespace wronq {

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

JPolynomial poly_rem(JPolynomial a, const JPolynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rat f = a.coeffs.back() / b.coeffs.back();
        long shift = a.degree() - b.degree();
        for (long d = 0; d <= b.degree(); ++d)
            a.coeffs[static_cast<std::size_t>(d + shift)] -=
                f * b.coeffs[static_cast<std::size_t>(d)];
        a.trim();
    }
    return a;
}

// Scaling a polynomial by a positive rational preserves every sign
// evaluation; it keeps the chain's coefficients small.
JPolynomial positive_normalized(JPolynomial p) {
    if (p.is_zero()) return p;
    Rat lead = p.coeffs.back();
    Rat s = lead > 0 ? lead : Rat(-lead);
    for (auto& c : p.coeffs) c /= s;
    return p;
}

std::vector<JPolynomial> sturm_chain(const JPolynomial& g) {
    std::vector<JPolynomial> chain{g, g.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        JPolynomial next = poly_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : next.coeffs) c = -c;
        if (next.is_zero()) break;
        chain.push_back(positive_normalized(std::move(next)));
    }
    return chain;
}

int sign_variations(const std::vector<JPolynomial>& chain, const Rat& x) {
    int variations = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// number of distinct roots in (a, b]
int roots_in(const std::vector<JPolynomial>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rat cauchy_bound(const JPolynomial& g) {
    Rat lead = g.coeffs.back();
    Rat mx(0);
    for (std::size_t d = 0; d + 1 < g.coeffs.size(); ++d) {
        Rat ratio = g.coeffs[d] / lead;
        if (ratio < 0) ratio = -ratio;
        if (ratio > mx) mx = ratio;
    }
    return mx + 1;
}

void isolate_rec(const JPolynomial& g, const std::vector<JPolynomial>& chain,
                 const Rat& lo, const Rat& hi, std::vector<Interval>& out) {
    int count = roots_in(chain, lo, hi);
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (g.eval(mid) == 0) {
        out.push_back({mid, mid});
        // shrink a window around the exact root until it contains nothing else
        Rat w = (hi - lo) / 4;
        while (g.eval(mid - w) == 0 || g.eval(mid + w) == 0 ||
               roots_in(chain, Rat(mid - w), Rat(mid + w)) != 1)
            w /= 2;
        isolate_rec(g, chain, lo, mid - w, out);
        isolate_rec(g, chain, mid + w, hi, out);
        return;
    }
    isolate_rec(g, chain, lo, mid, out);
    isolate_rec(g, chain, mid, hi, out);
}

// Decimal string of x with `digits` significant digits, half-up rounding.
std::string format_decimal(const Rat& x, int digits) {
    if (x == 0) return "0";
    bool neg = x < 0;
    Rat a = neg ? Rat(-x) : x;

    // count integer digits of a (0 when a < 1)
    int int_digits = 0;
    Int ip = floor_div(a.get_num(), a.get_den());
    Int ten(10);
    for (Int t = ip; t > 0; t = t / ten) ++int_digits;

    int frac = digits - int_digits;  // decimals to keep
    if (int_digits == 0) {
        // leading zeros after the point are not significant
        Rat scaled = a;
        int zeros = 0;
        while (scaled < 1) {
            scaled *= 10;
            ++zeros;
        }
        frac = digits + zeros - 1;
    }

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(frac, 0)));
    Rat scaled = a * Rat(scale);
    // round half up
    Int twice = floor_div(scaled.get_num() * 2 + scaled.get_den(), scaled.get_den() * 2);
    std::string s = twice.get_str();
    if (frac <= 0) {
        for (int i = frac; i < 0; ++i) s += '0';
        return (neg ? "-" : "") + s;
    }
    while (static_cast<int>(s.size()) <= frac) s.insert(s.begin(), '0');
    s.insert(s.size() - static_cast<std::size_t>(frac), ".");
    return (neg ? "-" : "") + s;
}

} // namespace

bool is_squarefree(const JPolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("is_squarefree: zero polynomial");
    if (g.degree() == 0) return true;
    JPolynomial a = g, b = g.derivative();
    while (!b.is_zero()) {
        JPolynomial r = poly_rem(a, b);
        a = b;
        b = positive_normalized(std::move(r));
    }
    return a.degree() == 0;
}

std::vector<Interval> isolate_real_roots(const JPolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("isolate_real_roots: zero polynomial");
    if (!is_squarefree(g)) throw NotSquarefree("isolate_real_roots: repeated roots");
    if (g.degree() == 0) return {};
    Rat bound = cauchy_bound(g);
    auto chain = sturm_chain(g);
    std::vector<Interval> out;
    isolate_rec(g, chain, Rat(-bound), bound, out);
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    // split points are shared between neighbors; bisect until the closed
    // intervals are pairwise disjoint
    auto tighten = [&](Interval& iv) {
        if (iv.lo == iv.hi) return;
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = sign_of(g.eval(mid));
        if (sm == 0) {
            iv.lo = iv.hi = mid;
            return;
        }
        if (sm == sign_of(g.eval(iv.lo)))
            iv.lo = mid;
        else
            iv.hi = mid;
    };
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        while (out[i].hi >= out[i + 1].lo) {
            tighten(out[i]);
            tighten(out[i + 1]);
        }
    return out;
}

std::string refine_root(const JPolynomial& g, Interval iv, int digits) {
    if (g.is_zero()) throw ZeroPolynomial("refine_root: zero polynomial");
    Rat lo = iv.lo, hi = iv.hi;
    if (lo == hi) {
        if (g.eval(lo) != 0) throw NoSignChange("degenerate interval is not a root");
        return format_decimal(lo, digits);
    }
    int slo = sign_of(g.eval(lo));
    int shi = sign_of(g.eval(hi));
    if (slo == 0) return format_decimal(lo, digits);
    if (shi == 0) return format_decimal(hi, digits);
    if (slo == shi) throw NoSignChange("interval endpoints have equal signs");

    for (int iter = 0; iter < 4 * digits + 64; ++iter) {
        std::string a = format_decimal(lo, digits);
        std::string b = format_decimal(hi, digits);
        if (a == b) return a;
        Rat mid = (lo + hi) / 2;
        int sm = sign_of(g.eval(mid));
        if (sm == 0) return format_decimal(mid, digits);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return format_decimal(Rat((lo + hi) / 2), digits);
}

RootReport check_zero_location(const JPolynomial& g) {
    if (g.is_zero()) throw ZeroPolynomial("check_zero_location: zero polynomial");
    RootReport rep;
    rep.polynomial = g;
    rep.squarefree = is_squarefree(g);
    if (g.degree() == 0) {
        rep.all_real = true;
        rep.all_in_0_1728 = true;
        return rep;
    }
    if (!rep.squarefree) return rep;  // falsifies "simple"; nothing further

    auto intervals = isolate_real_roots(g);
    rep.all_real = (static_cast<long>(intervals.size()) == g.degree());

    const Rat left(0), right(1728);
    bool all_in = rep.all_real;
    for (const auto& iv : intervals) {
        rep.roots.emplace_back(iv, refine_root(g, iv));

        Rat lo = iv.lo, hi = iv.hi;
        bool decided = false, inside = false;
        if (lo == hi) {
            decided = true;
            inside = (lo >= left && lo <= right);
        }
        // a root exactly at the window edge never separates by bisection
        if (!decided && g.eval(left) == 0 && lo < left && left <= hi &&
            roots_in(sturm_chain(g), lo, left) == 1) {
            decided = true;
            inside = true;
        }
        if (!decided && g.eval(right) == 0 && lo < right && right <= hi &&
            roots_in(sturm_chain(g), lo, right) == 1) {
            decided = true;
            inside = true;
        }
        int slo = sign_of(g.eval(lo));
        while (!decided) {
            if (lo >= left && hi <= right) {
                decided = true;
                inside = true;
                break;
            }
            if (hi < left || lo > right) {
                decided = true;
                inside = false;
                break;
            }
            Rat mid = (lo + hi) / 2;
            int sm = sign_of(g.eval(mid));
            if (sm == 0) {
                decided = true;
                inside = (mid >= left && mid <= right);
                break;
            }
            if (sm == slo)
                lo = mid;
            else
                hi = mid;
        }
        if (!inside) all_in = false;
    }
    rep.all_in_0_1728 = all_in;
    return rep;
}

} // namespace wronq
