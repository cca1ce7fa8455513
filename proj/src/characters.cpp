#include <wronq/characters.hpp>

#include <wronq/errors.hpp>

#include <algorithm>
#include <cmath>

namespace wronq {

namespace {

std::optional<long long> perfect_square_root(long long x) {
    if (x < 0) return std::nullopt;
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    if (r * r == x) return r;
    return std::nullopt;
}

bool nonneg_integer_exponents(const QSeries& s) {
    for (const auto& [n, c] : s.terms()) {
        (void)c;
        if (n < 0 || n % s.lattice_den() != 0) return false;
    }
    return true;
}

// Sign of q^{D^2/24} in Euler's pentagonal series: (-1)^k where D = +-(6k+1).
int euler_sign(long long D) {
    long long m = ((D % 6) + 6) % 6;
    long long k;
    if (m == 1)
        k = (D - 1) / 6;
    else if (m == 5)
        k = (-D - 1) / 6;
    else
        throw std::logic_error("euler_sign: D not congruent to +-1 mod 6");
    return (k % 2 == 0) ? 1 : -1;
}

IdentityReport report_from_residual(QSeries residual, Rat constant, std::string resolved,
                                    bool holds) {
    IdentityReport rep;
    rep.holds = holds;
    rep.constant = std::move(constant);
    rep.resolved = std::move(resolved);
    if (!residual.is_zero_to_order()) {
        auto [e, c] = residual.leading_term();
        rep.first_failure = std::make_pair(e, c);
    }
    rep.residual = std::move(residual);
    return rep;
}

} // namespace

AffineCharSpec make_affine_spec(long k, long i) {
    if (k < 1) throw InvalidSpec("affine level must satisfy k >= 1");
    if (i < 1 || i > k + 1)
        throw InvalidSpec("affine index must satisfy 1 <= i <= k+1");
    return {k, i};
}

void validate_virasoro_pair(long p, long pp) {
    if (p < 2 || pp < 2) throw InvalidSpec("minimal model requires p, p' >= 2");
    if (gcd_ll(p, pp) != 1) throw NonCoprimeSpec("minimal model requires gcd(p, p') = 1");
}

VirasoroCharSpec make_virasoro_spec(long p, long pp, long r, long s) {
    validate_virasoro_pair(p, pp);
    if (r < 1 || r > p - 1 || s < 1 || s > pp - 1)
        throw InvalidSpec("minimal model labels require 1 <= r <= p-1, 1 <= s <= p'-1");
    if (pp * r - p * s < 0) {
        r = p - r;
        s = pp - s;
    }
    return {p, pp, r, s};
}

Rat central_charge_affine(long k) {
    make_affine_spec(k, 1);
    return make_rat(3 * k, k + 2);
}

Rat conformal_weight_affine(long k, long i) {
    make_affine_spec(k, i);
    return make_rat(i * i - 1, 4 * (k + 2));
}

Rat affine_char_lead(long k, long i) {
    return make_rat(i * i, 4 * (k + 2)) - make_rat(1, 8);
}

Rat central_charge_virasoro(long p, long pp) {
    validate_virasoro_pair(p, pp);
    return Rat(1) - make_rat(6 * (p - pp) * (p - pp), p * pp);
}

Rat conformal_weight_virasoro(long p, long pp, long r, long s) {
    long D = pp * r - p * s;
    return make_rat(D * D - (p - pp) * (p - pp), 4 * p * pp);
}

Rat virasoro_char_lead(long p, long pp, long r, long s) {
    long D = pp * r - p * s;
    return make_rat(D * D, 4 * p * pp) - make_rat(1, 24);
}

QSeries affine_theta(long k, long i, const Rat& order) {
    make_affine_spec(k, i);
    const long long N = 4 * (k + 2);
    QSeries shell = QSeries::zero(N, ceil_to_lattice(order, N));
    const long long bound = shell.order_num();  // exponent numerators are n^2
    std::vector<std::pair<long long, Rat>> terms;
    const long long step = 2 * (k + 2);
    // m >= 0: n = i + 2m(k+2) > 0 grows; m <= -1: n < 0 shrinks. Both
    // directions have monotone n^2, so plain loops are exact.
    for (long long n = i; n * n < bound; n += step)
        terms.emplace_back(n * n, to_rat(n));
    for (long long n = i - step; n * n < bound; n -= step)
        terms.emplace_back(n * n, to_rat(n));
    return QSeries::from_terms(N, std::move(terms), shell.order());
}

QSeries affine_char(long k, long i, const Rat& order) {
    make_affine_spec(k, i);
    const Rat lead_theta = make_rat(i * i, 4 * (k + 2));
    QSeries theta = affine_theta(k, i, order + make_rat(1, 8));
    Rat eta_order = order + make_rat(1, 4) - lead_theta;
    Rat eta_min = make_rat(3, 24) + 1;
    if (eta_order < eta_min) eta_order = eta_min;
    QSeries eta3 = eta_power(3, ceil_to_lattice(eta_order, 24));
    QSeries ch = div(theta, eta3);
    return ch.order() > order ? ch.truncated(order) : ch;
}

QSeries virasoro_char(long p, long pp, long r, long s, const Rat& order) {
    VirasoroCharSpec spec = make_virasoro_spec(p, pp, r, s);
    r = spec.r;
    s = spec.s;
    const long long N = 4LL * p * pp;
    QSeries shell = QSeries::zero(N, ceil_to_lattice(order + make_rat(1, 24), N));
    const long long bound = shell.order_num();
    const long long D = static_cast<long long>(pp) * r - static_cast<long long>(p) * s;
    const long long S = static_cast<long long>(pp) * r + static_cast<long long>(p) * s;
    const long long step = 2LL * p * pp;

    std::vector<std::pair<long long, Rat>> terms;
    auto add_branch = [&](long long C, int sign) {
        for (long long v = C;; v += step) {  // n >= 0
            if (v > 0 && v * v >= bound) break;
            if (v * v < bound) terms.emplace_back(v * v, Rat(sign));
        }
        for (long long v = C - step;; v -= step) {  // n <= -1
            if (v < 0 && v * v >= bound) break;
            if (v * v < bound) terms.emplace_back(v * v, Rat(sign));
        }
    };
    add_branch(D, 1);
    add_branch(S, -1);

    QSeries num = QSeries::from_terms(N, std::move(terms), shell.order());
    QSeries eta = eta_power(1, ceil_to_lattice(order + 1, 24));
    QSeries ch = div(num, eta);
    return ch.order() > order ? ch.truncated(order) : ch;
}

VanishingClassification classify_vanishing_affine(long k) {
    if (k < 1) throw InvalidSpec("affine level must satisfy k >= 1");
    VanishingClassification out;
    if ((k + 2) % 2 == 0) {
        if (auto i = perfect_square_root((k + 2) / 2)) {
            out.vanishes = true;
            out.affine_witness = static_cast<long>(*i);
        }
    }
    return out;
}

VanishingClassification classify_vanishing_virasoro(long p, long pp) {
    validate_virasoro_pair(p, pp);
    VanishingClassification out;
    long long prod = static_cast<long long>(p) * pp;
    if (prod % 6 == 0) {
        if (auto m = perfect_square_root(prod / 6)) {
            out.six_square = true;
            out.six_square_m = static_cast<long>(*m);
        }
    }
    auto match = [](long a, long b) -> std::optional<std::pair<long, long>> {
        // a = 2 pt^2 and b = 3 ppt^2?
        if (a % 2 != 0 || b % 3 != 0) return std::nullopt;
        auto pt = perfect_square_root(a / 2);
        auto ppt = perfect_square_root(b / 3);
        if (pt && ppt) return std::make_pair(static_cast<long>(*pt), static_cast<long>(*ppt));
        return std::nullopt;
    };
    if (auto w = match(p, pp)) {
        out.vanishes = true;
        out.virasoro_witness = w;
    } else if (auto w2 = match(pp, p)) {
        out.vanishes = true;
        out.virasoro_witness = w2;
    }
    return out;
}

std::vector<long> integral_power_modules_affine(long k) {
    auto cls = classify_vanishing_affine(k);
    if (!cls.vanishes)
        throw NotAVanishingCase("k = " + std::to_string(k) + " is not of the form 2i^2-2");
    const long i = *cls.affine_witness;
    std::vector<long> out;
    for (long j = 0; j < i; ++j) {
        long m = i * (2 * j + 1);
        QSeries ch = affine_char(k, m, affine_char_lead(k, m) + 10);
        if (!nonneg_integer_exponents(ch))
            throw std::logic_error("integral_power_modules_affine: expansion check failed");
        out.push_back(m);
    }
    return out;
}

std::vector<std::pair<long, long>> integral_power_modules_virasoro(long p, long pp) {
    auto cls = classify_vanishing_virasoro(p, pp);
    if (!cls.vanishes)
        throw NotAVanishingCase("(p, p') is not of the form (2pt^2, 3ppt^2)");
    auto [pt, ppt] = *cls.virasoro_witness;
    const bool swapped = !(p % 2 == 0 && p == 2 * pt * pt);
    std::vector<std::pair<long, long>> out;
    for (long rp = 1; rp <= 2 * pt - 1; rp += 2) {
        for (long sp = 1; sp <= 3 * ppt - 1; sp += 3) {
            long r = pt * rp, s = ppt * sp;
            if (swapped) std::swap(r, s);  // M(p,p') = M(p',p)
            QSeries ch = virasoro_char(p, pp, r, s, virasoro_char_lead(p, pp, r, s) + 10);
            if (!nonneg_integer_exponents(ch))
                throw std::logic_error("integral_power_modules_virasoro: expansion check failed");
            out.emplace_back(r, s);
        }
    }
    return out;
}

IdentityReport verify_affine_identity(long i, const Rat& order) {
    if (i < 2)
        throw InvalidSpec("affine identity needs i >= 2 (i = 1 gives level k = 0)");
    const long k = 2 * i * i - 2;
    const Rat ord = ceil_to_lattice(order, 1);
    const Rat constant = to_rat(i);
    QSeries constant_series = QSeries::constant(constant, ord);

    auto signed_sum = [&](const std::vector<long>& indices) {
        QSeries sum = QSeries::zero(1, ord);
        for (std::size_t j = 0; j < indices.size(); ++j) {
            QSeries ch = affine_char(k, indices[j], ord);
            sum = (j % 2 == 0) ? sum + ch : sum - ch;
        }
        return sum;
    };

    // classification reading: m = i(2j+1)
    std::vector<long> via_classification;
    for (long j = 0; j < i; ++j) via_classification.push_back(i * (2 * j + 1));
    QSeries residual = signed_sum(via_classification) - constant_series;
    bool classification_holds = residual.is_zero_to_order();

    // printed reading: m = j(2i+1); j = 0 gives index 0, outside 1..k+1
    std::string printed_note;
    bool printed_holds = false;
    {
        std::vector<long> printed;
        bool valid = true;
        for (long j = 0; j < i; ++j) {
            long m = j * (2 * i + 1);
            if (m < 1 || m > k + 1) {
                valid = false;
                break;
            }
            printed.push_back(m);
        }
        if (!valid) {
            printed_note = "printed j(2i+1): index out of range";
        } else {
            printed_holds = (signed_sum(printed) - constant_series).is_zero_to_order();
            printed_note = printed_holds ? "printed j(2i+1): verifies"
                                         : "printed j(2i+1): fails";
        }
    }

    std::string resolved = std::string(classification_holds ? "i(2j+1)" : "i(2j+1) FAILS") +
                           " (" + printed_note + ")";
    return report_from_residual(std::move(residual), constant, std::move(resolved),
                                classification_holds || printed_holds);
}

IdentityReport verify_virasoro_identity(long pt, long ppt, const Rat& order) {
    if (pt < 1 || ppt < 1) throw InvalidSpec("pt, ppt must be positive");
    const long p = 2 * pt * pt;
    const long pp = 3 * ppt * ppt;
    if (gcd_ll(p, pp) != 1)
        throw NonCoprimeSpec("(2pt^2, 3ppt^2) not coprime for pt=" + std::to_string(pt) +
                             ", ppt=" + std::to_string(ppt));

    struct Term {
        QSeries ch;
        long long D;       // 3 r' ppt - 2 s' pt
        long long st_num;  // statement exponent numerator 3 r' pt - 2 s' ppt + 1
    };
    const Rat ord = ceil_to_lattice(order, 1);
    std::vector<Term> terms;
    for (long rp = 1; rp <= 2 * pt - 1; rp += 2)
        for (long sp = 1; sp <= 3 * ppt - 1; sp += 3)
            terms.push_back({virasoro_char(p, pp, pt * rp, ppt * sp, ord),
                             3LL * rp * ppt - 2LL * sp * pt,
                             3LL * rp * pt - 2LL * sp * ppt + 1});

    QSeries one = QSeries::constant(Rat(1), ord);
    auto run = [&](auto sign_of) {
        QSeries sum = QSeries::zero(1, ord);
        for (const auto& t : terms)
            sum = (sign_of(t) > 0) ? sum + t.ch : sum - t.ch;
        return sum - one;
    };

    QSeries euler_residual = run([](const Term& t) { return euler_sign(t.D); });
    bool euler_holds = euler_residual.is_zero_to_order();

    bool proof_holds = run([](const Term& t) {
                           return ((t.D + 1) / 2) % 2 == 0 ? 1 : -1;
                       }).is_zero_to_order();

    bool statement_valid = std::all_of(terms.begin(), terms.end(),
                                       [](const Term& t) { return t.st_num % 2 == 0; });
    bool statement_holds =
        statement_valid &&
        run([](const Term& t) { return (t.st_num / 2) % 2 == 0 ? 1 : -1; }).is_zero_to_order();

    std::string resolved = std::string("euler") + (euler_holds ? "" : " FAILS") +
                           " (statement formula: " +
                           (statement_valid ? (statement_holds ? "verifies" : "fails")
                                            : "non-integer exponent") +
                           "; proof formula: " + (proof_holds ? "verifies" : "fails") + ")";
    return report_from_residual(std::move(euler_residual), Rat(1), std::move(resolved),
                                euler_holds || proof_holds || statement_holds);
}

IdentityReport verify_jacobi_rearrangement(long i, const Rat& order) {
    if (i < 2) throw InvalidSpec("jacobi rearrangement needs i >= 2");
    QSeries lhs = eta_power(3, ceil_to_lattice(order + make_rat(1, 8), 24))
                      .shifted(make_rat(-1, 8));
    QSeries shell = QSeries::zero(1, ceil_to_lattice(order, 1));
    const long long bound = shell.order_num();

    std::vector<std::pair<long long, Rat>> t;
    for (long j = 0; j < i; ++j) {
        const int sj = (j % 2 == 0) ? 1 : -1;
        for (long long m = 0;; ++m) {
            long long a = 2 * m * i + j;
            long long e = a * (a + 1) / 2;
            if (e >= bound) break;
            t.emplace_back(e, to_rat(sj * (4 * m * i + 2 * j + 1)));
        }
        for (long long m = 1;; ++m) {
            long long a = 2 * m * i - j;
            long long e = a * (a - 1) / 2;
            if (e >= bound) break;
            t.emplace_back(e, to_rat(-sj * (4 * m * i - 2 * j - 1)));
        }
    }
    QSeries rhs = QSeries::from_terms(1, std::move(t), shell.order());
    QSeries residual = rhs - lhs.truncated(shell.order());
    bool holds = residual.is_zero_to_order();
    return report_from_residual(std::move(residual), Rat(0), "mod-2i split of jacobi cube",
                                holds);
}

std::vector<VirasoroCharSpec> virasoro_module_list(long p, long pp) {
    validate_virasoro_pair(p, pp);
    std::vector<VirasoroCharSpec> out;
    for (long r = 1; r <= p - 1; ++r)
        for (long s = 1; s <= pp - 1; ++s)
            if (pp * r - p * s > 0) out.push_back({p, pp, r, s});
    return out;
}

} // namespace wronq
