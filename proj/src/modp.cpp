#include <wronq/modp.hpp>

#include <wronq/characters.hpp>
#include <wronq/errors.hpp>
#include <wronq/modforms.hpp>
#include <wronq/wronskian.hpp>

#include <algorithm>

namespace wronq {

namespace {

void require_prime(long long p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

long long mpz_p_count(const Int& x, long long p) {
    if (x == 0) return kInfiniteValuation;
    Int rem;
    Int pz = to_int(p);
    return static_cast<long long>(
        mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

} // namespace

long long p_valuation(const Rat& x, long long p) {
    require_prime(p);
    if (x == 0) return kInfiniteValuation;
    return mpz_p_count(Int(x.get_num()), p) - mpz_p_count(Int(x.get_den()), p);
}

Int residue_mod(const Rat& x, long long p, int e) {
    require_prime(p);
    Int pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    if (mpz_p_count(Int(x.get_den()), p) != 0)
        throw NotPIntegral("denominator divisible by " + std::to_string(p));
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), pe.get_mpz_t()) == 0)
        throw NotPIntegral("denominator not invertible mod p^e");
    Int r = (x.get_num() % pe) * inv % pe;
    if (r < 0) r += pe;
    return r;
}

CongruenceReport is_p_integral(const QSeries& a, long long p) {
    require_prime(p);
    CongruenceReport rep;
    rep.p = p;
    rep.modulus_exp = 1;
    rep.checked_order = a.order();
    rep.holds = true;
    for (const auto& [n, c] : a.terms()) {
        long long v = p_valuation(c, p);
        rep.min_valuation = std::min(rep.min_valuation, v);
        if (v < 0 && rep.holds) {
            rep.holds = false;
            rep.first_failure = std::make_tuple(make_rat(n, a.lattice_den()), c, Rat(0));
        }
    }
    return rep;
}

CongruenceReport congruent_mod(const QSeries& a, const QSeries& b, long long p, int e) {
    require_prime(p);
    auto pre_a = is_p_integral(a, p);
    auto pre_b = is_p_integral(b, p);
    if (!pre_a.holds || !pre_b.holds)
        throw NotPIntegral("congruent_mod: operand has a coefficient with v_p < 0");

    auto [x, y] = aligned(a, b);
    CongruenceReport rep;
    rep.p = p;
    rep.modulus_exp = e;
    rep.checked_order = std::min(x.order(), y.order());
    rep.holds = true;
    rep.min_valuation = std::min(pre_a.min_valuation, pre_b.min_valuation);

    const long long bound =
        std::min(x.order_num(), y.order_num());
    auto ia = x.terms().begin(), ea = x.terms().end();
    auto ib = y.terms().begin(), eb = y.terms().end();
    while (ia != ea || ib != eb) {
        long long na = ia != ea ? ia->first : bound;
        long long nb = ib != eb ? ib->first : bound;
        long long n = std::min(na, nb);
        if (n >= bound) break;
        Rat ca = (na == n) ? ia->second : Rat(0);
        Rat cb = (nb == n) ? ib->second : Rat(0);
        if (residue_mod(ca, p, e) != residue_mod(cb, p, e)) {
            rep.holds = false;
            rep.first_failure = std::make_tuple(make_rat(n, x.lattice_den()), ca, cb);
            break;
        }
        if (na == n) ++ia;
        if (nb == n) ++ib;
    }
    return rep;
}

CongruenceReport check_theta_congruence(long k, const Rat& order) {
    make_affine_spec(k, 1);
    const long long p = 2 * k + 3;
    require_prime(p);
    const Rat factor = rat_pow(make_rat(1, 4 * (k + 2)), k + 1);
    CongruenceReport overall;
    overall.p = p;
    overall.holds = true;
    overall.checked_order = order;
    for (long i = 1; i <= k + 1; ++i) {
        QSeries theta = affine_theta(k, i, order);
        QSeries lhs = derive(theta, static_cast<unsigned>(k + 1));
        QSeries rhs = theta.scaled(factor);
        CongruenceReport rep = congruent_mod(lhs, rhs, p, 1);
        overall.min_valuation = std::min(overall.min_valuation, rep.min_valuation);
        overall.checked_order = std::min(overall.checked_order, rep.checked_order);
        if (!rep.holds && overall.holds) {
            overall.holds = false;
            overall.first_failure = rep.first_failure;
        }
    }
    return overall;
}

CongruenceReport check_jacobi_moment_congruence(long long p, const Rat& order) {
    require_prime(p);
    if (p < 5) throw NotPrime("need an odd prime >= 5");
    const unsigned m = static_cast<unsigned>((p - 1) / 2);
    QSeries jm = jacobi_moment(m, order);
    QSeries rhs = QSeries::constant(rat_pow(Rat(2), -3L * static_cast<long>(m)), jm.order());
    return congruent_mod(jm, rhs, p, 1);
}

namespace {

struct MonicWronskians {
    QSeries w, w_prime, f;
};

MonicWronskians monic_wronskians(long k, long n_terms) {
    FamilySpec spec = FamilySpec::affine(k);
    const long m = spec.basis_size();
    for (long budget : {n_terms + m + 10, n_terms + m * (m + 1) / 2 + 10}) {
        Rat order_abs = affine_char_lead(k, k + 1) + to_rat(budget);
        std::vector<QSeries> basis = character_basis(spec, order_abs, /*monic=*/true);
        QSeries w = wronskian(basis);
        QSeries wp = wronskian_prime(basis);
        QSeries f = div(wp, w);
        if (f.order() >= to_rat(n_terms)) return {std::move(w), std::move(wp), std::move(f)};
    }
    throw InsufficientOrder("monic_wronskians: budget exhausted for k=" + std::to_string(k));
}

} // namespace

FIntegralityReport check_f_integrality(long k, long n_terms) {
    const long long p = 2 * k + 3;
    require_prime(p);
    FIntegralityReport rep;
    rep.p = p;
    if (classify_vanishing_affine(k).vanishes) {
        // F = 0; nothing to check (unreachable for prime p since
        // 2(2i^2-2)+3 = (2i-1)(2i+1), but kept for completeness)
        rep.vacuous = true;
        rep.holds = true;
        return rep;
    }

    auto [w, wp, f] = monic_wronskians(k, n_terms);

    rep.a0 = f.leading_coeff();
    rep.a0_product = Rat(1);
    for (long i = 1; i <= k + 1; ++i) rep.a0_product *= affine_char_lead(k, i);
    rep.a0_matches = (rep.a0 == rep.a0_product) && (f.leading_exponent() == 0);
    rep.a0_valuation = p_valuation(rep.a0, p);

    rep.w_lead = w.leading_coeff();
    rep.w_lead_product = Rat(1);
    for (long mm = 1; mm <= k + 1; ++mm)
        for (long nn = mm + 1; nn <= k + 1; ++nn)
            rep.w_lead_product *= make_rat(mm * mm - nn * nn, 4 * (k + 2));
    rep.w_lead_matches =
        (rep.w_lead == rep.w_lead_product) || (rep.w_lead == -rep.w_lead_product);
    rep.w_lead_valuation = p_valuation(rep.w_lead, p);

    QSeries fn = f.scaled(Rat(1) / rep.a0).truncated(to_rat(n_terms));
    rep.f_integrality = is_p_integral(fn, p);

    rep.holds = rep.a0_matches && rep.a0_valuation == 1 && rep.w_lead_matches &&
                rep.w_lead_valuation == 0 && rep.f_integrality.holds;
    return rep;
}

CongruenceReport check_hasse_conjecture(long k, long n_terms) {
    const long long p = 2 * k + 3;
    require_prime(p);
    WronskianResult res = f_form(FamilySpec::affine(k), n_terms);
    if (!res.f_normalized)
        throw InvalidSpec("hasse check needs a nonzero F; k = " + std::to_string(k));
    CongruenceReport rep = congruent_mod(
        *res.f_normalized, QSeries::constant(Rat(1), res.f_normalized->order()), p, 1);
    rep.kind = CongruenceReport::Kind::Evidence;
    return rep;
}

ModP2ProbeReport probe_w_congruence_mod_p2(long k, long n_terms) {
    const long long p = 2 * k + 3;
    require_prime(p);
    WronskianResult res = f_form(FamilySpec::affine(k), n_terms);

    ModP2ProbeReport probe;
    probe.p = p;
    Rat h = res.w_prime.is_zero_to_order()
                ? Rat(0)
                : Rat(res.w_prime.leading_coeff() / res.w.leading_coeff());
    probe.h = h;
    probe.congruence = congruent_mod(res.w_prime, res.w.scaled(h), p, 2);
    probe.congruence.kind = CongruenceReport::Kind::Evidence;
    return probe;
}

} // namespace wronq
