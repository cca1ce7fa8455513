#include <doctest.h>

#include <wronq/errors.hpp>
#include <wronq/modforms.hpp>
#include <wronq/modp.hpp>

#include "test_util.hpp"

#include <random>

using namespace wronq;

TEST_SUITE("modp") {

TEST_CASE("p-adic valuation of rationals") {
    CHECK(p_valuation(to_rat(240), 5) == 1);
    CHECK(p_valuation(make_rat(1, 5), 5) == -1);
    CHECK(p_valuation(Rat(0), 7) == kInfiniteValuation);
    CHECK(p_valuation(make_rat(50, 8), 2) == -2);
    CHECK(p_valuation(make_rat(50, 8), 5) == 2);
    CHECK_THROWS_AS(p_valuation(Rat(1), 6), NotPrime);
}

TEST_CASE("valuation axioms on random rationals") {
    std::mt19937_64 rng(909090);
    for (int trial = 0; trial < 120; ++trial) {
        Rat x = testutil::random_rat(rng), y = testutil::random_rat(rng);
        for (long long p : {2LL, 3LL, 5LL}) {
            long long vx = p_valuation(x, p), vy = p_valuation(y, p);
            if (x != 0 && y != 0) {
                CHECK(p_valuation(x * y, p) == vx + vy);
                if (x + y != 0) CHECK(p_valuation(x + y, p) >= std::min(vx, vy));
            }
        }
    }
}

TEST_CASE("residues mod p^e") {
    CHECK(residue_mod(make_rat(1, 3), 5, 1) == 2);   // 3*2 = 6 == 1
    CHECK(residue_mod(make_rat(-1, 2), 7, 2) == 24); // 2*24 = 48 == -1 mod 49
    CHECK_THROWS_AS(residue_mod(make_rat(1, 5), 5, 1), NotPIntegral);
}

TEST_CASE("series p-integrality") {
    QSeries w = eta_power(2 * 3 * 4, Rat(9));  // eta^{2k(k+1)}, k = 3
    auto rep = is_p_integral(w, 7);
    CHECK(rep.holds);
    CHECK(rep.min_valuation >= 0);

    QSeries bad = QSeries::from_terms(1, {{0, Rat(1)}, {2, make_rat(3, 35)}}, Rat(6));
    auto rep2 = is_p_integral(bad, 5);
    CHECK(!rep2.holds);
    CHECK(std::get<0>(rep2.first_failure.value()) == 2);
    CHECK(rep2.min_valuation == -1);
}

TEST_CASE("coefficient-wise congruence") {
    // E4 == 1 (mod 5): 240 sigma_3(n) always divisible by 5
    QSeries e4 = eisenstein(4, 50);
    auto rep = congruent_mod(e4, QSeries::constant(Rat(1), Rat(50)), 5, 1);
    CHECK(rep.holds);
    CHECK(rep.checked_order == 50);

    // eta^3 and eta differ mod 5, first at the q^{1/8} vs q^{1/24} leads
    QSeries e3 = eta_power(3, Rat(10));
    QSeries e1 = eta_power(1, Rat(10));
    auto rep2 = congruent_mod(e3, e1, 5, 1);
    CHECK(!rep2.holds);
    CHECK(std::get<0>(rep2.first_failure.value()) == make_rat(1, 24));

    // reflexivity and symmetry on a random p-integral series
    auto rep3 = congruent_mod(e3, e3, 11, 3);
    CHECK(rep3.holds);

    QSeries not_integral = QSeries::from_terms(1, {{0, make_rat(1, 5)}}, Rat(4));
    CHECK_THROWS_AS(congruent_mod(not_integral, e1, 5, 1), NotPIntegral);
}

TEST_CASE("congruent_mod is an equivalence to fixed order") {
    std::mt19937_64 rng(314159);
    const long long p = 7;
    auto random_integral = [&]() {
        std::vector<std::pair<long long, Rat>> t;
        std::uniform_int_distribution<long long> e(0, 12), c(-20, 20);
        for (int i = 0; i < 6; ++i) t.emplace_back(e(rng), to_rat(c(rng)));
        return QSeries::from_terms(1, std::move(t), Rat(13));
    };
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_integral(), b = random_integral(), c = random_integral();
        QSeries ab = a + b.scaled(to_rat(p));  // a == ab (mod p) by construction
        CHECK(congruent_mod(a, ab, p, 1).holds);
        CHECK(congruent_mod(ab, a, p, 1).holds);
        QSeries abc = ab + c.scaled(to_rat(p));
        CHECK(congruent_mod(a, abc, p, 1).holds);  // transitivity instance
    }
}

TEST_CASE("clausen-von staudt: E_{p-1} == 1 mod p") {
    for (long long p : {5LL, 7LL, 11LL, 13LL, 17LL, 19LL}) {
        QSeries e = eisenstein(static_cast<unsigned>(p - 1), 30);
        CHECK(congruent_mod(e, QSeries::constant(Rat(1), Rat(30)), p, 1).holds);
    }
}

TEST_CASE("theta congruence (p = 2k+3)") {
    auto r1 = check_theta_congruence(1, Rat(40));
    CHECK(r1.p == 5);
    CHECK(r1.holds);
    auto r2 = check_theta_congruence(2, Rat(40));
    CHECK(r2.p == 7);
    CHECK(r2.holds);
    CHECK_THROWS_AS(check_theta_congruence(3, Rat(20)), NotPrime);  // p = 9
}

TEST_CASE("jacobi moment congruence") {
    for (long long p : {5LL, 7LL, 13LL}) {
        auto rep = check_jacobi_moment_congruence(p, Rat(50));
        CHECK(rep.holds);
        CHECK(rep.p == p);
    }
    CHECK_THROWS_AS(check_jacobi_moment_congruence(9, Rat(10)), NotPrime);
    CHECK_THROWS_AS(check_jacobi_moment_congruence(3, Rat(10)), NotPrime);
}

TEST_CASE("f integrality theorem at k = 1") {
    auto rep = check_f_integrality(1, 40);
    CHECK(rep.p == 5);
    CHECK(rep.holds);
    CHECK(rep.a0_matches);
    CHECK(rep.a0 == make_rat(-5, 576));  // (-1/24)(5/24)
    CHECK(rep.a0_valuation == 1);
    CHECK(rep.w_lead_matches);
    CHECK(rep.w_lead_valuation == 0);
    CHECK(rep.w_lead_product == make_rat(-1, 4));  // the single pair (1,2): (1-4)/12
    CHECK(rep.w_lead == make_rat(1, 4));           // Vandermonde of (-1/24, 5/24)
    CHECK(rep.f_integrality.holds);
}

TEST_CASE("f integrality theorem at k = 5 (p = 13)") {
    auto rep = check_f_integrality(5, 40);
    CHECK(rep.p == 13);
    CHECK(rep.holds);
    CHECK(rep.a0_valuation == 1);
    CHECK(rep.w_lead_valuation == 0);
    CHECK_THROWS_AS(check_f_integrality(6, 20), NotPrime);  // p = 15
}

TEST_CASE("hasse conjecture evidence at small k") {
    auto r1 = check_hasse_conjecture(1, 40);  // F = E4, 240 == 0 mod 5
    CHECK(r1.holds);
    CHECK(r1.kind == CongruenceReport::Kind::Evidence);
    auto r2 = check_hasse_conjecture(2, 40);  // F = E6, 504 = 7*72
    CHECK(r2.holds);
    auto r5 = check_hasse_conjecture(5, 40);
    CHECK(r5.holds);
}

TEST_CASE("mod p^2 probe produces a report") {
    auto probe1 = probe_w_congruence_mod_p2(1, 25);
    CHECK(probe1.p == 5);
    CHECK(probe1.h.has_value());
    CHECK(probe1.congruence.kind == CongruenceReport::Kind::Evidence);
    // no ground-truth claim: just record the outcome
    INFO("k=1 probe holds: ", probe1.congruence.holds);

    auto probe2 = probe_w_congruence_mod_p2(2, 25);
    CHECK(probe2.p == 7);
    CHECK(probe2.h.has_value());
}

} // TEST_SUITE
