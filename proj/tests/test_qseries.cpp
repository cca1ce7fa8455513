#include <doctest.h>

#include <wronq/qseries.hpp>

#include "test_util.hpp"

#include <random>

using namespace wronq;

namespace {

QSeries geometric(long long count) {
    std::vector<std::pair<long long, Rat>> t;
    for (long long n = 0; n < count; ++n) t.emplace_back(n, Rat(1));
    return QSeries::from_terms(1, std::move(t), make_rat(count));
}

} // namespace

TEST_SUITE("qseries") {

TEST_CASE("align rescales to the lcm lattice") {
    QSeries a = QSeries::monomial(Rat(1), make_rat(1, 8), 8, Rat(3));
    QSeries b = QSeries::monomial(Rat(2), make_rat(1, 12), 12, Rat(2));
    auto [x, y] = aligned(a, b);
    CHECK(x.lattice_den() == 24);
    CHECK(y.lattice_den() == 24);
    CHECK(x.coeff(make_rat(1, 8)).value() == 1);
    CHECK(y.coeff(make_rat(1, 12)).value() == 2);
    CHECK(x.order() == Rat(3));
    CHECK(y.order() == Rat(2));

    // align(a, a) leaves the representation untouched
    auto [u, v] = aligned(a, a);
    CHECK(u == a);
    CHECK(v == a);

    // eta on N=24 against a constant on N=1
    QSeries eta = eta_power(1, Rat(4));
    QSeries one = QSeries::constant(Rat(1), Rat(4));
    auto [e24, c24] = aligned(eta, one);
    CHECK(e24.lattice_den() == 24);
    CHECK(c24.lattice_den() == 24);
    CHECK(c24.coeff(Rat(0)).value() == 1);
}

TEST_CASE("(1 - q) times geometric series is 1") {
    QSeries one_minus_q = QSeries::from_terms(1, {{0, Rat(1)}, {1, Rat(-1)}}, Rat(40));
    QSeries geo = geometric(40);
    QSeries prod = one_minus_q * geo;
    CHECK(agree_to(prod, QSeries::constant(Rat(1), prod.order()), prod.order()));
    // and invert(1 - q) reproduces the geometric series
    QSeries inv = invert(one_minus_q);
    CHECK(agree_to(inv, geo, inv.order()));
}

TEST_CASE("eta * eta^3 equals eta^4 against the integer product oracle") {
    const int terms = 40;
    QSeries e1 = eta_power(1, make_rat(1, 24) + terms);
    QSeries e3 = eta_power(3, make_rat(3, 24) + terms);
    QSeries prod = e1 * e3;
    CHECK(prod.leading_exponent() == make_rat(4, 24));
    CHECK(prod.leading_coeff() == 1);

    auto oracle = testutil::euler_product_int(4, terms);
    for (int j = 0; j < terms; ++j) {
        Rat e = make_rat(4, 24) + j;
        CHECK(prod.coeff(e).value() == to_rat(oracle[static_cast<std::size_t>(j)]));
    }
    // matches eta_power(4) term for term
    CHECK(agree_to(prod, eta_power(4, make_rat(4, 24) + terms), make_rat(4, 24) + terms));
}

TEST_CASE("a + (-a) is the zero series with the min order") {
    QSeries a = QSeries::from_terms(2, {{-1, make_rat(3, 2)}, {4, Rat(7)}}, make_rat(9, 2));
    QSeries s = a + (-a);
    CHECK(s.is_zero_to_order());
    CHECK(s.order() == make_rat(9, 2));
}

TEST_CASE("invert eta^3: leading term q^{-1/8} and round trip") {
    QSeries e3 = eta_power(3, make_rat(3, 24) + 30);
    QSeries inv = invert(e3);
    CHECK(inv.leading_exponent() == make_rat(-1, 8));
    CHECK(inv.leading_coeff() == 1);
    // contracted order: O - 2 * lead
    CHECK(inv.order() == e3.order() - 2 * make_rat(1, 8));
    QSeries round = e3 * inv;
    CHECK(agree_to(round, QSeries::constant(Rat(1), round.order()), round.order()));

    CHECK_THROWS_AS(invert(QSeries::zero(4, Rat(10))), InversionOfZero);
}

TEST_CASE("ramanujan derivative basics") {
    QSeries mono = QSeries::monomial(Rat(1), make_rat(1, 8), 8, Rat(2));
    QSeries d = derive(mono);
    CHECK(d.coeff(make_rat(1, 8)).value() == make_rat(1, 8));
    CHECK(d.order() == Rat(2));

    QSeries c = QSeries::constant(Rat(5), Rat(9));
    CHECK(derive(c).is_zero_to_order());

    // s-fold application multiplies by e^s
    QSeries d3 = derive(mono, 3);
    CHECK(d3.coeff(make_rat(1, 8)).value() == make_rat(1, 512));
}

TEST_CASE("eta_power matches Euler's pentagonal sum") {
    const int terms = 220;
    QSeries eta = eta_power(1, make_rat(1, 24) + terms);
    auto pent = testutil::pentagonal_int(terms);
    for (int j = 0; j < terms; ++j)
        CHECK(eta.coeff(make_rat(1, 24) + j).value() == to_rat(pent[static_cast<std::size_t>(j)]));
}

TEST_CASE("eta_power(3) matches Jacobi's cube sum") {
    const int terms = 220;
    QSeries e3 = eta_power(3, make_rat(3, 24) + terms);
    auto jac = testutil::jacobi_cube_int(terms);
    for (int j = 0; j < terms; ++j)
        CHECK(e3.coeff(make_rat(1, 8) + j).value() == to_rat(jac[static_cast<std::size_t>(j)]));
}

TEST_CASE("eta_power(0) is the constant 1") {
    QSeries e0 = eta_power(0, Rat(5));
    CHECK(e0.term_count() == 1);
    CHECK(e0.coeff(Rat(0)).value() == 1);
}

TEST_CASE("eta_power(r) equals eta_power(1)^r for r = 2, 3, 4") {
    const int terms = 30;
    QSeries base = eta_power(1, make_rat(1, 24) + terms + 1);
    for (long r = 2; r <= 4; ++r) {
        QSeries direct = eta_power(r, make_rat(r, 24) + terms);
        QSeries powed = pow_series(base, r);
        CHECK(agree_to(direct, powed, make_rat(r, 24) + terms));
    }
}

TEST_CASE("leading_term examples") {
    QSeries e4 = eta_power(4, Rat(2));
    auto [e, c] = e4.leading_term();
    CHECK(e == make_rat(1, 6));
    CHECK(c == 1);

    QSeries s = QSeries::from_terms(1, {{2, Rat(5)}, {3, Rat(-1)}}, Rat(10));
    CHECK(s.leading_exponent() == Rat(2));
    CHECK(s.leading_coeff() == Rat(5));

    CHECK_THROWS_AS(QSeries::zero(1, Rat(3)).leading_term(), ZeroSeries);
}

TEST_CASE("product order contract") {
    // O(ab) = min(Oa + lead(b), Ob + lead(a))
    QSeries a = QSeries::from_terms(1, {{2, Rat(1)}}, Rat(7));
    QSeries b = QSeries::from_terms(1, {{3, Rat(4)}}, Rat(5));
    QSeries ab = a * b;
    CHECK(ab.order() == Rat(7));  // min(7+3, 5+2)
    CHECK(ab.coeff(Rat(5)).value() == Rat(4));

    // empty factor: conservative order via lead = order
    QSeries z = QSeries::zero(1, Rat(4));
    QSeries zb = z * b;
    CHECK(zb.is_zero_to_order());
    CHECK(zb.order() == Rat(7));  // min(4+3, 5+4)
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 60; ++trial) {
        QSeries a = testutil::random_series(rng);
        QSeries b = testutil::random_series(rng);
        QSeries c = testutil::random_series(rng);
        {
            QSeries lhs = (a + b) + c, rhs = a + (b + c);
            CHECK(!first_difference(lhs, rhs).has_value());
        }
        {
            QSeries lhs = (a * b) * c, rhs = a * (b * c);
            CHECK(!first_difference(lhs, rhs).has_value());
        }
        {
            QSeries lhs = a * (b + c), rhs = a * b + a * c;
            CHECK(!first_difference(lhs, rhs).has_value());
        }
        {
            QSeries lhs = a * b, rhs = b * a;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937_64 rng(77031);
    for (int trial = 0; trial < 40; ++trial) {
        QSeries a = testutil::random_series(rng);
        QSeries b = testutil::random_series(rng);
        QSeries lhs = derive(a * b);
        QSeries rhs = derive(a) * b + a * derive(b);
        CHECK(!first_difference(lhs, rhs).has_value());
    }
}

TEST_CASE("coeff and truncation behavior") {
    QSeries a = QSeries::from_terms(4, {{1, Rat(2)}, {6, Rat(-3)}}, Rat(3));
    CHECK(a.coeff(make_rat(1, 4)).value() == 2);
    CHECK(a.coeff(make_rat(3, 2)).value() == -3);
    CHECK(a.coeff(make_rat(5, 4)).value() == 0);
    CHECK(a.coeff(make_rat(1, 3)).value() == 0);  // off-lattice but below order
    CHECK(!a.coeff(Rat(3)).has_value());          // at the order boundary: unknown

    QSeries t = a.truncated(Rat(1));
    CHECK(t.order() == Rat(1));
    CHECK(t.term_count() == 1);
}

TEST_CASE("shift multiplies by a q power") {
    QSeries e3 = eta_power(3, make_rat(3, 24) + 10);
    QSeries bare = e3.shifted(make_rat(-1, 8));
    CHECK(bare.leading_exponent() == 0);
    CHECK(bare.coeff(Rat(1)).value() == Rat(-3));
}

} // TEST_SUITE
