#include <doctest.h>

#include <wronq/errors.hpp>
#include <wronq/modforms.hpp>
#include <wronq/wronskian.hpp>

#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace wronq;

TEST_SUITE("wronskian") {

TEST_CASE("1x1 wronskians") {
    QSeries f = eta_power(4, Rat(5));
    CHECK(wronskian({f}) == f);

    QSeries c = QSeries::constant(Rat(7), Rat(12));
    QSeries wp = wronskian_prime({c});
    CHECK(wp.is_zero_to_order());
    CHECK(wp.order() == Rat(12));
}

TEST_CASE("monomial 2x2 oracle: W'({q^a, q^b}) = ab(b-a) q^{a+b}") {
    Rat a = make_rat(1, 3), b = make_rat(5, 2);
    QSeries qa = QSeries::monomial(Rat(1), a, 6, Rat(9));
    QSeries qb = QSeries::monomial(Rat(1), b, 2, Rat(9));
    QSeries wp = wronskian_prime({qa, qb});
    CHECK(wp.leading_exponent() == a + b);
    CHECK(wp.leading_coeff() == a * b * (b - a));
    CHECK(wp.term_count() == 1);

    QSeries w = wronskian({qa, qb});
    CHECK(w.leading_coeff() == b - a);
}

TEST_CASE("repeated columns give the zero series to order") {
    QSeries f = eta_power(2, Rat(6));
    QSeries w = wronskian({f, f});
    CHECK(w.is_zero_to_order());
    QSeries w3 = wronskian({f, f, eta_power(1, Rat(6))});
    CHECK(w3.is_zero_to_order());
}

TEST_CASE("affine level 1: W is a multiple of eta^4") {
    FamilySpec spec = FamilySpec::affine(1);
    QSeries w = wronskian(character_basis(spec, Rat(30)));
    CHECK(w.leading_exponent() == make_rat(1, 6));
    auto rep = verify_eta_closed_form(spec, 25);
    CHECK(rep.holds);
    CHECK(rep.eta_exponent == 4);
}

TEST_CASE("eta closed forms: affine k=3 and the two small minimal models") {
    auto r3 = verify_eta_closed_form(FamilySpec::affine(3), 25);
    CHECK(r3.holds);
    CHECK(r3.eta_exponent == 24);

    // eta^24 is Delta: cross-check the monic W against the modforms route
    QSeries w = wronskian(character_basis(FamilySpec::affine(3), Rat(28)));
    QSeries monic = w.scaled(Rat(1) / w.leading_coeff());
    CHECK(agree_to(monic, delta_form(20), Rat(20)));

    auto r25 = verify_eta_closed_form(FamilySpec::virasoro(2, 5), 30);
    CHECK(r25.holds);
    CHECK(r25.eta_exponent == 4);

    auto r34 = verify_eta_closed_form(FamilySpec::virasoro(3, 4), 30);
    CHECK(r34.holds);
    CHECK(r34.eta_exponent == 12);
}

TEST_CASE("f_form reproduces E4 and E6 at levels 1 and 2") {
    auto r1 = f_form(FamilySpec::affine(1), 40);
    CHECK(!r1.vanishes);
    CHECK(r1.weight == 4);
    REQUIRE(r1.f_normalized.has_value());
    CHECK(agree_to(*r1.f_normalized, eisenstein(4, 40), Rat(40)));
    // unnormalized leading coefficient is prod(h_{k,i} - c/24) = (-1/24)(5/24)
    CHECK(r1.f->leading_coeff() == make_rat(-5, 576));

    auto r2 = f_form(FamilySpec::affine(2), 40);
    CHECK(r2.weight == 6);
    REQUIRE(r2.f_normalized.has_value());
    CHECK(agree_to(*r2.f_normalized, eisenstein(6, 40), Rat(40)));
}

TEST_CASE("f_form detects the vanishing cases and agrees with the classifier") {
    auto r6 = f_form(FamilySpec::affine(6), 25);
    CHECK(r6.vanishes);
    CHECK(!r6.f_normalized.has_value());
    CHECK(r6.w_prime.is_zero_to_order());
    CHECK(r6.weight == 14);

    auto r23 = f_form(FamilySpec::virasoro(2, 3), 20);
    CHECK(r23.vanishes);
    CHECK(r23.w_monic.coeff(Rat(0)).value() == 1);  // W = 1 for the trivial model

    auto r25 = f_form(FamilySpec::virasoro(2, 5), 25);
    CHECK(!r25.vanishes);
    CHECK(r25.weight == 4);
}

TEST_CASE("insufficient budget raises instead of silently truncating") {
    CHECK_THROWS_AS(f_form_with_budget(FamilySpec::affine(2), 30, 3), InsufficientOrder);
}

TEST_CASE("bareiss and leibniz determinants agree on random matrices") {
    std::mt19937_64 rng(424242);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::vector<QSeries>> m;
            for (int i = 0; i < n; ++i) {
                std::vector<QSeries> row;
                for (int j = 0; j < n; ++j) row.push_back(testutil::random_series(rng));
                m.push_back(std::move(row));
            }
            QSeries a = determinant_bareiss(m);
            QSeries b = determinant_leibniz(m);
            CHECK(!first_difference(a, b).has_value());
        }
    }
}

TEST_CASE("bareiss and leibniz agree on character wronskian matrices") {
    for (FamilySpec spec : {FamilySpec::affine(1), FamilySpec::affine(2),
                            FamilySpec::virasoro(2, 5), FamilySpec::virasoro(3, 4)}) {
        auto basis = character_basis(spec, Rat(20));
        std::vector<std::vector<QSeries>> rows, rows_prime;
        std::vector<QSeries> current = basis;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            rows.push_back(current);
            for (auto& c : current) c = derive(c);
            rows_prime.push_back(current);
        }
        CHECK(!first_difference(wronskian(basis), determinant_leibniz(rows)).has_value());
        CHECK(!first_difference(wronskian_prime(basis), determinant_leibniz(rows_prime))
                   .has_value());
    }
}

TEST_CASE("W and F are basis-invariant") {
    FamilySpec spec = FamilySpec::affine(2);
    auto basis = character_basis(spec, Rat(26));
    QSeries w = wronskian(basis);
    QSeries wp = wronskian_prime(basis);
    QSeries f_ref = div(wp, w);
    f_ref = f_ref.scaled(Rat(1) / f_ref.leading_coeff());

    std::mt19937_64 rng(1123);
    std::uniform_int_distribution<int> entry(-3, 3);
    const std::size_t m = basis.size();
    for (int trial = 0; trial < 6; ++trial) {
        // random integer matrix with nonzero determinant (checked exactly)
        std::vector<std::vector<long>> mat(m, std::vector<long>(m));
        long det;
        do {
            for (auto& row : mat)
                for (auto& x : row) x = entry(rng);
            det = mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1]) -
                  mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0]) +
                  mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]);
        } while (det == 0);

        std::vector<QSeries> transformed;
        for (std::size_t jc = 0; jc < m; ++jc) {
            QSeries acc = basis[0].scaled(to_rat(mat[0][jc]));
            for (std::size_t ic = 1; ic < m; ++ic)
                acc = acc + basis[ic].scaled(to_rat(mat[ic][jc]));
            transformed.push_back(std::move(acc));
        }
        QSeries w2 = wronskian(transformed);
        // W scales by det(M)
        CHECK(!first_difference(w2, w.scaled(to_rat(det))).has_value());
        QSeries f2 = div(wronskian_prime(transformed), w2);
        f2 = f2.scaled(Rat(1) / f2.leading_coeff());
        CHECK(!first_difference(f2, f_ref).has_value());
    }

    // permuting the basis flips at most the sign of W and fixes F
    auto shuffled = basis;
    std::swap(shuffled[0], shuffled[2]);
    QSeries wsh = wronskian(shuffled);
    CHECK(!first_difference(wsh, -w).has_value());
}

TEST_CASE("family weights") {
    CHECK(FamilySpec::affine(5).weight() == 12);       // 2k+2
    CHECK(FamilySpec::virasoro(2, 5).weight() == 4);   // 2m, not the printed formula
    CHECK(FamilySpec::virasoro(3, 4).weight() == 6);
    CHECK(FamilySpec::virasoro(8, 3).eta_exponent() == 84);
    CHECK(FamilySpec::virasoro(2, 3).eta_exponent() == 0);
}

} // TEST_SUITE
