#include <doctest.h>

#include <wronq/cache.hpp>
#include <wronq/json_io.hpp>

#include "test_util.hpp"

#include <filesystem>
#include <random>

using namespace wronq;

TEST_SUITE("json_cache") {

TEST_CASE("qseries json round-trip is byte-identical") {
    std::mt19937_64 rng(60601);
    for (int trial = 0; trial < 30; ++trial) {
        QSeries s = testutil::random_series(rng);
        Json j = to_json(s);
        QSeries back = qseries_from_json(j);
        CHECK(back == s);
        // parse -> re-emit reproduces the exact byte string (sorted keys)
        CHECK(Json::parse(j.dump()).dump() == j.dump());
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("qseries json layout") {
    QSeries e3 = eta_power(3, make_rat(3, 24) + 2);
    Json j = to_json(e3);
    CHECK(j.at("lattice_den") == 24);
    CHECK(j.at("order").get<std::string>() == "17/8");  // canonical reduced form
    // terms sorted ascending by exponent numerator
    auto& terms = j.at("terms");
    CHECK(terms.at(0).at(0) == 3);
    CHECK(terms.at(0).at(1).get<std::string>() == "1");
    CHECK(terms.at(1).at(0) == 27);
    CHECK(terms.at(1).at(1).get<std::string>() == "-3");
}

TEST_CASE("character bundle carries family, spec, c and h") {
    QSeries ch = affine_char(2, 2, Rat(5));
    Json j = character_json(AffineCharSpec{2, 2}, ch);
    CHECK(j.at("family") == "affine");
    CHECK(j.at("spec").at("level") == 2);
    CHECK(j.at("c").get<std::string>() == "3/2");
    CHECK(j.at("h").get<std::string>() == "3/16");
    CHECK(qseries_from_json(j) == ch);  // extra keys do not disturb the payload

    Json jv = character_json(make_virasoro_spec(3, 4, 2, 2),
                             virasoro_char(3, 4, 2, 2, Rat(5)));
    CHECK(jv.at("family") == "virasoro");
    CHECK(jv.at("c").get<std::string>() == "1/2");
    CHECK(jv.at("h").get<std::string>() == "1/16");
}

TEST_CASE("wronskian bundle and reports serialize") {
    auto res = f_form(FamilySpec::affine(1), 12);
    Json j = to_json(res);
    CHECK(j.at("weight") == 4);
    CHECK(j.at("vanishes") == false);
    CHECK(!j.at("F_normalized").is_null());

    auto res6 = f_form(FamilySpec::affine(6), 8);
    Json j6 = to_json(res6);
    CHECK(j6.at("vanishes") == true);
    CHECK(j6.at("F_normalized").is_null());

    JPolynomial g({make_rat(-1302528, 1075), Rat(1)});
    Json jp = to_json(g);
    CHECK(jp.at("var") == "j");
    CHECK(jpolynomial_from_json(jp) == g);
}

TEST_CASE("congruence report json shape") {
    QSeries a = QSeries::from_terms(1, {{0, Rat(1)}, {1, Rat(7)}}, Rat(3));
    QSeries b = QSeries::from_terms(1, {{0, Rat(1)}, {1, Rat(2)}}, Rat(3));
    auto rep = congruent_mod(a, b, 5, 1);
    Json j = to_json(rep);
    CHECK(j.at("p") == 5);
    CHECK(j.at("modulus_exp") == 1);
    CHECK(j.at("holds") == true);
    CHECK(j.at("kind") == "assertion");
    CHECK(j.at("first_failure").is_null());

    auto bad = congruent_mod(a, b, 7, 1);
    Json jb = to_json(bad);
    CHECK(jb.at("holds") == false);
    CHECK(jb.at("first_failure").at(0).get<std::string>() == "1");
}

TEST_CASE("cache stores and returns bit-identical payloads") {
    auto dir = std::filesystem::temp_directory_path() / "wronq-cache-test";
    std::filesystem::remove_all(dir);

    std::string key = cache_key("fv", "affine k=1", 40);
    CHECK(key.find(kCacheFormatVersion) == 0);
    CHECK(!cache_lookup(dir, key).has_value());

    Json payload = to_json(f_form(FamilySpec::affine(1), 20));
    std::string text = payload.dump();
    cache_store(dir, key, text);
    auto hit = cache_lookup(dir, key);
    REQUIRE(hit.has_value());
    CHECK(*hit == text);

    // distinct term counts get distinct keys
    CHECK(cache_key("fv", "affine k=1", 41) != key);
    // keys are filename-safe
    for (char c : cache_key("fv+dec", "virasoro (2,5)", 60))
        CHECK((std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
               c == '.'));
    std::filesystem::remove_all(dir);
}

} // TEST_SUITE
