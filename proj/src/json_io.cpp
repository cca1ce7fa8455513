#include <wronq/json_io.hpp>

namespace wronq {

namespace {

std::string rat_str(const Rat& r) { return rat_to_string(r); }

std::string order_str(const QSeries& s) {
    return rat_to_string(s.order());
}

} // namespace

Json to_json(const QSeries& s) {
    Json terms = Json::array();
    for (const auto& [n, c] : s.terms()) terms.push_back(Json::array({n, rat_str(c)}));
    return Json{{"lattice_den", s.lattice_den()},
                {"order", order_str(s)},
                {"terms", std::move(terms)}};
}

QSeries qseries_from_json(const Json& j) {
    long long den = j.at("lattice_den").get<long long>();
    Rat order = rat_from_string(j.at("order").get<std::string>());
    std::vector<std::pair<long long, Rat>> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(t.at(0).get<long long>(),
                           rat_from_string(t.at(1).get<std::string>()));
    return QSeries::from_terms(den, std::move(terms), order);
}

Json character_json(const AffineCharSpec& spec, const QSeries& series) {
    Json j = to_json(series);
    j["family"] = "affine";
    j["spec"] = Json{{"level", spec.level}, {"index", spec.index}};
    j["c"] = rat_str(central_charge_affine(spec.level));
    j["h"] = rat_str(conformal_weight_affine(spec.level, spec.index));
    return j;
}

Json character_json(const VirasoroCharSpec& spec, const QSeries& series) {
    Json j = to_json(series);
    j["family"] = "virasoro";
    j["spec"] = Json{{"p", spec.p}, {"pp", spec.pp}, {"r", spec.r}, {"s", spec.s}};
    j["c"] = rat_str(central_charge_virasoro(spec.p, spec.pp));
    j["h"] = rat_str(conformal_weight_virasoro(spec.p, spec.pp, spec.r, spec.s));
    return j;
}

Json family_json(const FamilySpec& spec) {
    if (spec.family == Family::Affine)
        return Json{{"family", "affine"}, {"spec", Json{{"level", spec.k}}}};
    return Json{{"family", "virasoro"}, {"spec", Json{{"p", spec.p}, {"pp", spec.pp}}}};
}

Json to_json(const WronskianResult& r) {
    Json j = family_json(r.spec);
    j["weight"] = r.weight;
    j["vanishes"] = r.vanishes;
    j["W"] = to_json(r.w);
    j["Wprime"] = to_json(r.w_prime);
    j["W_monic"] = to_json(r.w_monic);
    j["F_normalized"] = r.f_normalized ? to_json(*r.f_normalized) : Json(nullptr);
    return j;
}

Json to_json(const JPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(rat_str(c));
    return Json{{"var", "j"}, {"coeffs", std::move(coeffs)}};
}

JPolynomial jpolynomial_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_string(c.get<std::string>()));
    return JPolynomial(std::move(coeffs));
}

Json to_json(const Decomposition& d) {
    return Json{{"t", d.t}, {"delta", d.delta}, {"epsilon", d.epsilon}, {"G", to_json(d.g)}};
}

Json to_json(const CongruenceReport& r) {
    Json ff(nullptr);
    if (r.first_failure) {
        const auto& [e, lhs, rhs] = *r.first_failure;
        ff = Json::array({rat_str(e), rat_str(lhs), rat_str(rhs)});
    }
    return Json{{"p", r.p},
                {"modulus_exp", r.modulus_exp},
                {"order", rat_str(r.checked_order)},
                {"holds", r.holds},
                {"first_failure", std::move(ff)},
                {"min_valuation",
                 r.min_valuation == kInfiniteValuation ? Json("inf") : Json(r.min_valuation)},
                {"kind",
                 r.kind == CongruenceReport::Kind::Assertion ? "assertion" : "evidence"}};
}

Json to_json(const FIntegralityReport& r) {
    return Json{{"p", r.p},
                {"vacuous", r.vacuous},
                {"holds", r.holds},
                {"a0", rat_str(r.a0)},
                {"a0_product", rat_str(r.a0_product)},
                {"a0_matches", r.a0_matches},
                {"a0_valuation", r.a0_valuation},
                {"w_lead", rat_str(r.w_lead)},
                {"w_lead_product", rat_str(r.w_lead_product)},
                {"w_lead_matches", r.w_lead_matches},
                {"w_lead_valuation", r.w_lead_valuation},
                {"f_integrality", r.vacuous ? Json(nullptr) : to_json(r.f_integrality)}};
}

Json to_json(const ModP2ProbeReport& r) {
    return Json{{"p", r.p},
                {"h", r.h ? Json(rat_str(*r.h)) : Json(nullptr)},
                {"congruence", to_json(r.congruence)}};
}

Json to_json(const IdentityReport& r) {
    Json ff(nullptr);
    if (r.first_failure)
        ff = Json::array({rat_str(r.first_failure->first), rat_str(r.first_failure->second)});
    return Json{{"holds", r.holds},
                {"constant", rat_str(r.constant)},
                {"resolved", r.resolved},
                {"residual", to_json(r.residual)},
                {"first_failure", std::move(ff)}};
}

Json to_json(const RootReport& r) {
    Json roots = Json::array();
    for (const auto& [iv, dec] : r.roots)
        roots.push_back(Json{{"interval", Json::array({rat_str(iv.lo), rat_str(iv.hi)})},
                             {"approx", dec}});
    return Json{{"polynomial", to_json(r.polynomial)},
                {"squarefree", r.squarefree},
                {"all_real", r.all_real},
                {"all_in_0_1728", r.all_in_0_1728},
                {"roots", std::move(roots)}};
}

Json to_json(const EtaCheckReport& r) {
    return Json{{"holds", r.holds},
                {"eta_exponent", r.eta_exponent},
                {"first_mismatch",
                 r.first_mismatch ? Json(rat_str(*r.first_mismatch)) : Json(nullptr)}};
}

} // namespace wronq
