#ifndef WRONQ_JSON_IO_HPP
#define WRONQ_JSON_IO_HPP

#include <wronq/characters.hpp>
#include <wronq/modforms.hpp>
#include <wronq/modp.hpp>
#include <wronq/qseries.hpp>
#include <wronq/roots.hpp>
#include <wronq/wronskian.hpp>

#include <json.hpp>

namespace wronq {

using Json = nlohmann::json;

// {"lattice_den": N, "order": "num/den", "terms": [[n, "p/q"], ...]},
// terms sorted by exponent numerator ascending.
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// The QSeries payload extended with family/spec/c/h.
Json character_json(const AffineCharSpec& spec, const QSeries& series);
Json character_json(const VirasoroCharSpec& spec, const QSeries& series);

Json family_json(const FamilySpec& spec);

// {"family":..., "spec":..., "weight":..., "vanishes":..., "W":...,
//  "Wprime":..., "F_normalized": ...|null}
Json to_json(const WronskianResult& r);

// {"var":"j","coeffs":["p/q",...]}
Json to_json(const JPolynomial& p);
JPolynomial jpolynomial_from_json(const Json& j);

// {"t":..., "delta":..., "epsilon":..., "G": ...}
Json to_json(const Decomposition& d);

// {"p":..., "modulus_exp":..., "order":"p/q", "holds":...,
//  "first_failure":[exp,"lhs","rhs"]|null, "kind":"assertion"|"evidence"}
Json to_json(const CongruenceReport& r);

Json to_json(const FIntegralityReport& r);
Json to_json(const ModP2ProbeReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const RootReport& r);
Json to_json(const EtaCheckReport& r);

} // namespace wronq

#endif // WRONQ_JSON_IO_HPP
