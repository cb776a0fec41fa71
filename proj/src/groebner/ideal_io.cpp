#include "canonlab/groebner/ideal_io.hpp"

#include "canonlab/polyring/poly_io.hpp"

namespace canonlab {

Json field_to_json(const FieldSpec& field) {
  if (field.is_prime_field()) return Json{{"kind", "Fp"}, {"p", field.p}};
  return Json{{"kind", "Q"}};
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw SchemaError("field: expected {\"kind\": ...}");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw SchemaError("field: Fp needs an unsigned \"p\"");
    const auto p = j["p"].get<std::uint64_t>();
    if (p > 0x7FFFFFFFu) throw SchemaError("field: p must be below 2^31");
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("field: unknown kind \"" + kind + "\"");
}

IdealFile ideal_file_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("ideal: expected an object");
  for (const char* key : {"variables", "field", "generators"}) {
    if (!j.contains(key)) throw SchemaError(std::string("ideal: missing \"") + key + "\"");
  }
  IdealFile out;
  if (!j["variables"].is_array() || !j["generators"].is_array()) throw SchemaError("ideal: variables and generators must be arrays");
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) throw SchemaError("ideal: variable names must be strings");
    out.variables.push_back(v.get<std::string>());
  }
  out.field = field_from_json(j["field"]);
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw SchemaError("ideal: generators must be strings");
    out.generators.push_back(g.get<std::string>());
  }
  return out;
}

template <class K>
Ideal<K> load_ideal(const IdealFile& file, const MonomialOrder& order) {
  const auto ring = make_ring<K>(file.variables, file.field, order);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : file.generators) gens.push_back(parse_poly<K>(g, ring));
  return Ideal<K>(ring, std::move(gens));
}

namespace {

template <class K>
Json document(const Ring<K>& ring, std::span<const Polynomial<K>> polys) {
  Json gens = Json::array();
  for (const auto& p : polys) gens.push_back(to_string(p));
  return Json{{"variables", ring->variables()}, {"field", field_to_json(ring->field())}, {"generators", gens}};
}

}  // namespace

template <class K>
Json ideal_to_json(const Ideal<K>& I) {
  return document(I.ring(), I.generators());
}

template <class K>
Json basis_to_json(const GroebnerBasis<K>& G) {
  return document(G.ring(), G.elements());
}

#define CANONLAB_INSTANTIATE(K)                                             \
  template Ideal<K> load_ideal<K>(const IdealFile&, const MonomialOrder&); \
  template Json ideal_to_json<K>(const Ideal<K>&);                          \
  template Json basis_to_json<K>(const GroebnerBasis<K>&);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
