#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "canonlab/groebner/groebner.hpp"

namespace canonlab {

using Json = nlohmann::ordered_json;

/// Schema or content error in a JSON document.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"kind":"Q"} or {"kind":"Fp","p":<prime>}.
Json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

/// Ideal file contents before a coefficient field is chosen.
struct IdealFile {
  std::vector<std::string> variables;
  FieldSpec field;
  std::vector<std::string> generators;
};

/// {"variables":[...], "field":{...}, "generators":["<poly text>", ...]}.
IdealFile ideal_file_from_json(const Json& j);

template <class K>
Ideal<K> load_ideal(const IdealFile& file, const MonomialOrder& order = MonomialOrder::grevlex());

template <class K>
Json ideal_to_json(const Ideal<K>& I);
/// Same schema, generators are the basis elements.
template <class K>
Json basis_to_json(const GroebnerBasis<K>& G);

/// Calls f(Rational{}) or f(Zp{}) according to the field kind.
template <class F>
decltype(auto) visit_field(const FieldSpec& field, F&& f) {
  if (field.is_prime_field()) return std::forward<F>(f)(Zp{});
  return std::forward<F>(f)(Rational{});
}

}  // namespace canonlab
