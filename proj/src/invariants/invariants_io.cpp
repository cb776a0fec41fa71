#include "canonlab/invariants/invariants_io.hpp"

namespace canonlab {

namespace {

constexpr const char* kConvention = "entry r,c = beta_{c, c+r}";

Json integer(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

}  // namespace

Json betti_to_json(const BettiDiagram& B) {
  return Json{{"rows", B.rows()}, {"row_offset", 0}, {"convention", kConvention}};
}

BettiDiagram betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) throw SchemaError("betti: missing \"rows\"");
  if (j.value("row_offset", 0) != 0) throw SchemaError("betti: row_offset must be 0");
  if (j.contains("convention") && j["convention"] != kConvention) throw SchemaError("betti: unknown convention");
  std::vector<std::vector<long>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw SchemaError("betti: rows must be arrays");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long>() < 0) throw SchemaError("betti: entries must be non-negative integers");
      r.push_back(v.get<long>());
    }
    rows.push_back(std::move(r));
  }
  return BettiDiagram::from_rows(rows);
}

Json hilbert_to_json(const HilbertData& h) {
  Json numerator = Json::array();
  for (const auto& c : h.numerator) numerator.push_back(integer(c));
  return Json{{"projective_dimension", h.proj_dimension},
              {"degree", integer(h.degree)},
              {"arithmetic_genus", h.arithmetic_genus ? integer(*h.arithmetic_genus) : Json(nullptr)},
              {"hilbert_polynomial", univariate_text(h.hilbert_polynomial)},
              {"hilbert_series_numerator", numerator},
              {"regularity_index", h.regularity_index}};
}

Json monomial_ideal_to_json(const MonomialIdeal& M) {
  return M.generator_texts();
}

}  // namespace canonlab
