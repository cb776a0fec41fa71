#pragma once

#include "canonlab/groebner/ideal_io.hpp"
#include "canonlab/invariants/hilbert.hpp"
#include "canonlab/invariants/resolution.hpp"

namespace canonlab {

/// {"rows":[[...],...], "row_offset":0, "convention":"entry r,c = beta_{c, c+r}"}.
Json betti_to_json(const BettiDiagram& B);
BettiDiagram betti_from_json(const Json& j);

/// {"projective_dimension", "degree", "arithmetic_genus", "hilbert_polynomial",
/// "hilbert_series_numerator", "regularity_index"}; arithmetic_genus is null
/// for the empty zero set.
Json hilbert_to_json(const HilbertData& h);

/// Minimal generators as monomial texts.
Json monomial_ideal_to_json(const MonomialIdeal& M);

}  // namespace canonlab
