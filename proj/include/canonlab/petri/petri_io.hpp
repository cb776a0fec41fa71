#pragma once

#include "canonlab/groebner/ideal_io.hpp"
#include "canonlab/petri/petri.hpp"

namespace canonlab {

/// Petri system file before a coefficient field is chosen. Schema:
///   {"genus":5|6, "field":{...}, "rho":{"123":v,...}, "alpha":["<linear form>",...],
///    "a_diag":{"1,1,2":"<linear form>",...}, "q":{"1,2":"<quadratic form>",...}, "b":{"1,2":v,...}}
/// Scalars v are integers or strings "a" / "a/b" / "-a/b". Forms use only (x4,x0)
/// for genus 5 and (x0,x5) for genus 6. Every key except genus and field is optional.
struct PetriFile {
  int genus = 0;
  FieldSpec field;
  Json document;
};

PetriFile petri_file_from_json(const Json& j);

/// Throws SchemaError on malformed content, including forms outside the tail variables.
template <class K>
PetriSystemG5<K> load_petri_g5(const PetriFile& file);
template <class K>
PetriSystemG6<K> load_petri_g6(const PetriFile& file);

template <class K>
Json petri_to_json(const PetriSystemG5<K>& sys);
template <class K>
Json petri_to_json(const PetriSystemG6<K>& sys);

}  // namespace canonlab
