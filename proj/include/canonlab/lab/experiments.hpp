#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "canonlab/lab/report.hpp"
#include "canonlab/petri/petri.hpp"

namespace canonlab {

struct ExperimentConfig {
  std::string experiment;  // "sample-g5" or "sample-g6"
  FieldSpec field = FieldSpec::prime(kDefaultPrime);
  std::uint64_t seed = 0;
  int sample_count = 1;
};

/// "3.2", "3.6", "3.7", "g5-trigonal", "g6-surface-gb", "g6-all-rho-zero".
const std::vector<std::string>& example_ids();

/// Runs one worked example over Q. Throws std::invalid_argument on an unknown id.
Report run_example(const std::string& id);

/// Random Pfaffian surfaces and genus-6 complete intersections ("sample-g6") or
/// genus-5 quadric triples ("sample-g5") over F_p. Sample i draws from seed + i.
/// Throws std::invalid_argument on a non-prime field, a non-positive count or
/// an unknown experiment.
Report sample(const ExperimentConfig& config);

/// A member of the all-rho-zero family: the Petri quadrics of a random Veronese
/// surface through the six coordinate points, with b_ij read off q_ij = b_ij x0 x5.
template <class K>
PetriSystemG6<K> veronese_rho_zero_system(const Ring<K>& ring, std::mt19937_64& rng);

/// Checks for a system with every rho_kij = 0 and q_ij = b_ij x0 x5: the Petri
/// syzygies hold, the f_ij form a Groebner basis, V(f_ij, x0, x5) is the four
/// coordinate points and V(f_ij) is a surface of degree 4. Check names carry
/// the given prefix.
template <class K>
void all_rho_zero_checks(Report& report, const PetriSystemG6<K>& sys, const std::string& prefix = "");

/// Ideal of a point of projective space given by its coordinates.
template <class K>
Ideal<K> point_ideal(const Ring<K>& ring, const std::vector<K>& coords);

}  // namespace canonlab
