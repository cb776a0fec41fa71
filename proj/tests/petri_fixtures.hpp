#pragma once

#include "canonlab/petri/petri.hpp"
#include "support.hpp"

namespace canonlab::testing {

// Five-conic example: every rho = 1, alpha_k = x0 + x5, q_ij = x0 x5.
template <class K>
PetriSystemG6<K> five_conic_system(const Ring<K>& r) {
  auto sys = PetriSystemG6<K>::zero(r);
  for (const IndexTriple& t : {IndexTriple{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}) sys.rho[t] = r->one();
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) sys.q[{i, j}] = P(r, "x0*x5");
  }
  return sys;
}

// rho234 = 0 instance on the Petri scheme.
template <class K>
PetriSystemG6<K> single_zero_system(const Ring<K>& r) {
  auto sys = PetriSystemG6<K>::zero(r);
  for (const IndexTriple& t : {IndexTriple{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}) sys.rho[t] = r->one();
  for (auto p : {IndexPair{1, 2}, {1, 3}, {1, 4}}) sys.q[p] = P(r, "x0*x5");
  for (auto p : {IndexPair{2, 3}, {2, 4}, {3, 4}}) sys.q[p] = P(r, "(x0 + x5)*(x0 + x5)");
  return sys;
}

// rho134 = rho234 = 0 instance on the Petri scheme.
template <class K>
PetriSystemG6<K> double_zero_system(const Ring<K>& r) {
  auto sys = PetriSystemG6<K>::zero(r);
  for (const IndexTriple& t : {IndexTriple{1, 2, 3}, {1, 2, 4}}) sys.rho[t] = r->one();
  sys.q[{1, 2}] = P(r, "x0*x5");
  sys.q[{3, 4}] = P(r, "(x0 + x5)*(x0 + x5)");
  return sys;
}

// Genus-5 curve components of the two reducible genus-6 examples, in P^5
// with tail (x5, x0); rho123 = 1 and alpha_k = -(x0 + x5).
template <class K>
PetriSystemG5<K> trisecant_g5_system(const Ring<K>& r) {
  auto sys = PetriSystemG5<K>::zero(r, {"x5", "x0"});
  sys.rho123 = r->one();
  for (auto& a : sys.alpha) a = P(r, "-x0 - x5");
  sys.a_diag[{1, 1, 2}] = P(r, "x5 - x0");
  sys.a_diag[{3, 2, 3}] = P(r, "x0 - 4*x5");
  return sys;
}

template <class K>
PetriSystemG5<K> bisecant_g5_system(const Ring<K>& r) {
  auto sys = PetriSystemG5<K>::zero(r, {"x5", "x0"});
  sys.rho123 = r->one();
  for (auto& a : sys.alpha) a = P(r, "-x0 - x5");
  sys.q[{1, 2}] = P(r, "-x0*x5");
  return sys;
}

// A trigonal genus-5 system (rho123 = 0) on the Petri scheme in P^4.
template <class K>
PetriSystemG5<K> trigonal_g5_system(const Ring<K>& r) {
  auto sys = PetriSystemG5<K>::zero(r);
  sys.a_diag[{1, 1, 2}] = P(r, "x4");
  sys.a_diag[{2, 1, 2}] = P(r, "x0");
  sys.a_diag[{1, 1, 3}] = P(r, "x0 - x4");
  sys.a_diag[{2, 2, 3}] = P(r, "2*x4");
  sys.a_diag[{3, 2, 3}] = P(r, "x0");
  sys.q[{1, 2}] = P(r, "-x0^2");
  sys.q[{1, 3}] = P(r, "3*x4*x0 - x0^2");
  sys.q[{2, 3}] = P(r, "-3*x4^2 + 2*x4*x0 - x0^2");
  return sys;
}

}  // namespace canonlab::testing
