#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "canonlab/groebner/groebner.hpp"
#include "canonlab/invariants/hilbert.hpp"
#include "canonlab/invariants/resolution.hpp"

namespace canonlab {

/// Square matrix of polynomials, row-major.
template <class K>
using FormMatrix = std::vector<std::vector<Polynomial<K>>>;

/// The five signed principal 4x4 Pfaffians of a 5x5 skew-symmetric matrix of
/// linear forms: generator i (1-based) is (-1)^(i+1) Pf(A without row/column i),
/// with Pf(m) = m12 m34 - m13 m24 + m14 m23. Throws std::invalid_argument on
/// non-skew input or non-linear entries. A zero matrix gives the zero ideal.
template <class K>
Ideal<K> pfaffian_ideal(const FormMatrix<K>& A);

/// pfaffian_ideal(A) + <Q>.
template <class K>
Ideal<K> complete_intersection_curve_g6(const FormMatrix<K>& A, const Polynomial<K>& Q);
/// <q1, q2, q3>.
template <class K>
Ideal<K> complete_intersection_curve_g5(const std::array<Polynomial<K>, 3>& quadrics);

/// saturate(surface + <cubic>, intersection of the line ideals). Throws
/// std::invalid_argument unless the cubic lies in every line ideal and not in
/// the surface ideal.
template <class K>
Ideal<K> residual_curve(const Ideal<K>& surface, const Polynomial<K>& cubic, const std::vector<Ideal<K>>& lines);

/// Random homogeneous form of degree d, every coefficient drawn from the field.
template <class K>
Polynomial<K> random_homogeneous(const Ring<K>& ring, unsigned d, std::mt19937_64& rng);
template <class K>
Polynomial<K> random_linear_form(const Ring<K>& ring, std::mt19937_64& rng);
/// Random element of degree d in the ideal: generators times random forms.
template <class K>
Polynomial<K> random_element(const Ideal<K>& I, unsigned d, std::mt19937_64& rng);
/// 5x5 skew-symmetric matrix with random linear entries above the diagonal.
template <class K>
FormMatrix<K> random_skew_matrix(const Ring<K>& ring, std::mt19937_64& rng);

/// Quadrics of the Veronese image of P^2 under conics c_1..c_6 with
/// c_m(p_n) = delta_mn for six random points p_n, so the surface passes through
/// the six coordinate points of the ring's variables. Redraws until the points
/// impose independent conditions on conics and exactly six quadrics vanish.
template <class K>
Ideal<K> veronese_through_coordinate_points(const Ring<K>& ring, std::mt19937_64& rng);

/// Dimension, degree, genus and Betti numbers of a projective scheme.
struct CurveInvariants {
  int proj_dimension = -1;
  long degree = 0;
  std::optional<long> arithmetic_genus;
  BettiDiagram betti;
  long beta13 = 0;
};

template <class K>
CurveInvariants curve_invariants(const Ideal<K>& I);

/// One line of the dimension count: a named value and the arithmetic behind it.
struct LedgerEntry {
  std::string name;
  long value;
  std::string formula;
};

/// Dimension counts of the genus-g families, each computed from its formula.
/// Throws std::invalid_argument for g other than 5 and 6.
std::vector<LedgerEntry> dimension_ledger(int genus);

}  // namespace canonlab
