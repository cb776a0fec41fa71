#pragma once

#include <map>
#include <utility>
#include <vector>

#include "canonlab/groebner/groebner.hpp"
#include "canonlab/invariants/hilbert.hpp"

namespace canonlab {

/// Matrix of a map F_i -> F_{i-1}. Column c is the image of the c-th basis
/// element of F_i; entries are homogeneous of degree col_degree - row_degree.
template <class K>
struct ResolutionMap {
  std::vector<int> row_degrees;
  std::vector<int> col_degrees;
  std::vector<std::vector<Polynomial<K>>> entries;  // entries[row][col]

  std::size_t rows() const { return row_degrees.size(); }
  std::size_t cols() const { return col_degrees.size(); }
};

/// Graded free resolution 0 <- R/I <- F_0 <- F_1 <- ... ; maps[i] is d_{i+1}.
template <class K>
struct FreeResolution {
  Ring<K> ring;
  std::vector<ResolutionMap<K>> maps;

  /// Degrees of the basis of F_i (F_0 = R).
  std::vector<int> degrees(std::size_t i) const;
  std::size_t length() const { return maps.size(); }
};

/// Schreyer resolution of R/I from iterated module Groebner bases. Not minimal.
template <class K>
FreeResolution<K> schreyer_resolution(const Ideal<K>& I);

/// Removes every unit entry of `F`, leaving a minimal resolution.
template <class K>
FreeResolution<K> minimalize(FreeResolution<K> F);

/// Minimal graded free resolution of R/I.
template <class K>
FreeResolution<K> free_resolution(const Ideal<K>& I);

/// d_i * d_{i+1} == 0 for all consecutive maps, checked exactly.
template <class K>
bool is_complex(const FreeResolution<K>& F);
/// No nonzero constant entries.
template <class K>
bool is_minimal(const FreeResolution<K>& F);

/// Graded Betti numbers beta_{i,j}.
class BettiDiagram {
 public:
  BettiDiagram() = default;
  explicit BettiDiagram(std::map<std::pair<int, int>, long> entries);
  /// From display rows: entry (r, c) is beta_{c, c + r}.
  static BettiDiagram from_rows(const std::vector<std::vector<long>>& rows);

  long operator()(int i, int j) const;
  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }
  int max_index() const;
  int max_degree() const;
  /// Display rows, entry (r, c) = beta_{c, c + r}.
  std::vector<std::vector<long>> rows() const;
  /// Image under beta_{i,j} -> beta_{p-i, D-j} with p, D the largest index and degree.
  BettiDiagram reversed() const;
  bool is_self_dual() const { return reversed() == *this; }
  /// sum_i (-1)^i beta_{i,j} for each j; should equal the Hilbert numerator.
  IntPoly alternating_sums() const;
  std::string display() const;

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  std::map<std::pair<int, int>, long> entries_;  // only nonzero entries
};

template <class K>
BettiDiagram betti_diagram(const FreeResolution<K>& F);
template <class K>
BettiDiagram betti_diagram(const Ideal<K>& I);

}  // namespace canonlab
