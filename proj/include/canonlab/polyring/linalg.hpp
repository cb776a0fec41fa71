#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "canonlab/polyring/polynomial.hpp"

namespace canonlab {

/// Sparse vector as (column, value) pairs with strictly increasing columns and no zeros.
template <class K>
using SparseRow = std::vector<std::pair<std::size_t, K>>;

/// Incremental row echelon form over an exact field. Rows are reduced on their
/// leading entry only, which is all rank and independence questions need.
template <class K>
class Echelon {
 public:
  /// Reduces `row` against the stored pivots; keeps it and returns true if it is independent.
  bool insert(SparseRow<K> row);
  /// Leftover of `row` after reduction by the stored pivots (empty iff in the span).
  SparseRow<K> reduce(SparseRow<K> row) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow<K>> pivots_;  // keyed by leading column, pivot entry 1
};

template <class K>
std::size_t rank(std::span<const SparseRow<K>> rows) {
  Echelon<K> e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Assigns column indices to monomials on first sight.
class MonomialIndex {
 public:
  std::size_t operator()(const Monomial& m) {
    auto [it, inserted] = index_.try_emplace(m, index_.size());
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Coefficient vector of f with columns numbered by `index`.
template <class K>
SparseRow<K> coefficient_row(const Polynomial<K>& f, MonomialIndex& index);

/// Dimension of the K-span of the given polynomials.
template <class K>
std::size_t span_dim(std::span<const Polynomial<K>> polys);

}  // namespace canonlab
