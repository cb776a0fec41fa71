#include "canonlab/polyring/linalg.hpp"

#include <algorithm>

namespace canonlab {

namespace {

// a -= c * b, both sorted by column.
template <class K>
SparseRow<K> axpy(const SparseRow<K>& a, const K& c, const SparseRow<K>& b) {
  SparseRow<K> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, K(-(c * j->second)));
      ++j;
    } else {
      K v = i->second - c * j->second;
      if (!is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class K>
SparseRow<K> Echelon<K>::reduce(SparseRow<K> row) const {
  std::erase_if(row, [](const auto& e) { return is_zero(e.second); });
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const K c = row.front().second;
    row = axpy(row, c, it->second);
  }
  return row;
}

template <class K>
bool Echelon<K>::insert(SparseRow<K> row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const K lead = row.front().second;
  for (auto& e : row) e.second = e.second / lead;
  const std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

template <class K>
SparseRow<K> coefficient_row(const Polynomial<K>& f, MonomialIndex& index) {
  SparseRow<K> row;
  row.reserve(f.size());
  for (const auto& t : f.terms()) row.emplace_back(index(t.monomial), t.coefficient);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

template <class K>
std::size_t span_dim(std::span<const Polynomial<K>> polys) {
  MonomialIndex index;
  Echelon<K> e;
  for (const auto& f : polys) e.insert(coefficient_row(f, index));
  return e.rank();
}

template class Echelon<Rational>;
template class Echelon<Zp>;
template SparseRow<Rational> coefficient_row<Rational>(const Polynomial<Rational>&, MonomialIndex&);
template SparseRow<Zp> coefficient_row<Zp>(const Polynomial<Zp>&, MonomialIndex&);
template std::size_t span_dim<Rational>(std::span<const Polynomial<Rational>>);
template std::size_t span_dim<Zp>(std::span<const Polynomial<Zp>>);

}  // namespace canonlab
