#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "canonlab/polyring/polynomial.hpp"

namespace canonlab {

/// Homogeneous ideal given by generators. Zero generators are dropped, so the
/// zero ideal has an empty generator list; a non-homogeneous generator throws.
template <class K>
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring<K> ring, std::vector<Polynomial<K>> generators);

  const Ring<K>& ring() const { return ring_; }
  std::span<const Polynomial<K>> generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Polynomial<K>> g(a.gens_.begin(), a.gens_.end());
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.ring_, std::move(g));
  }

 private:
  Ring<K> ring_;
  std::vector<Polynomial<K>> gens_;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing degree
/// and then decreasing leading monomial. Elements live in a ring carrying the
/// order the basis was computed for.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(Ring<K> ring, std::vector<Polynomial<K>> elements, std::vector<Polynomial<K>> origin)
      : ring_(std::move(ring)), elements_(std::move(elements)), origin_(std::move(origin)) {}

  const Ring<K>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  std::span<const Polynomial<K>> elements() const { return elements_; }
  std::span<const Polynomial<K>> origin() const { return origin_; }
  std::size_t size() const { return elements_.size(); }
  const Polynomial<K>& operator[](std::size_t i) const { return elements_[i]; }

  std::vector<Monomial> leading_monomials() const;
  Polynomial<K> normal_form(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }
  bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  Ideal<K> ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.elements_ == b.elements_; }

 private:
  Ring<K> ring_;
  std::vector<Polynomial<K>> elements_;
  std::vector<Polynomial<K>> origin_;
};

/// Remainder of f on division by `basis`: divisors are tried in list order and
/// the leading term is always reduced first.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis);

template <class K>
struct Division {
  std::vector<Polynomial<K>> quotients;  // one per divisor
  Polynomial<K> remainder;
};

/// Same reduction as normal_form, also recording f = sum q_k b_k + r.
template <class K>
Division<K> divide(const Polynomial<K>& f, std::span<const Polynomial<K>> basis);

enum class PairStrategy { Normal, Random };

struct BuchbergerOptions {
  PairStrategy strategy = PairStrategy::Normal;
  std::uint64_t seed = 0;  // used by PairStrategy::Random
};

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// order of `ring`. Inputs need not be homogeneous.
template <class K>
GroebnerBasis<K> groebner_basis(const Ring<K>& ring, std::span<const Polynomial<K>> generators,
                                 const BuchbergerOptions& options = {});

/// Buchberger on a homogeneous ideal, in `order` (the ideal's ring order if omitted).
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const BuchbergerOptions& options = {});
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& order,
                            const BuchbergerOptions& options = {});

/// Called with every basis produced by groebner_basis. Tests install this to
/// audit the output; it is empty otherwise.
template <class K>
std::function<void(const GroebnerBasis<K>&)>& groebner_observer();

/// S-polynomial of two monic-or-not polynomials with respect to their leading terms.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g);

/// True iff every S-polynomial of `basis` reduces to zero against it.
template <class K>
bool satisfies_buchberger_criterion(std::span<const Polynomial<K>> basis);

template <class K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& I);

/// Equality of ideals in the same ring, via reduced bases in the ring's order.
template <class K>
bool same_ideal(const Ideal<K>& a, const Ideal<K>& b);

/// I intersected with the subring on all but the first k variables. The result
/// lives in that subring, ordered by grevlex.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, std::size_t k);

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J);
template <class K>
Ideal<K> intersect(std::span<const Ideal<K>> ideals);

/// (I : <h>) for a single homogeneous h.
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Polynomial<K>& h);
/// (I : J) = { f : f J in I }.
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Ideal<K>& J);

/// (I : J^inf), iterating quotients until the reduced basis stabilises.
/// Throws std::runtime_error after 50 rounds.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J);
/// (I : x_i^inf) by one grevlex basis with x_i moved last.
template <class K>
Ideal<K> saturate_variable(const Ideal<K>& I, std::size_t i);
/// Saturation by the irrelevant ideal (x_0, ..., x_n).
template <class K>
Ideal<K> saturate_irrelevant(const Ideal<K>& I);

template <class K>
struct SyzygyVector {
  std::vector<Polynomial<K>> coordinates;  // one per basis element
};

/// One syzygy per S-pair of G, recording the full reduction of the pair to
/// zero. Together they generate the syzygy module of G's elements.
template <class K>
std::vector<SyzygyVector<K>> schreyer_syzygies(const GroebnerBasis<K>& G);

/// Sum of coordinates[k] * elements[k]; zero for a genuine syzygy.
template <class K>
Polynomial<K> evaluate_syzygy(const SyzygyVector<K>& v, std::span<const Polynomial<K>> elements);

}  // namespace canonlab
