#include <stdexcept>

#include "canonlab/groebner/groebner.hpp"

namespace canonlab {

template <class K>
std::vector<SyzygyVector<K>> schreyer_syzygies(const GroebnerBasis<K>& G) {
  const auto& ring = G.ring();
  const auto elems = G.elements();
  std::vector<SyzygyVector<K>> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Monomial L = lcm(elems[i].leading_monomial(), elems[j].leading_monomial());
      const Monomial ui = L / elems[i].leading_monomial();
      const Monomial uj = L / elems[j].leading_monomial();
      const K ci = ring->one() / elems[i].leading_coefficient();
      const K cj = ring->one() / elems[j].leading_coefficient();
      Polynomial<K> s = elems[i].times_term(ci, ui);
      s.add_scaled(-cj, uj, elems[j]);
      auto div = divide<K>(s, elems);
      if (!div.remainder.is_zero()) throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
      SyzygyVector<K> v;
      v.coordinates.reserve(elems.size());
      for (auto& q : div.quotients) v.coordinates.push_back(-q);
      v.coordinates[i] += Polynomial<K>::monomial(ring, ci, ui);
      v.coordinates[j] -= Polynomial<K>::monomial(ring, cj, uj);
      out.push_back(std::move(v));
    }
  }
  return out;
}

template <class K>
Polynomial<K> evaluate_syzygy(const SyzygyVector<K>& v, std::span<const Polynomial<K>> elements) {
  if (v.coordinates.size() != elements.size()) throw std::invalid_argument("syzygy length mismatch");
  Polynomial<K> sum(elements.empty() ? Ring<K>() : elements[0].ring());
  for (std::size_t k = 0; k < elements.size(); ++k) sum += v.coordinates[k] * elements[k];
  return sum;
}

template std::vector<SyzygyVector<Rational>> schreyer_syzygies<Rational>(const GroebnerBasis<Rational>&);
template std::vector<SyzygyVector<Zp>> schreyer_syzygies<Zp>(const GroebnerBasis<Zp>&);
template Polynomial<Rational> evaluate_syzygy<Rational>(const SyzygyVector<Rational>&,
                                                        std::span<const Polynomial<Rational>>);
template Polynomial<Zp> evaluate_syzygy<Zp>(const SyzygyVector<Zp>&, std::span<const Polynomial<Zp>>);

}  // namespace canonlab
