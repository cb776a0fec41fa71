#include "canonlab/invariants/tangent.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "canonlab/invariants/hilbert.hpp"
#include "canonlab/polyring/linalg.hpp"

namespace canonlab {

namespace {

// Normal forms of monomials modulo a basis, cached.
template <class K>
class MonomialReducer {
 public:
  explicit MonomialReducer(const GroebnerBasis<K>& G) : G_(G) {}

  const Polynomial<K>& operator()(const Monomial& m) {
    auto it = cache_.find(m);
    if (it == cache_.end()) {
      it = cache_.emplace(m, G_.normal_form(Polynomial<K>::monomial(G_.ring(), G_.ring()->one(), m))).first;
    }
    return it->second;
  }

  // Normal form of p * mu, assembled from cached monomial normal forms.
  Polynomial<K> times(const Polynomial<K>& p, const Monomial& mu) {
    Polynomial<K> out(G_.ring());
    const Monomial one(G_.ring()->nvars());
    for (const auto& t : p.terms()) out.add_scaled(t.coefficient, one, (*this)(t.monomial * mu));
    return out;
  }

 private:
  const GroebnerBasis<K>& G_;
  std::unordered_map<Monomial, Polynomial<K>, MonomialHash> cache_;
};

}  // namespace

template <class K>
long tangent_dim(const Ideal<K>& I) {
  if (I.is_zero()) throw std::invalid_argument("tangent_dim of the zero ideal");
  const auto G = buchberger(I, MonomialOrder::grevlex());
  if (G.is_unit_ideal()) throw std::invalid_argument("tangent_dim of the unit ideal");
  const auto sat = saturate_irrelevant(G.ideal());
  if (!(buchberger(sat, MonomialOrder::grevlex()) == G)) {
    throw NotSaturatedError("tangent_dim: ideal is not saturated");
  }
  const MonomialIdeal in = initial_ideal(G);
  const auto elems = G.elements();
  const auto syz = schreyer_syzygies(G);

  // Unknowns: phi(g_k) = sum over standard monomials mu of degree deg g_k.
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  std::unordered_map<unsigned, std::vector<Monomial>> standard;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const unsigned d = *elems[k].degree();
    if (!standard.count(d)) standard[d] = in.standard_monomials(d);
    for (const auto& mu : standard[d]) unknowns.emplace_back(k, mu);
  }

  // Column of unknown (k, mu): for each syzygy s, NF(s_k * mu) in R/I.
  MonomialReducer<K> nf(G);
  MonomialIndex monomials;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> columns;  // (syzygy, monomial) -> column
  Echelon<K> echelon;
  for (const auto& [k, mu] : unknowns) {
    SparseRow<K> row;
    for (std::size_t s = 0; s < syz.size(); ++s) {
      const auto& coeff = syz[s].coordinates[k];
      if (coeff.is_zero()) continue;
      const Polynomial<K> image = nf.times(coeff, mu);
      for (const auto& t : image.terms()) {
        const auto key = std::make_pair(s, monomials(t.monomial));
        const auto col = columns.try_emplace(key, columns.size()).first->second;
        row.emplace_back(col, t.coefficient);
      }
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    echelon.insert(std::move(row));
  }
  return static_cast<long>(unknowns.size()) - static_cast<long>(echelon.rank());
}

template long tangent_dim<Rational>(const Ideal<Rational>&);
template long tangent_dim<Zp>(const Ideal<Zp>&);

}  // namespace canonlab
