#include <algorithm>
#include <stdexcept>

#include "canonlab/groebner/groebner.hpp"

namespace canonlab {

namespace {

constexpr int kSaturationCap = 50;

template <class K>
Ideal<K> unit_ideal(const Ring<K>& ring) {
  return Ideal<K>(ring, {Polynomial<K>::constant(ring, ring->one())});
}

// Elements of the reduced basis of `gens` (in `ring`, assumed to carry an
// elimination order for the first k variables) that avoid those variables,
// re-expressed in `target`.
template <class K>
std::vector<Polynomial<K>> eliminated(const Ring<K>& ring, std::span<const Polynomial<K>> gens, std::size_t k,
                                      const Ring<K>& target) {
  const auto gb = groebner_basis<K>(ring, gens);
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = !g.uses_variable(v);
    if (free) out.push_back(map_to_ring(g, target));
  }
  return out;
}

}  // namespace

template <class K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& I) {
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  return buchberger(I).contains(f);
}

template <class K>
bool same_ideal(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return buchberger(a) == buchberger(b);
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& I, std::size_t k) {
  const auto& vars = I.ring()->variables();
  if (k > vars.size()) throw std::invalid_argument("eliminate: more variables than the ring has");
  const auto sub = make_ring<K>(std::vector<std::string>(vars.begin() + static_cast<std::ptrdiff_t>(k), vars.end()),
                                I.ring()->field());
  if (I.is_zero()) return Ideal<K>(sub, {});
  const auto block = make_ring<K>(vars, I.ring()->field(), MonomialOrder::block(k, MonomialOrder::grevlex()));
  const auto gens = map_to_ring<K>(I.generators(), block);
  return Ideal<K>(sub, eliminated<K>(block, gens, k, sub));
}

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero() || J.is_zero()) return Ideal<K>(I.ring(), {});
  std::vector<std::string> vars = {"_t"};
  const auto& base = I.ring()->variables();
  vars.insert(vars.end(), base.begin(), base.end());
  const auto ring = make_ring<K>(vars, I.ring()->field(), MonomialOrder::block(1, I.ring()->order()));
  const auto t = Polynomial<K>::variable(ring, 0);
  const auto one_minus_t = Polynomial<K>::constant(ring, ring->one()) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I.generators()) gens.push_back(t * map_to_ring(f, ring));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * map_to_ring(g, ring));
  // the Ideal constructor re-checks that the eliminated part is homogeneous
  return Ideal<K>(I.ring(), eliminated<K>(ring, gens, 1, I.ring()));
}

template <class K>
Ideal<K> intersect(std::span<const Ideal<K>> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersect: no ideals");
  Ideal<K> acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Polynomial<K>& h) {
  require_same_ring(I.ring(), h.ring());
  if (h.is_zero()) return unit_ideal(I.ring());
  if (I.is_zero()) return I;
  const Ideal<K> meet = intersect(I, Ideal<K>(I.ring(), {h}));
  std::vector<Polynomial<K>> out;
  for (const auto& g : meet.generators()) out.push_back(divide_exact(g, h));
  return Ideal<K>(I.ring(), std::move(out));
}

template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) return unit_ideal(I.ring());
  std::vector<Ideal<K>> parts;
  for (const auto& h : J.generators()) parts.push_back(quotient(I, h));
  return intersect<K>(parts);
}

template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J) {
  if (I.is_zero()) return I;
  Ideal<K> cur = I;
  auto cur_gb = buchberger(cur);
  for (int round = 0; round < kSaturationCap; ++round) {
    Ideal<K> next = quotient(cur, J);
    auto next_gb = buchberger(next);
    if (next_gb == cur_gb) return cur_gb.ideal();
    cur = std::move(next);
    cur_gb = std::move(next_gb);
  }
  throw std::runtime_error("saturation did not stabilise within 50 quotients");
}

template <class K>
Ideal<K> saturate_variable(const Ideal<K>& I, std::size_t i) {
  if (I.is_zero()) return I;
  const auto& vars = I.ring()->variables();
  std::vector<std::string> moved;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (v != i) moved.push_back(vars[v]);
  }
  moved.push_back(vars.at(i));
  const auto ring = make_ring<K>(moved, I.ring()->field(), MonomialOrder::grevlex());
  const auto gb = groebner_basis<K>(ring, map_to_ring<K>(I.generators(), ring));
  const std::size_t last = moved.size() - 1;
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.elements()) {
    unsigned e = g.leading_monomial()[last];
    for (const auto& t : g.terms()) e = std::min(e, t.monomial[last]);
    Monomial m(moved.size());
    m.set(last, e);
    out.push_back(map_to_ring(divide_exact(g, Polynomial<K>::monomial(ring, ring->one(), m)), I.ring()));
  }
  return Ideal<K>(I.ring(), std::move(out));
}

template <class K>
Ideal<K> saturate_irrelevant(const Ideal<K>& I) {
  if (I.is_zero()) return I;
  std::vector<Ideal<K>> parts;
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i) parts.push_back(saturate_variable(I, i));
  return buchberger(intersect<K>(parts)).ideal();
}

#define CANONLAB_INSTANTIATE(K)                                                \
  template bool ideal_membership<K>(const Polynomial<K>&, const Ideal<K>&);    \
  template bool same_ideal<K>(const Ideal<K>&, const Ideal<K>&);               \
  template Ideal<K> eliminate<K>(const Ideal<K>&, std::size_t);                \
  template Ideal<K> intersect<K>(const Ideal<K>&, const Ideal<K>&);            \
  template Ideal<K> intersect<K>(std::span<const Ideal<K>>);                   \
  template Ideal<K> quotient<K>(const Ideal<K>&, const Polynomial<K>&);        \
  template Ideal<K> quotient<K>(const Ideal<K>&, const Ideal<K>&);             \
  template Ideal<K> saturate<K>(const Ideal<K>&, const Ideal<K>&);             \
  template Ideal<K> saturate_variable<K>(const Ideal<K>&, std::size_t);        \
  template Ideal<K> saturate_irrelevant<K>(const Ideal<K>&);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
