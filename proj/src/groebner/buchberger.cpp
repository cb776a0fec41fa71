#include <algorithm>
#include <random>
#include <stdexcept>

#include "canonlab/groebner/groebner.hpp"

namespace canonlab {

template <class K>
Ideal<K>::Ideal(Ring<K> ring, std::vector<Polynomial<K>> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

namespace {

template <class K>
using Divisors = std::vector<const Polynomial<K>*>;

template <class K>
const Polynomial<K>* find_divisor(const Divisors<K>& divisors, const Monomial& m) {
  for (const auto* d : divisors) {
    if (d->leading_monomial().divides(m)) return d;
  }
  return nullptr;
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, const Divisors<K>& divisors) {
  if (f.is_zero()) return f;
  Polynomial<K> p = f;
  std::vector<Term<K>> rem;
  while (!p.is_zero()) {
    const Term<K>& lt = p.leading_term();
    if (const auto* d = find_divisor(divisors, lt.monomial)) {
      const K c = lt.coefficient / d->leading_coefficient();
      const Monomial m = lt.monomial / d->leading_monomial();
      p.add_scaled(-c, m, *d);
    } else {
      rem.push_back(p.pop_leading_term());
    }
  }
  return Polynomial<K>::from_sorted_terms(f.ring(), std::move(rem));
}

template <class K>
Divisors<K> pointers(std::span<const Polynomial<K>> basis) {
  Divisors<K> d;
  for (const auto& b : basis) {
    if (b.is_zero()) throw std::invalid_argument("zero polynomial in a division basis");
    d.push_back(&b);
  }
  return d;
}

// Increasing degree, then decreasing leading monomial.
template <class K>
bool basis_before(const Polynomial<K>& a, const Polynomial<K>& b) {
  const Monomial& ma = a.leading_monomial();
  const Monomial& mb = b.leading_monomial();
  if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
  return a.ring()->order().greater(ma, mb);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

template <class K>
class Engine {
 public:
  Engine(const Ring<K>& ring, const BuchbergerOptions& opt) : ring_(ring), opt_(opt), rng_(opt.seed) {}

  GroebnerBasis<K> run(std::span<const Polynomial<K>> generators) {
    std::vector<Polynomial<K>> origin;
    for (const auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) origin.push_back(g);
    }
    if (origin.empty()) throw std::invalid_argument("Groebner basis of the zero ideal requested");
    for (const auto& g : origin) {
      if (insert(reduce(g, active_divisors()))) return unit(origin);
    }
    while (!pairs_.empty()) {
      const Pair pr = select();
      const Polynomial<K> h = reduce(s_polynomial(polys_[pr.i], polys_[pr.j]), active_divisors());
      if (insert(h)) return unit(origin);
    }
    return finish(std::move(origin));
  }

 private:
  Divisors<K> active_divisors() const {
    Divisors<K> d;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) d.push_back(&polys_[k]);
    }
    return d;
  }

  // Returns true if h is a nonzero constant (the ideal is the whole ring).
  bool insert(const Polynomial<K>& h0) {
    if (h0.is_zero()) return false;
    if (h0.is_constant()) return true;
    const std::size_t h = polys_.size();
    polys_.push_back(h0.monic());
    active_.push_back(true);
    const Monomial lh = polys_[h].leading_monomial();
    update(h, lh);
    return false;
  }

  // Gebauer-Moeller installation of the pairs for a new element h.
  void update(std::size_t h, const Monomial& lh) {
    std::vector<Pair> C;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) C.push_back({g, h, lcm(polys_[g].leading_monomial(), lh)});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = polys_[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
          if (C[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < D.size() && keep; ++b) {
          if (D[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool chain = lh.divides(p.lcm) && lcm(polys_[p.i].leading_monomial(), lh) != p.lcm &&
                         lcm(polys_[p.j].leading_monomial(), lh) != p.lcm;
      if (!chain) next.push_back(p);
    }
    for (const auto& p : D) {
      if (!polys_[p.i].leading_monomial().coprime(lh)) next.push_back(p);
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
  }

  Pair select() {
    std::size_t best = 0;
    if (opt_.strategy == PairStrategy::Random) {
      best = static_cast<std::size_t>(rng_() % pairs_.size());
    } else {
      const auto& order = ring_->order();
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto c = order.compare(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[k].i, pairs_[k].j) < std::tie(pairs_[best].i, pairs_[best].j))) {
          best = k;
        }
      }
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  GroebnerBasis<K> unit(std::vector<Polynomial<K>> origin) {
    return GroebnerBasis<K>(ring_, {Polynomial<K>::constant(ring_, ring_->one())}, std::move(origin));
  }

  GroebnerBasis<K> finish(std::vector<Polynomial<K>> origin) {
    std::vector<Polynomial<K>> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) minimal.push_back(polys_[k]);
    }
    std::vector<Polynomial<K>> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Divisors<K> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(&minimal[l]);
      }
      reduced.push_back(reduce(minimal[k], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), basis_before<K>);
    return GroebnerBasis<K>(ring_, std::move(reduced), std::move(origin));
  }

  Ring<K> ring_;
  BuchbergerOptions opt_;
  std::mt19937_64 rng_;
  std::vector<Polynomial<K>> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

template <class K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

template <class K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K>& f) const {
  return canonlab::normal_form<K>(map_to_ring(f, ring_), elements_);
}

template <class K>
Ideal<K> GroebnerBasis<K>::ideal() const {
  return Ideal<K>(ring_, elements_);
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis) {
  return reduce(f, pointers(basis));
}

template <class K>
Division<K> divide(const Polynomial<K>& f, std::span<const Polynomial<K>> basis) {
  const auto divisors = pointers(basis);
  Division<K> out;
  out.quotients.assign(basis.size(), Polynomial<K>(f.ring()));
  Polynomial<K> p = f;
  std::vector<Term<K>> rem;
  while (!p.is_zero()) {
    const Term<K>& lt = p.leading_term();
    std::size_t k = 0;
    while (k < divisors.size() && !divisors[k]->leading_monomial().divides(lt.monomial)) ++k;
    if (k < divisors.size()) {
      const K c = lt.coefficient / divisors[k]->leading_coefficient();
      const Monomial m = lt.monomial / divisors[k]->leading_monomial();
      p.add_scaled(-c, m, *divisors[k]);
      out.quotients[k] += Polynomial<K>::monomial(f.ring(), c, m);
    } else {
      rem.push_back(p.pop_leading_term());
    }
  }
  out.remainder = Polynomial<K>::from_sorted_terms(f.ring(), std::move(rem));
  return out;
}

template <class K>
std::function<void(const GroebnerBasis<K>&)>& groebner_observer() {
  static std::function<void(const GroebnerBasis<K>&)> observer;
  return observer;
}

template <class K>
GroebnerBasis<K> groebner_basis(const Ring<K>& ring, std::span<const Polynomial<K>> generators,
                                 const BuchbergerOptions& options) {
  GroebnerBasis<K> gb = Engine<K>(ring, options).run(generators);
  if (const auto& obs = groebner_observer<K>()) obs(gb);
  return gb;
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const BuchbergerOptions& options) {
  return groebner_basis<K>(I.ring(), I.generators(), options);
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& order, const BuchbergerOptions& options) {
  if (order == I.ring()->order()) return buchberger(I, options);
  const Ring<K> ring = with_order(I.ring(), order);
  return groebner_basis<K>(ring, map_to_ring<K>(I.generators(), ring), options);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<K> s = f.times_term(f.ring()->one() / f.leading_coefficient(), L / f.leading_monomial());
  s.add_scaled(-(g.ring()->one() / g.leading_coefficient()), L / g.leading_monomial(), g);
  return s;
}

template <class K>
bool satisfies_buchberger_criterion(std::span<const Polynomial<K>> basis) {
  const auto divisors = pointers(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j]), divisors).is_zero()) return false;
    }
  }
  return true;
}

#define CANONLAB_INSTANTIATE(K)                                                                          \
  template class Ideal<K>;                                                                               \
  template class GroebnerBasis<K>;                                                                       \
  template Polynomial<K> normal_form<K>(const Polynomial<K>&, std::span<const Polynomial<K>>);           \
  template Division<K> divide<K>(const Polynomial<K>&, std::span<const Polynomial<K>>);                  \
  template std::function<void(const GroebnerBasis<K>&)>& groebner_observer<K>();                         \
  template GroebnerBasis<K> groebner_basis<K>(const Ring<K>&, std::span<const Polynomial<K>>,            \
                                              const BuchbergerOptions&);                                 \
  template GroebnerBasis<K> buchberger<K>(const Ideal<K>&, const BuchbergerOptions&);                    \
  template GroebnerBasis<K> buchberger<K>(const Ideal<K>&, const MonomialOrder&, const BuchbergerOptions&); \
  template Polynomial<K> s_polynomial<K>(const Polynomial<K>&, const Polynomial<K>&);                    \
  template bool satisfies_buchberger_criterion<K>(std::span<const Polynomial<K>>);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
