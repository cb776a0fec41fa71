#include <algorithm>

#include "canonlab/petri/petri.hpp"

namespace canonlab {

namespace {

template <class K>
Polynomial<K> var(const Ring<K>& r, int k) {
  return Polynomial<K>::variable(r, "x" + std::to_string(k));
}

std::string label(const char* head, std::initializer_list<int> idx) {
  std::string s = head;
  s += '(';
  bool first = true;
  for (int v : idx) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + ')';
}

// G_kl for any ordered pair, from a table keyed by k < l (G_lk = -G_kl).
template <class K>
std::optional<Polynomial<K>> oriented(const std::map<IndexPair, Polynomial<K>>& G, int k, int l) {
  auto it = G.find(pair_key(k, l));
  if (it == G.end()) return std::nullopt;
  return k < l ? it->second : -it->second;
}

template <class K>
std::vector<Residual<K>> residuals(const PetriSystemG6<K>& sys, const std::map<IndexPair, Polynomial<K>>* given) {
  const auto f = build_g6_quadrics(sys);
  std::vector<Residual<K>> out;
  std::map<IndexPair, Polynomial<K>> G;
  for (int k = 1; k <= 4; ++k) {
    for (int l = k + 1; l <= 4; ++l) {
      std::vector<int> others;
      for (int i = 1; i <= 4; ++i) {
        if (i != k && i != l) others.push_back(i);
      }
      int recovery = 0;
      if (given) {
        if (auto it = given->find({k, l}); it != given->end()) G.emplace(IndexPair{k, l}, it->second);
      } else {
        for (int i : others) {
          const K r = sys.rho_of(i, k, l);
          if (is_zero(r)) continue;
          recovery = i;
          G.emplace(IndexPair{k, l}, -(syzygy_quadric_part(sys, f, i, k, l) * (sys.ring->one() / r)));
          break;
        }
      }
      for (int i : others) {
        if (i == recovery) continue;
        Polynomial<K> value = syzygy_quadric_part(sys, f, i, k, l);
        if (auto g = G.find({k, l}); g != G.end()) value += sys.rho_of(i, k, l) * g->second;
        out.push_back({label("S", {i, k, l}), std::move(value)});
      }
    }
  }
  for (int k = 1; k <= 4; ++k) {
    for (int l = k + 1; l <= 4; ++l) {
      for (int n = l + 1; n <= 4; ++n) {
        auto a = oriented(G, k, l), b = oriented(G, l, n), c = oriented(G, n, k);
        if (a && b && c) out.push_back({label("G", {k, l, n}), *a + *b + *c});
      }
    }
  }
  return out;
}

// Formal linear combination sum c_ab f_ab with polynomial coefficients; the
// symbol f_ab is keyed by the sorted pair and f_aa is kept as its own symbol.
template <class K>
class Formal {
 public:
  explicit Formal(Ring<K> ring) : ring_(std::move(ring)) {}

  void add(int a, int b, const Polynomial<K>& c) {
    auto [it, inserted] = terms_.try_emplace({std::min(a, b), std::max(a, b)}, Polynomial<K>(ring_));
    it->second += c;
  }
  Formal& add(const Formal& o, const K& scale) {
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, scale * c);
    return *this;
  }
  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
  }

 private:
  Ring<K> ring_;
  std::map<IndexPair, Polynomial<K>> terms_;
};

template <class K>
Formal<K> formal_quadric_part(const PetriSystemG6<K>& sys, int i, int k, int l) {
  Formal<K> out(sys.ring);
  out.add(i, l, var(sys.ring, k));
  out.add(i, k, -var(sys.ring, l));
  for (int s = 1; s <= 4; ++s) {
    if (s != k) out.add(s, k, sys.a(s, i, l));
    if (s != l) out.add(s, l, -sys.a(s, i, k));
  }
  return out;
}

}  // namespace

template <class K>
Polynomial<K> syzygy_quadric_part(const PetriSystemG6<K>& sys, const QuadricTable<K>& f, int i, int k, int l) {
  auto out = var(sys.ring, k) * f(i, l) - var(sys.ring, l) * f(i, k);
  for (int s = 1; s <= 4; ++s) {
    if (s != k) out += sys.a(s, i, l) * f(s, k);
    if (s != l) out -= sys.a(s, i, k) * f(s, l);
  }
  return out;
}

template <class K>
Polynomial<K> syzygy_quadric_part(const PetriSystemG5<K>& sys, const QuadricTable<K>& f, int i, int k, int l) {
  auto out = var(sys.ring, k) * f(i, l) - var(sys.ring, l) * f(i, k);
  for (int s = 1; s <= 3; ++s) {
    if (s != k) out += sys.a(s, i, l) * f(s, k);
    if (s != l) out -= sys.a(s, i, k) * f(s, l);
  }
  return out;
}

template <class K>
std::map<IndexPair, Polynomial<K>> recovered_cubics(const PetriSystemG6<K>& sys) {
  const auto f = build_g6_quadrics(sys);
  std::map<IndexPair, Polynomial<K>> G;
  for (int k = 1; k <= 4; ++k) {
    for (int l = k + 1; l <= 4; ++l) {
      for (int i = 1; i <= 4; ++i) {
        if (i == k || i == l) continue;
        const K r = sys.rho_of(i, k, l);
        if (is_zero(r)) continue;
        G.emplace(IndexPair{k, l}, -(syzygy_quadric_part(sys, f, i, k, l) * (sys.ring->one() / r)));
        break;
      }
    }
  }
  return G;
}

template <class K>
std::vector<Residual<K>> petri_syzygy_residuals(const PetriSystemG6<K>& sys) {
  return residuals<K>(sys, nullptr);
}

template <class K>
std::vector<Residual<K>> petri_syzygy_residuals(const PetriSystemG6<K>& sys,
                                                const std::map<IndexPair, Polynomial<K>>& cubics) {
  return residuals<K>(sys, &cubics);
}

template <class K>
std::vector<Residual<K>> petri_syzygy_residuals(const PetriSystemG5<K>& sys) {
  const auto f = build_g5_quadrics(sys);
  std::vector<Residual<K>> out;
  if (!is_zero(sys.rho123)) return out;
  for (int k = 1; k <= 3; ++k) {
    for (int l = k + 1; l <= 3; ++l) {
      const int i = 6 - k - l;
      out.push_back({label("S", {i, k, l}), syzygy_quadric_part(sys, f, i, k, l)});
    }
  }
  return out;
}

template <class K>
bool all_zero(const std::vector<Residual<K>>& residuals) {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual<K>& r) { return r.value.is_zero(); });
}

template <class K>
bool verify_lemma_34(const PetriSystemG6<K>& sys, int i, int k, int l, int n) {
  std::array<int, 4> idx{i, k, l, n};
  std::sort(idx.begin(), idx.end());
  if (idx != std::array<int, 4>{1, 2, 3, 4}) throw std::invalid_argument("verify_lemma_34: indices must be distinct in 1..4");
  auto r = [&](int a, int b, int c) { return sys.rho_of(a, b, c); };
  const K rkl = r(i, k, l), rkn = r(i, k, n), rln = r(i, l, n);

  // The weights of G_kl, G_ln, G_nk in the combination; (4) cancels them iff equal.
  const K wkl = K(rkn * rln) * rkl, wln = K(rkn * rkl) * rln, wnk = K(rln * rkl) * rkn;
  const bool g_cancel = wkl == wln && wln == wnk;

  Formal<K> combination(sys.ring);
  combination.add(formal_quadric_part(sys, i, k, l), K(rkn * rln));
  combination.add(formal_quadric_part(sys, i, l, n), K(rkn * rkl));
  combination.add(formal_quadric_part(sys, i, n, k), K(rln * rkl));

  const auto& R = sys.ring;
  const K one = R->one();
  Formal<K> diff(R);  // LHS - RHS of the rearranged relation
  diff.add(i, l, rln * (rkn * var(R, k)));
  diff.add(i, n, -(rln * (rkl * var(R, k))));
  diff.add(i, n, rkn * (rkl * var(R, l)));
  diff.add(i, k, -(rkn * (rln * var(R, l))));
  diff.add(i, k, rkl * (rln * var(R, n)));
  diff.add(i, l, -(rkl * (rkn * var(R, n))));
  for (int s = 1; s <= 4; ++s) {
    if (s != k && s != n) {
      diff.add(s, n, -(K(rkn * rkl) * sys.a(s, i, l)));
      diff.add(s, k, K(rkn * rln) * sys.a(s, i, l));
    }
    if (s != n && s != l) {
      diff.add(s, l, -(K(rln * rkn) * sys.a(s, i, k)));
      diff.add(s, n, K(rln * rkl) * sys.a(s, i, k));
    }
    if (s != k && s != l) {
      diff.add(s, k, -(K(rkl * rln) * sys.a(s, i, n)));
      diff.add(s, l, K(rkl * rkn) * sys.a(s, i, n));
    }
  }
  const auto& an = sys.alpha[n - 1];
  const auto& al = sys.alpha[l - 1];
  const auto& ak = sys.alpha[k - 1];
  diff.add(l, n, -(K(K(rkn * rln) * rkn) * an));
  diff.add(k, n, K(K(rkn * rln) * rln) * an);
  diff.add(l, k, -(K(K(rkl * rln) * rln) * al));
  diff.add(l, n, K(K(rkl * rln) * rkl) * al);
  diff.add(k, n, -(K(K(rkl * rkn) * rkl) * ak));
  diff.add(l, k, K(K(rkl * rkn) * rkn) * ak);

  diff.add(combination, -one);
  return g_cancel && diff.is_zero();
}

#define CANONLAB_INSTANTIATE(K)                                                                                     \
  template Polynomial<K> syzygy_quadric_part<K>(const PetriSystemG6<K>&, const QuadricTable<K>&, int, int, int);    \
  template Polynomial<K> syzygy_quadric_part<K>(const PetriSystemG5<K>&, const QuadricTable<K>&, int, int, int);    \
  template std::map<IndexPair, Polynomial<K>> recovered_cubics<K>(const PetriSystemG6<K>&);                         \
  template std::vector<Residual<K>> petri_syzygy_residuals<K>(const PetriSystemG6<K>&);                             \
  template std::vector<Residual<K>> petri_syzygy_residuals<K>(const PetriSystemG6<K>&,                              \
                                                              const std::map<IndexPair, Polynomial<K>>&);           \
  template std::vector<Residual<K>> petri_syzygy_residuals<K>(const PetriSystemG5<K>&);                             \
  template bool all_zero<K>(const std::vector<Residual<K>>&);                                                       \
  template bool verify_lemma_34<K>(const PetriSystemG6<K>&, int, int, int, int);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
