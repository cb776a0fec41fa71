#include <algorithm>
#include <numeric>

#include "canonlab/petri/petri.hpp"
#include "canonlab/polyring/linalg.hpp"

namespace canonlab {

namespace {

template <class K>
Polynomial<K> var(const Ring<K>& r, int k) {
  return Polynomial<K>::variable(r, "x" + std::to_string(k));
}

template <class K>
Polynomial<K> lookup(const std::map<IndexTriple, Polynomial<K>>& m, const Ring<K>& r, int s, int i, int j) {
  const IndexPair p = pair_key(i, j);
  auto it = m.find({s, p.first, p.second});
  return it == m.end() ? Polynomial<K>(r) : it->second;
}

template <class K>
void require_form(const Polynomial<K>& f, unsigned degree, const std::vector<std::size_t>& allowed,
                  const std::string& what) {
  if (f.is_zero()) return;
  if (!f.is_homogeneous() || *f.degree() != degree) {
    throw std::invalid_argument(what + " must be a form of degree " + std::to_string(degree));
  }
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
    if (f.uses_variable(v) && std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      throw std::invalid_argument(what + " uses a variable outside the coefficient variables");
    }
  }
}

void require_diag_key(const IndexTriple& key, int n) {
  const auto [s, i, j] = key;
  if (i < 1 || j > n || i >= j || (s != i && s != j)) {
    throw std::invalid_argument("a_diag key must be (s,i,j) with i < j and s in {i,j}");
  }
}

void require_pair_key(const IndexPair& key, int n) {
  if (key.first < 1 || key.second > n || key.first >= key.second) {
    throw std::invalid_argument("pair key out of range");
  }
}

template <class K>
std::array<Polynomial<K>, 6> raw_surface(const PetriSystemG6<K>& sys, const QuadricTable<K>& f) {
  auto r = [&](int i, int j, int k) { return sys.rho_of(i, j, k); };
  return {r(1, 3, 4) * f(1, 2) - r(1, 2, 3) * f(1, 4), r(1, 3, 4) * f(2, 3) - r(1, 2, 3) * f(3, 4),
          r(1, 2, 4) * f(1, 3) - r(1, 2, 3) * f(1, 4), r(1, 2, 4) * f(2, 3) - r(1, 2, 3) * f(2, 4),
          r(2, 3, 4) * f(1, 2) - r(1, 2, 3) * f(2, 4), r(2, 3, 4) * f(1, 3) - r(1, 2, 3) * f(3, 4)};
}

template <class K>
void require_surface_case(const PetriSystemG6<K>& sys) {
  if (is_zero(sys.rho_of(1, 2, 3)) || is_zero(sys.rho_of(1, 2, 4))) {
    throw std::invalid_argument("surface quadrics need rho123 and rho124 nonzero; renumber first");
  }
}

template <class K>
K random_nonzero(const FieldSpec& field, std::mt19937_64& rng) {
  for (;;) {
    K v = FieldTraits<K>::random(field, rng);
    if (!is_zero(v)) return v;
  }
}

template <class K>
Polynomial<K> random_binary_form(const Ring<K>& r, std::size_t u, std::size_t v, unsigned d, std::mt19937_64& rng) {
  Polynomial<K> out(r);
  for (unsigned e = 0; e <= d; ++e) {
    Monomial m(r->nvars());
    m.set(u, e);
    m.set(v, d - e);
    out += Polynomial<K>::monomial(r, FieldTraits<K>::random(r->field(), rng), m);
  }
  return out;
}

}  // namespace

IndexPair pair_key(int i, int j) {
  if (i == j) throw std::invalid_argument("index pair must be distinct");
  return {std::min(i, j), std::max(i, j)};
}

IndexTriple triple_key(int i, int j, int k) {
  IndexTriple t{i, j, k};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("index triple must be distinct");
  return t;
}

template <class K>
std::vector<Polynomial<K>> QuadricTable<K>::list() const {
  std::vector<Polynomial<K>> out;
  for (const auto& [key, f] : table_) out.push_back(f);
  return out;
}

template <class K>
PetriSystemG5<K> PetriSystemG5<K>::zero(const Ring<K>& ring, std::array<std::string, 2> tail) {
  PetriSystemG5 s;
  s.ring = ring;
  s.tail = tail;
  s.rho123 = ring->zero();
  for (auto& a : s.alpha) a = Polynomial<K>::variable(ring, tail[1]);
  return s;
}

template <class K>
Polynomial<K> PetriSystemG5<K>::a(int s, int i, int j) const {
  if (s == i || s == j) return lookup(a_diag, ring, s, i, j);
  if (is_zero(rho123)) return Polynomial<K>(ring);
  if (alpha[s - 1].is_zero()) throw std::invalid_argument("alpha_" + std::to_string(s) + " must be nonzero");
  return rho123 * alpha[s - 1];
}

template <class K>
Polynomial<K> PetriSystemG5<K>::quadratic(int i, int j) const {
  auto it = q.find(pair_key(i, j));
  return it == q.end() ? Polynomial<K>(ring) : it->second;
}

template <class K>
PetriSystemG6<K> PetriSystemG6<K>::zero(const Ring<K>& ring) {
  PetriSystemG6 s;
  s.ring = ring;
  for (auto& a : s.alpha) a = var(ring, 0) + var(ring, 5);
  return s;
}

template <class K>
K PetriSystemG6<K>::rho_of(int i, int j, int k) const {
  auto it = rho.find(triple_key(i, j, k));
  return it == rho.end() ? ring->zero() : it->second;
}

template <class K>
Polynomial<K> PetriSystemG6<K>::a(int s, int i, int j) const {
  if (s == i || s == j) return lookup(a_diag, ring, s, i, j);
  const K r = rho_of(s, i, j);
  if (is_zero(r)) return Polynomial<K>(ring);
  if (alpha[s - 1].is_zero()) throw std::invalid_argument("alpha_" + std::to_string(s) + " must be nonzero");
  return r * alpha[s - 1];
}

template <class K>
Polynomial<K> PetriSystemG6<K>::quadratic(int i, int j) const {
  const IndexPair p = pair_key(i, j);
  if (b) {
    if (auto it = b->find(p); it != b->end()) return it->second * (var(ring, 0) * var(ring, 5));
  }
  auto it = q.find(p);
  return it == q.end() ? Polynomial<K>(ring) : it->second;
}

template <class K>
void validate(const PetriSystemG5<K>& sys) {
  const std::vector<std::size_t> tail = {sys.ring->index(sys.tail[0]), sys.ring->index(sys.tail[1])};
  for (int k = 1; k <= 3; ++k) sys.ring->index("x" + std::to_string(k));
  for (const auto& [key, f] : sys.a_diag) {
    require_diag_key(key, 3);
    require_form(f, 1, tail, "a_diag");
  }
  for (const auto& a : sys.alpha) require_form(a, 1, tail, "alpha");
  for (const auto& [key, f] : sys.q) {
    require_pair_key(key, 3);
    require_form(f, 2, tail, "q");
  }
}

template <class K>
void validate(const PetriSystemG6<K>& sys) {
  const std::vector<std::size_t> tail = {sys.ring->index("x0"), sys.ring->index("x5")};
  for (int k = 1; k <= 4; ++k) sys.ring->index("x" + std::to_string(k));
  for (const auto& [key, v] : sys.rho) {
    if (key != triple_key(key[0], key[1], key[2]) || key[0] < 1 || key[2] > 4) {
      throw std::invalid_argument("rho key must be a sorted 3-subset of {1,2,3,4}");
    }
  }
  for (const auto& [key, f] : sys.a_diag) {
    require_diag_key(key, 4);
    require_form(f, 1, tail, "a_diag");
  }
  for (const auto& a : sys.alpha) require_form(a, 1, tail, "alpha");
  for (const auto& [key, f] : sys.q) {
    require_pair_key(key, 4);
    require_form(f, 2, tail, "q");
  }
  if (sys.b) {
    for (const auto& [key, v] : *sys.b) require_pair_key(key, 4);
  }
}

template <class K>
QuadricTable<K> build_g5_quadrics(const PetriSystemG5<K>& sys) {
  validate(sys);
  QuadricTable<K> out;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      Polynomial<K> f = var(sys.ring, i) * var(sys.ring, j) - sys.quadratic(i, j);
      for (int s = 1; s <= 3; ++s) f -= sys.a(s, i, j) * var(sys.ring, s);
      out.set(i, j, std::move(f));
    }
  }
  return out;
}

template <class K>
QuadricTable<K> build_g6_quadrics(const PetriSystemG6<K>& sys) {
  validate(sys);
  QuadricTable<K> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      Polynomial<K> f = var(sys.ring, i) * var(sys.ring, j) - sys.quadratic(i, j);
      for (int s = 1; s <= 4; ++s) f -= sys.a(s, i, j) * var(sys.ring, s);
      out.set(i, j, std::move(f));
    }
  }
  return out;
}

template <class K>
Polynomial<K> dependence_relation(const PetriSystemG6<K>& sys) {
  const auto F = raw_surface(sys, build_g6_quadrics(sys));
  return sys.rho_of(2, 3, 4) * (F[0] - F[2]) - sys.rho_of(1, 2, 4) * (F[1] - F[5]) +
         sys.rho_of(1, 3, 4) * (F[3] - F[4]);
}

template <class K>
SurfaceQuadrics<K> surface_quadrics(const PetriSystemG6<K>& sys) {
  require_surface_case(sys);
  SurfaceQuadrics<K> out;
  out.F = raw_surface(sys, build_g6_quadrics(sys));
  out.span_dim = span_dim<K>(out.F);
  out.dependence = dependence_relation(sys);
  return out;
}

template <class K>
std::vector<Polynomial<K>> fprime_basis(const PetriSystemG6<K>& sys) {
  require_surface_case(sys);
  const auto f = build_g6_quadrics(sys);
  const K r123 = sys.rho_of(1, 2, 3), r124 = sys.rho_of(1, 2, 4);
  const K r134 = sys.rho_of(1, 3, 4), r234 = sys.rho_of(2, 3, 4);
  if (is_zero(r134) && is_zero(r234)) return {f(1, 3), f(1, 4), f(2, 3), f(2, 4), f(3, 4)};
  if (is_zero(r234)) return {r134 * f(1, 2) - r123 * f(1, 4), r124 * f(1, 3) - r123 * f(1, 4), f(2, 3), f(2, 4), f(3, 4)};
  if (is_zero(r134)) return {r234 * f(1, 2) - r123 * f(2, 4), r124 * f(2, 3) - r123 * f(2, 4), f(1, 3), f(1, 4), f(3, 4)};
  return {K(r234 * r134) * f(1, 2) - K(r124 * r123) * f(3, 4), r234 * f(1, 3) - r123 * f(3, 4),
          r234 * f(1, 4) - r124 * f(3, 4), r134 * f(2, 3) - r123 * f(3, 4), r134 * f(2, 4) - r124 * f(3, 4)};
}

template <class K>
std::vector<Polynomial<K>> observation_quadrics(const PetriSystemG6<K>& sys) {
  const auto f = build_g6_quadrics(sys);
  auto r = [&](int a, int b, int c) { return sys.rho_of(a, b, c); };
  std::vector<Polynomial<K>> out;
  std::array<int, 4> p{1, 2, 3, 4};
  do {
    const auto [i, j, k, l] = p;
    out.push_back(r(i, j, k) * f(l, j) - r(l, j, k) * f(i, j));
    out.push_back(K(r(i, k, l) * r(j, k, l)) * f(i, j) - K(r(i, j, k) * r(i, j, l)) * f(k, l));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <class K>
RhoGraph rho_graph(const PetriSystemG6<K>& sys) {
  RhoGraph g;
  std::array<int, 5> parent;
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [t, v] : sys.rho) {
    if (is_zero(v)) continue;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        g.edges.insert({t[a], t[b]});
        parent[find(t[a])] = find(t[b]);
      }
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int v = 1; v <= 4; ++v) comps[find(v)].push_back(v);
  for (auto& [root, c] : comps) g.components.push_back(std::move(c));
  std::sort(g.components.begin(), g.components.end());
  return g;
}

template <class K>
QuadricTable<K> petri_quadrics(const GroebnerBasis<K>& G) {
  const auto& r = G.ring();
  QuadricTable<K> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      const Monomial lead = (var(r, i) * var(r, j)).leading_monomial();
      auto it = std::find_if(G.elements().begin(), G.elements().end(),
                             [&](const Polynomial<K>& g) { return g.leading_monomial() == lead; });
      if (it == G.elements().end()) throw std::invalid_argument("basis has no quadric with leading term x" +
                                                                std::to_string(i) + "*x" + std::to_string(j));
      out.set(i, j, *it);
    }
  }
  return out;
}

template <class K>
RhoGraph rho_support_graph(const QuadricTable<K>& f) {
  const auto& r = f(1, 2).ring();
  const std::size_t x0 = r->index("x0"), x5 = r->index("x5");
  auto sys = PetriSystemG6<K>::zero(r);
  for (const auto& [p, poly] : f.entries()) {
    for (int k = 1; k <= 4; ++k) {
      if (k == p.first || k == p.second) continue;
      const std::size_t xk = r->index("x" + std::to_string(k));
      for (const auto& t : poly.terms()) {
        if (t.monomial.degree() == 2 && t.monomial[xk] == 1 && (t.monomial[x0] == 1 || t.monomial[x5] == 1)) {
          sys.set_rho(k, p.first, p.second, r->one());
        }
      }
    }
  }
  return rho_graph(sys);
}

template <class K>
PetriSystemG6<K> rho_zero_system(const QuadricTable<K>& f) {
  const auto& r = f(1, 2).ring();
  auto sys = PetriSystemG6<K>::zero(r);
  const std::size_t x0 = r->index("x0"), x5 = r->index("x5");
  for (const auto& [p, poly] : f.entries()) {
    const auto [i, j] = p;
    const auto bad = [&] {
      return std::invalid_argument("f" + std::to_string(i) + std::to_string(j) + " is not a rho = 0 Petri quadric");
    };
    const Monomial lead = (var(r, i) * var(r, j)).leading_monomial();
    Polynomial<K> ai(r), aj(r), q(r);
    for (const auto& t : poly.terms()) {
      if (t.monomial.degree() != 2) throw bad();
      if (t.monomial == lead) {
        if (!FieldTraits<K>::is_one(t.coefficient)) throw bad();
        continue;
      }
      const unsigned tail = t.monomial[x0] + t.monomial[x5];
      if (tail == 2) {
        q -= Polynomial<K>::monomial(r, t.coefficient, t.monomial);
        continue;
      }
      Monomial rest = t.monomial;
      const std::size_t xi = r->index("x" + std::to_string(i)), xj = r->index("x" + std::to_string(j));
      if (tail != 1 || (rest[xi] != 1 && rest[xj] != 1)) throw bad();
      const std::size_t own = rest[xi] == 1 ? xi : xj;
      rest.set(own, 0);
      (own == xi ? ai : aj) -= Polynomial<K>::monomial(r, t.coefficient, rest);
    }
    sys.a_diag[{i, i, j}] = ai;
    sys.a_diag[{j, i, j}] = aj;
    sys.q[p] = q;
  }
  return sys;
}

template <class K>
PetriSystemG6<K> relabel(const PetriSystemG6<K>& sys, const Permutation& sigma) {
  std::array<int, 4> check = sigma;
  std::sort(check.begin(), check.end());
  if (check != std::array<int, 4>{1, 2, 3, 4}) throw std::invalid_argument("relabel: not a permutation of 1..4");
  auto s = [&](int k) { return sigma[k - 1]; };
  PetriSystemG6<K> out;
  out.ring = sys.ring;
  for (const auto& [t, v] : sys.rho) out.rho[triple_key(s(t[0]), s(t[1]), s(t[2]))] = v;
  for (int k = 1; k <= 4; ++k) out.alpha[s(k) - 1] = sys.alpha[k - 1];
  for (const auto& [t, f] : sys.a_diag) {
    const IndexPair p = pair_key(s(t[1]), s(t[2]));
    out.a_diag[{s(t[0]), p.first, p.second}] = f;
  }
  for (const auto& [p, f] : sys.q) out.q[pair_key(s(p.first), s(p.second))] = f;
  if (sys.b) {
    out.b.emplace();
    for (const auto& [p, v] : *sys.b) (*out.b)[pair_key(s(p.first), s(p.second))] = v;
  }
  return out;
}

template <class K>
Permutation normalize_numbering(const PetriSystemG6<K>& sys) {
  Permutation sigma{1, 2, 3, 4};
  do {
    // After relabeling, rho'_{123} = rho_{tau(1) tau(2) tau(3)} with tau = sigma^-1.
    std::array<int, 5> tau{};
    for (int k = 1; k <= 4; ++k) tau[sigma[k - 1]] = k;
    if (!is_zero(sys.rho_of(tau[1], tau[2], tau[3])) && !is_zero(sys.rho_of(tau[1], tau[2], tau[4]))) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  throw NumberingError("no renumbering makes rho123 and rho124 nonzero; the ideal is not generated by quadrics",
                       rho_graph(sys));
}

template <class K>
PetriSystemG6<K> random_system_g6(const Ring<K>& ring, std::mt19937_64& rng) {
  const std::size_t x0 = ring->index("x0"), x5 = ring->index("x5");
  auto sys = PetriSystemG6<K>::zero(ring);
  for (const IndexTriple& t : {IndexTriple{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}) {
    sys.rho[t] = random_nonzero<K>(ring->field(), rng);
  }
  for (auto& a : sys.alpha) {
    do {
      a = random_binary_form(ring, x0, x5, 1, rng);
    } while (a.is_zero());
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      sys.a_diag[{i, i, j}] = random_binary_form(ring, x0, x5, 1, rng);
      sys.a_diag[{j, i, j}] = random_binary_form(ring, x0, x5, 1, rng);
      sys.q[{i, j}] = random_binary_form(ring, x0, x5, 2, rng);
    }
  }
  return sys;
}

#define CANONLAB_INSTANTIATE(K)                                                                  \
  template class QuadricTable<K>;                                                                \
  template struct PetriSystemG5<K>;                                                              \
  template struct PetriSystemG6<K>;                                                              \
  template void validate<K>(const PetriSystemG5<K>&);                                            \
  template void validate<K>(const PetriSystemG6<K>&);                                            \
  template PetriSystemG6<K> rho_zero_system<K>(const QuadricTable<K>&);                          \
  template QuadricTable<K> build_g5_quadrics<K>(const PetriSystemG5<K>&);                        \
  template QuadricTable<K> build_g6_quadrics<K>(const PetriSystemG6<K>&);                        \
  template Polynomial<K> dependence_relation<K>(const PetriSystemG6<K>&);                        \
  template SurfaceQuadrics<K> surface_quadrics<K>(const PetriSystemG6<K>&);                      \
  template std::vector<Polynomial<K>> fprime_basis<K>(const PetriSystemG6<K>&);                  \
  template std::vector<Polynomial<K>> observation_quadrics<K>(const PetriSystemG6<K>&);          \
  template RhoGraph rho_graph<K>(const PetriSystemG6<K>&);                                       \
  template QuadricTable<K> petri_quadrics<K>(const GroebnerBasis<K>&);                           \
  template RhoGraph rho_support_graph<K>(const QuadricTable<K>&);                                \
  template PetriSystemG6<K> relabel<K>(const PetriSystemG6<K>&, const Permutation&);             \
  template Permutation normalize_numbering<K>(const PetriSystemG6<K>&);                          \
  template PetriSystemG6<K> random_system_g6<K>(const Ring<K>&, std::mt19937_64&);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
