#include "canonlab/lab/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "canonlab/polyring/linalg.hpp"

namespace canonlab {

namespace {

template <class K>
Polynomial<K> pf4(const FormMatrix<K>& A, const std::array<std::size_t, 4>& r) {
  const auto m = [&](int a, int b) -> const Polynomial<K>& { return A[r[a]][r[b]]; };
  return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
}

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class K>
using Dense = std::vector<std::vector<K>>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(Dense<K>& m, const K& one) {
  std::vector<std::size_t> pivots;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && is_zero(m[r][c])) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    const K inv = K(one / m[row][c]);
    for (auto& e : m[row]) e = K(e * inv);
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o == row || is_zero(m[o][c])) continue;
      const K f = m[o][c];
      for (std::size_t k = c; k < cols; ++k) m[o][k] = K(m[o][k] - f * m[row][k]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

/// Basis of {v : m v = 0}.
template <class K>
Dense<K> nullspace(Dense<K> m, std::size_t cols, const K& zero, const K& one) {
  const auto pivots = rref(m, one);
  Dense<K> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<K> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K(-m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
K evaluate(const Monomial& m, const std::vector<K>& point, const K& one) {
  K v = one;
  for (std::size_t i = 0; i < point.size(); ++i) {
    for (unsigned e = 0; e < m[i]; ++e) v = K(v * point[i]);
  }
  return v;
}

/// Conics c_m with c_m(p_n) = delta_mn, or nothing if the points are special.
template <class K>
std::optional<std::vector<Polynomial<K>>> interpolating_conics(const Ring<K>& plane, std::mt19937_64& rng) {
  const K zero = plane->zero(), one = plane->one();
  const auto mons = monomials_of_degree(3, 2, plane->order());
  Dense<K> aug(6, std::vector<K>(12, zero));
  for (std::size_t n = 0; n < 6; ++n) {
    std::vector<K> p;
    for (int c = 0; c < 3; ++c) p.push_back(FieldTraits<K>::random(plane->field(), rng));
    for (std::size_t j = 0; j < 6; ++j) aug[n][j] = evaluate(mons[j], p, one);
    aug[n][6 + n] = one;
  }
  if (rref(aug, one) != std::vector<std::size_t>{0, 1, 2, 3, 4, 5}) return std::nullopt;
  std::vector<Polynomial<K>> conics;
  for (std::size_t m = 0; m < 6; ++m) {
    std::vector<Term<K>> ts;
    for (std::size_t j = 0; j < 6; ++j) ts.push_back({aug[j][6 + m], mons[j]});
    conics.push_back(Polynomial<K>::from_terms(plane, std::move(ts)));
  }
  return conics;
}

}  // namespace

template <class K>
Ideal<K> pfaffian_ideal(const FormMatrix<K>& A) {
  if (A.size() != 5) throw std::invalid_argument("pfaffian_ideal: matrix must be 5x5");
  for (const auto& row : A) {
    if (row.size() != 5) throw std::invalid_argument("pfaffian_ideal: matrix must be 5x5");
  }
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const auto& e = A[i][j];
      if (!(e + A[j][i]).is_zero()) throw std::invalid_argument("pfaffian_ideal: matrix is not skew-symmetric");
      if (!e.is_zero() && (!e.is_homogeneous() || *e.degree() != 1)) {
        throw std::invalid_argument("pfaffian_ideal: entries must be linear forms");
      }
    }
  }
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<std::size_t, 4> rest{};
    std::size_t n = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j != i) rest[n++] = j;
    }
    auto p = pf4(A, rest);
    gens.push_back(i % 2 == 0 ? p : -p);
  }
  return Ideal<K>(A[0][0].ring(), std::move(gens));
}

template <class K>
Ideal<K> complete_intersection_curve_g6(const FormMatrix<K>& A, const Polynomial<K>& Q) {
  return pfaffian_ideal(A) + Ideal<K>(Q.ring(), {Q});
}

template <class K>
Ideal<K> complete_intersection_curve_g5(const std::array<Polynomial<K>, 3>& quadrics) {
  return Ideal<K>(quadrics[0].ring(), {quadrics.begin(), quadrics.end()});
}

template <class K>
Ideal<K> residual_curve(const Ideal<K>& surface, const Polynomial<K>& cubic, const std::vector<Ideal<K>>& lines) {
  if (lines.empty()) throw std::invalid_argument("residual_curve: no lines given");
  for (const auto& L : lines) {
    if (!ideal_membership(cubic, L)) throw std::invalid_argument("residual_curve: cubic does not contain the line");
  }
  if (ideal_membership(cubic, surface)) throw std::invalid_argument("residual_curve: cubic contains the surface");
  const Ideal<K> union_of_lines = lines.size() == 1 ? lines[0] : intersect<K>(lines);
  return saturate(surface + Ideal<K>(cubic.ring(), {cubic}), union_of_lines);
}

template <class K>
Polynomial<K> random_homogeneous(const Ring<K>& ring, unsigned d, std::mt19937_64& rng) {
  std::vector<Term<K>> ts;
  for (auto& m : monomials_of_degree(ring->nvars(), d, ring->order())) {
    ts.push_back({FieldTraits<K>::random(ring->field(), rng), std::move(m)});
  }
  return Polynomial<K>::from_terms(ring, std::move(ts));
}

template <class K>
Polynomial<K> random_linear_form(const Ring<K>& ring, std::mt19937_64& rng) {
  return random_homogeneous(ring, 1, rng);
}

template <class K>
Polynomial<K> random_element(const Ideal<K>& I, unsigned d, std::mt19937_64& rng) {
  Polynomial<K> out(I.ring());
  for (const auto& g : I.generators()) {
    const unsigned e = *g.degree();
    if (e <= d) out += random_homogeneous(I.ring(), d - e, rng) * g;
  }
  return out;
}

template <class K>
FormMatrix<K> random_skew_matrix(const Ring<K>& ring, std::mt19937_64& rng) {
  FormMatrix<K> A(5, std::vector<Polynomial<K>>(5, Polynomial<K>(ring)));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      A[i][j] = random_linear_form(ring, rng);
      A[j][i] = -A[i][j];
    }
  }
  return A;
}

template <class K>
Ideal<K> veronese_through_coordinate_points(const Ring<K>& ring, std::mt19937_64& rng) {
  if (ring->nvars() != 6) throw std::invalid_argument("veronese_through_coordinate_points: need six variables");
  const auto plane = make_ring<K>({"s", "t", "u"}, ring->field());
  const auto quadric_mons = monomials_of_degree(6, 2, ring->order());
  for (;;) {
    const auto conics = interpolating_conics(plane, rng);
    if (!conics) continue;
    MonomialIndex index;
    std::vector<SparseRow<K>> pullbacks;
    for (const auto& m : quadric_mons) {
      Polynomial<K> f = Polynomial<K>::constant(plane, plane->one());
      for (std::size_t v = 0; v < 6; ++v) {
        for (unsigned e = 0; e < m[v]; ++e) f *= (*conics)[v];
      }
      pullbacks.push_back(coefficient_row(f, index));
    }
    Dense<K> M(index.size(), std::vector<K>(quadric_mons.size(), ring->zero()));
    for (std::size_t c = 0; c < pullbacks.size(); ++c) {
      for (const auto& [r, v] : pullbacks[c]) M[r][c] = v;
    }
    const auto kernel = nullspace(std::move(M), quadric_mons.size(), ring->zero(), ring->one());
    if (kernel.size() != 6) continue;
    std::vector<Polynomial<K>> gens;
    for (const auto& v : kernel) {
      std::vector<Term<K>> ts;
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (!is_zero(v[c])) ts.push_back({v[c], quadric_mons[c]});
      }
      gens.push_back(Polynomial<K>::from_terms(ring, std::move(ts)));
    }
    return Ideal<K>(ring, std::move(gens));
  }
}

template <class K>
CurveInvariants curve_invariants(const Ideal<K>& I) {
  CurveInvariants c;
  const auto h = hilbert_data(I);
  c.proj_dimension = h.proj_dimension;
  c.degree = h.degree.get_si();
  if (h.arithmetic_genus) c.arithmetic_genus = h.arithmetic_genus->get_si();
  c.betti = betti_diagram(I);
  c.beta13 = c.betti(1, 3);
  return c;
}

std::vector<LedgerEntry> dimension_ledger(int genus) {
  if (genus != 5 && genus != 6) throw std::invalid_argument("dimension_ledger: genus must be 5 or 6");
  const long g = genus;
  const long n = g - 1;  // ambient P^n
  const long pgl = (n + 1) * (n + 1) - 1;
  const long quadrics = binomial(n + 2, 2);
  const long cubics = binomial(n + 3, 3);
  // Rational normal scrolls of degree n - 1 in P^n.
  const long scroll = (n + 1) * (n + 1) - 7;
  std::vector<LedgerEntry> out;
  out.push_back({"smooth_component_dim", 3 * g - 3 + pgl, "3g - 3 + g^2 - 1"});
  if (genus == 5) {
    // Nets of quadrics: the Grassmannian of 3-planes in H^0(O(2)).
    const long nets = 3 * (quadrics - 3);
    // Cubics in I(S): three quadrics times five linear forms, less two linear syzygies.
    const long through_line = (cubics - (3 + 1) - (3 * (n + 1) - 2)) - 1;
    out.push_back({"H5_prime", nets, "3 * (binom(6,2) - 3)"});
    out.push_back({"H5_doubleprime", scroll + through_line, "scroll_hilb + cubics_through_line"});
    out.push_back({"scroll_hilb", scroll, "5^2 - 7"});
    out.push_back({"cubics_through_line", through_line, "(binom(7,3) - 4 - 13) - 1"});
    return out;
  }
  // Quintic del Pezzo surfaces have finitely many automorphisms.
  const long surfaces = pgl;
  const long quadric_system = (quadrics - 5) - 1;
  // Cubics in I(scroll): six quadrics times six linear forms, less eight linear syzygies.
  const long two_lines = (cubics - 2 * (3 + 1) - (6 * (n + 1) - 8)) - 1;
  const long plane_quintics = binomial(5 + 2, 2) - 1;
  const long veronese = pgl - (3 * 3 - 1);
  out.push_back({"H6_prime", surfaces + quadric_system, "surfaces + quadric_system"});
  out.push_back({"surfaces", surfaces, "6^2 - 1"});
  out.push_back({"quadric_system", quadric_system, "(binom(7,2) - 5) - 1"});
  out.push_back({"cubics_two_lines", two_lines, "(binom(8,3) - 8 - 28) - 1"});
  out.push_back({"veronese_curves", plane_quintics, "binom(7,2) - 1"});
  out.push_back({"quartic_scroll_hilb", scroll, "6^2 - 7"});
  out.push_back({"veronese_hilb", veronese, "(6^2 - 1) - (3^2 - 1)"});
  return out;
}

#define CANONLAB_INSTANTIATE(K)                                                                             \
  template Ideal<K> pfaffian_ideal<K>(const FormMatrix<K>&);                                                \
  template Ideal<K> complete_intersection_curve_g6<K>(const FormMatrix<K>&, const Polynomial<K>&);          \
  template Ideal<K> complete_intersection_curve_g5<K>(const std::array<Polynomial<K>, 3>&);                 \
  template Ideal<K> residual_curve<K>(const Ideal<K>&, const Polynomial<K>&, const std::vector<Ideal<K>>&); \
  template Polynomial<K> random_homogeneous<K>(const Ring<K>&, unsigned, std::mt19937_64&);                 \
  template Polynomial<K> random_linear_form<K>(const Ring<K>&, std::mt19937_64&);                           \
  template Polynomial<K> random_element<K>(const Ideal<K>&, unsigned, std::mt19937_64&);                    \
  template FormMatrix<K> random_skew_matrix<K>(const Ring<K>&, std::mt19937_64&);                           \
  template Ideal<K> veronese_through_coordinate_points<K>(const Ring<K>&, std::mt19937_64&);               \
  template CurveInvariants curve_invariants<K>(const Ideal<K>&);

CANONLAB_INSTANTIATE(Rational)
CANONLAB_INSTANTIATE(Zp)

}  // namespace canonlab
