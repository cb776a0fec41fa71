#pragma once

#include <string>
#include <vector>

#include "canonlab/groebner/groebner.hpp"
#include "canonlab/polyring/linalg.hpp"
#include "canonlab/polyring/poly_io.hpp"

namespace canonlab::testing {

// f_ij = x_i x_j - (x_k + x_l)(x0 + x5) - x0 x5 with {i,j,k,l} = {1,2,3,4}
inline std::string f32(int i, int j) {
  int rest[2], n = 0;
  for (int s = 1; s <= 4; ++s) {
    if (s != i && s != j) rest[n++] = s;
  }
  return "x" + std::to_string(i) + "*x" + std::to_string(j) + " - (x" + std::to_string(rest[0]) + " + x" +
         std::to_string(rest[1]) + ")*(x0 + x5) - x0*x5";
}

template <class K>
Polynomial<K> f(const Ring<K>& r, int i, int j) {
  return parse_poly<K>(f32(i, j), r);
}

template <class K>
Ideal<K> ideal_of_texts(const Ring<K>& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<K>> g;
  for (const char* s : gens) g.push_back(parse_poly<K>(s, r));
  return Ideal<K>(r, std::move(g));
}

template <class K>
Ideal<K> curve32(const Ring<K>& r) {
  std::vector<Polynomial<K>> g;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) g.push_back(f(r, i, j));
  }
  return Ideal<K>(r, std::move(g));
}

// the six quadrics F_1..F_6 with every rho equal to 1
template <class K>
Ideal<K> surface32(const Ring<K>& r) {
  return Ideal<K>(r, {f(r, 1, 2) - f(r, 1, 4), f(r, 2, 3) - f(r, 3, 4), f(r, 1, 3) - f(r, 1, 4),
                      f(r, 2, 3) - f(r, 2, 4), f(r, 1, 2) - f(r, 2, 4), f(r, 1, 3) - f(r, 3, 4)});
}

inline Ideal<Rational> ex36(const Ring<Rational>& r) {
  auto c1 = ideal_of_texts(r, {"x1*x2 - (x5 - x0)*x1 + (x0 + x5)*x3", "x1*x3 + (x0 + x5)*x2",
                               "x2*x3 + (x0 + x5)*x1 + (4*x5 - x0)*x3", "x4"});
  return intersect(c1, ideal_of_texts(r, {"x1", "x2", "x3", "x4*x5 - 2*x4*x0 + 4*x0*x5"}));
}

inline Ideal<Rational> ex37(const Ring<Rational>& r) {
  auto c1 = ideal_of_texts(r, {"x1*x2 + (x0 + x5)*x3 + x0*x5", "x1*x3 + (x0 + x5)*x2", "x2*x3 + (x0 + x5)*x1", "x4"});
  return intersect(c1, ideal_of_texts(r, {"x1", "x2", "x3", "x4*x5 - 2*x4*x0 + 4*x0*x5"}));
}

// dim R_d - rank of the degree-d multiples of the generators
template <class K>
mpz_class hilbert_function_oracle(const Ideal<K>& I, unsigned d) {
  const auto& r = I.ring();
  std::vector<Polynomial<K>> span;
  for (const auto& g : I.generators()) {
    const unsigned e = *g.degree();
    if (e > d) continue;
    for (const auto& m : monomials_of_degree(r->nvars(), d - e, r->order())) {
      span.push_back(g.times_term(r->one(), m));
    }
  }
  const auto total = monomials_of_degree(r->nvars(), d, r->order()).size();
  return mpz_class(static_cast<unsigned long>(total - span_dim<K>(span)));
}

}  // namespace canonlab::testing
