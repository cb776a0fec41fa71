#pragma once

#include <doctest.h>

#include <random>

#include "canonlab/groebner/groebner.hpp"
#include "canonlab/polyring/poly_io.hpp"

namespace canonlab::testing {

// Every reduced basis computed anywhere in a test binary is checked to be
// reduced and to satisfy the Buchberger S-pair criterion.
template <class K>
void audit_basis(const GroebnerBasis<K>& gb) {
  const auto el = gb.elements();
  bool reduced = true;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (!FieldTraits<K>::is_one(el[i].leading_coefficient())) reduced = false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : el[i].terms()) {
        if (el[j].leading_monomial().divides(t.monomial)) reduced = false;
      }
    }
  }
  CHECK_MESSAGE(reduced, "basis is not reduced");
  CHECK_MESSAGE(satisfies_buchberger_criterion<K>(el), "basis fails the S-pair criterion");
}

inline int install_audit() {
  groebner_observer<Rational>() = audit_basis<Rational>;
  groebner_observer<Zp>() = audit_basis<Zp>;
  return 0;
}

inline const int kAuditInstalled = install_audit();

inline Ring<Rational> qring(int genus) { return make_ring<Rational>(canonical_variables(genus), FieldSpec::rationals()); }
inline Ring<Zp> pring(int genus, std::uint32_t p = kDefaultPrime) {
  return make_ring<Zp>(canonical_variables(genus), FieldSpec::prime(p));
}

template <class K>
Polynomial<K> P(const Ring<K>& r, const std::string& s) {
  return parse_poly<K>(s, r);
}

template <class K>
Ideal<K> ideal(const Ring<K>& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<K>> g;
  for (const char* s : gens) g.push_back(parse_poly<K>(s, r));
  return Ideal<K>(r, std::move(g));
}

template <class K>
std::vector<std::string> texts(std::span<const Polynomial<K>> ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

inline std::vector<std::string> monomial_texts(const std::vector<Monomial>& ms, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(monomial_text(m, names));
  return out;
}

// Random homogeneous polynomial of degree d with small coefficients.
template <class K>
Polynomial<K> random_form(std::mt19937_64& rng, const Ring<K>& r, unsigned d, int density = 100) {
  std::vector<Term<K>> ts;
  for (const auto& m : monomials_of_degree(r->nvars(), d, r->order())) {
    if (static_cast<int>(rng() % 100) >= density) continue;
    ts.push_back({r->scalar(static_cast<long long>(rng() % 11) - 5), m});
  }
  return Polynomial<K>::from_terms(r, std::move(ts));
}

}  // namespace canonlab::testing
