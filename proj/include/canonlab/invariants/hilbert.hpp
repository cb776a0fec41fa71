#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "canonlab/groebner/groebner.hpp"

namespace canonlab {

/// Monomial ideal kept by its minimal generators, sorted by increasing degree
/// and then decreasing in the order.
class MonomialIdeal {
 public:
  MonomialIdeal(std::vector<std::string> variables, MonomialOrder order, std::vector<Monomial> generators);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  /// Monomials of degree d outside the ideal, decreasing in the order.
  std::vector<Monomial> standard_monomials(unsigned d) const;
  std::vector<std::string> generator_texts() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.variables_ == b.variables_ && a.gens_ == b.gens_;
  }

 private:
  std::vector<std::string> variables_;
  MonomialOrder order_;
  std::vector<Monomial> gens_;
};

template <class K>
MonomialIdeal initial_ideal(const GroebnerBasis<K>& G);
template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& I, const MonomialOrder& order);
template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& I) {
  return initial_ideal(I, I.ring()->order());
}

/// Integer polynomial in t, lowest coefficient first, no trailing zeros.
using IntPoly = std::vector<mpz_class>;

/// N(t) with HS_{R/M}(t) = N(t) / (1 - t)^n, by pivot recursion on M.
IntPoly hilbert_series_numerator(const MonomialIdeal& M);

/// dim (R/M)_d read off the numerator.
mpz_class hilbert_function(const IntPoly& numerator, std::size_t nvars, unsigned d);

struct HilbertData {
  int proj_dimension = -1;  // -1 for the empty zero set
  mpz_class degree = 0;
  std::vector<Rational> hilbert_polynomial;  // coefficients in t, lowest first
  std::optional<mpz_class> arithmetic_genus;  // when proj_dimension >= 0
  IntPoly numerator;
  /// Hilbert function and polynomial agree from this degree on.
  int regularity_index = 0;

  Rational hp(long long t) const;
};

HilbertData hilbert_data(const MonomialIdeal& M);
template <class K>
HilbertData hilbert_data(const Ideal<K>& I);

/// Text form of a polynomial in one variable, e.g. "10*t - 5".
std::string univariate_text(const std::vector<Rational>& coeffs, const std::string& var = "t");
std::string univariate_text(const IntPoly& coeffs, const std::string& var = "t");

}  // namespace canonlab
