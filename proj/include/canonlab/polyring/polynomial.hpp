#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "canonlab/polyring/field.hpp"
#include "canonlab/polyring/monomial.hpp"

namespace canonlab {

/// Variables, coefficient field and active monomial order. Polynomials keep
/// a shared pointer to their ring; rings are immutable once built.
template <class K>
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, FieldSpec field,
           MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const FieldSpec& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent

  K scalar(long long n) const { return FieldTraits<K>::from_integer(field_, mpz_class(static_cast<long>(n))); }
  K scalar(const mpz_class& num, const mpz_class& den) const {
    return FieldTraits<K>::from_fraction(field_, num, den);
  }
  K zero() const { return scalar(0); }
  K one() const { return scalar(1); }

  bool same_as(const PolyRing& o) const {
    return names_ == o.names_ && field_ == o.field_ && order_ == o.order_;
  }

 private:
  std::vector<std::string> names_;
  FieldSpec field_;
  MonomialOrder order_;
};

template <class K>
using Ring = std::shared_ptr<const PolyRing<K>>;

template <class K>
Ring<K> make_ring(std::vector<std::string> variables, FieldSpec field,
                  MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing<K>>(std::move(variables), field, std::move(order));
}

/// Same variables and field, different order.
template <class K>
Ring<K> with_order(const Ring<K>& ring, const MonomialOrder& order) {
  return make_ring<K>(ring->variables(), ring->field(), order);
}

/// Genus-g canonical coordinates: (x1..x4, x0) for g = 5 and (x1..x5, x0) for g = 6.
std::vector<std::string> canonical_variables(int genus);

template <class K>
struct Term {
  K coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly decreasing in the
/// ring's order, no zero coefficients. The zero polynomial has no terms and
/// no degree.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring<K> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring<K>& ring, const K& c);
  static Polynomial variable(const Ring<K>& ring, std::size_t index);
  static Polynomial variable(const Ring<K>& ring, std::string_view name);
  static Polynomial monomial(const Ring<K>& ring, const K& c, const Monomial& m);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(const Ring<K>& ring, std::vector<Term<K>> terms);
  /// Trusts that `terms` is already canonical for `ring`.
  static Polynomial from_sorted_terms(const Ring<K>& ring, std::vector<Term<K>> terms);

  const Ring<K>& ring() const { return ring_; }
  std::span<const Term<K>> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term<K>& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const K& leading_coefficient() const { return leading_term().coefficient; }

  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;
  bool uses_variable(std::size_t index) const;
  K coefficient(const Monomial& m) const;
  Polynomial homogeneous_part(unsigned d) const;
  K evaluate(std::span<const K> point) const;

  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const K& c);
  /// this += c * m * g, merged in one pass.
  Polynomial& add_scaled(const K& c, const Monomial& m, const Polynomial& g);
  Polynomial times_term(const K& c, const Monomial& m) const;
  /// Removes and returns the leading term; the polynomial must be nonzero.
  Term<K> pop_leading_term();

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const K& c) { return a *= c; }
  friend Polynomial operator*(const K& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && (a.ring_ == b.ring_ || (a.ring_ && b.ring_ && a.ring_->same_as(*b.ring_)));
  }

 private:
  void require_same_ring(const Polynomial& o) const;

  Ring<K> ring_;
  std::vector<Term<K>> terms_;
};

/// Throws std::invalid_argument unless both rings carry the same variables, field and order.
template <class K>
void require_same_ring(const Ring<K>& a, const Ring<K>& b);

template <class K>
Polynomial<K> add(const Polynomial<K>& a, const Polynomial<K>& b) {
  return a + b;
}
template <class K>
Polynomial<K> subtract(const Polynomial<K>& a, const Polynomial<K>& b) {
  return a - b;
}
template <class K>
Polynomial<K> multiply(const Polynomial<K>& a, const Polynomial<K>& b) {
  return a * b;
}
template <class K>
Polynomial<K> scale(const Polynomial<K>& a, const K& c) {
  return a * c;
}

/// Ring homomorphism sending variable i to images[i] (one image per variable).
template <class K>
Polynomial<K> substitute_linear(const Polynomial<K>& f, std::span<const Polynomial<K>> images);

/// Re-expresses `f` in `target`, matching variables by name. Throws if `f`
/// uses a variable `target` does not have.
template <class K>
Polynomial<K> map_to_ring(const Polynomial<K>& f, const Ring<K>& target);

template <class K>
std::vector<Polynomial<K>> map_to_ring(std::span<const Polynomial<K>> fs, const Ring<K>& target);

/// Exact quotient f / h; throws std::domain_error when h does not divide f.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& h);

/// All monomials of total degree d in n variables, in decreasing order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d, const MonomialOrder& order);

}  // namespace canonlab
