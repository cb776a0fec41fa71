#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>

namespace canonlab {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with inline storage; one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Total multiplicative order on monomials of a fixed ring.
///
/// GrevLex ranks by total degree first and then prefers the smaller exponent
/// on the last variable where the two differ. Block(k, inner) compares the
/// first k variables by grevlex and breaks ties with `inner` on the rest, so
/// any monomial involving an eliminated variable beats every monomial that
/// does not.
class MonomialOrder {
 public:
  enum class Kind { GrevLex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder block(std::size_t eliminated, const MonomialOrder& inner);

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  const MonomialOrder& inner() const { return *inner_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  /// Parses "grevlex", "lex" or "block(k,<order>)".
  static MonomialOrder parse(const std::string& text);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  std::strong_ordering compare_from(const Monomial& a, const Monomial& b, std::size_t begin) const;

  Kind kind_;
  std::size_t block_ = 0;
  std::shared_ptr<const MonomialOrder> inner_;
};

/// Throws std::invalid_argument when the monomials belong to rings of different size.
std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                       const Monomial& b);

}  // namespace canonlab
