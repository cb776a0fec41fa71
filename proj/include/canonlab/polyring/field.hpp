#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace canonlab {

/// Which exact field the coefficients live in.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // only meaningful for PrimeField

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);  // throws std::invalid_argument if p is not prime

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Primes are restricted to < 2^31 so a product of two residues fits in 64 bits.
bool is_prime(std::uint64_t n);

using Rational = mpq_class;

/// Element of Z/p with the modulus carried alongside the value. A
/// default-constructed Zp is an unbound zero that adopts the modulus of
/// whatever it is combined with.
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Zp operator-() const { return Zp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o);

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }

  Zp inverse() const;

 private:
  static Zp raw(std::uint32_t v, std::uint32_t p) {
    Zp z;
    z.v_ = v;
    z.p_ = p;
    return z;
  }
  std::uint32_t bind(const Zp& o);

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

template <class K>
concept ExactField = requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
};

/// Per-scalar glue the generic algorithms need: construction from integers
/// inside a given field, zero tests and text form.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::Rationals;
  static Rational from_integer(const FieldSpec&, const mpz_class& n) { return Rational(n); }
  static Rational from_fraction(const FieldSpec&, const mpz_class& num, const mpz_class& den);
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  /// Sign used when printing; rationals print with their true sign.
  static bool is_negative(const Rational& a) { return sgn(a) < 0; }
  /// Absolute value as "a" or "a/b".
  static std::string abs_text(const Rational& a);
  static Rational random(const FieldSpec&, std::mt19937_64& rng, int bound = 10);
};

template <>
struct FieldTraits<Zp> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::PrimeField;
  static Zp from_integer(const FieldSpec& f, const mpz_class& n);
  static Zp from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);
  static bool is_zero(const Zp& a) { return a.value() == 0; }
  static bool is_one(const Zp& a) { return a.value() == 1; }
  /// Residues print in the symmetric range (-p/2, p/2].
  static bool is_negative(const Zp& a) { return a.value() > a.modulus() / 2; }
  static std::string abs_text(const Zp& a);
  static Zp random(const FieldSpec& f, std::mt19937_64& rng, int bound = 0);
};

template <class K>
bool is_zero(const K& a) {
  return FieldTraits<K>::is_zero(a);
}

}  // namespace canonlab
