#include "canonlab/polyring/field.hpp"

#include <ostream>
#include <tuple>
#include <utility>

namespace canonlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = p;
  return f;
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "Q" : "Fp(" + std::to_string(p) + ")";
}

Zp::Zp(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
  if (modulus == 0) throw std::invalid_argument("Zp: zero modulus");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  v_ = static_cast<std::uint32_t>(r);
}

std::uint32_t Zp::bind(const Zp& o) {
  if (p_ == 0) {
    p_ = o.p_;
  } else if (o.p_ != 0 && o.p_ != p_) {
    throw std::domain_error("Zp: mixing residues of different moduli");
  }
  return p_;
}

Zp& Zp::operator+=(const Zp& o) {
  const std::uint32_t p = bind(o);
  if (p == 0) return *this;
  std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
  if (s >= p) s -= p;
  v_ = static_cast<std::uint32_t>(s);
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  const std::uint32_t p = bind(o);
  if (p == 0) return *this;
  v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) + p - o.v_);
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  const std::uint32_t p = bind(o);
  if (p == 0) return *this;
  v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p);
  return *this;
}

Zp Zp::inverse() const {
  if (v_ == 0) throw std::domain_error("Zp: division by zero");
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return Zp(x0, p_);
}

Zp& Zp::operator/=(const Zp& o) {
  bind(o);
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.value(); }

Rational FieldTraits<Rational>::from_fraction(const FieldSpec&, const mpz_class& num,
                                              const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string FieldTraits<Rational>::abs_text(const Rational& a) {
  Rational b = abs(a);
  if (b.get_den() == 1) return b.get_num().get_str();
  return b.get_num().get_str() + "/" + b.get_den().get_str();
}

Rational FieldTraits<Rational>::random(const FieldSpec&, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return Rational(d(rng));
}

Zp FieldTraits<Zp>::from_integer(const FieldSpec& f, const mpz_class& n) {
  mpz_class r = n % f.p;
  if (r < 0) r += f.p;
  return Zp(static_cast<std::int64_t>(r.get_ui()), f.p);
}

Zp FieldTraits<Zp>::from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
  const Zp d = from_integer(f, den);
  if (d.value() == 0) throw std::domain_error("denominator vanishes in " + f.name());
  return from_integer(f, num) / d;
}

std::string FieldTraits<Zp>::abs_text(const Zp& a) {
  const std::uint32_t v = is_negative(a) ? a.modulus() - a.value() : a.value();
  return std::to_string(v);
}

Zp FieldTraits<Zp>::random(const FieldSpec& f, std::mt19937_64& rng, int) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.p - 1);
  return Zp(d(rng), f.p);
}

}  // namespace canonlab
