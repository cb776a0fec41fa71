#include "canonlab/polyring/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace canonlab {

namespace {

std::uint16_t checked_exponent(unsigned e) {
  if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  deg_ = deg_ - exp_[i] + e;
  exp_[i] = checked_exponent(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.exp_[i] = checked_exponent(a.exp_[i] + b.exp_[i]);
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (b.exp_[i] > a.exp_[i]) throw std::domain_error("monomial division is not exact");
    r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  }
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.exp_[i], b.exp_[i]));
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::min(a.exp_[i], b.exp_[i]));
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

MonomialOrder MonomialOrder::block(std::size_t eliminated, const MonomialOrder& inner) {
  MonomialOrder o(Kind::Block);
  o.block_ = eliminated;
  o.inner_ = std::make_shared<const MonomialOrder>(inner);
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  return compare_from(a, b, 0);
}

namespace {

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin,
                                   std::size_t end) {
  unsigned da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare_from(const Monomial& a, const Monomial& b,
                                                 std::size_t begin) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::GrevLex:
      if (begin == 0) {
        // fast path: full-range grevlex with cached degrees
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = n; i-- > 0;) {
          if (a[i] != b[i]) return b[i] <=> a[i];
        }
        return std::strong_ordering::equal;
      }
      return grevlex_range(a, b, begin, n);
    case Kind::Lex:
      for (std::size_t i = begin; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::Block: {
      const std::size_t split = std::min(n, begin + block_);
      if (auto c = grevlex_range(a, b, begin, split); c != 0) return c;
      return inner_->compare_from(a, b, split);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block(" + std::to_string(block_) + "," + inner_->name() + ")";
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.starts_with("block(") && text.ends_with(")")) {
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
      const std::size_t k = std::stoul(text.substr(6, comma - 6));
      return block(k, parse(text.substr(comma + 1, text.size() - comma - 2)));
    }
  }
  throw std::invalid_argument("unknown monomial order '" + text + "'");
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != MonomialOrder::Kind::Block) return true;
  return a.block_ == b.block_ && *a.inner_ == *b.inner_;
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                       const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials from different rings");
  return order.compare(a, b);
}

}  // namespace canonlab
