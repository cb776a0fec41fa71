#include "canonlab/polyring/poly_io.hpp"

#include <cctype>

namespace canonlab {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

template <class K>
class Parser {
 public:
  Parser(std::string_view text, const Ring<K>& ring) : text_(text), ring_(ring) {}

  Polynomial<K> parse() {
    Polynomial<K> p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string uint_token() {
    if (!at_digit()) fail("expected an unsigned integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial<K> poly() {
    bool negate = accept('-');
    Polynomial<K> sum(ring_);
    Polynomial<K> t = term();
    sum += negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        sum += term();
      } else if (accept('-')) {
        sum -= term();
      } else {
        return sum;
      }
    }
  }

  Polynomial<K> term() {
    Polynomial<K> prod = factor();
    while (accept('*')) prod *= factor();
    return prod;
  }

  Polynomial<K> factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = poly();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num(uint_token());
      mpz_class den(1);
      std::size_t den_at = pos_;
      if (accept('/')) {
        skip_ws();
        den_at = pos_;
        den = mpz_class(uint_token());
      }
      try {
        return Polynomial<K>::constant(ring_, ring_->scalar(num, den));
      } catch (const std::domain_error& e) {
        fail_at(e.what(), den_at);
      }
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected variable index after 'x'");
      }
      const std::string name = "x" + uint_token();
      const auto idx = ring_->index_of(name);
      if (!idx) fail_at("unknown variable '" + name + "'", start);
      unsigned e = 1;
      if (accept('^')) {
        const std::string digits = uint_token();
        if (digits.size() > 5 || std::stoul(digits) > 0xFFFF) fail("exponent too large");
        e = static_cast<unsigned>(std::stoul(digits));
      }
      Monomial m(ring_->nvars());
      m.set(*idx, e);
      return Polynomial<K>::monomial(ring_, ring_->one(), m);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring<K>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Polynomial<K> parse_poly(std::string_view text, const Ring<K>& ring) {
  return Parser<K>(text, ring).parse();
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  using T = FieldTraits<K>;
  const auto& names = f.ring()->variables();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = T::is_negative(t.coefficient);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const K mag = neg ? K(-t.coefficient) : t.coefficient;
    if (t.monomial.is_one()) {
      out += T::abs_text(mag);
    } else if (T::is_one(mag)) {
      out += monomial_text(t.monomial, names);
    } else {
      out += T::abs_text(mag) + "*" + monomial_text(t.monomial, names);
    }
  }
  return out;
}

template Polynomial<Rational> parse_poly<Rational>(std::string_view, const Ring<Rational>&);
template Polynomial<Zp> parse_poly<Zp>(std::string_view, const Ring<Zp>&);
template std::string to_string<Rational>(const Polynomial<Rational>&);
template std::string to_string<Zp>(const Polynomial<Zp>&);

}  // namespace canonlab
