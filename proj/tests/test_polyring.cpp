#include <doctest.h>

#include <random>

#include "canonlab/polyring/poly_io.hpp"

using namespace canonlab;

namespace {

Ring<Rational> g5() { return make_ring<Rational>(canonical_variables(5), FieldSpec::rationals()); }
Ring<Rational> g6() { return make_ring<Rational>(canonical_variables(6), FieldSpec::rationals()); }

Polynomial<Rational> P(const Ring<Rational>& r, const char* s) { return parse_poly(s, r); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned maxe) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<unsigned>(rng() % (maxe + 1)));
  return m;
}

Polynomial<Rational> random_poly(std::mt19937_64& rng, const Ring<Rational>& r, int terms) {
  std::vector<Term<Rational>> ts;
  for (int i = 0; i < terms; ++i) {
    Rational c(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
    c.canonicalize();
    ts.push_back({c, random_monomial(rng, r->nvars(), 2)});
  }
  return Polynomial<Rational>::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("parse basic shapes") {
  auto r = g5();
  auto f = P(r, "x1*x2 - x1*x3");
  CHECK(f.size() == 2);
  CHECK(f.leading_monomial() == Monomial{1, 1, 0, 0, 0});
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "0").degree() == std::nullopt);
  CHECK(P(r, "-x1^2 + 3/6*x0").terms()[1].coefficient == Rational(1, 2));
  CHECK(P(r, "(x1 + x0)*(x1 - x0)") == P(r, "x1^2 - x0^2"));
  CHECK(to_string(P(r, "x0*x1 + x1*x0")) == "2*x1*x0");
}

TEST_CASE("quadric f12 from the second genus-5 intersection example") {
  auto r = g6();
  auto f = P(r, "x1*x2 + x3*x0 + x3*x5 + (1/4)*x4*x5 - (1/2)*x4*x0 + x0*x5");
  CHECK(f.size() == 6);
  CHECK(f.is_homogeneous());
  CHECK(f.coefficient(Monomial{0, 0, 0, 1, 1, 0}) == Rational(1, 4));
  CHECK(f.coefficient(Monomial{0, 0, 0, 1, 0, 1}) == Rational(-1, 2));
  CHECK(to_string(f) == "x1*x2 + x3*x5 + 1/4*x4*x5 + x3*x0 - 1/2*x4*x0 + x5*x0");
}

TEST_CASE("parse errors carry position") {
  auto r = g5();
  try {
    (void)P(r, "x1 +\n  x9");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(P(r, "x1 + 1/0"), ParseError);
  CHECK_THROWS_AS(P(r, "x1 +"), ParseError);
  CHECK_THROWS_AS(P(r, "x1 x2"), ParseError);
  CHECK_THROWS_AS(P(r, "(x1"), ParseError);
  CHECK_THROWS_AS(P(r, "y1"), ParseError);
}

TEST_CASE("grevlex comparisons") {
  const auto o = MonomialOrder::grevlex();
  // x1 x2 vs x3^2 in (x1,x2,x3,x4,x0)
  CHECK(compare_monomials(o, Monomial{1, 1, 0, 0, 0}, Monomial{0, 0, 2, 0, 0}) > 0);
  // x3^2 x4 vs x3 x4^2 in (x1..x5,x0)
  CHECK(compare_monomials(o, Monomial{0, 0, 2, 1, 0, 0}, Monomial{0, 0, 1, 2, 0, 0}) > 0);
  Monomial m{1, 0, 3, 0, 2};
  CHECK(compare_monomials(o, m, m) == 0);
  CHECK_THROWS(compare_monomials(o, Monomial{1, 0}, Monomial{1, 0, 0}));
  // block order: anything with x1 beats anything without
  const auto b = MonomialOrder::block(1, MonomialOrder::grevlex());
  CHECK(b.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}) > 0);
  CHECK(MonomialOrder::parse(b.name()) == b);
}

TEST_CASE("order axioms on random pairs") {
  std::mt19937_64 rng(7);
  const std::vector<MonomialOrder> orders = {
      MonomialOrder::grevlex(), MonomialOrder::lex(),
      MonomialOrder::block(2, MonomialOrder::grevlex()), MonomialOrder::block(1, MonomialOrder::lex())};
  const std::size_t n = 6;
  const Monomial one(n);
  for (const auto& o : orders) {
    for (int s = 0; s < 10000; ++s) {
      Monomial a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3), c = random_monomial(rng, n, 2);
      const auto ab = o.compare(a, b);
      REQUIRE((ab == 0) == (a == b));
      REQUIRE(o.compare(b, a) == (0 <=> ab));
      REQUIRE(o.compare(a * c, b * c) == ab);
      if (!a.is_one()) REQUIRE(o.compare(a, one) > 0);
    }
    // block orders: eliminated variable dominates
    if (o.kind() == MonomialOrder::Kind::Block) {
      for (int s = 0; s < 1000; ++s) {
        Monomial a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3);
        a.set(0, a[0] + 1);
        b.set(0, 0);
        b.set(1, 0);
        REQUIRE(o.compare(a, b) > 0);
      }
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  auto r = g5();
  CHECK(P(r, "x1 + x0") * P(r, "x1 - x0") == P(r, "x1^2 - x0^2"));
  CHECK((P(r, "x1") - P(r, "x1")).is_zero());
  CHECK(scale(P(r, "x1 + 2"), Rational(1, 2)) == P(r, "1/2*x1 + 1"));
  CHECK(P(r, "2*x1 + 4*x0").monic() == P(r, "x1 + 2*x0"));
  CHECK(divide_exact(P(r, "x1^2 - x0^2"), P(r, "x1 - x0")) == P(r, "x1 + x0"));
  CHECK_THROWS(divide_exact(P(r, "x1^2 + x0^2"), P(r, "x1 - x0")));
  auto other = g6();
  CHECK_THROWS(P(r, "x1") + P(other, "x1"));
}

TEST_CASE("canonical form and print/parse round trip on random input") {
  std::mt19937_64 rng(11);
  auto r = g6();
  for (int s = 0; s < 300; ++s) {
    auto a = random_poly(rng, r, 5), b = random_poly(rng, r, 4), c = random_poly(rng, r, 3);
    // two expression trees for the same value
    auto lhs = (a + b) * c;
    auto rhs = c * b + a * c;
    REQUIRE(lhs == rhs);
    REQUIRE(std::vector(lhs.terms().begin(), lhs.terms().end()) ==
            std::vector(rhs.terms().begin(), rhs.terms().end()));
    for (std::size_t i = 1; i < lhs.size(); ++i) {
      REQUIRE(r->order().greater(lhs.terms()[i - 1].monomial, lhs.terms()[i].monomial));
    }
    REQUIRE(parse_poly(to_string(lhs), r) == lhs);
    REQUIRE(parse_poly(to_string(a), r) == a);
  }
}

TEST_CASE("substitute_linear is a ring homomorphism") {
  std::mt19937_64 rng(5);
  auto r = g6();
  // x1 <-> x3, x2 <-> x4
  std::vector<Polynomial<Rational>> swap = {P(r, "x3"), P(r, "x4"), P(r, "x1"), P(r, "x2"), P(r, "x5"), P(r, "x0")};
  auto f34 = P(r, "x3*x4 - (x1 + x2)*(x0 + x5) - x0*x5");
  auto f12 = P(r, "x1*x2 - (x3 + x4)*(x0 + x5) - x0*x5");
  CHECK(substitute_linear<Rational>(f34, swap) == f12);
  for (int s = 0; s < 100; ++s) {
    std::vector<Polynomial<Rational>> images;
    for (std::size_t i = 0; i < r->nvars(); ++i) images.push_back(random_poly(rng, r, 3).homogeneous_part(1));
    auto a = random_poly(rng, r, 4), b = random_poly(rng, r, 4);
    auto phi = [&](const Polynomial<Rational>& f) { return substitute_linear<Rational>(f, images); };
    REQUIRE(phi(a * b) == phi(a) * phi(b));
    REQUIRE(phi(a + b) == phi(a) + phi(b));
  }
}

TEST_CASE("prime field axioms") {
  const auto F = FieldSpec::prime(kDefaultPrime);
  std::mt19937_64 rng(3);
  for (int s = 0; s < 2000; ++s) {
    Zp a = FieldTraits<Zp>::random(F, rng), b = FieldTraits<Zp>::random(F, rng), c = FieldTraits<Zp>::random(F, rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).value() == 0);
    if (a.value() != 0) REQUIRE((a * a.inverse()).value() == 1);
  }
  CHECK_THROWS(FieldSpec::prime(32004));
  CHECK_THROWS(Zp(1, 7) + Zp(1, 11));
  CHECK(FieldTraits<Zp>::from_fraction(F, 1, 2) * Zp(2, kDefaultPrime) == Zp(1, kDefaultPrime));
  CHECK_THROWS(FieldTraits<Zp>::from_fraction(F, 1, kDefaultPrime));
}

TEST_CASE("rationals match integers when denominators are one") {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 1000; ++s) {
    long a = static_cast<long>(rng() % 2001) - 1000, b = static_cast<long>(rng() % 2001) - 1000;
    REQUIRE(Rational(a) * Rational(b) == Rational(a * b));
    REQUIRE(Rational(a) + Rational(b) == Rational(a + b));
    REQUIRE(Rational(a) - Rational(b) == Rational(a - b));
  }
}

TEST_CASE("prime-field polynomials print in the symmetric range") {
  auto r = make_ring<Zp>(canonical_variables(5), FieldSpec::prime(7));
  auto f = parse_poly("x1 + 6*x2 + 1/2*x0", r);
  CHECK(to_string(f) == "x1 - x2 - 3*x0");
  CHECK(parse_poly(to_string(f), r) == f);
}
