#include "support.hpp"
#include "corpus.hpp"

#include <algorithm>

#include "canonlab/invariants/hilbert.hpp"
#include "canonlab/invariants/resolution.hpp"
#include "canonlab/invariants/tangent.hpp"
#include "canonlab/polyring/linalg.hpp"

using namespace canonlab;
using namespace canonlab::testing;

namespace {

MonomialIdeal monomial_ideal(const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
  auto r = make_ring<Rational>(vars, FieldSpec::rationals());
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(P(r, g).leading_monomial());
  return MonomialIdeal(vars, MonomialOrder::grevlex(), ms);
}

IntPoly ints(std::initializer_list<long> cs) {
  IntPoly out;
  for (long c : cs) out.emplace_back(c);
  return out;
}

template <class K>
void check_resolution(const Ideal<K>& I) {
  const auto F = free_resolution(I);
  CHECK(is_complex(F));
  CHECK(is_minimal(F));
  CHECK(F.length() <= I.ring()->nvars());
  const auto B = betti_diagram(F);
  CHECK(B.alternating_sums() == hilbert_data(I).numerator);
}

}  // namespace

TEST_CASE("Hilbert numerators of monomial ideals") {
  const auto v6 = canonical_variables(6);
  const auto v5 = canonical_variables(5);
  CHECK(hilbert_series_numerator(MonomialIdeal(v6, MonomialOrder::grevlex(), {})) == ints({1}));
  const auto s0 = monomial_ideal(v5, {"x1*x2", "x1*x3", "x2*x3"});
  CHECK(hilbert_series_numerator(s0) == ints({1, 0, -3, 2}));
  const auto h = hilbert_data(s0);
  CHECK(h.proj_dimension == 2);
  CHECK(h.degree == 3);

  const auto m2 = monomial_ideal(v6, {"x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x1^2*x5"});
  const auto h2 = hilbert_data(m2);
  CHECK(h2.proj_dimension == 2);
  CHECK(h2.degree == 5);
  const auto m1 = monomial_ideal(v6, {"x1*x2", "x1*x3", "x2*x3", "x2*x4", "x3*x4", "x1*x4^2"});
  CHECK(hilbert_series_numerator(m1) == hilbert_series_numerator(m2));
  // pure powers
  CHECK(hilbert_series_numerator(monomial_ideal(v5, {"x1^2", "x2^3"})) == ints({1, 0, -1, -1, 0, 1}));
  // unit ideal
  CHECK(hilbert_data(monomial_ideal(v5, {"1"})).proj_dimension == -1);
}

TEST_CASE("Hilbert data of the five-conic curve and its surface") {
  auto r = qring(6);
  const auto hc = hilbert_data(curve32(r));
  CHECK(hc.proj_dimension == 1);
  CHECK(hc.degree == 10);
  CHECK(univariate_text(hc.hilbert_polynomial) == "10*t - 5");
  CHECK(hc.arithmetic_genus == 6);

  const auto J = surface32(r);
  const auto hj = hilbert_data(J);
  CHECK(hj.proj_dimension == 2);
  CHECK(hj.degree == 5);

  const auto pts = J + ideal(r, {"x0", "x5"});
  const auto hp = hilbert_data(pts);
  CHECK(hp.proj_dimension == 0);
  CHECK(hp.degree == 5);
  const std::vector<std::vector<Rational>> points = {
      {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {1, 1, 1, 1, 0, 0}};
  for (const auto& p : points) {
    for (const auto& g : J.generators()) REQUIRE(g.evaluate(p) == 0);
  }
}

TEST_CASE("Hilbert function agrees with the linear-algebra count") {
  auto r = qring(6);
  auto rp = pring(6);
  std::mt19937_64 rng(3);
  std::vector<Ideal<Rational>> corpus = {curve32(r), surface32(r), ex36(r), ex37(r),
                                         surface32(r) + ideal(r, {"x0", "x5"})};
  for (const auto& I : corpus) {
    const auto h = hilbert_data(I);
    for (unsigned d = 0; d <= 5; ++d) {
      REQUIRE(hilbert_function(h.numerator, 6, d) == hilbert_function_oracle(I, d));
    }
    for (int d = h.regularity_index; d < h.regularity_index + 4; ++d) {
      REQUIRE(Rational(hilbert_function(h.numerator, 6, static_cast<unsigned>(d))) == h.hp(d));
    }
  }
  Ideal<Zp> rnd(rp, {random_form(rng, rp, 2), random_form(rng, rp, 2), random_form(rng, rp, 3, 30)});
  const auto h = hilbert_data(rnd);
  for (unsigned d = 0; d <= 5; ++d) REQUIRE(hilbert_function(h.numerator, 6, d) == hilbert_function_oracle(rnd, d));
}

TEST_CASE("Betti diagram of the degree-5 surface is Gorenstein") {
  auto r = qring(6);
  const auto B = betti_diagram(surface32(r));
  CHECK(B.rows() == std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 5, 5, 0}, {0, 0, 0, 1}});
  CHECK(B.is_self_dual());
  CHECK(B(3, 5) == 1);
  check_resolution(surface32(r));
}

TEST_CASE("Betti diagrams of the two reducible genus-6 curves") {
  auto r = qring(6);
  const auto B6 = betti_diagram(ex36(r));
  CHECK(B6.rows() == std::vector<std::vector<long>>{{1, 0, 0, 0, 0}, {0, 6, 6, 1, 0}, {0, 1, 6, 6, 1}, {0, 0, 0, 1, 1}});
  CHECK(B6(1, 3) == 1);
  CHECK_FALSE(B6.is_self_dual());
  const auto B7 = betti_diagram(ex37(r));
  CHECK(B7.rows() == std::vector<std::vector<long>>{{1, 0, 0, 0, 0}, {0, 6, 5, 1, 0}, {0, 0, 6, 6, 1}, {0, 0, 0, 1, 1}});
  CHECK(B7(1, 3) == 0);
  CHECK_FALSE(B7.is_self_dual());
  check_resolution(ex36(r));
  check_resolution(ex37(r));
  check_resolution(curve32(r));
}

TEST_CASE("three general quadrics give the Koszul diagram") {
  std::mt19937_64 rng(8);
  auto r = pring(5);
  Ideal<Zp> I(r, {random_form(rng, r, 2), random_form(rng, r, 2), random_form(rng, r, 2)});
  const auto B = betti_diagram(I);
  CHECK(B == BettiDiagram({{{0, 0}, 1}, {{1, 2}, 3}, {{2, 4}, 3}, {{3, 6}, 1}}));
  check_resolution(I);
  const auto h = hilbert_data(I);
  CHECK(h.degree == 8);
  CHECK(h.arithmetic_genus == 5);
}

TEST_CASE("Betti diagram display helpers") {
  const auto B = BettiDiagram::from_rows({{1, 0, 0, 0}, {0, 5, 5, 0}, {0, 0, 0, 1}});
  CHECK(B(1, 2) == 5);
  CHECK(B(2, 3) == 5);
  CHECK(B.display() == "1 - - -\n- 5 5 -\n- - - 1\n");
  CHECK(B.alternating_sums() == ints({1, 0, -5, 5, 0, -1}));
}

TEST_CASE("tangent dimensions") {
  auto r5 = qring(5);
  const auto S0 = ideal(r5, {"x1*x2", "x1*x3", "x2*x3"});
  CHECK(tangent_dim(S0) == 18);
  CHECK(tangent_dim(ideal(r5, {"x0"})) == 4);
  CHECK_THROWS_AS(tangent_dim(ideal(r5, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x0"})), NotSaturatedError);

  auto r6 = qring(6);
  CHECK(tangent_dim(ex36(r6)) == 50);
  CHECK(tangent_dim(ex37(r6)) == 50);
}

TEST_CASE("tangent dimension is invariant under linear changes of coordinates") {
  std::mt19937_64 rng(12);
  auto r = pring(5);
  const auto S0 = ideal(r, {"x1*x2", "x1*x3", "x2*x3"});
  for (int s = 0; s < 3; ++s) {
    std::vector<Polynomial<Zp>> images;
    for (std::size_t i = 0; i < r->nvars(); ++i) images.push_back(random_form(rng, r, 1));
    std::vector<Polynomial<Zp>> gens;
    for (const auto& g : S0.generators()) gens.push_back(substitute_linear<Zp>(g, images));
    REQUIRE(span_dim<Zp>(images) == 5);
    CHECK(tangent_dim(Ideal<Zp>(r, gens)) == 18);
  }
}
