#include "support.hpp"

#include <algorithm>
#include <set>

using namespace canonlab;
using namespace canonlab::testing;

namespace {

Ideal<Rational> ex36_c1(const Ring<Rational>& r) {
  return ideal(r, {"x1*x2 - (x5 - x0)*x1 + (x0 + x5)*x3", "x1*x3 + (x0 + x5)*x2",
                   "x2*x3 + (x0 + x5)*x1 + (4*x5 - x0)*x3", "x4"});
}

Ideal<Rational> ex37_c1(const Ring<Rational>& r) {
  return ideal(r, {"x1*x2 + (x0 + x5)*x3 + x0*x5", "x1*x3 + (x0 + x5)*x2", "x2*x3 + (x0 + x5)*x1", "x4"});
}

Ideal<Rational> conic_c2(const Ring<Rational>& r) {
  return ideal(r, {"x1", "x2", "x3", "x4*x5 - 2*x4*x0 + 4*x0*x5"});
}

}  // namespace

TEST_CASE("normal form basics") {
  auto r = qring(6);
  auto f = P(r, "x1*x2 - x3*x0 + 2*x5^2");
  std::vector<Polynomial<Rational>> self = {f};
  CHECK(normal_form<Rational>(f, self).is_zero());
  std::vector<Polynomial<Rational>> b = {P(r, "x1*x2")};
  CHECK(normal_form<Rational>(P(r, "x1*x2*x3"), b).is_zero());
  CHECK(normal_form<Rational>(Polynomial<Rational>(r), b).is_zero());
  CHECK(normal_form<Rational>(P(r, "x1*x2 + x3^2"), b) == P(r, "x3^2"));
}

TEST_CASE("division records quotients") {
  std::mt19937_64 rng(17);
  auto r = qring(5);
  std::vector<Polynomial<Rational>> basis = {P(r, "x1*x2 - x0^2"), P(r, "x2*x3 + x4*x0"), P(r, "x3^2 - x1*x4")};
  for (int s = 0; s < 50; ++s) {
    auto f = random_form(rng, r, 3, 40);
    auto d = divide<Rational>(f, basis);
    Polynomial<Rational> back = d.remainder;
    for (std::size_t k = 0; k < basis.size(); ++k) back += d.quotients[k] * basis[k];
    REQUIRE(back == f);
    for (const auto& t : d.remainder.terms()) {
      for (const auto& b : basis) REQUIRE_FALSE(b.leading_monomial().divides(t.monomial));
    }
  }
}

TEST_CASE("monomial ideal is its own reduced basis") {
  auto r = qring(5);
  auto I = ideal(r, {"x1*x2", "x1*x3", "x2*x3", "x1*x2*x3"});
  auto gb = buchberger(I);
  CHECK(texts(gb.elements()) == std::vector<std::string>{"x1*x2", "x1*x3", "x2*x3"});
}

TEST_CASE("genus-5 curve quadrics are the degree-2 part of their basis") {
  auto r = qring(6);
  auto I = ex37_c1(r);
  auto gb = buchberger(I);
  std::vector<Polynomial<Rational>> quad;
  for (const auto& g : gb.elements()) {
    if (g.degree() == 2u) quad.push_back(g);
  }
  std::vector<Polynomial<Rational>> expected(I.generators().begin(), I.generators().begin() + 3);
  for (auto& e : expected) e = e.monic();
  auto key = [](const Polynomial<Rational>& p) { return to_string(p); };
  std::vector<std::string> a, b;
  for (auto& q : quad) a.push_back(key(q));
  for (auto& q : expected) b.push_back(key(q));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK(gb.contains(P(r, "x4")));
}

TEST_CASE("reduced basis is independent of pair selection") {
  std::mt19937_64 rng(23);
  auto r = qring(6);
  std::vector<Ideal<Rational>> corpus = {ex36_c1(r), ex37_c1(r), intersect(ex36_c1(r), conic_c2(r))};
  for (int s = 0; s < 3; ++s) {
    corpus.push_back(Ideal<Rational>(r, {random_form(rng, r, 2, 30), random_form(rng, r, 2, 30), random_form(rng, r, 2, 30)}));
  }
  for (const auto& I : corpus) {
    const auto ref = buchberger(I);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto alt = buchberger(I, BuchbergerOptions{PairStrategy::Random, seed});
      REQUIRE(texts(alt.elements()) == texts(ref.elements()));
    }
  }
}

TEST_CASE("bases generate the same ideal as their input") {
  std::mt19937_64 rng(29);
  auto r = pring(6);
  for (int s = 0; s < 5; ++s) {
    Ideal<Zp> I(r, {random_form(rng, r, 2, 30), random_form(rng, r, 2, 30), random_form(rng, r, 3, 20)});
    auto gb = buchberger(I);
    for (const auto& g : I.generators()) REQUIRE(gb.contains(g));
    auto back = groebner_basis<Zp>(r, I.generators());
    for (const auto& g : gb.elements()) REQUIRE(normal_form<Zp>(g, back.elements()).is_zero());
  }
}

TEST_CASE("membership of explicit combinations") {
  std::mt19937_64 rng(31);
  auto r = qring(6);
  auto I = ex36_c1(r);
  auto one = P(r, "1");
  CHECK_FALSE(ideal_membership(one, I));
  for (int s = 0; s < 40; ++s) {
    Polynomial<Rational> f(r);
    for (const auto& g : I.generators()) f += random_form(rng, r, 3 - *g.degree(), 50) * g;
    REQUIRE(ideal_membership(f, I));
  }
}

TEST_CASE("elimination") {
  auto r = make_ring<Rational>({"x1", "x2", "x0"}, FieldSpec::rationals());
  auto lin = eliminate(ideal(r, {"x1 - x0", "x2 - x0"}), 1);
  REQUIRE(lin.generators().size() == 1);
  CHECK(to_string(lin.generators()[0]) == "x2 - x0");
  CHECK(lin.ring()->variables() == std::vector<std::string>{"x2", "x0"});

  auto rt = make_ring<Rational>({"x9", "x1", "x2", "x0"}, FieldSpec::rationals());
  // <t x1, (1 - t) x2> homogenised with x0 standing in for 1
  auto e = eliminate(ideal(rt, {"x9*x1", "x0*x2 - x9*x2"}), 1);
  REQUIRE(e.generators().size() == 1);
  CHECK(to_string(e.generators()[0]) == "x1*x2*x0");

  std::mt19937_64 rng(37);
  auto r6 = qring(6);
  for (int s = 0; s < 5; ++s) {
    Ideal<Rational> I(r6, {random_form(rng, r6, 2, 30), random_form(rng, r6, 2, 30), random_form(rng, r6, 2, 30)});
    auto E = eliminate(I, 2);
    for (const auto& g : E.generators()) {
      REQUIRE(g.ring()->nvars() == 4);
      REQUIRE(ideal_membership(map_to_ring(g, r6), I));
    }
  }
}

TEST_CASE("intersection") {
  auto r = qring(6);
  auto a = intersect(ideal(r, {"x1"}), ideal(r, {"x0"}));
  REQUIRE(a.generators().size() == 1);
  CHECK(to_string(a.generators()[0]) == "x1*x0");

  // monomial ideals: generators of the intersection are pairwise lcms
  auto m = intersect(ideal(r, {"x1^2*x2", "x3*x0"}), ideal(r, {"x1*x2^3", "x0^2"}));
  std::set<std::string> got;
  const auto mgb = buchberger(m);
  for (const auto& g : mgb.elements()) got.insert(to_string(g));
  CHECK(got == std::set<std::string>{"x1^2*x2^3", "x1^2*x2*x0^2", "x1*x2^3*x3*x0", "x3*x0^2"});

  auto C = intersect(ex36_c1(r), conic_c2(r));
  auto lead = monomial_texts(buchberger(C).leading_monomials(), r->variables());
  std::sort(lead.begin(), lead.end());
  std::vector<std::string> expected = {"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4",
                                       "x1^2*x5", "x2^2*x5", "x4^2*x5", "x3^3*x5"};
  std::sort(expected.begin(), expected.end());
  CHECK(lead == expected);
}

TEST_CASE("membership in an intersection matches membership in both") {
  std::mt19937_64 rng(41);
  auto r = qring(6);
  const auto I = ex36_c1(r), J = conic_c2(r);
  const auto C = intersect(I, J);
  const auto gI = buchberger(I), gJ = buchberger(J), gC = buchberger(C);
  int both = 0;
  for (int s = 0; s < 120; ++s) {
    Polynomial<Rational> f(r);
    // mix of members of I, of J and of both
    const auto& src = (s % 3 == 0) ? I : (s % 3 == 1) ? J : C;
    for (const auto& g : src.generators()) {
      if (*g.degree() <= 3) f += random_form(rng, r, 3 - *g.degree(), 40) * g;
    }
    if (s % 5 == 0) f += random_form(rng, r, 3, 10);
    const bool in_both = gI.contains(f) && gJ.contains(f);
    both += in_both;
    REQUIRE(in_both == gC.contains(f));
  }
  CHECK(both > 0);
}

TEST_CASE("quotients and saturation") {
  auto r = qring(6);
  auto unit = ideal(r, {"1"});
  auto I = ex37_c1(r);
  CHECK(same_ideal(quotient(I, unit), I));
  auto q = quotient(ideal(r, {"x1^2", "x1*x2"}), ideal(r, {"x1"}));
  CHECK(same_ideal(q, ideal(r, {"x1", "x2"})));

  auto J = ideal(r, {"x1", "x2"});
  auto base = ideal(r, {"x1^3*x3", "x2^2*x3*x0", "x3^2 - x4*x5"});
  auto Q = quotient(base, J);
  for (const auto& g : Q.generators()) {
    for (const auto& j : J.generators()) REQUIRE(ideal_membership(g * j, base));
  }
  auto S = saturate(base, J);
  CHECK(same_ideal(saturate(S, J), S));
  CHECK(ideal_membership(P(r, "x3*x0"), S));
  CHECK_FALSE(ideal_membership(P(r, "x3"), S));
  CHECK(same_ideal(saturate(ideal(r, {"x1*x3", "x2^2*x3", "x4*x5"}), J), ideal(r, {"x3", "x4*x5"})));

  // the variable shortcut agrees with iterated quotients
  auto sv = saturate_variable(base, 0);
  CHECK(same_ideal(sv, saturate(base, ideal(r, {"x1"}))));
  // a curve ideal is already saturated
  CHECK(same_ideal(saturate_irrelevant(ex36_c1(r)), ex36_c1(r)));
  CHECK(same_ideal(saturate_irrelevant(ideal(r, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x0"})), ideal(r, {"x1"})));
}

TEST_CASE("Schreyer syzygies evaluate to zero") {
  auto r = qring(6);
  for (const auto& I : {ex36_c1(r), ex37_c1(r), intersect(ex37_c1(r), conic_c2(r))}) {
    auto gb = buchberger(I);
    auto syz = schreyer_syzygies(gb);
    CHECK(syz.size() == gb.size() * (gb.size() - 1) / 2);
    for (const auto& v : syz) REQUIRE(evaluate_syzygy<Rational>(v, gb.elements()).is_zero());
  }
}

TEST_CASE("coprime leading terms give the Koszul syzygy") {
  auto r = qring(6);
  auto gb = buchberger(ideal(r, {"x1^2 + x5*x0", "x2^2 - x3*x0"}));
  REQUIRE(gb.size() == 2);
  auto syz = schreyer_syzygies(gb);
  REQUIRE(syz.size() == 1);
  CHECK(syz[0].coordinates[0] == gb[1]);
  CHECK(syz[0].coordinates[1] == -gb[0]);
}
