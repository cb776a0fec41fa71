#include <algorithm>

#include "canonlab/invariants/invariants_io.hpp"
#include "canonlab/lab/constructions.hpp"
#include "canonlab/lab/experiments.hpp"
#include "canonlab/petri/petri_io.hpp"
#include "petri_fixtures.hpp"

using namespace canonlab;
using namespace canonlab::testing;

namespace {

template <class K>
std::vector<Ideal<K>> coordinate_lines(const Ring<K>& r, std::initializer_list<std::initializer_list<const char*>> lines) {
  std::vector<Ideal<K>> out;
  for (const auto& l : lines) out.push_back(ideal(r, l));
  return out;
}

long ledger_value(int genus, const std::string& name) {
  for (const auto& e : dimension_ledger(genus)) {
    if (e.name == name) return e.value;
  }
  FAIL("missing ledger entry " << name);
  return 0;
}

}  // namespace

TEST_CASE("Pfaffian ideals") {
  auto r = pring(6);
  std::mt19937_64 rng(11);
  const auto I = pfaffian_ideal(random_skew_matrix(r, rng));
  CHECK(I.generators().size() == 5);
  const auto h = hilbert_data(I);
  CHECK(h.proj_dimension == 2);
  CHECK(h.degree == 5);
  CHECK(betti_diagram(I).rows() == std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 5, 5, 0}, {0, 0, 0, 1}});

  FormMatrix<Zp> zero(5, std::vector<Polynomial<Zp>>(5, Polynomial<Zp>(r)));
  CHECK(pfaffian_ideal(zero).is_zero());

  auto two = zero;
  two[0][1] = P(r, "x1");
  two[1][0] = -two[0][1];
  two[2][3] = P(r, "x2");
  two[3][2] = -two[2][3];
  const auto split = pfaffian_ideal(two);
  CHECK(texts(split.generators()) == std::vector<std::string>{"x1*x2"});

  auto not_skew = two;
  not_skew[1][0] = two[0][1];
  CHECK_THROWS_AS(pfaffian_ideal(not_skew), std::invalid_argument);
  auto quadratic = zero;
  quadratic[0][1] = P(r, "x1^2");
  quadratic[1][0] = -quadratic[0][1];
  CHECK_THROWS_AS(pfaffian_ideal(quadratic), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian_ideal(FormMatrix<Zp>(4, std::vector<Polynomial<Zp>>(4, Polynomial<Zp>(r)))),
                  std::invalid_argument);
}

TEST_CASE("cyclic Pfaffian matrix") {
  auto r = qring(6);
  FormMatrix<Rational> A(5, std::vector<Polynomial<Rational>>(5, Polynomial<Rational>(r)));
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t j = (i + 1) % 5;
    A[i][j] = P(r, "x" + std::to_string(i + 1));
    A[j][i] = -A[i][j];
  }
  const auto I = pfaffian_ideal(A);
  CHECK(I.generators().size() == 5);
  const auto h = hilbert_data(I);
  CHECK(h.proj_dimension == 2);
  CHECK(h.degree == 5);
}

TEST_CASE("random complete intersections") {
  std::mt19937_64 rng(5);
  auto r6 = pring(6);
  const auto A = random_skew_matrix(r6, rng);
  const auto C6 = curve_invariants(complete_intersection_curve_g6(A, random_homogeneous(r6, 2, rng)));
  CHECK(C6.proj_dimension == 1);
  CHECK(C6.degree == 10);
  CHECK(C6.arithmetic_genus == 6);
  CHECK(C6.beta13 == 0);

  const auto S = pfaffian_ideal(A);
  const auto degenerate = curve_invariants(complete_intersection_curve_g6(A, random_element(S, 2, rng)));
  CHECK(degenerate.proj_dimension == 2);

  auto r5 = pring(5);
  const auto C5 = curve_invariants(complete_intersection_curve_g5<Zp>(
      {random_homogeneous(r5, 2, rng), random_homogeneous(r5, 2, rng), random_homogeneous(r5, 2, rng)}));
  CHECK(C5.degree == 8);
  CHECK(C5.arithmetic_genus == 5);
  CHECK(C5.betti.rows() == std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 1}});
}

TEST_CASE("random elements lie in the ideal") {
  auto r = pring(6);
  std::mt19937_64 rng(2);
  const auto I = ideal(r, {"x1*x2", "x3^2 - x0*x5"});
  const auto g = random_element(I, 4, rng);
  CHECK(*g.degree() == 4);
  CHECK(ideal_membership(g, I));
  CHECK(random_linear_form(r, rng).is_homogeneous());
}

TEST_CASE("residual curves") {
  auto r5 = pring(5);
  std::mt19937_64 rng(9);
  const auto scroll = ideal(r5, {"x1*x3 - x2^2", "x1*x0 - x2*x4", "x2*x0 - x3*x4"});
  const auto line = coordinate_lines(r5, {{"x1", "x2", "x4"}});
  const auto trigonal = curve_invariants(residual_curve(scroll, random_element(line[0], 3, rng), line));
  CHECK(trigonal.proj_dimension == 1);
  CHECK(trigonal.degree == 8);
  CHECK(trigonal.arithmetic_genus == 5);

  auto r6 = pring(6);
  const auto s22 = ideal(r6, {"x1*x3 - x2^2", "x1*x5 - x2*x4", "x1*x0 - x2*x5", "x2*x5 - x3*x4", "x2*x0 - x3*x5",
                              "x4*x0 - x5^2"});
  const auto lines = coordinate_lines(r6, {{"x1", "x2", "x4", "x5"}, {"x2", "x3", "x5", "x0"}});
  const auto through_both = random_element(intersect<Zp>(lines), 3, rng);
  const auto curve = curve_invariants(residual_curve(s22, through_both, lines));
  CHECK(curve.degree == 10);
  CHECK(curve.arithmetic_genus == 6);

  CHECK_THROWS_AS(residual_curve(s22, P(r6, "x1*x2*x3 - x2^3"), lines), std::invalid_argument);
  CHECK_THROWS_AS(residual_curve(s22, P(r6, "x3^3"), lines), std::invalid_argument);
  CHECK_THROWS_AS(residual_curve(s22, through_both, {}), std::invalid_argument);
}

TEST_CASE("dimension ledger") {
  CHECK(ledger_value(5, "smooth_component_dim") == 3 * 5 - 3 + 25 - 1);
  CHECK(ledger_value(5, "H5_prime") == 36);
  CHECK(ledger_value(5, "H5_doubleprime") == 35);
  CHECK(ledger_value(5, "scroll_hilb") == 18);
  CHECK(ledger_value(5, "cubics_through_line") == 17);
  CHECK(ledger_value(6, "smooth_component_dim") == 3 * 6 - 3 + 36 - 1);
  CHECK(ledger_value(6, "H6_prime") == 50);
  CHECK(ledger_value(6, "H6_prime") == ledger_value(6, "surfaces") + ledger_value(6, "quadric_system"));
  CHECK(ledger_value(6, "cubics_two_lines") == 19);
  CHECK(ledger_value(6, "veronese_curves") == 20);
  CHECK(ledger_value(6, "quartic_scroll_hilb") == 29);
  CHECK(ledger_value(6, "veronese_hilb") == 27);
  for (int g : {5, 6}) {
    for (const auto& e : dimension_ledger(g)) CHECK_FALSE(e.formula.empty());
  }
  CHECK_THROWS_AS(dimension_ledger(7), std::invalid_argument);
}

TEST_CASE("Veronese surfaces through the coordinate points") {
  auto r = pring(6);
  std::mt19937_64 rng(21);
  const auto V = veronese_through_coordinate_points(r, rng);
  CHECK(V.generators().size() == 6);
  const auto h = hilbert_data(V);
  CHECK(h.proj_dimension == 2);
  CHECK(h.degree == 4);
  for (std::size_t k = 0; k < 6; ++k) {
    std::vector<Zp> e(6, r->zero());
    e[k] = r->one();
    for (const auto& g : V.generators()) CHECK(is_zero(g.evaluate(e)));
  }
  CHECK(betti_diagram(V).rows() ==
        std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 6, 8, 3}});
}

TEST_CASE("rho-zero systems read off Petri quadrics") {
  auto r = pring(6);
  std::mt19937_64 rng(4);
  const auto sys = veronese_rho_zero_system(r, rng);
  CHECK(std::all_of(sys.rho.begin(), sys.rho.end(), [](const auto& e) { return is_zero(e.second); }));
  REQUIRE(sys.b.has_value());
  const auto f = build_g6_quadrics(sys);
  const auto back = rho_zero_system(f);
  CHECK(build_g6_quadrics(back).list() == f.list());
  CHECK(all_zero(petri_syzygy_residuals(sys)));

  Report rep;
  all_rho_zero_checks(rep, sys, "p.");
  CHECK(rep.all_pass());
  CHECK(rep.find("p.surface_degree") != nullptr);

  CHECK_THROWS_AS(rho_zero_system(build_g6_quadrics(five_conic_system(r))), std::invalid_argument);
}

TEST_CASE("the zero system is not in the all-rho-zero family") {
  auto r = qring(6);
  auto sys = PetriSystemG6<Rational>::zero(r);
  sys.b = std::map<IndexPair, Rational>{{{1, 2}, 1}, {{1, 3}, 1}, {{1, 4}, 1}, {{2, 3}, 1}, {{2, 4}, 1}, {{3, 4}, 1}};
  Report rep;
  all_rho_zero_checks(rep, sys);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.find("surface_degree")->pass);
}

TEST_CASE("worked examples") {
  for (const auto& id : example_ids()) {
    const auto rep = run_example(id);
    CAPTURE(id);
    CHECK(rep.experiment == id);
    CHECK_FALSE(rep.checks.empty());
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK_MESSAGE(c.pass, c.computed.dump());
    }
  }
  CHECK_THROWS_AS(run_example("3.9"), std::invalid_argument);
}

TEST_CASE("sampling is deterministic") {
  ExperimentConfig c;
  c.experiment = "sample-g5";
  c.seed = 7;
  c.sample_count = 3;
  const auto a = sample(c), b = sample(c);
  CHECK(a.all_pass());
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].computed == b.checks[i].computed);

  c.experiment = "sample-g6";
  c.sample_count = 1;
  const auto one = sample(c);
  CHECK(one.all_pass());
  for (const auto& ch : one.checks) CHECK(ch.computed["samples"] == 1);

  c.sample_count = 0;
  CHECK_THROWS_AS(sample(c), std::invalid_argument);
  c.sample_count = 1;
  c.field = FieldSpec::rationals();
  CHECK_THROWS_AS(sample(c), std::invalid_argument);
  c.field = FieldSpec::prime(kDefaultPrime);
  c.experiment = "sample-g7";
  CHECK_THROWS_AS(sample(c), std::invalid_argument);
}

TEST_CASE("report schema") {
  Report rep;
  rep.experiment = "demo";
  rep.expect_equal("same", 1, 1);
  rep.expect("throws", 2, []() -> Json { throw std::runtime_error("boom"); });
  const auto j = rep.to_json();
  CHECK(j["experiment"] == "demo");
  CHECK(j["checks"][0] == Json{{"name", "same"}, {"pass", true}, {"expected", 1}, {"computed", 1}});
  CHECK(j["checks"][1]["computed"] == Json{{"error", "boom"}});
  CHECK_FALSE(rep.all_pass());
  CHECK(j.contains("timing_ms"));
}

TEST_CASE("ideal JSON round trip") {
  const Json doc = Json::parse(R"({"variables":["x1","x2","x3"],"field":{"kind":"Fp","p":101},
                                   "generators":["x1^2 - x2*x3", "3*x1*x2 + 1/2*x3^2"]})");
  const auto file = ideal_file_from_json(doc);
  const auto I = load_ideal<Zp>(file);
  const auto again = ideal_file_from_json(ideal_to_json(I));
  CHECK(again.variables == file.variables);
  CHECK(field_to_json(again.field) == doc["field"]);
  CHECK(same_ideal(load_ideal<Zp>(again), I));

  const auto G = buchberger(I);
  CHECK(same_ideal(load_ideal<Zp>(ideal_file_from_json(basis_to_json(G))), I));

  CHECK_THROWS_AS(ideal_file_from_json(Json::parse(R"({"variables":["x1"],"generators":["x1"]})")), SchemaError);
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"Fp","p":100})")), SchemaError);
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"R"})")), SchemaError);
  CHECK_THROWS(load_ideal<Rational>(ideal_file_from_json(
      Json::parse(R"({"variables":["x1"],"field":{"kind":"Q"},"generators":["x1 + x2"]})"))));
}

TEST_CASE("Betti JSON round trip") {
  const auto B = BettiDiagram::from_rows({{1, 0, 0, 0}, {0, 5, 5, 0}, {0, 0, 0, 1}});
  const auto j = betti_to_json(B);
  CHECK(j["row_offset"] == 0);
  CHECK(betti_from_json(j) == B);
  Json bad = j;
  bad["row_offset"] = 1;
  CHECK_THROWS_AS(betti_from_json(bad), SchemaError);
}

TEST_CASE("Petri system JSON") {
  auto r = qring(6);
  const auto sys = five_conic_system(r);
  const auto file = petri_file_from_json(petri_to_json(sys));
  CHECK(file.genus == 6);
  const auto back = load_petri_g6<Rational>(file);
  CHECK(build_g6_quadrics(back).list() == build_g6_quadrics(sys).list());

  const auto g5 = trigonal_g5_system(qring(5));
  const auto back5 = load_petri_g5<Rational>(petri_file_from_json(petri_to_json(g5)));
  CHECK(build_g5_quadrics(back5).list() == build_g5_quadrics(g5).list());

  Json bad = petri_to_json(sys);
  bad["q"]["1,2"] = "x1*x0";
  CHECK_THROWS_AS(load_petri_g6<Rational>(petri_file_from_json(bad)), SchemaError);
  bad = petri_to_json(sys);
  bad["genus"] = 7;
  CHECK_THROWS_AS(petri_file_from_json(bad), SchemaError);
}
