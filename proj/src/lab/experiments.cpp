#include "canonlab/lab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "canonlab/invariants/hilbert.hpp"
#include "canonlab/invariants/invariants_io.hpp"
#include "canonlab/invariants/tangent.hpp"
#include "canonlab/lab/constructions.hpp"
#include "canonlab/polyring/poly_io.hpp"

namespace canonlab {

namespace {

using Q = Rational;

constexpr std::uint64_t kAllRhoZeroSeed = 3;

Ring<Q> ring_g(int genus) { return make_ring<Q>(canonical_variables(genus), FieldSpec::rationals()); }

template <class K>
Polynomial<K> P(const Ring<K>& r, const std::string& text) {
  return parse_poly<K>(text, r);
}

template <class K>
Ideal<K> ideal_of(const Ring<K>& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<K>> g;
  for (const char* s : gens) g.push_back(P(r, s));
  return Ideal<K>(r, std::move(g));
}

Json shape(const HilbertData& h) {
  Json j{{"projective_dimension", h.proj_dimension}, {"degree", h.degree.get_si()}};
  j["arithmetic_genus"] = h.arithmetic_genus ? Json(h.arithmetic_genus->get_si()) : Json(nullptr);
  return j;
}

Json dim_degree(const HilbertData& h) {
  return Json{{"projective_dimension", h.proj_dimension}, {"degree", h.degree.get_si()}};
}

Json dim_degree(int dim, long degree) { return Json{{"projective_dimension", dim}, {"degree", degree}}; }

Json shape(int dim, long degree, std::optional<long> genus) {
  Json j{{"projective_dimension", dim}, {"degree", degree}};
  j["arithmetic_genus"] = genus ? Json(*genus) : Json(nullptr);
  return j;
}

template <class K>
Json texts(std::span<const Polynomial<K>> ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

Json sorted(Json list) {
  std::sort(list.begin(), list.end());
  return list;
}

MonomialIdeal monomial_ideal(const Ring<Q>& r, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* s : gens) ms.push_back(P(r, s).leading_monomial());
  return MonomialIdeal(r->variables(), r->order(), std::move(ms));
}

// Every rho = 1, alpha_k = x0 + x5, q_ij = x0 x5.
PetriSystemG6<Q> five_conic_system(const Ring<Q>& r) {
  auto sys = PetriSystemG6<Q>::zero(r);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      sys.q[{i, j}] = P(r, "x0*x5");
      for (int k = j + 1; k <= 4; ++k) sys.set_rho(i, j, k, 1);
    }
  }
  return sys;
}

// Trigonal system with rho123 = 0 whose Petri syzygies vanish identically.
PetriSystemG5<Q> trigonal_system(const Ring<Q>& r) {
  auto sys = PetriSystemG5<Q>::zero(r);
  sys.a_diag[{1, 1, 2}] = P(r, "x4");
  sys.a_diag[{2, 1, 2}] = P(r, "x0");
  sys.a_diag[{1, 1, 3}] = P(r, "x0 - x4");
  sys.a_diag[{2, 2, 3}] = P(r, "2*x4");
  sys.a_diag[{3, 2, 3}] = P(r, "x0");
  sys.q[{1, 2}] = P(r, "-x0^2");
  sys.q[{1, 3}] = P(r, "3*x4*x0 - x0^2");
  sys.q[{2, 3}] = P(r, "-3*x4^2 + 2*x4*x0 - x0^2");
  return sys;
}

const std::vector<std::vector<long>> kSurfaceBetti{{1, 0, 0, 0}, {0, 5, 5, 0}, {0, 0, 0, 1}};
const std::vector<std::vector<long>> kKoszulBetti{{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 1}};

Ideal<Q> conic_c2(const Ring<Q>& r) { return ideal_of(r, {"x1", "x2", "x3", "x4*x5 - 2*x4*x0 + 4*x0*x5"}); }

const char* const kQuadrics36[] = {"x1*x2 - (x5 - x0)*x1 + (x0 + x5)*x3", "x1*x3 + (x0 + x5)*x2",
                                   "x2*x3 + (x0 + x5)*x1 + (4*x5 - x0)*x3"};
const char* const kQuadrics37[] = {"x1*x2 + (x0 + x5)*x3 + x0*x5", "x1*x3 + (x0 + x5)*x2", "x2*x3 + (x0 + x5)*x1"};

Ideal<Q> component_c1(const Ring<Q>& r, const char* const (&quadrics)[3]) {
  return Ideal<Q>(r, {P(r, quadrics[0]), P(r, quadrics[1]), P(r, quadrics[2]), P(r, "x4")});
}

// Genus-5 Petri data of the examples' C1 in P^5: tail (x5, x0), rho123 = 1, alpha_k = -(x0 + x5).
PetriSystemG5<Q> component_system(const Ring<Q>& r) {
  auto sys = PetriSystemG5<Q>::zero(r, {"x5", "x0"});
  sys.rho123 = 1;
  for (auto& a : sys.alpha) a = P(r, "-x0 - x5");
  return sys;
}

MonomialIdeal displayed_initial_ideal(const Ring<Q>& r) {
  return monomial_ideal(r, {"x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x1^2*x5", "x2^2*x5", "x4^2*x5",
                            "x3^3*x5"});
}

void reducible_curve_checks(Report& rep, const Ring<Q>& r, const Ideal<Q>& I, const std::vector<std::vector<long>>& betti,
                            long beta13) {
  rep.expect("initial_ideal", displayed_initial_ideal(r).generator_texts(),
             [&] { return Json(initial_ideal(I).generator_texts()); });
  rep.expect("degree_and_genus", shape(1, 10, 6), [&] { return shape(hilbert_data(I)); });
  const auto B = betti_diagram(I);
  rep.expect_equal("betti_diagram", betti_to_json(BettiDiagram::from_rows(betti)), betti_to_json(B));
  rep.expect_equal("beta13", beta13, B(1, 3));
  rep.expect_equal("not_self_dual", true, !B.is_self_dual());
  rep.expect("tangent_dim", 50, [&] { return Json(tangent_dim(I)); });
  rep.expect("rho_graph_predicts_beta13", beta13, [&] {
    return Json(rho_support_graph(petri_quadrics(buchberger(I))).predicted_beta13());
  });
}

void example_32(Report& rep) {
  const auto r = ring_g(6);
  const auto sys = five_conic_system(r);
  const auto f = build_g6_quadrics(sys);
  rep.expect("petri_quadrics_match_display", true, [&] {
    bool ok = true;
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        std::vector<int> kl;
        for (int s = 1; s <= 4; ++s) {
          if (s != i && s != j) kl.push_back(s);
        }
        const auto v = [](int k) { return "x" + std::to_string(k); };
        const auto display = v(i) + "*" + v(j) + " - (" + v(kl[0]) + " + " + v(kl[1]) + ")*(x0 + x5) - x0*x5";
        ok = ok && f(i, j) == P(r, display);
      }
    }
    return Json(ok);
  });
  const Ideal<Q> I(r, f.list());
  rep.expect("curve_degree_and_genus", shape(1, 10, 6), [&] { return shape(hilbert_data(I)); });

  const auto S = surface_quadrics(sys);
  const Ideal<Q> J(r, {S.F.begin(), S.F.end()});
  const std::vector<Ideal<Q>> planes{
      ideal_of(r, {"x2 + x5 + x0", "x3 + x5 + x0", "x4 + x5 + x0"}),
      ideal_of(r, {"x1 + x5 + x0", "x3 + x5 + x0", "x4 + x5 + x0"}),
      ideal_of(r, {"x1 + x5 + x0", "x2 + x5 + x0", "x4 + x5 + x0"}),
      ideal_of(r, {"x1 + x5 + x0", "x2 + x5 + x0", "x3 + x5 + x0"}),
      ideal_of(r, {"x1 - x4", "x2 - x4", "x3 - x4"}),
  };
  rep.expect("surface_is_union_of_planes", true, [&] { return Json(same_ideal(J, intersect<Q>(planes))); });

  std::vector<Ideal<Q>> conics;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    conics.push_back(saturate_irrelevant(I + planes[i]));
    rep.expect("conic_" + std::to_string(i + 1), shape(1, 2, 0), [&] { return shape(hilbert_data(conics.back())); });
  }
  rep.expect("union_of_conics", true, [&] { return Json(same_ideal(intersect<Q>(conics), I)); });

  const auto L = ideal_of(r, {"x1 + x5 + x0", "x2 + x5 + x0", "x3 + x5 + x0", "x4 + x5 + x0"});
  rep.expect("conics_meet_line_in_same_two_points", Json{{"section", dim_degree(0, 2)}, {"all_equal", true}}, [&] {
    const auto Z = saturate_irrelevant(conics[0] + L);
    bool equal = true;
    for (std::size_t i = 1; i < conics.size(); ++i) equal = equal && same_ideal(saturate_irrelevant(conics[i] + L), Z);
    return Json{{"section", dim_degree(hilbert_data(Z))}, {"all_equal", equal}};
  });

  rep.expect("general_hyperplane_section", shape(1, 5, 1), [&] {
    std::mt19937_64 rng(1);
    HilbertData h;
    for (int attempt = 0; attempt < 10; ++attempt) {
      h = hilbert_data(J + Ideal<Q>(r, {random_linear_form(r, rng)}));
      if (h.proj_dimension == 1) break;
    }
    return shape(h);
  });
}

void example_36(Report& rep) {
  const auto r = ring_g(6);
  const auto I1 = component_c1(r, kQuadrics36);
  rep.expect("component_petri_form", true, [&] {
    auto sys = component_system(r);
    sys.a_diag[{1, 1, 2}] = P(r, "x5 - x0");
    sys.a_diag[{3, 2, 3}] = P(r, "x0 - 4*x5");
    const auto f = build_g5_quadrics(sys).list();
    return Json(std::equal(f.begin(), f.end(), I1.generators().begin()));
  });
  const auto I = intersect(I1, conic_c2(r));
  reducible_curve_checks(rep, r, I, {{1, 0, 0, 0, 0}, {0, 6, 6, 1, 0}, {0, 1, 6, 6, 1}, {0, 0, 0, 1, 1}}, 1);
}

void example_37(Report& rep) {
  const auto r = ring_g(6);
  const auto I1 = component_c1(r, kQuadrics37);
  rep.expect("component_petri_form", true, [&] {
    auto sys = component_system(r);
    sys.q[{1, 2}] = P(r, "-x0*x5");
    const auto f = build_g5_quadrics(sys).list();
    return Json(std::equal(f.begin(), f.end(), I1.generators().begin()));
  });
  const auto I = intersect(I1, conic_c2(r));
  const auto f12 = P(r, "x1*x2 + (x0 + x5)*x3 + (1/4*x5 - 1/2*x0)*x4 + x0*x5");
  rep.expect("contains_f12", true, [&] { return Json(ideal_membership(f12, I)); });
  rep.expect("q12_replaced", false, [&] { return Json(ideal_membership(P(r, kQuadrics37[0]), I)); });
  reducible_curve_checks(rep, r, I, {{1, 0, 0, 0, 0}, {0, 6, 5, 1, 0}, {0, 0, 6, 6, 1}, {0, 0, 0, 1, 1}}, 0);
}

void example_g5_trigonal(Report& rep) {
  const auto r6 = ring_g(6);
  const auto I1 = component_c1(r6, kQuadrics36);
  rep.expect("component_quadrics_are_degree2_basis", sorted(texts<Q>(std::span(I1.generators()).first(3))), [&] {
    const auto G = buchberger(I1);
    std::vector<Polynomial<Q>> quadrics;
    for (const auto& g : G.elements()) {
      if (*g.degree() == 2) quadrics.push_back(g);
    }
    return sorted(texts<Q>(quadrics));
  });

  const auto r = ring_g(5);
  const auto sys = trigonal_system(r);
  const auto f = build_g5_quadrics(sys).list();
  rep.expect("trigonal_syzygies_vanish", true, [&] { return Json(all_zero(petri_syzygy_residuals(sys))); });
  rep.expect("trigonal_quadrics_are_basis", true, [&] { return Json(satisfies_buchberger_criterion<Q>(f)); });
  const Ideal<Q> J(r, f);
  rep.expect("degeneration_initial_ideal", Json{"x1*x2", "x1*x3", "x2*x3"},
             [&] { return Json(initial_ideal(J).generator_texts()); });
  rep.expect("scroll_degree", dim_degree(2, 3), [&] { return dim_degree(hilbert_data(J)); });
  const auto S0 = ideal_of(r, {"x1*x2", "x1*x3", "x2*x3"});
  long scroll_hilb = 0;
  for (const auto& e : dimension_ledger(5)) {
    if (e.name == "scroll_hilb") scroll_hilb = e.value;
  }
  rep.expect("S0_tangent_dim", 18, [&] { return Json(tangent_dim(S0)); });
  rep.expect("S0_tangent_equals_scroll_component", scroll_hilb, [&] { return Json(tangent_dim(S0)); });
}

void example_g6_surface_gb(Report& rep) {
  const auto r = ring_g(6);
  const auto sys = five_conic_system(r);
  const auto S = surface_quadrics(sys);
  const Ideal<Q> J(r, {S.F.begin(), S.F.end()});
  rep.expect_equal("span_of_F", 5, S.span_dim);
  rep.expect_equal("dependence_relation_vanishes", true, S.dependence.is_zero());
  const auto G = buchberger(J);
  rep.expect("leading_monomials", Json{"x1*x2", "x1*x3", "x2*x3", "x1*x4", "x2*x4", "x3^2*x4"}, [&] {
    Json out = Json::array();
    for (const auto& m : G.leading_monomials()) out.push_back(monomial_text(m, r->variables()));
    return out;
  });
  rep.expect("basis_is_fprime_and_G", true, [&] {
    if (G.size() != 6) return Json(false);
    std::vector<Polynomial<Q>> expected;
    for (const auto& p : fprime_basis(sys)) expected.push_back(p.monic());
    std::vector<Polynomial<Q>> images;
    for (const auto& v : r->variables()) {
      images.push_back(v == "x0" || v == "x5" ? Polynomial<Q>(r) : Polynomial<Q>::variable(r, v));
    }
    bool ok = substitute_linear<Q>(G[5], images) == P(r, "x3^2*x4 - x3*x4^2");
    for (std::size_t k = 0; k < 5; ++k) ok = ok && std::find(expected.begin(), expected.end(), G[k]) != expected.end();
    return Json(ok);
  });
  rep.expect("surface_degree", dim_degree(2, 5), [&] { return dim_degree(hilbert_data(J)); });

  const auto section = J + ideal_of(r, {"x0", "x5"});
  rep.expect("five_point_section", Json{{"section", dim_degree(0, 5)}, {"points_on_section", 5}}, [&] {
    const Q inv234 = 1 / sys.rho_of(2, 3, 4), inv134 = 1 / sys.rho_of(1, 3, 4), inv124 = 1 / sys.rho_of(1, 2, 4),
            inv123 = 1 / sys.rho_of(1, 2, 3);
    const std::vector<std::vector<Q>> points{{1, 0, 0, 0, 0, 0},
                                             {0, 1, 0, 0, 0, 0},
                                             {0, 0, 1, 0, 0, 0},
                                             {0, 0, 0, 1, 0, 0},
                                             {inv234, inv134, inv124, inv123, 0, 0}};
    int on = 0;
    for (const auto& p : points) {
      on += std::all_of(section.generators().begin(), section.generators().end(),
                        [&](const Polynomial<Q>& g) { return is_zero(g.evaluate(p)); });
    }
    return Json{{"section", dim_degree(hilbert_data(section))}, {"points_on_section", on}};
  });
  rep.expect("regular_sequence_x5_x0", true, [&] {
    const auto x5 = P(r, "x5"), x0 = P(r, "x0");
    const auto J5 = J + Ideal<Q>(r, {x5});
    return Json(same_ideal(quotient(J, x5), J) && same_ideal(quotient(J5, x0), J5));
  });
  const auto B = betti_diagram(J);
  rep.expect_equal("betti_diagram", betti_to_json(BettiDiagram::from_rows(kSurfaceBetti)), betti_to_json(B));
  rep.expect_equal("gorenstein_symmetric", true, B.is_self_dual());
}

void example_g6_all_rho_zero(Report& rep) {
  std::mt19937_64 rng(kAllRhoZeroSeed);
  const auto sys = veronese_rho_zero_system(ring_g(6), rng);
  rep.expect_equal("b_coefficients_nonzero", true,
                   std::all_of(sys.b->begin(), sys.b->end(), [](const auto& e) { return !is_zero(e.second); }));
  all_rho_zero_checks(rep, sys);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct Tally {
  int matching = 0;
  std::vector<int> degenerate;

  void record(bool ok, int index) {
    if (ok) {
      ++matching;
    } else {
      degenerate.push_back(index);
    }
  }
  void report(Report& rep, const std::string& name, Json expected, int n) const {
    expected["min_fraction"] = 0.95;
    const Json computed{{"samples", n},
                        {"matching", matching},
                        {"fraction", static_cast<double>(matching) / n},
                        {"degenerate_samples", degenerate}};
    rep.add(name, 100L * matching >= 95L * n, std::move(expected), computed);
  }
};

}  // namespace

template <class K>
Ideal<K> point_ideal(const Ring<K>& ring, const std::vector<K>& coords) {
  if (coords.size() != ring->nvars()) throw std::invalid_argument("point_ideal: wrong number of coordinates");
  const auto pivot = std::find_if(coords.begin(), coords.end(), [](const K& c) { return !is_zero(c); });
  if (pivot == coords.end()) throw std::invalid_argument("point_ideal: all coordinates vanish");
  const std::size_t p = static_cast<std::size_t>(pivot - coords.begin());
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i == p) continue;
    gens.push_back(coords[p] * Polynomial<K>::variable(ring, i) - coords[i] * Polynomial<K>::variable(ring, p));
  }
  return Ideal<K>(ring, std::move(gens));
}

template <class K>
PetriSystemG6<K> veronese_rho_zero_system(const Ring<K>& ring, std::mt19937_64& rng) {
  const auto G = buchberger(veronese_through_coordinate_points(ring, rng));
  auto sys = rho_zero_system(petri_quadrics(G));
  const auto x0x5 = Polynomial<K>::variable(ring, "x0") * Polynomial<K>::variable(ring, "x5");
  std::map<IndexPair, K> b;
  for (const auto& [p, q] : sys.q) {
    const K c = q.is_zero() ? ring->zero() : q.leading_coefficient();
    if (!(q - c * x0x5).is_zero()) throw std::logic_error("veronese_rho_zero_system: q is not a multiple of x0 x5");
    b[p] = c;
  }
  sys.b = std::move(b);
  return sys;
}

template <class K>
void all_rho_zero_checks(Report& rep, const PetriSystemG6<K>& sys, const std::string& prefix) {
  const auto& ring = sys.ring;
  rep.expect_equal(prefix + "rho_all_zero", true,
                   std::all_of(sys.rho.begin(), sys.rho.end(), [](const auto& e) { return is_zero(e.second); }));
  rep.expect(prefix + "q_is_b_x0x5", true, [&] {
    const auto x0x5 = Polynomial<K>::variable(ring, "x0") * Polynomial<K>::variable(ring, "x5");
    bool ok = sys.b.has_value();
    for (int i = 1; ok && i <= 4; ++i) {
      for (int j = i + 1; ok && j <= 4; ++j) ok = (sys.quadratic(i, j) - sys.b->at({i, j}) * x0x5).is_zero();
    }
    return Json(ok);
  });
  rep.expect(prefix + "petri_syzygies_vanish", true, [&] { return Json(all_zero(petri_syzygy_residuals(sys))); });
  const auto f = build_g6_quadrics(sys).list();
  const Ideal<K> I(ring, f);
  rep.expect(prefix + "quadrics_are_basis", true, [&] { return Json(satisfies_buchberger_criterion<K>(f)); });
  rep.expect(prefix + "four_point_section", Json{{"section", dim_degree(0, 4)}, {"coordinate_points", true}}, [&] {
    const auto section = saturate_irrelevant(I + Ideal<K>(ring, {Polynomial<K>::variable(ring, "x0"),
                                                                 Polynomial<K>::variable(ring, "x5")}));
    std::vector<Ideal<K>> points;
    for (int k = 1; k <= 4; ++k) {
      std::vector<K> e(ring->nvars(), ring->zero());
      e[ring->index("x" + std::to_string(k))] = ring->one();
      points.push_back(point_ideal(ring, e));
    }
    return Json{{"section", dim_degree(hilbert_data(section))}, {"coordinate_points", same_ideal(section, intersect<K>(points))}};
  });
  rep.expect(prefix + "surface_degree", dim_degree(2, 4), [&] { return dim_degree(hilbert_data(I)); });
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids{"3.2", "3.6", "3.7", "g5-trigonal", "g6-surface-gb", "g6-all-rho-zero"};
  return ids;
}

Report run_example(const std::string& id) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.experiment = id;
  if (id == "3.2") {
    example_32(rep);
  } else if (id == "3.6") {
    example_36(rep);
  } else if (id == "3.7") {
    example_37(rep);
  } else if (id == "g5-trigonal") {
    example_g5_trigonal(rep);
  } else if (id == "g6-surface-gb") {
    example_g6_surface_gb(rep);
  } else if (id == "g6-all-rho-zero") {
    example_g6_all_rho_zero(rep);
  } else {
    throw std::invalid_argument("unknown example \"" + id + "\"");
  }
  rep.timing_ms = elapsed_ms(start);
  return rep;
}

Report sample(const ExperimentConfig& config) {
  if (!config.field.is_prime_field()) throw std::invalid_argument("sample: field must be F_p");
  if (config.sample_count < 1) throw std::invalid_argument("sample: sample_count must be at least 1");
  int genus = 0;
  if (config.experiment == "sample-g5") genus = 5;
  if (config.experiment == "sample-g6") genus = 6;
  if (genus == 0) throw std::invalid_argument("sample: unknown experiment \"" + config.experiment + "\"");

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.experiment = config.experiment;
  const auto ring = make_ring<Zp>(canonical_variables(genus), config.field);
  const int n = config.sample_count;
  if (genus == 6) {
    Tally surfaces, curves;
    for (int i = 0; i < n; ++i) {
      std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(i));
      const auto A = random_skew_matrix(ring, rng);
      const auto Q2 = random_homogeneous(ring, 2, rng);
      const auto S = curve_invariants(pfaffian_ideal(A));
      surfaces.record(S.proj_dimension == 2 && S.degree == 5 && S.betti.rows() == kSurfaceBetti, i);
      const auto C = curve_invariants(complete_intersection_curve_g6(A, Q2));
      curves.record(C.proj_dimension == 1 && C.degree == 10 && C.arithmetic_genus == 6 && C.beta13 == 0, i);
    }
    surfaces.report(rep, "pfaffian_surfaces", Json{{"betti", kSurfaceBetti}, {"degree", 5}, {"projective_dimension", 2}},
                    n);
    curves.report(rep, "complete_intersection_curves",
                  Json{{"degree", 10}, {"arithmetic_genus", 6}, {"beta13", 0}, {"projective_dimension", 1}}, n);
  } else {
    Tally curves;
    for (int i = 0; i < n; ++i) {
      std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(i));
      std::array<Polynomial<Zp>, 3> q;
      for (auto& p : q) p = random_homogeneous(ring, 2, rng);
      const auto C = curve_invariants(complete_intersection_curve_g5(q));
      curves.record(C.proj_dimension == 1 && C.degree == 8 && C.arithmetic_genus == 5 && C.betti.rows() == kKoszulBetti, i);
    }
    curves.report(rep, "quadric_triples",
                  Json{{"degree", 8}, {"arithmetic_genus", 5}, {"betti", kKoszulBetti}, {"projective_dimension", 1}}, n);
  }
  rep.timing_ms = elapsed_ms(start);
  return rep;
}

template Ideal<Q> point_ideal<Q>(const Ring<Q>&, const std::vector<Q>&);
template Ideal<Zp> point_ideal<Zp>(const Ring<Zp>&, const std::vector<Zp>&);
template PetriSystemG6<Q> veronese_rho_zero_system<Q>(const Ring<Q>&, std::mt19937_64&);
template PetriSystemG6<Zp> veronese_rho_zero_system<Zp>(const Ring<Zp>&, std::mt19937_64&);
template void all_rho_zero_checks<Q>(Report&, const PetriSystemG6<Q>&, const std::string&);
template void all_rho_zero_checks<Zp>(Report&, const PetriSystemG6<Zp>&, const std::string&);

}  // namespace canonlab
