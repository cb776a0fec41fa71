#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "canonlab/groebner/ideal_io.hpp"
#include "canonlab/invariants/invariants_io.hpp"
#include "canonlab/invariants/tangent.hpp"
#include "canonlab/lab/constructions.hpp"
#include "canonlab/lab/experiments.hpp"
#include "canonlab/petri/petri_io.hpp"
#include "canonlab/polyring/poly_io.hpp"

using namespace canonlab;

namespace {

constexpr int kMisconfigured = 2;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

Json report_json(Report r, bool timing) {
  if (!timing) r.timing_ms = 0;
  return r.to_json();
}

int gb(const std::string& path, const std::string& order, const std::string& out) {
  const auto file = ideal_file_from_json(read_json(path));
  return visit_field(file.field, [&](auto tag) {
    using K = decltype(tag);
    const auto I = load_ideal<K>(file, MonomialOrder::parse(order));
    emit(basis_to_json(buchberger(I)), out);
    return 0;
  });
}

int invariants(const std::string& path, bool tangent, const std::string& out) {
  const auto file = ideal_file_from_json(read_json(path));
  return visit_field(file.field, [&](auto tag) {
    using K = decltype(tag);
    const auto I = load_ideal<K>(file);
    Json j{{"initial_ideal", monomial_ideal_to_json(initial_ideal(I))},
           {"hilbert", hilbert_to_json(hilbert_data(I))},
           {"betti", betti_to_json(betti_diagram(I))}};
    if (tangent) j["tangent_dim"] = tangent_dim(I);
    emit(j, out);
    return 0;
  });
}

int petri_build(const std::string& path, const std::string& out) {
  const auto file = petri_file_from_json(read_json(path));
  return visit_field(file.field, [&](auto tag) {
    using K = decltype(tag);
    if (file.genus == 5) {
      const auto sys = load_petri_g5<K>(file);
      emit(ideal_to_json(Ideal<K>(sys.ring, build_g5_quadrics(sys).list())), out);
    } else {
      const auto sys = load_petri_g6<K>(file);
      emit(ideal_to_json(Ideal<K>(sys.ring, build_g6_quadrics(sys).list())), out);
    }
    return 0;
  });
}

Json ledger(int genus) {
  Json entries = Json::array();
  for (const auto& e : dimension_ledger(genus)) {
    entries.push_back(Json{{"name", e.name}, {"value", e.value}, {"formula", e.formula}});
  }
  return Json{{"genus", genus}, {"entries", entries}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases, invariants and Petri systems of canonical curves of genus 5 and 6"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Report timing_ms as 0");

  std::string input, out, order = "grevlex", example;
  bool tangent = false;
  int genus = 6, count = 100;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;

  auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb_cmd->add_option("ideal", input, "Ideal JSON")->required();
  gb_cmd->add_option("--order", order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
  gb_cmd->add_option("--out", out, "Write the basis here instead of stdout");

  auto* inv_cmd = app.add_subcommand("invariants", "Initial ideal, Hilbert data and Betti diagram");
  inv_cmd->add_option("ideal", input, "Ideal JSON")->required();
  inv_cmd->add_flag("--tangent", tangent, "Also compute the Hilbert scheme tangent dimension");
  inv_cmd->add_option("--out", out, "Write the result here instead of stdout");

  auto* petri_cmd = app.add_subcommand("petri", "Petri systems");
  petri_cmd->require_subcommand(1);
  auto* build_cmd = petri_cmd->add_subcommand("build", "Quadrics f_ij of a Petri system file");
  build_cmd->add_option("system", input, "Petri system JSON")->required();
  build_cmd->add_option("--out", out, "Write the ideal here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Run a worked example; exit 0 iff every check passes");
  verify_cmd->add_option("example", example, "Worked example id")->required();
  verify_cmd->add_option("--out", out, "Write the report here instead of stdout");

  auto* sample_cmd = app.add_subcommand("sample", "Random complete intersections over F_p");
  sample_cmd->add_option("--genus", genus, "5 or 6")->check(CLI::IsMember({5, 6}));
  sample_cmd->add_option("--p", prime, "Prime modulus");
  sample_cmd->add_option("--n", count, "Number of samples")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "Base seed; sample i uses seed + i");
  sample_cmd->add_option("--out", out, "Write the report here instead of stdout");

  auto* ledger_cmd = app.add_subcommand("ledger", "Dimension counts of the genus-g families");
  ledger_cmd->add_option("--genus", genus, "5 or 6")->check(CLI::IsMember({5, 6}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kMisconfigured;
  }

  try {
    if (*gb_cmd) return gb(input, order, out);
    if (*inv_cmd) return invariants(input, tangent, out);
    if (*build_cmd) return petri_build(input, out);
    if (*verify_cmd) {
      const auto& ids = example_ids();
      if (std::find(ids.begin(), ids.end(), example) == ids.end()) {
        std::cerr << "unknown example \"" << example << "\"\n";
        return kMisconfigured;
      }
      const auto report = run_example(example);
      emit(report_json(report, !no_timing), out);
      return report.all_pass() ? 0 : 1;
    }
    if (*sample_cmd) {
      ExperimentConfig config;
      config.experiment = genus == 5 ? "sample-g5" : "sample-g6";
      config.field = FieldSpec::prime(prime);
      config.seed = seed;
      config.sample_count = count;
      const auto report = sample(config);
      emit(report_json(report, !no_timing), out);
      return report.all_pass() ? 0 : 1;
    }
    if (*ledger_cmd) {
      emit(ledger(genus), out);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kMisconfigured;
}
