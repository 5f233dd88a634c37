#include "coxnerve/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxnerve/abelian.hpp"
#include "coxnerve/actdim.hpp"
#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"
#include "coxnerve/examples.hpp"
#include "coxnerve/homology.hpp"
#include "coxnerve/serialize.hpp"
#include "coxnerve/simcomplex.hpp"
#include "coxnerve/verify.hpp"

namespace coxnerve {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path.empty()) throw InputError("--input is required for this command");
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

CoxeterMatrix load_matrix(const RunConfig& config) {
  CoxeterMatrix m = parse_coxeter_matrix(read_input(config.input_path));
  if (m.size() > config.max_generators) {
    throw InputError("input has " + std::to_string(m.size()) + " generators, above --max-generators " +
                     std::to_string(config.max_generators));
  }
  return m;
}

GeneratorSet parse_subset(const CoxeterMatrix& m, const std::string& text) {
  GeneratorSet t;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (!name.empty()) t.insert(m.index_of(name));
  }
  if (t.empty()) throw InputError("--subset names no generators");
  return t;
}

json verify_entry(const std::string& source, const CoxeterMatrix& m, json& summary, bool& ok) {
  json checks = json::object();
  for (const auto& c : verify_all(m)) {
    checks[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
    const bool prev = summary.contains(c.name) ? summary[c.name].get<bool>() : true;
    summary[c.name] = prev && c.passed;
    ok = ok && c.passed;
  }
  return {{"source", source}, {"generators", m.size()}, {"checks", checks}};
}

json run_verify(const RunConfig& config, bool& ok) {
  json inputs = json::array();
  json summary = json::object();
  ok = true;
  const bool use_corpus = config.corpus || (config.input_path.empty() && config.random == 0);
  if (!config.input_path.empty()) inputs.push_back(verify_entry(config.input_path, load_matrix(config), summary, ok));
  if (use_corpus) {
    for (const auto& name : verification_corpus()) {
      inputs.push_back(verify_entry("example:" + name, generate_example(name), summary, ok));
    }
  }
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.random; ++i) {
    const CoxeterMatrix m = random_coxeter_matrix(rng, config.random_max_generators);
    inputs.push_back(verify_entry("random:" + std::to_string(config.seed) + ":" + std::to_string(i), m,
                                  summary, ok));
  }
  return {{"inputs", inputs}, {"summary", summary}, {"passed", ok}};
}

json dispatch(const RunConfig& config, int& status) {
  status = 0;
  const std::string& cmd = config.command;
  if (cmd == "example") return json::parse(generate_example_document(config.example));
  if (cmd == "verify") {
    bool ok = true;
    json out = run_verify(config, ok);
    status = ok ? 0 : 2;
    return out;
  }
  const CoxeterMatrix m = load_matrix(config);
  if (cmd == "nerve") return to_json(nerve(m));
  if (cmd == "subdivide") return to_json(subdivide(m).complex);
  if (cmd == "octahedralize") {
    if (config.complex == "nerve") return to_json(octahedralize(nerve(m)));
    if (config.complex == "subdivision") return to_json(octahedralize(subdivide(m).complex));
    throw InputError("--complex must be 'nerve' or 'subdivision'");
  }
  if (cmd == "homology") {
    return {{"nerve", to_json(betti_profile(nerve(m)))},
            {"subdivision", to_json(betti_profile(subdivide(m).complex))}};
  }
  if (cmd == "roots") {
    if (!config.subset.empty()) return to_json(m, positive_roots(m, parse_subset(m, config.subset)));
    if (is_spherical(m, m.all())) return to_json(m, positive_roots(m, m.all()));
    return to_json(m, reflection_index(m).roots());
  }
  if (cmd == "report") return to_json(action_dimension_report(m, config.assume_kpi1));
  throw InputError("unknown command '" + cmd + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json") throw InputError("only --format json is supported");
    if (config.max_generators < 1) throw InputError("--max-generators must be positive");
    int status = 0;
    const json result = dispatch(config, status);
    const std::string text = result.dump(2) + "\n";
    if (config.output_path.empty()) {
      out << text;
    } else {
      std::ofstream f(config.output_path);
      if (!f) throw InputError("cannot open output file '" + config.output_path + "'");
      f << text;
    }
    if (status == 2) err << "verification failed: see the summary table\n";
    return status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const LemmaViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 2;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nerves, nested-set subdivisions and action-dimension bounds for Artin groups"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input,-i", config.input_path, "Coxeter matrix document ('-' for stdin)");
    if (needs_input) opt->required();
    sub->add_option("--output,-o", config.output_path, "Write output here instead of stdout");
    sub->add_option("--max-generators", config.max_generators, "Refuse inputs with more generators")
        ->capture_default_str();
    sub->add_option("--format", config.format, "Output format")->capture_default_str();
  };

  for (const char* name : {"nerve", "subdivide", "homology", "report"}) {
    auto* sub = app.add_subcommand(name, "");
    common(sub, true);
    if (std::string(name) == "report") {
      sub->add_flag("--assume-kpi1", config.assume_kpi1, "Assume the K(pi,1)-Conjecture holds");
    }
  }
  app.get_subcommand("nerve")->description("Nerve L: nonempty spherical subsets");
  app.get_subcommand("subdivide")->description("Nested-set subdivision L_oslash");
  app.get_subcommand("homology")->description("Reduced mod-2 Betti numbers and top integral cohomology");
  app.get_subcommand("report")->description("Action, obstructor and geometric dimension bounds");

  auto* octa = app.add_subcommand("octahedralize", "Octahedralization of L or L_oslash");
  common(octa, true);
  octa->add_option("--complex", config.complex, "nerve | subdivision")->capture_default_str();

  auto* roots = app.add_subcommand("roots", "Positive roots of a spherical subset");
  common(roots, true);
  roots->add_option("--subset", config.subset, "Comma-separated generators (default: all)");

  auto* verify = app.add_subcommand("verify", "Run the structural check suite");
  common(verify, false);
  verify->add_option("--seed", config.seed, "Seed for random matrices")->capture_default_str();
  verify->add_option("--random", config.random, "Number of random matrices")->capture_default_str();
  verify->add_option("--random-max-generators", config.random_max_generators,
                     "Largest random matrix")->capture_default_str();
  verify->add_flag("--corpus", config.corpus, "Include the builtin corpus");

  auto* example = app.add_subcommand("example", "Emit a builtin input document");
  example->add_option("name", config.example, "e.g. a_3, e8, raag-cycle-4, rp2-nerve")->required();
  example->add_option("--output,-o", config.output_path, "Write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 1;
  }
  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  return run(config, out, err);
}

}  // namespace coxnerve
