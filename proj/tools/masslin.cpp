// masslin: exact computation of the characteristic number I(k; b) of
// Delzant polytopes, mass-linearity decisions over the chamber, and
// parameter sweeps / verification suites for the built-in polytope
// families. All values are exact rationals; exit codes: 0 success,
// 1 geometry/consistency error, 2 not Delzant, 3 parse or usage error,
// 4 sampling budget exhausted.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "masslin/io.hpp"
#include "masslin/verify.hpp"

namespace {

using namespace masslin;

struct RunConfig {
  std::string input_path;
  std::string family_json;
  std::string b_text;
  std::size_t samples = 0;
  unsigned long seed = 0;
  std::string grid_text;
  std::string format;
  std::string out_path;
  bool formal = false;
  bool decimal = false;
};

/// Either a raw polytope or a named family (which also carries its
/// closed forms). Exactly one input source per invocation.
struct Input {
  HalfSpaceSystem sys;
  std::optional<FamilySpec> family;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_family(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  return j.is_object() && j.contains("family");
}

Input load_input(const RunConfig& cfg) {
  const bool has_file = !cfg.input_path.empty();
  const bool has_family = !cfg.family_json.empty();
  if (has_file == has_family)
    throw ParseError("provide exactly one of --input FILE or --family JSON");
  const std::string text = has_file ? slurp(cfg.input_path) : cfg.family_json;
  if (looks_like_family(text)) {
    FamilySpec spec = parse_family_json(text);
    return Input{build_family(spec), std::move(spec)};
  }
  if (has_family)
    throw ParseError("--family JSON must contain a \"family\" key");
  return Input{parse_polytope_json(text), std::nullopt};
}

IntVector required_b(const RunConfig& cfg, const HalfSpaceSystem& sys) {
  if (cfg.b_text.empty()) throw ParseError("--b is required for this command");
  IntVector b = parse_int_vector(cfg.b_text);
  if (b.dim() != sys.dim())
    throw DimensionError("--b has " + std::to_string(b.dim()) +
                         " entries; the polytope dimension is " +
                         std::to_string(sys.dim()));
  return b;
}

void emit(const RunConfig& cfg, const std::string& text) {
  const char* tail = text.empty() || text.back() != '\n' ? "\n" : "";
  if (cfg.out_path.empty()) {
    std::cout << text << tail;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw ParseError("cannot open output file: " + cfg.out_path);
  out << text << tail;
}

int cmd_validate(const RunConfig& cfg) {
  const Input input = load_input(cfg);
  std::string report = validation_report_json(input.sys, cfg.decimal);
  // Bundle inputs also report the two parameter-domain readings
  // (offset inequality vs ceiling-height inequality) next to the
  // geometric verdict.
  if (input.family &&
      std::holds_alternative<DeltaPBundleSpec>(*input.family)) {
    const auto& spec = std::get<DeltaPBundleSpec>(*input.family);
    const BundleParameterReadings readings = bundle_parameter_readings(spec);
    nlohmann::json j = nlohmann::json::parse(report);
    j["parameter_readings"] = {
        {"offset_inequality", readings.offset_inequality},
        {"height_inequality", readings.height_inequality},
        {"geometric", readings.geometric},
        {"consistent", readings.consistent()}};
    report = j.dump(2);
  }
  emit(cfg, report);
  return is_delzant(input.sys).ok ? 0 : 2;
}

int cmd_invariant(const RunConfig& cfg) {
  const Input input = load_input(cfg);
  const IntVector b = required_b(cfg, input.sys);
  const InvariantReport rep =
      characteristic_number(input.sys, b, cfg.formal);
  emit(cfg, invariant_report_json(input.sys, b, rep, cfg.decimal));
  return 0;
}

int cmd_mass_linear(const RunConfig& cfg) {
  const Input input = load_input(cfg);
  const IntVector b = required_b(cfg, input.sys);
  const DelzantVerdict delzant = is_delzant(input.sys);
  if (!delzant.ok) throw NotDelzantError(delzant.diagnostic);
  SamplingConfig sampling;
  sampling.seed = cfg.seed;
  sampling.validation_points = cfg.samples;
  const Chamber ch(input.sys);
  const LinearityVerdict verdict = is_mass_linear(ch, b, sampling);
  emit(cfg, linearity_report_json(input.sys, b, verdict, cfg.decimal));
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  const bool has_file = !cfg.input_path.empty();
  const bool has_family = !cfg.family_json.empty();
  if (has_file == has_family)
    throw ParseError("provide exactly one of --input FILE or --family JSON");
  const std::string text = has_file ? slurp(cfg.input_path) : cfg.family_json;
  if (!looks_like_family(text))
    throw ParseError("sweep requires a family spec with a \"family\" key");
  if (cfg.grid_text.empty()) throw ParseError("--grid is required for sweep");
  const auto grid = parse_grid(cfg.grid_text);

  // Grid axes may be omitted from the family spec; each grid point
  // overwrites them anyway.
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  for (const GridRange& axis : grid)
    if (!j.contains(axis.name)) j[axis.name] = "1";
  const FamilySpec family = parse_family_json(j.dump());

  const std::size_t family_dim = std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DeltaPBundleSpec>)
          return s.p + 1;
        else if constexpr (std::is_same_v<T, HirzebruchSpec>)
          return 2;
        else
          return s.n;
      },
      family);
  if (cfg.b_text.empty()) throw ParseError("--b is required for this command");
  const IntVector b = parse_int_vector(cfg.b_text);
  if (b.dim() != family_dim)
    throw DimensionError("--b has " + std::to_string(b.dim()) +
                         " entries; the family dimension is " +
                         std::to_string(family_dim));

  // Cartesian product in the order the axes were written, first axis
  // outermost; axes not present keep the family's own parameter.
  std::vector<std::pair<Rational, Rational>> points;  // (tau, lambda)
  const auto family_params = [&]() -> std::pair<Rational, Rational> {
    return std::visit(
        [](const auto& s) -> std::pair<Rational, Rational> {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SimplexSpec>)
            return {s.tau, Rational(0)};
          else
            return {s.tau, s.lambda};
        },
        family);
  }();
  if (grid.size() == 1) {
    for (const Rational& v : grid[0].values())
      points.emplace_back(grid[0].name == "tau" ? v : family_params.first,
                          grid[0].name == "tau" ? family_params.second : v);
  } else {
    for (const Rational& v0 : grid[0].values())
      for (const Rational& v1 : grid[1].values()) {
        const Rational& tau = grid[0].name == "tau" ? v0 : v1;
        const Rational& lambda = grid[0].name == "tau" ? v1 : v0;
        points.emplace_back(tau, lambda);
      }
  }

  std::vector<SweepRow> rows;
  for (const auto& [tau, lambda] : points) {
    SweepRow row;
    for (const GridRange& axis : grid)
      row.parameters.emplace_back(axis.name,
                                  (axis.name == "tau" ? tau : lambda).str());
    const FamilySpec at = family_with_parameters(family, tau, lambda);
    try {
      const HalfSpaceSystem sys = build_family(at);
      const InvariantReport rep = characteristic_number(sys, b);
      row.status = "ok";
      row.cm_dot_b = rep.cm_dot_b;
      row.invariant = rep.value;
      row.closed_form_invariant = family_closed_form_invariant(at, b);
      row.match = *row.invariant == *row.closed_form_invariant;
    } catch (const GeometryError&) {
      row.status = "outside";
    } catch (const DomainError&) {
      row.status = "outside";
    }
    rows.push_back(std::move(row));
  }

  if (cfg.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const SweepRow& row : rows) {
      nlohmann::json r;
      for (const auto& [name, value] : row.parameters) r[name] = value;
      r["status"] = row.status;
      if (row.status == "ok") {
        r["cm_dot_b"] = row.cm_dot_b->str();
        r["invariant"] = row.invariant->str();
        r["closed_form_invariant"] = row.closed_form_invariant->str();
        if (cfg.decimal) {
          r["cm_dot_b_approx"] = row.cm_dot_b->to_double();
          r["invariant_approx"] = row.invariant->to_double();
          r["closed_form_invariant_approx"] =
              row.closed_form_invariant->to_double();
        }
      }
      r["match"] = row.match;
      out.push_back(std::move(r));
    }
    emit(cfg, out.dump(2));
  } else {
    emit(cfg, sweep_to_csv(rows, cfg.decimal));
  }
  return 0;
}

int cmd_verify(const std::string& suite) {
  const auto results = run_verification(suite);
  std::size_t pass = 0, total = 0;
  for (const SuiteResult& s : results) {
    for (const CheckResult& c : s.checks) {
      std::cout << (c.pass ? "pass" : "FAIL") << "  [" << s.suite << "] "
                << c.name << " -- " << c.detail << "\n";
      ++total;
      if (c.pass) ++pass;
    }
    std::cout << "[" << s.suite << "] " << s.passed() << "/"
              << s.checks.size() << " checks passed\n";
  }
  std::cout << "total: " << pass << "/" << total << " checks passed\n";
  return pass == total ? 0 : 1;
}

int dispatch(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const NotDelzantError& e) {
    std::cerr << "error: not Delzant: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SamplingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact characteristic numbers and mass-linearity of Delzant "
      "polytopes"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string suite = "all";

  const auto add_input_flags = [&cfg](CLI::App* cmd) {
    cmd->add_option("--input", cfg.input_path,
                    "Polytope or family spec file (JSON)");
    cmd->add_option("--family", cfg.family_json, "Inline family spec JSON");
    cmd->add_flag("--decimal", cfg.decimal,
                  "Add approximate float fields (labeled _approx)");
    cmd->add_option("--out", cfg.out_path, "Write the report here");
  };

  CLI::App* validate =
      app.add_subcommand("validate", "Check the polytope and report "
                                     "vertices and the Delzant verdict");
  add_input_flags(validate);

  CLI::App* invariant = app.add_subcommand(
      "invariant", "Compute I(k; b) with per-facet contributions");
  add_input_flags(invariant);
  invariant->add_option("--b", cfg.b_text, "Direction, e.g. \"1,0,-2\"");
  invariant->add_flag("--formal", cfg.formal,
                      "Evaluate the facet formula without the Delzant check");

  CLI::App* mass_linear = app.add_subcommand(
      "mass-linear", "Decide mass linearity of (polytope, b) over the "
                     "chamber");
  add_input_flags(mass_linear);
  mass_linear->add_option("--b", cfg.b_text, "Direction, e.g. \"1,0,-2\"");
  mass_linear->add_option("--samples", cfg.samples,
                          "Validation sample count (default: degree-driven)");
  mass_linear->add_option("--seed", cfg.seed, "Sampling seed (default 0)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate I and <Cm,b> over a (tau, lambda) grid against "
               "the family closed form");
  add_input_flags(sweep);
  sweep->add_option("--b", cfg.b_text, "Direction, e.g. \"1,0\"");
  sweep->add_option("--grid", cfg.grid_text,
                    "Axes, e.g. \"tau=1..3step1/2;lambda=1..2step1/2\"");
  sweep->add_option("--format", cfg.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite (default: all)");
  verify->add_option("suite", suite,
                     "Suite name; one of: lemma-moments, "
                     "bundle-factorization, bundle-mass-linear, hirzebruch, "
                     "truncated-simplex, structural, cross-family, "
                     "equivalences, all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (validate->parsed()) return dispatch([&] { return cmd_validate(cfg); });
  if (invariant->parsed()) return dispatch([&] { return cmd_invariant(cfg); });
  if (mass_linear->parsed())
    return dispatch([&] { return cmd_mass_linear(cfg); });
  if (sweep->parsed()) return dispatch([&] { return cmd_sweep(cfg); });
  return dispatch([&] { return cmd_verify(suite); });
}
