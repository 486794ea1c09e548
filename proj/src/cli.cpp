#include "polyvortex/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polyvortex/corotating.hpp"
#include "polyvortex/dynamics.hpp"
#include "polyvortex/errors.hpp"
#include "polyvortex/json_io.hpp"
#include "polyvortex/nested.hpp"
#include "polyvortex/polygon.hpp"
#include "polyvortex/system.hpp"

namespace polyvortex {

namespace {

using nlohmann::ordered_json;

struct Params {
  std::string command;
  int n = 0;
  std::optional<double> gamma1;
  std::optional<double> gamma2;
  std::string s1 = "1,0";
  std::string ratios;  // start:stop:count
  std::string spacing = "linear";
  std::vector<double> at;
  std::string format;  // per-command default when empty
  std::string output;
  std::string input;
  double tol = 1e-9;
  double t_end = 1.0;
  double rel_tol = 1e-10;
  std::string kind = "C";
  std::string ring_case = "rotating";
  bool absolute = false;
  std::string alignment;  // "", "aligned", "staggered"
};

PlanePoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ValidationError("expected point as \"x,y\", got \"" + text + "\"");
  }
  try {
    std::size_t ax = 0, ay = 0;
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    const double x = std::stod(xs, &ax);
    const double y = std::stod(ys, &ay);
    if (ax != xs.size() || ay != ys.size()) throw std::invalid_argument(text);
    return PlanePoint(x, y);
  } catch (const std::exception&) {
    throw ValidationError("expected point as \"x,y\", got \"" + text + "\"");
  }
}

std::string pick_format(const Params& p, const std::string& fallback) {
  const std::string f = p.format.empty() ? fallback : p.format;
  if (f != "json" && f != "csv") throw ValidationError("format must be json or csv");
  return f;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

std::vector<double> ratio_grid(const Params& p) {
  std::vector<double> grid;
  if (!p.ratios.empty()) {
    std::istringstream ss(p.ratios);
    std::string start_s, stop_s, count_s;
    if (!std::getline(ss, start_s, ':') || !std::getline(ss, stop_s, ':') ||
        !std::getline(ss, count_s)) {
      throw ValidationError("--ratios expects start:stop:count");
    }
    double start = 0.0, stop = 0.0;
    long count = 0;
    try {
      start = std::stod(start_s);
      stop = std::stod(stop_s);
      count = std::stol(count_s);
    } catch (const std::exception&) {
      throw ValidationError("--ratios expects numeric start:stop:count");
    }
    require(count >= 1, "--ratios count must be >= 1");
    if (p.spacing == "geometric") {
      require(start * stop > 0.0, "geometric spacing needs same-sign nonzero endpoints");
      for (long i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        grid.push_back(start * std::pow(stop / start, f));
      }
    } else if (p.spacing == "linear") {
      for (long i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        grid.push_back(start + f * (stop - start));
      }
    } else {
      throw ValidationError("spacing must be linear or geometric");
    }
  }
  grid.insert(grid.end(), p.at.begin(), p.at.end());
  require(!grid.empty(), "scan needs --ratios and/or --at values");
  return grid;
}

VortexSystem load_system(const std::string& path) {
  require(!path.empty(), "--input file is required");
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return system_from_json_string(buf.str());
}

double ratio_of(const Params& p) {
  if (!p.at.empty()) {
    require(p.at.size() == 1, "classify-regime takes a single --at ratio");
    return p.at.front();
  }
  require(p.gamma1.has_value() && p.gamma2.has_value(),
          "classify-regime needs --at or --gamma1/--gamma2");
  require(*p.gamma1 != 0.0, "gamma1 must be nonzero");
  return *p.gamma2 / *p.gamma1;
}

ordered_json regime_to_json(const RegimeClassification& c) {
  ordered_json j;
  j["n"] = c.n;
  j["gamma_ratio"] = c.gamma_ratio;
  j["regime"] = c.regime;
  j["aligned_count"] = c.aligned.exact() ? ordered_json(c.aligned.lo) : ordered_json(nullptr);
  j["aligned_count_range"] = ordered_json::array({c.aligned.lo, c.aligned.hi});
  j["staggered_count"] =
      c.staggered.exact() ? ordered_json(c.staggered.lo) : ordered_json(nullptr);
  j["staggered_count_range"] = ordered_json::array({c.staggered.lo, c.staggered.hi});
  j["mu_n"] = c.mu_n;
  j["lambda_n"] = c.lambda_n;
  return j;
}

std::string range_text(const CountRange& c) {
  return c.exact() ? std::to_string(c.lo) : std::to_string(c.lo) + "-" + std::to_string(c.hi);
}

int cmd_verify(const Params& p, std::ostream& out) {
  const VortexSystem system = load_system(p.input);
  require(p.tol > 0.0, "--tol must be positive");
  const EquilibriumReport rep = classify(system, p.tol);
  if (pick_format(p, "json") == "json") {
    out << report_to_json(rep).dump() << "\n";
  } else {
    out << "kind,omega,translation_vx,translation_vy,center_x,center_y,residual\n";
    out << to_string(rep.kind) << "," << format_double(rep.omega) << ",";
    if (rep.translation_velocity) {
      out << format_double(std::real(*rep.translation_velocity)) << ","
          << format_double(std::imag(*rep.translation_velocity)) << ",";
    } else {
      out << ",,";
    }
    if (rep.center) {
      out << format_double(std::real(*rep.center)) << ","
          << format_double(std::imag(*rep.center)) << ",";
    } else {
      out << ",,";
    }
    out << format_double(rep.residual) << "\n";
  }
  return kCliOk;
}

int cmd_solve_nested(const Params& p, std::ostream& out) {
  require(p.n >= 2, "--n must be >= 2");
  require(p.gamma1.has_value() && p.gamma2.has_value(), "need --gamma1 and --gamma2");
  const PlanePoint s1 = parse_point(p.s1);
  const auto solutions = solve_nested(p.n, *p.gamma1, *p.gamma2, s1, p.tol);
  if (pick_format(p, "json") == "json") {
    ordered_json j;
    j["n"] = p.n;
    j["gamma1"] = *p.gamma1;
    j["gamma2"] = *p.gamma2;
    j["s1"] = ordered_json::array({std::real(s1), std::imag(s1)});
    j["solutions"] = ordered_json::array();
    for (const auto& sol : solutions) {
      ordered_json sj;
      sj["alignment"] = to_string(sol.alignment);
      sj["x"] = sol.x;
      sj["system"] = system_to_json(sol.system);
      sj["report"] = report_to_json(sol.report);
      sj["boundary_warning"] = sol.boundary_warning;
      j["solutions"].push_back(sj);
    }
    out << j.dump() << "\n";
  } else {
    out << "alignment,x,kind,omega,residual\n";
    for (const auto& sol : solutions) {
      out << to_string(sol.alignment) << "," << format_double(sol.x) << ","
          << to_string(sol.report.kind) << "," << format_double(sol.report.omega) << ","
          << format_double(sol.report.residual) << "\n";
    }
  }
  return kCliOk;
}

int cmd_classify_regime(const Params& p, std::ostream& out) {
  require(p.n >= 2, "--n must be >= 2");
  const RegimeClassification c = classify_regime(p.n, ratio_of(p));
  if (pick_format(p, "json") == "json") {
    out << regime_to_json(c).dump() << "\n";
  } else {
    out << "n,gamma_ratio,regime_label,aligned_predicted,staggered_predicted,mu_n,lambda_n\n";
    out << c.n << "," << format_double(c.gamma_ratio) << "," << c.regime << ","
        << range_text(c.aligned) << "," << range_text(c.staggered) << ","
        << format_double(c.mu_n) << "," << format_double(c.lambda_n) << "\n";
  }
  return kCliOk;
}

int cmd_scan(const Params& p, std::ostream& out) {
  require(p.n >= 2, "--n must be >= 2");
  const auto rows = scan_regimes(p.n, ratio_grid(p));
  if (pick_format(p, "csv") == "csv") {
    write_scan_csv(rows, out);
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json rj = regime_to_json(row.prediction);
      rj["aligned_numeric"] = row.aligned_numeric;
      rj["staggered_numeric"] = row.staggered_numeric;
      rj["consistent"] = row.consistent;
      j.push_back(rj);
    }
    out << j.dump() << "\n";
  }
  return kCliOk;
}

int cmd_corotate(const Params& p, std::ostream& out) {
  require(p.n >= 2, "--n must be >= 2");
  require(p.gamma1.has_value() && *p.gamma1 != 0.0, "need nonzero --gamma1");
  require(pick_format(p, "json") == "json", "corotate emits JSON only");
  const PlanePoint s1 = parse_point(p.s1);

  if (p.absolute) {
    const auto abs_eq = absolute_equilibrium(p.n, *p.gamma1);
    const CorotatingPoint point = corotating_absolute(p.n, *p.gamma1);
    out << corotating_to_json(abs_eq.system, {point}) << "\n";
    return kCliOk;
  }
  if (!p.gamma2.has_value()) {
    const PolygonRing ring{p.n, s1, std::vector<double>(p.n, *p.gamma1)};
    out << corotating_to_json(ring_to_system(ring), corotating_single(p.n, s1, *p.gamma1))
        << "\n";
    return kCliOk;
  }

  require(*p.gamma2 != 0.0, "--gamma2 must be nonzero");
  std::optional<Alignment> wanted;
  if (!p.alignment.empty()) {
    require(p.alignment == "aligned" || p.alignment == "staggered",
            "--alignment must be aligned or staggered");
    wanted = (p.alignment == "aligned") ? Alignment::Aligned : Alignment::Staggered;
  }
  const bool same_sign = (*p.gamma1 > 0.0) == (*p.gamma2 > 0.0);
  const Alignment admissible = same_sign ? Alignment::Aligned : Alignment::Staggered;
  if (wanted && *wanted != admissible) {
    throw HypothesisUnmetError(
        "co-rotating ray analysis requires same-sign vorticities on vertex rays or "
        "opposite-sign vorticities on midpoint rays");
  }
  const auto solutions = solve_nested(p.n, *p.gamma1, *p.gamma2, s1, p.tol);
  ordered_json sets = ordered_json::array();
  for (const auto& sol : solutions) {
    if (sol.alignment != admissible) continue;
    const PlanePoint phase = (sol.alignment == Alignment::Aligned)
                                 ? PlanePoint(1.0, 0.0)
                                 : std::polar(1.0, std::numbers::pi / p.n);
    const NestedPolygonConfig config{p.n, s1, s1 * (sol.x * phase), *p.gamma1, *p.gamma2};
    const auto points = corotating_nested(config, sol.alignment, sol.x);
    sets.push_back(ordered_json::parse(corotating_to_json(sol.system, points)));
  }
  if (sets.empty()) {
    throw HypothesisUnmetError("no nested solution matches the co-rotating hypotheses");
  }
  out << sets.dump() << "\n";
  return kCliOk;
}

int cmd_simulate(const Params& p, std::ostream& out) {
  const VortexSystem system = load_system(p.input);
  require(p.t_end > 0.0, "--t-end must be positive");
  const Trajectory tr = integrate(system, p.t_end, p.rel_tol);
  require(pick_format(p, "csv") == "csv", "simulate emits CSV only");
  write_trajectory_csv(tr, out);
  return kCliOk;
}

int cmd_spectrum(const Params& p, std::ostream& out) {
  require(p.n >= 2, "--n must be >= 2");
  require(p.kind == "C" || p.kind == "C0", "--kind must be C or C0");
  const CirculantSpectrum sp = circulant_spectrum(
      p.n, p.kind == "C" ? CirculantKind::C : CirculantKind::C0);
  if (pick_format(p, "json") == "json") {
    out << spectrum_to_json(sp) << "\n";
  } else {
    out << "k,eigenvalue\n";
    for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
      out << k << "," << format_double(sp.eigenvalues[k]) << "\n";
    }
  }
  return kCliOk;
}

int cmd_rigidity(const Params& p, std::ostream& out) {
  require(p.n >= 2, "--n must be >= 2");
  require(p.ring_case == "rotating" || p.ring_case == "translating",
          "--case must be rotating or translating");
  const VorticitySolutionSpace space = vorticity_solution_space(
      p.n, p.ring_case == "rotating" ? RingCase::Rotating : RingCase::Translating);
  if (pick_format(p, "json") == "json") {
    ordered_json j;
    j["n"] = space.n;
    j["case"] = space.ring_case == RingCase::Rotating ? "ROTATING" : "TRANSLATING";
    j["dimension"] = space.dimension;
    j["basis"] = ordered_json::array();
    for (int c = 0; c < space.basis.cols(); ++c) {
      ordered_json col = ordered_json::array();
      for (int r = 0; r < space.basis.rows(); ++r) col.push_back(space.basis(r, c));
      j["basis"].push_back(col);
    }
    out << j.dump() << "\n";
  } else {
    out << "basis_index,component_index,value\n";
    for (int c = 0; c < space.basis.cols(); ++c) {
      for (int r = 0; r < space.basis.rows(); ++r) {
        out << c << "," << r << "," << format_double(space.basis(r, c)) << "\n";
      }
    }
  }
  return kCliOk;
}

int dispatch(const Params& p, std::ostream& out) {
  if (p.command == "verify") return cmd_verify(p, out);
  if (p.command == "solve-nested") return cmd_solve_nested(p, out);
  if (p.command == "classify-regime") return cmd_classify_regime(p, out);
  if (p.command == "scan") return cmd_scan(p, out);
  if (p.command == "corotate") return cmd_corotate(p, out);
  if (p.command == "simulate") return cmd_simulate(p, out);
  if (p.command == "spectrum") return cmd_spectrum(p, out);
  if (p.command == "rigidity") return cmd_rigidity(p, out);
  throw ValidationError("unknown command \"" + p.command + "\"");
}

int dispatch_with_output(const Params& p, std::ostream& out, std::ostream& err) {
  try {
    if (!p.output.empty() && p.output != "-") {
      std::ofstream file(p.output);
      if (!file) throw ValidationError("cannot open output file " + p.output);
      const int code = dispatch(p, file);
      file.flush();
      if (!file) throw Error("failed writing output file " + p.output);
      return code;
    }
    const int code = dispatch(p, out);
    out.flush();
    return code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kCliValidationError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCliComputationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCliComputationError;
  }
}

Params params_from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be a JSON object");

  Params p;
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const auto& v = item.value();
    try {
      if (key == "command") p.command = v.get<std::string>();
      else if (key == "n") p.n = v.get<int>();
      else if (key == "gamma1") p.gamma1 = v.get<double>();
      else if (key == "gamma2") p.gamma2 = v.get<double>();
      else if (key == "s1") p.s1 = v.get<std::string>();
      else if (key == "ratios") p.ratios = v.get<std::string>();
      else if (key == "spacing") p.spacing = v.get<std::string>();
      else if (key == "at") p.at = v.get<std::vector<double>>();
      else if (key == "format") p.format = v.get<std::string>();
      else if (key == "output") p.output = v.get<std::string>();
      else if (key == "input") p.input = v.get<std::string>();
      else if (key == "tol") p.tol = v.get<double>();
      else if (key == "t_end") p.t_end = v.get<double>();
      else if (key == "rel_tol") p.rel_tol = v.get<double>();
      else if (key == "kind") p.kind = v.get<std::string>();
      else if (key == "case") p.ring_case = v.get<std::string>();
      else if (key == "absolute") p.absolute = v.get<bool>();
      else if (key == "alignment") p.alignment = v.get<std::string>();
      else throw ValidationError("unknown config key \"" + key + "\"");
    } catch (const nlohmann::json::exception&) {
      throw ValidationError("bad value for config key \"" + key + "\"");
    }
  }
  if (p.command.empty()) throw ValidationError("config must set \"command\"");
  return p;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative equilibria of point vortices on concentric regular polygons"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file mirroring the flags");

  Params p;
  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    if (with_format) cmd->add_option("--format", p.format, "json or csv");
    cmd->add_option("--output", p.output, "output file (default: standard output)");
  };

  auto* verify = app.add_subcommand("verify", "classify a vortex system file");
  verify->add_option("--input", p.input, "vortex system JSON file")->required();
  verify->add_option("--tol", p.tol, "classification tolerance");
  add_common(verify);

  auto* solve = app.add_subcommand("solve-nested", "all nested-ring relative equilibria");
  solve->add_option("--n", p.n, "vertices per ring")->required();
  solve->add_option("--gamma1", p.gamma1, "ring-1 vorticity")->required();
  solve->add_option("--gamma2", p.gamma2, "ring-2 vorticity")->required();
  solve->add_option("--s1", p.s1, "ring-1 vertex as \"x,y\"");
  solve->add_option("--tol", p.tol, "verification tolerance");
  add_common(solve);

  auto* regime = app.add_subcommand("classify-regime", "predicted equilibrium counts");
  regime->add_option("--n", p.n, "vertices per ring")->required();
  regime->add_option("--at", p.at, "vorticity ratio gamma2/gamma1");
  regime->add_option("--gamma1", p.gamma1, "ring-1 vorticity");
  regime->add_option("--gamma2", p.gamma2, "ring-2 vorticity");
  add_common(regime);

  auto* scan = app.add_subcommand("scan", "predicted vs numeric counts over a ratio grid");
  scan->add_option("--n", p.n, "vertices per ring")->required();
  scan->add_option("--ratios", p.ratios, "grid as start:stop:count");
  scan->add_option("--spacing", p.spacing, "linear or geometric");
  scan->add_option("--at", p.at, "explicit extra ratios (repeatable)");
  add_common(scan);

  auto* corotate = app.add_subcommand("corotate", "zero-vorticity co-rotating points");
  corotate->add_option("--n", p.n, "vertices per ring")->required();
  corotate->add_option("--gamma1", p.gamma1, "ring-1 (or polygon) vorticity")->required();
  corotate->add_option("--gamma2", p.gamma2, "ring-2 vorticity (omit for one polygon)");
  corotate->add_option("--s1", p.s1, "ring-1 vertex as \"x,y\"");
  corotate->add_option("--tol", p.tol, "verification tolerance");
  corotate->add_flag("--absolute", p.absolute, "fixed point of the absolute equilibrium");
  corotate->add_option("--alignment", p.alignment, "restrict to aligned or staggered");
  add_common(corotate);

  auto* simulate = app.add_subcommand("simulate", "integrate a vortex system to CSV");
  simulate->add_option("--input", p.input, "vortex system JSON file")->required();
  simulate->add_option("--t-end", p.t_end, "integration time")->required();
  simulate->add_option("--rel-tol", p.rel_tol, "integrator tolerance");
  add_common(simulate);

  auto* spectrum = app.add_subcommand("spectrum", "circulant matrix eigenvalues");
  spectrum->add_option("--n", p.n, "matrix size")->required();
  spectrum->add_option("--kind", p.kind, "C or C0");
  add_common(spectrum);

  auto* rigidity = app.add_subcommand("rigidity", "admissible ring vorticity space");
  rigidity->add_option("--n", p.n, "vertices")->required();
  rigidity->add_option("--case", p.ring_case, "rotating or translating");
  add_common(rigidity);

  std::vector<const char*> argv;
  argv.push_back("polyvortex");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kCliOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kCliValidationError;
  }

  try {
    if (!config_path.empty()) {
      if (!app.get_subcommands().empty()) {
        throw ValidationError("--config replaces the subcommand form; use one or the other");
      }
      const Params cp = params_from_config_file(config_path);
      return dispatch_with_output(cp, out, err);
    }
    const auto subs = app.get_subcommands();
    if (subs.empty()) {
      err << app.help();
      return kCliValidationError;
    }
    p.command = subs.front()->get_name();
    return dispatch_with_output(p, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kCliValidationError;
  }
}

}  // namespace polyvortex
