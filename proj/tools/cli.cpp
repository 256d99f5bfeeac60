#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace wellblock::cli {

using nlohmann::json;

ConfigError::ConfigError(std::string key, const std::string& message)
    : Error("config error at '" + key + "': " + message), key_(std::move(key)) {}

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ConfigError("output.format", "expected csv or json, got '" + s + "'");
}

namespace {

std::string scheme_name(fd::TimeScheme s) { return s == fd::TimeScheme::Implicit ? "implicit" : "explicit"; }

// Typed view of one JSON object that remembers which keys were read.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }

  bool has(const std::string& k) {
    seen_.insert(k);
    return j_.contains(k) && !j_.at(k).is_null();
  }

  double number(const std::string& k, double fallback) { return has(k) ? number_at(k) : fallback; }

  double required_number(const std::string& k) {
    if (!has(k)) throw ConfigError(key(k), "required key is missing");
    return number_at(k);
  }

  std::size_t count(const std::string& k, std::size_t fallback) {
    if (!has(k)) return fallback;
    const auto& v = j_.at(k);
    if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError(key(k), "expected a non-negative integer");
    return v.get<std::size_t>();
  }

  std::string text(const std::string& k, const std::string& fallback) {
    if (!has(k)) return fallback;
    const auto& v = j_.at(k);
    if (!v.is_string()) throw ConfigError(key(k), "expected a string");
    return v.get<std::string>();
  }

  std::string required_text(const std::string& k) {
    if (!has(k)) throw ConfigError(key(k), "required key is missing");
    return text(k, {});
  }

  bool flag(const std::string& k, bool fallback) {
    if (!has(k)) return fallback;
    const auto& v = j_.at(k);
    if (!v.is_boolean()) throw ConfigError(key(k), "expected true or false");
    return v.get<bool>();
  }

  std::vector<double> numbers(const std::string& k) {
    if (!has(k)) throw ConfigError(key(k), "required key is missing");
    const auto& v = j_.at(k);
    if (!v.is_array()) throw ConfigError(key(k), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw ConfigError(key(k) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  const json& raw(const std::string& k) {
    seen_.insert(k);
    return j_.at(k);
  }

  void finish() const {
    for (const auto& [k, _] : j_.items()) {
      if (!seen_.count(k)) throw ConfigError(key(k), "unknown key");
    }
  }

 private:
  double number_at(const std::string& k) const {
    const auto& v = j_.at(k);
    if (!v.is_number()) throw ConfigError(key(k), "expected a number");
    return v.get<double>();
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <class Fn>
auto as_config_error(const std::string& key, Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw ConfigError(key, e.what());
  }
}

fd::TimeScheme scheme_from(Section& s, const std::string& k) {
  const auto name = s.text(k, "implicit");
  if (name == "implicit") return fd::TimeScheme::Implicit;
  if (name == "explicit") return fd::TimeScheme::Explicit;
  throw ConfigError(s.key(k), "expected implicit or explicit, got '" + name + "'");
}

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) return std::isfinite(v) ? json(v) : json(fmt17(v));
        else return json(v);
      },
      c);
}

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

std::string geometry_name(GeometryKind g) { return to_string(g); }

analytic::BdModeRadial radial_mode(const ValidatedProblem& p) {
  return analytic::bd_eigenpair_radial(std::get<RadialAnnulus>(p.geometry()), p.params());
}

RadiusSolution solve(const RunConfig& c, const ValidatedProblem& p) {
  const auto& grid = p.grid();
  if (const auto* slab = std::get_if<Slab1D>(&p.geometry())) {
    switch (c.regime) {
      case Regime::SteadyState: return r0_ss_1d(grid);
      case Regime::PseudoSteadyState: return r0_pss_1d(grid, *slab, c.solver);
      case Regime::BoundaryDominated: return r0_bd_1d(p.params(), grid, *slab, grid.tau(), c.solver);
    }
  }
  const auto& annulus = std::get<RadialAnnulus>(p.geometry());
  switch (c.regime) {
    case Regime::SteadyState: break;
    case Regime::PseudoSteadyState: return r0_pss_radial(grid, annulus, c.solver);
    case Regime::BoundaryDominated:
      return r0_bd_radial(p.params(), grid, annulus, radial_mode(p), grid.tau(), c.solver);
  }
  throw ConfigError("regime", "steady state is defined for the slab geometry only");
}

// DomainError from validation keeps its field name and maps to the configuration exit code.
ValidatedProblem problem_of(const RunConfig& c) { return validate_problem(c.inputs); }

json error_record(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

void emit(const json& payload, const Table* table, Format format, const std::string& path, std::ostream& out) {
  std::string text;
  if (format == Format::Csv && table) text = write_csv(*table);
  else text = payload.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("output.path", "cannot open '" + path + "' for writing");
  f << text;
}

}  // namespace

RunConfig parse_config(const json& j) {
  Section root(j, "");
  RunConfig c;
  c.regime = as_config_error("regime", [&] { return regime_from_string(root.required_text("regime")); });

  if (!root.has("geometry")) throw ConfigError("geometry", "required key is missing");
  {
    Section g(root.raw("geometry"), "geometry");
    const auto kind = g.text("kind", "slab");
    if (kind == "slab") c.inputs.geometry = GeometryKind::Slab1D;
    else if (kind == "radial") c.inputs.geometry = GeometryKind::RadialAnnulus;
    else throw ConfigError("geometry.kind", "expected slab or radial, got '" + kind + "'");
    c.inputs.exterior = g.required_number("exterior");
    if (c.inputs.geometry == GeometryKind::RadialAnnulus) c.inputs.well_radius = g.required_number("well_radius");
    else c.inputs.well_radius = g.number("well_radius", 0.0);
    g.finish();
  }

  if (!root.has("grid")) throw ConfigError("grid", "required key is missing");
  {
    Section g(root.raw("grid"), "grid");
    c.inputs.delta = g.required_number("delta");
    const bool slab = c.inputs.geometry == GeometryKind::Slab1D;
    const auto guess = slab && c.inputs.delta > 0.0
                           ? static_cast<std::size_t>(std::max<long long>(1, std::llround(c.inputs.exterior / c.inputs.delta)))
                           : std::size_t{1};
    c.inputs.blocks = g.count("blocks", guess);
    c.inputs.tau = g.number("tau", 1e-3);
    g.finish();
  }

  if (root.has("fluid")) {
    Section f(root.raw("fluid"), "fluid");
    c.inputs.conductivity = f.number("conductivity", 1.0);
    c.inputs.porosity = f.number("porosity", 1.0);
    c.inputs.compressibility = f.number("compressibility", 1.0);
    c.inputs.thickness = f.number("thickness", 1.0);
    f.finish();
  }

  if (root.has("solver")) {
    Section s(root.raw("solver"), "solver");
    c.solver.abs_tol = s.number("abs_tol", c.solver.abs_tol);
    c.solver.max_iter = static_cast<int>(s.count("max_iter", static_cast<std::size_t>(c.solver.max_iter)));
    c.solver.formulation =
        as_config_error("solver.formulation", [&] { return formulation_from_string(s.text("formulation", "published")); });
    c.solver.c3 = s.number("c3", 0.0);
    s.finish();
    if (!(c.solver.abs_tol > 0.0)) throw ConfigError("solver.abs_tol", "must be positive");
    if (c.solver.max_iter < 1) throw ConfigError("solver.max_iter", "must be at least 1");
  }

  c.rate = root.number("rate", 1.0);
  c.exterior_pressure = root.number("exterior_pressure", 0.0);
  if (root.has("r0_override")) c.r0_override = root.number("r0_override", 0.0);

  if (root.has("verify")) {
    Section v(root.raw("verify"), "verify");
    VerifySection vs;
    if (!v.has("ladder")) throw ConfigError("verify.ladder", "required key is missing");
    const auto& ladder = v.raw("ladder");
    if (!ladder.is_array() || ladder.empty()) throw ConfigError("verify.ladder", "expected a nonempty array");
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      Section l(ladder[i], "verify.ladder[" + std::to_string(i) + "]");
      LadderLevel lv;
      lv.delta = l.required_number("delta");
      lv.blocks = l.count("blocks", c.inputs.geometry == GeometryKind::Slab1D && lv.delta > 0.0
                                        ? static_cast<std::size_t>(std::max<long long>(1, std::llround(c.inputs.exterior / lv.delta)))
                                        : c.inputs.blocks);
      lv.tau = l.number("tau", c.inputs.tau);
      l.finish();
      vs.ladder.push_back(lv);
    }
    vs.t_end = v.number("t_end", 0.0);
    vs.scheme = scheme_from(v, "scheme");
    v.finish();
    c.verify = vs;
  }

  if (root.has("sweep")) {
    Section s(root.raw("sweep"), "sweep");
    SweepSection ss;
    ss.parameter = as_config_error("sweep.parameter",
                                   [&] { return harness::sweep_parameter_from_string(s.text("parameter", "exterior")); });
    ss.values = s.numbers("values");
    if (ss.values.empty()) throw ConfigError("sweep.values", "must not be empty");
    ss.fit_limit = s.flag("fit_limit", false);
    s.finish();
    c.sweep = ss;
  }

  if (root.has("simulate")) {
    Section s(root.raw("simulate"), "simulate");
    SimulateSection ss;
    ss.t_end = s.number("t_end", 1.0);
    ss.sample_every = s.count("sample_every", 1);
    ss.scheme = scheme_from(s, "scheme");
    ss.dump_fields = s.flag("dump_fields", false);
    s.finish();
    c.simulate = ss;
  }

  if (root.has("output")) {
    Section o(root.raw("output"), "output");
    c.output.format = format_from_string(o.text("format", "csv"));
    c.output.path = o.text("path", "");
    o.finish();
  }

  root.finish();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("--config", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(f, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  const auto& in = c.inputs;
  json j;
  j["regime"] = to_string(c.regime);
  j["geometry"] = {{"kind", to_string(in.geometry)}, {"exterior", in.exterior}};
  if (in.geometry == GeometryKind::RadialAnnulus) j["geometry"]["well_radius"] = in.well_radius;
  j["grid"] = {{"delta", in.delta}, {"blocks", in.blocks}, {"tau", in.tau}};
  j["fluid"] = {{"conductivity", in.conductivity},
                {"porosity", in.porosity},
                {"compressibility", in.compressibility},
                {"thickness", in.thickness}};
  j["solver"] = {{"abs_tol", c.solver.abs_tol},
                 {"max_iter", c.solver.max_iter},
                 {"formulation", to_string(c.solver.formulation)},
                 {"c3", c.solver.c3}};
  j["rate"] = c.rate;
  j["exterior_pressure"] = c.exterior_pressure;
  if (c.r0_override) j["r0_override"] = *c.r0_override;
  if (c.verify) {
    json ladder = json::array();
    for (const auto& l : c.verify->ladder) ladder.push_back({{"delta", l.delta}, {"blocks", l.blocks}, {"tau", l.tau}});
    j["verify"] = {{"ladder", ladder}, {"t_end", c.verify->t_end}, {"scheme", scheme_name(c.verify->scheme)}};
  }
  if (c.sweep) {
    j["sweep"] = {{"parameter", harness::to_string(c.sweep->parameter)},
                  {"values", c.sweep->values},
                  {"fit_limit", c.sweep->fit_limit}};
  }
  if (c.simulate) {
    j["simulate"] = {{"t_end", c.simulate->t_end},
                     {"sample_every", c.simulate->sample_every},
                     {"scheme", scheme_name(c.simulate->scheme)},
                     {"dump_fields", c.simulate->dump_fields}};
  }
  j["output"] = {{"format", to_string(c.output.format)}, {"path", c.output.path}};
  return j;
}

std::string write_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) s += ',';
    s += csv_escape(t.columns[i]);
  }
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += std::visit(
          [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, double>) return fmt17(v);
            else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return csv_escape(v);
          },
          row[i]);
    }
    s += '\n';
  }
  return s;
}

json to_json_records(const Table& t) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json rec = json::object();
    for (std::size_t i = 0; i < t.columns.size() && i < row.size(); ++i) rec[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(rec));
  }
  return arr;
}

Table radius_table(const RunConfig& c) {
  const auto p = problem_of(c);
  RadiusSolution s;
  if (c.r0_override) {
    s.regime = c.regime;
    s.delta = c.inputs.delta;
    s.r0 = *c.r0_override;
    s.method = SolveMethod::ClosedForm;
  } else {
    s = solve(c, p);
  }
  const auto& in = c.inputs;
  Table t;
  t.columns = {"regime", "geometry", "formulation", "delta", "well_radius", "exterior", "tau", "conductivity",
               "r0", "residual", "tolerance", "iterations", "method", "approximation"};
  t.rows.push_back({to_string(c.regime), geometry_name(in.geometry), to_string(c.solver.formulation), in.delta,
                    in.geometry == GeometryKind::RadialAnnulus ? Cell{in.well_radius} : Cell{}, in.exterior, in.tau,
                    in.conductivity, s.r0, s.residual, s.tolerance, static_cast<long long>(s.iterations),
                    to_string(s.method), opt(s.approximation)});
  return t;
}

Table simulate_table(const RunConfig& c) {
  const auto p = problem_of(c);
  const SimulateSection sim = c.simulate.value_or(SimulateSection{});
  const bool slab = c.inputs.geometry == GeometryKind::Slab1D;
  std::vector<fd::FdField> series;
  if (c.regime == Regime::SteadyState) {
    series.push_back(slab ? fd::fd_steady_1d(p, c.rate, c.exterior_pressure)
                          : fd::fd_steady_2d(p, c.rate, c.exterior_pressure));
  } else {
    fd::FdField initial;
    if (c.regime == Regime::PseudoSteadyState) {
      initial = fd::initial_field(p, [](double, double) { return 0.0; });
    } else if (slab) {
      const auto m = analytic::bd_mode_1d(p.params(), std::get<Slab1D>(p.geometry()));
      initial = fd::initial_field(p, [m](double x, double) { return m.shape(x); });
    } else {
      const auto m = radial_mode(p);
      initial = fd::initial_field(p, [m](double x, double y) {
        return m.phi0(std::clamp(std::hypot(x, y), m.well_radius, m.exterior));
      });
    }
    fd::TransientOptions o;
    o.tau = c.inputs.tau;
    o.t_end = sim.t_end;
    o.scheme = sim.scheme;
    o.sample_every = sim.sample_every;
    series = fd::fd_transient(p, fd::BoundarySpec::for_regime(c.regime, c.exterior_pressure), c.rate, initial, o);
  }

  Table t;
  if (sim.dump_fields) {
    t.columns = {"t", "i", "j", "x", "y", "pressure"};
    const auto x = fd::node_positions(p);
    for (const auto& f : series) {
      for (std::size_t j = 0; j < f.ny; ++j) {
        for (std::size_t i = 0; i < f.nx; ++i) {
          t.rows.push_back({f.t, static_cast<long long>(i), static_cast<long long>(j), x[i], slab ? 0.0 : x[j],
                            f.at(i, j)});
        }
      }
    }
    return t;
  }
  t.columns = {"t", "p0", "p1", "well_rate", "content"};
  for (const auto& f : series) {
    t.rows.push_back({f.t, f.well_pressure(), f.neighbor_pressure(), f.well_rate, fd::total_content(p, f)});
  }
  return t;
}

std::pair<Table, bool> verify_table(const RunConfig& c) {
  if (!c.verify) throw ConfigError("verify", "the verify subcommand needs a 'verify' section");
  const auto p = problem_of(c);
  std::vector<GridSpec> ladder;
  for (std::size_t i = 0; i < c.verify->ladder.size(); ++i) {
    const auto& l = c.verify->ladder[i];
    const std::string key = "verify.ladder[" + std::to_string(i) + "]";
    ladder.push_back(as_config_error(key, [&] {
      auto grid = GridSpec::make(l.delta, l.blocks, l.tau);
      validate_problem(p.params(), p.geometry(), grid);
      return grid;
    }));
  }
  // Surface solver failures (with their scan traces) before running the simulations.
  if (!c.r0_override) {
    for (const auto& g : ladder) solve(c, validate_problem(p.params(), p.geometry(), g));
  }

  harness::GlueOptions opts;
  opts.rate = c.rate;
  opts.exterior_pressure = c.exterior_pressure;
  opts.solver = c.solver;
  opts.scheme = c.verify->scheme;
  opts.t_end = c.verify->t_end;
  opts.r0_override = c.r0_override;
  const auto reports = harness::run_glue_study(c.regime, p, ladder, opts);

  Table t;
  t.columns = {"level", "delta", "regime", "geometry", "r0", "fd_p0", "analytic_p0", "discrepancy",
               "mb_residual_analytic", "mb_residual_fd", "fd_decay_rate", "analytic_decay_rate", "fd_drift",
               "expected_drift", "pass", "error"};
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.pass;
    t.rows.push_back({static_cast<long long>(r.level), r.delta, to_string(r.regime), geometry_name(r.geometry), r.r0,
                      r.fd_p0, r.analytic_p0, r.discrepancy, r.mb_residual_analytic, r.mb_residual_fd,
                      r.fd_decay_rate, r.analytic_decay_rate, r.fd_drift, r.expected_drift, r.pass, r.error});
  }
  return {t, all};
}

Table sweep_table(const RunConfig& c) {
  if (!c.sweep) throw ConfigError("sweep", "the sweep subcommand needs a 'sweep' section");
  harness::SweepSpec spec;
  spec.regime = c.regime;
  spec.parameter = c.sweep->parameter;
  spec.values = c.sweep->values;
  spec.fixed = c.inputs;
  spec.solver = c.solver;
  const auto rows = as_config_error("sweep.values", [&] { return harness::run_sweep(spec); });

  Table t;
  t.columns = {"parameter", "value", "r0", "residual", "iterations", "approximation", "limit", "peaceman", "error"};
  std::optional<harness::LimitReport> fit;
  if (c.sweep->fit_limit) {
    if (c.sweep->parameter != harness::SweepParameter::Exterior) {
      throw ConfigError("sweep.fit_limit", "requires parameter = exterior");
    }
    fit = harness::limit_diagnostics(c.regime, c.inputs, c.sweep->values, c.solver);
    t.columns.insert(t.columns.end(), {"lambda", "error_to_limit", "fit_slope"});
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const bool ok = r.error.empty();
    std::vector<Cell> row{harness::to_string(spec.parameter), r.value, ok ? Cell{r.r0} : Cell{},
                          ok ? Cell{r.residual} : Cell{}, static_cast<long long>(r.iterations), opt(r.approximation),
                          r.limit, opt(r.peaceman), r.error};
    if (fit) {
      row.insert(row.end(), {fit->lambda[i], fit->error[i], fit->slope});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalent well-block radius toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  std::string format_flag;
  std::string out_path;
  bool quiet = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--format", format_flag, "csv or json (overrides output.format)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Output file (overrides output.path)");
    sub->add_flag("--quiet", quiet, "Suppress the summary on standard error");
  };
  auto* radius = app.add_subcommand("radius", "Solve for the equivalent well-block radius");
  auto* simulate = app.add_subcommand("simulate", "Run the finite-difference simulator");
  auto* verify = app.add_subcommand("verify", "Glue analytic and simulated pressures over a grid ladder");
  auto* sweep = app.add_subcommand("sweep", "Tabulate the radius over one swept parameter");
  for (auto* s : {radius, simulate, verify, sweep}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig c = load_config(config_path);
    const Format format = format_flag.empty() ? c.output.format : format_from_string(format_flag);
    const std::string path = out_path.empty() ? c.output.path : out_path;

    int code = kExitOk;
    if (radius->parsed()) {
      const auto t = radius_table(c);
      emit(to_json_records(t).at(0), &t, format, path, out);
    } else if (simulate->parsed()) {
      const auto t = simulate_table(c);
      emit(to_json_records(t), &t, format, path, out);
    } else if (verify->parsed()) {
      const auto [t, all] = verify_table(c);
      emit(to_json_records(t), &t, format, path, out);
      if (!all) code = kExitToleranceFailed;
      if (!quiet) err << (all ? "verify: all levels passed\n" : "verify: at least one level exceeded its tolerance\n");
    } else {
      const auto t = sweep_table(c);
      json payload = to_json_records(t);
      emit(payload, &t, format, path, out);
    }
    return code;
  } catch (const ConfigError& e) {
    auto rec = error_record("ConfigError", e.what());
    rec["error"]["key"] = e.key();
    err << rec.dump() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    auto rec = error_record("DomainError", e.what());
    rec["error"]["key"] = e.field();
    err << rec.dump() << "\n";
    return kExitConfig;
  } catch (const NoSignChange& e) {
    auto rec = error_record("NoSignChange", e.what());
    json trace = json::array();
    for (const auto& [x, f] : e.trace()) trace.push_back({x, f});
    rec["error"]["trace"] = trace;
    err << rec.dump() << "\n";
    return kExitSolver;
  } catch (const Error& e) {
    err << error_record("SolverError", e.what()).dump() << "\n";
    return kExitSolver;
  }
}

}  // namespace wellblock::cli
