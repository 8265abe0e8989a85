// gpolylog command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 ok, 2 domain/usage, 3 numerical failure, 4 route
// disagreement, 5 property verdict fail.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gpolylog/gpolylog.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDisagree = 4;
constexpr int kExitVerdict = 5;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

// Raised for anything that should end the run with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct Sweep {
  std::string var;
  double lo = 0, hi = 0, step = 0;
  std::string spec;
};

struct Options {
  double p = kUnset, q = kUnset, a = kUnset, b = kUnset;
  double z = kUnset, z_im = 0.0, s = kUnset, lambda = 0.0;
  std::vector<std::string> routes;
  double tol = 1e-12;
  uint64_t max_terms = 1'000'000;
  uint64_t max_evals = 5'000'000;
  double fd_step = 1e-2;
  std::string format = "csv";
  std::string out;
  std::string preset;
  std::vector<std::string> sweeps;
  std::string quantity;
  std::optional<double> agree_abs;
  std::string property;
  int max_order = -1;
  std::optional<double> verdict_tol;
  std::string psi_route = "series";
  bool no_extended = false;
  bool relax = false;
};

int exit_for(gpl_status s) {
  switch (s) {
    case GPL_OK: return kExitOk;
    case GPL_E_DOMAIN:
    case GPL_E_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitNumerical;
  }
}

using ContextPtr = std::unique_ptr<gpl_context, decltype(&gpl_context_destroy)>;
using ReportPtr = std::unique_ptr<gpl_report, decltype(&gpl_report_destroy)>;

void check(gpl_context* ctx, gpl_status s, const std::string& where = {}) {
  if (s == GPL_OK) return;
  std::string msg = gpl_context_last_error(ctx);
  if (msg.empty()) msg = gpl_status_name(s);
  throw Exit{exit_for(s), where.empty() ? msg : where + ": " + msg};
}

ContextPtr make_context(const Options& o) {
  gpl_context* raw = nullptr;
  if (gpl_context_create(&raw) != GPL_OK) throw Exit{kExitNumerical, "cannot create context"};
  ContextPtr ctx(raw, gpl_context_destroy);
  check(raw, gpl_context_set_tolerance(raw, o.tol), "--tol");
  check(raw, gpl_context_set_max_terms(raw, o.max_terms), "--max-terms");
  check(raw, gpl_context_set_max_evals(raw, o.max_evals), "--max-evals");
  check(raw, gpl_context_set_fd_step(raw, o.fd_step), "--fd-step");
  check(raw, gpl_context_set_extended_precision(raw, o.no_extended ? 0 : 1));
  check(raw, gpl_context_set_relax_domain(raw, o.relax ? 1 : 0));
  if (o.psi_route != "series" && o.psi_route != "single-integral")
    throw Exit{kExitUsage, "--psi-route: series or single-integral required"};
  check(raw, gpl_context_set_analysis_segments(raw, o.psi_route == "single-integral"));
  return ctx;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Sweep parse_sweep(const std::string& spec) {
  Sweep s;
  s.spec = spec;
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) throw Exit{kExitUsage, "--sweep: VAR:LO:HI:STEP required, got " + spec};
  s.var = parts[0] == "x" ? "z" : parts[0];
  static const char* known[] = {"p", "q", "a", "b", "z", "s", "lambda"};
  bool ok = false;
  for (const char* k : known) ok = ok || s.var == k;
  if (!ok) throw Exit{kExitUsage, "--sweep: unknown variable " + parts[0]};
  try {
    s.lo = std::stod(parts[1]);
    s.hi = std::stod(parts[2]);
    s.step = std::stod(parts[3]);
  } catch (const std::exception&) {
    throw Exit{kExitUsage, "--sweep: bad number in " + spec};
  }
  if (!(s.step > 0.0)) throw Exit{kExitUsage, "--sweep: STEP>0 required"};
  if (s.lo > s.hi) throw Exit{kExitUsage, "--sweep: empty range (LO>HI) in " + spec};
  return s;
}

std::vector<double> grid_of(double lo, double hi, double step) {
  std::vector<double> g;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

template <class O>
auto& slot(O& o, const std::string& var) {
  if (var == "p") return o.p;
  if (var == "q") return o.q;
  if (var == "a") return o.a;
  if (var == "b") return o.b;
  if (var == "z") return o.z;
  if (var == "s") return o.s;
  return o.lambda;
}

std::optional<gpl_preset> apply_preset(Options& o) {
  if (o.preset.empty()) return std::nullopt;
  gpl_preset ps;
  if (gpl_preset_lookup(o.preset.c_str(), &ps) != GPL_OK)
    throw Exit{kExitUsage, "--preset: unknown preset " + o.preset};
  // Explicit flags win over preset values.
  auto fill = [](double& dst, double v) { if (std::isnan(dst)) dst = v; };
  fill(o.p, ps.p);
  fill(o.q, ps.q);
  fill(o.a, ps.a);
  fill(o.b, ps.b);
  fill(o.z, ps.x);
  return ps;
}

void require(double v, const char* name) {
  if (std::isnan(v))
    throw Exit{kExitUsage, std::string(name) + ": missing (pass --" + name + " or --preset)"};
}

gpl_phi_params phi_params(const Options& o) {
  require(o.p, "p");
  require(o.q, "q");
  require(o.a, "a");
  require(o.b, "b");
  require(o.z, "z");
  return gpl_phi_params{o.p, o.q, o.a, o.b, o.z, o.z_im};
}

gpl_lerch_params lerch_params(const Options& o) {
  require(o.s, "s");
  require(o.a, "a");
  require(o.z, "z");
  return gpl_lerch_params{o.s, o.a, o.z, o.z_im, o.lambda};
}

gpl_route route_of(const std::string& name) {
  gpl_route r;
  if (gpl_route_from_name(name.c_str(), &r) != GPL_OK)
    throw Exit{kExitUsage, "--route: unknown route " + name};
  return r;
}

gpl_result evaluate(gpl_context* ctx, gpl_route r, const Options& o) {
  gpl_result res{};
  if (r == GPL_ROUTE_POLYLOG) {
    require(o.s, "s");
    require(o.z, "z");
    check(ctx, gpl_polylog(ctx, o.s, o.z, o.z_im, &res));
  } else if (gpl_route_is_lerch(r)) {
    const gpl_lerch_params lp = lerch_params(o);
    check(ctx, gpl_lerch(ctx, r, &lp, &res));
  } else {
    const gpl_phi_params pp = phi_params(o);
    check(ctx, gpl_phi(ctx, r, &pp, &res));
  }
  return res;
}

json manifest(const std::string& command, const Options& o) {
  json m;
  m["command"] = command;
  json params;
  for (const char* k : {"p", "q", "a", "b", "z", "s"}) {
    const double v = slot(o, k);
    if (!std::isnan(v)) params[k] = v;
  }
  if (o.z_im != 0.0) params["z_im"] = o.z_im;
  if (o.lambda != 0.0) params["lambda"] = o.lambda;
  m["params"] = params;
  m["routes"] = o.routes;
  m["tol"] = {{"target_abs_tol", o.tol},
              {"max_terms", o.max_terms},
              {"max_function_evals", o.max_evals},
              {"fd_step", o.fd_step},
              {"extended_precision", !o.no_extended},
              {"relax_shift_hypothesis", o.relax}};
  m["output_format"] = o.format;
  if (!o.out.empty()) m["output_path"] = o.out;
  if (!o.preset.empty()) m["preset"] = o.preset;
  if (!o.sweeps.empty()) m["sweep"] = o.sweeps;
  if (!o.property.empty()) m["property"] = o.property;
  if (!o.quantity.empty()) m["quantity"] = o.quantity;
  return m;
}

// Rows share one header; every cell is already formatted.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  json results = json::array();
};

void emit(const Table& t, const std::string& command, const Options& o, const json& extra = {}) {
  std::ostringstream os;
  if (o.format == "json") {
    json doc;
    doc["manifest"] = manifest(command, o);
    doc["results"] = t.results;
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    os << doc.dump(2) << '\n';
  } else {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
  }
  if (o.out.empty()) {
    std::cout << os.str();
    std::cout.flush();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Exit{kExitUsage, "--out: cannot open " + o.out};
    f << os.str();
  }
}

void check_format(const Options& o) {
  if (o.format != "csv" && o.format != "json")
    throw Exit{kExitUsage, "--format: csv or json required"};
}

int cmd_eval(Options o) {
  check_format(o);
  apply_preset(o);
  if (o.routes.empty()) o.routes = {"series"};
  if (o.routes.size() != 1) throw Exit{kExitUsage, "eval: exactly one --route required"};
  ContextPtr ctx = make_context(o);
  const gpl_route r = route_of(o.routes[0]);
  const gpl_result res = evaluate(ctx.get(), r, o);
  Table t;
  t.header = {"route", "value_re", "value_im", "abs_error_estimate", "terms_or_evals"};
  t.rows.push_back({gpl_route_name(res.route), fmt(res.value_re), fmt(res.value_im),
                    fmt(res.abs_error_estimate), std::to_string(res.terms_or_evals)});
  t.results.push_back({{"route", gpl_route_name(res.route)},
                       {"value_re", res.value_re},
                       {"value_im", res.value_im},
                       {"abs_error_estimate", res.abs_error_estimate},
                       {"terms_or_evals", res.terms_or_evals}});
  emit(t, "eval", o);
  return kExitOk;
}

int cmd_compare(Options o) {
  check_format(o);
  apply_preset(o);
  if (o.routes.size() < 2) throw Exit{kExitUsage, "compare: at least two --route required"};
  ContextPtr ctx = make_context(o);
  std::vector<gpl_route> routes;
  for (const auto& name : o.routes) routes.push_back(route_of(name));
  const bool lerch = gpl_route_is_lerch(routes[0]) != 0;
  for (gpl_route r : routes) {
    if ((gpl_route_is_lerch(r) != 0) != lerch || r == GPL_ROUTE_POLYLOG)
      throw Exit{kExitUsage, "compare: routes must all evaluate the same function"};
  }
  std::vector<gpl_result> res;
  for (gpl_route r : routes) res.push_back(evaluate(ctx.get(), r, o));

  Table t;
  t.header = {"row", "route_a", "route_b", "value_re", "value_im", "abs_error_estimate",
              "abs_diff", "allowed", "pass"};
  for (const auto& r : res) {
    t.rows.push_back({"value", gpl_route_name(r.route), "", fmt(r.value_re), fmt(r.value_im),
                      fmt(r.abs_error_estimate), "", "", ""});
    t.results.push_back({{"row", "value"},
                         {"route", gpl_route_name(r.route)},
                         {"value_re", r.value_re},
                         {"value_im", r.value_im},
                         {"abs_error_estimate", r.abs_error_estimate},
                         {"terms_or_evals", r.terms_or_evals}});
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < res.size(); ++i) {
    for (std::size_t j = i + 1; j < res.size(); ++j) {
      const double diff = std::hypot(res[i].value_re - res[j].value_re,
                                     res[i].value_im - res[j].value_im);
      const double allowed = o.agree_abs ? *o.agree_abs
                                         : res[i].abs_error_estimate + res[j].abs_error_estimate;
      const bool pass = diff <= allowed;
      all_pass = all_pass && pass;
      t.rows.push_back({"pair", gpl_route_name(res[i].route), gpl_route_name(res[j].route), "",
                        "", "", fmt(diff), fmt(allowed), pass ? "1" : "0"});
      t.results.push_back({{"row", "pair"},
                           {"route_a", gpl_route_name(res[i].route)},
                           {"route_b", gpl_route_name(res[j].route)},
                           {"abs_diff", diff},
                           {"allowed", allowed},
                           {"pass", pass}});
    }
  }
  emit(t, "compare", o);
  if (!all_pass) {
    std::cerr << "compare: routes disagree beyond their error estimates\n";
    return kExitDisagree;
  }
  return kExitOk;
}

int cmd_verify(Options o) {
  check_format(o);
  const auto preset = apply_preset(o);
  if (o.property.empty() && preset) o.property = gpl_property_name(preset->property);
  if (o.property.empty()) throw Exit{kExitUsage, "verify: property name required"};
  gpl_property prop;
  if (gpl_property_from_name(o.property.c_str(), &prop) != GPL_OK)
    throw Exit{kExitUsage, "verify: unknown property " + o.property};
  const bool psi_prop =
      prop == GPL_PROP_CM || prop == GPL_PROP_LOG_CONVEXITY || prop == GPL_PROP_TURAN_PSI;

  std::vector<double> grid;
  if (!o.sweeps.empty()) {
    if (o.sweeps.size() != 1) throw Exit{kExitUsage, "verify: one --sweep at most"};
    const Sweep s = parse_sweep(o.sweeps[0]);
    if (s.var != (psi_prop ? "p" : "z"))
      throw Exit{kExitUsage, std::string("verify: sweep variable must be ") + (psi_prop ? "p" : "x")};
    grid = grid_of(s.lo, s.hi, s.step);
  } else if (preset && (preset->sweep == 'p') == psi_prop) {
    grid = grid_of(preset->lo, preset->hi, preset->step);
  } else {
    grid = psi_prop ? grid_of(0.1, 5.0, 0.1) : grid_of(0.05, 0.95, 0.05);
  }

  gpl_verify_request req{};
  req.property = prop;
  if (psi_prop) {
    require(o.q, "q");
    require(o.a, "a");
    require(o.b, "b");
    require(o.z, "x");
    req.psi = gpl_psi_params{o.q, o.a, o.b, o.z};
  } else {
    require(o.p, "p");
    require(o.q, "q");
    require(o.a, "a");
    require(o.b, "b");
    req.phi = gpl_phi_params{o.p, o.q, o.a, o.b, 0.0, 0.0};
  }
  req.grid = grid.data();
  req.grid_len = grid.size();
  req.max_order = o.max_order >= 0 ? o.max_order : (preset && preset->max_order ? preset->max_order : 5);
  req.h = o.fd_step;
  const double default_tol = prop == GPL_PROP_CM || prop == GPL_PROP_LOG_CONVEXITY ? 1e-9
                             : prop == GPL_PROP_BOUNDS                           ? 0.0
                                                                                 : 1e-12;
  req.tol = o.verdict_tol ? *o.verdict_tol : default_tol;

  ContextPtr ctx = make_context(o);
  gpl_report* raw = nullptr;
  check(ctx.get(), gpl_verify(ctx.get(), &req, &raw));
  ReportPtr rep(raw, gpl_report_destroy);

  Table t;
  const char* var = psi_prop ? "p" : "x";
  t.header = {"property", var, "index", "gap", "pass"};
  const std::string pname = gpl_property_name(prop);
  for (std::size_t i = 0; i < gpl_report_size(rep.get()); ++i) {
    double point = 0, gap = 0;
    int index = 0;
    gpl_report_entry(rep.get(), i, &point, &index, &gap);
    const bool pass = gap >= -req.tol;
    t.rows.push_back({pname, fmt(point), std::to_string(index), fmt(gap), pass ? "1" : "0"});
    t.results.push_back(
        {{"property", pname}, {var, point}, {"index", index}, {"gap", gap}, {"pass", pass}});
  }
  const bool verdict = gpl_report_verdict(rep.get()) != 0;
  json extra;
  extra["summary"] = {{"property", pname},
                      {"min_gap", gpl_report_min_gap(rep.get())},
                      {"tolerance", gpl_report_tolerance(rep.get())},
                      {"verdict", verdict ? "pass" : "fail"}};
  emit(t, "verify", o, extra);
  std::cerr << pname << ": " << (verdict ? "pass" : "fail")
            << " (min_gap=" << fmt(gpl_report_min_gap(rep.get()))
            << ", tolerance=" << fmt(gpl_report_tolerance(rep.get())) << ")\n";
  return verdict ? kExitOk : kExitVerdict;
}

int cmd_grid(Options o) {
  check_format(o);
  const auto preset = apply_preset(o);
  std::vector<Sweep> sweeps;
  for (const auto& s : o.sweeps) sweeps.push_back(parse_sweep(s));
  if (sweeps.empty() && preset) {
    Sweep s;
    s.var = preset->sweep == 'p' ? "p" : "z";
    s.lo = preset->lo;
    s.hi = preset->hi;
    s.step = preset->step;
    sweeps.push_back(s);
  }
  if (sweeps.empty() || sweeps.size() > 2)
    throw Exit{kExitUsage, "grid: one or two --sweep VAR:LO:HI:STEP required"};
  if (sweeps.size() == 2 && sweeps[0].var == sweeps[1].var)
    throw Exit{kExitUsage, "grid: the two sweeps must use different variables"};

  std::string quantity = o.quantity;
  if (quantity.empty()) {
    if (preset && preset->property == GPL_PROP_BOUNDS) quantity = "bounds";
    else if (preset && preset->sweep == 'p') quantity = "psi";
    else quantity = "phi";
  }
  if (quantity != "phi" && quantity != "psi" && quantity != "bounds" && quantity != "lerch")
    throw Exit{kExitUsage, "--quantity: phi, psi, bounds or lerch required"};
  if (o.routes.empty()) o.routes = {quantity == "lerch" ? "lerch-series" : "series"};
  std::vector<gpl_route> routes;
  for (const auto& name : o.routes) {
    const gpl_route r = route_of(name);
    const bool lerch = gpl_route_is_lerch(r) != 0;
    if (lerch != (quantity == "lerch") || r == GPL_ROUTE_POLYLOG)
      throw Exit{kExitUsage, "--route " + name + " does not evaluate quantity " + quantity};
    routes.push_back(r);
  }

  ContextPtr ctx = make_context(o);
  Table t;
  for (const auto& s : sweeps) t.header.push_back(s.var == "z" ? "x" : s.var);
  if (quantity == "psi") {
    t.header.push_back("psi");
  } else if (quantity == "bounds") {
    t.header.insert(t.header.end(), {"lower", "phi", "upper"});
  } else {
    for (const auto& name : o.routes) t.header.push_back(name);
  }

  const std::vector<double> outer = grid_of(sweeps[0].lo, sweeps[0].hi, sweeps[0].step);
  const std::vector<double> inner =
      sweeps.size() == 2 ? grid_of(sweeps[1].lo, sweeps[1].hi, sweeps[1].step) : std::vector<double>{0.0};

  for (double u : outer) {
    for (double v : inner) {
      Options at = o;
      slot(at, sweeps[0].var) = u;
      if (sweeps.size() == 2) slot(at, sweeps[1].var) = v;
      std::ostringstream where;
      where << "grid point " << sweeps[0].var << "=" << fmt(u);
      if (sweeps.size() == 2) where << ", " << sweeps[1].var << "=" << fmt(v);

      std::vector<std::string> row;
      json obj;
      row.push_back(fmt(u));
      obj[t.header[0]] = u;
      if (sweeps.size() == 2) {
        row.push_back(fmt(v));
        obj[t.header[1]] = v;
      }
      try {
        if (quantity == "psi") {
          require(at.p, "p");
          require(at.q, "q");
          require(at.a, "a");
          require(at.b, "b");
          require(at.z, "x");
          const gpl_psi_params pp{at.q, at.a, at.b, at.z};
          double val = 0;
          check(ctx.get(), gpl_psi(ctx.get(), at.p, &pp, &val));
          row.push_back(fmt(val));
          obj["psi"] = val;
        } else if (quantity == "bounds") {
          const gpl_phi_params pp = phi_params(at);
          gpl_result res{};
          check(ctx.get(), gpl_phi(ctx.get(), routes[0], &pp, &res));
          const double upper =
              std::pow(1.0 + at.a, at.p) * std::pow(1.0 + at.b, at.q) * at.z / (1.0 - at.z);
          row.insert(row.end(), {fmt(at.z), fmt(res.value_re), fmt(upper)});
          obj["lower"] = at.z;
          obj["phi"] = res.value_re;
          obj["upper"] = upper;
        } else {
          for (std::size_t k = 0; k < routes.size(); ++k) {
            const gpl_result res = evaluate(ctx.get(), routes[k], at);
            row.push_back(fmt(res.value_re));
            obj[o.routes[k]] = res.value_re;
          }
        }
      } catch (Exit& e) {
        e.message = where.str() + ": " + e.message;
        throw;
      }
      t.rows.push_back(std::move(row));
      t.results.push_back(std::move(obj));
    }
  }
  emit(t, "grid", o);
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "order p > 0");
  cmd->add_option("--q", o.q, "order q > 0");
  cmd->add_option("--a", o.a, "shift a > 0 (> 1 on integral routes)");
  cmd->add_option("--b", o.b, "shift b > 0 (> 1 on integral routes)");
  cmd->add_option("--z,--x", o.z, "argument (real part), |z| < 1");
  cmd->add_option("--z-im", o.z_im, "imaginary part of z");
  cmd->add_option("--s", o.s, "Lerch order s > 0 (also the polylog order)");
  cmd->add_option("--lambda", o.lambda, "lerch-lambda parameter, < 1/2");
  cmd->add_option("--route", o.routes, "evaluation route (repeatable)");
  cmd->add_option("--tol", o.tol, "absolute tolerance")->capture_default_str();
  cmd->add_option("--max-terms", o.max_terms, "series / segment cap")->capture_default_str();
  cmd->add_option("--max-evals", o.max_evals, "quadrature evaluation cap")->capture_default_str();
  cmd->add_option("--format", o.format, "csv or json")->capture_default_str();
  cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
  cmd->add_option("--preset", o.preset, "figure preset fig1..fig5");
  cmd->add_option("--sweep", o.sweeps, "VAR:LO:HI:STEP (VAR in p,q,a,b,x,s,lambda)");
  cmd->add_flag("--no-extended-precision", o.no_extended,
                "keep the lambda series in double precision");
  cmd->add_flag("--relax-domain", o.relax, "accept 0 < a, b <= 1 on integral routes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized polylogarithm evaluation and property checks"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "evaluate one route");
  add_common(eval, o);

  auto* compare = app.add_subcommand("compare", "evaluate several routes and cross-check them");
  add_common(compare, o);
  compare->add_option("--agree-abs", o.agree_abs,
                      "fixed agreement threshold instead of the summed error estimates");

  auto* verify = app.add_subcommand("verify", "check an analytic property on a grid");
  add_common(verify, o);
  verify->add_option("property", o.property,
                     "cm, log-convexity, turan-psi, turan-phi-q, turan-phi-p, bounds");
  verify->add_option("--max-order", o.max_order, "highest difference order for cm (<= 6)");
  verify->add_option("--fd-step", o.fd_step, "finite-difference step")->capture_default_str();
  verify->add_option("--verdict-tol", o.verdict_tol, "tolerance on the minimum gap");
  verify->add_option("--psi-route", o.psi_route, "series or single-integral")->capture_default_str();

  auto* grid = app.add_subcommand("grid", "tabulate a quantity over a parameter sweep");
  add_common(grid, o);
  grid->add_option("--quantity", o.quantity, "phi, psi, bounds or lerch");
  grid->add_option("--psi-route", o.psi_route, "series or single-integral")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*compare) return cmd_compare(o);
    if (*verify) return cmd_verify(o);
    if (*grid) return cmd_grid(o);
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
