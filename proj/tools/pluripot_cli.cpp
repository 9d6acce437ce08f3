// pluripot: evaluate kernels, run verification suites, sweep parameters.
//
// Exit codes: 0 success (verify: all reports pass), 1 verify failure,
// 2 configuration error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pluripot/boundary_measure.hpp"
#include "pluripot/domain.hpp"
#include "pluripot/geodesics.hpp"
#include "pluripot/kernels.hpp"
#include "pluripot/report.hpp"
#include "pluripot/suites.hpp"

using namespace pluripot;

namespace {

struct RunConfig {
  std::string command;
  std::string quantity;
  std::optional<std::string> domain, xi, z, w, p, m, suite, out, u, from, to;
  std::optional<double> r, tol;
  std::optional<int> resolution, steps, steps2;
  std::string format;  // resolved per command: csv for eval/sweep, json for verify
  bool details = false;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

double parse_real(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw ConfigError("cannot parse " + what + " '" + s + "'");
  return v;
}

// "0.3", "-0.2i", "i", "0.3+0.2i", "1e-3-2e-1i"
cplx parse_complex(const std::string& in) {
  const std::string s = trim(in);
  if (s.empty()) throw ConfigError("empty complex number");
  if (s.back() != 'i') return parse_real(s, "complex number");
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  const std::string im = split == std::string::npos ? body : body.substr(split);
  double iv;
  if (im.empty() || im == "+") iv = 1.0;
  else if (im == "-") iv = -1.0;
  else iv = parse_real(im, "imaginary part");
  return {re.empty() ? 0.0 : parse_real(re, "real part"), iv};
}

// comma-separated components, or e<k> for the k-th unit vector (1-based)
CVec parse_point(const std::string& s, int n, const std::string& what) {
  const std::string t = trim(s);
  if (t.size() > 1 && t[0] == 'e' && std::all_of(t.begin() + 1, t.end(), ::isdigit)) {
    const int k = std::stoi(t.substr(1));
    if (k < 1 || k > n) throw ConfigError(what + ": unit vector index out of range");
    return unit(n, k - 1);
  }
  std::vector<cplx> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_complex(item));
  if (static_cast<int>(parts.size()) != n)
    throw ConfigError(what + " has " + std::to_string(parts.size()) + " components, domain dimension is " + std::to_string(n));
  CVec v(n);
  for (int j = 0; j < n; ++j) v(j) = parts[j];
  return v;
}

std::optional<DomainSpec> domain_spec(const RunConfig& c) {
  std::optional<DomainSpec> spec;
  if (c.domain) {
    const std::string d = trim(*c.domain);
    if (!d.empty() && d[0] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(d);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("domain JSON: ") + e.what());
      }
      spec = domain_spec_from_json(j);
    } else {
      spec = parse_domain_shorthand(d);
    }
  }
  if (c.m) {
    if (!spec) spec = DomainSpec{"ellipsoid", 0, {}, 0.0};
    if (spec->kind != "ellipsoid") throw ConfigError("--m applies to ellipsoids only");
    spec->m.clear();
    std::stringstream ss(*c.m);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const double v = parse_real(trim(item), "exponent");
      if (v != std::floor(v)) throw ConfigError("exponents must be integers");
      spec->m.push_back(static_cast<int>(v));
    }
    spec->n = 0;
  }
  if (c.r) {
    if (!spec) spec = DomainSpec{"annulus", 1, {}, 0.0};
    if (spec->kind != "annulus") throw ConfigError("--r applies to the annulus only");
    spec->r = *c.r;
  }
  if (spec && spec->kind == "ellipsoid" && spec->m.empty()) throw ConfigError("ellipsoid needs exponents (--m)");
  if (spec && spec->kind == "annulus" && spec->r == 0.0) throw ConfigError("annulus needs an inner radius (--r)");
  return spec;
}

void load_config(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  auto str = [&](const nlohmann::json& v, const std::string& k) {
    if (v.is_string()) return v.get<std::string>();
    if (k == "domain" && v.is_object()) return v.dump();
    if (v.is_number()) return format_double(v.get<double>());
    throw ConfigError("config key '" + k + "' must be a string");
  };
  auto num = [&](const nlohmann::json& v, const std::string& k) {
    if (!v.is_number()) throw ConfigError("config key '" + k + "' must be a number");
    return v.get<double>();
  };
  auto integer = [&](const nlohmann::json& v, const std::string& k) {
    if (!v.is_number_integer()) throw ConfigError("config key '" + k + "' must be an integer");
    return v.get<int>();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const auto& v = it.value();
    if (k == "domain") c.domain = str(v, k);
    else if (k == "xi") c.xi = str(v, k);
    else if (k == "z") c.z = str(v, k);
    else if (k == "w") c.w = str(v, k);
    else if (k == "p") c.p = str(v, k);
    else if (k == "m") {
      if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + std::to_string(integer(x, k));
        c.m = s;
      } else {
        c.m = str(v, k);
      }
    } else if (k == "suite") c.suite = str(v, k);
    else if (k == "out") c.out = str(v, k);
    else if (k == "u") c.u = str(v, k);
    else if (k == "from") c.from = str(v, k);
    else if (k == "to") c.to = str(v, k);
    else if (k == "r") c.r = num(v, k);
    else if (k == "tol") c.tol = num(v, k);
    else if (k == "resolution") c.resolution = integer(v, k);
    else if (k == "steps") c.steps = integer(v, k);
    else if (k == "steps2") c.steps2 = integer(v, k);
    else if (k == "format") c.format = str(v, k);
    else if (k == "details") {
      if (!v.is_boolean()) throw ConfigError("config key 'details' must be a boolean");
      c.details = v.get<bool>();
    } else throw ConfigError("unknown config key '" + k + "'");
  }
}

// ---------------------------------------------------------------------------

class Table {
 public:
  explicit Table(std::vector<std::string> cols) : cols_(std::move(cols)) {}
  void add(std::vector<std::string> cells, std::vector<bool> numeric) {
    rows_.push_back(std::move(cells));
    numeric_ = std::move(numeric);
  }
  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < cols_.size(); ++i) os << (i ? "," : "") << cols_[i];
    os << "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "\n";
    }
  }
  nlohmann::json json() const {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows_) {
      nlohmann::json o;
      for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (r[i].empty()) o[cols_[i]] = nullptr;
        else if (numeric_.size() == cols_.size() && numeric_[i]) {
          const double v = std::strtod(r[i].c_str(), nullptr);
          o[cols_[i]] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(r[i]);
        } else {
          o[cols_[i]] = r[i];
        }
      }
      arr.push_back(o);
    }
    return arr;
  }

 private:
  std::vector<std::string> cols_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<bool> numeric_;
};

struct Eval {
  double value = 0.0;
  std::string method;
  double uncertainty = 0.0;
};

Eval evaluate(const std::string& q, const Domain& d, const std::optional<CVec>& xi, const std::optional<CVec>& z,
              const std::optional<CVec>& w, const std::optional<CVec>& p) {
  auto need = [&](const std::optional<CVec>& v, const char* flag) -> const CVec& {
    if (!v) throw ConfigError(q + " needs " + flag);
    return *v;
  };
  if (q == "green") {
    const auto kv = green_function(d, need(w, "--w"), need(z, "--z"));
    return {kv.neg_infinity ? -std::numeric_limits<double>::infinity() : kv.value, to_string(kv.method), kv.uncertainty};
  }
  if (q == "poisson") {
    const auto kv = poisson_kernel(d, make_boundary_point(d, need(xi, "--xi")), need(z, "--z"));
    return {kv.value, to_string(kv.method), kv.uncertainty};
  }
  if (q == "horofunction") {
    const auto kv = horofunction(d, make_boundary_point(d, need(xi, "--xi")), need(p, "--p"), need(z, "--z"));
    return {kv.value, to_string(kv.method), kv.uncertainty};
  }
  if (q == "distance") {
    const CVec& a = need(z, "--z");
    const CVec& b = need(w, "--w");
    if (!d.contains(a) || !d.contains(b)) throw ConfigError("distance: points must be interior");
    const auto db = kobayashi_distance(d, a, b);
    return {db.value(), db.exact ? "exact" : to_string(Method::distance_bounds), 0.5 * db.width()};
  }
  if (q == "density") {
    return {boundary_form_density(d, make_boundary_point(d, need(xi, "--xi"))), "levi_form", 0.0};
  }
  throw ConfigError("unknown quantity '" + q + "' (green | poisson | horofunction | distance | density)");
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out) {
    std::ofstream f(*c.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + *c.out + "'");
    f << text;
  } else {
    std::cout << text;
  }
}

nlohmann::json envelope(const RunConfig& c, const Domain& d) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["command"] = c.command;
  j["quantity"] = c.quantity;
  j["domain"] = d.name();
  return j;
}

int cmd_eval(const RunConfig& c) {
  const Domain d = make_domain(domain_spec(c).value_or(DomainSpec{"ball", 2, {}, 0.0}));
  const int n = d.dim();
  std::optional<CVec> xi, z, w, p;
  if (c.xi) xi = parse_point(*c.xi, n, "--xi");
  if (c.z) z = parse_point(*c.z, n, "--z");
  if (c.w) w = parse_point(*c.w, n, "--w");
  if (c.p) p = parse_point(*c.p, n, "--p");
  const Eval e = evaluate(c.quantity, d, xi, z, w, p);
  Table t({"quantity", "domain", "xi", "z", "w", "p", "value", "method", "uncertainty"});
  auto f = [](const std::optional<CVec>& v) { return v ? format_vector(*v) : std::string(); };
  t.add({c.quantity, d.name(), f(xi), f(z), f(w), f(p), format_double(e.value), e.method, format_double(e.uncertainty)},
        {false, false, false, false, false, false, true, false, true});
  std::ostringstream os;
  if (c.format == "json") {
    auto j = envelope(c, d);
    j["rows"] = t.json();
    os << dump_json(j) << "\n";
  } else {
    t.write_csv(os);
  }
  emit(c, os.str());
  return 0;
}

int cmd_sweep(const RunConfig& c) {
  const Domain d = make_domain(domain_spec(c).value_or(DomainSpec{"ball", 2, {}, 0.0}));
  const int n = d.dim();
  std::optional<CVec> xi, w, p;
  if (c.xi) xi = parse_point(*c.xi, n, "--xi");
  if (c.w) w = parse_point(*c.w, n, "--w");
  if (c.p) p = parse_point(*c.p, n, "--p");
  const int steps = c.steps.value_or(100);
  if (steps < 1) throw ConfigError("--steps must be positive");
  std::ostringstream os;
  if (c.quantity == "density") {
    // chart (cos eta e^{i theta0}, (sin eta)^{2/m} e^{i theta1}) over eta and theta1
    if (!(d.ellipsoid_family() && n == 2) && d.kind() != Kind::disc)
      throw ConfigError("density sweep supports the disc and two-dimensional balls/ellipsoids");
    const int steps2 = c.steps2.value_or(1);
    if (steps2 < 1) throw ConfigError("--steps2 must be positive");
    Table t({"index", "eta", "theta", "xi", "value", "method", "uncertainty", "status"});
    int idx = 0;
    for (int i = 0; i < steps; ++i) {
      const double eta = steps == 1 ? 0.0 : 0.5 * kPi * i / (steps - 1);
      for (int k = 0; k < steps2; ++k) {
        const double th = 2.0 * kPi * k / steps2;
        CVec x = n == 1 ? vec({std::polar(1.0, th)})
                        : vec({std::cos(eta), std::polar(std::pow(std::sin(eta), 2.0 / d.exponents()[1]), th)});
        std::string val = "nan", method, unc, status = "ok";
        try {
          const Eval e = evaluate("density", d, x, std::nullopt, std::nullopt, std::nullopt);
          val = format_double(e.value);
          method = e.method;
          unc = format_double(e.uncertainty);
        } catch (const NumericalError& err) {
          status = std::string("numerical_error: ") + err.what();
        }
        t.add({std::to_string(idx++), format_double(eta), format_double(th), format_vector(x), val, method, unc, status},
              {true, true, true, false, true, false, true, false});
      }
    }
    if (c.format == "json") {
      auto j = envelope(c, d);
      j["rows"] = t.json();
      os << dump_json(j) << "\n";
    } else {
      t.write_csv(os);
    }
    emit(c, os.str());
    return 0;
  }
  if (!c.from || !c.to) throw ConfigError("sweep needs --from and --to (segment endpoints)");
  const CVec a = parse_point(*c.from, n, "--from"), b = parse_point(*c.to, n, "--to");
  Table t({"index", "t", "z", "value", "method", "uncertainty", "status"});
  for (int i = 0; i < steps; ++i) {
    const double s = steps == 1 ? 0.0 : double(i) / (steps - 1);
    const CVec z = a + s * (b - a);
    std::string val = "nan", method, unc, status = "ok";
    if (!d.contains(z)) {
      status = "outside";
    } else {
      try {
        const Eval e = evaluate(c.quantity, d, xi, z, w, p);
        val = format_double(e.value);
        method = e.method;
        unc = format_double(e.uncertainty);
      } catch (const NumericalError& err) {
        status = std::string("numerical_error: ") + err.what();
      }
    }
    t.add({std::to_string(i), format_double(s), format_vector(z), val, method, unc, status},
          {true, true, false, true, false, true, false});
  }
  if (c.format == "json") {
    auto j = envelope(c, d);
    j["rows"] = t.json();
    os << dump_json(j) << "\n";
  } else {
    t.write_csv(os);
  }
  emit(c, os.str());
  return 0;
}

int cmd_verify(const RunConfig& c) {
  const std::string name = c.suite ? *c.suite : c.quantity;
  if (name.empty()) throw ConfigError("verify needs a suite name");
  SuiteOptions opt;
  opt.domain = domain_spec(c);
  if (opt.domain && opt.domain->kind == "annulus") {
    opt.r = opt.domain->r;
    opt.domain.reset();
  }
  opt.tol = c.tol;
  opt.resolution = c.resolution.value_or(0);
  if (c.u) opt.u = *c.u;
  std::vector<std::string> names;
  if (name == "all") names = suite_names();
  else names.push_back(name);
  if (name != "all" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw ConfigError("unknown suite '" + name + "'");
  std::vector<SuiteResult> results;
  bool ok = true;
  for (const auto& s : names) {
    results.push_back(run_suite(s, opt));
    ok = ok && results.back().passed();
    for (const auto& r : results.back().reports)
      std::cerr << s << "/" << r.check << ": " << to_string(r.verdict) << " (max residual "
                << format_double(r.max_residual) << ", tolerance " << format_double(r.tolerance) << ")\n";
  }
  std::ostringstream os;
  if (c.format == "csv") {
    os << "suite,check,samples,max_residual,tolerance,verdict\n";
    for (const auto& res : results)
      for (const auto& r : res.reports)
        os << res.suite << "," << r.check << "," << r.samples << "," << format_double(r.max_residual) << ","
           << format_double(r.tolerance) << "," << to_string(r.verdict) << "\n";
  } else {
    nlohmann::json j;
    if (results.size() == 1) {
      j = to_json(results.front(), c.details);
    } else {
      j["schema"] = kSchemaVersion;
      j["suites"] = nlohmann::json::array();
      for (const auto& res : results) j["suites"].push_back(to_json(res, c.details));
      j["passed"] = ok;
    }
    os << dump_json(j) << "\n";
  }
  emit(c, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pluripot: pluricomplex Poisson kernels, Green functions and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string config_path, format;
  auto add_str = [&](const char* name, std::optional<std::string>& dst, const char* help) {
    return app.add_option_function<std::string>(name, [&dst](const std::string& v) { dst = v; }, help);
  };
  add_str("--domain", flags.domain, "disc | halfplane | annulus | ballN | eggM | ellipsoid | JSON descriptor");
  add_str("--xi", flags.xi, "boundary point, comma-separated complex components or eK");
  add_str("--z", flags.z, "point");
  add_str("--w", flags.w, "second point / Green pole");
  add_str("--p", flags.p, "base point");
  add_str("--m", flags.m, "ellipsoid exponents, comma-separated");
  add_str("--suite", flags.suite, "verification suite");
  add_str("--out", flags.out, "output path (default stdout)");
  add_str("--u", flags.u, "field for monge_ampere: poisson | green");
  add_str("--from", flags.from, "sweep segment start");
  add_str("--to", flags.to, "sweep segment end");
  app.add_option_function<double>("--r", [&](double v) { flags.r = v; }, "annulus inner radius");
  app.add_option_function<double>("--tol", [&](double v) { flags.tol = v; }, "tolerance override");
  app.add_option_function<int>("--resolution", [&](int v) { flags.resolution = v; }, "quadrature resolution");
  app.add_option_function<int>("--steps", [&](int v) { flags.steps = v; }, "sweep points (first grid axis)");
  app.add_option_function<int>("--steps2", [&](int v) { flags.steps2 = v; }, "second grid axis (density sweep)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config_path, "JSON config with the same keys as the flags");
  app.add_flag("--details", flags.details, "include per-sample details in verify reports");

  std::string quantity;
  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->add_option("quantity", quantity, "green | poisson | horofunction | distance | density")->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", quantity, "suite name (or all)");
  auto* sweep = app.add_subcommand("sweep", "sweep a quantity along a segment or chart grid");
  sweep->add_option("quantity", quantity, "green | poisson | horofunction | distance | density")->required();
  for (auto* sc : {eval, verify, sweep}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig c;
    if (!config_path.empty()) load_config(config_path, c);
    // explicit flags override the config file
    for (auto field : {&RunConfig::domain, &RunConfig::xi, &RunConfig::z, &RunConfig::w, &RunConfig::p, &RunConfig::m,
                        &RunConfig::suite, &RunConfig::out, &RunConfig::u, &RunConfig::from, &RunConfig::to})
      if (flags.*field) c.*field = flags.*field;
    if (flags.r) c.r = flags.r;
    if (flags.tol) c.tol = flags.tol;
    if (flags.resolution) c.resolution = flags.resolution;
    if (flags.steps) c.steps = flags.steps;
    if (flags.steps2) c.steps2 = flags.steps2;
    if (!format.empty()) c.format = format;
    if (flags.details) c.details = true;
    if (c.format.empty()) c.format = verify->parsed() ? "json" : "csv";
    if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
    if (c.tol && !(*c.tol > 0)) throw ConfigError("tolerance must be positive");
    c.quantity = quantity;
    if (eval->parsed()) {
      c.command = "eval";
      return cmd_eval(c);
    }
    if (sweep->parsed()) {
      c.command = "sweep";
      return cmd_sweep(c);
    }
    c.command = "verify";
    return cmd_verify(c);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
