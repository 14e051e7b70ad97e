#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leemodel/errors.hpp"
#include "leemodel/model.hpp"
#include "leemodel/propagator.hpp"
#include "leemodel/renorm.hpp"
#include "leemodel/scattering.hpp"
#include "leemodel/sweep.hpp"
#include "leemodel/verify.hpp"

namespace leemodel::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Bad or missing configuration. Maps to exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---- config --------------------------------------------------------------

struct Bare {
  double U0, g0;
  FormFactor ff;
};
struct Physical {
  double E0;
  CouplingSq g0_sq;
};

struct SweepSpec {
  double k_min, k_max;
  int n_points;
  Spacing spacing;
};

struct LimitSpec {
  double k;
  std::vector<double> grid;
};

struct Config {
  double M = 0, m = 0;
  std::variant<std::monostate, Bare, Physical> params;
  std::optional<SweepSpec> sweep;
  std::optional<LimitSpec> limit;
  verify::SuiteSettings suite;
  std::optional<fs::path> csv_path, report_path;

  double mu() const { return MassSpectrum(M, m).reduced(); }
};

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError("missing field \"" + where + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_number()) throw ConfigError("field \"" + where + key + "\" must be a number");
  return v.get<double>();
}

FormFactor parse_form_factor(const json& j) {
  const auto& type = field(j, "type", "bare.form_factor.");
  if (!type.is_string()) throw ConfigError("bare.form_factor.type must be a string");
  const auto t = type.get<std::string>();
  if (t == "local") return FormFactor::local();
  const double lambda = number(j, "lambda", "bare.form_factor.");
  if (t == "sharp") return FormFactor::sharp_cutoff(lambda);
  if (t == "gaussian") return FormFactor::gaussian(lambda);
  throw ConfigError("unknown form factor type \"" + t + "\" (local, sharp, gaussian)");
}

CouplingSq parse_coupling(const json& v) {
  if (v.is_string() && v.get<std::string>() == "infinity") return CouplingSq::infinity();
  if (!v.is_number()) throw ConfigError("physical.g0_sq must be a number or \"infinity\"");
  return CouplingSq::finite(v.get<double>());
}

Config load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  Config c;
  if (j.contains("masses")) {
    c.M = number(j["masses"], "M", "masses.");
    c.m = number(j["masses"], "m", "masses.");
    MassSpectrum(c.M, c.m);
  }
  if (j.contains("bare") && j.contains("physical")) throw ConfigError("give either \"bare\" or \"physical\", not both");
  if (j.contains("bare")) {
    const auto& b = j["bare"];
    c.params = Bare{number(b, "U0", "bare."), number(b, "g0", "bare."),
                    parse_form_factor(field(b, "form_factor", "bare."))};
  } else if (j.contains("physical")) {
    const auto& p = j["physical"];
    c.params = Physical{number(p, "E0", "physical."), parse_coupling(field(p, "g0_sq", "physical."))};
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    SweepSpec sw{number(s, "k_min", "sweep."), number(s, "k_max", "sweep."), 0, Spacing::Log};
    const auto& n = field(s, "n_points", "sweep.");
    if (!n.is_number_integer()) throw ConfigError("sweep.n_points must be an integer");
    sw.n_points = n.get<int>();
    const auto spacing = s.value("spacing", std::string("log"));
    if (spacing == "linear") sw.spacing = Spacing::Linear;
    else if (spacing != "log") throw ConfigError("sweep.spacing must be \"linear\" or \"log\"");
    if (!(sw.k_min > 0) || !(sw.k_max > sw.k_min) || sw.n_points < 2)
      throw ConfigError("sweep needs 0 < k_min < k_max and n_points >= 2");
    c.sweep = sw;
  }
  if (j.contains("limit_study")) {
    const auto& l = j["limit_study"];
    LimitSpec ls{number(l, "k", "limit_study."), {}};
    const auto& g = field(l, "g0_sq_grid", "limit_study.");
    if (!g.is_array()) throw ConfigError("limit_study.g0_sq_grid must be an array");
    for (const auto& v : g) {
      if (!v.is_number()) throw ConfigError("limit_study.g0_sq_grid entries must be numbers");
      ls.grid.push_back(v.get<double>());
    }
    c.limit = ls;
  }
  if (j.contains("verify")) {
    const auto& v = j["verify"];
    if (v.contains("seed")) c.suite.seed = v["seed"].get<std::uint64_t>();
    if (v.contains("draws")) c.suite.draws = v["draws"].get<int>();
  }
  if (j.contains("outputs")) {
    const auto& o = j["outputs"];
    if (o.contains("csv_path")) c.csv_path = o["csv_path"].get<std::string>();
    if (o.contains("report_path")) c.report_path = o["report_path"].get<std::string>();
  }
  return c;
}

void require_masses(const Config& c) {
  if (c.M == 0 && c.m == 0) throw ConfigError("missing field \"masses\"");
}

const Bare& require_bare(const Config& c) {
  require_masses(c);
  if (const auto* b = std::get_if<Bare>(&c.params)) return *b;
  throw ConfigError("this command needs a \"bare\" parameter block");
}

const Physical& require_physical(const Config& c) {
  require_masses(c);
  if (const auto* p = std::get_if<Physical>(&c.params)) return *p;
  throw ConfigError("this command needs a \"physical\" parameter block");
}

QuadratureOptions quadrature(const Options& opt) {
  QuadratureOptions q;
  if (opt.tol) {
    q.accept_rel_tol = *opt.tol;
    q.rel_tol = std::min(q.rel_tol, *opt.tol);
  }
  return q;
}

// ---- output --------------------------------------------------------------

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ConfigError("cannot write " + path.string());
}

// Key-value report, one "key = value" per line.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { text_ += key + " = " + value + "\n"; }
  void add(const std::string& key, double value) { add(key, fmt(value)); }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

fs::path csv_target(const Config& c, const Options& opt) {
  if (opt.out) return *opt.out;
  if (c.csv_path) return *c.csv_path;
  throw ConfigError("no CSV destination: set outputs.csv_path or pass --out");
}

void emit_report(const Config& c, const Report& r) {
  std::cout << r.str();
  if (c.report_path) write_file(*c.report_path, r.str());
}

// Runs a command body with the exit-status contract applied to its errors.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const LeeError& e) {
    std::cerr << (is_validation_error(e.code()) ? "config error: " : "numerical error: ") << e.what() << "\n";
    return is_validation_error(e.code()) ? kConfigError : kNumericalError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  }
}

}  // namespace

int cmd_sigma(const Options& opt) {
  return guarded([&] {
    const auto c = load_config(opt.config);
    if (!c.sweep) throw ConfigError("missing field \"sweep\"");
    const auto csv = csv_target(c, opt);
    const auto ks = momentum_grid(c.sweep->k_min, c.sweep->k_max, c.sweep->n_points, c.sweep->spacing);

    Report report;
    std::optional<PhysicalParams> phys;
    if (const auto* b = std::get_if<Bare>(&c.params)) {
      const auto p = make_params(c.M, c.m, b->U0, b->g0, b->ff);
      phys = physical_from_bare(p, quadrature(opt));
      report.add("parameterization", "bare");
      report.add("U0", b->U0);
    } else {
      const auto& ph = require_physical(c);
      phys.emplace(ph.E0, c.mu(), ph.g0_sq);
      report.add("parameterization", "physical");
    }
    report.add("E0", phys->E0());
    report.add("mu", phys->mu());
    report.add("g0_sq", phys->is_delta_limit() ? std::string("infinity") : fmt(phys->g0_sq().value()));
    report.add("g_sq", phys->g_sq());

    const auto rows = sweep_parallel(*phys, ks);
    std::string out = "k,dsigma_dphi,sigma,delta0,re_bracket,im_bracket\n";
    for (const auto& r : rows) {
      out += fmt(r.k) + "," + fmt(r.dsigma_dphi) + "," + fmt(r.sigma) + "," + fmt(r.delta0) + "," +
             fmt(r.bracket.real()) + "," + fmt(r.bracket.imag()) + "\n";
    }
    write_file(csv, out);
    report.add("rows", std::to_string(rows.size()));
    report.add("csv", csv.string());
    emit_report(c, report);
    return kOk;
  });
}

int cmd_boundstate(const Options& opt) {
  return guarded([&] {
    const auto c = load_config(opt.config);
    const auto& b = require_bare(c);
    const auto p = make_params(c.M, c.m, b.U0, b.g0, b.ff);
    const auto q = quadrature(opt);
    const double E0 = solve_bound_state(p, q);
    const double U0_back = bare_internal_energy(E0, p, q);

    Report report;
    report.add("E0", E0);
    report.add("mu", p.mu());
    report.add("U0", b.U0);
    report.add("U0_round_trip_residual", std::abs(U0_back - b.U0));
    report.add("g0_sq", p.couplings.g0_sq());
    report.add("g_sq", renormalized_coupling_sq(CouplingSq::finite(p.couplings.g0_sq()), p.mu(), E0));
    if (b.U0 > 0) {
      report.add("lambda", contact_lambda(p));
    } else {
      report.add("lambda_note", "omitted: contact coupling g0^2/U0 needs U0 > 0");
    }
    if (opt.out) write_file(*opt.out, report.str());
    emit_report(c, report);
    return kOk;
  });
}

int cmd_verify(const Options& opt) {
  return guarded([&] {
    const auto c = load_config(opt.config);
    auto settings = c.suite;
    settings.tolerance_override = opt.tol;
    const auto reports = verify::run_oracle_suite(settings);

    json checks = json::array();
    int failed = 0;
    for (const auto& r : reports) {
      const char* status = r.status == verify::OracleReport::Status::Passed   ? "passed"
                           : r.status == verify::OracleReport::Status::Failed ? "failed"
                                                                               : "excluded";
      if (r.status == verify::OracleReport::Status::Failed) ++failed;
      checks.push_back({{"target", r.target},
                        {"status", status},
                        {"value_main", {r.value_main.real(), r.value_main.imag()}},
                        {"value_oracle", {r.value_oracle.real(), r.value_oracle.imag()}},
                        {"rel_error", r.rel_error},
                        {"tolerance", r.tolerance},
                        {"note", r.note}});
      std::cout << (r.status == verify::OracleReport::Status::Failed ? "FAIL " : "ok   ") << r.target
                << "  rel_error=" << short_fmt(r.rel_error) << "  tol=" << short_fmt(r.tolerance) << "\n";
    }
    json doc{{"seed", settings.seed},
             {"draws", settings.draws},
             {"checks", checks},
             {"failed", failed},
             {"all_passed", failed == 0}};
    const auto path = opt.out ? opt.out : c.report_path;
    if (path) write_file(*path, doc.dump(2) + "\n");
    std::cout << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return failed == 0 ? kOk : kVerifyFailed;
  });
}

int cmd_limit_study(const Options& opt) {
  return guarded([&] {
    const auto c = load_config(opt.config);
    const auto& ph = require_physical(c);
    if (!c.limit) throw ConfigError("missing field \"limit_study\"");
    const auto csv = csv_target(c, opt);
    const auto study = verify::limit_convergence_study(c.limit->k, c.mu(), ph.E0, c.limit->grid);

    std::string out = "g0_sq,sigma,abs_error\n";
    for (std::size_t i = 0; i < study.g0_sq.size(); ++i)
      out += fmt(study.g0_sq[i]) + "," + fmt(study.sigma[i]) + "," + fmt(study.abs_error[i]) + "\n";
    write_file(csv, out);

    Report report;
    report.add("k", c.limit->k);
    report.add("mu", c.mu());
    report.add("E0", ph.E0);
    report.add("sigma_delta", study.sigma_delta);
    report.add("slope", study.slope);
    report.add("csv", csv.string());
    emit_report(c, report);
    return kOk;
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Ntheta scattering in the Galilean Lee model"};
  app.require_subcommand(1);
  Options opt;
  std::string config, out;
  double tol = 0;
  int (*chosen)(const Options&) = nullptr;

  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "JSON configuration")->required();
    sub->add_option("--out", out, "output path (overrides the config)");
    sub->add_option("--tol", tol, "tolerance override")->check(CLI::PositiveNumber);
    sub->callback([&, fn] { chosen = fn; });
  };
  add("sigma", "cross sections on a momentum grid (CSV)", cmd_sigma);
  add("boundstate", "bound-state energy and couplings from bare parameters", cmd_boundstate);
  add("verify", "run the oracle suite", cmd_verify);
  add("limit-study", "convergence of sigma to the delta limit", cmd_limit_study);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  opt.config = config;
  if (!out.empty()) opt.out = out;
  if (app.get_subcommands().front()->count("--tol")) opt.tol = tol;
  return chosen(opt);
}

}  // namespace leemodel::cli
