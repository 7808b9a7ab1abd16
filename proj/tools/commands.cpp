#include "commands.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "handles.hpp"

namespace tribodyn_cli {
namespace {

using json = nlohmann::ordered_json;

// Random sampling ranges for sweeps: components p/q with |p|, q <= 9.
constexpr int64_t kSampleNumerator = 9;
constexpr int64_t kSampleDenominator = 9;
// Convergence sweeps additionally keep every component inside [-5, 5].
constexpr int64_t kConvergenceBound = 5;

struct RunConfig {
  std::string system = "plus";
  std::string inits = "0,0,0,0";
  int64_t n_max = 50;
  double tol = 1e-8;
  uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  std::size_t count = 0;
  std::string branch = "x_odd";
  int64_t n = 0;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

class Log {
 public:
  Log() {
    const char* env = std::getenv("TRIBODYN_LOG");
    if (!env || std::string(env).empty() || std::string(env) == "error") return;
    const std::string v(env);
    if (v == "info") {
      level_ = LogLevel::Info;
    } else if (v == "debug") {
      level_ = LogLevel::Debug;
    } else {
      error("ignoring TRIBODYN_LOG=" + v + " (expected error, info or debug)");
    }
  }

  void error(const std::string& m) const { emit(LogLevel::Error, "error", m); }
  void info(const std::string& m) const { emit(LogLevel::Info, "info", m); }
  void debug(const std::string& m) const { emit(LogLevel::Debug, "debug", m); }

 private:
  void emit(LogLevel at, const char* tag, const std::string& m) const {
    if (static_cast<int>(at) <= static_cast<int>(level_)) {
      std::cerr << "[tribodyn " << tag << "] " << m << '\n';
    }
  }

  LogLevel level_ = LogLevel::Error;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

tribodyn_system parse_system(const std::string& name) {
  tribodyn_system s{};
  if (tribodyn_system_parse(name.c_str(), &s) != TRIBODYN_OK) {
    throw UsageError("--system: " + std::string(tribodyn_last_error()));
  }
  return s;
}

Inits parse_inits(const std::string& csv) {
  tribodyn_inits* raw = nullptr;
  if (tribodyn_inits_parse(csv.c_str(), &raw) != TRIBODYN_OK) {
    throw UsageError("--inits: " + std::string(tribodyn_last_error()));
  }
  return Inits(raw);
}

InitsList sample(const RunConfig& cfg, int64_t bound) {
  tribodyn_inits_list* raw = nullptr;
  check(tribodyn_inits_list_random(cfg.seed, cfg.count, kSampleNumerator, kSampleDenominator, bound,
                                   &raw),
        "sampling initial conditions");
  return InitsList(raw);
}

json inits_json(const tribodyn_inits* ic) {
  return json{{"x_m1", tribodyn_inits_component(ic, 0)},
              {"y_m1", tribodyn_inits_component(ic, 1)},
              {"x_0", tribodyn_inits_component(ic, 2)},
              {"y_0", tribodyn_inits_component(ic, 3)}};
}

std::string inits_csv(const tribodyn_inits* ic) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += tribodyn_inits_component(ic, i);
  }
  return s;
}

json complex_json(tribodyn_complex z) { return json{{"re", z.re}, {"im", z.im}}; }

// Each command renders into `out` and returns its exit code.

int cmd_iterate(const RunConfig& cfg, std::ostream& out, const Log& log) {
  const tribodyn_system sys = parse_system(cfg.system);
  const Inits ic = parse_inits(cfg.inits);
  tribodyn_trajectory* raw = nullptr;
  check(tribodyn_iterate(sys, ic.get(), cfg.n_max, 0, &raw), "iterate");
  const Trajectory traj(raw);

  tribodyn_terminator term{};
  tribodyn_trajectory_terminator(traj.get(), &term);
  const std::size_t size = tribodyn_trajectory_size(traj.get());
  log.info("iterate: " + std::to_string(size) + " points");

  std::vector<tribodyn_point> points(size);
  for (std::size_t i = 0; i < size; ++i) check(tribodyn_trajectory_point(traj.get(), i, &points[i]), "point");

  if (cfg.format == "json") {
    json j;
    j["command"] = "iterate";
    j["system"] = cfg.system;
    j["inits"] = inits_json(ic.get());
    j["n_max"] = cfg.n_max;
    json pts = json::array();
    for (const auto& p : points) {
      pts.push_back({{"n", p.n}, {"x", p.x_exact}, {"y", p.y_exact}, {"x_approx", p.x},
                     {"y_approx", p.y}});
    }
    j["points"] = std::move(pts);
    if (term.kind == TRIBODYN_TERMINATOR_SINGULAR) {
      j["terminator"] = {{"kind", "singularity"},
                         {"step", term.step},
                         {"which", tribodyn_denominator_name(term.which)}};
    } else if (term.kind == TRIBODYN_TERMINATOR_GROWTH_LIMIT) {
      j["terminator"] = {{"kind", "growth_limit"}, {"step", term.step}, {"digits", term.digits}};
    } else {
      j["terminator"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,x_exact,y_exact,x_float,y_float\n";
    for (const auto& p : points) {
      out << p.n << ',' << p.x_exact << ',' << p.y_exact << ',' << fmt_double(p.x) << ','
          << fmt_double(p.y) << '\n';
    }
    if (term.kind == TRIBODYN_TERMINATOR_SINGULAR) {
      out << "# terminator: singularity step=" << term.step
          << " which=" << tribodyn_denominator_name(term.which) << '\n';
    } else if (term.kind == TRIBODYN_TERMINATOR_GROWTH_LIMIT) {
      out << "# terminator: growth_limit step=" << term.step << " digits=" << term.digits << '\n';
    }
  } else {
    out << "system: " << cfg.system << "\ninits: " << inits_csv(ic.get()) << '\n';
    for (const auto& p : points) {
      out << "n=" << p.n << "  x=" << p.x_exact << " (" << fmt_double(p.x) << ")  y=" << p.y_exact
          << " (" << fmt_double(p.y) << ")\n";
    }
    if (term.kind == TRIBODYN_TERMINATOR_SINGULAR) {
      out << "terminated: singular step " << term.step << " ("
          << tribodyn_denominator_name(term.which) << ")\n";
    } else if (term.kind == TRIBODYN_TERMINATOR_GROWTH_LIMIT) {
      out << "terminated: growth limit at step " << term.step << '\n';
    }
  }
  return kExitSuccess;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, const Log& log) {
  const tribodyn_system sys = parse_system(cfg.system);
  InitsList list;
  Inits single;
  std::vector<const tribodyn_inits*> cases;
  if (cfg.count > 0) {
    list = sample(cfg, 0);
    for (std::size_t i = 0; i < tribodyn_inits_list_size(list.get()); ++i) {
      cases.push_back(tribodyn_inits_list_at(list.get(), i));
    }
  } else {
    single = parse_inits(cfg.inits);
    cases.push_back(single.get());
  }

  int64_t compared = 0;
  std::size_t discrepancies = 0, onset_mismatches = 0, singular_cases = 0;
  json first_mismatch = nullptr;
  json rows = json::array();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    tribodyn_equivalence* raw = nullptr;
    check(tribodyn_equivalence_check(sys, cases[c], cfg.n_max, &raw), "equivalence check");
    const Equivalence eq(raw);
    tribodyn_equivalence_summary s{};
    tribodyn_equivalence_summary_get(eq.get(), &s);
    compared += s.compared;
    discrepancies += s.discrepancies;
    singular_cases += s.runtime_found ? 1 : 0;
    onset_mismatches += s.onset_agrees ? 0 : 1;
    log.debug("case " + std::to_string(c) + " [" + inits_csv(cases[c]) + "]: " +
              std::to_string(s.discrepancies) + " discrepancies");

    if (first_mismatch.is_null() && s.discrepancies > 0) {
      tribodyn_discrepancy d{};
      check(tribodyn_equivalence_discrepancy(eq.get(), 0, &d), "discrepancy");
      first_mismatch = {{"case", c},
                        {"inits", inits_json(cases[c])},
                        {"kind", "value"},
                        {"index", d.index},
                        {"component", d.y_component ? "y" : "x"},
                        {"closed", d.closed ? json(d.closed) : json(nullptr)},
                        {"iterated", d.iterated}};
    } else if (first_mismatch.is_null() && !s.onset_agrees) {
      first_mismatch = {{"case", c},
                        {"inits", inits_json(cases[c])},
                        {"kind", "onset"},
                        {"runtime_step", s.runtime_found ? json(s.runtime_step) : json(nullptr)},
                        {"analytic_step", s.analytic.found ? json(s.analytic.step) : json(nullptr)}};
    }
    rows.push_back({{"case", c},
                    {"inits", inits_csv(cases[c])},
                    {"compared", s.compared},
                    {"discrepancies", s.discrepancies},
                    {"runtime_step", s.runtime_found ? json(s.runtime_step) : json(nullptr)},
                    {"analytic_step", s.analytic.found ? json(s.analytic.step) : json(nullptr)},
                    {"onset_agrees", static_cast<bool>(s.onset_agrees)}});
  }

  const bool ok = discrepancies == 0 && onset_mismatches == 0;
  if (cfg.format == "json") {
    json j;
    j["command"] = "compare";
    j["system"] = cfg.system;
    j["n_max"] = cfg.n_max;
    if (cfg.count > 0) j["seed"] = cfg.seed;
    j["cases"] = cases.size();
    j["singular_cases"] = singular_cases;
    j["compared_values"] = compared;
    j["discrepancies"] = discrepancies;
    j["onset_mismatches"] = onset_mismatches;
    j["first_mismatch"] = first_mismatch;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "case,x_m1,y_m1,x_0,y_0,compared,discrepancies,runtime_step,analytic_step,onset_agrees\n";
    for (const auto& r : rows) {
      auto opt = [](const json& v) { return v.is_null() ? std::string() : std::to_string(v.get<int64_t>()); };
      out << r["case"].get<std::size_t>() << ',' << r["inits"].get<std::string>() << ','
          << r["compared"].get<int64_t>() << ',' << r["discrepancies"].get<std::size_t>() << ','
          << opt(r["runtime_step"]) << ',' << opt(r["analytic_step"]) << ','
          << (r["onset_agrees"].get<bool>() ? "true" : "false") << '\n';
    }
  } else {
    out << "cases: " << cases.size() << "\ncompared values: " << compared
        << "\nsingular cases: " << singular_cases << "\ndiscrepancies: " << discrepancies
        << "\nonset mismatches: " << onset_mismatches << '\n';
    if (!first_mismatch.is_null()) out << "first mismatch: " << first_mismatch.dump() << '\n';
  }
  if (!ok) log.error("closed form and iteration disagree");
  return ok ? kExitSuccess : kExitDiscrepancy;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out, const Log& log) {
  const tribodyn_system sys = parse_system(cfg.system);
  tribodyn_stability_report r{};
  tribodyn_equilibrium_report eq{};
  double crosscheck = 0.0;
  check(tribodyn_stability(sys, &r), "stability");
  check(tribodyn_equilibrium(sys, &eq), "equilibrium");
  check(tribodyn_eigen_crosscheck(sys, &crosscheck), "eigen cross-check");
  log.info("eigenvalue cross-check distance " + fmt_double(crosscheck));
  const char* verdict = tribodyn_verdict_name(r.verdict);

  if (cfg.format == "json") {
    json j;
    j["command"] = "stability";
    j["system"] = cfg.system;
    j["equilibrium"] = r.equilibrium;
    j["residual"] = eq.residual;
    j["complex_pair"] = {complex_json(eq.complex_pair[0]), complex_json(eq.complex_pair[1])};
    json ev = json::array();
    for (int i = 0; i < 4; ++i) {
      ev.push_back({{"re", r.eigenvalues[i].re}, {"im", r.eigenvalues[i].im}, {"modulus", r.moduli[i]}});
    }
    j["eigenvalues"] = std::move(ev);
    j["moduli"] = {r.moduli[0], r.moduli[1], r.moduli[2], r.moduli[3]};
    j["verdict"] = verdict;
    j["eigen_crosscheck"] = crosscheck;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "index,re,im,modulus,equilibrium,verdict\n";
    for (int i = 0; i < 4; ++i) {
      out << i << ',' << fmt_double(r.eigenvalues[i].re) << ',' << fmt_double(r.eigenvalues[i].im)
          << ',' << fmt_double(r.moduli[i]) << ',' << fmt_double(r.equilibrium) << ',' << verdict
          << '\n';
    }
  } else {
    out << "system: " << cfg.system << "\nequilibrium: " << fmt_double(r.equilibrium)
        << "\nresidual: " << fmt_double(eq.residual) << '\n';
    for (int i = 0; i < 4; ++i) {
      const double im = r.eigenvalues[i].im;
      out << "lambda_" << i + 1 << ": " << fmt_double(r.eigenvalues[i].re) << (im < 0 ? " - " : " + ")
          << fmt_double(im < 0 ? -im : im) << "i  |lambda| = " << fmt_double(r.moduli[i]) << '\n';
    }
    out << "verdict: " << verdict << '\n';
  }
  return kExitSuccess;
}

int cmd_closed(const RunConfig& cfg, std::ostream& out, const Log&) {
  const tribodyn_system sys = parse_system(cfg.system);
  tribodyn_branch branch{};
  if (tribodyn_branch_parse(cfg.branch.c_str(), &branch) != TRIBODYN_OK) {
    throw UsageError("--branch: " + std::string(tribodyn_last_error()));
  }
  const Inits ic = parse_inits(cfg.inits);
  char* raw = nullptr;
  const tribodyn_status st = tribodyn_closed_value(sys, branch, cfg.n, ic.get(), &raw);
  if (st == TRIBODYN_ERR_ZERO_DENOMINATOR) {
    throw UsageError("--inits: initial conditions lie in the forbidden set (" +
                     std::string(tribodyn_last_error()) + ")");
  }
  check(st, "closed form");
  const std::string value = take(raw);
  const bool odd = branch == TRIBODYN_BRANCH_X_ODD || branch == TRIBODYN_BRANCH_Y_ODD;
  const int64_t index = odd ? 2 * cfg.n - 1 : 2 * cfg.n;
  double approx = 0.0;
  check(tribodyn_rational_to_double(value.c_str(), &approx), "closed form");

  if (cfg.format == "json") {
    json j{{"command", "closed"}, {"system", cfg.system}, {"branch", cfg.branch},
           {"n", cfg.n},          {"index", index},       {"inits", inits_json(ic.get())},
           {"value", value},      {"approx", approx}};
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "system,branch,n,index,value,approx\n"
        << cfg.system << ',' << cfg.branch << ',' << cfg.n << ',' << index << ',' << value << ','
        << fmt_double(approx) << '\n';
  } else {
    out << cfg.branch << " n=" << cfg.n << " (index " << index << "): " << value << " ~ "
        << fmt_double(approx) << '\n';
  }
  return kExitSuccess;
}

int cmd_forbidden(const RunConfig& cfg, std::ostream& out, const Log&) {
  if (cfg.n_max < 1) throw UsageError("--n-max: must be >= 1 for a forbidden-set scan");
  const tribodyn_system sys = parse_system(cfg.system);
  const Inits ic = parse_inits(cfg.inits);

  int runtime_found = 0;
  int64_t runtime_step = 0;
  check(tribodyn_runtime_forbidden(sys, ic.get(), cfg.n_max, &runtime_found, &runtime_step),
        "runtime scan");
  tribodyn_forbidden_hit hit{};
  check(tribodyn_analytic_forbidden(sys, ic.get(), (cfg.n_max + 1) / 2, &hit), "analytic scan");
  if (hit.found && hit.step > cfg.n_max) hit = {};
  const bool agree = (runtime_found == 0 && hit.found == 0) ||
                     (runtime_found && hit.found && runtime_step == hit.step);

  if (cfg.format == "json") {
    json j;
    j["command"] = "forbidden";
    j["system"] = cfg.system;
    j["inits"] = inits_json(ic.get());
    j["n_max"] = cfg.n_max;
    j["analytic"] = hit.found ? json{{"n", hit.n},
                                     {"component", tribodyn_component_name(hit.which)},
                                     {"step", hit.step}}
                              : json(nullptr);
    j["runtime"] = runtime_found ? json{{"step", runtime_step}} : json(nullptr);
    j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "system,analytic_n,analytic_component,analytic_step,runtime_step,agree\n" << cfg.system << ',';
    if (hit.found) {
      out << hit.n << ',' << tribodyn_component_name(hit.which) << ',' << hit.step << ',';
    } else {
      out << ",,,";
    }
    if (runtime_found) out << runtime_step;
    out << ',' << (agree ? "true" : "false") << '\n';
  } else {
    out << "analytic: ";
    if (hit.found) {
      out << tribodyn_component_name(hit.which) << "_" << hit.n << " = 0 (step " << hit.step << ")\n";
    } else {
      out << "none\n";
    }
    out << "runtime: " << (runtime_found ? "step " + std::to_string(runtime_step) : "none") << '\n'
        << "agree: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kExitSuccess : kExitDiscrepancy;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, const Log& log) {
  const tribodyn_system sys = parse_system(cfg.system);
  InitsList list;
  Inits single;
  std::vector<const tribodyn_inits*> cases;
  if (cfg.count > 0) {
    list = sample(cfg, kConvergenceBound);
    for (std::size_t i = 0; i < tribodyn_inits_list_size(list.get()); ++i) {
      cases.push_back(tribodyn_inits_list_at(list.get(), i));
    }
  } else {
    single = parse_inits(cfg.inits);
    cases.push_back(single.get());
  }
  tribodyn_equilibrium_report eq{};
  check(tribodyn_equilibrium(sys, &eq), "equilibrium");

  std::size_t singular = 0, converged = 0;
  int64_t max_steps = 0;
  double worst = 0.0;
  json results = json::array();
  for (const tribodyn_inits* ic : cases) {
    tribodyn_convergence r{};
    const tribodyn_status st = tribodyn_convergence_test(sys, ic, cfg.tol, cfg.n_max, &r);
    if (st == TRIBODYN_ERR_FORBIDDEN_ENCOUNTER) {
      ++singular;
      log.info("excluded singular inits " + inits_csv(ic));
      results.push_back({{"inits", inits_csv(ic)}, {"singular", true}});
      continue;
    }
    check(st, "convergence test");
    converged += r.converged ? 1 : 0;
    if (r.steps > max_steps) max_steps = r.steps;
    if (r.final_error > worst) worst = r.final_error;
    results.push_back({{"inits", inits_csv(ic)},
                       {"singular", false},
                       {"converged", static_cast<bool>(r.converged)},
                       {"steps", r.steps},
                       {"final_error", r.final_error}});
  }
  const bool ok = converged + singular == cases.size();

  if (cfg.format == "json") {
    json j;
    j["command"] = "converge";
    j["system"] = cfg.system;
    j["tol"] = cfg.tol;
    j["n_max"] = cfg.n_max;
    if (cfg.count > 0) j["seed"] = cfg.seed;
    j["equilibrium"] = eq.value;
    j["cases"] = cases.size();
    j["singular_cases"] = singular;
    j["converged"] = converged;
    j["max_steps"] = max_steps;
    j["worst_final_error"] = worst;
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "inits,singular,converged,steps,final_error\n";
    for (const auto& r : results) {
      out << '"' << r["inits"].get<std::string>() << "\"," << (r["singular"].get<bool>() ? "true" : "false");
      if (r["singular"].get<bool>()) {
        out << ",,,\n";
      } else {
        out << ',' << (r["converged"].get<bool>() ? "true" : "false") << ','
            << r["steps"].get<int64_t>() << ',' << fmt_double(r["final_error"].get<double>()) << '\n';
      }
    }
  } else {
    out << "equilibrium: " << fmt_double(eq.value) << "\ncases: " << cases.size()
        << "\nsingular (excluded): " << singular << "\nconverged: " << converged
        << "\nmax steps: " << max_steps << "\nworst final error: " << fmt_double(worst) << '\n';
  }
  return ok ? kExitSuccess : kExitDiscrepancy;
}

int cmd_trib(const RunConfig& cfg, std::ostream& out, const Log&) {
  const std::string value = take([&] {
    char* raw = nullptr;
    check(tribodyn_trib(cfg.n, &raw), "trib");
    return raw;
  }());
  std::optional<double> binet;
  double b = 0.0;
  if (tribodyn_binet(cfg.n, &b) == TRIBODYN_OK) binet = b;

  if (cfg.format == "json") {
    json j{{"command", "trib"}, {"n", cfg.n}, {"value", value},
           {"binet", binet ? json(*binet) : json(nullptr)}};
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,value,binet\n" << cfg.n << ',' << value << ',' << (binet ? fmt_double(*binet) : "") << '\n';
  } else {
    out << "T(" << cfg.n << ") = " << value << '\n';
    if (binet) out << "binet: " << fmt_double(*binet) << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int run(int argc, char** argv) {
  const Log log;
  RunConfig cfg;

  CLI::App app{"Rational difference systems with Tribonacci-indexed solutions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tribodyn_version()));

  const std::vector<std::string> formats = {"json", "csv", "text"};
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", cfg.system, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };
  auto add_inits = [&](CLI::App* sub) {
    sub->add_option("--inits", cfg.inits, "x_{-1},y_{-1},x_0,y_0 as p/q rationals")
        ->capture_default_str();
  };
  auto add_n_max = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "last sequence index")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--count", cfg.count, "number of random initial conditions (0: use --inits)");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  };

  auto* iterate = app.add_subcommand("iterate", "iterate a system exactly");
  add_system(iterate);
  add_inits(iterate);
  add_n_max(iterate);
  add_output(iterate);

  auto* compare = app.add_subcommand("compare", "check closed-form solutions against iteration");
  add_system(compare);
  add_inits(compare);
  add_n_max(compare);
  add_sweep(compare);
  add_output(compare);

  auto* stability = app.add_subcommand("stability", "equilibrium, eigenvalues and verdict");
  add_system(stability);
  add_output(stability);

  auto* closed = app.add_subcommand("closed", "evaluate one closed-form branch");
  add_system(closed);
  add_inits(closed);
  closed->add_option("--branch", cfg.branch, "x_odd, x_even, y_odd or y_even")->capture_default_str();
  closed->add_option("--n", cfg.n, "branch parameter")->check(CLI::NonNegativeNumber)->required();
  add_output(closed);

  auto* forbidden = app.add_subcommand("forbidden", "analytic and runtime forbidden-set scan");
  add_system(forbidden);
  add_inits(forbidden);
  add_n_max(forbidden);
  add_output(forbidden);

  auto* converge = app.add_subcommand("converge", "convergence to the equilibrium");
  add_system(converge);
  add_inits(converge);
  add_n_max(converge);
  add_sweep(converge);
  converge->add_option("--tol", cfg.tol, "error tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(converge);

  auto* trib = app.add_subcommand("trib", "exact Tribonacci number");
  trib->add_option("--n", cfg.n, "signed index")->required();
  add_output(trib);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitSuccess : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kExitSuccess : kExitUsage;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitUsage;
  try {
    if (*iterate) code = cmd_iterate(cfg, buffer, log);
    else if (*compare) code = cmd_compare(cfg, buffer, log);
    else if (*stability) code = cmd_stability(cfg, buffer, log);
    else if (*closed) code = cmd_closed(cfg, buffer, log);
    else if (*forbidden) code = cmd_forbidden(cfg, buffer, log);
    else if (*converge) code = cmd_converge(cfg, buffer, log);
    else if (*trib) code = cmd_trib(cfg, buffer, log);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Keeps the exit status within 0/1/2.
    std::cerr << "error: internal: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    std::cout << buffer.str() << std::flush;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    file << buffer.str();
    if (!file) {
      std::cerr << "error: --output: cannot write " << cfg.output << '\n';
      return kExitUsage;
    }
    log.info("wrote " + cfg.output);
  }
  return code;
}

}  // namespace tribodyn_cli
