#include "tribodyn/tribodyn.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "tribodyn/closed_form.hpp"
#include "tribodyn/dynamics.hpp"
#include "tribodyn/errors.hpp"
#include "tribodyn/stability.hpp"
#include "tribodyn/tribonacci.hpp"

struct tribodyn_inits {
  tribodyn::InitialConditions value;
  std::string text[4];
};

struct tribodyn_inits_list {
  std::vector<tribodyn_inits> items;
};

struct tribodyn_trajectory {
  tribodyn::Trajectory value;
  std::vector<std::string> x_text;
  std::vector<std::string> y_text;
};

struct tribodyn_equivalence {
  tribodyn::EquivalenceReport value;
  std::vector<std::string> closed_text;
  std::vector<std::string> iterated_text;
};

namespace {

using namespace tribodyn;

thread_local std::string last_error;

tribodyn_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return TRIBODYN_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return TRIBODYN_ERR_PARSE;
    case ErrorCode::ZeroDenominator: return TRIBODYN_ERR_ZERO_DENOMINATOR;
    case ErrorCode::DivisionByZero: return TRIBODYN_ERR_DIVISION_BY_ZERO;
    case ErrorCode::IndexOutOfPrecisionRange: return TRIBODYN_ERR_OUT_OF_PRECISION_RANGE;
    case ErrorCode::ForbiddenEncounter: return TRIBODYN_ERR_FORBIDDEN_ENCOUNTER;
  }
  return TRIBODYN_ERR_INTERNAL;
}

tribodyn_status fail(tribodyn_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
tribodyn_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TRIBODYN_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TRIBODYN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TRIBODYN_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, message);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

SystemKind kind_of(tribodyn_system s) {
  switch (s) {
    case TRIBODYN_SYSTEM_PLUS: return SystemKind::Plus;
    case TRIBODYN_SYSTEM_MINUS: return SystemKind::Minus;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown system");
}

tribodyn_system system_of(SystemKind k) {
  return k == SystemKind::Plus ? TRIBODYN_SYSTEM_PLUS : TRIBODYN_SYSTEM_MINUS;
}

Branch branch_of(tribodyn_branch b) {
  switch (b) {
    case TRIBODYN_BRANCH_X_ODD: return Branch::XOdd;
    case TRIBODYN_BRANCH_X_EVEN: return Branch::XEven;
    case TRIBODYN_BRANCH_Y_ODD: return Branch::YOdd;
    case TRIBODYN_BRANCH_Y_EVEN: return Branch::YEven;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown branch");
}

tribodyn_complex to_c(std::complex<double> z) { return {z.real(), z.imag()}; }

tribodyn_inits make_inits(InitialConditions ic) {
  tribodyn_inits h{std::move(ic), {}};
  h.text[0] = h.value.x_m1.str();
  h.text[1] = h.value.y_m1.str();
  h.text[2] = h.value.x_0.str();
  h.text[3] = h.value.y_0.str();
  return h;
}

tribodyn_verdict verdict_of(Verdict v) {
  switch (v) {
    case Verdict::LocallyAsymptoticallyStable: return TRIBODYN_VERDICT_LOCALLY_ASYMPTOTICALLY_STABLE;
    case Verdict::Unstable: return TRIBODYN_VERDICT_UNSTABLE;
    case Verdict::Inconclusive: return TRIBODYN_VERDICT_INCONCLUSIVE;
  }
  return TRIBODYN_VERDICT_INCONCLUSIVE;
}

tribodyn_stability_report to_c(const StabilityReport& r) {
  tribodyn_stability_report out{};
  out.has_system = r.kind.has_value();
  out.system = r.kind ? system_of(*r.kind) : TRIBODYN_SYSTEM_PLUS;
  out.equilibrium = r.equilibrium;
  for (int i = 0; i < 4; ++i) {
    out.eigenvalues[i] = to_c(r.eigenvalues[i]);
    out.moduli[i] = r.moduli[i];
  }
  out.verdict = verdict_of(r.verdict);
  return out;
}

tribodyn_forbidden_hit to_c(const std::optional<ForbiddenHit>& hit) {
  tribodyn_forbidden_hit out{};
  if (hit) {
    out.found = 1;
    out.n = hit->n;
    out.which = static_cast<tribodyn_component>(hit->which);
    out.step = hit->step();
  }
  return out;
}

}  // namespace

extern "C" {

const char* tribodyn_last_error(void) { return last_error.c_str(); }

const char* tribodyn_status_name(tribodyn_status status) {
  switch (status) {
    case TRIBODYN_OK: return "ok";
    case TRIBODYN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TRIBODYN_ERR_PARSE: return "parse_error";
    case TRIBODYN_ERR_ZERO_DENOMINATOR: return "zero_denominator";
    case TRIBODYN_ERR_DIVISION_BY_ZERO: return "division_by_zero";
    case TRIBODYN_ERR_OUT_OF_PRECISION_RANGE: return "index_out_of_precision_range";
    case TRIBODYN_ERR_FORBIDDEN_ENCOUNTER: return "forbidden_encounter";
    case TRIBODYN_ERR_OUT_OF_RANGE: return "out_of_range";
    case TRIBODYN_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* tribodyn_version(void) { return "1.0.0"; }

void tribodyn_string_free(char* s) { std::free(s); }

tribodyn_status tribodyn_system_parse(const char* name, tribodyn_system* out) {
  return guarded([&] {
    require(name && out, "null argument");
    const auto k = parse_system_kind(name);
    if (!k) throw Error(ErrorCode::Parse, std::string("unknown system \"") + name + "\"");
    *out = system_of(*k);
  });
}

const char* tribodyn_system_name(tribodyn_system system) {
  return system == TRIBODYN_SYSTEM_MINUS ? "minus" : "plus";
}

tribodyn_status tribodyn_branch_parse(const char* name, tribodyn_branch* out) {
  return guarded([&] {
    require(name && out, "null argument");
    for (Branch b : kAllBranches) {
      if (to_string(b) == name) {
        *out = static_cast<tribodyn_branch>(b);
        return;
      }
    }
    throw Error(ErrorCode::Parse, std::string("unknown branch \"") + name + "\"");
  });
}

const char* tribodyn_branch_name(tribodyn_branch branch) {
  switch (branch) {
    case TRIBODYN_BRANCH_X_ODD: return "x_odd";
    case TRIBODYN_BRANCH_X_EVEN: return "x_even";
    case TRIBODYN_BRANCH_Y_ODD: return "y_odd";
    case TRIBODYN_BRANCH_Y_EVEN: return "y_even";
  }
  return "unknown";
}

const char* tribodyn_denominator_name(tribodyn_denominator which) {
  switch (which) {
    case TRIBODYN_DENOMINATOR_X: return "x_denominator";
    case TRIBODYN_DENOMINATOR_Y: return "y_denominator";
    case TRIBODYN_DENOMINATOR_BOTH: return "both";
  }
  return "unknown";
}

const char* tribodyn_component_name(tribodyn_component which) {
  switch (which) {
    case TRIBODYN_COMPONENT_A: return "A";
    case TRIBODYN_COMPONENT_B: return "B";
    case TRIBODYN_COMPONENT_C: return "C";
    case TRIBODYN_COMPONENT_D: return "D";
  }
  return "?";
}

const char* tribodyn_verdict_name(tribodyn_verdict verdict) {
  switch (verdict) {
    case TRIBODYN_VERDICT_LOCALLY_ASYMPTOTICALLY_STABLE: return "locally_asymptotically_stable";
    case TRIBODYN_VERDICT_UNSTABLE: return "unstable";
    case TRIBODYN_VERDICT_INCONCLUSIVE: return "inconclusive";
  }
  return "unknown";
}

tribodyn_status tribodyn_trib(int64_t n, char** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = dup(trib(n).get_str());
  });
}

tribodyn_status tribodyn_characteristic_roots(tribodyn_roots* out) {
  return guarded([&] {
    require(out, "null argument");
    const CharacteristicRoots r = characteristic_roots();
    *out = {r.alpha, to_c(r.beta), to_c(r.gamma)};
  });
}

tribodyn_status tribodyn_binet(int64_t n, double* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = binet(n);
  });
}

tribodyn_status tribodyn_ratio(int64_t n, int64_t r, double* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = ratio(n, r);
  });
}

tribodyn_status tribodyn_rational_normalize(const char* text, char** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = dup(Rational::parse(text).str());
  });
}

tribodyn_status tribodyn_rational_to_double(const char* text, double* out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = Rational::parse(text).to_double();
  });
}

tribodyn_status tribodyn_inits_create(const char* x_m1, const char* y_m1, const char* x_0,
                                      const char* y_0, tribodyn_inits** out) {
  return guarded([&] {
    require(x_m1 && y_m1 && x_0 && y_0 && out, "null argument");
    InitialConditions ic{Rational::parse(x_m1), Rational::parse(y_m1), Rational::parse(x_0),
                         Rational::parse(y_0)};
    *out = new tribodyn_inits(make_inits(std::move(ic)));
  });
}

tribodyn_status tribodyn_inits_parse(const char* csv, tribodyn_inits** out) {
  return guarded([&] {
    require(csv && out, "null argument");
    std::vector<std::string> parts;
    std::string current;
    for (const char* p = csv; *p; ++p) {
      if (*p == ',') {
        parts.push_back(current);
        current.clear();
      } else {
        current.push_back(*p);
      }
    }
    parts.push_back(current);
    if (parts.size() != 4) {
      throw Error(ErrorCode::Parse, "expected 4 comma-separated rationals, got " +
                                        std::to_string(parts.size()));
    }
    InitialConditions ic{Rational::parse(parts[0]), Rational::parse(parts[1]),
                         Rational::parse(parts[2]), Rational::parse(parts[3])};
    *out = new tribodyn_inits(make_inits(std::move(ic)));
  });
}

const char* tribodyn_inits_component(const tribodyn_inits* inits, int component) {
  if (!inits || component < 0 || component > 3) return nullptr;
  return inits->text[component].c_str();
}

void tribodyn_inits_free(tribodyn_inits* inits) { delete inits; }

tribodyn_status tribodyn_inits_list_random(uint64_t seed, size_t count, int64_t max_abs_numerator,
                                           int64_t max_denominator, int64_t bound,
                                           tribodyn_inits_list** out) {
  return guarded([&] {
    require(out, "null argument");
    RandomInitsOptions opts;
    opts.max_abs_numerator = max_abs_numerator;
    opts.max_denominator = max_denominator;
    if (bound > 0) opts.bound = bound;
    auto list = std::make_unique<tribodyn_inits_list>();
    for (auto& ic : random_inits(seed, count, opts)) list->items.push_back(make_inits(std::move(ic)));
    *out = list.release();
  });
}

size_t tribodyn_inits_list_size(const tribodyn_inits_list* list) {
  return list ? list->items.size() : 0;
}

const tribodyn_inits* tribodyn_inits_list_at(const tribodyn_inits_list* list, size_t i) {
  if (!list || i >= list->items.size()) return nullptr;
  return &list->items[i];
}

void tribodyn_inits_list_free(tribodyn_inits_list* list) { delete list; }

tribodyn_status tribodyn_iterate(tribodyn_system system, const tribodyn_inits* inits,
                                 int64_t n_max, size_t digit_limit, tribodyn_trajectory** out) {
  return guarded([&] {
    require(inits && out, "null argument");
    IterateOptions opts;
    if (digit_limit != 0) opts.digit_limit = digit_limit;
    auto h = std::make_unique<tribodyn_trajectory>(
        tribodyn_trajectory{iterate(kind_of(system), inits->value, n_max, opts), {}, {}});
    for (const auto& p : h->value.points()) {
      h->x_text.push_back(p.x.str());
      h->y_text.push_back(p.y.str());
    }
    *out = h.release();
  });
}

size_t tribodyn_trajectory_size(const tribodyn_trajectory* t) {
  return t ? t->value.points().size() : 0;
}

tribodyn_status tribodyn_trajectory_point(const tribodyn_trajectory* t, size_t i,
                                          tribodyn_point* out) {
  if (!t || !out) return fail(TRIBODYN_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= t->value.points().size()) {
    return fail(TRIBODYN_ERR_OUT_OF_RANGE, "trajectory point index out of range");
  }
  const StatePoint& p = t->value.points()[i];
  *out = {p.n, t->x_text[i].c_str(), t->y_text[i].c_str(), p.x.to_double(), p.y.to_double()};
  return TRIBODYN_OK;
}

void tribodyn_trajectory_terminator(const tribodyn_trajectory* t, tribodyn_terminator* out) {
  if (!out) return;
  *out = {};
  if (!t || !t->value.terminator()) return;
  const Terminator& term = *t->value.terminator();
  if (const auto* s = std::get_if<SingularityReport>(&term)) {
    out->kind = TRIBODYN_TERMINATOR_SINGULAR;
    out->step = s->step;
    out->which = static_cast<tribodyn_denominator>(s->which);
  } else {
    const auto& g = std::get<GrowthLimitReport>(term);
    out->kind = TRIBODYN_TERMINATOR_GROWTH_LIMIT;
    out->step = g.step;
    out->digits = g.digits;
  }
}

void tribodyn_trajectory_free(tribodyn_trajectory* t) { delete t; }

tribodyn_status tribodyn_runtime_forbidden(tribodyn_system system, const tribodyn_inits* inits,
                                           int64_t n_max, int* found, int64_t* step) {
  return guarded([&] {
    require(inits && found && step, "null argument");
    const auto s = runtime_forbidden(kind_of(system), inits->value, n_max);
    *found = s.has_value();
    *step = s.value_or(0);
  });
}

tribodyn_status tribodyn_closed_value(tribodyn_system system, tribodyn_branch branch, int64_t n,
                                      const tribodyn_inits* inits, char** out) {
  return guarded([&] {
    require(inits && out, "null argument");
    *out = dup(closed_value(kind_of(system), branch_of(branch), n, inits->value).str());
  });
}

tribodyn_status tribodyn_denominators(tribodyn_system system, int64_t n,
                                      const tribodyn_inits* inits, char* out[4]) {
  return guarded([&] {
    require(inits && out, "null argument");
    const DenominatorQuad q = denominators(kind_of(system), n, inits->value);
    const std::string s[4] = {q.a.str(), q.b.str(), q.c.str(), q.d.str()};
    char* tmp[4] = {};
    try {
      for (int i = 0; i < 4; ++i) tmp[i] = dup(s[i]);
    } catch (...) {
      for (char* p : tmp) std::free(p);
      throw;
    }
    for (int i = 0; i < 4; ++i) out[i] = tmp[i];
  });
}

tribodyn_status tribodyn_analytic_forbidden(tribodyn_system system, const tribodyn_inits* inits,
                                            int64_t n_max, tribodyn_forbidden_hit* out) {
  return guarded([&] {
    require(inits && out, "null argument");
    *out = to_c(analytic_forbidden(kind_of(system), inits->value, n_max));
  });
}

tribodyn_status tribodyn_equivalence_check(tribodyn_system system, const tribodyn_inits* inits,
                                           int64_t n_max, tribodyn_equivalence** out) {
  return guarded([&] {
    require(inits && out, "null argument");
    auto h = std::make_unique<tribodyn_equivalence>(
        tribodyn_equivalence{equivalence_check(kind_of(system), inits->value, n_max), {}, {}});
    for (const auto& d : h->value.discrepancies) {
      h->closed_text.push_back(d.closed ? d.closed->str() : std::string());
      h->iterated_text.push_back(d.iterated.str());
    }
    *out = h.release();
  });
}

void tribodyn_equivalence_summary_get(const tribodyn_equivalence* e,
                                      tribodyn_equivalence_summary* out) {
  if (!out) return;
  *out = {};
  if (!e) return;
  const EquivalenceReport& r = e->value;
  out->n_max = r.n_max;
  out->compared = r.compared;
  out->discrepancies = r.discrepancies.size();
  out->runtime_found = r.runtime_onset.has_value();
  out->runtime_step = r.runtime_onset.value_or(0);
  out->analytic = to_c(r.analytic_onset);
  out->onset_agrees = r.onset_agrees();
}

tribodyn_status tribodyn_equivalence_discrepancy(const tribodyn_equivalence* e, size_t i,
                                                 tribodyn_discrepancy* out) {
  if (!e || !out) return fail(TRIBODYN_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= e->value.discrepancies.size()) {
    return fail(TRIBODYN_ERR_OUT_OF_RANGE, "discrepancy index out of range");
  }
  const Discrepancy& d = e->value.discrepancies[i];
  out->index = d.index;
  out->y_component = d.y_component;
  out->closed = d.closed ? e->closed_text[i].c_str() : nullptr;
  out->iterated = e->iterated_text[i].c_str();
  return TRIBODYN_OK;
}

void tribodyn_equivalence_free(tribodyn_equivalence* e) { delete e; }

tribodyn_status tribodyn_equilibrium(tribodyn_system system, tribodyn_equilibrium_report* out) {
  return guarded([&] {
    require(out, "null argument");
    const EquilibriumReport r = equilibrium(kind_of(system));
    *out = {system, r.value, r.residual, {to_c(r.complex_pair[0]), to_c(r.complex_pair[1])}};
  });
}

tribodyn_status tribodyn_jacobian(tribodyn_system system, double out[16]) {
  return guarded([&] {
    require(out, "null argument");
    const Matrix4 b = jacobian(kind_of(system));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out[4 * r + c] = b(r, c);
  });
}

tribodyn_status tribodyn_stability(tribodyn_system system, tribodyn_stability_report* out) {
  return guarded([&] {
    require(out, "null argument");
    *out = to_c(stability_verdict(kind_of(system)));
  });
}

tribodyn_status tribodyn_stability_matrix(const double matrix[16], tribodyn_stability_report* out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    Matrix4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = matrix[4 * r + c];
    *out = to_c(stability_verdict(m));
  });
}

tribodyn_status tribodyn_eigen_crosscheck(tribodyn_system system, double* out) {
  return guarded([&] {
    require(out, "null argument");
    const SystemKind k = kind_of(system);
    *out = spectrum_distance(eigenvalues(k), eigenvalues_general(jacobian(k)));
  });
}

tribodyn_status tribodyn_convergence_test(tribodyn_system system, const tribodyn_inits* inits,
                                          double tol, int64_t n_max, tribodyn_convergence* out) {
  return guarded([&] {
    require(inits && out, "null argument");
    const ConvergenceResult r = convergence_test(kind_of(system), inits->value, tol, n_max);
    *out = {r.converged, r.steps, r.final_error};
  });
}

tribodyn_status tribodyn_contraction_rate(tribodyn_system system, const tribodyn_inits* inits,
                                          int64_t from, int64_t to, double* out) {
  return guarded([&] {
    require(inits && out, "null argument");
    require(from >= -1 && to > from, "bad index window");
    const Trajectory t = iterate(kind_of(system), inits->value, to);
    if (t.last_index() < to) {
      throw Error(ErrorCode::ForbiddenEncounter, "trajectory ends before index " + std::to_string(to));
    }
    *out = two_step_contraction_rate(error_profile(t), from, to);
  });
}

}  // extern "C"
