#include "jacring/driver.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacring/charvar.hpp"
#include "jacring/params_io.hpp"
#include "jacring/sampling.hpp"
#include "jacring/weights.hpp"

namespace jacring {
namespace {

struct Shape {
  int n = 0, k = 0, r = 2;
};

Shape resolve_shape(const RunConfig& cfg) {
  Shape s;
  s.r = cfg.r;
  if (s.r < 2) throw PreconditionError("r must be at least 2");
  s.n = cfg.n;
  s.k = cfg.k;
  if (s.n < 0 && s.k >= 2) s.n = s.k * (s.r - 1) - 1;
  if (s.k < 0 && s.n >= 1) {
    if ((s.n + 1) % (s.r - 1) != 0)
      throw PreconditionError("no integer k satisfies n = k(r-1) - 1 for n=" +
                              std::to_string(s.n) + ", r=" + std::to_string(s.r));
    s.k = (s.n + 1) / (s.r - 1);
  }
  if (s.n < 1 || s.k < 2)
    throw PreconditionError("shape underdetermined: pass --n (and --r), or --k and --r");
  if (s.n != s.k * (s.r - 1) - 1)
    throw PreconditionError("inconsistent shape: n = k(r-1) - 1 fails for the given n, k, r");
  return s;
}

std::string trial_prefix(int trials, int t) {
  return trials > 1 ? ("trial " + std::to_string(t) + ": ") : std::string();
}

template <class K>
Json coeff_json(const std::array<K, 10>& c) {
  Json obj = Json::object();
  for (int s = 0; s < 10; ++s) obj[coeff_slot_names()[s]] = to_string(c[s]);
  return obj;
}

template <class K>
std::string resultant_name(const ResultantValue<K>& rv) {
  return std::string(1, rv.family) + "(" + std::to_string(rv.first) + "," +
         std::to_string(rv.second) + ")";
}

ConeBackend parse_backend(const std::string& b) {
  if (b == "groebner") return ConeBackend::kGroebner;
  if (b == "certificate") return ConeBackend::kCertificate;
  if (b == "both") return ConeBackend::kBoth;
  throw PreconditionError("backend must be groebner, certificate, or both");
}

// ---------------------------------------------------------------------------
// Command bodies over a fixed parameter block.
// ---------------------------------------------------------------------------

template <class K>
void hodge_body(const ParamMatrix<K>& P, const RunConfig& cfg, const std::string& prefix,
                ReportBuilder& rb) {
  auto pres = build_presentation(P);
  for (const auto& row : hodge_numbers(pres, cfg.q_max)) {
    Json d;
    d["computed"] = row.dim;
    d["closed_form"] = row.closed;
    rb.add_check(prefix + "dimension at q=" + std::to_string(row.q), row.agree, std::move(d));
  }
}

template <class K>
void relations_body(const ParamMatrix<K>& P, const std::string& prefix, ReportBuilder& rb) {
  auto pres = build_presentation(P);
  for (const auto& c : verify_basic_relations(pres).checks)
    rb.add_check(prefix + "basic " + c.name, c.ok);
  if (P.r == 2)
    for (const auto& c : verify_derived_relations(pres).checks)
      rb.add_check(prefix + "derived " + c.name, c.ok);
}

template <class K>
void coefficients_body(const ParamMatrix<K>& P, const std::string& prefix, ReportBuilder& rb) {
  if (P.k < 3 || P.n < 2)
    throw PreconditionError("no quadric coefficient tuples for this shape (need k >= 3, n >= 2)");
  auto pres = build_presentation(P);
  auto sys = build_quadric_system(pres);
  for (const auto& cmp : compare_displayed_coefficients(pres, sys)) {
    const bool ok = cmp.support_ok && cmp.bijective_match;
    Json d;
    d["slotwise"] = cmp.slotwise_match;
    d["support_confined"] = cmp.support_ok;
    if (!ok || !cmp.slotwise_match) {
      d["computed"] = coeff_json(cmp.computed);
      d["displayed"] = coeff_json(cmp.displayed);
    }
    rb.add_check(prefix + "quadric (i=" + std::to_string(cmp.i) + ",j=" + std::to_string(cmp.j) +
                     ",p=" + std::to_string(cmp.p) + ",q=" + std::to_string(cmp.q) +
                     ") coefficients",
                 ok, std::move(d));
  }
}

template <class K>
void charvar_body(const ParamMatrix<K>& P, const RunConfig& cfg, ReportBuilder& rb) {
  auto pres = build_presentation(P);
  CharVarResult res = first_characteristic_dimension(pres, parse_backend(cfg.backend));
  if (res.certificate) {
    for (const auto& st : res.certificate->steps)
      rb.add_check("certificate " + st.kind + " (" + st.label + ")", st.ok());
  }
  Json& s = rb.summary();
  s["nvars"] = res.nvars;
  s["nquadrics"] = res.nquadrics;
  if (res.cone_dim_exact) s["cone_dim_exact"] = *res.cone_dim_exact;
  if (res.cone_dim_bound) s["cone_dim_bound"] = *res.cone_dim_bound;
  if (res.dim_exact) s["dim_exact"] = *res.dim_exact;
  if (res.dim_bound) s["dim_bound"] = *res.dim_bound;
  s["comparison_dim"] = res.comparison;
  s["verdict"] = res.verdict;
}

template <class K>
void certificate_body(const ParamMatrix<K>& P, const std::string& prefix, bool per_step,
                      ReportBuilder& rb) {
  auto pres = build_presentation(P);
  auto sys = build_quadric_system(pres);
  CertificateReport cert = filtration_certificate(sys);
  if (per_step) {
    for (const auto& st : cert.steps)
      rb.add_check(prefix + "certificate " + st.kind + " (" + st.label + ")", st.ok());
  }
  Json d;
  d["steps"] = static_cast<int>(cert.steps.size());
  d["vars"] = cert.vars_total;
  d["polys"] = cert.polys_total;
  if (!cert.all_ok) {
    Json failed = Json::array();
    for (const auto& st : cert.steps)
      if (!st.ok()) failed.push_back(st.label);
    d["failed_steps"] = std::move(failed);
  }
  rb.add_check(prefix + "certificate validates (projective dimension <= 2)", cert.all_ok,
               std::move(d));
}

// ---------------------------------------------------------------------------
// Field-generic dispatch with sampling and trial loops.
// ---------------------------------------------------------------------------

template <class K, class Sampler>
void resultants_command(const RunConfig& cfg, const Shape& s,
                        const std::optional<ParamMatrix<K>>& fixed, const Sampler& draw,
                        ReportBuilder& rb) {
  const int trials = fixed ? 1 : std::max(1, cfg.trials);
  struct Agg {
    std::string name;
    int nonzero = 0;
    std::string first_value;
  };
  std::vector<Agg> agg;
  std::map<std::string, std::size_t> pos;
  for (int t = 0; t < trials; ++t) {
    ParamMatrix<K> P;
    if (fixed) {
      if (!entrywise_screen(*fixed))
        throw PreconditionError("parameters hit a closed-form denominator");
      P = *fixed;
    } else {
      P = sample_entrywise_params<K>(s.n, s.k, s.r, draw, cfg.seed + t);
    }
    for (const auto& rv : closed_form_resultants(P)) {
      const std::string nm = resultant_name(rv);
      auto [it, inserted] = pos.emplace(nm, agg.size());
      if (inserted) agg.push_back({nm, 0, ""});
      Agg& a = agg[it->second];
      if (!is_zero(rv.value)) ++a.nonzero;
      if (t == 0) a.first_value = to_string(rv.value);
    }
  }
  for (const auto& a : agg) {
    Json d;
    d["nonzero_evaluations"] = a.nonzero;
    d["evaluations"] = trials;
    d["first_value"] = a.first_value;
    rb.add_check(a.name + " nonzero in some evaluation", a.nonzero > 0, std::move(d));
  }
  rb.summary()["families"] = static_cast<int>(agg.size());
  rb.summary()["evaluations"] = trials;
}

template <class K, class Sampler>
void field_dispatch(const RunConfig& cfg, const Shape& s,
                    const std::optional<ParamMatrix<K>>& fixed, const Sampler& draw,
                    ReportBuilder& rb) {
  const int trials = fixed ? 1 : std::max(1, cfg.trials);
  auto generic = [&](std::uint64_t seed) -> ParamMatrix<K> {
    if (fixed) return *fixed;
    return sample_generic_params<K>(s.n, s.k, s.r, draw, seed);
  };

  if (cfg.command == "resultants") {
    resultants_command(cfg, s, fixed, draw, rb);
    return;
  }
  if (cfg.command == "charvar-dim") {
    ParamMatrix<K> P = generic(cfg.seed);
    rb.inputs()["a"] = params_to_json(P);
    charvar_body(P, cfg, rb);
    return;
  }
  if (cfg.command == "certify-generic") {
    for (int t = 0; t < trials; ++t) {
      ParamMatrix<K> P = generic(cfg.seed + t);
      if (trials == 1) rb.inputs()["a"] = params_to_json(P);
      certificate_body(P, trial_prefix(trials, t), trials == 1, rb);
    }
    return;
  }
  if (cfg.command == "hodge-numbers" || cfg.command == "verify-relations" ||
      cfg.command == "verify-coefficients") {
    for (int t = 0; t < trials; ++t) {
      ParamMatrix<K> P = generic(cfg.seed + t);
      if (trials == 1) rb.inputs()["a"] = params_to_json(P);
      const std::string prefix = trial_prefix(trials, t);
      if (cfg.command == "hodge-numbers")
        hodge_body(P, cfg, prefix, rb);
      else if (cfg.command == "verify-relations")
        relations_body(P, prefix, rb);
      else
        coefficients_body(P, prefix, rb);
    }
    if (cfg.command == "hodge-numbers") {
      HodgeClosedForms cf = hodge_closed_forms(s.n, s.k);
      Json closed = Json::array();
      for (const auto& h : cf.h) closed.push_back(h.get_str());
      rb.summary()["closed_forms"] = std::move(closed);
      rb.summary()["signature_even"] = cf.p_sig.get_str();
      rb.summary()["signature_odd"] = cf.q_sig.get_str();
      rb.summary()["palindromic"] = cf.palindromic;
    }
    return;
  }
  throw PreconditionError("unknown command: " + cfg.command);
}

// ---------------------------------------------------------------------------
// Field-independent commands.
// ---------------------------------------------------------------------------

void euler_command(const RunConfig& cfg, ReportBuilder& rb) {
  int n_lo = 1, n_hi = -1;
  if (cfg.n_max >= 1) {
    n_hi = cfg.n_max;
  } else if (cfg.n >= 1) {
    n_lo = n_hi = cfg.n;
  } else {
    throw PreconditionError("euler-identity needs --n or --n-max");
  }
  rb.inputs()["n_min"] = n_lo;
  rb.inputs()["n_max"] = n_hi;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int p = 0; p <= n; ++p) {
      EulerIdentityResult res = euler_characteristic_identity(n, p);
      Json stages = Json::object();
      for (const auto& st : res.stages) stages[st.name] = st.value.get_str();
      Json d;
      d["stages"] = std::move(stages);
      rb.add_check("stages agree at n=" + std::to_string(n) + " p=" + std::to_string(p),
                   res.all_equal, std::move(d));
    }
}

void rep_command(const RunConfig& cfg, ReportBuilder& rb) {
  if (cfg.n >= 1) {
    rb.inputs()["n"] = cfg.n;
    WeightMultiset ws = wedge_weights(cfg.n);
    WeightSymmetryReport rep = weight_symmetry_check(ws);
    Json d;
    d["total"] = ws.total.get_str();
    rb.add_check("weight count equals the central binomial", rep.total_matches_binomial,
                 std::move(d));
    rb.add_check("weight multiset symmetric under negation", rep.symmetric);
    Json dh;
    dh["multiplicity"] = rep.highest_multiplicity;
    rb.add_check("highest weight is the all-ones vector with multiplicity one",
                 rep.highest_is_all_ones, std::move(dh));
    rb.summary()["distinct_weights"] = static_cast<int>(ws.mult.size());
  }
  const int n_hi = cfg.n_max >= 2 ? cfg.n_max : 30;
  rb.inputs()["obstruction_n_max"] = n_hi;
  for (const auto& row : dimension_obstructions(2, n_hi)) {
    Json d;
    d["binomial"] = row.binom.get_str();
    d["even"] = row.even;
    d["power_of_two"] = row.power_of_two;
    rb.add_check("dimension even and not a power of two at n=" + std::to_string(row.n),
                 row.excluded, std::move(d));
  }
}

void dispatch(const RunConfig& cfg, ReportBuilder& rb) {
  if (cfg.command == "euler-identity") {
    euler_command(cfg, rb);
    return;
  }
  if (cfg.command == "rep-check") {
    rep_command(cfg, rb);
    return;
  }

  if (!cfg.params_file.empty()) {
    ParamsFile pf = load_params_file(cfg.params_file);
    Shape s{pf.n, pf.k, pf.r};
    rb.inputs()["params_file"] = cfg.params_file;
    rb.inputs()["n"] = s.n;
    rb.inputs()["k"] = s.k;
    rb.inputs()["r"] = s.r;
    if (pf.rational_field) {
      rb.inputs()["field"] = "Q";
      ParamMatrix<Rat> P = rational_params(pf);
      rb.inputs()["a"] = params_to_json(P);
      field_dispatch<Rat>(cfg, s, std::optional<ParamMatrix<Rat>>(std::move(P)), RatSampler{},
                          rb);
    } else {
      FpContext ctx(pf.prime);  // validates the modulus
      rb.inputs()["field"] = "Fp";
      rb.inputs()["prime"] = pf.prime;
      ParamMatrix<Fp> P = prime_field_params(pf);
      rb.inputs()["a"] = params_to_json(P);
      field_dispatch<Fp>(cfg, s, std::optional<ParamMatrix<Fp>>(std::move(P)),
                         FpSampler{ctx.p}, rb);
    }
    return;
  }

  Shape s = resolve_shape(cfg);
  rb.inputs()["n"] = s.n;
  rb.inputs()["k"] = s.k;
  rb.inputs()["r"] = s.r;
  rb.inputs()["field"] = cfg.field;
  if (cfg.field == "Fp") rb.inputs()["prime"] = cfg.prime;
  rb.inputs()["seed"] = cfg.seed;
  if (cfg.trials > 1) rb.inputs()["trials"] = cfg.trials;
  if (cfg.command == "charvar-dim") rb.inputs()["backend"] = cfg.backend;
  if (cfg.command == "hodge-numbers" && cfg.q_max >= 0) rb.inputs()["q_max"] = cfg.q_max;

  if (cfg.field == "Q") {
    field_dispatch<Rat>(cfg, s, std::nullopt, RatSampler{}, rb);
  } else if (cfg.field == "Fp") {
    FpContext ctx(cfg.prime);
    field_dispatch<Fp>(cfg, s, std::nullopt, FpSampler{ctx.p}, rb);
  } else {
    throw PreconditionError("field must be Q or Fp");
  }
}

}  // namespace

Json run_to_json(const RunConfig& cfg, int* exit_code) {
  ReportBuilder rb(cfg.command);
  int code = 0;
  try {
    dispatch(cfg, rb);
    code = rb.failed() == 0 ? 0 : 1;
  } catch (const Error& e) {
    rb.add_error(e.what());
    code = 2;
  } catch (const std::exception& e) {
    rb.add_error(std::string("unexpected error: ") + e.what());
    code = 2;
  }
  Json doc = rb.finish();
  if (exit_code) *exit_code = code;
  return doc;
}

int run(const RunConfig& cfg) {
  int code = 0;
  Json doc = run_to_json(cfg, &code);
  write_report(doc, cfg.out);
  return code;
}

}  // namespace jacring
