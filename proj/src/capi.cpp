#include "nlie/nlie.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <set>

#include "json_io.hpp"
#include "nlie/abelian_search.hpp"
#include "nlie/catalog.hpp"
#include "nlie/format.hpp"
#include "nlie/invariants.hpp"
#include "nlie/isomorphism.hpp"
#include "nlie/suite.hpp"

struct nlie_algebra {
  nlie::NLieAlgebra value;
};

struct nlie_subspace {
  nlie::Subspace value;
};

namespace {

using nlie::detail::json;
using namespace nlie;

thread_local std::string last_error;

nlie_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse: return NLIE_ERR_PARSE;
    case ErrorCode::invalid_argument: return NLIE_ERR_INVALID_ARGUMENT;
    case ErrorCode::field_mismatch: return NLIE_ERR_FIELD_MISMATCH;
    case ErrorCode::dimension_mismatch: return NLIE_ERR_DIMENSION_MISMATCH;
    case ErrorCode::not_an_ideal: return NLIE_ERR_NOT_AN_IDEAL;
    case ErrorCode::fi_violation: return NLIE_ERR_FI_VIOLATION;
    case ErrorCode::budget_exceeded: return NLIE_ERR_BUDGET_EXCEEDED;
    case ErrorCode::unsupported: return NLIE_ERR_UNSUPPORTED;
  }
  return NLIE_ERR_INTERNAL;
}

template <class F>
nlie_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return NLIE_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return NLIE_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NLIE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return NLIE_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  require(p != nullptr, ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json header(const char* verb) {
  json j;
  j["schema"] = "nlie-report-v1";
  j["verb"] = verb;
  return j;
}

json describe(const NLieAlgebra& l) {
  return json{{"arity", l.arity()}, {"dim", l.dim()}, {"field", detail::field_json(l.field())}};
}

json rows(const Subspace& s) {
  json out = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(detail::vector_json(s.basis().row(r)));
  return out;
}

json maybe_rows(const std::optional<Subspace>& s) { return s ? rows(*s) : json(nullptr); }

void emit(const json& j, char** report) { *report = dup(j.dump(2) + "\n"); }

nlie_algebra* wrap(NLieAlgebra l) { return new nlie_algebra{std::move(l)}; }

json fingerprint_json(const Fingerprint& f) {
  json j;
  j["arity"] = f.arity;
  j["dim"] = f.dim;
  j["field"] = f.field;
  j["dim_derived"] = f.dim_derived;
  j["dim_center"] = f.dim_center;
  j["dim_derived_center"] = f.dim_derived_center;
  j["dim_center2"] = f.dim_center2;
  j["derived2"] = f.derived2;
  j["derived3"] = f.derived3;
  j["lower_central"] = f.lower_central;
  j["nilpotent"] = f.nilpotent;
  j["solvable2"] = f.solvable2;
  j["solvable3"] = f.solvable3;
  j["alpha"] = f.alpha ? json(*f.alpha) : json(nullptr);
  j["beta"] = f.beta ? json(*f.beta) : json(nullptr);
  return j;
}

json alphabeta_json(const AlphaBetaResult& r) {
  json j;
  j["mode"] = r.mode == SearchMode::exact_fp ? "exact" : "q-bounds";
  if (r.mode == SearchMode::exact_fp) j["p"] = r.p;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["alpha_upper"] = r.alpha_upper;
  j["beta_upper"] = r.beta_upper;
  j["complete"] = r.complete;
  j["tight"] = r.tight();
  j["subspaces_scanned"] = r.subspaces_scanned;
  j["alpha_witness"] = maybe_rows(r.alpha_witness);
  j["beta_witness"] = maybe_rows(r.beta_witness);
  return j;
}

int int_param(const json& p, const char* key, int lo, int hi) {
  require(p[key].is_number_integer(), ErrorCode::parse, std::string(key) + " must be an integer");
  long long v = p[key].get<long long>();
  require(v >= lo && v <= hi, ErrorCode::invalid_argument,
          std::string(key) + "=" + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
              std::to_string(hi));
  return static_cast<int>(v);
}

}  // namespace

extern "C" {

const char* nlie_version(void) { return "1.0.0"; }

const char* nlie_last_error(void) { return last_error.c_str(); }

const char* nlie_status_name(nlie_status status) {
  switch (status) {
    case NLIE_OK: return "ok";
    case NLIE_ERR_PARSE: return "parse error";
    case NLIE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NLIE_ERR_FIELD_MISMATCH: return "field mismatch";
    case NLIE_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case NLIE_ERR_NOT_AN_IDEAL: return "not an ideal";
    case NLIE_ERR_FI_VIOLATION: return "fundamental identity violated";
    case NLIE_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case NLIE_ERR_UNSUPPORTED: return "unsupported";
    case NLIE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nlie_string_free(char* s) { std::free(s); }

nlie_status nlie_algebra_parse(const char* text, nlie_algebra** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(parse_algebra(text));
  });
}

nlie_status nlie_algebra_serialize(const nlie_algebra* l, char** out) {
  return guarded([&] {
    need(l, "algebra");
    need(out, "out");
    *out = dup(serialize_algebra(l->value));
  });
}

void nlie_algebra_free(nlie_algebra* l) { delete l; }

int nlie_algebra_arity(const nlie_algebra* l) { return l ? l->value.arity() : 0; }
int nlie_algebra_dim(const nlie_algebra* l) { return l ? l->value.dim() : 0; }
uint32_t nlie_algebra_characteristic(const nlie_algebra* l) {
  return l ? l->value.field().modulus() : 0;
}

nlie_status nlie_subspace_parse(const nlie_algebra* l, const char* text, nlie_subspace** out) {
  return guarded([&] {
    need(l, "algebra");
    need(text, "text");
    need(out, "out");
    Subspace s = parse_subspace(text, l->value.field());
    require(s.ambient_dim() == static_cast<std::size_t>(l->value.dim()),
            ErrorCode::dimension_mismatch,
            "subspace of F^" + std::to_string(s.ambient_dim()) + " in an algebra of dim " +
                std::to_string(l->value.dim()));
    *out = new nlie_subspace{std::move(s)};
  });
}

void nlie_subspace_free(nlie_subspace* s) { delete s; }

nlie_status nlie_check(const nlie_algebra* l, unsigned threads, char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(report, "report");
    FiReport r = check_fundamental_identity(l->value, threads ? threads : 1);
    json j = header("check");
    j["algebra"] = describe(l->value);
    j["holds"] = r.holds;
    j["instances_checked"] = r.instances_checked;
    j["violation_count"] = r.violations.size();
    json vs = json::array();
    for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i) {
      const auto& v = r.violations[i];
      vs.push_back(json{{"x", detail::tuple_json(v.x)},
                        {"y", detail::tuple_json(v.y)},
                        {"residual", detail::vector_json(v.residual)}});
    }
    j["violations"] = vs;
    emit(j, report);
  });
}

nlie_status nlie_report(const nlie_algebra* l, char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(report, "report");
    InvariantReport r = invariant_report(l->value);
    json j = header("report");
    j["algebra"] = describe(l->value);
    j["dim_derived"] = r.dim_derived;
    j["dim_center"] = r.dim_center;
    json derived = json::object(), solvable = json::object(), two_step = json::object();
    for (const auto& [s, dims] : r.derived_dims) derived[std::to_string(s)] = dims;
    for (const auto& [s, v] : r.solvable) solvable[std::to_string(s)] = v;
    for (const auto& [s, v] : r.two_step) two_step[std::to_string(s)] = v;
    j["derived_series"] = derived;
    j["lower_central_series"] = r.lower_central_dims;
    j["nilpotent"] = r.nilpotent;
    j["solvable"] = solvable;
    j["two_step_solvable"] = two_step;
    emit(j, report);
  });
}

nlie_status nlie_center(const nlie_algebra* l, char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(report, "report");
    Subspace z = center(l->value);
    json j = header("center");
    j["algebra"] = describe(l->value);
    j["dim"] = z.dim();
    j["basis"] = rows(z);
    emit(j, report);
  });
}

nlie_status nlie_derived(const nlie_algebra* l, int s, int steps, char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(report, "report");
    const NLieAlgebra& a = l->value;
    require(s >= 2 && s <= a.arity(), ErrorCode::invalid_argument,
            "s must lie in 2.." + std::to_string(a.arity()) + ", got " + std::to_string(s));
    SeriesReport r = s_derived_series(a, Subspace::full(a.field(), a.dim()), s, steps);
    json j = header("derived");
    j["algebra"] = describe(a);
    j["s"] = s;
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(json{{"dim", t.dim()}, {"basis", rows(t)}});
    j["dims"] = r.dims();
    j["terms"] = terms;
    j["stabilized"] = r.stabilized;
    j["terminated_at_zero"] = r.terminated_at_zero;
    j["truncated"] = r.truncated;
    emit(j, report);
  });
}

nlie_status nlie_classify(const nlie_algebra* l, const nlie_subspace* s, char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(s, "subspace");
    need(report, "report");
    SubspaceClass c = classify_subspace(l->value, s->value);
    json j = header("classify");
    j["algebra"] = describe(l->value);
    j["dim"] = s->value.dim();
    j["subalgebra"] = c.is_subalgebra;
    j["ideal"] = c.is_ideal;
    j["abelian_subalgebra"] = c.is_abelian_subalgebra;
    j["abelian_ideal"] = c.is_abelian_ideal;
    j["hypo_abelian_ideal"] = c.is_hypo_abelian_ideal;
    emit(j, report);
  });
}

nlie_status nlie_alphabeta(const nlie_algebra* l, const nlie_alphabeta_options* options,
                           char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(report, "report");
    nlie_alphabeta_options o{};
    if (options) o = *options;
    const NLieAlgebra& a = l->value;
    require(o.prime_count == 0 || o.primes != nullptr, ErrorCode::invalid_argument,
            "prime list is NULL");
    std::vector<std::uint32_t> primes(o.primes, o.primes + o.prime_count);
    if (primes.empty() && !o.q_bounds) {
      require(!a.field().is_rational(), ErrorCode::unsupported,
              "exact alpha/beta over Q is not computable; pass primes for an exhaustive "
              "search mod p or ask for Q bounds");
      primes.push_back(a.field().modulus());
    }
    SearchOptions so;
    if (o.budget) so.budget = o.budget;
    so.threads = o.threads ? o.threads : 1;

    json j = header("alphabeta");
    j["algebra"] = describe(a);
    json results = json::array();
    std::set<std::pair<std::size_t, std::size_t>> exact_values;
    bool complete = true;
    for (std::uint32_t p : primes) {
      NLieAlgebra target = a;
      if (a.field().is_rational()) {
        Field::prime(p);  // validates p
        require(reducible_mod_p(a, p), ErrorCode::unsupported,
                "structure constants have denominators divisible by " + std::to_string(p));
        target = reduce_mod_p(a, p);
      } else {
        require(p == a.field().modulus(), ErrorCode::unsupported,
                "algebra is over " + a.field().to_string() + ", cannot search mod " +
                    std::to_string(p));
      }
      AlphaBetaResult r = alpha_beta_exact_fp(target, so);
      complete = complete && r.complete;
      if (r.complete) exact_values.insert({r.alpha, r.beta});
      results.push_back(alphabeta_json(r));
    }
    if (o.q_bounds) results.push_back(alphabeta_json(abelian_bounds_q(a)));
    j["results"] = results;
    j["complete"] = complete;
    j["primes_agree"] = exact_values.size() <= 1;
    emit(j, report);
  });
}

nlie_status nlie_fingerprint(const nlie_algebra* l, char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(report, "report");
    json j = header("fingerprint");
    j["fingerprint"] = fingerprint_json(fingerprint(l->value));
    emit(j, report);
  });
}

nlie_status nlie_iso(const nlie_algebra* a, const nlie_algebra* b, uint64_t budget, uint32_t p,
                     char** report) {
  return guarded([&] {
    need(a, "first algebra");
    need(b, "second algebra");
    need(report, "report");
    IsoOptions o;
    if (budget) o.budget = budget;
    if (p) o.p = p;
    IsoResult r = are_isomorphic(a->value, b->value, o);
    json j = header("iso");
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    j["field"] = detail::field_json(r.field);
    j["nodes"] = r.nodes;
    j["exhaustive"] = r.exhaustive;
    if (r.witness) {
      json cols = json::array();
      for (std::size_t c = 0; c < r.witness->cols(); ++c)
        cols.push_back(detail::vector_json(r.witness->column(c)));
      j["witness_columns"] = cols;
    } else {
      j["witness_columns"] = nullptr;
    }
    emit(j, report);
  });
}

nlie_status nlie_classify44(const nlie_algebra* l, uint32_t p, uint64_t budget, unsigned threads,
                            char** report) {
  return guarded([&] {
    need(l, "algebra");
    need(report, "report");
    TrichotomyOptions o;
    if (p) o.p = p;
    if (budget) o.search.budget = budget;
    o.search.threads = threads ? threads : 1;
    TrichotomyVerdict v = classify_trichotomy(l->value, o);
    json j = header("classify44");
    j["algebra"] = describe(l->value);
    j["verdict"] = to_string(v.verdict);
    j["series_dims"] = v.series_dims;
    j["tau"] = maybe_rows(v.tau);
    j["s"] = maybe_rows(v.s);
    j["p"] = v.p ? json(v.p) : json(nullptr);
    j["evidence"] = v.evidence;
    emit(j, report);
  });
}

nlie_status nlie_assoc_lie(const nlie_algebra* l, const char* w, nlie_algebra** out) {
  return guarded([&] {
    need(l, "algebra");
    need(w, "w");
    need(out, "out");
    Vector v = parse_vector(w, l->value.field(), l->value.dim());
    *out = wrap(associated_lie(l->value, v).algebra());
  });
}

nlie_status nlie_extend(const nlie_algebra* lie, nlie_algebra** out) {
  return guarded([&] {
    need(lie, "algebra");
    need(out, "out");
    *out = wrap(trivial_extension(validated_lie(lie->value)));
  });
}

nlie_status nlie_direct_sum(const nlie_algebra* a, const nlie_algebra* b, nlie_algebra** out) {
  return guarded([&] {
    need(a, "first algebra");
    need(b, "second algebra");
    need(out, "out");
    *out = wrap(direct_sum(a->value, b->value));
  });
}

nlie_status nlie_catalog_list(char** report) {
  return guarded([&] {
    need(report, "report");
    json j = header("catalog-list");
    json fams = json::array();
    for (const auto& f : catalog_families())
      fams.push_back(json{{"id", f.id},
                          {"summary", f.summary},
                          {f.free_dim ? "min_dim" : "dim", f.min_dim},
                          {"free_dim", f.free_dim},
                          {"takes_alpha", f.takes_alpha},
                          {"takes_t", f.takes_t}});
    j["families"] = fams;
    j["lie_families"] = lie_catalog_ids();
    emit(j, report);
  });
}

nlie_status nlie_catalog_build(const char* id, const char* params_json, int unchecked,
                               nlie_algebra** out) {
  return guarded([&] {
    need(id, "id");
    need(out, "out");
    json p = params_json && *params_json ? json::parse(params_json) : json::object();
    require(p.is_object(), ErrorCode::parse, "catalog parameters must be a JSON object");
    static const std::set<std::string> known{"dim", "n", "r", "t", "size", "alpha", "field", "action"};
    for (const auto& [key, value] : p.items())
      require(known.count(key) > 0, ErrorCode::invalid_argument, "unknown catalog parameter " + key);
    Field f = p.contains("field") ? detail::field_from_json(p["field"]) : Field::rationals();

    auto lie_ids = lie_catalog_ids();
    if (std::find(lie_ids.begin(), lie_ids.end(), id) != lie_ids.end()) {
      int size = p.contains("size") ? int_param(p, "size", 1, 64)
                 : p.contains("dim") ? int_param(p, "dim", 1, 64)
                                     : 2;
      *out = wrap(lie_catalog_build(id, size, f).algebra());
      return;
    }

    CatalogParams cp;
    cp.field = f;
    if (p.contains("dim")) cp.dim = int_param(p, "dim", 1, 64);
    if (p.contains("n")) cp.n = int_param(p, "n", 2, 12);
    if (p.contains("r")) cp.r = int_param(p, "r", 0, 13);
    if (p.contains("t")) cp.t = int_param(p, "t", 0, 32);
    if (p.contains("alpha")) {
      require(p["alpha"].is_string(), ErrorCode::parse, "alpha must be a scalar text");
      cp.alpha = p["alpha"].get<std::string>();
    }
    if (p.contains("action")) {
      require(p["action"].is_array(), ErrorCode::parse, "action must be an array");
      for (const auto& a : p["action"]) {
        require(a.is_object() && a.contains("i") && a.contains("j") && a.contains("k") &&
                    a.contains("value") && a["value"].is_array(),
                ErrorCode::parse, "action entries need i, j, k and value");
        ActionEntry e;
        e.i = a["i"].get<int>();
        e.j = a["j"].get<int>();
        e.k = a["k"].get<int>();
        for (const auto& x : a["value"]) {
          require(x.is_string(), ErrorCode::parse, "action values are scalar texts");
          e.value.push_back(Scalar::parse(x.get<std::string>(), f));
        }
        cp.action.push_back(std::move(e));
      }
    }
    *out = wrap(unchecked ? catalog_table(id, cp) : catalog_build(id, cp));
  });
}

nlie_status nlie_verify_suite(const int* criteria, size_t count, unsigned threads, uint64_t seed,
                              char** report) {
  return guarded([&] {
    need(report, "report");
    std::vector<int> ids;
    if (criteria) {
      ids.assign(criteria, criteria + count);
    } else {
      for (int i = 1; i <= kCriteriaCount; ++i) ids.push_back(i);
    }
    for (int id : ids)
      require(id >= 1 && id <= kCriteriaCount, ErrorCode::invalid_argument,
              "criterion " + std::to_string(id) + " outside 1.." + std::to_string(kCriteriaCount));
    SuiteOptions o;
    o.threads = threads ? threads : 1;
    o.seed = seed;
    json j = header("verify-paper");
    json results = json::array();
    bool all = true;
    for (int id : ids) {
      CriterionResult r = run_criterion(id, o);
      all = all && r.passed;
      results.push_back(
          json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
    }
    j["criteria"] = results;
    j["all_passed"] = all;
    emit(j, report);
  });
}

}  // extern "C"
