// nlie: command-line front end over the C API.
//
// Exit status: 0 success / predicate true, 1 predicate false, 2 parse or
// usage error, 3 unsupported request, exhausted budget or unknown verdict.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nlie/nlie.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { ok = 0, predicate_false = 1, usage = 2, unsupported = 3 };

// Carries an exit status out of a verb handler.
struct Failure {
  int code;
  std::string message;
};

int exit_for(nlie_status s) {
  switch (s) {
    case NLIE_OK: return ok;
    case NLIE_ERR_FI_VIOLATION: return predicate_false;
    case NLIE_ERR_BUDGET_EXCEEDED:
    case NLIE_ERR_UNSUPPORTED: return unsupported;
    default: return usage;
  }
}

void check(nlie_status s) {
  if (s != NLIE_OK)
    throw Failure{exit_for(s), nlie_last_error()};
}

struct AlgebraDeleter {
  void operator()(nlie_algebra* a) const { nlie_algebra_free(a); }
};
using Algebra = std::unique_ptr<nlie_algebra, AlgebraDeleter>;

struct SubspaceDeleter {
  void operator()(nlie_subspace* s) const { nlie_subspace_free(s); }
};

std::string take(char* s) {
  std::string out(s ? s : "");
  nlie_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{usage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Algebra load(const std::string& path) {
  nlie_algebra* a = nullptr;
  nlie_status s = nlie_algebra_parse(slurp(path).c_str(), &a);
  if (s != NLIE_OK) throw Failure{usage, path + ": " + nlie_last_error()};
  return Algebra(a);
}

std::string serialize(const Algebra& a) {
  char* out = nullptr;
  check(nlie_algebra_serialize(a.get(), &out));
  return take(out);
}

// ---------------------------------------------------------------------------
// Text rendering of nlie-report-v1 documents

std::string scalars(const json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + ")";
}

std::string ints(const json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].get<long long>());
  return s + "]";
}

std::string field_text(const json& f) {
  return f.is_string() ? f.get<std::string>() : "F_" + std::to_string(f["p"].get<int>());
}

std::string algebra_line(const json& a) {
  return std::to_string(a["arity"].get<int>()) + "-Lie algebra of dim " +
         std::to_string(a["dim"].get<int>()) + " over " + field_text(a["field"]);
}

void basis_lines(std::ostream& os, const json& rows, const std::string& indent = "  ") {
  for (const auto& r : rows) os << indent << scalars(r) << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string render(const json& r) {
  std::ostringstream os;
  const std::string verb = r["verb"];
  if (r.contains("algebra")) os << algebra_line(r["algebra"]) << "\n";
  if (verb == "check") {
    if (r["holds"].get<bool>()) {
      os << "fundamental identity: holds (" << r["instances_checked"].get<long long>()
         << " basis instances)\n";
    } else {
      os << "fundamental identity: fails (" << r["violation_count"].get<long long>()
         << " violating basis instances)\n";
      for (const auto& v : r["violations"])
        os << "  x=" << ints(v["x"]) << " y=" << ints(v["y"]) << " lhs-rhs=" << scalars(v["residual"])
           << "\n";
    }
  } else if (verb == "report") {
    os << "dim L^1: " << r["dim_derived"] << "\n";
    os << "dim Z(L): " << r["dim_center"] << "\n";
    for (const auto& [s, dims] : r["derived_series"].items())
      os << s << "-derived series dims: " << ints(dims) << "\n";
    os << "lower central series dims: " << ints(r["lower_central_series"]) << "\n";
    os << "nilpotent: " << yes_no(r["nilpotent"]) << "\n";
    for (const auto& [s, v] : r["solvable"].items())
      os << s << "-solvable: " << yes_no(v) << ", 2-step " << s
         << "-solvable: " << yes_no(r["two_step_solvable"][s]) << "\n";
  } else if (verb == "center") {
    os << "center: dim " << r["dim"] << "\n";
    basis_lines(os, r["basis"]);
  } else if (verb == "derived") {
    os << r["s"] << "-derived series dims: " << ints(r["dims"]) << "\n";
    if (r["terminated_at_zero"].get<bool>()) os << "reaches zero: " << r["s"] << "-solvable\n";
    else if (r["stabilized"].get<bool>()) os << "stabilizes above zero: not " << r["s"] << "-solvable\n";
    else os << "stopped after the requested steps\n";
  } else if (verb == "classify") {
    os << "subspace of dim " << r["dim"] << "\n";
    for (const char* k : {"subalgebra", "ideal", "abelian_subalgebra", "abelian_ideal",
                          "hypo_abelian_ideal"})
      os << "  " << k << ": " << yes_no(r[k]) << "\n";
  } else if (verb == "alphabeta") {
    for (const auto& x : r["results"]) {
      if (x["mode"] == "exact") {
        os << "mod " << x["p"] << ": ";
        if (x["complete"].get<bool>())
          os << "alpha=" << x["alpha"] << " beta=" << x["beta"];
        else
          os << "budget exhausted, alpha>=" << x["alpha"] << " beta>=" << x["beta"];
        os << " (" << x["subspaces_scanned"] << " subspaces)\n";
      } else {
        os << "over Q: " << x["alpha"] << " <= alpha <= " << x["alpha_upper"] << ", " << x["beta"]
           << " <= beta <= " << x["beta_upper"] << "\n";
      }
      if (!x["alpha_witness"].is_null()) {
        os << "  alpha witness:\n";
        basis_lines(os, x["alpha_witness"], "    ");
      }
      if (!x["beta_witness"].is_null()) {
        os << "  beta witness:\n";
        basis_lines(os, x["beta_witness"], "    ");
      }
    }
    if (!r["primes_agree"].get<bool>()) os << "values differ between primes\n";
  } else if (verb == "fingerprint") {
    for (const auto& [k, v] : r["fingerprint"].items())
      os << k << ": " << (v.is_array() ? ints(v) : v.dump()) << "\n";
  } else if (verb == "iso") {
    os << "isomorphic: " << r["verdict"].get<std::string>() << " (" << r["reason"].get<std::string>()
       << ")\n";
    os << "searched over " << field_text(r["field"]) << ", " << r["nodes"] << " nodes\n";
    if (!r["witness_columns"].is_null()) {
      os << "images of the second basis in the first:\n";
      basis_lines(os, r["witness_columns"]);
    }
  } else if (verb == "classify44") {
    os << "verdict: " << r["verdict"].get<std::string>() << "\n";
    os << "3-derived series dims: " << ints(r["series_dims"]) << "\n";
    if (!r["tau"].is_null()) {
      os << "tau:\n";
      basis_lines(os, r["tau"]);
    }
    if (!r["s"].is_null()) {
      os << "S:\n";
      basis_lines(os, r["s"]);
    }
    if (!r["evidence"].get<std::string>().empty()) os << r["evidence"].get<std::string>() << "\n";
  } else if (verb == "catalog-list") {
    for (const auto& f : r["families"]) {
      std::string dim = f["free_dim"].get<bool>() ? "m>=" + std::to_string(f["min_dim"].get<int>())
                                                  : "m=" + std::to_string(f["dim"].get<int>());
      os << f["id"].get<std::string>() << "  [" << dim << "]  " << f["summary"].get<std::string>()
         << "\n";
    }
    os << "Lie algebras:";
    for (const auto& id : r["lie_families"]) os << " " << id.get<std::string>();
    os << "\n";
  } else if (verb == "verify-paper") {
    for (const auto& c : r["criteria"]) {
      os << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " " << c["id"] << " "
         << c["title"].get<std::string>() << "\n";
      for (const auto& d : c["details"]) os << "     " << d.get<std::string>() << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

struct Globals {
  bool json = false;
  std::string output;
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
};

void write_out(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw Failure{usage, "cannot write " + g.output};
  out << text;
}

// Prints a report (JSON or text) and returns the parsed document.
json publish(const Globals& g, char* raw) {
  std::string text = take(raw);
  json r = json::parse(text);
  write_out(g, g.json ? text : render(r));
  return r;
}

std::string action_json(const std::vector<std::string>& specs) {
  // "i,j,k:v1,...,vd"
  json arr = json::array();
  for (const auto& s : specs) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Failure{usage, "action '" + s + "' must look like i,j,k:v1,..."};
    std::vector<int> idx;
    std::stringstream head(s.substr(0, colon));
    std::string tok;
    try {
      while (std::getline(head, tok, ',')) idx.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Failure{usage, "action '" + s + "' has a non-integer index"};
    }
    if (idx.size() != 3) throw Failure{usage, "action '" + s + "' needs three indices"};
    json value = json::array();
    std::stringstream tail(s.substr(colon + 1));
    while (std::getline(tail, tok, ',')) value.push_back(tok);
    arr.push_back(json{{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"value", value}});
  }
  return arr.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with n-Lie algebras given by structure constants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit the nlie-report-v1 JSON document");
  app.add_option("-o,--output", g.output, "Write to this file instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--threads", g.threads, "Worker threads for searches")->check(CLI::Range(1u, 256u));

  std::string file, file2, subfile, w, id;
  int s = 2, steps = -1;
  std::vector<std::uint32_t> primes;
  bool q_bounds = false, unchecked = false;
  std::uint64_t budget = 0;
  std::uint32_t p = 0;
  std::optional<int> dim, n, r, t, size;
  std::optional<std::string> alpha;
  std::vector<std::string> actions;
  std::vector<int> criteria;

  auto in1 = [&](CLI::App* c) { c->add_option("algebra", file, "nlie-v1 file, - for stdin")->required(); };
  auto* c_check = app.add_subcommand("check", "Check the fundamental identity");
  in1(c_check);
  auto* c_report = app.add_subcommand("report", "Invariant summary");
  in1(c_report);
  auto* c_center = app.add_subcommand("center", "Center Z(L)");
  in1(c_center);
  auto* c_derived = app.add_subcommand("derived", "s-derived series of L");
  in1(c_derived);
  c_derived->add_option("--s", s, "s in 2..arity")->capture_default_str();
  c_derived->add_option("--steps", steps, "Stop after this many steps");
  auto* c_classify = app.add_subcommand("classify", "Classify a subspace of L");
  in1(c_classify);
  c_classify->add_option("subspace", subfile, "nlie-subspace-v1 file")->required();
  auto* c_ab = app.add_subcommand("alphabeta", "Maximal abelian subalgebra / ideal dimensions");
  in1(c_ab);
  c_ab->add_option("--p", primes, "Exhaustive search mod P (repeatable)");
  c_ab->add_flag("--q-bounds", q_bounds, "Certified bounds over Q");
  c_ab->add_option("--budget", budget, "Subspaces tested per prime");
  auto* c_assoc = app.add_subcommand("assoc-lie", "Lie algebra [x,y]_0 = [x,y,w] of a 3-Lie algebra");
  in1(c_assoc);
  c_assoc->add_option("--w", w, "Coordinates of w, e.g. 0,0,0,1")->required();
  auto* c_extend = app.add_subcommand("extend", "3-Lie trivial extension of a Lie algebra");
  in1(c_extend);
  auto* c_sum = app.add_subcommand("sum", "Direct sum of two algebras");
  in1(c_sum);
  c_sum->add_option("second", file2, "nlie-v1 file")->required();

  auto* c_cat = app.add_subcommand("catalog", "Built-in algebras");
  c_cat->require_subcommand(1);
  c_cat->fallthrough();
  auto* c_list = c_cat->add_subcommand("list", "List catalog families");
  auto* c_build = c_cat->add_subcommand("build", "Emit an nlie-v1 document");
  c_build->add_option("id", id, "Catalog id")->required();
  c_build->add_option("--dim", dim, "Dimension m");
  c_build->add_option("--n", n, "Arity for the (n+1)-dim families");
  c_build->add_option("--r", r, "r for L21-d");
  c_build->add_option("--t", t, "Pair count for T43-c1 / T43-c3");
  c_build->add_option("--alpha", alpha, "Family parameter");
  c_build->add_option("--p", p, "Build over F_p");
  c_build->add_option("--size", size, "Size parameter of the Lie families");
  c_build->add_option("--action", actions, "T44-3 mixed bracket i,j,k:v1,...,v(m-4) (repeatable)");
  c_build->add_flag("--unchecked", unchecked, "Skip the identity check");

  auto* c_fp = app.add_subcommand("fingerprint", "Basis-invariant summary");
  in1(c_fp);
  auto* c_iso = app.add_subcommand("iso", "Isomorphism semidecision");
  in1(c_iso);
  c_iso->add_option("second", file2, "nlie-v1 file")->required();
  c_iso->add_option("--p", p, "Search mod P");
  c_iso->add_option("--budget", budget, "Candidate images to test");
  auto* c_44 = app.add_subcommand("classify44", "3-solvable / simple A_4 / A_4 semidirect trichotomy");
  in1(c_44);
  c_44->add_option("--p", p, "Prime for subspace searches over Q");
  c_44->add_option("--budget", budget, "Subspaces tested");
  auto* c_verify = app.add_subcommand("verify-paper", "Run the regression suite");
  c_verify->add_option("--criterion", criteria, "Run only these criteria (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    char* raw = nullptr;
    if (c_check->parsed()) {
      Algebra a = load(file);
      check(nlie_check(a.get(), g.threads, &raw));
      return publish(g, raw)["holds"].get<bool>() ? ok : predicate_false;
    }
    if (c_report->parsed()) {
      Algebra a = load(file);
      check(nlie_report(a.get(), &raw));
      publish(g, raw);
      return ok;
    }
    if (c_center->parsed()) {
      Algebra a = load(file);
      check(nlie_center(a.get(), &raw));
      publish(g, raw);
      return ok;
    }
    if (c_derived->parsed()) {
      Algebra a = load(file);
      check(nlie_derived(a.get(), s, steps, &raw));
      publish(g, raw);
      return ok;
    }
    if (c_classify->parsed()) {
      Algebra a = load(file);
      nlie_subspace* sub = nullptr;
      nlie_status st = nlie_subspace_parse(a.get(), slurp(subfile).c_str(), &sub);
      if (st != NLIE_OK) throw Failure{exit_for(st), subfile + ": " + nlie_last_error()};
      std::unique_ptr<nlie_subspace, SubspaceDeleter> hold(sub);
      check(nlie_classify(a.get(), sub, &raw));
      publish(g, raw);
      return ok;
    }
    if (c_ab->parsed()) {
      Algebra a = load(file);
      nlie_alphabeta_options o{primes.data(), primes.size(), q_bounds ? 1 : 0, budget, g.threads};
      check(nlie_alphabeta(a.get(), &o, &raw));
      json rep = publish(g, raw);
      return rep["complete"].get<bool>() ? ok : unsupported;
    }
    if (c_assoc->parsed() || c_extend->parsed() || c_sum->parsed()) {
      Algebra a = load(file);
      nlie_algebra* out = nullptr;
      if (c_assoc->parsed()) {
        check(nlie_assoc_lie(a.get(), w.c_str(), &out));
      } else if (c_extend->parsed()) {
        check(nlie_extend(a.get(), &out));
      } else {
        Algebra b = load(file2);
        check(nlie_direct_sum(a.get(), b.get(), &out));
      }
      write_out(g, serialize(Algebra(out)));
      return ok;
    }
    if (c_list->parsed()) {
      check(nlie_catalog_list(&raw));
      publish(g, raw);
      return ok;
    }
    if (c_build->parsed()) {
      json params = json::object();
      if (dim) params["dim"] = *dim;
      if (n) params["n"] = *n;
      if (r) params["r"] = *r;
      if (t) params["t"] = *t;
      if (size) params["size"] = *size;
      if (alpha) params["alpha"] = *alpha;
      if (p) params["field"] = json{{"p", p}};
      if (!actions.empty()) params["action"] = json::parse(action_json(actions));
      nlie_algebra* out = nullptr;
      check(nlie_catalog_build(id.c_str(), params.dump().c_str(), unchecked ? 1 : 0, &out));
      write_out(g, serialize(Algebra(out)));
      return ok;
    }
    if (c_fp->parsed()) {
      Algebra a = load(file);
      check(nlie_fingerprint(a.get(), &raw));
      publish(g, raw);
      return ok;
    }
    if (c_iso->parsed()) {
      Algebra a = load(file), b = load(file2);
      check(nlie_iso(a.get(), b.get(), budget, p, &raw));
      std::string v = publish(g, raw)["verdict"];
      return v == "yes" ? ok : v == "no" ? predicate_false : unsupported;
    }
    if (c_44->parsed()) {
      Algebra a = load(file);
      check(nlie_classify44(a.get(), p, budget, g.threads, &raw));
      return publish(g, raw)["verdict"] == "unknown" ? unsupported : ok;
    }
    if (c_verify->parsed()) {
      check(nlie_verify_suite(criteria.empty() ? nullptr : criteria.data(), criteria.size(),
                              g.threads, g.seed, &raw));
      return publish(g, raw)["all_passed"].get<bool>() ? ok : predicate_false;
    }
  } catch (const Failure& f) {
    std::cerr << "nlie: " << f.message << "\n";
    return f.code;
  }
  return usage;
}
