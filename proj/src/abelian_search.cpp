#include "nlie/abelian_search.hpp"

#include <algorithm>
#include <sstream>

#include "fp_kernel.hpp"
#include "nlie/invariants.hpp"

namespace nlie {

using detail::FpAlgebra;
using detail::FpBasis;

mpz_class gaussian_binomial(int m, int k, std::uint32_t p) {
  require(m >= 0, ErrorCode::invalid_argument, "ambient dimension must be non-negative");
  if (k < 0 || k > m) return 0;
  mpz_class num = 1, den = 1, q = p;
  for (int i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), m - i);
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// ---------------------------------------------------------------------------

struct SubspaceEnumerator::State {
  int m = 0;
  std::uint32_t p = 2;
  std::vector<detail::Profile> profiles;
  std::size_t current = 0;
  bool started = false;
  FpBasis basis;
};

SubspaceEnumerator::SubspaceEnumerator(int m, int k, std::uint32_t p)
    : state_(std::make_unique<State>()) {
  require(m >= 0 && k >= 0 && k <= m, ErrorCode::invalid_argument,
          "need 0 <= k <= m, got k=" + std::to_string(k) + ", m=" + std::to_string(m));
  Field::prime(p);  // validates
  state_->m = m;
  state_->p = p;
  state_->profiles = detail::profiles(m, k, p);
}

SubspaceEnumerator::~SubspaceEnumerator() = default;
SubspaceEnumerator::SubspaceEnumerator(SubspaceEnumerator&&) noexcept = default;
SubspaceEnumerator& SubspaceEnumerator::operator=(SubspaceEnumerator&&) noexcept = default;

bool SubspaceEnumerator::next(Subspace& out) {
  State& s = *state_;
  if (s.current >= s.profiles.size()) return false;
  if (!s.started) {
    detail::profile_subspace(s.profiles[0], s.m, s.p, 0, s.basis);
    s.started = true;
  } else if (!detail::profile_next(s.profiles[s.current], s.p, s.basis)) {
    if (++s.current >= s.profiles.size()) return false;
    detail::profile_subspace(s.profiles[s.current], s.m, s.p, 0, s.basis);
  }
  out = detail::from_fp_basis(s.basis, Field::prime(s.p));
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t trivial_alpha(const NLieAlgebra& l) {
  return std::min(l.dim(), l.arity() - 1);
}

}  // namespace

AlphaBetaResult alpha_beta_exact_fp(const NLieAlgebra& l, const SearchOptions& options) {
  FpAlgebra fp(l);
  const int m = l.dim();
  AlphaBetaResult r;
  r.mode = SearchMode::exact_fp;
  r.p = fp.p();
  r.complete = true;
  std::uint64_t remaining = options.budget;

  // alpha: downward from m
  r.alpha_upper = m;
  r.alpha = trivial_alpha(l);
  bool alpha_exact = false;
  for (int k = m; k >= 0; --k) {
    auto out = detail::scan_level(m, k, fp.p(), remaining, options.threads,
                                  [&](const FpBasis& b) { return fp.abelian_subalgebra(b); });
    r.subspaces_scanned += out.scanned;
    remaining -= std::min(remaining, out.scanned);
    if (out.found) {
      r.alpha = r.alpha_upper = k;
      if (k > 0) r.alpha_witness = detail::from_fp_basis(out.witness, l.field());
      alpha_exact = true;
      break;
    }
    if (!out.complete) {
      r.complete = false;
      break;
    }
    r.alpha_upper = k - 1;
  }

  // beta <= alpha; scan downward from the best known upper bound.
  r.beta_upper = r.alpha_upper;
  r.beta = 0;
  if (r.complete) {
    for (int k = static_cast<int>(r.beta_upper); k >= 0; --k) {
      auto out = detail::scan_level(m, k, fp.p(), remaining, options.threads,
                                    [&](const FpBasis& b) { return fp.abelian_ideal(b); });
      r.subspaces_scanned += out.scanned;
      remaining -= std::min(remaining, out.scanned);
      if (out.found) {
        r.beta = r.beta_upper = k;
        if (k > 0) r.beta_witness = detail::from_fp_basis(out.witness, l.field());
        break;
      }
      if (!out.complete) {
        r.complete = false;
        break;
      }
      r.beta_upper = k - 1;
    }
  }
  if (!r.complete) {
    // Whatever is certified so far: the center is an abelian ideal.
    r.beta = std::max(r.beta, center(l).dim());
  }
  (void)alpha_exact;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// {v : [v, s_J] = 0 for all increasing (n-1)-tuples J of basis vectors of S}
Subspace abelian_extension_space(const NLieAlgebra& l, const Subspace& s) {
  const int n = l.arity();
  auto basis = s.basis_vectors();
  auto tuples = increasing_tuples(static_cast<int>(basis.size()), n - 1);
  if (tuples.empty()) return Subspace::full(l.field(), l.dim());
  Matrix m(l.field(), tuples.size() * l.dim(), l.dim());
  std::vector<Vector> args(n);
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (int q = 0; q < n - 1; ++q) args[q + 1] = basis[tuples[a][q]];
    for (int i = 0; i < l.dim(); ++i) {
      args[0] = l.unit(i);
      Vector v = l.bracket(args);
      for (int t = 0; t < l.dim(); ++t) m.at(a * l.dim() + t, i) = v[t];
    }
  }
  return kernel(m);
}

Subspace grow_abelian(const NLieAlgebra& l, Subspace s) {
  for (;;) {
    Subspace k = abelian_extension_space(l, s);
    bool grown = false;
    for (std::size_t r = 0; r < k.dim(); ++r) {
      if (s.contains(k.basis().row(r))) continue;
      auto rows = s.basis_vectors();
      rows.push_back(k.basis_vector(r));
      s = Subspace::span(l.field(), l.dim(), rows);
      grown = true;
      break;
    }
    if (!grown) return s;
  }
}

}  // namespace

AlphaBetaResult abelian_bounds_q(const NLieAlgebra& l) {
  const int m = l.dim();
  const int n = l.arity();
  AlphaBetaResult r;
  r.mode = SearchMode::lower_bound_q;
  r.complete = true;
  bool abelian = l.is_abelian();
  r.alpha_upper = abelian ? m : m - 1;
  r.beta_upper = abelian ? m : (n >= 3 ? m - 2 : m - 1);
  r.beta_upper = std::min(r.beta_upper, r.alpha_upper);

  Subspace z = center(l);
  std::vector<Subspace> seeds{z};
  for (const auto& t : increasing_tuples(m, std::min(m, n - 1))) {
    std::vector<Vector> gens;
    for (int i : t) gens.push_back(l.unit(i));
    seeds.push_back(Subspace::span(l.field(), m, gens));
  }

  std::vector<Subspace> candidates;
  for (const auto& seed : seeds) {
    Subspace grown = grow_abelian(l, seed);
    r.subspaces_scanned += 1;
    if (!r.alpha_witness || grown.dim() > r.alpha_witness->dim()) r.alpha_witness = grown;
    candidates.push_back(seed);
    candidates.push_back(std::move(grown));
  }
  r.alpha = r.alpha_witness->dim();

  if (m <= 16) {
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<Vector> gens;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) gens.push_back(l.unit(i));
      candidates.push_back(Subspace::span(l.field(), m, gens));
    }
  }
  for (const auto& c : candidates) {
    if (c.is_zero() || (r.beta_witness && c.dim() <= r.beta_witness->dim())) continue;
    ++r.subspaces_scanned;
    if (classify_subspace(l, c).is_abelian_ideal) r.beta_witness = c;
  }
  r.beta = r.beta_witness ? r.beta_witness->dim() : 0;
  if (r.alpha == 0) r.alpha_witness.reset();
  return r;
}

bool reducible_mod_p(const NLieAlgebra& l, std::uint32_t p) {
  if (!l.field().is_rational()) return l.field().modulus() == p;
  for (const auto& e : l.constants().entries())
    for (const auto& x : e.value)
      if (mpz_divisible_ui_p(x.rational().get_den_mpz_t(), p)) return false;
  return true;
}

NLieAlgebra reduce_mod_p(const NLieAlgebra& l, std::uint32_t p) {
  Field f = Field::prime(p);
  if (!l.field().is_rational()) {
    require(l.field() == f, ErrorCode::field_mismatch,
            "algebra is over " + l.field().to_string() + ", cannot reduce mod " +
                std::to_string(p));
    return l;
  }
  require(reducible_mod_p(l, p), ErrorCode::invalid_argument,
          std::to_string(p) + " divides a denominator of a structure constant");
  NLieAlgebra out(f, l.arity(), l.dim());
  out.set_labels(l.labels());
  for (const auto& e : l.constants().entries()) {
    Vector v;
    for (const auto& x : e.value) v.push_back(Scalar::from_rational(f, x.rational()));
    out.set_entry(e.on, std::move(v));
  }
  return out;
}

SubspaceSearch find_subspace(const NLieAlgebra& l, int k, SubspacePredicate pred,
                             const SearchOptions& options) {
  FpAlgebra fp(l);
  require(k >= 0 && k <= l.dim(), ErrorCode::invalid_argument, "subspace dimension out of range");
  auto test = [&](const FpBasis& b) {
    switch (pred) {
      case SubspacePredicate::abelian_subalgebra:
        return fp.abelian_subalgebra(b);
      case SubspacePredicate::abelian_ideal:
        return fp.abelian_ideal(b);
      case SubspacePredicate::hypo_abelian_ideal:
        return fp.abelian_subalgebra(b) && !fp.ssl_zero(b) && fp.ideal(b);
      case SubspacePredicate::ideal:
        return fp.ideal(b);
    }
    return false;
  };
  auto out = detail::scan_level(l.dim(), k, fp.p(), options.budget, options.threads, test);
  SubspaceSearch s;
  s.scanned = out.scanned;
  s.complete = out.complete;
  if (out.found) s.witness = detail::from_fp_basis(out.witness, l.field());
  return s;
}

// ---------------------------------------------------------------------------

bool ClaimsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClaimCheck& c) { return c.status == ClaimStatus::pass; });
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::unverifiable:
      return "unverifiable";
  }
  return "?";
}

namespace {

ClaimCheck exact_check(std::string name, const std::string& expected, const std::string& observed,
                       const Field& f) {
  ClaimCheck c;
  c.name = std::move(name);
  c.expected = expected;
  c.observed = observed;
  c.method = "exact linear algebra over " + f.to_string();
  c.status = expected == observed ? ClaimStatus::pass : ClaimStatus::fail;
  return c;
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

ClaimsReport verify_claims(const NLieAlgebra& l, const Claims& claims, const VerifyOptions& options) {
  ClaimsReport report;
  Field f = l.field();
  if (claims.dim_derived)
    report.checks.push_back(exact_check("dim_derived", std::to_string(*claims.dim_derived),
                                        std::to_string(derived_algebra(l).dim()), f));
  if (claims.dim_center)
    report.checks.push_back(exact_check("dim_center", std::to_string(*claims.dim_center),
                                        std::to_string(center(l).dim()), f));
  if (claims.nilpotent)
    report.checks.push_back(
        exact_check("nilpotent", flag(*claims.nilpotent), flag(is_nilpotent(l)), f));
  if (claims.solvable2)
    report.checks.push_back(
        exact_check("solvable2", flag(*claims.solvable2), flag(is_s_solvable(l, 2)), f));
  if (claims.solvable3) {
    if (l.arity() >= 3)
      report.checks.push_back(
          exact_check("solvable3", flag(*claims.solvable3), flag(is_s_solvable(l, 3)), f));
    else
      report.checks.push_back(ClaimCheck{"solvable3", flag(*claims.solvable3), "n/a",
                                         "3-solvability needs arity >= 3",
                                         ClaimStatus::unverifiable});
  }
  if (!claims.alpha && !claims.beta) return report;

  // Exhaustive values per prime.
  struct PrimeValue {
    std::uint32_t p;
    AlphaBetaResult r;
  };
  std::vector<PrimeValue> values;
  std::vector<std::uint32_t> primes =
      f.is_rational() ? options.primes : std::vector<std::uint32_t>{f.modulus()};
  std::vector<std::string> skipped;
  for (auto p : primes) {
    if (!reducible_mod_p(l, p)) {
      skipped.push_back("p=" + std::to_string(p) + ": constants not p-integral");
      continue;
    }
    auto r = alpha_beta_exact_fp(reduce_mod_p(l, p), options.search);
    if (!r.complete) {
      skipped.push_back("p=" + std::to_string(p) + ": budget exceeded");
      continue;
    }
    values.push_back({p, std::move(r)});
  }
  std::optional<AlphaBetaResult> bounds;
  if (f.is_rational()) bounds = abelian_bounds_q(l);

  auto check_value = [&](const std::string& name, std::size_t expected, bool is_alpha) {
    ClaimCheck c;
    c.name = name;
    c.expected = std::to_string(expected);
    std::ostringstream obs;
    bool all_equal = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::size_t v = is_alpha ? values[i].r.alpha : values[i].r.beta;
      obs << (i ? ", " : "") << "p=" << values[i].p << ": " << v;
      all_equal = all_equal && v == expected;
    }
    for (const auto& s : skipped) obs << (obs.tellp() > 0 ? ", " : "") << s;
    bool bounds_ok = true;
    if (bounds) {
      std::size_t lo = is_alpha ? bounds->alpha : bounds->beta;
      std::size_t hi = is_alpha ? bounds->alpha_upper : bounds->beta_upper;
      obs << (obs.tellp() > 0 ? "; " : "") << "Q bounds " << lo << ".." << hi;
      bounds_ok = lo <= expected && expected <= hi;
    }
    c.observed = obs.str();
    std::size_t needed = f.is_rational() ? 2 : 1;
    if (f.is_rational())
      c.method = "exhaustive F_p enumeration (heuristic corroboration of the char-0 value) "
                 "plus Q lower/upper bounds";
    else
      c.method = "exhaustive enumeration over " + f.to_string();
    if (!bounds_ok || (!values.empty() && !all_equal))
      c.status = ClaimStatus::fail;
    else if (values.size() < needed)
      c.status = ClaimStatus::unverifiable;
    else
      c.status = ClaimStatus::pass;
    report.checks.push_back(std::move(c));
  };
  if (claims.alpha) check_value("alpha", *claims.alpha, true);
  if (claims.beta) check_value("beta", *claims.beta, false);
  return report;
}

}  // namespace nlie
