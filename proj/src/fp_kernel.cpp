#include "fp_kernel.hpp"

#include <string>

namespace nlie::detail {

FpAlgebra::FpAlgebra(const NLieAlgebra& l) : m_(l.dim()), n_(l.arity()) {
  require(!l.field().is_rational(), ErrorCode::unsupported,
          "exhaustive search needs an algebra over F_p");
  p_ = l.field().modulus();
  for (const auto& e : l.constants().entries()) {
    Entry w{e.on, WordVec(m_)};
    for (int t = 0; t < m_; ++t) w.value[t] = e.value[t].residue();
    entries_.push_back(std::move(w));
  }
  for (const auto& j : increasing_tuples(m_, n_ - 1)) {
    WordVec a(static_cast<std::size_t>(m_) * m_, 0);
    IndexTuple idx(n_);
    std::copy(j.begin(), j.end(), idx.begin() + 1);
    for (int i = 0; i < m_; ++i) {
      idx[0] = i;
      Vector v = l.basis_bracket(idx);
      for (int t = 0; t < m_; ++t) a[t * m_ + i] = v[t].residue();
    }
    ad_.push_back(std::move(a));
  }
}

Word FpAlgebra::inv(Word a) const {
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Word>(result);
}

Word FpAlgebra::det(std::span<const Word* const> args, const std::vector<int>& cols) const {
  std::size_t k = cols.size();
  if (k == 2)
    return sub(mul(args[0][cols[0]], args[1][cols[1]]), mul(args[0][cols[1]], args[1][cols[0]]));
  if (k == 3) {
    const Word* a = args[0];
    const Word* b = args[1];
    const Word* c = args[2];
    int x = cols[0], y = cols[1], z = cols[2];
    Word pos = add(add(mul(a[x], mul(b[y], c[z])), mul(a[y], mul(b[z], c[x]))),
                   mul(a[z], mul(b[x], c[y])));
    Word neg = add(add(mul(a[x], mul(b[z], c[y])), mul(a[y], mul(b[x], c[z]))),
                   mul(a[z], mul(b[y], c[x])));
    return sub(pos, neg);
  }
  WordVec a(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a[r * k + c] = args[r][cols[c]];
  Word d = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv * k + c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[piv * k + j], a[c * k + j]);
      d = sub(0, d);
    }
    d = mul(d, a[c * k + c]);
    Word iv = inv(a[c * k + c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r * k + c] == 0) continue;
      Word f = mul(a[r * k + c], iv);
      for (std::size_t j = c; j < k; ++j) a[r * k + j] = sub(a[r * k + j], mul(f, a[c * k + j]));
    }
  }
  return d;
}

void FpAlgebra::bracket(std::span<const Word* const> args, Word* out) const {
  std::fill(out, out + m_, 0);
  for (const auto& e : entries_) {
    bool skip = false;
    for (const Word* a : args) {
      bool any = false;
      for (int c : e.on) any = any || a[c] != 0;
      if (!any) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    Word d = det(args, e.on);
    if (d == 0) continue;
    for (int t = 0; t < m_; ++t)
      if (e.value[t]) out[t] = add(out[t], mul(d, e.value[t]));
  }
}

void FpAlgebra::apply_ad(std::size_t j, std::span<const Word> v, Word* out) const {
  const WordVec& a = ad_[j];
  for (int t = 0; t < m_; ++t) {
    std::uint64_t acc = 0;
    for (int i = 0; i < m_; ++i) acc += static_cast<std::uint64_t>(a[t * m_ + i]) * v[i];
    out[t] = static_cast<Word>(acc % p_);
  }
}

bool FpAlgebra::contains(const FpBasis& s, std::span<const Word> v) const {
  WordVec rest(v.begin(), v.end());
  for (int r = 0; r < s.k; ++r) {
    Word c = rest[s.pivots[r]];
    if (c == 0) continue;
    auto row = s.row(r);
    for (int t = 0; t < m_; ++t)
      if (row[t]) rest[t] = sub(rest[t], mul(c, row[t]));
  }
  return std::all_of(rest.begin(), rest.end(), [](Word w) { return w == 0; });
}

bool FpAlgebra::abelian_subalgebra(const FpBasis& s) const {
  if (entries_.empty() || s.k < n_) return true;
  std::vector<const Word*> args(n_);
  WordVec out(m_);
  for (const auto& t : increasing_tuples(s.k, n_)) {
    for (int a = 0; a < n_; ++a) args[a] = s.rows.data() + t[a] * m_;
    bracket(args, out.data());
    for (Word w : out)
      if (w) return false;
  }
  return true;
}

bool FpAlgebra::ideal(const FpBasis& s) const {
  if (entries_.empty() || s.k == m_) return true;
  WordVec out(m_);
  for (int r = 0; r < s.k; ++r)
    for (std::size_t j = 0; j < ad_.size(); ++j) {
      apply_ad(j, s.row(r), out.data());
      if (!contains(s, out)) return false;
    }
  return true;
}

bool FpAlgebra::ssl_zero(const FpBasis& s) const {
  if (entries_.empty() || s.k < 2) return true;
  std::vector<WordVec> units(m_, WordVec(m_, 0));
  for (int i = 0; i < m_; ++i) units[i][i] = 1;
  auto rest = increasing_tuples(m_, n_ - 2);
  std::vector<const Word*> args(n_);
  WordVec out(m_);
  for (int a = 0; a < s.k; ++a)
    for (int b = a + 1; b < s.k; ++b)
      for (const auto& j : rest) {
        args[0] = s.rows.data() + a * m_;
        args[1] = s.rows.data() + b * m_;
        for (int q = 0; q < n_ - 2; ++q) args[2 + q] = units[j[q]].data();
        bracket(args, out.data());
        for (Word w : out)
          if (w) return false;
      }
  return true;
}

int FpAlgebra::rank(WordVec& rows, int count) const {
  int r = 0;
  for (int c = 0; c < m_ && r < count; ++c) {
    int piv = r;
    while (piv < count && rows[piv * m_ + c] == 0) ++piv;
    if (piv == count) continue;
    if (piv != r)
      for (int j = 0; j < m_; ++j) std::swap(rows[piv * m_ + j], rows[r * m_ + j]);
    Word iv = inv(rows[r * m_ + c]);
    for (int i = r + 1; i < count; ++i) {
      Word f = mul(rows[i * m_ + c], iv);
      if (f == 0) continue;
      for (int j = c; j < m_; ++j) rows[i * m_ + j] = sub(rows[i * m_ + j], mul(f, rows[r * m_ + j]));
    }
    ++r;
  }
  return r;
}

bool FpAlgebra::perfect_subalgebra(const FpBasis& s) const {
  if (s.k == 0) return true;
  if (entries_.empty() || s.k < n_) return false;
  std::vector<const Word*> args(n_);
  WordVec out(m_), images;
  int count = 0;
  for (const auto& t : increasing_tuples(s.k, n_)) {
    for (int a = 0; a < n_; ++a) args[a] = s.rows.data() + t[a] * m_;
    bracket(args, out.data());
    if (!contains(s, out)) return false;
    images.insert(images.end(), out.begin(), out.end());
    ++count;
  }
  return rank(images, count) == s.k;
}

bool FpAlgebra::independent(const FpBasis& a, const FpBasis& b) const {
  WordVec rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return rank(rows, a.k + b.k) == a.k + b.k;
}

FpBasis to_fp_basis(const Subspace& s) {
  FpBasis b;
  b.m = static_cast<int>(s.ambient_dim());
  b.k = static_cast<int>(s.dim());
  for (auto p : s.pivots()) b.pivots.push_back(static_cast<int>(p));
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (const auto& x : s.basis().row(r)) b.rows.push_back(x.residue());
  return b;
}

Subspace from_fp_basis(const FpBasis& b, Field f) {
  std::vector<Vector> rows;
  for (int r = 0; r < b.k; ++r) {
    Vector v;
    for (Word w : b.row(r)) v.push_back(Scalar::from_int(f, w));
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, b.m, rows);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

std::vector<Profile> profiles(int m, int k, Word p) {
  std::vector<Profile> out;
  std::uint64_t offset = 0;
  for (auto& piv : increasing_tuples(m, k)) {
    Profile pr;
    pr.pivots = piv;
    std::vector<bool> is_pivot(m, false);
    for (int c : piv) is_pivot[c] = true;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < m; ++c)
        if (!is_pivot[c]) pr.free.emplace_back(r, c);
    pr.size = 1;
    for (std::size_t i = 0; i < pr.free.size(); ++i) pr.size = saturating_mul(pr.size, p);
    pr.offset = offset;
    offset = saturating_add(offset, pr.size);
    out.push_back(std::move(pr));
  }
  return out;
}

void profile_subspace(const Profile& pr, int m, Word p, std::uint64_t index, FpBasis& b) {
  b.m = m;
  b.k = static_cast<int>(pr.pivots.size());
  b.pivots = pr.pivots;
  b.rows.assign(static_cast<std::size_t>(b.k) * m, 0);
  for (int r = 0; r < b.k; ++r) b.rows[r * m + pr.pivots[r]] = 1;
  for (std::size_t i = pr.free.size(); i-- > 0;) {
    auto [r, c] = pr.free[i];
    b.rows[r * m + c] = static_cast<Word>(index % p);
    index /= p;
  }
}

bool profile_next(const Profile& pr, Word p, FpBasis& b) {
  for (std::size_t i = pr.free.size(); i-- > 0;) {
    auto [r, c] = pr.free[i];
    Word& w = b.rows[r * b.m + c];
    if (++w < p) return true;
    w = 0;
  }
  return false;
}

}  // namespace nlie::detail
