#ifndef NLIE_SRC_FP_KERNEL_HPP
#define NLIE_SRC_FP_KERNEL_HPP

// Word-sized arithmetic over F_p for the enumeration and search loops.
// Values are kept reduced in [0, p) with p < 2^16, so products fit in 32 bits.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <span>
#include <vector>

#include "nlie/algebra.hpp"
#include "parallel.hpp"

namespace nlie::detail {

using Word = std::uint32_t;
using WordVec = std::vector<Word>;

/// Row-reduced basis of a subspace of F_p^m.
struct FpBasis {
  int m = 0;
  int k = 0;
  std::vector<int> pivots;
  WordVec rows;  // k * m, row-major

  std::span<const Word> row(int r) const { return {rows.data() + r * m, static_cast<std::size_t>(m)}; }
  std::span<Word> row(int r) { return {rows.data() + r * m, static_cast<std::size_t>(m)}; }
};

/// Structure constants of an algebra over F_p in word form.
class FpAlgebra {
 public:
  explicit FpAlgebra(const NLieAlgebra& l);

  Word p() const { return p_; }
  int dim() const { return m_; }
  int arity() const { return n_; }

  Word add(Word a, Word b) const { return (a + b) % p_; }
  Word sub(Word a, Word b) const { return (a + p_ - b) % p_; }
  Word mul(Word a, Word b) const { return a * b % p_; }
  Word inv(Word a) const;

  /// out = [args[0], ..., args[n-1]]; out must hold m words.
  void bracket(std::span<const Word* const> args, Word* out) const;
  /// ad(J) * v for the j-th increasing (n-1)-tuple J: out = [v, e_J].
  void apply_ad(std::size_t j, std::span<const Word> v, Word* out) const;
  std::size_t ad_count() const { return ad_.size(); }

  bool is_abelian() const { return entries_.empty(); }

  /// [S,...,S] = 0
  bool abelian_subalgebra(const FpBasis& s) const;
  /// [S, L, ..., L] ⊆ S
  bool ideal(const FpBasis& s) const;
  /// [S, S, L, ..., L] = 0
  bool ssl_zero(const FpBasis& s) const;
  bool abelian_ideal(const FpBasis& s) const { return ssl_zero(s) && ideal(s); }
  /// [S,...,S] = S
  bool perfect_subalgebra(const FpBasis& s) const;
  /// a ∩ b = 0
  bool independent(const FpBasis& a, const FpBasis& b) const;
  /// Rank of `count` rows of length m, destroyed in place.
  int rank(WordVec& rows, int count) const;

  /// Reduces v against s; true when v lies in s.
  bool contains(const FpBasis& s, std::span<const Word> v) const;

 private:
  struct Entry {
    std::vector<int> on;
    WordVec value;
  };
  Word det(std::span<const Word* const> args, const std::vector<int>& cols) const;

  Word p_ = 2;
  int m_ = 0;
  int n_ = 0;
  std::vector<Entry> entries_;
  std::vector<WordVec> ad_;  // m*m row-major, column i = [e_i, e_J]
};

/// Rows of an algebra-level Subspace over F_p in word form.
FpBasis to_fp_basis(const Subspace& s);
Subspace from_fp_basis(const FpBasis& b, Field f);

/// Canonical enumeration of RREF pivot profiles and their free entries.
struct Profile {
  std::vector<int> pivots;
  std::vector<std::pair<int, int>> free;  // (row, col), lexicographic
  std::uint64_t size = 0;                 // p^free, saturating
  std::uint64_t offset = 0;               // position of the first subspace, saturating
};

std::vector<Profile> profiles(int m, int k, Word p);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);

/// Fills `b` with the subspace at position `index` within profile `pr`.
void profile_subspace(const Profile& pr, int m, Word p, std::uint64_t index, FpBasis& b);
/// Advances `b` to the next subspace of the same profile; false at the end.
bool profile_next(const Profile& pr, Word p, FpBasis& b);

struct ScanOutcome {
  bool found = false;
  FpBasis witness;
  std::uint64_t position = 0;  // serial index of the witness within the level
  std::uint64_t scanned = 0;   // serial-equivalent number of subspaces tested
  bool complete = true;        // false when the budget cut the level short
};

/// Tests the k-dimensional subspaces of F_p^m in canonical order and
/// returns the first one satisfying `pred`. At most `budget` subspaces
/// (counted in serial order) are tested. The outcome does not depend on
/// the number of threads.
template <class Pred>
ScanOutcome scan_level(int m, int k, Word p, std::uint64_t budget, unsigned threads,
                       const Pred& pred) {
  auto prs = profiles(m, k, p);
  std::uint64_t total = 0;
  for (const auto& pr : prs) total = saturating_add(total, pr.size);

  std::atomic<std::size_t> best{prs.size()};
  std::vector<ScanOutcome> per(prs.size());

  parallel_for(prs.size(), threads, [&](std::size_t i) {
    const Profile& pr = prs[i];
    if (pr.offset >= budget || i > best.load()) return;
    std::uint64_t limit = std::min<std::uint64_t>(pr.size, budget - pr.offset);
    FpBasis b;
    profile_subspace(pr, m, p, 0, b);
    for (std::uint64_t j = 0; j < limit; ++j) {
      if ((j & 1023) == 1023 && i > best.load()) return;
      if (pred(b)) {
        per[i].found = true;
        per[i].witness = b;
        per[i].position = pr.offset + j;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
      if (j + 1 < limit) profile_next(pr, p, b);
    }
  });

  ScanOutcome out;
  std::size_t b = best.load();
  if (b < prs.size()) {
    out = per[b];
    out.scanned = out.position + 1;
    out.complete = true;
    return out;
  }
  out.scanned = std::min(total, budget);
  out.complete = total <= budget;
  return out;
}

}  // namespace nlie::detail

#endif
