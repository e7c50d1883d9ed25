#ifndef SPLITCM_BETTI_HPP
#define SPLITCM_BETTI_HPP

#include <map>
#include <utility>

namespace splitcm {

/// Graded Betti numbers of an ideal I: entry (i, j) holds
/// beta_{i,j}(I) = dim Tor_i(I, K)_j. Tables for the quotient S/I are read
/// through the shift beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1.
class BettiTable {
public:
  void add(int i, int j, long long count);
  long long at(int i, int j) const;
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Largest homological index with a nonzero entry. Requires a nonempty table.
  int proj_dim() const;
  /// max { j - i : beta_{i,j} != 0 }. Requires a nonempty table.
  int regularity() const;
  /// Total Betti number beta_i = sum_j beta_{i,j}.
  long long total(int i) const;

  BettiTable shifted(int di, int dj) const;
  BettiTable plus(const BettiTable& other) const;

  /// Views of the minimal free resolution of S/I (this table describing I).
  long long quotient_at(int i, int j) const;
  int quotient_proj_dim() const;       // empty table (I = 0) gives 0
  int quotient_regularity() const;     // empty table gives 0
  long long quotient_total(int i) const;

  bool operator==(const BettiTable&) const = default;

private:
  std::map<std::pair<int, int>, long long> entries_;
};

}  // namespace splitcm

#endif
