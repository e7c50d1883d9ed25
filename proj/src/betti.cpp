#include "splitcm/betti.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitcm {

void BettiTable::add(int i, int j, long long count) {
  if (count < 0) throw std::invalid_argument("Betti numbers are nonnegative");
  if (count == 0) return;
  entries_[{i, j}] += count;
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::proj_dim() const {
  if (entries_.empty()) throw std::domain_error("empty Betti table has no projective dimension");
  int p = 0;
  for (const auto& [ij, c] : entries_) p = std::max(p, ij.first);
  return p;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw std::domain_error("empty Betti table has no regularity");
  int r = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [ij, c] : entries_) r = std::max(r, ij.second - ij.first);
  return r;
}

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [ij, c] : entries_) {
    if (ij.first == i) t += c;
  }
  return t;
}

BettiTable BettiTable::shifted(int di, int dj) const {
  BettiTable out;
  for (const auto& [ij, c] : entries_) out.add(ij.first + di, ij.second + dj, c);
  return out;
}

BettiTable BettiTable::plus(const BettiTable& other) const {
  BettiTable out(*this);
  for (const auto& [ij, c] : other.entries_) out.add(ij.first, ij.second, c);
  return out;
}

long long BettiTable::quotient_at(int i, int j) const {
  if (i == 0) return (j == 0) ? 1 : 0;
  return at(i - 1, j);
}

int BettiTable::quotient_proj_dim() const { return entries_.empty() ? 0 : proj_dim() + 1; }

int BettiTable::quotient_regularity() const {
  return entries_.empty() ? 0 : std::max(0, regularity() - 1);
}

long long BettiTable::quotient_total(int i) const { return i == 0 ? 1 : total(i - 1); }

}  // namespace splitcm
