#include "pdp/pairing.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pdp {

Pairing::Pairing(int k, std::vector<std::pair<int, int>> pairs) : k_(k) {
  if (k < 1 || static_cast<int>(pairs.size()) != k) {
    fail(ErrorCode::SharedLabel, "pairing must contain exactly k pairs");
  }
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs.begin(), pairs.end());
  partner_.assign(2 * k + 1, 0);
  for (const auto& [lo, hi] : pairs) {
    if (lo < 1 || hi > 2 * k || lo == hi || partner_[lo] != 0 ||
        partner_[hi] != 0) {
      fail(ErrorCode::SharedLabel, "labels must cover {1..2k} exactly once");
    }
    partner_[lo] = hi;
    partner_[hi] = lo;
  }
  pairs_ = std::move(pairs);
}

Pairing Pairing::parallel_pairing(int k) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(k);
  for (int i = 1; i <= k; ++i) pairs.emplace_back(i, 2 * k + 1 - i);
  return Pairing(k, std::move(pairs));
}

std::string Pairing::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out << ",";
    out << "(" << pairs_[i].first << "," << pairs_[i].second << ")";
  }
  out << "}";
  return out.str();
}

CrossingClass classify(std::pair<int, int> h1, std::pair<int, int> h2) {
  auto [a, b] = h1;
  auto [c, d] = h2;
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) {
    fail(ErrorCode::SharedLabel, "demand edges share a label");
  }
  if (b < c || d < a) return CrossingClass::kSeries;
  if ((a < c && d < b) || (c < a && b < d)) return CrossingClass::kParallel;
  return CrossingClass::kInterlacing;
}

int len(const Pairing& m) {
  int total = 0;
  for (const auto& [lo, hi] : m.pairs()) total += hi - lo;
  return total;
}

bool is_noncrossing(const Pairing& m) {
  const auto& ps = m.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (classify(ps[i], ps[j]) == CrossingClass::kInterlacing) return false;
    }
  }
  return true;
}

namespace {

// Matches the lowest label of the last pending block against every partner
// leaving even-sized sub-blocks; the chord splits its block in two.
void enumerate_blocks(std::vector<std::pair<int, int>> blocks,
                      std::vector<std::pair<int, int>>& acc, int k,
                      std::vector<Pairing>& out) {
  while (!blocks.empty() && blocks.back().first > blocks.back().second) {
    blocks.pop_back();
  }
  if (blocks.empty()) {
    out.emplace_back(k, acc);
    return;
  }
  auto [lo, hi] = blocks.back();
  blocks.pop_back();
  for (int j = lo + 1; j <= hi; j += 2) {
    acc.emplace_back(lo, j);
    auto next = blocks;
    next.push_back({lo + 1, j - 1});
    next.push_back({j + 1, hi});
    enumerate_blocks(std::move(next), acc, k, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Pairing> enumerate_noncrossing(int k) {
  std::vector<Pairing> out;
  std::vector<std::pair<int, int>> acc;
  enumerate_blocks({{1, 2 * k}}, acc, k, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CompatibilityWitness> compatible(const Pairing& m,
                                               const Pairing& m_prime) {
  if (m.k() != m_prime.k()) return std::nullopt;
  const int k = m.k();
  CompatibilityWitness witness;
  std::vector<bool> seen(2 * k + 1, false);

  for (const auto& [start, first_hi] : m.pairs()) {
    if (seen[start]) continue;
    // Traverse the alternating cycle. Direction is forced: the demand edge
    // of m leaving `start` must run lo -> hi.
    std::vector<int> cycle;
    int cur = start;
    while (true) {
      if (cur > m.partner(cur)) return std::nullopt;  // backward demand edge
      seen[cur] = true;
      cycle.push_back(cur);
      int hi = m.partner(cur);
      seen[hi] = true;
      cycle.push_back(hi);
      int next = m_prime.partner(hi);  // external edge, orientation free
      if (next == start) break;
      cur = next;
    }
    witness.cycles.push_back(std::move(cycle));
  }
  witness.cycle_count = static_cast<int>(witness.cycles.size());
  return witness;
}

TelescopeExpansion telescope(const Pairing& m0) {
  if (!is_noncrossing(m0)) {
    fail(ErrorCode::CrossingPairing,
         "telescope requires a non-crossing base pairing " + m0.to_string());
  }
  const int k = m0.k();
  const std::vector<Pairing> universe = enumerate_noncrossing(k);

  struct LenLexLess {
    bool operator()(const Pairing& a, const Pairing& b) const {
      int la = len(a), lb = len(b);
      if (la != lb) return la < lb;
      return a < b;
    }
  };

  // Expanding in increasing len order guarantees every contribution into a
  // pairing lands before that pairing is popped (compatible successors are
  // strictly longer).
  std::map<Pairing, long long, LenLexLess> pending;
  std::map<Pairing, long long, LenLexLess> resolved;
  pending.emplace(m0, 1);

  while (!pending.empty()) {
    auto it = pending.begin();
    Pairing m = it->first;
    long long gamma = it->second;
    pending.erase(it);
    if (gamma == 0) continue;
    resolved[m] += gamma;

    for (const Pairing& cand : universe) {
      if (cand == m) continue;
      auto wit = compatible(m, cand);
      if (!wit) continue;
      // Cancellation step: W(<M,M>) = W(<M,*>) + sum (-1)^{k+c+1} W(<M',M'>).
      long long sgn = ((k + wit->cycle_count + 1) % 2 == 0) ? 1 : -1;
      pending[cand] += gamma * sgn;
    }
  }

  TelescopeExpansion expansion{m0, {}};
  for (auto& [pairing, coeff] : resolved) {
    if (coeff != 0) expansion.entries.push_back({pairing, coeff});
  }
  return expansion;
}

}  // namespace pdp
