#pragma once

// Finite posets as dense boolean relation matrices (one Bits row per element).
// Construction always applies reflexive-transitive closure and rejects
// antisymmetry violations; the cover relation is derived by transitive
// reduction.  All operations are pure and a Poset is immutable once built.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pomc/bits.hpp"
#include "pomc/errors.hpp"

namespace pomc {

class Poset {
public:
  // pairs are arbitrary order pairs (not necessarily covers); the closure of
  // the pair relation must be antisymmetric.
  static Poset from_order_pairs(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                std::vector<std::string> names = {}) {
    if (n < 1) throw FormatError("poset needs at least one element");
    if (names.empty()) {
      names.reserve(n);
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    }
    if (names.size() != n) throw FormatError("element name count does not match n");
    {
      std::map<std::string, std::size_t> seen;
      for (std::size_t i = 0; i < n; ++i)
        if (!seen.emplace(names[i], i).second)
          throw FormatError("duplicate element name: " + names[i]);
    }

    std::vector<Bits> leq(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) leq[i].set(i);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw FormatError("order pair references invalid element");
      leq[a].set(b);
    }
    close_transitively(leq);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = leq[p].first(); q < n; q = leq[p].next(q + 1))
        if (q != p && leq[q].test(p))
          throw CycleError("order contains a cycle: " + names[p] + " <= " + names[q] +
                               " <= " + names[p],
                           names[p], names[q]);
    return Poset(n, std::move(names), std::move(leq));
  }

  std::size_t size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(std::size_t p, std::size_t q) const { return leq_[p].test(q); }
  bool less(std::size_t p, std::size_t q) const { return p != q && leq_[p].test(q); }
  bool covers(std::size_t p, std::size_t q) const { return cover_[p].test(q); }
  bool incomparable(std::size_t p, std::size_t q) const {
    return !leq(p, q) && !leq(q, p);
  }

  const Bits& up_row(std::size_t p) const { return leq_[p]; }       // {q : p <= q}
  const Bits& down_row(std::size_t p) const { return geq_[p]; }     // {q : q <= p}
  const Bits& cover_row(std::size_t p) const { return cover_[p]; }  // {q : p covered-by q}
  const Bits& covered_by_row(std::size_t p) const { return cover_t_[p]; }

  Subset full() const {
    Subset s(n_);
    s.set_all();
    return s;
  }

  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < n_; ++p)
      cover_[p].for_each([&](std::size_t q) { out.emplace_back(p, q); });
    return out;
  }

private:
  Poset(std::size_t n, std::vector<std::string> names, std::vector<Bits> leq)
      : n_(n), names_(std::move(names)), leq_(std::move(leq)) {
    for (std::size_t i = 0; i < n_; ++i) index_.emplace(names_[i], i);
    geq_.assign(n_, Bits(n_));
    for (std::size_t p = 0; p < n_; ++p)
      leq_[p].for_each([&](std::size_t q) { geq_[q].set(p); });
    derive_cover();
  }

  static void close_transitively(std::vector<Bits>& m) {
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (m[i].test(k)) m[i] |= m[k];
  }

  void derive_cover() {
    // p is covered by q iff q is strictly above p and not above anything else
    // strictly above p.
    cover_.assign(n_, Bits(n_));
    for (std::size_t p = 0; p < n_; ++p) {
      Bits strict = leq_[p];
      strict.reset(p);
      Bits reach(n_);
      strict.for_each([&](std::size_t r) {
        Bits up = leq_[r];
        up.reset(r);
        reach |= up;
      });
      strict.subtract(reach);
      cover_[p] = strict;
    }
    cover_t_.assign(n_, Bits(n_));
    for (std::size_t p = 0; p < n_; ++p)
      cover_[p].for_each([&](std::size_t q) { cover_t_[q].set(p); });
  }

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<Bits> leq_;      // leq_[p] = {q : p <= q}
  std::vector<Bits> geq_;      // transpose
  std::vector<Bits> cover_;    // cover_[p] = {q : p covered by q}
  std::vector<Bits> cover_t_;  // transpose of cover_
};

// ---- relational scans --------------------------------------------------

inline Subset minimals(const Poset& P, const Subset& S) {
  Subset out(P.size());
  S.for_each([&](std::size_t p) {
    Bits below = P.down_row(p);
    below.reset(p);
    if (!below.intersects(S)) out.set(p);
  });
  return out;
}

inline Subset maximals(const Poset& P, const Subset& S) {
  Subset out(P.size());
  S.for_each([&](std::size_t p) {
    Bits above = P.up_row(p);
    above.reset(p);
    if (!above.intersects(S)) out.set(p);
  });
  return out;
}

inline Subset downset(const Poset& P, const Subset& S) {
  Subset out(P.size());
  S.for_each([&](std::size_t q) { out |= P.down_row(q); });
  return out;
}

inline Subset upset(const Poset& P, const Subset& S) {
  Subset out(P.size());
  S.for_each([&](std::size_t q) { out |= P.up_row(q); });
  return out;
}

inline std::optional<std::size_t> bottom(const Poset& P) {
  for (std::size_t p = 0; p < P.size(); ++p)
    if (P.up_row(p).count() == P.size()) return p;
  return std::nullopt;
}

inline std::optional<std::size_t> top(const Poset& P) {
  for (std::size_t p = 0; p < P.size(); ++p)
    if (P.down_row(p).count() == P.size()) return p;
  return std::nullopt;
}

// First element lying above every minimal and below every maximal element.
inline std::optional<std::size_t> hub(const Poset& P) {
  Subset mins = minimals(P, P.full());
  Subset maxs = maximals(P, P.full());
  for (std::size_t p = 0; p < P.size(); ++p)
    if (mins.is_subset_of(P.down_row(p)) && maxs.is_subset_of(P.up_row(p))) return p;
  return std::nullopt;
}

// Maximum chain size: longest path in the strict order plus one, by DP over
// elements sorted by strict-downset size (a topological order).
inline std::size_t depth(const Poset& P) {
  const std::size_t n = P.size();
  std::vector<std::size_t> order(n), rank(n, 1);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return P.down_row(a).count() < P.down_row(b).count();
  });
  std::size_t best = 0;
  for (std::size_t p : order) {
    Bits below = P.down_row(p);
    below.reset(p);
    below.for_each([&](std::size_t q) { rank[p] = std::max(rank[p], rank[q] + 1); });
    best = std::max(best, rank[p]);
  }
  return best;
}

// Max element degree in the strict-order digraph: number of comparable others.
inline std::size_t degree(const Poset& P) {
  std::size_t best = 0;
  for (std::size_t p = 0; p < P.size(); ++p) {
    Bits comp = P.up_row(p) | P.down_row(p);
    best = std::max(best, comp.count() - 1);  // drop p itself
  }
  return best;
}

inline std::size_t cover_degree(const Poset& P) {
  std::size_t best = 0;
  for (std::size_t p = 0; p < P.size(); ++p)
    best = std::max(best, P.cover_row(p).count() + P.covered_by_row(p).count());
  return best;
}

// Maximum antichain size via Dilworth: |P| minus a maximum matching of the
// split bipartite graph whose edges are the strict-order pairs
// (Hopcroft-Karp augmenting phases).
inline std::size_t width(const Poset& P) {
  const std::size_t n = P.size();
  constexpr std::size_t kFree = ~std::size_t(0);
  std::vector<std::size_t> match_l(n, kFree), match_r(n, kFree), dist(n);

  auto bfs = [&]() {
    std::vector<std::size_t> queue;
    bool reachable_free = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (match_l[u] == kFree) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kFree;
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t u = queue[qi];
      Bits strict = P.up_row(u);
      strict.reset(u);
      strict.for_each([&](std::size_t v) {
        std::size_t w = match_r[v];
        if (w == kFree) {
          reachable_free = true;
        } else if (dist[w] == kFree) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      });
    }
    return reachable_free;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    Bits strict = P.up_row(u);
    strict.reset(u);
    for (std::size_t v = strict.first(); v < n; v = strict.next(v + 1)) {
      std::size_t w = match_r[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kFree;
    return false;
  };

  std::size_t matching = 0;
  while (bfs())
    for (std::size_t u = 0; u < n; ++u)
      if (match_l[u] == kFree && dfs(u)) ++matching;
  return n - matching;
}

}  // namespace pomc
