#pragma once

// Syntactic depth of existential variables in a reduced sentence, and the
// semantic level-set stratification (L_i, U_i, P_i) of a poset.
//
// Level i groups all elements by their signature over the previous level,
// sig(p) = ({l in L_{i-1} : l <= p}, {u in U_{i-1} : p <= u}); the nonempty
// signature classes are exactly the nonempty P_{i-1,R}, so only they are
// enumerated.  L_i accumulates class minima and U_i class maxima.  The two
// families may overlap from level 1 on: an element that is minimal in one
// class and maximal in another is usable on both sides, which the
// depth-restricted game requires (e.g. on antichains, whose elements an
// upper-side variable must still reach).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pomc/bits.hpp"
#include "pomc/poset.hpp"
#include "pomc/reduce.hpp"
#include "pomc/sentence.hpp"

namespace pomc {

enum class Side { Lower, Upper };

struct VariableDepths {
  struct Entry {
    std::size_t var;  // index in the sentence prefix
    Side side;
    std::size_t ldpt;
    std::size_t udpt;
    std::size_t depth;  // ldpt if Lower, udpt if Upper
  };
  std::vector<Entry> existentials;
  std::size_t b = 0;  // max depth over existential variables, 0 if none

  const Entry* find(std::size_t var) const {
    for (const auto& e : existentials)
      if (e.var == var) return &e;
    return nullptr;
  }
};

namespace detail {

// Longest chain (element count) of the closed matrix restricted to mask.
inline std::size_t longest_chain(const Matrix& M, const Bits& mask) {
  std::vector<std::size_t> members = mask.to_indices();
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
    return (M.down_of(a) & mask).count() < (M.down_of(b) & mask).count();
  });
  std::map<std::size_t, std::size_t> rank;
  std::size_t best = 0;
  for (std::size_t v : members) {
    std::size_t r = 1;
    for (std::size_t u : members)
      if (u != v && M.rows[u].test(v) && rank.count(u)) r = std::max(r, rank[u] + 1);
    rank[v] = r;
    best = std::max(best, r);
  }
  return best;
}

}  // namespace detail

inline VariableDepths variable_depths(const ReducedSentence& red) {
  const Sentence& phi = red.inner;
  detail::Matrix M(phi);
  const std::size_t m = M.size();
  VariableDepths out;
  for (std::size_t y = 0; y < m; ++y) {
    if (M.universal(y)) continue;
    Bits down = M.down_of(y);
    Bits up = M.rows[y];
    std::size_t ldpt = detail::longest_chain(M, down);
    std::size_t udpt = detail::longest_chain(M, up);
    bool below_universal = false, above_universal = false;
    for (std::size_t x = 0; x < m; ++x) {
      if (!M.universal(x)) continue;
      if (up.test(x)) below_universal = true;    // y <=_M x
      if (down.test(x)) above_universal = true;  // x <=_M y
    }
    Side side;
    if (below_universal) {
      side = Side::Lower;
    } else if (above_universal) {
      side = Side::Upper;
    } else {
      side = ldpt <= udpt ? Side::Lower : Side::Upper;
    }
    std::size_t d = side == Side::Lower ? ldpt : udpt;
    out.existentials.push_back({y, side, ldpt, udpt, d});
    out.b = std::max(out.b, d);
  }
  return out;
}

struct LevelSets {
  std::vector<Subset> L, U;  // indexed 0..k

  struct Assignment {
    Side side;
    std::size_t depth;
  };
  // First-appearance (side, depth) per element; ties go to the lower side.
  // Elements that enter no level within 0..k have no assignment.
  std::vector<std::optional<Assignment>> element_depth;

  std::size_t levels() const { return L.size(); }
  Subset level(std::size_t i) const { return L[i] | U[i]; }  // P_i
};

inline LevelSets level_sets(const Poset& P, std::size_t k) {
  const std::size_t n = P.size();
  LevelSets out;
  Subset l = minimals(P, P.full());
  Subset u = maximals(P, P.full());
  u.subtract(l);
  out.L.push_back(l);
  out.U.push_back(u);

  for (std::size_t i = 1; i <= k; ++i) {
    const Subset& lp = out.L[i - 1];
    const Subset& up = out.U[i - 1];
    std::map<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>, Subset>
        classes;
    for (std::size_t p = 0; p < n; ++p) {
      Bits below = P.down_row(p) & lp;
      Bits above = P.up_row(p) & up;
      auto key = std::make_pair(below.words(), above.words());
      auto it = classes.try_emplace(std::move(key), Subset(n)).first;
      it->second.set(p);
    }
    Subset li = lp, ui = up;
    for (const auto& [sig, members] : classes) {
      li |= minimals(P, members);
      ui |= maximals(P, members);
    }
    out.L.push_back(std::move(li));
    out.U.push_back(std::move(ui));
  }

  out.element_depth.assign(n, std::nullopt);
  for (std::size_t p = 0; p < n; ++p) {
    std::optional<std::size_t> lfirst, ufirst;
    for (std::size_t i = 0; i < out.L.size(); ++i) {
      if (!lfirst && out.L[i].test(p)) lfirst = i;
      if (!ufirst && out.U[i].test(p)) ufirst = i;
    }
    if (lfirst && (!ufirst || *lfirst <= *ufirst))
      out.element_depth[p] = LevelSets::Assignment{Side::Lower, *lfirst};
    else if (ufirst)
      out.element_depth[p] = LevelSets::Assignment{Side::Upper, *ufirst};
  }
  return out;
}

}  // namespace pomc
