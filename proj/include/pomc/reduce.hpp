#pragma once

// Rewrites a sentence into reduced form, equisatisfiable on the given poset,
// or decides the instance outright.  The reduced-form clauses on the closed
// atom digraph M over the prefix Q:
//   (i)   M is a partial order on the variables;
//   (ii)  the suborder induced on universal variables is an antichain;
//   (iii) distinct universals have disjoint matrix upsets and downsets;
//   (iv)  an existential comparable to a universal comes later in the prefix.
//
// Stage order (ii) -> (i) -> (iv) -> (iii) under an outer fixpoint loop; each
// applied rewrite strictly shrinks the variable set, and restrictions of a
// closed matrix stay closed, so no re-closure is needed.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pomc/bits.hpp"
#include "pomc/errors.hpp"
#include "pomc/poset.hpp"
#include "pomc/sentence.hpp"

namespace pomc {

struct ReducedSentence {
  Sentence inner;  // atoms are the reflexive-transitive closure
};

struct ReduceOutcome {
  bool decided = false;
  bool value = false;       // meaningful when decided
  std::string reason;       // rejection tag when decided
  ReducedSentence reduced;  // meaningful when !decided
  std::vector<std::string> trace;

  static ReduceOutcome rejected(std::string why, std::vector<std::string> tr) {
    ReduceOutcome o;
    o.decided = true;
    o.value = false;
    o.reason = std::move(why);
    o.trace = std::move(tr);
    return o;
  }
};

namespace detail {

struct Matrix {
  std::vector<Sentence::Var> vars;
  std::vector<Bits> rows;  // rows[u] = {v : u <= v in the closed atom order}

  explicit Matrix(const Sentence& phi) : vars(phi.vars) {
    const std::size_t m = vars.size();
    rows.assign(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) rows[i].set(i);
    for (auto [u, v] : phi.atoms) rows[u].set(v);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        if (rows[i].test(k)) rows[i] |= rows[k];
  }

  std::size_t size() const { return vars.size(); }
  bool universal(std::size_t i) const { return vars[i].q == Quantifier::Universal; }

  Bits down_of(std::size_t v) const {
    Bits d(size());
    for (std::size_t u = 0; u < size(); ++u)
      if (rows[u].test(v)) d.set(u);
    return d;
  }

  // Keep only the variables outside `drop` (prefix subsequence, induced atoms).
  void restrict_away(const Bits& drop) {
    const std::size_t m = size();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m; ++i)
      if (!drop.test(i)) kept.push_back(i);
    std::vector<Sentence::Var> new_vars;
    std::vector<Bits> new_rows(kept.size(), Bits(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a) {
      new_vars.push_back(vars[kept[a]]);
      for (std::size_t b = 0; b < kept.size(); ++b)
        if (rows[kept[a]].test(kept[b])) new_rows[a].set(b);
    }
    vars = std::move(new_vars);
    rows = std::move(new_rows);
  }

  Sentence to_sentence() const {
    Sentence phi;
    phi.vars = vars;
    for (std::size_t u = 0; u < size(); ++u)
      rows[u].for_each([&](std::size_t v) { phi.add_atom(u, v); });
    return phi;
  }

  std::string name_list(const Bits& s) const {
    std::string out;
    s.for_each([&](std::size_t i) {
      if (!out.empty()) out += ",";
      out += vars[i].name;
    });
    return out;
  }
};

}  // namespace detail

inline ReduceOutcome reduce(const Poset& P, const Sentence& phi) {
  if (P.size() < 2) throw TrivialPosetError();

  detail::Matrix M(phi);
  std::vector<std::string> trace;
  trace.push_back("closure");
  const bool has_top = top(P).has_value();
  const bool has_bottom = bottom(P).has_value();

  while (true) {
    const std::size_t m = M.size();

    // (ii) two comparable universals refute the sentence on a nontrivial poset
    for (std::size_t x = 0; x < m; ++x) {
      if (!M.universal(x)) continue;
      for (std::size_t x2 = 0; x2 < m; ++x2)
        if (x2 != x && M.universal(x2) && M.rows[x].test(x2))
          return ReduceOutcome::rejected("universals-comparable", std::move(trace));
    }

    // (i) collapse one nontrivial cycle (mutual-comparability class)
    bool restarted = false;
    for (std::size_t p = 0; p < m && !restarted; ++p) {
      Bits cyc = M.rows[p] & M.down_of(p);
      if (cyc.count() < 2) continue;
      // at most one universal in the class, else (ii) would have fired
      std::size_t keep = cyc.first();
      bool has_universal = false;
      cyc.for_each([&](std::size_t z) {
        if (M.universal(z)) {
          has_universal = true;
          keep = z;
        }
      });
      if (has_universal) {
        for (std::size_t y = cyc.first(); y < keep; y = cyc.next(y + 1))
          if (!M.universal(y))
            return ReduceOutcome::rejected("equality-cycle", std::move(trace));
      }
      Bits drop = cyc;
      drop.reset(keep);
      trace.push_back("collapse-cycle keep=" + M.vars[keep].name + " drop=" +
                      M.name_list(drop));
      M.restrict_away(drop);
      restarted = true;
    }
    if (restarted) continue;

    // (iv) existential quantified before a comparable universal
    for (std::size_t y = 0; y < m && !restarted; ++y) {
      if (M.universal(y)) continue;
      for (std::size_t x = y + 1; x < m; ++x) {
        if (!M.universal(x)) continue;
        if (M.rows[x].test(y)) {  // x <=_M y: only a top can witness y
          if (!has_top)
            return ReduceOutcome::rejected("needs-top", std::move(trace));
          Bits drop = M.rows[y];  // matrix upset of y
          trace.push_back("drop-upset y=" + M.vars[y].name + " vars=" +
                          M.name_list(drop));
          M.restrict_away(drop);
          restarted = true;
          break;
        }
        if (M.rows[y].test(x)) {  // y <=_M x: dual, needs a bottom
          if (!has_bottom)
            return ReduceOutcome::rejected("needs-bottom", std::move(trace));
          Bits drop = M.down_of(y);  // matrix downset of y
          trace.push_back("drop-downset y=" + M.vars[y].name + " vars=" +
                          M.name_list(drop));
          M.restrict_away(drop);
          restarted = true;
          break;
        }
      }
    }
    if (restarted) continue;

    // (iii) distinct universals sharing a matrix upset or downset element
    for (std::size_t x = 0; x < m && !restarted; ++x) {
      if (!M.universal(x)) continue;
      for (std::size_t x2 = x + 1; x2 < m && !restarted; ++x2) {
        if (!M.universal(x2)) continue;
        Bits shared_up = M.rows[x] & M.rows[x2];
        if (shared_up.any()) {
          if (!has_top)
            return ReduceOutcome::rejected("needs-top", std::move(trace));
          std::size_t y = shared_up.first();
          Bits drop = M.rows[y];
          trace.push_back("drop-upset y=" + M.vars[y].name + " vars=" +
                          M.name_list(drop));
          M.restrict_away(drop);
          restarted = true;
          break;
        }
        Bits shared_down = M.down_of(x) & M.down_of(x2);
        if (shared_down.any()) {
          if (!has_bottom)
            return ReduceOutcome::rejected("needs-bottom", std::move(trace));
          std::size_t y = shared_down.first();
          Bits drop = M.down_of(y);
          trace.push_back("drop-downset y=" + M.vars[y].name + " vars=" +
                          M.name_list(drop));
          M.restrict_away(drop);
          restarted = true;
          break;
        }
      }
    }
    if (restarted) continue;
    break;
  }

  ReduceOutcome out;
  out.decided = false;
  out.reduced = ReducedSentence{M.to_sentence()};
  out.trace = std::move(trace);
  return out;
}

// Fast path: a poset with an element between all minimal and all maximal
// elements satisfies every reduced sentence.
inline bool hub_accept(const Poset& P, const ReducedSentence&) {
  return hub(P).has_value();
}

// Standalone clause validator; returns a description of the first violated
// clause, or nullopt when the sentence is in reduced form.
inline std::optional<std::string> reduced_form_violation(const Sentence& phi) {
  detail::Matrix M(phi);
  const std::size_t m = M.size();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (u != v && M.rows[u].test(v) && M.rows[v].test(u))
        return "(i) matrix closure is not antisymmetric: " + M.vars[u].name + ", " +
               M.vars[v].name;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t x2 = 0; x2 < m; ++x2)
      if (x != x2 && M.universal(x) && M.universal(x2) && M.rows[x].test(x2))
        return "(ii) comparable universals: " + M.vars[x].name + " <= " +
               M.vars[x2].name;
  for (std::size_t x = 0; x < m; ++x) {
    if (!M.universal(x)) continue;
    for (std::size_t x2 = x + 1; x2 < m; ++x2) {
      if (!M.universal(x2)) continue;
      if ((M.rows[x] & M.rows[x2]).any())
        return "(iii) shared matrix upset: " + M.vars[x].name + ", " + M.vars[x2].name;
      if ((M.down_of(x) & M.down_of(x2)).any())
        return "(iii) shared matrix downset: " + M.vars[x].name + ", " +
               M.vars[x2].name;
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (!M.universal(x)) continue;
    Bits comparable = M.rows[x] | M.down_of(x);
    comparable.reset(x);
    for (std::size_t y = comparable.first(); y < x; y = comparable.next(y + 1))
      return "(iv) existential " + M.vars[y].name +
             " precedes comparable universal " + M.vars[x].name;
  }
  return std::nullopt;
}

}  // namespace pomc
