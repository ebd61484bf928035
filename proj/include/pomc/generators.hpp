#pragma once

// Instance generators: the bowtie constant-elimination reduction, the family
// sentences phi_k with their upper-bound characterization, the hitting-set
// reductions to depth-2 and cover-degree-3 posets, and seeded random/
// exhaustive corpora for cross-validation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pomc/bits.hpp"
#include "pomc/errors.hpp"
#include "pomc/hypergraph.hpp"
#include "pomc/poset.hpp"
#include "pomc/sentence.hpp"

namespace pomc {

namespace detail {

// mt19937 with modulo sampling keeps generated corpora identical across
// standard libraries.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(static_cast<std::uint32_t>(seed)) {}
  std::uint32_t below(std::uint32_t m) { return m ? eng() % m : 0; }
  bool chance(double p) { return eng() < p * 4294967296.0; }
  std::mt19937 eng;
};

}  // namespace detail

// The four-element bowtie: two minimal elements each below both maximal ones.
inline Poset bowtie() {
  return Poset::from_order_pairs(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
}

// ---- existential sentences with bowtie constants --------------------------

struct ExistentialSentence {
  struct Term {
    bool is_constant;
    std::size_t index;  // constant 0..3 or variable index
  };
  std::vector<std::string> vars;
  std::vector<std::pair<Term, Term>> atoms;

  static Term constant(std::size_t c) { return {true, c}; }
  static Term variable(std::size_t v) { return {false, v}; }
};

// Truth of an existential conjunctive sentence on the bowtie with the
// constants pinned to 0..3.
inline bool bowtie_existential_check(const ExistentialSentence& psi) {
  const Poset B = bowtie();
  std::vector<std::size_t> val(psi.vars.size(), 0);
  auto term_value = [&](const ExistentialSentence::Term& t) {
    return t.is_constant ? t.index : val[t.index];
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == psi.vars.size()) {
      for (const auto& [a, b] : psi.atoms)
        if (!B.leq(term_value(a), term_value(b))) return false;
      return true;
    }
    for (std::size_t v = 0; v < 4; ++v) {
      val[i] = v;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// Simulates the four constants by universally quantified variables: the
// output sentence holds on the bowtie iff psi holds with constants pinned.
inline Sentence bowtie_reduce(const ExistentialSentence& psi) {
  std::vector<std::string> fresh;
  for (const char* base : {"y", "x", "w"})
    for (int i = 0; i < 4; ++i) fresh.push_back(std::string(base) + std::to_string(i));

  auto taken = [&](const std::string& name) {
    return std::find(fresh.begin(), fresh.end(), name) != fresh.end();
  };
  std::vector<std::string> psi_names;
  for (const auto& v : psi.vars) {
    std::string name = v;
    while (taken(name) ||
           std::find(psi_names.begin(), psi_names.end(), name) != psi_names.end())
      name += "'";
    psi_names.push_back(name);
  }

  Sentence phi;
  for (int i = 0; i < 4; ++i) phi.vars.push_back({fresh[i], Quantifier::Universal});
  for (int i = 4; i < 12; ++i) phi.vars.push_back({fresh[i], Quantifier::Existential});
  for (const auto& name : psi_names) phi.vars.push_back({name, Quantifier::Existential});

  const std::size_t y0 = 0, x0 = 4, w0 = 8, psi0 = 12;
  for (std::size_t j : {0u, 2u})
    for (std::size_t i : {1u, 3u}) phi.add_atom(w0 + j, w0 + i);  // {w0,w2} <= {w1,w3}
  for (std::size_t j : {0u, 2u}) {
    phi.add_atom(x0 + j, y0 + j);
    phi.add_atom(x0 + j, w0 + j);
  }
  for (std::size_t j : {1u, 3u}) {
    phi.add_atom(y0 + j, x0 + j);
    phi.add_atom(w0 + j, x0 + j);
  }
  auto term_index = [&](const ExistentialSentence::Term& t) {
    return t.is_constant ? w0 + t.index : psi0 + t.index;
  };
  for (const auto& [a, b] : psi.atoms) phi.add_atom(term_index(a), term_index(b));
  return phi;
}

// ---- the phi_k family ------------------------------------------------------

// forall x1..xk exists y1..yk exists w ( /\ y_i <= x_i  /\  /\ y_i <= w )
inline Sentence phi_k(std::size_t k) {
  if (k < 1) throw Error("phi_k requires k >= 1");
  Sentence phi;
  for (std::size_t i = 1; i <= k; ++i)
    phi.vars.push_back({"x" + std::to_string(i), Quantifier::Universal});
  for (std::size_t i = 1; i <= k; ++i)
    phi.vars.push_back({"y" + std::to_string(i), Quantifier::Existential});
  phi.vars.push_back({"w", Quantifier::Existential});
  const std::size_t w = 2 * k;
  for (std::size_t i = 0; i < k; ++i) {
    phi.add_atom(k + i, i);  // y_i <= x_i
    phi.add_atom(k + i, w);  // y_i <= w
  }
  return phi;
}

// P |= phi_k iff every k minimal elements have a common upper bound; subsets
// of size min(k, |min P|) suffice since repetitions are subsumed.
inline bool upper_bound_property(const Poset& P, std::size_t k) {
  if (k < 1) throw Error("upper_bound_property requires k >= 1");
  std::vector<std::size_t> mins = minimals(P, P.full()).to_indices();
  const std::size_t pick = std::min(k, mins.size());
  std::vector<std::size_t> choice;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (choice.size() == pick) {
      Bits common = P.full();
      for (std::size_t p : choice) common &= P.up_row(p);
      return common.any();
    }
    for (std::size_t i = from; i < mins.size(); ++i) {
      choice.push_back(mins[i]);
      bool ok = self(self, i + 1);
      choice.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

// ---- hitting-set reductions ------------------------------------------------

namespace detail {

inline std::vector<std::string> unique_names(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (auto& n : names) {
    while (!seen.insert(n).second) n += "'";
  }
  return names;
}

}  // namespace detail

// Two-layer poset: vertices below exactly the edges they are absent from.
inline Poset hypergraph_to_depth2(const Hypergraph& H) {
  if (!H.well_formed())
    throw IllFormedHypergraphError(
        "construction needs every vertex absent from some edge and every edge "
        "excluding some vertex");
  std::vector<std::string> names = H.vertices;
  for (const auto& e : H.edges) names.push_back(e.name);
  names = detail::unique_names(std::move(names));
  const std::size_t nv = H.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t h = 0; h < nv; ++h)
    H.notin_vertex(h).for_each([&](std::size_t e) { pairs.emplace_back(h, nv + e); });
  return Poset::from_order_pairs(nv + H.edge_count(), pairs, std::move(names));
}

// Cover-degree-3 poset: a binary out-tree under each vertex reaching one leaf
// per absent edge, a binary in-tree over each edge fed by one leaf per
// excluded vertex, and a cover edge joining matching leaves.
inline Poset hypergraph_to_cover3(const Hypergraph& H) {
  if (!H.well_formed())
    throw IllFormedHypergraphError(
        "construction needs every vertex absent from some edge and every edge "
        "excluding some vertex");
  const std::size_t nv = H.vertex_count();
  const std::size_t ne = H.edge_count();

  std::vector<std::string> names = H.vertices;
  for (const auto& e : H.edges) names.push_back(e.name);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  auto new_node = [&](std::string name) {
    names.push_back(std::move(name));
    return names.size() - 1;
  };

  // leaf element ids, keyed by (vertex, edge) incidence
  std::vector<std::vector<std::size_t>> out_leaf(nv, std::vector<std::size_t>(ne, 0));
  std::vector<std::vector<std::size_t>> in_leaf(nv, std::vector<std::size_t>(ne, 0));

  // Balanced left-leaning binary tree over the sorted item list; edges are
  // oriented root-to-leaf when down is true, leaf-to-root otherwise.
  auto build_tree = [&](std::size_t root, const std::vector<std::size_t>& items,
                        bool down, const std::string& prefix,
                        const std::function<std::size_t(std::size_t)>& make_leaf) {
    std::size_t counter = 0;
    auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> std::size_t {
      if (hi - lo == 1) return make_leaf(items[lo]);
      std::size_t node = new_node(prefix + "/i" + std::to_string(counter++));
      std::size_t mid = lo + (hi - lo + 1) / 2;
      std::size_t a = self(self, lo, mid);
      std::size_t b = self(self, mid, hi);
      pairs.emplace_back(down ? node : a, down ? a : node);
      pairs.emplace_back(down ? node : b, down ? b : node);
      return node;
    };
    if (items.size() == 1) {
      std::size_t leaf = make_leaf(items[0]);
      pairs.emplace_back(down ? root : leaf, down ? leaf : root);
      return;
    }
    std::size_t mid = (items.size() + 1) / 2;
    std::size_t a = rec(rec, 0, mid);
    std::size_t b = rec(rec, mid, items.size());
    pairs.emplace_back(down ? root : a, down ? a : root);
    pairs.emplace_back(down ? root : b, down ? b : root);
  };

  for (std::size_t h = 0; h < nv; ++h) {
    std::vector<std::size_t> items = H.notin_vertex(h).to_indices();
    build_tree(h, items, true, H.vertices[h], [&](std::size_t e) {
      out_leaf[h][e] = new_node(H.vertices[h] + "/" + H.edges[e].name);
      return out_leaf[h][e];
    });
  }
  for (std::size_t e = 0; e < ne; ++e) {
    std::vector<std::size_t> items = H.notin_edge(e).to_indices();
    build_tree(nv + e, items, false, H.edges[e].name, [&](std::size_t h) {
      in_leaf[h][e] = new_node(H.edges[e].name + "/" + H.vertices[h]);
      return in_leaf[h][e];
    });
  }
  for (std::size_t h = 0; h < nv; ++h)
    H.notin_vertex(h).for_each(
        [&](std::size_t e) { pairs.emplace_back(out_leaf[h][e], in_leaf[h][e]); });

  names = detail::unique_names(std::move(names));
  const std::size_t total = names.size();
  return Poset::from_order_pairs(total, pairs, std::move(names));
}

// Exhaustive search over vertex subsets of size <= k intersecting every edge.
inline bool hitting_set_exists(const Hypergraph& H, std::size_t k) {
  const std::size_t nv = H.vertex_count();
  std::vector<std::size_t> choice;
  auto hits_all = [&]() {
    for (const auto& e : H.edges) {
      bool hit = false;
      for (std::size_t v : choice)
        if (e.members.test(v)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (hits_all()) return true;
    if (choice.size() == k) return false;
    for (std::size_t v = from; v < nv; ++v) {
      choice.push_back(v);
      if (self(self, v + 1)) return true;
      choice.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

// ---- seeded random corpora --------------------------------------------------

// Partitions the elements into w chains ordered by index and sprinkles
// index-increasing cross-chain pairs; any antichain then meets each chain at
// most once, so width <= w.
inline Poset random_poset_bounded_width(std::size_t n, std::size_t w, double density,
                                        std::uint64_t seed) {
  if (n < 1 || w < 1) throw Error("random_poset_bounded_width needs n >= 1, w >= 1");
  detail::Rng rng(seed);
  std::vector<std::size_t> chain_of(n);
  for (std::size_t i = 0; i < n; ++i)
    chain_of[i] = rng.below(static_cast<std::uint32_t>(w));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> last(w, ~std::size_t(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (last[chain_of[i]] != ~std::size_t(0)) pairs.emplace_back(last[chain_of[i]], i);
    last[chain_of[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (chain_of[i] != chain_of[j] && rng.chance(density)) pairs.emplace_back(i, j);
  return Poset::from_order_pairs(n, pairs);
}

inline Sentence random_sentence(std::size_t v, std::size_t a, std::uint64_t seed) {
  if (v < 1) throw Error("random_sentence needs at least one variable");
  detail::Rng rng(seed);
  Sentence phi;
  for (std::size_t i = 0; i < v; ++i)
    phi.vars.push_back({"v" + std::to_string(i),
                        rng.chance(0.5) ? Quantifier::Universal : Quantifier::Existential});
  a = std::min(a, v * v);
  std::set<std::pair<std::size_t, std::size_t>> used;
  while (used.size() < a) {
    std::size_t x = rng.below(static_cast<std::uint32_t>(v));
    std::size_t y = rng.below(static_cast<std::uint32_t>(v));
    if (used.emplace(x, y).second) phi.add_atom(x, y);
  }
  return phi;
}

inline ExistentialSentence random_existential_sentence(std::size_t v, std::size_t a,
                                                       std::uint64_t seed) {
  if (v < 1) throw Error("random_existential_sentence needs at least one variable");
  detail::Rng rng(seed);
  ExistentialSentence psi;
  for (std::size_t i = 0; i < v; ++i) psi.vars.push_back("u" + std::to_string(i));
  auto term = [&]() {
    if (rng.chance(0.35)) return ExistentialSentence::constant(rng.below(4));
    return ExistentialSentence::variable(rng.below(static_cast<std::uint32_t>(v)));
  };
  for (std::size_t i = 0; i < a; ++i) psi.atoms.emplace_back(term(), term());
  return psi;
}

inline Hypergraph random_well_formed_hypergraph(std::size_t nv, std::size_t ne,
                                                std::uint64_t seed) {
  // a single edge can never leave every vertex absent somewhere
  if (nv < 2 || ne < 2)
    throw Error("random_well_formed_hypergraph needs nv >= 2, ne >= 2");
  detail::Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Hypergraph H;
    for (std::size_t i = 0; i < nv; ++i) H.vertices.push_back(std::to_string(i));
    for (std::size_t e = 0; e < ne; ++e) {
      Hypergraph::Edge edge{"e" + std::to_string(e), Bits(nv)};
      for (std::size_t v = 0; v < nv; ++v)
        if (rng.chance(0.4)) edge.members.set(v);
      if (edge.members.none()) edge.members.set(rng.below(static_cast<std::uint32_t>(nv)));
      if (edge.members.count() == nv)
        edge.members.reset(rng.below(static_cast<std::uint32_t>(nv)));
      H.edges.push_back(std::move(edge));
    }
    if (H.well_formed()) return H;
  }
  throw Error("failed to sample a well-formed hypergraph");
}

// ---- exhaustive enumeration of labeled posets -------------------------------

// Backtracks over the ordered pairs in lexicographic order, keeping the
// accepted strict relation transitively closed; a pair already implied by
// closure cannot be declined, and a pair whose closure consequences hit a
// declined pair or form a cycle cannot be accepted.
inline void for_each_labeled_poset(std::size_t n,
                                   const std::function<void(const Poset&)>& fn) {
  if (n < 1 || n > 6) throw Error("for_each_labeled_poset supports 1 <= n <= 6");
  std::vector<std::pair<std::size_t, std::size_t>> pl;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pl.emplace_back(i, j);

  std::vector<std::uint8_t> yes(n, 0), no(n, 0);  // strict relation / declined, row bitmasks

  auto emit = [&]() {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (yes[i] & (1u << j)) pairs.emplace_back(i, j);
    fn(Poset::from_order_pairs(n, pairs));
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == pl.size()) {
      emit();
      return;
    }
    auto [i, j] = pl[k];
    if (yes[i] & (1u << j)) {  // already implied
      self(self, k + 1);
      return;
    }
    // decline
    no[i] |= (1u << j);
    self(self, k + 1);
    no[i] &= ~(1u << j);
    // accept, propagating closure: everything reaching i now reaches past j
    if (!(yes[j] & (1u << i)) && !(no[i] & (1u << j))) {
      std::vector<std::uint8_t> saved = yes;
      std::uint8_t sources = static_cast<std::uint8_t>(1u << i);
      for (std::size_t a = 0; a < n; ++a)
        if (yes[a] & (1u << i)) sources |= (1u << a);
      std::uint8_t targets = static_cast<std::uint8_t>((1u << j) | yes[j]);
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        if (!(sources & (1u << a))) continue;
        std::uint8_t added = targets & ~yes[a];
        if (added & no[a]) ok = false;          // contradicts a declined pair
        if (added & (1u << a)) ok = false;      // would close a cycle
        for (std::size_t b = 0; b < n && ok; ++b)
          if ((added & (1u << b)) && (yes[b] & (1u << a))) ok = false;  // antisymmetry
        yes[a] |= added;
      }
      if (ok) self(self, k + 1);
      yes = std::move(saved);
    }
  };
  rec(rec, 0);
}

inline std::vector<Poset> enumerate_posets(std::size_t n) {
  std::vector<Poset> out;
  for_each_labeled_poset(n, [&](const Poset& P) { out.push_back(P); });
  return out;
}

}  // namespace pomc
