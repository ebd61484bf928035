#pragma once

// End-to-end decision procedure: reduce, take the hub fast path when the
// poset has one, otherwise stratify the poset up to level b+1 and decide the
// relativized game with universal variables ranging over D = P_{b+1} and
// each existential over the level set matching its side and depth.

#include <chrono>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pomc/depth.hpp"
#include "pomc/errors.hpp"
#include "pomc/poset.hpp"
#include "pomc/reduce.hpp"
#include "pomc/semantics.hpp"
#include "pomc/sentence.hpp"

namespace pomc {

enum class Method { Brute, ReducedDecided, Hub, FptGame };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::ReducedDecided: return "reduced-decided";
    case Method::Hub: return "hub";
    case Method::FptGame: return "fpt-game";
  }
  return "?";
}

struct CheckStats {
  std::size_t vars_after_reduction = 0;
  std::size_t b = 0;
  std::size_t domain_size = 0;  // |D|
  std::vector<std::pair<std::string, std::size_t>> existential_domain_sizes;
  std::size_t memo_states = 0;
  double wall_ms = 0.0;
};

struct CheckResult {
  bool truth = false;
  Method method = Method::Brute;
  std::optional<CheckStats> stats;  // present iff method == FptGame
};

inline CheckResult check(const Poset& P, const Sentence& phi) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  if (P.size() == 1) return {brute_force_check(P, phi), Method::Brute, std::nullopt};

  ReduceOutcome outcome = reduce(P, phi);
  if (outcome.decided) return {outcome.value, Method::ReducedDecided, std::nullopt};
  if (hub_accept(P, outcome.reduced)) return {true, Method::Hub, std::nullopt};

  const Sentence& red = outcome.reduced.inner;
  VariableDepths vd = variable_depths(outcome.reduced);
  LevelSets levels = level_sets(P, vd.b + 1);

  RelativizedDomains doms;
  doms.universal_domain = levels.level(vd.b + 1);
  CheckStats stats;
  stats.vars_after_reduction = red.var_count();
  stats.b = vd.b;
  stats.domain_size = doms.universal_domain.count();
  for (const auto& e : vd.existentials) {
    Subset dom = e.side == Side::Lower ? levels.L[e.depth] : levels.U[e.depth];
    if (!dom.is_subset_of(doms.universal_domain))
      throw Error("internal: existential domain escapes the universal domain");
    stats.existential_domain_sizes.emplace_back(red.vars[e.var].name, dom.count());
    doms.existential_domains.emplace(e.var, std::move(dom));
  }

  RelativizedChecker checker(P, red, doms);
  bool truth = checker.run();
  stats.memo_states = checker.memo_states();
  stats.wall_ms =
      std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  return {truth, Method::FptGame, stats};
}

// Brute-force guard: the full game tree has size n^vars, capped at 2^budget.
inline constexpr double kDefaultBruteBudgetBits = 26.7;

inline bool within_brute_budget(const Poset& P, const Sentence& phi,
                                double budget_bits = kDefaultBruteBudgetBits) {
  return static_cast<double>(phi.var_count()) * std::log2(static_cast<double>(P.size())) <=
         budget_bits;
}

inline std::pair<CheckResult, bool> check_both(
    const Poset& P, const Sentence& phi,
    double budget_bits = kDefaultBruteBudgetBits) {
  if (!within_brute_budget(P, phi, budget_bits))
    throw BudgetExceededError("instance too large for the brute-force oracle: " +
                              std::to_string(phi.var_count()) + " vars on " +
                              std::to_string(P.size()) + " elements");
  CheckResult fpt = check(P, phi);
  bool brute = brute_force_check(P, phi);
  return {fpt, brute};
}

}  // namespace pomc
