#pragma once

// Game semantics for conjunctive positive sentences on posets.
//
// brute_force_check runs the Hintikka game by plain alternating recursion
// over the whole universe (exponential in the variable count; intended as a
// small-instance oracle).  relativized_check restricts every variable to a
// designated domain and memoizes on the live-variable projection of the
// partial play, where a variable is live as long as a later atom mentions it.

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "pomc/bits.hpp"
#include "pomc/errors.hpp"
#include "pomc/poset.hpp"
#include "pomc/sentence.hpp"

namespace pomc {

struct RelativizedDomains {
  Subset universal_domain;                      // shared by all universal variables
  std::map<std::size_t, Subset> existential_domains;  // keyed by variable index
};

namespace detail {

// Atoms indexed by their later endpoint, so each is checked exactly when it
// becomes fully assigned.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> atoms_by_later(
    const Sentence& phi) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by(phi.vars.size());
  for (auto [u, v] : phi.atoms) by[std::max(u, v)].emplace_back(u, v);
  return by;
}

}  // namespace detail

inline bool brute_force_check(const Poset& P, const Sentence& phi) {
  const std::size_t m = phi.vars.size();
  if (m == 0) return true;
  auto by_later = detail::atoms_by_later(phi);
  std::vector<std::size_t> val(m);

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return true;
    const bool universal = phi.vars[i].q == Quantifier::Universal;
    for (std::size_t v = 0; v < P.size(); ++v) {
      val[i] = v;
      bool ok = true;
      for (auto [a, b] : by_later[i])
        if (!P.leq(val[a], val[b])) {
          ok = false;
          break;
        }
      if (ok) ok = self(self, i + 1);
      if (universal && !ok) return false;
      if (!universal && ok) return true;
    }
    return universal;
  };
  return rec(rec, 0);
}

class RelativizedChecker {
public:
  RelativizedChecker(const Poset& P, const Sentence& phi, const RelativizedDomains& doms,
                     bool memoize = true)
      : P_(P), phi_(phi), memoize_(memoize) {
    const std::size_t m = phi.vars.size();
    domains_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (phi.vars[i].q == Quantifier::Universal) {
        domains_.push_back(&doms.universal_domain);
      } else {
        auto it = doms.existential_domains.find(i);
        if (it == doms.existential_domains.end())
          throw EmptyDomainError(phi.vars[i].name);
        domains_.push_back(&it->second);
      }
      if (domains_.back()->none()) throw EmptyDomainError(phi.vars[i].name);
    }
    by_later_ = detail::atoms_by_later(phi);
    // live_[i]: variables assigned before position i that still occur in an
    // atom whose later endpoint is at position >= i.
    live_.assign(m + 1, {});
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j < std::min(i, m); ++j)
        for (auto [u, v] : phi.atoms)
          if ((u == j || v == j) && std::max(u, v) >= i) {
            live_[i].push_back(j);
            break;
          }
  }

  bool run() {
    if (phi_.vars.empty()) return true;
    val_.assign(phi_.vars.size(), 0);
    memo_.clear();
    return rec(0);
  }

  std::size_t memo_states() const { return memo_.size(); }

private:
  bool rec(std::size_t i) {
    if (i == phi_.vars.size()) return true;
    std::string key;
    if (memoize_) {
      key.reserve(8 + live_[i].size() * 4);
      append32(key, static_cast<std::uint32_t>(i));
      for (std::size_t j : live_[i]) append32(key, static_cast<std::uint32_t>(val_[j]));
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const bool universal = phi_.vars[i].q == Quantifier::Universal;
    const Subset& dom = *domains_[i];
    bool result = universal;
    for (std::size_t v = dom.first(); v < P_.size(); v = dom.next(v + 1)) {
      val_[i] = v;
      bool ok = true;
      for (auto [a, b] : by_later_[i])
        if (!P_.leq(val_[a], val_[b])) {
          ok = false;
          break;
        }
      if (ok) ok = rec(i + 1);
      if (universal && !ok) {
        result = false;
        break;
      }
      if (!universal && ok) {
        result = true;
        break;
      }
    }
    if (memoize_) memo_.emplace(std::move(key), result);
    return result;
  }

  static void append32(std::string& s, std::uint32_t x) {
    s.push_back(static_cast<char>(x));
    s.push_back(static_cast<char>(x >> 8));
    s.push_back(static_cast<char>(x >> 16));
    s.push_back(static_cast<char>(x >> 24));
  }

  const Poset& P_;
  const Sentence& phi_;
  bool memoize_;
  std::vector<const Subset*> domains_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_later_;
  std::vector<std::vector<std::size_t>> live_;
  std::vector<std::size_t> val_;
  std::unordered_map<std::string, bool> memo_;
};

inline bool relativized_check(const Poset& P, const Sentence& phi,
                              const RelativizedDomains& doms) {
  RelativizedChecker checker(P, phi, doms);
  return checker.run();
}

inline RelativizedDomains full_domains(const Poset& P, const Sentence& phi) {
  RelativizedDomains doms;
  doms.universal_domain = P.full();
  for (std::size_t i = 0; i < phi.vars.size(); ++i)
    if (phi.vars[i].q == Quantifier::Existential)
      doms.existential_domains.emplace(i, P.full());
  return doms;
}

}  // namespace pomc
