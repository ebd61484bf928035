#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "pomc/generators.hpp"
#include "pomc/solver.hpp"
#include "test_util.hpp"

using namespace pomc;
using namespace testutil;

TEST_CASE("phi_2 holds on the bowtie via the relativized game") {
  CheckResult r = check(bowtie(), phi_k(2));
  REQUIRE(r.truth);
  REQUIRE(r.method == Method::FptGame);
  REQUIRE(r.stats.has_value());
  REQUIRE(r.stats->b == 1);
  REQUIRE(brute_force_check(bowtie(), phi_k(2)));
}

TEST_CASE("bowtie minus one cover still satisfies phi_2") {
  // 1 remains above both minimal elements, so every pair of minimals is
  // bounded; the oracle fixes the expected value
  Poset P = Poset::from_order_pairs(4, {{0, 1}, {2, 1}, {2, 3}});
  bool oracle = brute_force_check(P, phi_k(2));
  REQUIRE(oracle == true);
  CheckResult r = check(P, phi_k(2));
  REQUIRE(r.truth == oracle);
}

TEST_CASE("a top element makes every surviving sentence true") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Poset base = random_poset_bounded_width(2 + seed % 6, 1 + seed % 3, 0.3, seed);
    // adjoin a fresh top
    std::vector<std::pair<std::size_t, std::size_t>> pairs = base.cover_pairs();
    for (std::size_t p = 0; p < base.size(); ++p) pairs.emplace_back(p, base.size());
    Poset P = Poset::from_order_pairs(base.size() + 1, pairs);
    Sentence phi = random_sentence(1 + seed % 5, seed % 7, seed * 3 + 1);
    ReduceOutcome o = reduce(P, phi);
    if (o.decided) continue;
    CheckResult r = check(P, phi);
    REQUIRE(r.truth);
    REQUIRE(r.method == Method::Hub);
    REQUIRE(brute_force_check(P, phi));
  }
}

TEST_CASE("check_both agrees on every labeled 3-element poset") {
  std::vector<Sentence> corpus;
  for (std::uint64_t s = 0; s < 50; ++s)
    corpus.push_back(random_sentence(1 + s % 5, s % 7, 900 + s));
  for_each_labeled_poset(3, [&](const Poset& P) {
    for (const auto& phi : corpus) {
      auto [fpt, brute] = check_both(P, phi);
      REQUIRE(fpt.truth == brute);
    }
  });
}

TEST_CASE("check_both on the named instances") {
  auto [fpt, brute] = check_both(bowtie(), phi_k(2));
  REQUIRE(fpt.truth);
  REQUIRE(brute);
  auto [f2, b2] = check_both(chain(2), parse_sentence("forall x forall x2 : x <= x2"));
  REQUIRE_FALSE(f2.truth);
  REQUIRE_FALSE(b2);
  REQUIRE(f2.method == Method::ReducedDecided);
}

TEST_CASE("the brute-force guard trips beyond forty-ish elements") {
  Poset small = random_poset_bounded_width(40, 2, 0.1, 5);
  REQUIRE(within_brute_budget(small, phi_k(2)));
  Poset big = random_poset_bounded_width(125, 2, 0.1, 5);
  REQUIRE_FALSE(within_brute_budget(big, phi_k(2)));
  REQUIRE_THROWS_AS(check_both(big, phi_k(2)), BudgetExceededError);
}

TEST_CASE("single-element posets take the brute path") {
  CheckResult r = check(chain(1), parse_sentence("forall x exists y : x <= y"));
  REQUIRE(r.truth);
  REQUIRE(r.method == Method::Brute);
  REQUIRE_FALSE(r.stats.has_value());
}

TEST_CASE("upper-side witnesses survive on antichains") {
  // regression guard for the level-set sides: on an antichain every element
  // is minimal, yet an upper-side existential must still find its witness
  Poset A = antichain(2);
  Sentence phi = parse_sentence("forall x exists y : x <= y");
  CheckResult r = check(A, phi);
  REQUIRE(r.truth);
  REQUIRE(brute_force_check(A, phi));
}

TEST_CASE("oracle equivalence over all small posets") {
  std::vector<Sentence> corpus;
  for (std::uint64_t s = 0; s < 50; ++s)
    corpus.push_back(random_sentence(1 + s % 6, s % 8, 1700 + s));
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t idx = 0;
    for_each_labeled_poset(n, [&](const Poset& P) {
      if (n == 4 && ++idx % 5 != 0) return;  // sample; the acceptance run is full
      for (const auto& phi : corpus)
        REQUIRE(check(P, phi).truth == brute_force_check(P, phi));
    });
  }
}

TEST_CASE("oracle equivalence on random wider instances") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Poset P = random_poset_bounded_width(2 + seed % 7, 1 + seed % 4, 0.25, seed);
    Sentence phi = random_sentence(1 + seed % 6, seed % 8, seed * 17 + 3);
    CheckResult r = check(P, phi);
    REQUIRE(r.truth == brute_force_check(P, phi));
  }
}

TEST_CASE("existential domains sit inside the universal domain") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Poset P = random_poset_bounded_width(8 + seed % 10, 2, 0.2, seed);
    CheckResult r = check(P, phi_k(2));
    if (r.method != Method::FptGame) continue;
    for (const auto& [name, size] : r.stats->existential_domain_sizes)
      REQUIRE(size <= r.stats->domain_size);
  }
}

TEST_CASE("oracle equivalence with depth-two and depth-three chains") {
  // matrix chains below/above the universal push b to 2 and 3, so the
  // relativized game draws on deeper level sets
  const char* texts[] = {
      "forall x exists y exists z : z <= y & y <= x",
      "forall x exists y exists z : x <= y & y <= z",
      "forall x exists y exists z exists u : u <= z & z <= y & y <= x",
      "forall x1 forall x2 exists y1 exists y2 exists z : y1 <= x1 & y2 <= x2 & "
      "z <= y1 & z <= y2",
      "exists z forall x exists y : y <= x & z <= y",
      "forall x exists y exists z exists w : y <= x & y <= z & z <= w",
  };
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Poset P = random_poset_bounded_width(4 + seed % 9, 1 + seed % 3, 0.25,
                                         4'000 + seed);
    for (const char* text : texts) {
      Sentence phi = parse_sentence(text);
      CAPTURE(text, seed);
      REQUIRE(check(P, phi).truth == brute_force_check(P, phi));
    }
  }
}

TEST_CASE("oracle equivalence on posets with deep level structure") {
  // random interiors framed by two bottoms and two tops develop element
  // depths up to 4; the extra isolated point removes the hub (and is both
  // minimal and maximal, exercising the side overlap)
  auto framed_plus_isolated = [](std::size_t k, std::uint64_t seed) {
    Poset inner = random_poset_bounded_width(k, 3, 0.3, seed);
    std::vector<std::pair<std::size_t, std::size_t>> pairs = inner.cover_pairs();
    for (std::size_t p = 0; p < k; ++p) {
      pairs.emplace_back(k, p);
      pairs.emplace_back(k + 1, p);
      pairs.emplace_back(p, k + 2);
      pairs.emplace_back(p, k + 3);
    }
    return Poset::from_order_pairs(k + 5, pairs);
  };
  const char* texts[] = {
      "forall x exists y : y <= x",
      "forall x exists y : x <= y",
      "forall x exists y exists z : z <= y & y <= x",
      "forall x exists y exists z exists u : u <= z & z <= y & y <= x",
      "forall x exists y exists z exists u : x <= y & y <= z & z <= u",
      "forall x1 forall x2 exists y1 exists y2 : y1 <= x1 & x2 <= y2",
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Poset P = framed_plus_isolated(4 + seed % 6, seed);
    REQUIRE_FALSE(hub(P).has_value());
    for (const char* text : texts) {
      Sentence phi = parse_sentence(text);
      CAPTURE(text, seed);
      CheckResult r = check(P, phi);
      REQUIRE(r.method == Method::FptGame);
      REQUIRE(r.truth == brute_force_check(P, phi));
    }
    Sentence rnd = random_sentence(1 + seed % 5, seed % 8, 8'000 + seed);
    REQUIRE(check(P, rnd).truth == brute_force_check(P, rnd));
  }
}

TEST_CASE("repeated checks are deterministic") {
  Poset P = random_poset_bounded_width(30, 2, 0.1, 11);
  CheckResult a = check(P, phi_k(2));
  CheckResult b = check(P, phi_k(2));
  REQUIRE(a.truth == b.truth);
  REQUIRE(a.method == b.method);
  REQUIRE(a.stats.has_value() == b.stats.has_value());
  if (a.stats) {
    REQUIRE(a.stats->memo_states == b.stats->memo_states);
    REQUIRE(a.stats->domain_size == b.stats->domain_size);
    REQUIRE(a.stats->existential_domain_sizes == b.stats->existential_domain_sizes);
  }
}

TEST_CASE("a shared poset supports concurrent checks") {
  Poset P = random_poset_bounded_width(60, 3, 0.1, 23);
  std::vector<Sentence> phis;
  for (std::uint64_t s = 0; s < 8; ++s)
    phis.push_back(random_sentence(1 + s % 5, s % 7, 3'000 + s));
  std::vector<bool> expected;
  for (const auto& phi : phis) expected.push_back(check(P, phi).truth);

  std::vector<int> got(phis.size(), -1);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < phis.size(); ++i)
    workers.emplace_back([&, i] { got[i] = check(P, phis[i]).truth ? 1 : 0; });
  for (auto& w : workers) w.join();
  for (std::size_t i = 0; i < phis.size(); ++i)
    REQUIRE(got[i] == (expected[i] ? 1 : 0));
}
