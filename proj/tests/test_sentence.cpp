#include <catch2/catch_amalgamated.hpp>

#include "pomc/generators.hpp"
#include "pomc/semantics.hpp"
#include "pomc/sentence.hpp"
#include "test_util.hpp"

using namespace pomc;
using namespace testutil;

TEST_CASE("parse quantifier prefix and atoms") {
  Sentence phi = parse_sentence("forall x exists y : x <= y");
  REQUIRE(phi.vars.size() == 2);
  REQUIRE(phi.vars[0].name == "x");
  REQUIRE(phi.vars[0].q == Quantifier::Universal);
  REQUIRE(phi.vars[1].q == Quantifier::Existential);
  REQUIRE(phi.atoms == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("equality atoms expand to both inequalities") {
  Sentence phi = parse_sentence("exists y forall x : x = y");
  REQUIRE(phi.vars[0].name == "y");
  REQUIRE(phi.vars[1].name == "x");
  REQUIRE(phi.atoms ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}});
}

TEST_CASE("parser errors") {
  REQUIRE_THROWS_AS(parse_sentence("forall x : y <= x"), UnboundVariableError);
  REQUIRE_THROWS_AS(parse_sentence("forall x exists x : x <= x"),
                    DuplicateVariableError);
  REQUIRE_THROWS_AS(parse_sentence("forall x y <= x"), SyntaxError);
  REQUIRE_THROWS_AS(parse_sentence("forall x : x < x"), SyntaxError);
  REQUIRE_THROWS_AS(parse_sentence("forall : x <= x"), SyntaxError);
  try {
    parse_sentence("forall x : x ! x");
  } catch (const SyntaxError& e) {
    REQUIRE(e.position == 13);
  }
}

TEST_CASE("parsing is whitespace-insensitive and accepts comments") {
  Sentence a = parse_sentence("forall x exists y:x<=y&y<=y");
  Sentence b = parse_sentence("forall x # prefix\nexists y : x <= y & y <= y");
  REQUIRE(sentence_to_string(a) == sentence_to_string(b));
  Sentence empty = parse_sentence("forall x : true");
  REQUIRE(empty.atoms.empty());
  // grouped variables after one quantifier
  Sentence grouped = parse_sentence("forall x1 x2 exists y : y <= x1 & y <= x2");
  REQUIRE(grouped.vars.size() == 3);
  REQUIRE(grouped.vars[1].q == Quantifier::Universal);
}

TEST_CASE("restrict takes the induced subsentence") {
  Sentence phi = parse_sentence("forall x exists y exists w : x <= y & y <= w");
  Sentence r = restrict_names(phi, {"x", "y"});
  REQUIRE(r.vars.size() == 2);
  REQUIRE(sentence_to_string(r) == "forall x exists y : x <= y");
  Sentence all = restrict_names(phi, {"x", "y", "w"});
  REQUIRE(sentence_to_string(all) == sentence_to_string(phi));
  Sentence none = restrict(phi, std::set<std::size_t>{});
  REQUIRE(none.vars.empty());
  REQUIRE(brute_force_check(bowtie(), none));
}

TEST_CASE("brute-force game on the bowtie") {
  Poset B = bowtie();
  REQUIRE(brute_force_check(B, parse_sentence("forall x exists y : y <= x")));
  REQUIRE_FALSE(brute_force_check(B, parse_sentence("exists y forall x : x <= y")));
  REQUIRE(brute_force_check(chain(1), parse_sentence("forall x exists y : x <= y")));
}

TEST_CASE("relativized check against brute force and the bowtie domains") {
  Poset B = bowtie();
  Sentence phi = parse_sentence("forall x exists y : y <= x");

  RelativizedDomains full = full_domains(B, phi);
  REQUIRE(relativized_check(B, phi, full) == brute_force_check(B, phi));

  RelativizedDomains doms;
  doms.universal_domain = B.full();
  Subset dy(4);
  dy.set(0);
  dy.set(2);
  doms.existential_domains.emplace(1, dy);
  REQUIRE(relativized_check(B, phi, doms));

  Subset d1(4);
  d1.set(1);
  doms.existential_domains[1] = d1;
  REQUIRE_FALSE(relativized_check(B, phi, doms));
}

TEST_CASE("empty domains are rejected") {
  Poset B = bowtie();
  Sentence phi = parse_sentence("forall x exists y : y <= x");
  RelativizedDomains doms;
  doms.universal_domain = B.full();
  doms.existential_domains.emplace(1, Subset(4));
  REQUIRE_THROWS_AS(relativized_check(B, phi, doms), EmptyDomainError);
  RelativizedDomains missing;
  missing.universal_domain = B.full();
  REQUIRE_THROWS_AS(relativized_check(B, phi, missing), EmptyDomainError);
}

TEST_CASE("print-parse round trip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Sentence phi = random_sentence(1 + seed % 6, seed % 9, seed);
    Sentence back = parse_sentence(sentence_to_string(phi));
    REQUIRE(back.atoms == phi.atoms);
    REQUIRE(back.vars.size() == phi.vars.size());
    for (std::size_t i = 0; i < phi.vars.size(); ++i) {
      REQUIRE(back.vars[i].name == phi.vars[i].name);
      REQUIRE(back.vars[i].q == phi.vars[i].q);
    }
  }
}

TEST_CASE("truth is preserved under restriction") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t seed = 0;
    for_each_labeled_poset(n, [&](const Poset& P) {
      Sentence phi = random_sentence(1 + seed % 5, seed % 7, seed);
      ++seed;
      if (!brute_force_check(P, phi)) return;
      detail::Rng rng(seed);
      std::set<std::size_t> keep;
      for (std::size_t v = 0; v < phi.vars.size(); ++v)
        if (rng.chance(0.6)) keep.insert(v);
      REQUIRE(brute_force_check(P, restrict(phi, keep)));
      ++checked;
    });
  }
  REQUIRE(checked > 50);
}

TEST_CASE("relativized with full domains equals brute force on small posets") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t seed = 100;
    for_each_labeled_poset(n, [&](const Poset& P) {
      if (n == 4 && seed % 7 != 0) {  // sample the 219 four-element posets
        ++seed;
        return;
      }
      for (int s = 0; s < 3; ++s) {
        Sentence phi = random_sentence(1 + (seed + s) % 5, (seed + s) % 6, seed + s);
        RelativizedDomains full = full_domains(P, phi);
        REQUIRE(relativized_check(P, phi, full) == brute_force_check(P, phi));
      }
      ++seed;
    });
  }
}

TEST_CASE("memoized recursion matches the unmemoized reference") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Poset P = random_poset_bounded_width(2 + seed % 6, 1 + seed % 3, 0.3, seed);
    Sentence phi = random_sentence(1 + seed % 5, seed % 8, seed * 31 + 1);
    RelativizedDomains doms;
    doms.universal_domain = P.full();
    // random nonempty existential domains
    detail::Rng rng(seed * 7 + 3);
    for (std::size_t i = 0; i < phi.vars.size(); ++i) {
      if (phi.vars[i].q != Quantifier::Existential) continue;
      Subset d(P.size());
      for (std::size_t p = 0; p < P.size(); ++p)
        if (rng.chance(0.5)) d.set(p);
      if (d.none()) d.set(rng.below(static_cast<std::uint32_t>(P.size())));
      doms.existential_domains.emplace(i, d);
    }
    REQUIRE(relativized_check(P, phi, doms) == reference_relativized(P, phi, doms));
  }
}
