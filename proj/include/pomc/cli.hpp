#pragma once

// Command-line surface.  Everything arrives through flags and files; every
// emitted poset/sentence/hypergraph reparses with the matching loader, and
// record output is one key=value line per run.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pomc/depth.hpp"
#include "pomc/errors.hpp"
#include "pomc/generators.hpp"
#include "pomc/hypergraph.hpp"
#include "pomc/poset.hpp"
#include "pomc/poset_io.hpp"
#include "pomc/reduce.hpp"
#include "pomc/semantics.hpp"
#include "pomc/sentence.hpp"
#include "pomc/solver.hpp"

namespace pomc::cli {

namespace detail {

inline std::string optional_name(const Poset& P, const std::optional<std::size_t>& e) {
  return e ? P.name(*e) : "none";
}

inline void print_stats_line(std::ostream& out, const CheckResult& r) {
  out << "method=" << to_string(r.method) << " truth=" << (r.truth ? "true" : "false");
  if (r.stats) {
    const CheckStats& s = *r.stats;
    out << " vars_after_reduction=" << s.vars_after_reduction << " b=" << s.b
        << " D=" << s.domain_size;
    std::string di;
    for (const auto& [name, size] : s.existential_domain_sizes) {
      if (!di.empty()) di += ",";
      di += name + ":" + std::to_string(size);
    }
    out << " Di=" << (di.empty() ? "-" : di) << " memo_states=" << s.memo_states
        << " wall_ms=" << s.wall_ms;
  }
  out << "\n";
}

inline int run_selftest(std::size_t max_n, std::size_t sentences, std::uint64_t seed,
                        std::ostream& out) {
  std::vector<Sentence> corpus;
  for (std::size_t i = 0; i < sentences; ++i) {
    std::size_t v = 1 + i % 6;
    std::size_t a = i % 9;
    corpus.push_back(random_sentence(v, a, seed + i));
  }
  std::size_t pairs = 0, disagreements = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t posets = 0;
    for_each_labeled_poset(n, [&](const Poset& P) {
      ++posets;
      for (const auto& phi : corpus) {
        ++pairs;
        bool fpt = check(P, phi).truth;
        bool brute = brute_force_check(P, phi);
        if (fpt != brute) {
          ++disagreements;
          out << "DISAGREE n=" << n << " poset=" << posets
              << " sentence=" << sentence_to_string(phi) << " fpt=" << fpt
              << " brute=" << brute << "\n";
        }
      }
    });
    out << "selftest n=" << n << " posets=" << posets << " ok\n";
  }
  out << "selftest pairs=" << pairs << " disagreements=" << disagreements << "\n";
  return disagreements == 0 ? 0 : 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"model checking of conjunctive positive sentences on finite posets"};
  app.require_subcommand(1);

  // check
  auto* cmd_check = app.add_subcommand("check", "decide a sentence on a poset");
  std::string check_poset, check_sentence, check_method = "fpt";
  bool check_stats = false;
  double check_budget = kDefaultBruteBudgetBits;
  cmd_check->add_option("--poset", check_poset)->required();
  cmd_check->add_option("--sentence", check_sentence)->required();
  cmd_check->add_option("--method", check_method)
      ->check(CLI::IsMember({"fpt", "brute", "both"}));
  cmd_check->add_flag("--stats", check_stats);
  cmd_check->add_option("--budget", check_budget,
                        "bit budget for the brute-force guard");

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "rewrite a sentence into reduced form");
  std::string reduce_poset, reduce_sentence;
  bool reduce_trace = false;
  cmd_reduce->add_option("--poset", reduce_poset)->required();
  cmd_reduce->add_option("--sentence", reduce_sentence)->required();
  cmd_reduce->add_flag("--trace", reduce_trace);

  // invariants
  auto* cmd_inv = app.add_subcommand("invariants", "print poset invariants");
  std::string inv_poset;
  std::size_t inv_levels = 0;
  bool inv_levels_set = false;
  cmd_inv->add_option("--poset", inv_poset)->required();
  cmd_inv->add_option("--levels", inv_levels)->each([&](const std::string&) {
    inv_levels_set = true;
  });

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "emit generated posets and sentences");
  cmd_gen->require_subcommand(1);
  auto* gen_bowtie = cmd_gen->add_subcommand("bowtie", "the four-element bowtie poset");
  auto* gen_phi = cmd_gen->add_subcommand("phi-k", "the k-th upper-bound sentence");
  std::size_t gen_k = 1;
  gen_phi->add_option("--k", gen_k)->required();
  auto* gen_d2 = cmd_gen->add_subcommand("depth2", "depth-2 poset from a hypergraph");
  std::string d2_file;
  gen_d2->add_option("--hypergraph", d2_file)->required();
  auto* gen_c3 = cmd_gen->add_subcommand("cover3",
                                         "cover-degree-3 poset from a hypergraph");
  std::string c3_file;
  gen_c3->add_option("--hypergraph", c3_file)->required();
  auto* gen_rp = cmd_gen->add_subcommand("random-poset", "random bounded-width poset");
  std::size_t rp_n = 10, rp_w = 2;
  std::uint64_t rp_seed = 0;
  double rp_density = 0.1;
  gen_rp->add_option("--n", rp_n)->required();
  gen_rp->add_option("--width", rp_w)->required();
  gen_rp->add_option("--seed", rp_seed)->required();
  gen_rp->add_option("--density", rp_density);
  auto* gen_rs = cmd_gen->add_subcommand("random-sentence", "random sentence");
  std::size_t rs_vars = 4, rs_atoms = 4;
  std::uint64_t rs_seed = 0;
  gen_rs->add_option("--vars", rs_vars)->required();
  gen_rs->add_option("--atoms", rs_atoms)->required();
  gen_rs->add_option("--seed", rs_seed)->required();

  // bench
  auto* cmd_bench = app.add_subcommand(
      "bench", "sweep a sentence over generated bounded-width posets");
  std::string bench_sentence, bench_sizes = "125,250,500,1000,2000";
  std::size_t bench_phik = 0, bench_width = 2, bench_per_size = 3;
  std::uint64_t bench_seed = 1;
  double bench_density = 0.05, bench_budget = kDefaultBruteBudgetBits;
  std::string bench_method = "fpt";
  cmd_bench->add_option("--sentence", bench_sentence);
  cmd_bench->add_option("--phi-k", bench_phik);
  cmd_bench->add_option("--sizes", bench_sizes);
  cmd_bench->add_option("--width", bench_width);
  cmd_bench->add_option("--per-size", bench_per_size);
  cmd_bench->add_option("--seed", bench_seed);
  cmd_bench->add_option("--density", bench_density);
  cmd_bench->add_option("--budget", bench_budget);
  cmd_bench->add_option("--method", bench_method)
      ->check(CLI::IsMember({"fpt", "both"}));

  // selftest
  auto* cmd_self = app.add_subcommand(
      "selftest", "exhaustive small-poset oracle equivalence");
  std::size_t self_max_n = 4, self_sentences = 200;
  std::uint64_t self_seed = 7;
  cmd_self->add_option("--max-n", self_max_n);
  cmd_self->add_option("--sentences", self_sentences);
  cmd_self->add_option("--seed", self_seed);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_check->parsed()) {
      Poset P = load_poset_file(check_poset);
      Sentence phi = load_sentence_file(check_sentence);
      bool truth;
      if (check_method == "brute") {
        if (!within_brute_budget(P, phi, check_budget))
          throw BudgetExceededError("instance exceeds the brute-force budget");
        truth = brute_force_check(P, phi);
        if (check_stats) out << "method=brute truth=" << (truth ? "true" : "false") << "\n";
      } else if (check_method == "both") {
        auto [fpt, brute] = check_both(P, phi, check_budget);
        if (fpt.truth != brute)
          throw Error("method disagreement: fpt says " +
                      std::string(fpt.truth ? "true" : "false") + ", brute says " +
                      std::string(brute ? "true" : "false"));
        truth = fpt.truth;
        if (check_stats) detail::print_stats_line(out, fpt);
      } else {
        CheckResult r = check(P, phi);
        truth = r.truth;
        if (check_stats) detail::print_stats_line(out, r);
      }
      if (!check_stats) out << (truth ? "true" : "false") << "\n";
      return truth ? 0 : 1;
    }

    if (cmd_reduce->parsed()) {
      Poset P = load_poset_file(reduce_poset);
      Sentence phi = load_sentence_file(reduce_sentence);
      ReduceOutcome o = reduce(P, phi);
      if (reduce_trace)
        for (const auto& step : o.trace) out << "# " << step << "\n";
      if (o.decided) {
        out << "DECIDED false " << o.reason << "\n";
      } else if (hub_accept(P, o.reduced)) {
        out << "DECIDED true hub\n";
      } else {
        print_sentence(out, o.reduced.inner);
        out << "\n";
      }
      return 0;
    }

    if (cmd_inv->parsed()) {
      Poset P = load_poset_file(inv_poset);
      out << "size=" << P.size() << " width=" << width(P) << " depth=" << depth(P)
          << " degree=" << degree(P) << " cover-degree=" << cover_degree(P)
          << " top=" << detail::optional_name(P, top(P))
          << " bottom=" << detail::optional_name(P, bottom(P))
          << " hub=" << detail::optional_name(P, hub(P)) << "\n";
      if (inv_levels_set) {
        LevelSets ls = level_sets(P, inv_levels);
        for (std::size_t i = 0; i < ls.levels(); ++i)
          out << "level=" << i << " L=" << ls.L[i].count() << " U=" << ls.U[i].count()
              << "\n";
      }
      return 0;
    }

    if (cmd_gen->parsed()) {
      if (gen_bowtie->parsed()) {
        print_poset(out, bowtie());
      } else if (gen_phi->parsed()) {
        print_sentence(out, phi_k(gen_k));
        out << "\n";
      } else if (gen_d2->parsed()) {
        print_poset(out, hypergraph_to_depth2(load_hypergraph_file(d2_file)));
      } else if (gen_c3->parsed()) {
        print_poset(out, hypergraph_to_cover3(load_hypergraph_file(c3_file)));
      } else if (gen_rp->parsed()) {
        print_poset(out, random_poset_bounded_width(rp_n, rp_w, rp_density, rp_seed));
      } else if (gen_rs->parsed()) {
        print_sentence(out, random_sentence(rs_vars, rs_atoms, rs_seed));
        out << "\n";
      }
      return 0;
    }

    if (cmd_bench->parsed()) {
      Sentence phi;
      std::string sentence_id;
      if (bench_phik > 0) {
        phi = phi_k(bench_phik);
        sentence_id = "phi-" + std::to_string(bench_phik);
      } else if (!bench_sentence.empty()) {
        phi = load_sentence_file(bench_sentence);
        sentence_id = bench_sentence;
      } else {
        throw Error("bench needs --sentence or --phi-k");
      }
      std::vector<std::size_t> sizes;
      std::istringstream ss(bench_sizes);
      std::string item;
      while (std::getline(ss, item, ',')) sizes.push_back(std::stoul(item));
      for (std::size_t n : sizes) {
        for (std::size_t r = 0; r < bench_per_size; ++r) {
          std::uint64_t seed = bench_seed + 1000 * n + r;
          Poset P = random_poset_bounded_width(n, bench_width, bench_density, seed);
          std::string instance = "w" + std::to_string(bench_width) + "-n" +
                                 std::to_string(n) + "-s" + std::to_string(seed);
          auto t0 = std::chrono::steady_clock::now();
          CheckResult res = check(P, phi);
          double wall =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
          out << "instance=" << instance << " n=" << n << " width=" << width(P)
              << " sentence=" << sentence_id << " method=fpt"
              << " truth=" << (res.truth ? "true" : "false") << " wall_ms=" << wall
              << " memo_states=" << (res.stats ? res.stats->memo_states : 0) << "\n";
          if (bench_method == "both" && within_brute_budget(P, phi, bench_budget)) {
            t0 = std::chrono::steady_clock::now();
            bool brute = brute_force_check(P, phi);
            wall = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
            out << "instance=" << instance << " n=" << n << " width=" << width(P)
                << " sentence=" << sentence_id << " method=brute"
                << " truth=" << (brute ? "true" : "false") << " wall_ms=" << wall
                << " memo_states=0\n";
          }
        }
      }
      return 0;
    }

    if (cmd_self->parsed())
      return detail::run_selftest(self_max_n, self_sentences, self_seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pomc::cli
