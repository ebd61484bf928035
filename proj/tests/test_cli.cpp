#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "pomc/cli.hpp"
#include "test_util.hpp"

using namespace pomc;

namespace {

struct RunOutcome {
  int code;
  std::string out;
  std::string err;
};

RunOutcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) {
    path = std::string("cli_test_") + name;
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kBowtie = "poset 4\n0 < 1\n0 < 3\n2 < 1\n2 < 3\n";

}  // namespace

TEST_CASE("cli invariants line for the bowtie") {
  TempFile poset("bowtie.poset", kBowtie);
  auto r = run_cli({"invariants", "--poset", poset.path});
  REQUIRE(r.code == 0);
  REQUIRE(r.out ==
          "size=4 width=2 depth=2 degree=2 cover-degree=2 top=none bottom=none "
          "hub=none\n");
}

TEST_CASE("cli invariants with level sizes") {
  TempFile poset("chain.poset", "poset 3\n0 < 1\n1 < 2\n");
  auto r = run_cli({"invariants", "--poset", poset.path, "--levels", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("level=0 L=1 U=1\n") != std::string::npos);
  REQUIRE(r.out.find("level=1 L=1 U=1\n") != std::string::npos);
}

TEST_CASE("cli check agrees across methods and sets the exit code") {
  TempFile poset("bowtie2.poset", kBowtie);
  TempFile phi2("phi2.qcq", sentence_to_string(phi_k(2)) + "\n");
  auto both = run_cli({"check", "--poset", poset.path, "--sentence", phi2.path,
                       "--method", "both"});
  REQUIRE(both.code == 0);
  REQUIRE(both.out == "true\n");

  TempFile bad("top.qcq", "exists y forall x : x <= y\n");
  auto f = run_cli({"check", "--poset", poset.path, "--sentence", bad.path});
  REQUIRE(f.code == 1);
  REQUIRE(f.out == "false\n");

  auto stats = run_cli({"check", "--poset", poset.path, "--sentence", phi2.path,
                        "--stats"});
  REQUIRE(stats.code == 0);
  REQUIRE(stats.out.find("method=fpt-game") != std::string::npos);
  REQUIRE(stats.out.find("truth=true") != std::string::npos);
  REQUIRE(stats.out.find("memo_states=") != std::string::npos);
}

TEST_CASE("cli check reports errors on malformed input") {
  TempFile poset("bad.poset", "not a poset\n");
  TempFile phi("t.qcq", ": true\n");
  auto r = run_cli({"check", "--poset", poset.path, "--sentence", phi.path});
  REQUIRE(r.code == 2);
  REQUIRE(r.err.find("error:") == 0);
  auto missing = run_cli({"check", "--poset", "does_not_exist.poset", "--sentence",
                          phi.path});
  REQUIRE(missing.code == 2);
}

TEST_CASE("cli reduce prints decisions and reduced sentences") {
  TempFile poset("bowtie3.poset", kBowtie);
  TempFile univ("univ.qcq", "forall x forall x2 : x <= x2\n");
  auto decided = run_cli({"reduce", "--poset", poset.path, "--sentence", univ.path});
  REQUIRE(decided.code == 0);
  REQUIRE(decided.out == "DECIDED false universals-comparable\n");

  TempFile chain("chain3.poset", "poset 3\n0 < 1\n1 < 2\n");
  TempFile top("top2.qcq", "exists y forall x : x <= y\n");
  auto reduced = run_cli({"reduce", "--poset", chain.path, "--sentence", top.path});
  REQUIRE(reduced.code == 0);
  REQUIRE(reduced.out == "DECIDED true hub\n");

  TempFile surviving("surv.qcq", "forall x exists y : y <= x\n");
  auto sentence = run_cli({"reduce", "--poset", poset.path, "--sentence",
                           surviving.path, "--trace"});
  REQUIRE(sentence.code == 0);
  // trace lines are comments, so the whole output reparses as a sentence
  Sentence back = parse_sentence(sentence.out);
  REQUIRE(back.vars.size() == 2);
}

TEST_CASE("cli gen outputs reparse") {
  auto phi = run_cli({"gen", "phi-k", "--k", "2"});
  REQUIRE(phi.code == 0);
  Sentence parsed = parse_sentence(phi.out);
  REQUIRE(sentence_to_string(parsed) == sentence_to_string(phi_k(2)));

  auto bow = run_cli({"gen", "bowtie"});
  REQUIRE(bow.code == 0);
  Poset B = load_poset(bow.out);
  REQUIRE(width(B) == 2);
  REQUIRE_FALSE(hub(B).has_value());

  auto rp = run_cli({"gen", "random-poset", "--n", "30", "--width", "2", "--seed",
                     "4", "--density", "0.2"});
  REQUIRE(rp.code == 0);
  Poset P = load_poset(rp.out);
  REQUIRE(P.size() == 30);
  REQUIRE(width(P) <= 2);

  auto rs = run_cli({"gen", "random-sentence", "--vars", "4", "--atoms", "5",
                     "--seed", "9"});
  REQUIRE(rs.code == 0);
  REQUIRE(parse_sentence(rs.out).vars.size() == 4);

  TempFile hg("tri.hg", "hypergraph 3\nedge e0: 0 1\nedge e1: 1 2\nedge e2: 0 2\n");
  auto d2 = run_cli({"gen", "depth2", "--hypergraph", hg.path});
  REQUIRE(d2.code == 0);
  REQUIRE(depth(load_poset(d2.out)) <= 2);
  auto c3 = run_cli({"gen", "cover3", "--hypergraph", hg.path});
  REQUIRE(c3.code == 0);
  REQUIRE(cover_degree(load_poset(c3.out)) <= 3);
}

TEST_CASE("cli selftest passes on a small corpus") {
  std::ostringstream out, err;
  int code = cli::run({"selftest", "--max-n", "3", "--sentences", "25"}, out, err);
  REQUIRE(code == 0);
  REQUIRE(out.str().find("disagreements=0") != std::string::npos);
}

TEST_CASE("cli bench emits one record per run") {
  TempFile phi1("phi1.qcq", sentence_to_string(phi_k(1)) + "\n");
  auto r = run_cli({"bench", "--sentence", phi1.path, "--sizes", "8,16", "--width",
                    "2", "--per-size", "2", "--seed", "3", "--method", "both"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t fpt_records = 0, brute_records = 0;
  while (std::getline(lines, line)) {
    REQUIRE(line.find("instance=") == 0);
    REQUIRE(line.find(" n=") != std::string::npos);
    REQUIRE(line.find(" truth=") != std::string::npos);
    REQUIRE(line.find(" memo_states=") != std::string::npos);
    if (line.find("method=fpt") != std::string::npos) ++fpt_records;
    if (line.find("method=brute") != std::string::npos) ++brute_records;
  }
  REQUIRE(fpt_records == 4);
  REQUIRE(brute_records == 4);  // n = 8 and 16 sit inside the brute budget
}

TEST_CASE("cli bench records are deterministic up to wall time") {
  auto strip_wall = [](const std::string& text) {
    std::istringstream lines(text);
    std::string line, out;
    while (std::getline(lines, line)) {
      auto at = line.find(" wall_ms=");
      auto end = line.find(' ', at + 1);
      out += line.substr(0, at) + line.substr(end) + "\n";
    }
    return out;
  };
  std::vector<std::string> args{"bench", "--phi-k", "2", "--sizes", "16,32",
                                "--per-size", "2", "--seed", "12"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  REQUIRE(a.code == 0);
  REQUIRE(strip_wall(a.out) == strip_wall(b.out));
  REQUIRE(strip_wall(a.out) != "");
}

TEST_CASE("cli works on the shipped sample files") {
  const std::string data = POMC_DATA_DIR;
  auto r = run_cli({"check", "--poset", data + "/bowtie.poset", "--sentence",
                    data + "/phi2.qcq", "--method", "both"});
  REQUIRE(r.code == 0);
  auto d = run_cli({"check", "--poset", data + "/diamond.poset", "--sentence",
                    data + "/phi2.qcq"});
  REQUIRE(d.code == 0);
  auto hg = run_cli({"gen", "cover3", "--hypergraph", data + "/triangle.hg"});
  REQUIRE(hg.code == 0);
  REQUIRE(cover_degree(load_poset(hg.out)) <= 3);
}

TEST_CASE("cli rejects unknown arguments") {
  auto r = run_cli({"frobnicate"});
  REQUIRE(r.code == 2);
  auto missing = run_cli({"check", "--poset", "x.poset"});
  REQUIRE(missing.code == 2);
}

TEST_CASE("cli help exits cleanly") {
  auto r = run_cli({"--help"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("check") != std::string::npos);
}
