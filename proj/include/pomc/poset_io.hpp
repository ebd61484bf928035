#pragma once

// Line-oriented poset text format:
//   poset <n>
//   elements <id0> <id1> ...        (optional; defaults to "0".."n-1")
//   <id> < <id>                     (one order pair per line)
// '#' starts a comment; closure is applied on load.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pomc/errors.hpp"
#include "pomc/poset.hpp"

namespace pomc {

inline Poset load_poset(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  auto strip = [](std::string s) {
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };

  auto index_of = [&](const std::string& id) -> std::size_t {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == id) return i;
    throw FormatError("unknown element id: " + id);
  };

  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (!have_header) {
      if (tok != "poset") throw FormatError("expected 'poset <n>' header");
      if (!(ls >> n) || n < 1) throw FormatError("invalid element count");
      have_header = true;
      names.reserve(n);
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
      continue;
    }
    if (tok == "elements") {
      if (!pairs.empty())
        throw FormatError("'elements' line must precede the order pairs");
      std::vector<std::string> ids;
      std::string id;
      while (ls >> id) ids.push_back(id);
      if (ids.size() != n) throw FormatError("'elements' line must list exactly n ids");
      names = std::move(ids);
      continue;
    }
    std::string rel, rhs;
    if (!(ls >> rel >> rhs) || rel != "<")
      throw FormatError("expected '<id> < <id>' line, got: " + line);
    std::string extra;
    if (ls >> extra) throw FormatError("trailing tokens on order pair line: " + line);
    pairs.emplace_back(index_of(tok), index_of(rhs));
  }
  if (!have_header) throw FormatError("missing 'poset <n>' header");
  return Poset::from_order_pairs(n, pairs, std::move(names));
}

inline Poset load_poset(const std::string& text) {
  std::istringstream in(text);
  return load_poset(in);
}

inline Poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open poset file: " + path);
  return load_poset(in);
}

// Emits the cover pairs; reloading closes them back to the full order.
inline void print_poset(std::ostream& out, const Poset& P) {
  out << "poset " << P.size() << "\n";
  bool default_names = true;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P.name(i) != std::to_string(i)) {
      default_names = false;
      break;
    }
  if (!default_names) {
    out << "elements";
    for (std::size_t i = 0; i < P.size(); ++i) out << ' ' << P.name(i);
    out << "\n";
  }
  for (auto [p, q] : P.cover_pairs()) out << P.name(p) << " < " << P.name(q) << "\n";
}

inline std::string poset_to_string(const Poset& P) {
  std::ostringstream out;
  print_poset(out, P);
  return out.str();
}

}  // namespace pomc
