#pragma once

// Conjunctive positive sentences over the vocabulary {<=}: a quantifier
// prefix (arbitrary forall/exists sequence) and a set of ordered atom pairs
// (u, v) meaning u <= v.  Equality atoms are expanded at parse time.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pomc/errors.hpp"

namespace pomc {

enum class Quantifier { Universal, Existential };

struct Sentence {
  struct Var {
    std::string name;
    Quantifier q;
  };

  std::vector<Var> vars;
  std::vector<std::pair<std::size_t, std::size_t>> atoms;  // sorted, unique

  std::size_t var_count() const { return vars.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i].name == name) return i;
    return std::nullopt;
  }

  bool has_atom(std::size_t u, std::size_t v) const {
    return std::binary_search(atoms.begin(), atoms.end(), std::make_pair(u, v));
  }

  void add_atom(std::size_t u, std::size_t v) {
    auto a = std::make_pair(u, v);
    auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
    if (it == atoms.end() || *it != a) atoms.insert(it, a);
  }

  std::size_t count_quantifier(Quantifier q) const {
    std::size_t c = 0;
    for (const auto& v : vars) c += (v.q == q);
    return c;
  }
};

// Induced subsentence on the variable set keep: the prefix subsequence and
// the atoms with both endpoints kept.
inline Sentence restrict(const Sentence& phi, const std::set<std::size_t>& keep) {
  Sentence out;
  std::vector<std::size_t> remap(phi.vars.size(), ~std::size_t(0));
  for (std::size_t i = 0; i < phi.vars.size(); ++i)
    if (keep.count(i)) {
      remap[i] = out.vars.size();
      out.vars.push_back(phi.vars[i]);
    }
  for (auto [u, v] : phi.atoms)
    if (remap[u] != ~std::size_t(0) && remap[v] != ~std::size_t(0))
      out.add_atom(remap[u], remap[v]);
  return out;
}

inline Sentence restrict_names(const Sentence& phi, const std::set<std::string>& keep) {
  std::set<std::size_t> idx;
  for (const auto& name : keep) {
    auto i = phi.index_of(name);
    if (!i) throw UnboundVariableError(name);
    idx.insert(*i);
  }
  return restrict(phi, idx);
}

inline void print_sentence(std::ostream& out, const Sentence& phi) {
  for (const auto& v : phi.vars)
    out << (v.q == Quantifier::Universal ? "forall " : "exists ") << v.name << ' ';
  out << ':';
  if (phi.atoms.empty()) {
    out << " true";
  } else {
    bool first = true;
    for (auto [u, v] : phi.atoms) {
      out << (first ? " " : " & ") << phi.vars[u].name << " <= " << phi.vars[v].name;
      first = false;
    }
  }
}

inline std::string sentence_to_string(const Sentence& phi) {
  std::ostringstream out;
  print_sentence(out, phi);
  return out.str();
}

// ---- parser --------------------------------------------------------------
//
//   sentence := (('forall'|'exists') ident+)* ':' (atoms | 'true')
//   atoms    := atom ('&' atom)*
//   atom     := ident ('<='|'=') ident
//
// Whitespace-insensitive; '#' comments to end of line.

namespace detail {

struct Token {
  enum Kind { Ident, Colon, Amp, Leq, Eq, End } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize_sentence(const std::string& text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  auto is_ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
           c == '\'' || c == '/' || c == '@' || c == '^' || c == '-';
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ':') {
      toks.push_back({Token::Colon, ":", i++});
    } else if (c == '&') {
      toks.push_back({Token::Amp, "&", i++});
    } else if (c == '<') {
      if (i + 1 >= text.size() || text[i + 1] != '=')
        throw SyntaxError("expected '<='", i);
      toks.push_back({Token::Leq, "<=", i});
      i += 2;
    } else if (c == '=') {
      toks.push_back({Token::Eq, "=", i++});
    } else if (is_ident(c)) {
      std::size_t start = i;
      while (i < text.size() && is_ident(text[i])) ++i;
      toks.push_back({Token::Ident, text.substr(start, i - start), start});
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  toks.push_back({Token::End, "", text.size()});
  return toks;
}

}  // namespace detail

inline Sentence parse_sentence(const std::string& text) {
  auto toks = detail::tokenize_sentence(text);
  std::size_t t = 0;
  Sentence phi;
  std::map<std::string, std::size_t> index;

  while (toks[t].kind == detail::Token::Ident &&
         (toks[t].text == "forall" || toks[t].text == "exists")) {
    Quantifier q =
        toks[t].text == "forall" ? Quantifier::Universal : Quantifier::Existential;
    ++t;
    if (toks[t].kind != detail::Token::Ident)
      throw SyntaxError("expected variable name after quantifier", toks[t].pos);
    while (toks[t].kind == detail::Token::Ident && toks[t].text != "forall" &&
           toks[t].text != "exists") {
      if (!index.emplace(toks[t].text, phi.vars.size()).second)
        throw DuplicateVariableError(toks[t].text);
      phi.vars.push_back({toks[t].text, q});
      ++t;
    }
  }
  if (toks[t].kind != detail::Token::Colon)
    throw SyntaxError("expected ':' before the atom list", toks[t].pos);
  ++t;

  auto var_index = [&](const detail::Token& tok) {
    auto it = index.find(tok.text);
    if (it == index.end()) throw UnboundVariableError(tok.text);
    return it->second;
  };

  if (toks[t].kind == detail::Token::Ident && toks[t].text == "true" &&
      toks[t + 1].kind == detail::Token::End) {
    return phi;
  }
  while (true) {
    if (toks[t].kind != detail::Token::Ident)
      throw SyntaxError("expected an atom", toks[t].pos);
    std::size_t lhs = var_index(toks[t]);
    ++t;
    bool equality;
    if (toks[t].kind == detail::Token::Leq) {
      equality = false;
    } else if (toks[t].kind == detail::Token::Eq) {
      equality = true;
    } else {
      throw SyntaxError("expected '<=' or '=' in atom", toks[t].pos);
    }
    ++t;
    if (toks[t].kind != detail::Token::Ident)
      throw SyntaxError("expected right-hand variable in atom", toks[t].pos);
    std::size_t rhs = var_index(toks[t]);
    ++t;
    phi.add_atom(lhs, rhs);
    if (equality) phi.add_atom(rhs, lhs);  // u = v becomes u <= v and v <= u
    if (toks[t].kind == detail::Token::End) break;
    if (toks[t].kind != detail::Token::Amp)
      throw SyntaxError("expected '&' between atoms", toks[t].pos);
    ++t;
  }
  return phi;
}

inline Sentence load_sentence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open sentence file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sentence(buf.str());
}

}  // namespace pomc
