#pragma once

// Hypergraphs: a named vertex set plus nonempty named edges.  Text format:
//   hypergraph <nv>
//   vertices <id0> <id1> ...          (optional; defaults to "0".."nv-1")
//   edge <name>: v1 v2 ...
// '#' starts a comment.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pomc/bits.hpp"
#include "pomc/errors.hpp"

namespace pomc {

struct Hypergraph {
  std::vector<std::string> vertices;
  struct Edge {
    std::string name;
    Bits members;  // over vertex indices
  };
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }

  void validate() const {
    for (const auto& e : edges)
      if (e.members.none())
        throw IllFormedHypergraphError("edge " + e.name + " is empty");
  }

  // Every vertex must be absent from at least one edge and every edge must
  // exclude at least one vertex; otherwise the hardness constructions lose
  // min(P) = vertices / max(P) = edges.
  bool well_formed() const {
    if (edges.empty() || vertices.empty()) return false;
    for (const auto& e : edges) {
      if (e.members.none()) return false;
      if (e.members.count() == vertices.size()) return false;
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      bool absent_somewhere = false;
      for (const auto& e : edges)
        if (!e.members.test(v)) {
          absent_somewhere = true;
          break;
        }
      if (!absent_somewhere) return false;
    }
    return true;
  }

  Bits notin_vertex(std::size_t v) const {  // edges not containing v
    Bits out(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (!edges[e].members.test(v)) out.set(e);
    return out;
  }

  Bits notin_edge(std::size_t e) const {  // vertices outside edge e
    Bits out(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (!edges[e].members.test(v)) out.set(v);
    return out;
  }
};

inline Hypergraph load_hypergraph(std::istream& in) {
  Hypergraph H;
  std::string line;
  bool have_header = false;
  std::size_t nv = 0;

  auto strip = [](std::string s) {
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  auto vertex_index = [&](const std::string& id) -> std::size_t {
    for (std::size_t i = 0; i < H.vertices.size(); ++i)
      if (H.vertices[i] == id) return i;
    throw FormatError("unknown vertex id: " + id);
  };

  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (!have_header) {
      if (tok != "hypergraph") throw FormatError("expected 'hypergraph <nv>' header");
      if (!(ls >> nv) || nv < 1) throw FormatError("invalid vertex count");
      have_header = true;
      for (std::size_t i = 0; i < nv; ++i) H.vertices.push_back(std::to_string(i));
      continue;
    }
    if (tok == "vertices") {
      std::vector<std::string> ids;
      std::string id;
      while (ls >> id) ids.push_back(id);
      if (ids.size() != nv) throw FormatError("'vertices' line must list exactly nv ids");
      H.vertices = std::move(ids);
      continue;
    }
    if (tok != "edge") throw FormatError("expected 'edge <name>: ...' line, got: " + line);
    std::string name;
    ls >> name;
    if (name.empty()) throw FormatError("edge line missing a name");
    if (name.back() == ':') {
      name.pop_back();
    } else {
      std::string colon;
      ls >> colon;
      if (colon != ":") throw FormatError("edge line missing ':' after the name");
    }
    if (name.empty()) throw FormatError("edge line missing a name");
    for (const auto& other : H.edges)
      if (other.name == name) throw FormatError("duplicate edge name: " + name);
    Hypergraph::Edge e{name, Bits(nv)};
    std::string v;
    while (ls >> v) e.members.set(vertex_index(v));
    H.edges.push_back(std::move(e));
  }
  if (!have_header) throw FormatError("missing 'hypergraph <nv>' header");
  H.validate();
  return H;
}

inline Hypergraph load_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return load_hypergraph(in);
}

inline Hypergraph load_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open hypergraph file: " + path);
  return load_hypergraph(in);
}

inline void print_hypergraph(std::ostream& out, const Hypergraph& H) {
  out << "hypergraph " << H.vertex_count() << "\n";
  bool default_names = true;
  for (std::size_t i = 0; i < H.vertices.size(); ++i)
    if (H.vertices[i] != std::to_string(i)) {
      default_names = false;
      break;
    }
  if (!default_names) {
    out << "vertices";
    for (const auto& v : H.vertices) out << ' ' << v;
    out << "\n";
  }
  for (const auto& e : H.edges) {
    out << "edge " << e.name << ":";
    e.members.for_each([&](std::size_t v) { out << ' ' << H.vertices[v]; });
    out << "\n";
  }
}

}  // namespace pomc
