#pragma once

// Labelled Eulerian digraphs: k vertices whose edge multiset is split into n
// ordered directed cycles, each with a distinguished first edge. Edge j of
// cycle i carries the label e_{i,j}.
//
// Bijection with colourings of a clique family (cycle i <-> clique i):
//   colouring -> digraph: e_{i,j} runs from block(v_{i,j-1}) to block(v_{i,j}),
//                         positions taken cyclically;
//   digraph -> colouring: vertex t becomes the block { v_{i,j} : head(e_{i,j}) = t }.
// The two maps are mutually inverse up to vertex relabelling.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "genbell/colouring.hpp"

namespace genbell {

struct Edge {
  unsigned tail = 0;
  unsigned head = 0;

  friend auto operator<=>(Edge const&, Edge const&) = default;
};

using Cycle = std::vector<Edge>;

struct LabelledEulerianDigraph {
  unsigned vertex_count = 0;
  std::vector<Cycle> cycles;

  /// Cycle lengths, i.e. the clique family this digraph corresponds to.
  std::vector<unsigned> cycle_lengths() const {
    std::vector<unsigned> out;
    out.reserve(cycles.size());
    for (auto const& c : cycles) {
      out.push_back(static_cast<unsigned>(c.size()));
    }
    return out;
  }

  friend bool operator==(LabelledEulerianDigraph const&, LabelledEulerianDigraph const&) = default;
  friend auto operator<=>(LabelledEulerianDigraph const&, LabelledEulerianDigraph const&) = default;
};

/// Reason the digraph is invalid, or nullopt when it is valid.
inline std::optional<std::string> validation_error(LabelledEulerianDigraph const& d) {
  if (d.vertex_count == 0) {
    return "digraph has no vertices";
  }
  if (d.cycles.empty()) {
    return "digraph has no cycles";
  }
  std::vector<long> balance(d.vertex_count + 1, 0);
  std::vector<bool> has_in_edge(d.vertex_count + 1, false);
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    auto const& cycle = d.cycles[i];
    std::string const where = "cycle " + std::to_string(i + 1);
    if (cycle.empty()) {
      return where + " is empty";
    }
    std::vector<unsigned> visited;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      Edge const e = cycle[j];
      if (e.tail < 1 || e.tail > d.vertex_count || e.head < 1 || e.head > d.vertex_count) {
        return where + " edge " + std::to_string(j + 1) + " leaves the vertex range";
      }
      Edge const next = cycle[(j + 1) % cycle.size()];
      if (e.head != next.tail) {
        return where + " breaks at edge " + std::to_string(j + 1);
      }
      visited.push_back(e.head);
      ++balance[e.tail];
      --balance[e.head];
      has_in_edge[e.head] = true;
    }
    // A directed m-cycle passes through m distinct vertices (a loop when m = 1).
    std::sort(visited.begin(), visited.end());
    if (std::adjacent_find(visited.begin(), visited.end()) != visited.end()) {
      return where + " revisits a vertex";
    }
  }
  for (unsigned t = 1; t <= d.vertex_count; ++t) {
    if (!has_in_edge[t]) {
      return "vertex " + std::to_string(t) + " is isolated";
    }
    if (balance[t] != 0) {
      return "vertex " + std::to_string(t) + " has in-degree != out-degree";
    }
  }
  return std::nullopt;
}

inline bool validate(LabelledEulerianDigraph const& d) { return !validation_error(d).has_value(); }

/// Relabels vertices in ascending order of their minimum in-edge label.
inline LabelledEulerianDigraph canonicalize(LabelledEulerianDigraph const& d) {
  std::vector<unsigned> relabel(d.vertex_count + 1, 0);
  unsigned next = 1;
  // Scanning labels in (i, j) order meets each vertex first at its minimum in-edge.
  for (auto const& cycle : d.cycles) {
    for (auto const& e : cycle) {
      if (e.head >= 1 && e.head <= d.vertex_count && relabel[e.head] == 0) {
        relabel[e.head] = next++;
      }
    }
  }
  LabelledEulerianDigraph out = d;
  for (auto& cycle : out.cycles) {
    for (auto& e : cycle) {
      e.tail = relabel.at(e.tail);
      e.head = relabel.at(e.head);
    }
  }
  return out;
}

inline bool is_canonical(LabelledEulerianDigraph const& d) { return canonicalize(d) == d; }

/// Digraph image of a proper colouring. Vertex t is the t-th block in the
/// colouring's stored order; canonicalize the result if the input block order
/// is not canonical.
inline LabelledEulerianDigraph colouring_to_digraph(CliqueFamily const& family,
                                                    Colouring const& c) {
  if (!is_proper(family, c)) {
    throw std::invalid_argument("colouring '" + to_text(c) + "' is not a proper colouring");
  }
  std::map<VertexId, unsigned> block_of;
  for (unsigned b = 0; b < c.blocks.size(); ++b) {
    for (auto v : c.blocks[b]) {
      block_of[v] = b + 1;
    }
  }
  LabelledEulerianDigraph d;
  d.vertex_count = static_cast<unsigned>(c.blocks.size());
  for (unsigned i = 1; i <= family.clique_count(); ++i) {
    unsigned const m = family.size_of(i);
    Cycle cycle;
    cycle.reserve(m);
    for (unsigned j = 1; j <= m; ++j) {
      unsigned const prev = j == 1 ? m : j - 1;
      cycle.push_back({block_of.at({i, prev}), block_of.at({i, j})});
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

/// Colouring image of a valid digraph whose cycle lengths match the family.
/// Returned in canonical form.
inline Colouring digraph_to_colouring(CliqueFamily const& family,
                                      LabelledEulerianDigraph const& d) {
  if (auto err = validation_error(d)) {
    throw std::invalid_argument("invalid digraph: " + *err);
  }
  if (d.cycle_lengths() != family.sizes()) {
    throw std::invalid_argument("cycle lengths do not match the clique sizes");
  }
  Colouring c;
  c.blocks.resize(d.vertex_count);
  for (unsigned i = 0; i < d.cycles.size(); ++i) {
    for (unsigned j = 0; j < d.cycles[i].size(); ++j) {
      c.blocks[d.cycles[i][j].head - 1].push_back({i + 1, j + 1});
    }
  }
  return canonicalize(std::move(c));
}

/// Calls visit(LabelledEulerianDigraph const&) once per relabelling class, in
/// the order of the underlying colouring enumeration.
template <typename Visitor>
void for_each_digraph(CliqueFamily const& family, Visitor&& visit) {
  for_each_colouring(family, [&](Colouring const& c) {
    visit(static_cast<LabelledEulerianDigraph const&>(canonicalize(colouring_to_digraph(family, c))));
  });
}

template <typename Visitor>
void for_each_digraph(CliqueFamily const& family, std::size_t k, Visitor&& visit) {
  for_each_colouring(family, k, [&](Colouring const& c) {
    visit(static_cast<LabelledEulerianDigraph const&>(canonicalize(colouring_to_digraph(family, c))));
  });
}

inline std::vector<LabelledEulerianDigraph> enumerate_digraphs(CliqueFamily const& family) {
  std::vector<LabelledEulerianDigraph> out;
  for_each_digraph(family, [&out](LabelledEulerianDigraph const& d) { out.push_back(d); });
  return out;
}

inline std::vector<LabelledEulerianDigraph> enumerate_digraphs(std::vector<unsigned> sizes) {
  return enumerate_digraphs(CliqueFamily(std::move(sizes)));
}

/// One labelled path: the cycle with its last edge removed. `start` is the
/// tail of the first edge and survives even when no edges remain (loops).
struct LabelledPath {
  unsigned start = 0;
  std::vector<Edge> edges;

  friend bool operator==(LabelledPath const&, LabelledPath const&) = default;
};

struct PathSystem {
  unsigned vertex_count = 0;
  std::vector<LabelledPath> paths;

  friend bool operator==(PathSystem const&, PathSystem const&) = default;
  friend bool operator<(PathSystem const& a, PathSystem const& b) {
    if (a.vertex_count != b.vertex_count) {
      return a.vertex_count < b.vertex_count;
    }
    return std::lexicographical_compare(
        a.paths.begin(), a.paths.end(), b.paths.begin(), b.paths.end(),
        [](LabelledPath const& x, LabelledPath const& y) {
          return std::tie(x.start, x.edges) < std::tie(y.start, y.edges);
        });
  }
};

inline PathSystem to_paths(LabelledEulerianDigraph const& d) {
  if (auto err = validation_error(d)) {
    throw std::invalid_argument("invalid digraph: " + *err);
  }
  PathSystem p;
  p.vertex_count = d.vertex_count;
  for (auto const& cycle : d.cycles) {
    LabelledPath path;
    path.start = cycle.front().tail;
    path.edges.assign(cycle.begin(), cycle.end() - 1);
    p.paths.push_back(std::move(path));
  }
  return p;
}

/// Re-closes every path with an edge from its final head back to its start.
inline LabelledEulerianDigraph from_paths(PathSystem const& p, std::vector<unsigned> const& sizes) {
  if (p.paths.size() != sizes.size()) {
    throw std::invalid_argument("path count does not match the clique count");
  }
  LabelledEulerianDigraph d;
  d.vertex_count = p.vertex_count;
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    auto const& path = p.paths[i];
    if (sizes[i] == 0 || path.edges.size() + 1 != sizes[i]) {
      throw std::invalid_argument("path " + std::to_string(i + 1) + " has the wrong length");
    }
    unsigned at = path.start;
    for (auto const& e : path.edges) {
      if (e.tail != at) {
        throw std::invalid_argument("path " + std::to_string(i + 1) + " is not contiguous");
      }
      at = e.head;
    }
    Cycle cycle = path.edges;
    cycle.push_back({at, path.start});
    d.cycles.push_back(std::move(cycle));
  }
  if (auto err = validation_error(d)) {
    throw std::invalid_argument("re-closed paths do not form a labelled Eulerian digraph: " + *err);
  }
  return d;
}

/// Text form: "k=4: 1>2 2>3 3>1 | 3>2 2>4 4>3".
inline std::string to_text(LabelledEulerianDigraph const& d) {
  std::ostringstream os;
  os << "k=" << d.vertex_count << ":";
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    if (i > 0) {
      os << " |";
    }
    for (auto const& e : d.cycles[i]) {
      os << ' ' << e.tail << '>' << e.head;
    }
  }
  return os.str();
}

/// Graphviz rendering. Byte-stable: vertices in index order, then edges in
/// label order.
inline std::string to_dot(LabelledEulerianDigraph const& d, std::string const& name = "G") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (unsigned t = 1; t <= d.vertex_count; ++t) {
    os << "  " << t << ";\n";
  }
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    for (std::size_t j = 0; j < d.cycles[i].size(); ++j) {
      auto const& e = d.cycles[i][j];
      os << "  " << e.tail << " -> " << e.head << " [label=\"e" << i + 1 << ',' << j + 1
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, LabelledEulerianDigraph const& d) {
  return os << to_text(d);
}

}  // namespace genbell
