#pragma once

// Disjoint unions of cliques and their proper colourings.
//
// A colouring is a set partition of the vertex set into stable blocks; colour
// names carry no meaning. Canonical form sorts each block and orders blocks by
// their minimum vertex, so structural equality is partition equality.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace genbell {

/// Vertex v_{i,j}: position j (1-based) of clique i (1-based).
struct VertexId {
  unsigned clique = 0;
  unsigned position = 0;

  friend auto operator<=>(VertexId const&, VertexId const&) = default;
};

inline std::string to_string(VertexId v) {
  return "v" + std::to_string(v.clique) + "." + std::to_string(v.position);
}

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << to_string(v); }

class CliqueFamily {
 public:
  explicit CliqueFamily(std::vector<unsigned> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) {
      throw std::invalid_argument("clique family must contain at least one clique");
    }
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (sizes_[i] == 0) {
        throw std::invalid_argument("clique " + std::to_string(i + 1) + " has size 0");
      }
    }
  }

  /// n copies of K_m.
  static CliqueFamily uniform(unsigned m, unsigned n) {
    return CliqueFamily(std::vector<unsigned>(n, m));
  }

  std::vector<unsigned> const& sizes() const noexcept { return sizes_; }
  std::size_t clique_count() const noexcept { return sizes_.size(); }
  unsigned size_of(unsigned clique) const { return sizes_.at(clique - 1); }

  std::size_t vertex_count() const noexcept {
    return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
  }

  unsigned max_size() const noexcept { return *std::max_element(sizes_.begin(), sizes_.end()); }

  bool contains(VertexId v) const noexcept {
    return v.clique >= 1 && v.clique <= sizes_.size() && v.position >= 1 &&
           v.position <= sizes_[v.clique - 1];
  }

  /// All vertices in lexicographic (clique, position) order.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_count());
    for (unsigned i = 1; i <= sizes_.size(); ++i) {
      for (unsigned j = 1; j <= sizes_[i - 1]; ++j) {
        out.push_back({i, j});
      }
    }
    return out;
  }

  friend bool operator==(CliqueFamily const&, CliqueFamily const&) = default;

 private:
  std::vector<unsigned> sizes_;
};

inline CliqueFamily build_family(std::vector<unsigned> sizes) {
  return CliqueFamily(std::move(sizes));
}

using Block = std::vector<VertexId>;

/// A candidate colouring. Nothing is enforced on construction; see is_proper
/// and canonicalize.
struct Colouring {
  std::vector<Block> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }

  friend bool operator==(Colouring const&, Colouring const&) = default;
};

inline Colouring canonicalize(Colouring c) {
  for (auto& block : c.blocks) {
    std::sort(block.begin(), block.end());
  }
  std::sort(c.blocks.begin(), c.blocks.end(), [](Block const& a, Block const& b) {
    if (a.empty() || b.empty()) {
      return a.size() < b.size();
    }
    return a.front() < b.front();
  });
  return c;
}

inline bool is_canonical(Colouring const& c) { return canonicalize(c) == c; }

inline bool same_partition(Colouring const& a, Colouring const& b) {
  return canonicalize(a) == canonicalize(b);
}

/// True iff the blocks partition the family's vertex set into non-empty
/// blocks, none of which contains two vertices of one clique.
inline bool is_proper(CliqueFamily const& family, Colouring const& colouring) {
  std::vector<VertexId> seen;
  seen.reserve(family.vertex_count());
  for (auto const& block : colouring.blocks) {
    if (block.empty()) {
      return false;
    }
    std::vector<unsigned> cliques;
    for (auto v : block) {
      if (!family.contains(v)) {
        return false;
      }
      cliques.push_back(v.clique);
      seen.push_back(v);
    }
    std::sort(cliques.begin(), cliques.end());
    if (std::adjacent_find(cliques.begin(), cliques.end()) != cliques.end()) {
      return false;
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen == family.vertices();
}

namespace detail {

  template <typename Visitor>
  class ColouringSearch {
   public:
    ColouringSearch(CliqueFamily const& family, std::size_t k, Visitor& visit)
        : vertices_(family.vertices()), k_(k), visit_(visit) {}

    void run() {
      if (k_ == 0 || k_ > vertices_.size()) {
        return;
      }
      recurse(0);
    }

   private:
    // Restricted-growth order: existing blocks first, then a fresh one.
    void recurse(std::size_t index) {
      if (index == vertices_.size()) {
        if (current_.blocks.size() == k_) {
          visit_(static_cast<Colouring const&>(current_));
        }
        return;
      }
      VertexId const v = vertices_[index];
      std::size_t const remaining = vertices_.size() - index;
      for (std::size_t b = 0; b < current_.blocks.size(); ++b) {
        // Vertices of a clique are consecutive, so a block already holds a
        // vertex of this clique iff its latest vertex does.
        if (current_.blocks[b].back().clique == v.clique) {
          continue;
        }
        if (current_.blocks.size() + remaining - 1 < k_) {
          break;
        }
        current_.blocks[b].push_back(v);
        recurse(index + 1);
        current_.blocks[b].pop_back();
      }
      if (current_.blocks.size() < k_) {
        current_.blocks.push_back({v});
        recurse(index + 1);
        current_.blocks.pop_back();
      }
    }

    std::vector<VertexId> vertices_;
    std::size_t k_;
    Visitor& visit_;
    Colouring current_;
  };

}  // namespace detail

/// Calls visit(Colouring const&) for every k-colouring of the family, each in
/// canonical form, in lexicographic order of restricted-growth strings.
template <typename Visitor>
void for_each_colouring(CliqueFamily const& family, std::size_t k, Visitor&& visit) {
  detail::ColouringSearch<std::remove_reference_t<Visitor>> search(family, k, visit);
  search.run();
}

/// for_each_colouring over k = max size .. total size.
template <typename Visitor>
void for_each_colouring(CliqueFamily const& family, Visitor&& visit) {
  for (std::size_t k = family.max_size(); k <= family.vertex_count(); ++k) {
    for_each_colouring(family, k, visit);
  }
}

inline std::vector<Colouring> enumerate_colourings(CliqueFamily const& family, std::size_t k) {
  std::vector<Colouring> out;
  for_each_colouring(family, k, [&out](Colouring const& c) { out.push_back(c); });
  return out;
}

inline std::vector<Colouring> enumerate_all_colourings(CliqueFamily const& family) {
  std::vector<Colouring> out;
  for_each_colouring(family, [&out](Colouring const& c) { out.push_back(c); });
  return out;
}

/// Restricted-growth string: entry t is the 0-based block of the t-th vertex
/// in lexicographic order.
inline std::vector<unsigned> restricted_growth_string(CliqueFamily const& family,
                                                      Colouring const& colouring) {
  auto const verts = family.vertices();
  Colouring const c = canonicalize(colouring);
  std::vector<unsigned> out(verts.size(), 0);
  for (unsigned b = 0; b < c.blocks.size(); ++b) {
    for (auto v : c.blocks[b]) {
      auto it = std::lower_bound(verts.begin(), verts.end(), v);
      if (it == verts.end() || *it != v) {
        throw std::invalid_argument("vertex " + to_string(v) + " is not in the family");
      }
      out[static_cast<std::size_t>(it - verts.begin())] = b;
    }
  }
  return out;
}

/// Text form: "v1.3 | v1.1 v2.1 | v1.2 v2.3 | v2.2". Blocks are written in
/// the stored order.
inline std::string to_text(Colouring const& c) {
  std::string out;
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    if (b > 0) {
      out += " | ";
    }
    for (std::size_t t = 0; t < c.blocks[b].size(); ++t) {
      if (t > 0) {
        out += ' ';
      }
      out += to_string(c.blocks[b][t]);
    }
  }
  return out;
}

inline VertexId parse_vertex(std::string_view token) {
  auto fail = [&] { return std::invalid_argument("malformed vertex '" + std::string(token) + "'"); };
  if (token.size() < 4 || token[0] != 'v') {
    throw fail();
  }
  auto const dot = token.find('.');
  if (dot == std::string_view::npos) {
    throw fail();
  }
  auto parse_part = [&](std::string_view part) -> unsigned {
    if (part.empty() || part.size() > 9) {
      throw fail();
    }
    unsigned value = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') {
        throw fail();
      }
      value = value * 10 + static_cast<unsigned>(ch - '0');
    }
    return value;
  };
  return {parse_part(token.substr(1, dot - 1)), parse_part(token.substr(dot + 1))};
}

/// Inverse of to_text. Block order is preserved.
inline Colouring parse_colouring_text(std::string_view text) {
  Colouring c;
  std::string const s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    auto const bar = s.find('|', start);
    std::string const part = s.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    std::istringstream tokens(part);
    Block block;
    for (std::string tok; tokens >> tok;) {
      block.push_back(parse_vertex(tok));
    }
    if (block.empty()) {
      throw std::invalid_argument("empty block in colouring '" + s + "'");
    }
    c.blocks.push_back(std::move(block));
    if (bar == std::string::npos) {
      break;
    }
    start = bar + 1;
  }
  return c;
}

inline std::ostream& operator<<(std::ostream& os, Colouring const& c) { return os << to_text(c); }

}  // namespace genbell
