#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the recurrences, the colouring search or the digraph
// canonicalizer that the tests check.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_int;

/// All set partitions of {0..n-1}, blocks as sorted index lists, by the
/// "insert the next element somewhere" recursion.
inline std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> current;
  std::function<void(std::size_t)> place = [&](std::size_t e) {
    if (e == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(e);
      place(e + 1);
      current[b].pop_back();
    }
    current.push_back({e});
    place(e + 1);
    current.pop_back();
  };
  place(0);
  return out;
}

/// Partitions of the vertices of the clique family that keep each clique's
/// vertices apart. Vertices are (clique, position) pairs, both 1-based.
using vertex = std::pair<unsigned, unsigned>;
using partition = std::set<std::set<vertex>>;

inline std::vector<partition> stable_partitions(std::vector<unsigned> const& sizes) {
  std::vector<vertex> verts;
  for (unsigned i = 1; i <= sizes.size(); ++i) {
    for (unsigned j = 1; j <= sizes[i - 1]; ++j) {
      verts.emplace_back(i, j);
    }
  }
  std::vector<partition> out;
  for (auto const& p : set_partitions(verts.size())) {
    bool stable = true;
    partition q;
    for (auto const& block : p) {
      std::set<unsigned> cliques;
      std::set<vertex> b;
      for (auto idx : block) {
        stable = stable && cliques.insert(verts[idx].first).second;
        b.insert(verts[idx]);
      }
      q.insert(b);
    }
    if (stable) {
      out.push_back(q);
    }
  }
  return out;
}

inline std::size_t count_stable_partitions(std::vector<unsigned> const& sizes, std::size_t k) {
  std::size_t c = 0;
  for (auto const& p : stable_partitions(sizes)) {
    c += p.size() == k;
  }
  return c;
}

/// Number of k-colourings via inclusion-exclusion on the chromatic polynomial
/// prod_i (x)_{m_i}: surjective proper colourings onto k named colours, / k!.
inline big colourings_by_inclusion_exclusion(std::vector<unsigned> const& sizes, unsigned k) {
  auto falling = [](long x, unsigned n) {
    big out = 1;
    for (unsigned i = 0; i < n; ++i) {
      out *= x - static_cast<long>(i);
    }
    return out;
  };
  auto choose = [](unsigned n, unsigned r) {
    big out = 1;
    for (unsigned i = 0; i < r; ++i) {
      out = out * (n - i) / (i + 1);
    }
    return out;
  };
  big total = 0;
  for (unsigned j = 0; j <= k; ++j) {
    big chromatic = 1;
    for (auto m : sizes) {
      chromatic *= falling(j, m);
    }
    big const term = choose(k, j) * chromatic;
    if ((k - j) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  big fact = 1;
  for (unsigned i = 2; i <= k; ++i) {
    fact *= i;
  }
  return total / fact;
}

/// Labelled Eulerian digraphs found by direct search: each cycle i is an
/// ordered list of sizes[i] distinct vertices (u_1 -> u_2 -> ... -> u_1), all
/// k vertices must be used, and classes under vertex relabelling are
/// represented by the lexicographically smallest relabelled cycle list.
using cycle_list = std::vector<std::vector<unsigned>>;  // vertex sequences

inline cycle_list relabel(cycle_list const& cycles, std::vector<unsigned> const& perm) {
  cycle_list out = cycles;
  for (auto& c : out) {
    for (auto& v : c) {
      v = perm[v - 1];
    }
  }
  return out;
}

inline cycle_list smallest_relabelling(cycle_list const& cycles, unsigned k) {
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 1u);
  cycle_list best = cycles;
  do {
    best = std::min(best, relabel(cycles, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Map vertex count k -> set of relabelling classes.
inline std::map<unsigned, std::set<cycle_list>> direct_digraph_search(std::vector<unsigned> const& sizes) {
  unsigned const total = std::accumulate(sizes.begin(), sizes.end(), 0u);
  std::map<unsigned, std::set<cycle_list>> out;
  for (unsigned k = 1; k <= total; ++k) {
    cycle_list current;
    std::function<void(std::size_t)> pick_cycle = [&](std::size_t i) {
      if (i == sizes.size()) {
        std::set<unsigned> used;
        for (auto const& c : current) {
          used.insert(c.begin(), c.end());
        }
        if (used.size() == k) {
          out[k].insert(smallest_relabelling(current, k));
        }
        return;
      }
      std::vector<unsigned> seq;
      std::function<void()> extend = [&] {
        if (seq.size() == sizes[i]) {
          current.push_back(seq);
          pick_cycle(i + 1);
          current.pop_back();
          return;
        }
        for (unsigned v = 1; v <= k; ++v) {
          if (std::find(seq.begin(), seq.end(), v) == seq.end()) {
            seq.push_back(v);
            extend();
            seq.pop_back();
          }
        }
      };
      extend();
    };
    pick_cycle(0);
  }
  return out;
}

}  // namespace oracle
