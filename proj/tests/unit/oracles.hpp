#pragma once

// Brute-force reference implementations used by the tests. They share no code
// with the library beyond the value types they read.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/relation.hpp"

namespace oracle {

using Rel = std::set<std::pair<int, int>>;

// C_n by the convolution recurrence.
inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 0; k < m; ++k) {
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    }
  }
  return c[static_cast<std::size_t>(n)];
}

// Product of lo..hi in 128 bits.
inline unsigned __int128 range_product(int lo, int hi) {
  unsigned __int128 p = 1;
  for (int i = lo; i <= hi; ++i) p *= static_cast<unsigned>(i);
  return p;
}

// 2(4n+1)! / ((n+1)!(3n+2)!) = 2 (3n+3)...(4n+1) / (n+1)!, exact for n <= 8.
inline std::uint64_t interval_formula(int n) {
  return static_cast<std::uint64_t>(2 * range_product(3 * n + 3, 4 * n + 1) /
                                    range_product(1, n + 1));
}

// binom(3n, n) / (2n+1) by Pascal's triangle.
inline std::uint64_t fuss(int n) {
  std::vector<std::vector<std::uint64_t>> b(static_cast<std::size_t>(3 * n) + 1);
  for (int i = 0; i <= 3 * n; ++i) {
    b[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) {
      b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  return b[static_cast<std::size_t>(3 * n)][static_cast<std::size_t>(n)] /
         static_cast<std::uint64_t>(2 * n + 1);
}

// Full (non-reflexive) relation of a library poset.
inline Rel relation_of(const tamari::IntervalPoset& p) {
  Rel r;
  for (int a = 1; a <= p.size(); ++a) {
    for (int b = 1; b <= p.size(); ++b) {
      if (a != b && p.related(a, b)) r.insert({a, b});
    }
  }
  return r;
}

inline Rel closure(int n, Rel r) {
  for (int k = 1; k <= n; ++k) {
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (r.count({a, k}) && r.count({k, b}) && a != b) r.insert({a, b});
      }
    }
  }
  return r;
}

// Closed relation r (no reflexive pairs): antisymmetric and both conditions.
inline bool is_interval_poset(int n, const Rel& r) {
  for (const auto& [a, b] : r) {
    if (r.count({b, a})) return false;
    if (a < b) {
      for (int m = a + 1; m < b; ++m) {
        if (!r.count({m, b})) return false;
      }
    } else {
      for (int m = b + 1; m < a; ++m) {
        if (!r.count({m, b})) return false;
      }
    }
  }
  (void)n;
  return true;
}

// Every interval-poset of size n, by closing every subset of the n(n-1)
// possible pairs. Feasible for n <= 4.
inline std::set<Rel> all_interval_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  std::set<Rel> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Rel r;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) r.insert(pairs[i]);
    }
    const Rel c = closure(n, r);
    if (c == r && is_interval_poset(n, c)) out.insert(c);
  }
  return out;
}

// Ancestor relation of a tree by walking parent pointers: i ⊴ j iff j is a
// proper ancestor of i.
inline Rel tree_relation(const tamari::BinaryTree& t) {
  const int n = t.size();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (t.left_child(v) != 0) parent[static_cast<std::size_t>(t.left_child(v))] = v;
    if (t.right_child(v) != 0) parent[static_cast<std::size_t>(t.right_child(v))] = v;
  }
  Rel r;
  for (int v = 1; v <= n; ++v) {
    for (int a = parent[static_cast<std::size_t>(v)]; a != 0; a = parent[static_cast<std::size_t>(a)]) {
      r.insert({v, a});
    }
  }
  return r;
}

// Tamari order as reachability under covers().
inline std::map<tamari::BinaryTree, std::set<tamari::BinaryTree>> reachability(int n) {
  std::map<tamari::BinaryTree, std::set<tamari::BinaryTree>> up;
  for (const auto& t : tamari::enumerate_trees(n)) {
    std::set<tamari::BinaryTree> seen{t};
    std::deque<tamari::BinaryTree> queue{t};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& y : tamari::covers(x)) {
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    up[t] = std::move(seen);
  }
  return up;
}

// All permutations of 1..n extending r.
inline std::vector<std::vector<int>> extensions(int n, const Rel& r) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    bool ok = true;
    for (const auto& [a, b] : r) {
      ok = ok && pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace oracle
