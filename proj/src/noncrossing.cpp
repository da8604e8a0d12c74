#include "tamari/noncrossing.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "tamari/classifiers.hpp"
#include "tamari/error.hpp"
#include "tamari/interval_poset.hpp"

namespace tamari {

namespace {

std::string chord_text(const Chord& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// i < j < k < l with i, k in one block and j, l in another. block_of is
// indexed by element, 1-based.
std::optional<std::array<int, 4>> find_crossing(const std::vector<int>& block_of, int n) {
  auto blk = [&](int x) { return block_of[static_cast<std::size_t>(x)]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (blk(i) == blk(j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (blk(k) != blk(i)) continue;
        for (int l = k + 1; l <= n; ++l) {
          if (blk(l) == blk(j)) return std::array{i, j, k, l};
        }
      }
    }
  }
  return std::nullopt;
}

bool nested_in(const Chord& inner, const Chord& outer) {
  return outer.a <= inner.a && inner.b <= outer.b;
}

}  // namespace

bool chords_cross(const Chord& x, const Chord& y) {
  const Chord& first = x.a <= y.a ? x : y;
  const Chord& second = x.a <= y.a ? y : x;
  return first.a < second.a && second.a < first.b && first.b < second.b;
}

NoncrossingTree NoncrossingTree::from_edges(int n, std::vector<Chord> edges) {
  if (n < 1) throw PreconditionError("NotANoncrossingTree", "size must be >= 1");
  std::sort(edges.begin(), edges.end());
  if (static_cast<int>(edges.size()) != n) {
    throw PreconditionError("NotANoncrossingTree", "expected " + std::to_string(n) +
                                                       " edges, got " +
                                                       std::to_string(edges.size()));
  }
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw PreconditionError("NotANoncrossingTree", "duplicate edge");
  }
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Chord& c = edges[e];
    if (c.a < 0 || c.a >= c.b || c.b > n) {
      throw PreconditionError("NotANoncrossingTree", "bad chord " + chord_text(c));
    }
    for (std::size_t f = 0; f < e; ++f) {
      if (chords_cross(edges[f], c)) {
        throw PreconditionError("NotANoncrossingTree",
                                chord_text(edges[f]) + " crosses " + chord_text(c));
      }
    }
    const int ra = find_root(parent, c.a);
    const int rb = find_root(parent, c.b);
    if (ra == rb) throw PreconditionError("NotANoncrossingTree", "cycle through " + chord_text(c));
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return NoncrossingTree(n, std::move(edges));
}

NoncrossingTree NoncrossingTree::boundary(int n) {
  std::vector<Chord> edges;
  for (int k = 1; k <= n; ++k) edges.push_back({k - 1, k});
  return from_edges(n, std::move(edges));
}

bool NoncrossingTree::contains(const Chord& c) const {
  return std::binary_search(edges_.begin(), edges_.end(), c);
}

std::vector<NoncrossingTree> enumerate_nct(int n) {
  if (n < 1) throw PreconditionError("NotANoncrossingTree", "size must be >= 1");
  std::vector<Chord> chords;
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) chords.push_back({a, b});
  }
  std::vector<NoncrossingTree> out;
  std::vector<Chord> chosen;
  // Backtracking over chords in lexicographic order keeps the output sorted.
  std::function<void(std::size_t, std::vector<int>)> extend = [&](std::size_t next,
                                                                   std::vector<int> parent) {
    if (static_cast<int>(chosen.size()) == n) {
      out.push_back(NoncrossingTree::from_edges(n, chosen));
      return;
    }
    const std::size_t missing = static_cast<std::size_t>(n) - chosen.size();
    for (std::size_t c = next; c + missing <= chords.size(); ++c) {
      const Chord& chord = chords[c];
      if (std::any_of(chosen.begin(), chosen.end(),
                      [&](const Chord& e) { return chords_cross(e, chord); })) {
        continue;
      }
      auto p = parent;
      const int ra = find_root(p, chord.a);
      const int rb = find_root(p, chord.b);
      if (ra == rb) continue;
      p[static_cast<std::size_t>(ra)] = rb;
      chosen.push_back(chord);
      extend(c + 1, std::move(p));
      chosen.pop_back();
    }
  };
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  extend(0, std::move(parent));
  return out;
}

std::map<Chord, int> edge_labels(const NoncrossingTree& t) {
  std::vector<Chord> by_span = t.edges();
  std::stable_sort(by_span.begin(), by_span.end(), [](const Chord& x, const Chord& y) {
    return (x.b - x.a) < (y.b - y.a);
  });
  std::map<Chord, int> labels;
  for (const Chord& c : by_span) {
    if (c.b - c.a == 1) {
      labels[c] = c.b;
      continue;
    }
    std::uint64_t free = element_range_mask(c.a + 1, c.b);
    for (const auto& [inner, label] : labels) {
      if (nested_in(inner, c)) free &= ~(std::uint64_t{1} << label);
    }
    if (std::popcount(free) != 1) {
      throw std::logic_error("edge_labels: chord " + chord_text(c) + " has " +
                             std::to_string(std::popcount(free)) + " open boundary edges");
    }
    labels[c] = std::countr_zero(free);
  }
  return labels;
}

IntervalPoset nct_to_poset(const NoncrossingTree& t) {
  const int n = t.size();
  std::vector<Chord> chord_of(static_cast<std::size_t>(n) + 1);
  for (const auto& [chord, label] : edge_labels(t)) chord_of[static_cast<std::size_t>(label)] = chord;
  RangeRelation r(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && nested_in(chord_of[static_cast<std::size_t>(i)],
                              chord_of[static_cast<std::size_t>(j)])) {
        r.add(i, j);
      }
    }
  }
  return IntervalPoset::from_relation(r);
}

NoncrossingTree poset_to_nct(const IntervalPoset& p) {
  if (!is_exceptional(p)) {
    throw PreconditionError("NotExceptional", "poset_to_nct requires an exceptional poset");
  }
  std::vector<Chord> edges;
  for (int v = 1; v <= p.size(); ++v) {
    const std::uint64_t down = p.below(v) | (std::uint64_t{1} << v);
    const int lo = std::countr_zero(down);
    const int hi = 63 - std::countl_zero(down);
    edges.push_back({lo - 1, hi});
  }
  return NoncrossingTree::from_edges(p.size(), std::move(edges));
}

std::variant<NoncrossingTree, PlantOutcome> nct_compose(const NoncrossingTree& f, int i,
                                                        const NoncrossingTree& g) {
  const int m = f.size();
  const int k = g.size();
  if (i < 1 || i > m) {
    throw PreconditionError("SideOutOfRange", "side " + std::to_string(i) + " not in [1, " +
                                                  std::to_string(m) + "]");
  }
  const Chord diagonal{i - 1, i - 1 + k};
  const bool in_f = f.contains({i - 1, i});
  const bool in_g = g.is_based();
  if (!in_f && !in_g) return PlantOutcome{};

  // f's vertices up to i-1 stay, g occupies i-1..i-1+k, the rest of f moves
  // up by k-1.
  auto place_f = [&](int v) { return v <= i - 1 ? v : v + k - 1; };
  std::vector<Chord> edges;
  for (const Chord& c : f.edges()) {
    if (c == Chord{i - 1, i}) continue;
    edges.push_back({place_f(c.a), place_f(c.b)});
  }
  for (const Chord& c : g.edges()) {
    if (c == Chord{0, k}) continue;
    edges.push_back({c.a + i - 1, c.b + i - 1});
  }
  if (in_f && in_g) edges.push_back(diagonal);
  return NoncrossingTree::from_edges(m + k - 1, std::move(edges));
}

NoncrossingPartition NoncrossingPartition::from_blocks(int n,
                                                       std::vector<std::vector<int>> blocks) {
  if (n < 1) throw PreconditionError("NotANoncrossingPartition", "size must be >= 1");
  NoncrossingPartition out;
  out.size_ = n;
  out.block_of_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (auto& b : blocks) {
    if (b.empty()) throw PreconditionError("NotANoncrossingPartition", "empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (int x : blocks[bi]) {
      if (x < 1 || x > n) {
        throw PreconditionError("NotANoncrossingPartition",
                                "element " + std::to_string(x) + " out of range");
      }
      if (out.block_of_[static_cast<std::size_t>(x)] != -1) {
        throw PreconditionError("NotANoncrossingPartition",
                                "element " + std::to_string(x) + " repeated");
      }
      out.block_of_[static_cast<std::size_t>(x)] = static_cast<int>(bi);
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (out.block_of_[static_cast<std::size_t>(x)] == -1) {
      throw PreconditionError("NotANoncrossingPartition",
                              "element " + std::to_string(x) + " missing");
    }
  }
  if (const auto w = find_crossing(out.block_of_, n)) {
    throw PreconditionError("NotANoncrossingPartition",
                            "blocks cross at " + std::to_string((*w)[0]) + "<" +
                                std::to_string((*w)[1]) + "<" + std::to_string((*w)[2]) + "<" +
                                std::to_string((*w)[3]));
  }
  out.blocks_ = std::move(blocks);
  return out;
}

NoncrossingPartition NoncrossingPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) blocks.push_back({x});
  return from_blocks(n, std::move(blocks));
}

std::vector<NoncrossingPartition> enumerate_ncp(int n) {
  if (n < 1) throw PreconditionError("NotANoncrossingPartition", "size must be >= 1");
  std::vector<NoncrossingPartition> out;
  // Restricted growth strings, lexicographically; rgs[x] is the block of x.
  std::vector<int> rgs(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> extend = [&](int x, int blocks_used) {
    if (x > n) {
      if (find_crossing(rgs, n)) return;
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(blocks_used));
      for (int y = 1; y <= n; ++y) {
        blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(y)])].push_back(y);
      }
      out.push_back(NoncrossingPartition::from_blocks(n, std::move(blocks)));
      return;
    }
    for (int b = 0; b <= blocks_used; ++b) {
      rgs[static_cast<std::size_t>(x)] = b;
      extend(x + 1, std::max(blocks_used, b + 1));
    }
  };
  extend(1, 0);
  return out;
}

NoncrossingPartition partition_of_tree(const BinaryTree& t) {
  const int n = t.size();
  if (n == 0) throw PreconditionError("EmptyTree", "partition_of_tree needs size >= 1");
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) {
    // Block heads are the vertices that are not a right child.
    bool is_right_child = false;
    for (int u = 1; u <= n; ++u) is_right_child = is_right_child || t.right_child(u) == v;
    if (is_right_child) continue;
    std::vector<int> block;
    for (int x = v; x != 0; x = t.right_child(x)) block.push_back(x);
    blocks.push_back(std::move(block));
  }
  return NoncrossingPartition::from_blocks(n, std::move(blocks));
}

BinaryTree tree_of_partition(const NoncrossingPartition& pi) {
  const int n = pi.size();
  std::vector<int> left(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> right(left.size(), 0);
  int root = 0;
  for (const auto& block : pi.blocks()) {
    for (std::size_t e = 0; e + 1 < block.size(); ++e) {
      right[static_cast<std::size_t>(block[e])] = block[e + 1];
    }
    const int max = block.back();
    if (max == n) {
      root = block.front();
    } else {
      left[static_cast<std::size_t>(max + 1)] = block.front();
    }
  }
  // Rebuild through node() so the result is a canonical BinaryTree value.
  std::function<BinaryTree(int)> build = [&](int v) -> BinaryTree {
    if (v == 0) return BinaryTree::leaf();
    return BinaryTree::node(build(left[static_cast<std::size_t>(v)]),
                            build(right[static_cast<std::size_t>(v)]));
  };
  return build(root);
}

bool ncp_leq(const NoncrossingPartition& p1, const NoncrossingPartition& p2) {
  if (p1.size() != p2.size()) {
    throw PreconditionError("SizeMismatch", std::to_string(p1.size()) + " vs " +
                                                std::to_string(p2.size()));
  }
  for (const auto& block : p1.blocks()) {
    const int target = p2.block_of(block.front());
    for (int x : block) {
      if (p2.block_of(x) != target) return false;
    }
  }
  return true;
}

IntervalPoset ncp_interval_to_ip(const NoncrossingPartition& p1,
                                 const NoncrossingPartition& p2) {
  if (!ncp_leq(p1, p2)) {
    throw PreconditionError("NotAnInterval", "partitions are not ordered by refinement");
  }
  return from_interval(TamariInterval(tree_of_partition(p1), tree_of_partition(p2)));
}

}  // namespace tamari
