#include "tamari/binary_tree.hpp"

#include <map>
#include <mutex>

#include "tamari/error.hpp"
#include "tamari/relation.hpp"

namespace tamari {

BinaryTree::BinaryTree() : left_(1, 0), right_(1, 0), root_(0), lo_(1, 0), hi_(1, 0) {}

BinaryTree::BinaryTree(std::vector<int> left, std::vector<int> right, int root)
    : left_(std::move(left)), right_(std::move(right)), root_(root) {
  compute_spans();
}

void BinaryTree::compute_spans() {
  const auto n = left_.size();
  lo_.assign(n, 0);
  hi_.assign(n, 0);
  // Children of v carry labels on either side of v, so a post-order walk
  // fills spans bottom-up. Iterative to keep deep combs off the call stack.
  std::vector<std::pair<int, bool>> stack;
  if (root_ != 0) stack.emplace_back(root_, false);
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    const auto sv = static_cast<std::size_t>(v);
    if (!expanded) {
      stack.emplace_back(v, true);
      if (left_[sv] != 0) stack.emplace_back(left_[sv], false);
      if (right_[sv] != 0) stack.emplace_back(right_[sv], false);
      continue;
    }
    lo_[sv] = left_[sv] != 0 ? lo_[static_cast<std::size_t>(left_[sv])] : v;
    hi_[sv] = right_[sv] != 0 ? hi_[static_cast<std::size_t>(right_[sv])] : v;
  }
}

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  const int nl = left.size();
  const int nr = right.size();
  const int root = nl + 1;
  std::vector<int> l(static_cast<std::size_t>(nl + nr + 2), 0);
  std::vector<int> r(l.size(), 0);
  for (int v = 1; v <= nl; ++v) {
    l[static_cast<std::size_t>(v)] = left.left_child(v);
    r[static_cast<std::size_t>(v)] = left.right_child(v);
  }
  auto shift = [root](int c) { return c == 0 ? 0 : c + root; };
  for (int v = 1; v <= nr; ++v) {
    l[static_cast<std::size_t>(v + root)] = shift(right.left_child(v));
    r[static_cast<std::size_t>(v + root)] = shift(right.right_child(v));
  }
  l[static_cast<std::size_t>(root)] = left.root();
  r[static_cast<std::size_t>(root)] = shift(right.root());
  return BinaryTree(std::move(l), std::move(r), root);
}

BinaryTree BinaryTree::from_children(std::vector<int> left, std::vector<int> right, int root) {
  const int n = static_cast<int>(left.size()) - 1;
  if (n < 0 || right.size() != left.size() || root < 0 || root > n || (root == 0) != (n == 0)) {
    throw PreconditionError("NotATree", "child arrays of mismatched size or bad root");
  }
  // In-order walk must visit 1, 2, ..., n exactly once.
  int expected = 1;
  std::vector<int> stack;
  int v = root;
  while (v != 0 || !stack.empty()) {
    while (v != 0) {
      if (v < 0 || v > n || static_cast<int>(stack.size()) > n) {
        throw PreconditionError("NotATree", "child label out of range or cycle");
      }
      stack.push_back(v);
      v = left[static_cast<std::size_t>(v)];
    }
    v = stack.back();
    stack.pop_back();
    if (v != expected++) throw PreconditionError("NotATree", "labels are not in-order");
    v = right[static_cast<std::size_t>(v)];
  }
  if (expected != n + 1) throw PreconditionError("NotATree", "unreachable nodes");
  return BinaryTree(std::move(left), std::move(right), root);
}

BinaryTree BinaryTree::left_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = node(t, leaf());
  return t;
}

BinaryTree BinaryTree::right_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = node(leaf(), t);
  return t;
}

BinaryTree BinaryTree::subtree(int v) const {
  if (v == 0) return leaf();
  const auto [lo, hi] = span(v);
  const int offset = lo - 1;
  std::vector<int> l(static_cast<std::size_t>(hi - lo + 2), 0);
  std::vector<int> r(l.size(), 0);
  auto shift = [offset](int c) { return c == 0 ? 0 : c - offset; };
  for (int u = lo; u <= hi; ++u) {
    l[static_cast<std::size_t>(u - offset)] = shift(left_child(u));
    r[static_cast<std::size_t>(u - offset)] = shift(right_child(u));
  }
  return BinaryTree(std::move(l), std::move(r), v - offset);
}

BinaryTree BinaryTree::left_subtree() const {
  return is_leaf() ? leaf() : subtree(left_child(root_));
}

BinaryTree BinaryTree::right_subtree() const {
  return is_leaf() ? leaf() : subtree(right_child(root_));
}

std::vector<BinaryTree> enumerate_trees(int n) {
  if (n < 0) throw PreconditionError("NegativeSize", std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::vector<BinaryTree>> cache;
  std::lock_guard lock(mutex);
  if (n == 0) return {BinaryTree::leaf()};
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Built bottom-up so the cache lock is never re-entered.
  std::vector<std::vector<BinaryTree>> by_size{{BinaryTree::leaf()}};
  for (int m = 1; m <= n; ++m) {
    if (auto it = cache.find(m); it != cache.end()) {
      by_size.push_back(it->second);
      continue;
    }
    std::vector<BinaryTree> out;
    for (int k = 0; k < m; ++k) {
      for (const auto& l : by_size[static_cast<std::size_t>(k)]) {
        for (const auto& r : by_size[static_cast<std::size_t>(m - 1 - k)]) {
          out.push_back(BinaryTree::node(l, r));
        }
      }
    }
    cache.emplace(m, out);
    by_size.push_back(std::move(out));
  }
  return by_size.back();
}

IntervalPoset tree_poset(const BinaryTree& t) {
  const int n = t.size();
  if (n == 0) throw PreconditionError("EmptyTree", "the induced poset needs size >= 1");
  RangeRelation r(n);
  for (int j = 1; j <= n; ++j) {
    const auto [lo, hi] = t.span(j);
    for (int i = lo; i <= hi; ++i) {
      if (i != j) r.add(i, j);
    }
  }
  return unchecked_interval_poset(std::move(r));
}

bool tamari_leq(const BinaryTree& t1, const BinaryTree& t2) {
  if (t1.size() != t2.size()) {
    throw PreconditionError("SizeMismatch", std::to_string(t1.size()) + " vs " +
                                                std::to_string(t2.size()));
  }
  // The decreasing relations ending at j are exactly the labels in the right
  // part (j, hi_j] of j's subtree, so Dec inclusion is a comparison of hi.
  for (int j = 1; j <= t1.size(); ++j) {
    if (t1.span(j).second > t2.span(j).second) return false;
  }
  return true;
}

std::vector<BinaryTree> covers(const BinaryTree& t) {
  std::vector<BinaryTree> out;
  const int n = t.size();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (t.left_child(v) != 0) parent[static_cast<std::size_t>(t.left_child(v))] = v;
    if (t.right_child(v) != 0) parent[static_cast<std::size_t>(t.right_child(v))] = v;
  }
  for (int v = 1; v <= n; ++v) {
    const int u = t.left_child(v);
    if (u == 0) continue;
    auto l = t.left_;
    auto r = t.right_;
    int root = t.root_;
    // v = ((A B) C) with u the root of (A B)  ->  u = (A (B C)).
    l[static_cast<std::size_t>(v)] = r[static_cast<std::size_t>(u)];
    r[static_cast<std::size_t>(u)] = v;
    const int p = parent[static_cast<std::size_t>(v)];
    if (p == 0) {
      root = u;
    } else if (l[static_cast<std::size_t>(p)] == v) {
      l[static_cast<std::size_t>(p)] = u;
    } else {
      r[static_cast<std::size_t>(p)] = u;
    }
    out.push_back(BinaryTree(std::move(l), std::move(r), root));
  }
  return out;
}

BinaryTree graft(const BinaryTree& t, int i, const BinaryTree& s) {
  if (i < 1 || i > t.size() + 1) {
    throw PreconditionError("LeafOutOfRange", "leaf " + std::to_string(i) + " not in [1, " +
                                                  std::to_string(t.size() + 1) + "]");
  }
  if (t.is_leaf()) return s;
  const BinaryTree left = t.left_subtree();
  const BinaryTree right = t.right_subtree();
  const int left_leaves = left.size() + 1;
  if (i <= left_leaves) return BinaryTree::node(graft(left, i, s), right);
  return BinaryTree::node(left, graft(right, i - left_leaves, s));
}

BinaryTree mirror(const BinaryTree& t) {
  const int n = t.size();
  std::vector<int> l(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> r(l.size(), 0);
  auto flip = [n](int c) { return c == 0 ? 0 : n + 1 - c; };
  for (int v = 1; v <= n; ++v) {
    l[static_cast<std::size_t>(flip(v))] = flip(t.right_child(v));
    r[static_cast<std::size_t>(flip(v))] = flip(t.left_child(v));
  }
  return BinaryTree(std::move(l), std::move(r), flip(t.root()));
}

}  // namespace tamari
