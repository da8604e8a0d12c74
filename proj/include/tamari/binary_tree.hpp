#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace tamari {

class IntervalPoset;

// A planar binary tree. Internal nodes are identified by their in-order label
// 1..size(); child slots hold the label of the child or 0 for a leaf.
//
// Values are immutable; every operation returns a new tree.
class BinaryTree {
 public:
  // The tree of size 0 (a single leaf).
  BinaryTree();

  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  // Y, the unique tree of size 1.
  static BinaryTree y() { return node(leaf(), leaf()); }
  // Every node is the left child of its parent: the minimum of Tam_n.
  static BinaryTree left_comb(int n);
  // Every node is the right child of its parent: the maximum of Tam_n.
  static BinaryTree right_comb(int n);
  // From child arrays indexed by in-order label (index 0 unused, 0 = leaf).
  // Throws PreconditionError unless they describe one tree whose in-order
  // traversal is 1..n.
  static BinaryTree from_children(std::vector<int> left, std::vector<int> right, int root);

  int size() const { return static_cast<int>(left_.size()) - 1; }
  bool is_leaf() const { return root_ == 0; }
  int root() const { return root_; }
  int left_child(int v) const { return left_.at(static_cast<std::size_t>(v)); }
  int right_child(int v) const { return right_.at(static_cast<std::size_t>(v)); }

  // Labels covered by the subtree rooted at v, as a closed range [lo, hi].
  std::pair<int, int> span(int v) const {
    return {lo_.at(static_cast<std::size_t>(v)), hi_.at(static_cast<std::size_t>(v))};
  }

  BinaryTree left_subtree() const;
  BinaryTree right_subtree() const;
  // The subtree rooted at v, relabeled from 1.
  BinaryTree subtree(int v) const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

 private:
  BinaryTree(std::vector<int> left, std::vector<int> right, int root);
  void compute_spans();

  // Index 0 is unused so that labels index directly.
  std::vector<int> left_;
  std::vector<int> right_;
  int root_ = 0;
  std::vector<int> lo_;
  std::vector<int> hi_;

  friend std::vector<BinaryTree> covers(const BinaryTree& t);
  friend BinaryTree mirror(const BinaryTree& t);
};

// All trees of size n. Ordered by left-subtree size, then recursively by the
// left subtree, then by the right subtree.
std::vector<BinaryTree> enumerate_trees(int n);

// The poset induced by the in-order labeling: i is below j iff i lies in the
// subtree rooted at j. Rejects the empty tree.
IntervalPoset tree_poset(const BinaryTree& t);

// Tamari order, tested as Dec(t1) ⊆ Dec(t2).
bool tamari_leq(const BinaryTree& t1, const BinaryTree& t2);

// Trees reached by one rotation ((A B) C) -> (A (B C)); these are the trees
// covering t in the Tamari order.
std::vector<BinaryTree> covers(const BinaryTree& t);

// Grafts the root of s on the i-th leaf of t (leaves numbered 1..size(t)+1
// from left to right).
BinaryTree graft(const BinaryTree& t, int i, const BinaryTree& s);

// Left/right reflection.
BinaryTree mirror(const BinaryTree& t);

}  // namespace tamari
