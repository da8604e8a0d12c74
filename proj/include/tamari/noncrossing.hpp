#pragma once

#include <compare>
#include <map>
#include <variant>
#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/relation.hpp"

namespace tamari {

// A segment between polygon vertices a < b. In the (n+1)-gon with vertices
// 0..n, boundary edge k is (k-1, k) and the base is (0, n).
struct Chord {
  int a = 0;
  int b = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

bool chords_cross(const Chord& x, const Chord& y);

// A noncrossing spanning tree of the based (n+1)-gon, n >= 1. For n = 1 the
// polygon degenerates to the single segment (0, 1), which is both the base
// and boundary edge 1.
class NoncrossingTree {
 public:
  // Validates: n edges, noncrossing, connected and acyclic.
  static NoncrossingTree from_edges(int n, std::vector<Chord> edges);
  // All boundary edges 1..n.
  static NoncrossingTree boundary(int n);

  int size() const { return size_; }
  // Sorted.
  const std::vector<Chord>& edges() const { return edges_; }
  bool contains(const Chord& c) const;
  bool is_based() const { return contains(Chord{0, size_}); }

  friend bool operator==(const NoncrossingTree&, const NoncrossingTree&) = default;
  friend auto operator<=>(const NoncrossingTree&, const NoncrossingTree&) = default;

 private:
  NoncrossingTree(int n, std::vector<Chord> edges) : size_(n), edges_(std::move(edges)) {}

  int size_ = 0;
  std::vector<Chord> edges_;
};

// All noncrossing trees of the (n+1)-gon, ordered lexicographically by their
// sorted edge lists.
std::vector<NoncrossingTree> enumerate_nct(int n);

// Boundary edges carry their own index; every other chord (a, b) gets the one
// index of [a+1, b] not taken by an edge nested inside it.
std::map<Chord, int> edge_labels(const NoncrossingTree& t);

// i ⊴ j iff the edge labeled i is nested (closed nesting) inside the edge
// labeled j.
IntervalPoset nct_to_poset(const NoncrossingTree& t);

// Each v contributes the chord (min D - 1, max D) for its down-set D.
// Throws PreconditionError (NotExceptional) unless p is exceptional.
NoncrossingTree poset_to_nct(const IntervalPoset& p);

// Both trees had no grafting diagonal; the composite is a noncrossing plant.
struct PlantOutcome {
  friend bool operator==(const PlantOutcome&, const PlantOutcome&) = default;
};

// Glues g's base onto side i of f (1 ≤ i ≤ f.size()). The shared diagonal is
// kept when both carry it and dropped when exactly one does.
std::variant<NoncrossingTree, PlantOutcome> nct_compose(const NoncrossingTree& f, int i,
                                                        const NoncrossingTree& g);

// A noncrossing set partition of {1..n}; blocks sorted internally and by
// minimum.
class NoncrossingPartition {
 public:
  static NoncrossingPartition from_blocks(int n, std::vector<std::vector<int>> blocks);
  static NoncrossingPartition singletons(int n);

  int size() const { return size_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // Index into blocks() of the block holding x.
  int block_of(int x) const { return block_of_.at(static_cast<std::size_t>(x)); }

  friend bool operator==(const NoncrossingPartition& x, const NoncrossingPartition& y) {
    return x.size_ == y.size_ && x.blocks_ == y.blocks_;
  }
  friend auto operator<=>(const NoncrossingPartition& x, const NoncrossingPartition& y) {
    if (auto c = x.size_ <=> y.size_; c != 0) return c;
    return x.blocks_ <=> y.blocks_;
  }

 private:
  NoncrossingPartition() = default;

  int size_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// All noncrossing partitions of {1..n} in restricted-growth-string order.
std::vector<NoncrossingPartition> enumerate_ncp(int n);

// Finest partition joining every vertex with its right child.
NoncrossingPartition partition_of_tree(const BinaryTree& t);

// Chains each block by right sons, then hangs each block as the left son of
// the vertex following the block's maximum.
BinaryTree tree_of_partition(const NoncrossingPartition& pi);

// Refinement: every block of p1 inside a block of p2.
bool ncp_leq(const NoncrossingPartition& p1, const NoncrossingPartition& p2);

// from_interval([T_p1, T_p2]); requires ncp_leq(p1, p2).
IntervalPoset ncp_interval_to_ip(const NoncrossingPartition& p1,
                                 const NoncrossingPartition& p2);

}  // namespace tamari
