#pragma once

#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/relation.hpp"

namespace tamari {

// An interval [lower, upper] of the Tamari lattice; the constructor enforces
// equal sizes and lower ≤ upper.
class TamariInterval {
 public:
  TamariInterval(BinaryTree lower, BinaryTree upper);

  const BinaryTree& lower() const { return lower_; }
  const BinaryTree& upper() const { return upper_; }
  int size() const { return lower_.size(); }

  friend bool operator==(const TamariInterval&, const TamariInterval&) = default;
  friend auto operator<=>(const TamariInterval&, const TamariInterval&) = default;

 private:
  BinaryTree lower_;
  BinaryTree upper_;
};

// Dec(lower) ∪ Inc(upper).
IntervalPoset from_interval(const TamariInterval& interval);

// Inverse of from_interval: the increasing forest yields the upper tree
// (right brother -> right son, son -> left son) and the decreasing forest
// the lower tree (left brother -> left son, son -> right son).
TamariInterval to_interval(const IntervalPoset& p);

// All interval-posets of size n in canonical order (lexicographic on the
// sorted increasing pairs, then the sorted decreasing pairs).
std::vector<IntervalPoset> enumerate_interval_posets(int n);

// All intervals of Tam_n, ordered by (lower, upper) position in
// enumerate_trees(n).
std::vector<TamariInterval> enumerate_intervals(int n);

// a ⊴_Q b iff (n+1-a) ⊴_P (n+1-b).
IntervalPoset mirror_poset(const IntervalPoset& p);

// Trees t with lower ≤ t ≤ upper, in enumerate_trees order.
std::vector<BinaryTree> interval_members(const IntervalPoset& p);

// Linear extensions as sequences of elements (a ⊴ b puts a before b), in
// lexicographic order. Throws PreconditionError if r's closure has a cycle.
std::vector<std::vector<int>> linear_extensions(const RangeRelation& r);
std::vector<std::vector<int>> linear_extensions(const IntervalPoset& p);

}  // namespace tamari
