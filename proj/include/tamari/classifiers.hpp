#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/relation.hpp"

namespace tamari {

// ir: smallest k with k ⊴ k+1 (size() when there is none).
// dr: largest i with i ⊴ i-1 (1 when there is none).
struct StatPair {
  int ir = 0;
  int dr = 0;
  friend bool operator==(const StatPair&, const StatPair&) = default;
};

// Cover pairs (a, b) of the poset: a ⊴ b, a != b, nothing strictly between.
std::vector<Pair> hasse(const IntervalPoset& p);

// No element y covered in the Hasse diagram by both some x < y and some z > y.
bool is_exceptional(const IntervalPoset& p);

// No relations x ⊴ y and z ⊴ y with x < y < z, over the full relation.
bool is_modern(const IntervalPoset& p);

// No increasing relation from 1, no decreasing relation from n, and no pair
// i+1 ⊴ j+1, j ⊴ i with i < j.
bool is_new_ip(const IntervalPoset& p);

StatPair stat(const IntervalPoset& p);

// dr ≤ ir.
bool is_infinitely_modern(const IntervalPoset& p);

// Pattern w ⊴ x, z ⊴ y with strict w < x < y < z. Kept for comparison only:
// {1⊴2, 3⊴2} avoids it yet is not infinitely modern, so it is not used to
// classify anything.
bool has_strict_four_pattern(const IntervalPoset& p);

// Newness by exhaustive search for a grafting decomposition: the interval is
// new iff no internal subtree of the lower bound and internal subtree of the
// upper bound cover the same label range other than the whole [1, n].
bool is_new_interval(const TamariInterval& interval);

// (S1, T1) when lower = Y∘₁S1 and upper = Y∘₂T1; empty otherwise.
std::optional<std::pair<BinaryTree, BinaryTree>> nice_shape(const TamariInterval& interval);

}  // namespace tamari
