#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tamari {

// (a, b) reads "a ⊴ b".
using Pair = std::pair<int, int>;

// Largest ground set a relation can carry (one 64-bit row per element).
inline constexpr int kMaxRelationSize = 63;

// Bitset of the elements lo..hi (empty when lo > hi).
constexpr std::uint64_t element_range_mask(int lo, int hi) {
  if (lo > hi) return 0;
  const std::uint64_t upto_hi = hi >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (hi + 1)) - 1;
  return upto_hi & ~((std::uint64_t{1} << lo) - 1);
}

// A reflexive binary relation on {1..n}, stored by its non-reflexive pairs.
// No closure or poset property is assumed: rises of interval-posets land
// here and are validated separately.
class RangeRelation {
 public:
  RangeRelation() = default;
  explicit RangeRelation(int size);
  RangeRelation(int size, std::span<const Pair> pairs);

  int size() const { return size_; }

  // Records a ⊴ b. Reflexive pairs are ignored.
  void add(int a, int b);
  bool contains(int a, int b) const;

  // Bitset of the elements b with a ⊴ b, a excluded.
  std::uint64_t above(int a) const { return rows_.at(static_cast<std::size_t>(a)); }

  // Pairs (a, b) with a < b, sorted.
  std::vector<Pair> increasing() const;
  // Pairs (b, a) with a < b, sorted.
  std::vector<Pair> decreasing() const;
  std::vector<Pair> pairs() const;

  RangeRelation transitive_closure() const;

  friend bool operator==(const RangeRelation&, const RangeRelation&) = default;
  friend auto operator<=>(const RangeRelation&, const RangeRelation&) = default;

 private:
  void check_element(int a) const;

  int size_ = 0;
  std::vector<std::uint64_t> rows_;
};

// A poset on {1..n}, n >= 1, satisfying both interval conditions. The stored
// relation is always transitively closed.
class IntervalPoset {
 public:
  // Closes the given relations and validates; throws PreconditionError when
  // the closure is not an interval-poset.
  static IntervalPoset from_relations(int size, std::span<const Pair> inc,
                                      std::span<const Pair> dec);
  static IntervalPoset from_relation(const RangeRelation& relation);
  static IntervalPoset empty(int size);

  int size() const { return relation_.size(); }
  // Reflexive: related(a, a) holds.
  bool related(int a, int b) const { return a == b || relation_.contains(a, b); }
  std::uint64_t above(int a) const { return relation_.above(a); }
  std::uint64_t below(int b) const;

  std::vector<Pair> increasing() const { return relation_.increasing(); }
  std::vector<Pair> decreasing() const { return relation_.decreasing(); }
  const RangeRelation& relation() const { return relation_; }

  // Key of the canonical enumeration order: (sorted inc, sorted dec).
  std::pair<std::vector<Pair>, std::vector<Pair>> canonical_key() const;

  friend bool operator==(const IntervalPoset&, const IntervalPoset&) = default;
  friend auto operator<=>(const IntervalPoset&, const IntervalPoset&) = default;

 private:
  explicit IntervalPoset(RangeRelation closed) : relation_(std::move(closed)) {}

  RangeRelation relation_;

  friend IntervalPoset unchecked_interval_poset(RangeRelation closed);
};

// Internal: wraps a relation already known to be a closed interval-poset.
// Asserts in debug builds.
IntervalPoset unchecked_interval_poset(RangeRelation closed);

// The closure has a cycle a ⊴ ... ⊴ a through distinct elements. `cycle`
// lists a shortest one in the original relation, starting from its smallest
// element.
struct NotAPoset {
  std::vector<int> cycle;
};

// condition 1: a ⊴ c with a < b < c but not b ⊴ c.
// condition 2: c ⊴ a with a < b < c but not b ⊴ a.
struct IntervalConditionViolated {
  int a = 0;
  int b = 0;
  int c = 0;
  int condition = 0;
};

using ValidationResult = std::variant<IntervalPoset, NotAPoset, IntervalConditionViolated>;

// Takes the transitive closure of r and checks antisymmetry, then interval
// condition (1), then (2). Diagnostics carry the lexicographically smallest
// witness.
ValidationResult validate(const RangeRelation& r);

inline bool is_valid(const ValidationResult& v) {
  return std::holds_alternative<IntervalPoset>(v);
}

std::string describe(const ValidationResult& v);

}  // namespace tamari
