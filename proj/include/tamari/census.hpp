#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamari {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// (2n choose n) / (n+1).
BigInt catalan(int n);
// 2(4n+1)! / ((n+1)! (3n+2)!): intervals of Tam_n.
BigInt formula_intervals(int n);
// 3 · 2^(n-2) (2n-2)! / ((n-1)! (n+1)!): new intervals of Tam_n. The
// expression is not an integer at n = 1, so n >= 2 is required.
BigInt formula_new(int n);
// (3n choose n) / (2n+1).
BigInt fuss_catalan(int n);

inline constexpr int kDefaultCensusBound = 6;

struct CensusEntry {
  std::string family;
  std::uint64_t count = 0;
  // Absent when no closed formula covers this (family, size).
  std::optional<BigInt> formula;
  bool matches() const { return !formula || BigInt(count) == *formula; }
};

// Counts of every family at one size, by exhaustive enumeration.
struct CensusRow {
  int size = 0;
  std::uint64_t intervals = 0;
  std::uint64_t exceptional = 0;
  std::uint64_t modern = 0;
  // New intervals of Tam_n, by the grafting-decomposition search.
  std::uint64_t new_intervals = 0;
  std::uint64_t infinitely_modern = 0;
  std::uint64_t trees = 0;
  std::uint64_t noncrossing_trees = 0;
  std::uint64_t noncrossing_partitions = 0;
  std::uint64_t ncp_intervals = 0;

  // One entry per family with its formula value.
  std::vector<CensusEntry> entries() const;
  // Families whose count disagrees with the formula.
  std::vector<std::string> mismatches() const;
};

// Throws PreconditionError when n is outside [1, bound].
CensusRow census(int n, int bound = kDefaultCensusBound);

// B(n, k, l) for 0 ≤ k, l < n, stored row-major as values[k][l].
struct TriangleB {
  int n = 0;
  std::vector<std::vector<BigInt>> values;

  const BigInt& at(int k, int l) const {
    return values.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(l));
  }
  BigInt row_sum() const;
  friend bool operator==(const TriangleB&, const TriangleB&) = default;
};

// B(1,0,0) = 1, B(n,k,l) = 0 for k+l ≥ n, otherwise the sum of B(n-1,i,j)
// over 0 ≤ i ≤ k, 0 ≤ j ≤ l.
TriangleB triangle_b_recurrence(int n);
// |{P infinitely modern of size n : dr = k+1, ir = n-l}| by enumeration.
TriangleB triangle_b_statistic(int n);

struct TriangleComparison {
  TriangleB by_recurrence;
  TriangleB by_statistic;
  bool agree() const { return by_recurrence == by_statistic; }
};

TriangleComparison triangle_b(int n);

}  // namespace tamari
