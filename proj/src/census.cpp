#include "tamari/census.hpp"

#include "tamari/classifiers.hpp"
#include "tamari/error.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/noncrossing.hpp"

namespace tamari {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw PreconditionError("NegativeSize", std::to_string(n));
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  if (num % den != 0) throw std::logic_error("closed formula is not integral");
  return num / den;
}

}  // namespace

BigInt factorial(int n) {
  require_nonnegative(n);
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt catalan(int n) {
  require_nonnegative(n);
  return exact_quotient(binomial(2 * n, n), n + 1);
}

BigInt formula_intervals(int n) {
  require_nonnegative(n);
  return exact_quotient(2 * factorial(4 * n + 1), factorial(n + 1) * factorial(3 * n + 2));
}

BigInt formula_new(int n) {
  if (n < 2) {
    throw PreconditionError("FormulaDomain", "the new-interval formula needs n >= 2 (3/4 at n = 1)");
  }
  BigInt power = 1;
  power <<= (n - 2);
  return exact_quotient(3 * power * factorial(2 * n - 2), factorial(n - 1) * factorial(n + 1));
}

BigInt fuss_catalan(int n) {
  require_nonnegative(n);
  return exact_quotient(binomial(3 * n, n), 2 * n + 1);
}

std::vector<CensusEntry> CensusRow::entries() const {
  std::optional<BigInt> new_formula;
  if (size >= 2) new_formula = formula_new(size);
  return {
      {"intervals", intervals, formula_intervals(size)},
      {"exceptional", exceptional, fuss_catalan(size)},
      {"modern", modern, formula_new(size + 1)},
      {"new", new_intervals, new_formula},
      {"infinitely_modern", infinitely_modern, fuss_catalan(size)},
      {"trees", trees, catalan(size)},
      {"nct", noncrossing_trees, fuss_catalan(size)},
      {"ncp", noncrossing_partitions, catalan(size)},
      {"ncp_intervals", ncp_intervals, fuss_catalan(size)},
  };
}

std::vector<std::string> CensusRow::mismatches() const {
  std::vector<std::string> out;
  for (const auto& e : entries()) {
    if (!e.matches()) out.push_back(e.family);
  }
  return out;
}

CensusRow census(int n, int bound) {
  if (n < 1 || n > bound) {
    throw PreconditionError("BoundExceeded", "census size " + std::to_string(n) +
                                                 " outside [1, " + std::to_string(bound) + "]");
  }
  CensusRow row;
  row.size = n;
  for (const auto& p : enumerate_interval_posets(n)) {
    ++row.intervals;
    row.exceptional += is_exceptional(p) ? 1 : 0;
    row.modern += is_modern(p) ? 1 : 0;
    row.infinitely_modern += is_infinitely_modern(p) ? 1 : 0;
  }
  for (const auto& interval : enumerate_intervals(n)) {
    row.new_intervals += is_new_interval(interval) ? 1 : 0;
  }
  row.trees = enumerate_trees(n).size();
  row.noncrossing_trees = enumerate_nct(n).size();
  const auto partitions = enumerate_ncp(n);
  row.noncrossing_partitions = partitions.size();
  for (const auto& p1 : partitions) {
    for (const auto& p2 : partitions) row.ncp_intervals += ncp_leq(p1, p2) ? 1 : 0;
  }
  return row;
}

BigInt TriangleB::row_sum() const {
  BigInt sum = 0;
  for (const auto& row : values) {
    for (const auto& v : row) sum += v;
  }
  return sum;
}

TriangleB triangle_b_recurrence(int n) {
  if (n < 1) throw PreconditionError("TriangleDomain", "n must be >= 1");
  TriangleB prev{1, {{1}}};
  for (int m = 2; m <= n; ++m) {
    TriangleB next{m, std::vector(static_cast<std::size_t>(m),
                                  std::vector<BigInt>(static_cast<std::size_t>(m), 0))};
    for (int k = 0; k < m; ++k) {
      for (int l = 0; k + l < m; ++l) {
        BigInt sum = 0;
        for (int i = 0; i <= k && i < m - 1; ++i) {
          for (int j = 0; j <= l && j < m - 1; ++j) sum += prev.at(i, j);
        }
        next.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = sum;
      }
    }
    prev = std::move(next);
  }
  return prev;
}

TriangleB triangle_b_statistic(int n) {
  if (n < 1) throw PreconditionError("TriangleDomain", "n must be >= 1");
  TriangleB out{n, std::vector(static_cast<std::size_t>(n),
                               std::vector<BigInt>(static_cast<std::size_t>(n), 0))};
  for (const auto& p : enumerate_interval_posets(n)) {
    if (!is_infinitely_modern(p)) continue;
    const StatPair s = stat(p);
    const int k = s.dr - 1;
    const int l = n - s.ir;
    out.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] += 1;
  }
  return out;
}

TriangleComparison triangle_b(int n) {
  return {triangle_b_recurrence(n), triangle_b_statistic(n)};
}

}  // namespace tamari
