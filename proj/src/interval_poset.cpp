#include "tamari/interval_poset.hpp"

#include <algorithm>
#include <functional>

#include "tamari/error.hpp"

namespace tamari {

namespace {

constexpr std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

// Upper tree on [lo, hi]: the root is the first element with no increasing
// relation to a later element of the range; everything before it hangs in
// its left subtree.
BinaryTree upper_tree(const IntervalPoset& p, int lo, int hi) {
  if (lo > hi) return BinaryTree::leaf();
  int root = hi;
  for (int r = lo; r <= hi; ++r) {
    if ((p.above(r) & element_range_mask(r + 1, hi)) == 0) {
      root = r;
      break;
    }
  }
  return BinaryTree::node(upper_tree(p, lo, root - 1), upper_tree(p, root + 1, hi));
}

// Lower tree on [lo, hi]: mirror image of upper_tree on decreasing relations.
BinaryTree lower_tree(const IntervalPoset& p, int lo, int hi) {
  if (lo > hi) return BinaryTree::leaf();
  int root = lo;
  for (int r = hi; r >= lo; --r) {
    if ((p.above(r) & element_range_mask(lo, r - 1)) == 0) {
      root = r;
      break;
    }
  }
  return BinaryTree::node(lower_tree(p, lo, root - 1), lower_tree(p, root + 1, hi));
}

}  // namespace

TamariInterval::TamariInterval(BinaryTree lower, BinaryTree upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw PreconditionError("NotAnInterval", "bounds have sizes " +
                                                 std::to_string(lower_.size()) + " and " +
                                                 std::to_string(upper_.size()));
  }
  if (!tamari_leq(lower_, upper_)) {
    throw PreconditionError("NotAnInterval", "lower bound is not below upper bound");
  }
}

IntervalPoset from_interval(const TamariInterval& interval) {
  const IntervalPoset lower = tree_poset(interval.lower());
  const IntervalPoset upper = tree_poset(interval.upper());
  RangeRelation r(interval.size());
  for (const auto& [b, a] : lower.decreasing()) r.add(b, a);
  for (const auto& [a, b] : upper.increasing()) r.add(a, b);
  return IntervalPoset::from_relation(r);
}

TamariInterval to_interval(const IntervalPoset& p) {
  return TamariInterval(lower_tree(p, 1, p.size()), upper_tree(p, 1, p.size()));
}

std::vector<TamariInterval> enumerate_intervals(int n) {
  const auto trees = enumerate_trees(n);
  std::vector<TamariInterval> out;
  for (const auto& s : trees) {
    for (const auto& t : trees) {
      if (tamari_leq(s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

std::vector<IntervalPoset> enumerate_interval_posets(int n) {
  if (n < 1) throw PreconditionError("EmptyGroundSet", "interval-posets have size >= 1");
  using Key = std::pair<std::vector<Pair>, std::vector<Pair>>;
  std::vector<std::pair<Key, IntervalPoset>> keyed;
  for (const auto& interval : enumerate_intervals(n)) {
    IntervalPoset p = from_interval(interval);
    keyed.emplace_back(p.canonical_key(), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<IntervalPoset> out;
  out.reserve(keyed.size());
  for (auto& [key, p] : keyed) out.push_back(std::move(p));
  return out;
}

IntervalPoset mirror_poset(const IntervalPoset& p) {
  const int n = p.size();
  RangeRelation r(n);
  for (const auto& [a, b] : p.relation().pairs()) r.add(n + 1 - a, n + 1 - b);
  return unchecked_interval_poset(std::move(r));
}

std::vector<BinaryTree> interval_members(const IntervalPoset& p) {
  const TamariInterval interval = to_interval(p);
  std::vector<BinaryTree> out;
  for (const auto& t : enumerate_trees(p.size())) {
    if (tamari_leq(interval.lower(), t) && tamari_leq(t, interval.upper())) out.push_back(t);
  }
  return out;
}

std::vector<std::vector<int>> linear_extensions(const RangeRelation& r) {
  const int n = r.size();
  const RangeRelation closed = r.transitive_closure();
  std::vector<std::uint64_t> preds(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (closed.contains(a, b)) {
        if (closed.contains(b, a)) {
          throw PreconditionError("NotAPoset", "cycle through " + std::to_string(a) + " and " +
                                                   std::to_string(b));
        }
        preds[static_cast<std::size_t>(b)] |= bit(a);
      }
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t placed) {
    if (static_cast<int>(prefix.size()) == n) {
      out.push_back(prefix);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if ((placed & bit(x)) == 0 && (preds[static_cast<std::size_t>(x)] & ~placed) == 0) {
        prefix.push_back(x);
        extend(placed | bit(x));
        prefix.pop_back();
      }
    }
  };
  extend(0);
  return out;
}

std::vector<std::vector<int>> linear_extensions(const IntervalPoset& p) {
  return linear_extensions(p.relation());
}

}  // namespace tamari
