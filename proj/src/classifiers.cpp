#include "tamari/classifiers.hpp"

#include <bit>
#include <set>

namespace tamari {

namespace {

constexpr std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

std::uint64_t cover_row(const IntervalPoset& p, int a) {
  const std::uint64_t up = p.above(a);
  std::uint64_t implied = 0;
  for (std::uint64_t rest = up; rest != 0; rest &= rest - 1) {
    implied |= p.above(std::countr_zero(rest));
  }
  return up & ~implied;
}

// Label ranges of the internal subtrees of t, the whole range excluded.
std::set<std::pair<int, int>> proper_spans(const BinaryTree& t) {
  std::set<std::pair<int, int>> out;
  for (int v = 1; v <= t.size(); ++v) {
    if (v != t.root()) out.insert(t.span(v));
  }
  return out;
}

}  // namespace

std::vector<Pair> hasse(const IntervalPoset& p) {
  std::vector<Pair> out;
  for (int a = 1; a <= p.size(); ++a) {
    for (std::uint64_t row = cover_row(p, a); row != 0; row &= row - 1) {
      out.emplace_back(a, std::countr_zero(row));
    }
  }
  return out;
}

bool is_exceptional(const IntervalPoset& p) {
  for (int y = 1; y <= p.size(); ++y) {
    const std::uint64_t row = cover_row(p, y);
    const bool to_smaller = (row & element_range_mask(1, y - 1)) != 0;
    const bool to_larger = (row & element_range_mask(y + 1, p.size())) != 0;
    if (to_smaller && to_larger) return false;
  }
  return true;
}

bool is_modern(const IntervalPoset& p) {
  for (int y = 1; y <= p.size(); ++y) {
    const std::uint64_t into = p.below(y);
    if ((into & element_range_mask(1, y - 1)) != 0 &&
        (into & element_range_mask(y + 1, p.size())) != 0) {
      return false;
    }
  }
  return true;
}

bool is_new_ip(const IntervalPoset& p) {
  const int n = p.size();
  if ((p.above(1) & element_range_mask(2, n)) != 0) return false;
  if ((p.above(n) & element_range_mask(1, n - 1)) != 0) return false;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j + 1 <= n; ++j) {
      if (p.related(i + 1, j + 1) && p.related(j, i)) return false;
    }
  }
  return true;
}

StatPair stat(const IntervalPoset& p) {
  const int n = p.size();
  StatPair s{n, 1};
  for (int k = 1; k < n; ++k) {
    if (p.related(k, k + 1)) {
      s.ir = k;
      break;
    }
  }
  for (int i = n; i > 1; --i) {
    if (p.related(i, i - 1)) {
      s.dr = i;
      break;
    }
  }
  return s;
}

bool is_infinitely_modern(const IntervalPoset& p) {
  const StatPair s = stat(p);
  return s.dr <= s.ir;
}

bool has_strict_four_pattern(const IntervalPoset& p) {
  const int n = p.size();
  for (int x = 2; x <= n; ++x) {
    if ((p.below(x) & element_range_mask(1, x - 1)) == 0) continue;
    for (int y = x + 1; y < n; ++y) {
      if ((p.below(y) & element_range_mask(y + 1, n)) != 0) return true;
    }
  }
  return false;
}

bool is_new_interval(const TamariInterval& interval) {
  const auto lower = proper_spans(interval.lower());
  const auto upper = proper_spans(interval.upper());
  for (const auto& s : lower) {
    if (upper.contains(s)) return false;
  }
  return true;
}

std::optional<std::pair<BinaryTree, BinaryTree>> nice_shape(const TamariInterval& interval) {
  const BinaryTree& s = interval.lower();
  const BinaryTree& t = interval.upper();
  if (s.is_leaf() || t.is_leaf()) return std::nullopt;
  // Y∘₁S1 has an empty right subtree, Y∘₂T1 an empty left subtree.
  if (s.right_child(s.root()) != 0 || t.left_child(t.root()) != 0) return std::nullopt;
  return std::pair{s.left_subtree(), t.right_subtree()};
}

}  // namespace tamari
