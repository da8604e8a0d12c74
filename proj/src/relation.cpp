#include "tamari/relation.hpp"

#include <bit>
#include <cassert>
#include <deque>
#include <sstream>

#include "tamari/error.hpp"

namespace tamari {

namespace {

constexpr std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

// Smallest cycle through `start` in the raw relation, via BFS.
std::vector<int> shortest_cycle_through(const RangeRelation& r, int start) {
  const int n = r.size();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::deque<int> queue;
  for (int b = 1; b <= n; ++b) {
    if (r.contains(start, b)) {
      if (b == start) continue;
      parent[static_cast<std::size_t>(b)] = start;
      queue.push_back(b);
    }
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (r.contains(x, start)) {
      std::vector<int> path;
      for (int v = x; v != start; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
      path.push_back(start);
      return {path.rbegin(), path.rend()};
    }
    for (int y = 1; y <= n; ++y) {
      if (y != start && parent[static_cast<std::size_t>(y)] == 0 && r.contains(x, y)) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    }
  }
  return {};
}

}  // namespace

RangeRelation::RangeRelation(int size) : size_(size) {
  if (size < 0 || size > kMaxRelationSize) {
    throw PreconditionError("SizeOutOfRange", "relation size " + std::to_string(size) +
                                                  " outside [0, " +
                                                  std::to_string(kMaxRelationSize) + "]");
  }
  rows_.assign(static_cast<std::size_t>(size) + 1, 0);
}

RangeRelation::RangeRelation(int size, std::span<const Pair> pairs) : RangeRelation(size) {
  for (const auto& [a, b] : pairs) add(a, b);
}

void RangeRelation::check_element(int a) const {
  if (a < 1 || a > size_) {
    throw PreconditionError("ElementOutOfRange", "element " + std::to_string(a) +
                                                     " not in [1, " + std::to_string(size_) +
                                                     "]");
  }
}

void RangeRelation::add(int a, int b) {
  check_element(a);
  check_element(b);
  if (a != b) rows_[static_cast<std::size_t>(a)] |= bit(b);
}

bool RangeRelation::contains(int a, int b) const {
  if (a < 1 || a > size_ || b < 1 || b > size_) return false;
  return (rows_[static_cast<std::size_t>(a)] & bit(b)) != 0;
}

std::vector<Pair> RangeRelation::increasing() const {
  std::vector<Pair> out;
  for (int a = 1; a <= size_; ++a) {
    for (int b = a + 1; b <= size_; ++b) {
      if (contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Pair> RangeRelation::decreasing() const {
  std::vector<Pair> out;
  for (int b = 1; b <= size_; ++b) {
    for (int a = 1; a < b; ++a) {
      if (contains(b, a)) out.emplace_back(b, a);
    }
  }
  return out;
}

std::vector<Pair> RangeRelation::pairs() const {
  std::vector<Pair> out;
  for (int a = 1; a <= size_; ++a) {
    for (int b = 1; b <= size_; ++b) {
      if (contains(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

RangeRelation RangeRelation::transitive_closure() const {
  RangeRelation out = *this;
  auto& rows = out.rows_;
  // Warshall on bit rows.
  for (int k = 1; k <= size_; ++k) {
    const std::uint64_t via = rows[static_cast<std::size_t>(k)];
    for (int a = 1; a <= size_; ++a) {
      if (rows[static_cast<std::size_t>(a)] & bit(k)) rows[static_cast<std::size_t>(a)] |= via;
    }
  }
  for (int a = 1; a <= size_; ++a) rows[static_cast<std::size_t>(a)] &= ~bit(a);
  return out;
}

IntervalPoset unchecked_interval_poset(RangeRelation closed) {
  assert(closed.size() >= 1);
  assert(closed == closed.transitive_closure());
  return IntervalPoset(std::move(closed));
}

IntervalPoset IntervalPoset::from_relation(const RangeRelation& relation) {
  auto result = validate(relation);
  if (auto* p = std::get_if<IntervalPoset>(&result)) return std::move(*p);
  throw PreconditionError("NotAnIntervalPoset", describe(result));
}

IntervalPoset IntervalPoset::from_relations(int size, std::span<const Pair> inc,
                                            std::span<const Pair> dec) {
  RangeRelation r(size);
  for (const auto& [a, b] : inc) {
    if (!(a < b)) {
      throw PreconditionError("NotIncreasing", std::to_string(a) + "⊴" + std::to_string(b));
    }
    r.add(a, b);
  }
  for (const auto& [b, a] : dec) {
    if (!(a < b)) {
      throw PreconditionError("NotDecreasing", std::to_string(b) + "⊴" + std::to_string(a));
    }
    r.add(b, a);
  }
  return from_relation(r);
}

IntervalPoset IntervalPoset::empty(int size) {
  if (size < 1) throw PreconditionError("EmptyGroundSet", "interval-posets have size >= 1");
  return IntervalPoset(RangeRelation(size));
}

std::uint64_t IntervalPoset::below(int b) const {
  std::uint64_t out = 0;
  for (int a = 1; a <= size(); ++a) {
    if (relation_.contains(a, b)) out |= bit(a);
  }
  return out;
}

std::pair<std::vector<Pair>, std::vector<Pair>> IntervalPoset::canonical_key() const {
  return {increasing(), decreasing()};
}

ValidationResult validate(const RangeRelation& r) {
  const int n = r.size();
  if (n < 1) throw PreconditionError("EmptyGroundSet", "interval-posets have size >= 1");
  const RangeRelation closed = r.transitive_closure();

  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (closed.contains(a, b) && closed.contains(b, a)) {
        return NotAPoset{shortest_cycle_through(r, a)};
      }
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        if (closed.contains(a, c) && !closed.contains(b, c)) {
          return IntervalConditionViolated{a, b, c, 1};
        }
      }
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        if (closed.contains(c, a) && !closed.contains(b, a)) {
          return IntervalConditionViolated{a, b, c, 2};
        }
      }
    }
  }
  return unchecked_interval_poset(closed);
}

std::string describe(const ValidationResult& v) {
  std::ostringstream os;
  if (std::holds_alternative<IntervalPoset>(v)) {
    os << "valid interval-poset";
  } else if (const auto* cyc = std::get_if<NotAPoset>(&v)) {
    os << "NotAPoset(cycle";
    for (int x : cyc->cycle) os << ' ' << x;
    os << ')';
  } else {
    const auto& iv = std::get<IntervalConditionViolated>(v);
    os << "IntervalConditionViolated(" << iv.a << ',' << iv.b << ',' << iv.c
       << ", condition " << iv.condition << ')';
  }
  return os.str();
}

}  // namespace tamari
