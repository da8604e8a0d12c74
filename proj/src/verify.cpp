#include "tamari/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tamari/census.hpp"
#include "tamari/classifiers.hpp"
#include "tamari/error.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/io.hpp"
#include "tamari/noncrossing.hpp"
#include "tamari/rise_fall.hpp"

namespace tamari {

namespace {

// Collects the first failure of a check.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  // Returns `ok` so callers can stop early.
  bool expect(bool ok, const std::string& detail) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = detail;
    }
    return ok;
  }
  bool failed() const { return !result_.passed; }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string dump(const IntervalPoset& p) { return poset_to_json(p).dump(); }
std::string dump(const TamariInterval& i) { return interval_to_json(i).dump(); }

std::string with_size(const char* name, int n) {
  return std::string(name) + " n=" + std::to_string(n);
}

CheckResult check_figures() {
  Check c("figures");

  const BinaryTree inorder = parse_tree("((L ((L L) (L L))) ((L (L L)) L))");
  const IntervalPoset tp = tree_poset(inorder);
  c.expect(increasing_covers(tp) == std::vector<Pair>{{1, 5}, {2, 3}, {6, 8}},
           "in-order figure: increasing covers " + dump(tp));
  c.expect(decreasing_covers(tp) == std::vector<Pair>{{3, 1}, {4, 3}, {7, 6}, {8, 5}},
           "in-order figure: decreasing covers " + dump(tp));
  const auto pi = partition_of_tree(inorder);
  c.expect(pi.blocks() == std::vector<std::vector<int>>{{1, 3, 4}, {2}, {5, 8}, {6, 7}},
           "in-order figure: partition " + ncp_to_json(pi).dump());

  const auto nct = NoncrossingTree::from_edges(
      11, {{0, 10}, {1, 2}, {2, 3}, {2, 10}, {3, 4}, {3, 5}, {3, 6}, {6, 7}, {6, 9}, {8, 9},
           {10, 11}});
  const std::map<Chord, int> labels{{{3, 6}, 6}, {{3, 4}, 4}, {{3, 5}, 5},  {{2, 3}, 3},
                                    {{1, 2}, 2}, {{2, 10}, 10}, {{10, 11}, 11}, {{0, 10}, 1},
                                    {{6, 9}, 8}, {{8, 9}, 9},  {{6, 7}, 7}};
  c.expect(edge_labels(nct) == labels, "12-gon figure: edge labels");
  std::vector<Pair> covers{{2, 1}, {10, 1}, {3, 10}, {6, 10}, {8, 10},
                           {5, 6}, {4, 5},  {7, 8},  {9, 8}};
  std::sort(covers.begin(), covers.end());
  const IntervalPoset np = nct_to_poset(nct);
  c.expect(hasse(np) == covers, "12-gon figure: Hasse covers " + dump(np));

  const auto ncp = NoncrossingPartition::from_blocks(8, {{1, 2, 7}, {3, 4}, {5, 6}, {8}});
  c.expect(format_tree(tree_of_partition(ncp)) == "((L (L (((L (L L)) (L L)) L))) L)",
           "partition figure: tree " + format_tree(tree_of_partition(ncp)));

  const std::vector<Pair> inc{{2, 3}};
  const std::vector<Pair> dec{{2, 1}};
  const IntervalPoset top = IntervalPoset::from_relations(3, inc, dec);
  const TamariInterval top_interval(parse_tree("((L (L L)) L)"), parse_tree("(L ((L L) L))"));
  c.expect(to_interval(top) == top_interval, "rise figure: top interval " + dump(to_interval(top)));
  const std::vector<Pair> risen_inc{{3, 4}};
  const IntervalPoset bottom = IntervalPoset::from_relations(4, risen_inc, dec);
  c.expect(rise(top) == bottom.relation(), "rise figure: rise of the top poset");
  const TamariInterval bottom_interval(parse_tree("(((L (L L)) L) L)"),
                                       parse_tree("(L (L ((L L) L)))"));
  c.expect(to_interval(bottom) == bottom_interval,
           "rise figure: bottom interval " + dump(to_interval(bottom)));
  c.expect(fall(bottom) == top.relation(), "rise figure: fall of the bottom poset");
  return c.done();
}

CheckResult check_census(int n, const CensusRow& row, const GoldenCounts& golden) {
  Check c(with_size("census", n));
  for (const auto& e : row.entries()) {
    const auto it = golden.find(e.family);
    if (it != golden.end() && static_cast<std::size_t>(n) <= it->second.size()) {
      const auto expected = it->second[static_cast<std::size_t>(n) - 1];
      c.expect(expected == e.count, e.family + " n=" + std::to_string(n) + ": golden " +
                                        std::to_string(expected) + ", enumerated " +
                                        std::to_string(e.count));
    }
    c.expect(e.matches(), e.family + " n=" + std::to_string(n) + ": formula " +
                              (e.formula ? e.formula->str() : "") + ", enumerated " +
                              std::to_string(e.count));
  }
  c.expect(row.exceptional == row.infinitely_modern && row.exceptional == row.noncrossing_trees &&
               row.exceptional == row.ncp_intervals,
           "exceptional, infinitely modern, noncrossing trees and partition intervals differ");
  return c.done();
}

CheckResult check_interval_bijection(int n, const std::vector<IntervalPoset>& posets) {
  Check c(with_size("interval-bijection", n));
  const auto intervals = enumerate_intervals(n);
  c.expect(intervals.size() == posets.size(), "interval and poset counts differ");
  std::set<IntervalPoset> images;
  for (const auto& i : intervals) {
    const IntervalPoset p = from_interval(i);
    images.insert(p);
    if (!c.expect(to_interval(p) == i, "to_interval(from_interval(I)) != I for " + dump(i))) break;
  }
  for (const auto& p : posets) {
    if (!c.expect(from_interval(to_interval(p)) == p, "round trip fails on " + dump(p))) break;
  }
  c.expect(images == std::set<IntervalPoset>(posets.begin(), posets.end()),
           "interval images differ from the enumerated posets");
  return c.done();
}

CheckResult check_exceptional(int n, const std::vector<IntervalPoset>& posets) {
  Check c(with_size("exceptional-bijections", n));
  std::set<IntervalPoset> exceptional;
  std::set<NoncrossingTree> trees;
  for (const auto& p : posets) {
    if (!is_exceptional(p)) continue;
    exceptional.insert(p);
    const NoncrossingTree t = poset_to_nct(p);
    trees.insert(t);
    c.expect(nct_to_poset(t) == p, "nct round trip fails on " + dump(p));
  }
  const auto all_trees = enumerate_nct(n);
  c.expect(trees == std::set<NoncrossingTree>(all_trees.begin(), all_trees.end()),
           "noncrossing-tree images differ from the enumeration");
  std::set<IntervalPoset> from_nct;
  for (const auto& t : all_trees) {
    from_nct.insert(nct_to_poset(t));
    c.expect(poset_to_nct(nct_to_poset(t)) == t, "nct round trip fails on " + nct_to_json(t).dump());
  }
  c.expect(from_nct == exceptional, "noncrossing trees do not map onto the exceptional posets");

  std::set<IntervalPoset> from_ncp;
  const auto partitions = enumerate_ncp(n);
  for (const auto& p1 : partitions) {
    for (const auto& p2 : partitions) {
      if (ncp_leq(p1, p2)) from_ncp.insert(ncp_interval_to_ip(p1, p2));
    }
  }
  c.expect(from_ncp == exceptional, "partition intervals do not map onto the exceptional posets");
  return c.done();
}

CheckResult check_new_oracles(int n) {
  Check c(with_size("new-oracles", n));
  for (const auto& i : enumerate_intervals(n)) {
    if (!c.expect(is_new_interval(i) == is_new_ip(from_interval(i)),
                  "grafting search and poset criterion disagree on " + dump(i))) {
      break;
    }
  }
  return c.done();
}

CheckResult check_modern(int n, const std::vector<IntervalPoset>& posets, int max_size,
                         const CensusRow& row, const CensusRow* next) {
  Check c(with_size("modern-rise", n));
  std::uint64_t risen_new = 0;
  for (const auto& p : posets) {
    const auto risen = validate(rise(p));
    if (!c.expect(is_modern(p) == is_valid(risen), "modern flag disagrees with rise on " + dump(p))) {
      break;
    }
    if (!is_modern(p)) continue;
    const IntervalPoset q = std::get<IntervalPoset>(risen);
    risen_new += is_new_ip(q) ? 1 : 0;
    c.expect(fall(q) == p.relation(), "fall(rise(P)) != P for " + dump(p));
    c.expect(nice_shape(to_interval(q)).has_value(),
             "rise of " + dump(p) + " lacks the Y-graft shape");
  }
  c.expect(risen_new == row.modern, "rises of modern posets are not all new");
  if (next != nullptr && n + 1 <= max_size) {
    c.expect(row.modern == next->new_intervals,
             "modern count at n=" + std::to_string(n) + " != new count at n=" + std::to_string(n + 1));
  }
  return c.done();
}

CheckResult check_infinitely_modern(int n, const std::vector<IntervalPoset>& posets) {
  Check c(with_size("infinitely-modern", n));
  for (const auto& p : posets) {
    if (!c.expect(is_infinitely_modern(p) == rises_stay_valid(p, n + 1),
                  "dr <= ir disagrees with iterated rises on " + dump(p))) {
      break;
    }
  }
  return c.done();
}

CheckResult check_triangle(int n) {
  Check c(with_size("triangle", n));
  const auto t = triangle_b(n);
  c.expect(t.agree(), "recurrence and statistic disagree");
  c.expect(t.by_recurrence.row_sum() == fuss_catalan(n), "row sum differs from Fuss-Catalan");
  return c.done();
}

CheckResult check_insert_remove(int n, const std::vector<IntervalPoset>& posets) {
  Check c(with_size("insert-remove", n));
  for (const auto& p : posets) {
    if (!is_infinitely_modern(p)) continue;
    const StatPair s = stat(p);
    for (int i = s.dr; i <= n + 1; ++i) {
      for (int k = i; k <= std::min(n + 1, s.ir + 1); ++k) {
        const IntervalPoset q = insert_fik(p, i, k);
        c.expect(stat(q) == StatPair{k, i},
                 "stat of f_{i,k} wrong on " + dump(p));
        c.expect(remove_rho(q) == p, "rho(f_{i,k}(P)) != P for " + dump(p));
      }
    }
    if (n >= 2) {
      c.expect(insert_fik(remove_rho(p), s.dr, s.ir) == p, "f(rho(P)) != P for " + dump(p));
    }
  }
  return c.done();
}

CheckResult check_partitions(int n) {
  Check c(with_size("tree-partition", n));
  for (const auto& t : enumerate_trees(n)) {
    c.expect(tree_of_partition(partition_of_tree(t)) == t, "round trip fails on " + format_tree(t));
  }
  const auto partitions = enumerate_ncp(n);
  for (const auto& p : partitions) {
    c.expect(partition_of_tree(tree_of_partition(p)) == p,
             "round trip fails on " + ncp_to_json(p).dump());
  }
  for (const auto& p1 : partitions) {
    for (const auto& p2 : partitions) {
      if (ncp_leq(p1, p2)) {
        c.expect(tamari_leq(tree_of_partition(p1), tree_of_partition(p2)),
                 "refinement not monotone on " + ncp_interval_to_json(p1, p2).dump());
      }
    }
  }
  return c.done();
}

CheckResult check_linear_extensions(int n, const std::vector<IntervalPoset>& posets) {
  Check c(with_size("linear-extensions", n));
  for (const auto& p : posets) {
    std::vector<std::vector<int>> pieces;
    for (const auto& t : interval_members(p)) {
      const auto ext = linear_extensions(tree_poset(t));
      pieces.insert(pieces.end(), ext.begin(), ext.end());
    }
    const std::size_t total = pieces.size();
    std::sort(pieces.begin(), pieces.end());
    const bool disjoint = std::adjacent_find(pieces.begin(), pieces.end()) == pieces.end();
    c.expect(disjoint && total == pieces.size() && pieces == linear_extensions(p),
             "extensions are not the disjoint union over members for " + dump(p));
    if (c.failed()) break;
  }
  return c.done();
}

}  // namespace

const GoldenCounts& golden_counts() {
  static const GoldenCounts golden{
      {"intervals", {1, 3, 13, 68, 399, 2530}},
      {"exceptional", {1, 3, 12, 55, 273, 1428}},
      {"modern", {1, 3, 12, 56, 288, 1584}},
      {"new", {1, 1, 3, 12, 56, 288}},
      {"infinitely_modern", {1, 3, 12, 55, 273, 1428}},
      {"trees", {1, 2, 5, 14, 42, 132}},
      {"nct", {1, 3, 12, 55, 273, 1428}},
      {"ncp", {1, 2, 5, 14, 42, 132}},
      {"ncp_intervals", {1, 3, 12, 55, 273, 1428}},
  };
  return golden;
}

std::vector<CheckResult> run_verification(int max_size, const GoldenCounts& golden) {
  if (max_size < 1) throw PreconditionError("BoundExceeded", "max size must be >= 1");
  std::vector<CheckResult> out;
  out.push_back(check_figures());

  std::vector<CensusRow> rows;
  for (int n = 1; n <= max_size; ++n) rows.push_back(census(n, max_size));

  constexpr int kLinearExtensionBound = 5;
  for (int n = 1; n <= max_size; ++n) {
    const auto posets = enumerate_interval_posets(n);
    const CensusRow& row = rows[static_cast<std::size_t>(n) - 1];
    const CensusRow* next = n < max_size ? &rows[static_cast<std::size_t>(n)] : nullptr;
    out.push_back(check_census(n, row, golden));
    out.push_back(check_interval_bijection(n, posets));
    out.push_back(check_exceptional(n, posets));
    out.push_back(check_new_oracles(n));
    out.push_back(check_modern(n, posets, max_size, row, next));
    out.push_back(check_infinitely_modern(n, posets));
    out.push_back(check_triangle(n));
    out.push_back(check_insert_remove(n, posets));
    out.push_back(check_partitions(n));
    if (n <= kLinearExtensionBound) out.push_back(check_linear_extensions(n, posets));
  }
  return out;
}

}  // namespace tamari
