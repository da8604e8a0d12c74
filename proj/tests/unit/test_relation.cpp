#include "doctest.h"
#include "oracles.hpp"
#include "tamari/error.hpp"
#include "tamari/relation.hpp"

using namespace tamari;

namespace {

RangeRelation R(int n, std::vector<Pair> pairs) { return RangeRelation(n, pairs); }

}  // namespace

TEST_CASE("element_range_mask") {
  CHECK(element_range_mask(3, 2) == 0);
  CHECK(element_range_mask(1, 1) == 0b10);
  CHECK(element_range_mask(2, 4) == 0b11100);
  CHECK(element_range_mask(1, 63) == ~std::uint64_t{1});
}

TEST_CASE("RangeRelation basics") {
  RangeRelation r(4);
  r.add(3, 1);
  r.add(1, 2);
  r.add(2, 2);
  CHECK(r.contains(3, 1));
  CHECK_FALSE(r.contains(1, 3));
  CHECK(r.increasing() == std::vector<Pair>{{1, 2}});
  CHECK(r.decreasing() == std::vector<Pair>{{3, 1}});
  CHECK(r.pairs().size() == 2);
  CHECK(r.transitive_closure().contains(3, 2));
  CHECK_THROWS_AS(r.add(0, 1), PreconditionError);
  CHECK_THROWS_AS(r.add(1, 5), PreconditionError);
  CHECK_THROWS_AS(RangeRelation(kMaxRelationSize + 1), PreconditionError);
}

TEST_CASE("validate accepts interval-posets") {
  CHECK(is_valid(validate(RangeRelation(3))));
  CHECK(is_valid(validate(R(3, {{2, 3}, {2, 1}}))));
  // Generators are closed before checking.
  const auto v = validate(R(3, {{1, 2}, {2, 3}}));
  REQUIRE(is_valid(v));
  CHECK(std::get<IntervalPoset>(v).related(1, 3));
}

TEST_CASE("validate diagnostics") {
  const auto v = validate(R(3, {{1, 3}}));
  REQUIRE(std::holds_alternative<IntervalConditionViolated>(v));
  const auto& w = std::get<IntervalConditionViolated>(v);
  CHECK(w.a == 1);
  CHECK(w.b == 2);
  CHECK(w.c == 3);
  CHECK(w.condition == 1);

  const auto v2 = validate(R(3, {{3, 1}}));
  REQUIRE(std::holds_alternative<IntervalConditionViolated>(v2));
  CHECK(std::get<IntervalConditionViolated>(v2).condition == 2);

  const auto cyc = validate(R(3, {{1, 2}, {2, 3}, {3, 1}}));
  REQUIRE(std::holds_alternative<NotAPoset>(cyc));
  CHECK(std::get<NotAPoset>(cyc).cycle == std::vector<int>{1, 2, 3});

  const auto two = validate(R(2, {{1, 2}, {2, 1}}));
  REQUIRE(std::holds_alternative<NotAPoset>(two));
  CHECK(std::get<NotAPoset>(two).cycle == std::vector<int>{1, 2});
  CHECK(describe(two).find("NotAPoset") != std::string::npos);

  CHECK_THROWS_AS(validate(RangeRelation(0)), PreconditionError);
}

TEST_CASE("validate agrees with the brute-force definition") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Pair> all;
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (a != b) all.emplace_back(a, b);
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Pair> chosen;
      oracle::Rel rel;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1) {
          chosen.push_back(all[i]);
          rel.insert(all[i]);
        }
      }
      const auto v = validate(RangeRelation(n, chosen));
      CHECK(is_valid(v) == oracle::is_interval_poset(n, oracle::closure(n, rel)));
    }
  }
}

TEST_CASE("IntervalPoset factories") {
  const std::vector<Pair> inc{{2, 3}};
  const std::vector<Pair> dec{{2, 1}};
  const IntervalPoset p = IntervalPoset::from_relations(3, inc, dec);
  CHECK(p.increasing() == inc);
  CHECK(p.decreasing() == dec);
  CHECK(p.related(1, 1));
  CHECK(p.below(1) == (std::uint64_t{1} << 2));

  const std::vector<Pair> bad{{3, 1}};
  CHECK_THROWS_AS(IntervalPoset::from_relations(3, bad, {}), PreconditionError);
  const std::vector<Pair> gap{{1, 3}};
  try {
    IntervalPoset::from_relations(3, gap, {});
    FAIL("expected NotAnIntervalPoset");
  } catch (const PreconditionError& e) {
    CHECK(e.condition() == "NotAnIntervalPoset");
  }
  CHECK_THROWS_AS(IntervalPoset::empty(0), PreconditionError);
  CHECK(IntervalPoset::empty(4).relation().pairs().empty());
}
