#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tamari/binary_tree.hpp"
#include "tamari/error.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/io.hpp"

using namespace tamari;

namespace {

BinaryTree T(const char* text) { return parse_tree(text); }

BinaryTree random_tree(std::mt19937& rng, int n) {
  const auto& all = enumerate_trees(n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

}  // namespace

TEST_CASE("enumerate_trees sizes") {
  CHECK(enumerate_trees(0) == std::vector<BinaryTree>{BinaryTree::leaf()});
  CHECK(enumerate_trees(3).size() == 5);
  CHECK(enumerate_trees(8).size() == 1430);
  for (int n = 0; n <= 10; ++n) CHECK(enumerate_trees(n).size() == oracle::catalan(n));
}

TEST_CASE("enumerate_trees is canonical and duplicate free") {
  for (int n = 0; n <= 6; ++n) {
    const auto& trees = enumerate_trees(n);
    std::set<BinaryTree> distinct(trees.begin(), trees.end());
    CHECK(distinct.size() == trees.size());
    for (std::size_t i = 1; i < trees.size(); ++i) {
      CHECK(trees[i - 1].left_subtree().size() <= trees[i].left_subtree().size());
    }
  }
  CHECK(enumerate_trees(2).front() == T("(L (L L))"));
}

TEST_CASE("in-order labeling") {
  const BinaryTree t = T("((L ((L L) (L L))) ((L (L L)) L))");
  CHECK(t.size() == 8);
  CHECK(t.root() == 5);
  CHECK(t.left_child(5) == 1);
  CHECK(t.right_child(1) == 3);
  CHECK(t.left_child(3) == 2);
  CHECK(t.right_child(3) == 4);
  CHECK(t.right_child(5) == 8);
  CHECK(t.left_child(8) == 6);
  CHECK(t.right_child(6) == 7);
  CHECK(t.span(8) == std::pair{6, 8});
}

TEST_CASE("tree_poset") {
  CHECK(tree_poset(BinaryTree::y()).relation().pairs().empty());
  CHECK(tree_poset(BinaryTree::left_comb(2)).increasing() == std::vector<Pair>{{1, 2}});
  CHECK(tree_poset(BinaryTree::left_comb(2)).decreasing().empty());
  CHECK(tree_poset(BinaryTree::right_comb(2)).decreasing() == std::vector<Pair>{{2, 1}});
  CHECK_THROWS_AS(tree_poset(BinaryTree::leaf()), PreconditionError);

  const IntervalPoset p = tree_poset(T("((L ((L L) (L L))) ((L (L L)) L))"));
  const oracle::Rel expected = oracle::closure(
      8, {{2, 3}, {1, 5}, {6, 8}, {3, 1}, {4, 3}, {7, 6}, {8, 5}});
  CHECK(oracle::relation_of(p) == expected);

  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      CHECK(oracle::relation_of(tree_poset(t)) == oracle::tree_relation(t));
    }
  }
}

TEST_CASE("tamari_leq agrees with reachability under covers") {
  CHECK(tamari_leq(BinaryTree::left_comb(2), BinaryTree::right_comb(2)));
  CHECK_FALSE(tamari_leq(BinaryTree::right_comb(2), BinaryTree::left_comb(2)));
  CHECK_THROWS_AS(tamari_leq(BinaryTree::y(), BinaryTree::left_comb(2)), PreconditionError);

  for (int n = 1; n <= 5; ++n) {
    const auto up = oracle::reachability(n);
    std::size_t comparable = 0;
    for (const auto& s : enumerate_trees(n)) {
      CHECK(tamari_leq(s, s));
      for (const auto& t : enumerate_trees(n)) {
        const bool reach = up.at(s).count(t) > 0;
        CHECK(tamari_leq(s, t) == reach);
        // Inc(T) ⊆ Inc(S) is the equivalent test.
        const auto inc_s = tree_poset(s).increasing();
        const auto inc_t = tree_poset(t).increasing();
        CHECK(std::includes(inc_s.begin(), inc_s.end(), inc_t.begin(), inc_t.end()) == reach);
        comparable += reach ? 1 : 0;
      }
    }
    if (n == 4) CHECK(comparable == 68);
  }
}

TEST_CASE("tamari_leq is a partial order whose covers are covers()") {
  for (int n = 1; n <= 6; ++n) {
    const auto& trees = enumerate_trees(n);
    for (const auto& s : trees) {
      for (const auto& t : trees) {
        if (s != t && tamari_leq(s, t)) CHECK_FALSE(tamari_leq(t, s));
        if (n > 4) continue;
        for (const auto& u : trees) {
          if (tamari_leq(s, t) && tamari_leq(t, u)) CHECK(tamari_leq(s, u));
        }
      }
      const auto up = covers(s);
      for (const auto& t : trees) {
        bool is_cover = s != t && tamari_leq(s, t);
        for (const auto& m : trees) {
          if (m != s && m != t && tamari_leq(s, m) && tamari_leq(m, t)) is_cover = false;
        }
        CHECK(is_cover == (std::find(up.begin(), up.end(), t) != up.end()));
      }
    }
  }
}

TEST_CASE("covers") {
  for (int n = 0; n <= 5; ++n) CHECK(covers(BinaryTree::right_comb(n)).empty());
  CHECK(covers(BinaryTree::left_comb(2)) == std::vector<BinaryTree>{BinaryTree::right_comb(2)});
  CHECK(oracle::reachability(3).at(BinaryTree::left_comb(3)).size() == 5);
}

TEST_CASE("graft") {
  const BinaryTree y = BinaryTree::y();
  CHECK(graft(BinaryTree::leaf(), 1, T("((L L) L)")) == T("((L L) L)"));
  CHECK(graft(y, 1, y) == BinaryTree::left_comb(2));
  CHECK(graft(y, 2, y) == BinaryTree::right_comb(2));
  CHECK_THROWS_AS(graft(y, 0, y), PreconditionError);
  CHECK_THROWS_AS(graft(y, 3, y), PreconditionError);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryTree t = random_tree(rng, trial % 5);
    const BinaryTree s = random_tree(rng, trial % 4);
    const int i = std::uniform_int_distribution<int>(1, t.size() + 1)(rng);
    const BinaryTree g = graft(t, i, s);
    CHECK(g.size() == t.size() + s.size());
    if (s.is_leaf()) CHECK(g == t);
  }
}

TEST_CASE("increasing relations of Y∘₂T are those of T shifted") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      std::vector<Pair> shifted;
      for (const auto& [a, b] : tree_poset(t).increasing()) shifted.emplace_back(a + 1, b + 1);
      CHECK(tree_poset(graft(BinaryTree::y(), 2, t)).increasing() == shifted);
    }
  }
}

TEST_CASE("Dec and Inc of a tree satisfy the interval conditions") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      CHECK(oracle::is_interval_poset(n, oracle::relation_of(tree_poset(t))));
    }
  }
}

TEST_CASE("mirror") {
  CHECK(mirror(BinaryTree::y()) == BinaryTree::y());
  for (int n = 0; n <= 6; ++n) CHECK(mirror(BinaryTree::left_comb(n)) == BinaryTree::right_comb(n));

  std::size_t pairs = 0;
  std::size_t comparable = 0;
  for (const auto& s : enumerate_trees(3)) {
    CHECK(mirror(mirror(s)) == s);
    for (const auto& t : enumerate_trees(3)) {
      ++pairs;
      comparable += tamari_leq(s, t) ? 1 : 0;
      CHECK(tamari_leq(s, t) == tamari_leq(mirror(t), mirror(s)));
    }
  }
  CHECK(pairs == 25);
  CHECK(comparable == 13);

  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      std::vector<Pair> reflected;
      for (const auto& [x, y] : tree_poset(t).increasing()) reflected.emplace_back(n + 1 - x, n + 1 - y);
      std::sort(reflected.begin(), reflected.end());
      CHECK(tree_poset(mirror(t)).decreasing() == reflected);
    }
  }
}

TEST_CASE("from_children") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      std::vector<int> l(static_cast<std::size_t>(n) + 1, 0);
      std::vector<int> r(l.size(), 0);
      for (int v = 1; v <= n; ++v) {
        l[static_cast<std::size_t>(v)] = t.left_child(v);
        r[static_cast<std::size_t>(v)] = t.right_child(v);
      }
      CHECK(BinaryTree::from_children(l, r, t.root()) == t);
    }
  }
  // Root 1 with right child 2 is fine; swapping the side breaks in-order labels.
  CHECK(BinaryTree::from_children({0, 0, 0}, {0, 2, 0}, 1) == BinaryTree::right_comb(2));
  CHECK_THROWS_AS(BinaryTree::from_children({0, 2, 0}, {0, 0, 0}, 1), PreconditionError);
  CHECK_THROWS_AS(BinaryTree::from_children({0, 0, 0}, {0, 0, 0}, 1), PreconditionError);
  CHECK_THROWS_AS(BinaryTree::from_children({0, 0}, {0, 1}, 1), PreconditionError);
  CHECK_THROWS_AS(BinaryTree::from_children({0, 0}, {0, 0, 0}, 1), PreconditionError);
}
