#include "doctest.h"

#include <stdexcept>

#include "fimhom/presentation.hpp"
#include "fimhom/tree.hpp"

using namespace fimhom;

namespace {

PointwiseModule torsion_k_at(const Obj& at, u32 p, const Obj& bounds) {
  Presentation P;
  P.p = p;
  P.m = static_cast<int>(bounds.size());
  P.bounds = bounds;
  P.generators = {at};
  for (int i = 0; i < P.m; ++i) {
    Obj tgt = plus_unit(at, i);
    if (!P.grid().contains(tgt)) continue;
    FreeElement rel;
    rel.object = tgt;
    Morphism f = identity_morphism(at);
    f.tgt = tgt;
    f.parts[i] = Injection{at[i], at[i] + 1, f.parts[i].images};
    rel.terms.push_back({0, f, 1});
    P.relations.push_back(rel);
  }
  // kill everything reachable, leaving exactly one class at `at`
  return evaluate_presentation(P);
}

}  // namespace

TEST_CASE("singular indices") {
  SUBCASE("free modules have none") {
    Grid g = Grid::make({3, 2});
    CHECK(singular_indices(free_module({1, 1}, g, 2)).empty());
  }
  SUBCASE("the torsion class at the origin is singular in every direction") {
    PointwiseModule V = torsion_k_at({0, 0}, 3, {2, 2});
    CHECK(singular_indices(V) == std::vector<int>{0, 1});
  }
  SUBCASE("a torsion summand makes the coordinate singular") {
    Grid g = Grid::make({3});
    PointwiseModule A = free_module({0}, g, 3);
    PointwiseModule B = torsion_k_at({0}, 3, {3});
    PointwiseModule S = direct_sum(g, 3, {&A, &B});
    CHECK(singular_indices(S) == std::vector<int>{0});
  }
}

TEST_CASE("children") {
  SUBCASE("child of the torsion class is the zero module") {
    PointwiseModule V = torsion_k_at({0}, 2, {3});
    PointwiseModule C = child(V, 0);
    CHECK(C.total_dim() == 0);
  }
  SUBCASE("quotienting away the torsion summand leaves M(0)") {
    Grid g = Grid::make({3});
    PointwiseModule A = free_module({0}, g, 3);
    PointwiseModule B = torsion_k_at({0}, 3, {3});
    PointwiseModule S = direct_sum(g, 3, {&A, &B});
    PointwiseModule C = child(S, 0);
    CHECK(C.dims == A.dims);
    CHECK(validate(C).empty());
    CHECK(is_torsion_free(C));
  }
  SUBCASE("regular coordinates have no child") {
    Grid g = Grid::make({3});
    CHECK_THROWS_AS(child(free_module({1}, g, 2), 0), std::invalid_argument);
  }
  SUBCASE("children strictly drop the total dimension") {
    RandomPresentationParams params;
    params.m = 2;
    params.bounds = {2, 2};
    params.p = 2;
    for (u64 seed = 0; seed < 20; ++seed) {
      PointwiseModule V = evaluate_presentation(random_presentation(seed, params));
      for (int i : singular_indices(V)) {
        PointwiseModule C = child(V, i);
        CHECK(C.total_dim() < V.total_dim());
        CHECK(validate(C).empty());
      }
    }
  }
}

TEST_CASE("tree construction") {
  SUBCASE("torsion-free module: a single node") {
    Grid g = Grid::make({2, 2});
    TorsionTree t = build_tree(free_module({1, 0}, g, 3), 5, 1);
    CHECK(t.node_count == 1);
    CHECK(t.depth == 0);
    CHECK(t.terminated);
  }
  SUBCASE("torsion class at the two-dimensional origin: two zero children") {
    PointwiseModule V = torsion_k_at({0, 0}, 2, {2, 2});
    TorsionTree t = build_tree(V, 5, 1);
    CHECK(t.depth == 1);
    CHECK(t.node_count == 3);
    CHECK(t.root.children.size() == 2);
    for (const TreeNode& ch : t.root.children) CHECK(ch.module.is_zero());
  }
  SUBCASE("structural bound on node count and tsum descent") {
    RandomPresentationParams params;
    params.m = 2;
    params.bounds = {2, 2};
    params.p = 3;
    for (u64 seed = 30; seed < 42; ++seed) {
      PointwiseModule V = evaluate_presentation(random_presentation(seed, params));
      TorsionVector tv = torsion_vector(V);
      int cap = tv.tsum + 2 + 1;
      TorsionTree t = build_tree(V, std::max(cap, 0), 1);
      CHECK(t.terminated);
      CHECK(t.depth <= cap);
      // at most m^(-level) vertices per level
      int per_level = 1;
      (void)per_level;
      std::vector<int> level_counts(t.depth + 1, 0);
      auto walk = [&](auto&& self, const TreeNode& n) -> void {
        level_counts[-n.level] += 1;
        for (const TreeNode& ch : n.children) self(self, ch);
      };
      walk(walk, t.root);
      int bound = 1;
      for (int lvl = 0; lvl <= t.depth; ++lvl) {
        CHECK(level_counts[lvl] <= bound);
        bound *= 2;
      }
    }
  }
}

TEST_CASE("filtration lemma") {
  SUBCASE("torsion-free module: the kernel is zero") {
    Grid g = Grid::make({2, 2});
    PointwiseModule V = free_module({1, 1}, g, 2);
    FiltrationReport rep = filtration_check(V);
    CHECK(rep.pass);
    for (int d : rep.kernel_dims) CHECK(d == 0);
  }
  SUBCASE("torsion class at the origin, m = 1: everything vanishes") {
    PointwiseModule V = torsion_k_at({0}, 3, {3});
    FiltrationReport rep = filtration_check(V);
    CHECK(rep.pass);
    for (int d : rep.kernel_dims) CHECK(d == 0);
  }
  SUBCASE("random modules pass with matching kernel and children dims") {
    RandomPresentationParams params;
    params.m = 2;
    params.bounds = {2, 2};
    params.p = 2;
    for (u64 seed = 100; seed < 125; ++seed) {
      PointwiseModule V = evaluate_presentation(random_presentation(seed, params));
      FiltrationReport rep = filtration_check(V);
      CHECK(rep.pass);
      CHECK(rep.kernel_dims == rep.children_dims);
    }
  }
}

TEST_CASE("recursive regularity inequality") {
  SUBCASE("free module, empty subset") {
    Grid g = Grid::make({3});
    RecursiveIneqReport rep = recursive_inequality_check(free_module({1}, g, 3), 2);
    CHECK_FALSE(rep.any_fail);
    REQUIRE(!rep.entries.empty());
  }
  SUBCASE("torsion class: vacuous by the zero-module convention") {
    PointwiseModule V = torsion_k_at({0}, 2, {4});
    RecursiveIneqReport rep = recursive_inequality_check(V, 2);
    // R(V) is empty, so only S = {} appears, with F_{} V = Sigma V = 0
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].pass);
    CHECK_FALSE(rep.any_fail);
  }
  SUBCASE("random boundary-clean modules satisfy the inequality") {
    RandomPresentationParams params;
    params.m = 1;
    params.bounds = {4};
    params.p = 3;
    for (u64 seed = 200; seed < 215; ++seed) {
      PointwiseModule V = evaluate_presentation(random_presentation(seed, params));
      RecursiveIneqReport rep = recursive_inequality_check(V, 2);
      CHECK_FALSE(rep.any_fail);
    }
  }
}

TEST_CASE("torsion height can undershoot the kernel generation degree when m > 1") {
  // quotient-tree invariants never assume equality of t_i and gd(K_i);
  // this pins a two-coordinate instance where they genuinely differ
  PointwiseModule V = torsion_k_at({0, 1}, 2, {2, 2});
  TorsionVector tv = torsion_vector(V);
  CHECK(tv.t[0] == 0);
  FourTermSequence s = four_term(0, V);
  H0Data h = h0(*s.K);
  int gdK = -1;
  for (int idx = 0; idx < s.K->grid.size(); ++idx)
    if (h.dims[idx] > 0) gdK = std::max(gdK, rank_of(s.K->grid.objects[idx]));
  CHECK(gdK == 1);
  CHECK(tv.t[0] < gdK);
}
