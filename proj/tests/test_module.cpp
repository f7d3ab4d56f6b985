#include "doctest.h"

#include <stdexcept>

#include "fimhom/module.hpp"

using namespace fimhom;

TEST_CASE("free module fiber dimensions") {
  SUBCASE("M(1) on bounds (3)") {
    Grid g = Grid::make({3});
    PointwiseModule V = free_module({1}, g, 3);
    CHECK(V.dims == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("M(0) has one-dimensional fibers and identity actions") {
    Grid g = Grid::make({3});
    PointwiseModule V = free_module({0}, g, 5);
    CHECK(V.dims == std::vector<int>{1, 1, 1, 1});
    for (int idx = 0; idx < g.size(); ++idx) {
      if (g.up(idx, 0) >= 0) CHECK(V.inclusion(idx, 0) == PrimeMatrix::identity(1, 5));
    }
  }
  SUBCASE("M((1,1)) at (2,2)") {
    Grid g = Grid::make({2, 2});
    PointwiseModule V = free_module({1, 1}, g, 2);
    CHECK(V.dims[g.index_of({2, 2})] == 4);
  }
}

TEST_CASE("action_of examples") {
  Grid g = Grid::make({3});
  PointwiseModule V = free_module({1}, g, 3);
  SUBCASE("identity morphism acts as the identity") {
    CHECK(action_of(identity_morphism({2}), V) == PrimeMatrix::identity(2, 3));
  }
  SUBCASE("M(0) sends every morphism to the 1x1 identity") {
    PointwiseModule W = free_module({0}, g, 3);
    Morphism f{{1}, {3}, {Injection{1, 3, {2}}}};
    CHECK(action_of(f, W) == PrimeMatrix::identity(1, 3u));
  }
  SUBCASE("action on a free module is post-composition") {
    // independent oracle: compute the permutation-selection matrix directly
    // from enumerate_hom and compose, with no factorization involved
    Morphism f{{1}, {2}, {Injection{1, 2, {2}}}};
    PrimeMatrix got = action_of(f, V);
    auto src_basis = enumerate_hom({1}, {1});
    auto tgt_basis = enumerate_hom({1}, {2});
    PrimeMatrix expect(static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()), 3);
    for (size_t b = 0; b < src_basis.size(); ++b) {
      Morphism img = compose(f, src_basis[b]);
      expect.at(static_cast<int>(hom_rank(img)), static_cast<int>(b)) = 1;
    }
    CHECK(got == expect);
  }
}

TEST_CASE("action_of is functorial on free modules over exhaustive small hom-sets") {
  Grid g = Grid::make({3});
  PointwiseModule V = free_module({1}, g, 2);
  for (const Obj& a : g.objects)
    for (const Obj& b : g.objects) {
      if (!leq(a, b)) continue;
      for (const Obj& c : g.objects) {
        if (!leq(b, c)) continue;
        for (const Morphism& f : enumerate_hom(a, b))
          for (const Morphism& h : enumerate_hom(b, c))
            CHECK(action_of(compose(h, f), V) == mul(action_of(h, V), action_of(f, V)));
      }
    }
}

TEST_CASE("functoriality in two coordinates") {
  Grid g = Grid::make({2, 2});
  PointwiseModule V = free_module({1, 0}, g, 3);
  Obj a{1, 0}, b{1, 1}, c{2, 2};
  for (const Morphism& f : enumerate_hom(a, b))
    for (const Morphism& h : enumerate_hom(b, c))
      CHECK(action_of(compose(h, f), V) == mul(action_of(h, V), action_of(f, V)));
}

TEST_CASE("validate accepts free modules and flags corrupted actions") {
  Grid g = Grid::make({2, 2});
  PointwiseModule V = free_module({1, 1}, g, 2);
  CHECK(validate(V).empty());
  // break one transposition matrix; the involution relation must fail
  PointwiseModule W = V;
  int at = g.index_of({2, 1});
  W.trans[at][0][0] = PrimeMatrix(W.dims[at], W.dims[at], 2);
  CHECK_FALSE(validate(W).empty());
}

TEST_CASE("direct sums") {
  Grid g = Grid::make({2});
  u32 p = 3;
  PointwiseModule A = free_module({1}, g, p);
  PointwiseModule Z = zero_module(g, p);
  SUBCASE("sum of nothing is the zero module") {
    PointwiseModule S = direct_sum(g, p, {});
    CHECK(S.total_dim() == 0);
    CHECK(validate(S).empty());
  }
  SUBCASE("V + 0 has V's dims and actions") {
    PointwiseModule S = direct_sum(g, p, {&A, &Z});
    CHECK(S.dims == A.dims);
    for (int idx = 0; idx < g.size(); ++idx) {
      if (g.up(idx, 0) >= 0) CHECK(S.inclusion(idx, 0) == A.inclusion(idx, 0));
    }
  }
  SUBCASE("dims add at every object") {
    PointwiseModule S = direct_sum(g, p, {&A, &A});
    for (int idx = 0; idx < g.size(); ++idx) CHECK(S.dims[idx] == 2 * A.dims[idx]);
    CHECK(validate(S).empty());
  }
  SUBCASE("grid mismatch throws") {
    PointwiseModule B = free_module({1}, Grid::make({3}), p);
    CHECK_THROWS_AS(direct_sum(g, p, {&A, &B}), std::invalid_argument);
  }
}

TEST_CASE("restriction keeps fibers and actions") {
  Grid g = Grid::make({3});
  PointwiseModule V = free_module({1}, g, 5);
  PointwiseModule W = restrict_to(V, {2});
  CHECK(W.dims == std::vector<int>{0, 1, 2});
  CHECK(validate(W).empty());
}
