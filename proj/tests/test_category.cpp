#include "doctest.h"

#include <stdexcept>

#include "fimhom/category.hpp"

using namespace fimhom;

TEST_CASE("hom_count examples") {
  CHECK(hom_count({1}, {3}) == 3);
  CHECK(hom_count({2, 2}, {2, 2}) == 4);
  CHECK(hom_count({1, 0}, {2, 1}) == 2);
  CHECK(hom_count({2}, {1}) == 0);
}

TEST_CASE("enumerate_hom examples") {
  SUBCASE("injections [1] -> [2] in lex order") {
    auto homs = enumerate_hom({1}, {2});
    REQUIRE(homs.size() == 2);
    CHECK(homs[0].parts[0].images == std::vector<int>{1});
    CHECK(homs[1].parts[0].images == std::vector<int>{2});
  }
  SUBCASE("unique empty morphism") {
    auto homs = enumerate_hom({0, 0}, {1, 1});
    REQUIRE(homs.size() == 1);
    CHECK(homs[0].parts[0].images.empty());
    CHECK(homs[0].parts[1].images.empty());
  }
  SUBCASE("S_2 in lex order") {
    auto homs = enumerate_hom({2}, {2});
    REQUIRE(homs.size() == 2);
    CHECK(homs[0].parts[0].images == std::vector<int>{1, 2});
    CHECK(homs[1].parts[0].images == std::vector<int>{2, 1});
  }
  SUBCASE("empty when source exceeds target") {
    CHECK(enumerate_hom({2}, {1}).empty());
  }
}

TEST_CASE("hom_rank inverts enumeration order") {
  for (const Obj& r : {Obj{1, 1}, Obj{2, 0}, Obj{2, 1}}) {
    Obj n{3, 2};
    auto homs = enumerate_hom(r, n);
    CHECK(homs.size() == hom_count(r, n));
    for (size_t k = 0; k < homs.size(); ++k) {
      CHECK(hom_rank(homs[k]) == k);
      CHECK(hom_unrank(r, n, k) == homs[k]);
    }
  }
}

TEST_CASE("compose examples") {
  SUBCASE("hand-checked composite") {
    Morphism f{{1}, {2}, {Injection{1, 2, {2}}}};
    Morphism g{{2}, {3}, {Injection{2, 3, {3, 1}}}};
    Morphism gf = compose(g, f);
    CHECK(gf.parts[0].images == std::vector<int>{1});
  }
  SUBCASE("identity is neutral") {
    Morphism f{{1}, {2}, {Injection{1, 2, {2}}}};
    CHECK(compose(identity_morphism({2}), f) == f);
    CHECK(compose(f, identity_morphism({1})) == f);
  }
  SUBCASE("two standard inclusions") {
    Morphism i0 = inclusion_morphism({0}, 0);
    Morphism i1 = inclusion_morphism({1}, 0);
    Morphism c = compose(i1, i0);
    CHECK(c.src == Obj{0});
    CHECK(c.tgt == Obj{2});
    CHECK(c.parts[0].images.empty());
  }
  SUBCASE("object mismatch throws") {
    Morphism f{{1}, {2}, {Injection{1, 2, {2}}}};
    CHECK_THROWS_AS(compose(f, f), std::invalid_argument);
  }
}

TEST_CASE("factor examples") {
  SUBCASE("image (2) of [1] -> [2]") {
    Morphism f{{1}, {2}, {Injection{1, 2, {2}}}};
    GeneratorWord w = factor(f);
    REQUIRE(w.atoms.size() == 2);
    CHECK(w.atoms[0] == Atom{true, 0, 0});
    CHECK(w.atoms[1] == Atom{false, 0, 1});
    CHECK(recompose(w) == f);
  }
  SUBCASE("identity factors as the empty word") {
    CHECK(factor(identity_morphism({2, 1})).atoms.empty());
  }
  SUBCASE("inclusion from the empty set") {
    Morphism f{{0}, {1}, {Injection{0, 1, {}}}};
    GeneratorWord w = factor(f);
    REQUIRE(w.atoms.size() == 1);
    CHECK(w.atoms[0] == Atom{true, 0, 0});
  }
}

TEST_CASE("factor then recompose is the identity on small hom-sets") {
  // all morphisms with target rank <= 5, m in {1, 2}
  Grid g1 = Grid::make({5});
  for (const Obj& n : g1.objects) {
    for (const Obj& r : g1.objects) {
      if (!leq(r, n)) continue;
      for (const Morphism& f : enumerate_hom(r, n)) CHECK(recompose(factor(f)) == f);
    }
  }
  Grid g2 = Grid::make({3, 2});
  for (const Obj& n : g2.objects) {
    for (const Obj& r : g2.objects) {
      if (!leq(r, n)) continue;
      for (const Morphism& f : enumerate_hom(r, n)) CHECK(recompose(factor(f)) == f);
    }
  }
}

TEST_CASE("composition is associative on small hom-sets") {
  for (int a = 0; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int c = b; c <= 3; ++c)
        for (int d = c; d <= 3; ++d) {
          auto fs = enumerate_hom({a}, {b});
          auto gs = enumerate_hom({b}, {c});
          auto hs = enumerate_hom({c}, {d});
          for (const auto& f : fs)
            for (const auto& g : gs)
              for (const auto& h : hs)
                CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        }
}

TEST_CASE("degree-1 morphisms factor as transpositions then one inclusion") {
  Grid g = Grid::make({3, 3});
  for (const Obj& n : g.objects) {
    for (int i = 0; i < g.m; ++i) {
      Obj up = plus_unit(n, i);
      if (!g.contains(up)) continue;
      for (const Morphism& f : enumerate_hom(n, up)) {
        GeneratorWord w = factor(f);
        REQUIRE(!w.atoms.empty());
        // exactly one inclusion atom, in the raised coordinate, placed before
        // that coordinate's transpositions; everything else is a transposition
        int inclusions = 0;
        bool seen_trans_i = false;
        for (const Atom& a : w.atoms) {
          if (a.is_inclusion) {
            ++inclusions;
            CHECK(a.coord == i);
            CHECK_FALSE(seen_trans_i);
          } else if (a.coord == i) {
            seen_trans_i = true;
          }
        }
        CHECK(inclusions == 1);
      }
    }
  }
}

TEST_CASE("objects_by_rank examples") {
  CHECK(objects_by_rank(Grid::make({2})) == std::vector<Obj>{{0}, {1}, {2}});
  CHECK(objects_by_rank(Grid::make({1, 1})) ==
        std::vector<Obj>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(objects_by_rank(Grid::make({0, 0})) == std::vector<Obj>{{0, 0}});
}
