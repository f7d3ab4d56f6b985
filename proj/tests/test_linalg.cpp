#include "doctest.h"

#include "fimhom/linalg.hpp"
#include "fimhom/rng.hpp"

using namespace fimhom;

namespace {

PrimeMatrix mat(int rows, int cols, u32 p, std::initializer_list<u32> vals) {
  PrimeMatrix m(rows, cols, p);
  int k = 0;
  for (u32 v : vals) m.a[k++] = v;
  return m;
}

PrimeMatrix random_matrix(DetRng& rng, int rows, int cols, u32 p) {
  PrimeMatrix m(rows, cols, p);
  for (auto& x : m.a) x = static_cast<u32>(rng.below(p));
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  SUBCASE("duplicate rows over F_2") {
    auto [R, piv] = rref(mat(2, 2, 2, {1, 1, 1, 1}));
    CHECK(R == mat(2, 2, 2, {1, 1, 0, 0}));
    CHECK(piv == std::vector<int>{0});
  }
  SUBCASE("zero matrix") {
    auto [R, piv] = rref(PrimeMatrix(2, 3, 5));
    CHECK(R == PrimeMatrix(2, 3, 5));
    CHECK(piv.empty());
  }
  SUBCASE("identity over F_5") {
    PrimeMatrix id = PrimeMatrix::identity(3, 5);
    auto [R, piv] = rref(id);
    CHECK(R == id);
    CHECK(piv == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
  DetRng rng(11);
  for (int it = 0; it < 60; ++it) {
    u32 p = (it % 3 == 0) ? 2 : (it % 3 == 1) ? 3 : 5;
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    PrimeMatrix M = random_matrix(rng, rows, cols, p);
    auto first = rref(M);
    auto second = rref(first.R);
    CHECK(first.R == second.R);
    CHECK(first.pivots == second.pivots);
    Subspace ker = kernel_basis(M);
    CHECK(static_cast<int>(first.pivots.size()) + ker.rank() == cols);
    for (int r = 0; r < ker.rank(); ++r) {
      Vec img = matvec(M, ker.row(r));
      CHECK(std::all_of(img.begin(), img.end(), [](u32 x) { return x == 0; }));
    }
  }
}

TEST_CASE("kernel examples") {
  SUBCASE("one relation over F_3") {
    Subspace k = kernel_basis(mat(1, 2, 3, {1, 1}));
    CHECK(k.rank() == 1);
    CHECK(k.row(0) == Vec{1, 2});
  }
  SUBCASE("invertible matrix has trivial kernel") {
    CHECK(kernel_basis(mat(2, 2, 5, {1, 2, 3, 4})).rank() == 0);
  }
  SUBCASE("zero map has full kernel") {
    Subspace k = kernel_basis(PrimeMatrix(1, 2, 2));
    CHECK(k.rank() == 2);
  }
}

TEST_CASE("sum_and_close examples") {
  SUBCASE("orbit of e1 under the swap") {
    PrimeMatrix swap = mat(2, 2, 3, {0, 1, 1, 0});
    Subspace seed = Subspace::from_span(mat(1, 2, 3, {1, 0}));
    Subspace S = sum_and_close({seed}, {swap});
    CHECK(S.rank() == 2);
  }
  SUBCASE("zero seed stays zero") {
    PrimeMatrix swap = mat(2, 2, 3, {0, 1, 1, 0});
    Subspace S = sum_and_close({Subspace::zero(2, 3)}, {swap});
    CHECK(S.rank() == 0);
  }
  SUBCASE("identity map adds nothing") {
    Subspace seed = Subspace::from_span(mat(1, 2, 3, {1, 0}));
    Subspace S = sum_and_close({seed}, {PrimeMatrix::identity(2, 3)});
    CHECK(S.rank() == 1);
    CHECK(S.row(0) == Vec{1, 0});
  }
}

TEST_CASE("closure output is invariant under the maps") {
  DetRng rng(23);
  for (int it = 0; it < 40; ++it) {
    u32 p = (it % 2 == 0) ? 2 : 3;
    int d = 2 + static_cast<int>(rng.below(5));
    PrimeMatrix A = random_matrix(rng, d, d, p);
    PrimeMatrix B = random_matrix(rng, d, d, p);
    Subspace seed = Subspace::from_span(random_matrix(rng, 1 + static_cast<int>(rng.below(2)), d, p));
    Subspace S = sum_and_close({seed}, {A, B});
    for (int r = 0; r < S.rank(); ++r) {
      CHECK(S.contains(matvec(A, S.row(r))));
      CHECK(S.contains(matvec(B, S.row(r))));
    }
  }
}

TEST_CASE("quotient_data examples") {
  SUBCASE("span (1,1) in F_2^2") {
    Subspace sub = Subspace::from_span(mat(1, 2, 2, {1, 1}));
    QuotientData q = quotient_data(sub);
    CHECK(q.complement == std::vector<int>{1});
    CHECK(matvec(q.proj, Vec{1, 0}) == Vec{1});  // -1 = 1 mod 2
    CHECK(matvec(q.proj, Vec{1, 1}) == Vec{0});
  }
  SUBCASE("zero subspace in dim 3") {
    QuotientData q = quotient_data(Subspace::zero(3, 5));
    CHECK(q.complement == std::vector<int>{0, 1, 2});
    CHECK(q.proj == PrimeMatrix::identity(3, 5));
  }
  SUBCASE("full space") {
    QuotientData q = quotient_data(Subspace::full(4, 3));
    CHECK(q.complement.empty());
    CHECK(q.proj.rows == 0);
    CHECK(q.proj.cols == 4);
  }
}

TEST_CASE("quotient residual lies in the subspace") {
  DetRng rng(37);
  PrimeField F(5);
  for (int it = 0; it < 40; ++it) {
    int d = 2 + static_cast<int>(rng.below(5));
    Subspace sub = Subspace::from_span(random_matrix(rng, 1 + static_cast<int>(rng.below(d)), d, 5));
    QuotientData q = quotient_data(sub);
    Vec v(d);
    for (auto& x : v) x = static_cast<u32>(rng.below(5));
    Vec w = matvec(q.proj, v);
    // lift w back on complement coordinates
    Vec lift(d, 0);
    for (size_t k = 0; k < q.complement.size(); ++k) lift[q.complement[k]] = w[k];
    Vec diff(d);
    for (int j = 0; j < d; ++j) diff[j] = F.sub(v[j], lift[j]);
    CHECK(sub.contains(diff));
    // proj . inclusion-of-complement = identity
    CHECK(matvec(q.proj, lift) == w);
  }
}
