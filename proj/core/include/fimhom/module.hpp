#pragma once

#include <memory>
#include <optional>
#include <string>

#include "fimhom/category.hpp"
#include "fimhom/linalg.hpp"

namespace fimhom {

/// A module on a grid, realized by per-object fibers and action matrices for
/// the generating morphisms only (adjacent transpositions and coordinate
/// inclusions). Hom-sets grow factorially; generators keep storage small.
struct PointwiseModule {
  Grid grid;
  u32 p = 2;
  std::vector<int> dims;  // per object index
  // trans[obj][coord][j-1] : dims(n) x dims(n), action of s_j in coordinate coord
  std::vector<std::vector<std::vector<PrimeMatrix>>> trans;
  // incl[obj][coord] : dims(n+o_coord) x dims(n); meaningful iff grid.up(obj, coord) >= 0
  std::vector<std::vector<PrimeMatrix>> incl;

  int dim(int obj) const { return dims[obj]; }
  const PrimeMatrix& transposition(int obj, int coord, int j) const {
    return trans[obj][coord][j - 1];
  }
  const PrimeMatrix& inclusion(int obj, int coord) const { return incl[obj][coord]; }

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  /// Allocate the action containers for the given dims (matrices zero-sized).
  static PointwiseModule shell(const Grid& grid, u32 p, std::vector<int> dims);
};

using ModulePtr = std::shared_ptr<const PointwiseModule>;

inline ModulePtr own(PointwiseModule m) {
  return std::make_shared<const PointwiseModule>(std::move(m));
}

/// The free module M(d) = kC(d,-) on the grid, with basis enumerate_hom(d, n)
/// at each object and permutation actions by post-composition. This light
/// representation stores index maps, not matrices.
struct FreeModule {
  Grid grid;
  u32 p = 2;
  std::vector<Obj> degrees;                // one entry per summand
  std::vector<int> dims;                   // fiber dims
  std::vector<std::vector<int>> offsets;   // [obj][summand] -> first basis index (-1 if empty)
  std::vector<std::vector<u64>> homsizes;  // [obj][summand]
  // index maps: trans_perm[obj][coord][j-1][b] = index of s_j . basis_b
  std::vector<std::vector<std::vector<std::vector<int>>>> trans_perm;
  // incl_perm[obj][coord][b] = index of iota . basis_b in the fiber at n+o_coord
  std::vector<std::vector<std::vector<int>>> incl_perm;

  int dim(int obj) const { return dims[obj]; }
  /// Degree (as summand index) of each basis element at an object.
  int summand_of(int obj, int basis_index) const;
  /// Basis index of (summand k, morphism f) at grid object f.tgt.
  int basis_index(int obj, int summand, const Morphism& f) const;
  /// Basis indices at `obj` whose generator degree equals the object itself.
  std::vector<int> degree_block(int obj) const;

  Vec apply_trans(int obj, int coord, int j, const Vec& v) const;
  Vec apply_incl(int obj, int coord, const Vec& v) const;
};

FreeModule make_free(const Grid& grid, u32 p, const std::vector<Obj>& degrees);

/// Materialize a FreeModule as a PointwiseModule with 0/1 action matrices.
PointwiseModule to_pointwise(const FreeModule& F);

/// The free module M(d); pre: d in grid.
PointwiseModule free_module(const Obj& d, const Grid& grid, u32 p);

PointwiseModule zero_module(const Grid& grid, u32 p);

/// Action matrix of an arbitrary grid morphism: the product of generator
/// matrices along factor(f), applied left to right.
PrimeMatrix action_of(const Morphism& f, const PointwiseModule& V);

/// Same, applied to a single vector (cheaper than building the matrix).
Vec apply_morphism(const Morphism& f, const PointwiseModule& V, const Vec& v);

struct Violation {
  std::string kind;
  int obj = -1;
  std::string detail;
};

/// Checks group relations at every object, naturality of inclusions, and
/// square commutation of distinct-coordinate inclusions. Empty iff clean.
std::vector<Violation> validate(const PointwiseModule& V);

/// Block-diagonal direct sum; all summands must share grid and field.
PointwiseModule direct_sum(const Grid& grid, u32 p,
                           const std::vector<const PointwiseModule*>& parts);

/// Restrict a module to a smaller truncation window (bounds <= V's bounds).
PointwiseModule restrict_to(const PointwiseModule& V, const Obj& bounds);

}  // namespace fimhom
