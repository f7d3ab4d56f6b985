#pragma once

#include "fimhom/homology.hpp"

namespace fimhom {

/// Coordinates i (0-based) with ker E^(i) nonzero somewhere on the grid.
std::vector<int> singular_indices(const PointwiseModule& V);

/// The smallest action-stable family containing every pointwise kernel of
/// direction `coord`. Off the i-shell this is exactly ker E^(i)_n; at objects
/// with n_i = b_i (where no one-step map exists) the family is the closure of
/// what arrives from below.
std::vector<Subspace> torsion_kernel_family(const PointwiseModule& V, int coord);

/// The child V/K_i V, on the same grid. Pre: coord is singular.
PointwiseModule child(const PointwiseModule& V, int coord);

struct TreeNode {
  PointwiseModule module;
  int level = 0;          // non-positive
  std::vector<int> path;  // coordinates chosen from the root (0-based)
  DegreeReport degrees;
  TorsionVector torsion;
  std::vector<int> singular;
  std::vector<TreeNode> children;

  int count() const;
  int depth() const;
};

struct TorsionTree {
  TreeNode root;
  int node_count = 0;
  int depth = 0;
  bool terminated = true;  // false when the level cap cut expansion short
};

/// Expand children depth-first in coordinate order, stopping at torsion-free
/// or zero modules; `level_cap` is a safety valve against non-termination.
TorsionTree build_tree(const PointwiseModule& V, int level_cap, int smax);

struct FiltrationReport {
  bool pass = true;
  bool map_natural = true;
  std::vector<int> surjectivity_failures;   // object indices on the shrunk grid
  std::vector<int> kernel_dim_failures;
  std::vector<int> iso_failures;
  std::vector<int> kernel_dims;             // per object
  std::vector<int> children_dims;           // per object
};

/// Builds F_{R(V)}V -> D_{[m]}V and verifies: surjectivity at every object,
/// kernel dimensions equal the summed children dimensions, and the assembled
/// map from the direct sum of the children is a pointwise isomorphism onto
/// the kernel. Pre: all bounds >= 1.
FiltrationReport filtration_check(const PointwiseModule& V);

struct RecursiveIneqEntry {
  SubsetS subset;                // S, subset of the regular indices
  bool skipped = false;          // boundary-flagged homology on either side
  bool pass = true;
  std::optional<int> reg_v;      // nullopt = -inf
  std::optional<int> reg_fs;
  int margin = 0;                // reg(F_S V) + 1 - reg(V) when both finite
};

struct RecursiveIneqReport {
  std::vector<RecursiveIneqEntry> entries;
  bool any_fail = false;
};

/// reg(V) <= reg(F_S V) + 1 for every S inside the regular index set; zero
/// modules satisfy every inequality vacuously.
RecursiveIneqReport recursive_inequality_check(const PointwiseModule& V, int smax);

}  // namespace fimhom
