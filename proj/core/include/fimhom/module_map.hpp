#pragma once

#include "fimhom/module.hpp"

namespace fimhom {

/// A degree-0 natural transformation, one matrix per object
/// (shape dims_target(n) x dims_source(n)).
struct ModuleMap {
  ModulePtr src;
  ModulePtr tgt;
  std::vector<PrimeMatrix> mats;

  const PrimeMatrix& at(int obj) const { return mats[obj]; }
};

/// Naturality defects against every stored generator action; empty iff natural.
std::vector<Violation> naturality_violations(const ModuleMap& f);
bool is_natural(const ModuleMap& f);

struct SubmoduleResult {
  ModulePtr module;
  ModuleMap incl;  // module -> ambient
};

struct QuotientResult {
  ModulePtr module;
  ModuleMap proj;  // ambient -> module
};

/// Realize an action-stable family of subspaces as a module with induced
/// (restricted) actions. Throws if some action leaves the family.
SubmoduleResult submodule_from(ModulePtr V, const std::vector<Subspace>& family);

/// Quotient by an action-stable family, realized on the RREF-complement
/// coordinates with induced actions.
QuotientResult quotient_by(ModulePtr V, const std::vector<Subspace>& family);

SubmoduleResult map_kernel(const ModuleMap& f);
QuotientResult map_cokernel(const ModuleMap& f);
SubmoduleResult map_image(const ModuleMap& f);

/// Pointwise kernel subspaces ker(f_n).
std::vector<Subspace> kernel_family(const ModuleMap& f);

using TransFn = std::function<Vec(int, int, int, const Vec&)>;
using InclFn = std::function<Vec(int, int, const Vec&)>;

/// Fiber-level action hooks used by the free-cover column builder. The
/// object indices refer to `grid`.
struct TargetOps {
  const Grid* grid = nullptr;
  u32 p = 2;
  std::vector<int> dims;
  TransFn apply_trans;  // (obj, coord, j, v) -> A v
  InclFn apply_incl;    // (obj, coord, v) -> E v, lands in fiber at up(obj, coord)
};

TargetOps ops_of(const PointwiseModule& V);
TargetOps ops_of(const FreeModule& F);

/// Matrices of the map out of a free module determined by generator images
/// (one ambient vector per summand, at the summand's degree). Every column is
/// computed from an earlier one by a single generator application.
std::vector<PrimeMatrix> free_map_matrices(const FreeModule& P, const TargetOps& target,
                                           const std::vector<Vec>& gen_images);

/// The same map packaged as a ModuleMap (target must be a PointwiseModule).
ModuleMap free_map(const FreeModule& P, ModulePtr target, const std::vector<Vec>& gen_images);

/// Apply the shift in coordinate `coord` to a map: matrices at n are f's at n+o_i.
ModuleMap sigma_of_map(int coord, const ModuleMap& f, ModulePtr sigma_src, ModulePtr sigma_tgt);

}  // namespace fimhom
