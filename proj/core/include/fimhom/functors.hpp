#pragma once

#include "fimhom/module_map.hpp"

namespace fimhom {

/// Shift in coordinate `coord` (0-based): the result lives on bounds b - o_i
/// with fibers pulled back from n + o_i. Pre: bounds[coord] >= 1.
PointwiseModule sigma(int coord, const PointwiseModule& V);

/// The natural map V -> Sigma_i V, given at n by the inclusion action E^(i)_n.
/// Source is V restricted to the shrunk window.
ModuleMap natural_map(int coord, const PointwiseModule& V);

/// 0 -> K_i V -> V -> Sigma_i V -> D_i V -> 0, all materialized on b - o_i.
struct FourTermSequence {
  ModulePtr K;
  ModulePtr V;  // V restricted to the shrunk window
  ModulePtr SigmaV;
  ModulePtr D;
  ModuleMap incl;  // K -> V
  ModuleMap nat;   // V -> Sigma V
  ModuleMap proj;  // Sigma V -> D
};

FourTermSequence four_term(int coord, const PointwiseModule& V);

/// Subset of coordinates (0-based, ascending).
using SubsetS = std::vector<int>;

/// F_S V = (sum over i in S of D_i V) + (sum over i not in S of Sigma_i V),
/// on the common window b - (1,...,1). Pre: all bounds >= 1.
PointwiseModule f_s(const SubsetS& S, const PointwiseModule& V);

/// Sigma_S V = sum over i in S of Sigma_i V, on the window b - 1_S.
/// Pre: S nonempty, bounds >= 1 on S.
PointwiseModule sigma_s(const SubsetS& S, const PointwiseModule& V);

/// D_S V = sum over i in S of D_i V, on the window b - 1_S.
PointwiseModule d_s(const SubsetS& S, const PointwiseModule& V);

struct H0Data {
  std::vector<int> dims;                    // per object
  std::vector<std::vector<int>> lifts;      // complement coordinates of I_n
  std::vector<Subspace> lower_image;        // I_n itself
};

/// Zeroth homology: fiber modulo the group-closure of all one-step images.
H0Data h0(const PointwiseModule& V);

struct MinimalCover {
  FreeModule P;
  ModulePtr P_module;         // dense realization of P
  ModuleMap cover;            // P -> V, surjective at every object
  std::vector<Obj> degrees;   // generator degree multiset, canonical order
  std::vector<Vec> lifts;     // chosen generator images in V
};

/// Economical free cover: at each object, generators are chosen greedily so
/// that each new generator's group-orbit closure extends the span; a free
/// module is covered by itself this way.
MinimalCover minimal_cover(const PointwiseModule& V);

}  // namespace fimhom
