#pragma once

#include <optional>

#include "fimhom/functors.hpp"

namespace fimhom {

/// A free resolution of V on its grid. Level s holds the free module P_s, its
/// differential into the previous level's fiber coordinates (level 0 maps
/// into V's own coordinates), and the next syzygy as subspaces of P_s fibers.
struct Resolution {
  Grid grid;
  u32 p = 2;
  std::vector<int> vdims;

  struct Level {
    FreeModule P;
    std::vector<PrimeMatrix> diff;  // per object: prev-ambient-dim x P-fiber-dim
    std::vector<Subspace> syzygy;   // kernel of diff, inside P fibers
  };
  std::vector<Level> levels;  // cover levels 0..L-1; empty tail levels omitted

  /// Fiber dimension of P_s at an object (0 when the level was not built).
  int fiber_dim(int s, int obj) const;
};

/// Build cover levels 0..levels-1, stopping early once a syzygy vanishes.
/// Covers are chosen greedily (group-orbit reduced) at every step.
Resolution resolve(const PointwiseModule& V, int levels);

struct HomologyTable {
  Grid grid;
  int smax = 0;
  std::vector<std::vector<int>> rows;      // rows[s][obj]
  std::vector<bool> shell_contact;         // per s: nonzero entry on the outer shell
};

/// Homological degrees of the derived functors of H_0, read off the
/// generator-degree blocks of the resolution complex. Exact per object.
HomologyTable homology_table(const PointwiseModule& V, int smax);
HomologyTable homology_table(const Resolution& R, const H0Data& h, int smax);

struct DegreeReport {
  std::vector<int> hd;                  // per s; -1 for empty
  std::vector<bool> shell_contact;      // per s
  int gd = -1;
  int prd = -1;
  std::optional<int> reg;               // nullopt encodes minus infinity
  bool boundary_flag = false;           // any nonzero homology on the shell
};

DegreeReport degree_report(const PointwiseModule& V, int smax);
DegreeReport degree_report_from(const HomologyTable& table);

struct TorsionVector {
  std::vector<int> t;  // per coordinate; -1 when no kernel is seen
  int tsum = 0;
  // objects attaining each t_i (empty when t_i = -1)
  std::vector<std::vector<int>> witnesses;
};

/// Observed torsion vector: t_i is the top i-height of an object whose
/// one-step inclusion in direction i has a kernel. Pre: all bounds >= 1.
TorsionVector torsion_vector(const PointwiseModule& V);

/// True iff every one-step inclusion is injective wherever defined.
bool is_torsion_free(const PointwiseModule& V);

struct EulerReport {
  bool ok = true;
  std::vector<int> mismatch_objects;
};

/// Alternating-sum oracle: at every object, the fiber dimensions of the
/// resolution must reproduce dim V_n, with the partial-sum correction by the
/// final syzygy when the resolution was truncated.
EulerReport euler_check(const Resolution& R);

}  // namespace fimhom
