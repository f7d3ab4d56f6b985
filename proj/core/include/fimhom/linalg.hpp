#pragma once

#include <functional>
#include <vector>

#include "fimhom/matrix.hpp"

namespace fimhom {

struct RrefResult {
  PrimeMatrix R;
  std::vector<int> pivots;  // ascending leading-column indices
};

/// Unique reduced row echelon form; rank = |pivots|.
RrefResult rref(const PrimeMatrix& M);

int rank(const PrimeMatrix& M);

/// A subspace of F_p^ambient stored as an RREF basis (rows are basis vectors).
/// The canonical form makes subspace equality plain data equality.
struct Subspace {
  int ambient = 0;
  u32 p = 2;
  PrimeMatrix basis;        // rank x ambient, RREF
  std::vector<int> pivots;  // ascending

  static Subspace zero(int ambient, u32 p);
  static Subspace from_span(const PrimeMatrix& rows);
  static Subspace full(int ambient, u32 p);

  int rank() const { return static_cast<int>(pivots.size()); }
  Vec row(int r) const { return basis.row(r); }

  /// v minus its projection onto the subspace along pivot coordinates.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  /// Coordinates of v in the RREF basis; throws if v is outside.
  Vec coords_of(const Vec& v) const;
  /// Adjoin v, keeping RREF; returns true if the rank grew.
  bool adjoin(const Vec& v);

  bool operator==(const Subspace&) const = default;
};

/// Null space {v : Mv = 0}, RREF-normalized.
Subspace kernel_basis(const PrimeMatrix& M);

/// Column space of M (as a subspace of F_p^rows).
Subspace column_space(const PrimeMatrix& M);

using VecMap = std::function<Vec(const Vec&)>;

/// Smallest subspace containing all seed vectors and invariant under every
/// map. Maps are processed in supplied order until a full pass adds no rank.
Subspace sum_and_close(int ambient, u32 p, const std::vector<Vec>& seeds,
                       const std::vector<VecMap>& maps);

/// Matrix-map convenience overload.
Subspace sum_and_close(const std::vector<Subspace>& seeds,
                       const std::vector<PrimeMatrix>& maps);

struct QuotientData {
  PrimeMatrix proj;             // (ambient - rank) x ambient
  std::vector<int> complement;  // ascending non-pivot coordinates
};

/// Canonical projection onto the RREF-complement coordinates modulo `sub`;
/// proj composed with inclusion-of-complement is the identity.
QuotientData quotient_data(const Subspace& sub);

}  // namespace fimhom
