#pragma once

#include "fimhom/module.hpp"
#include "fimhom/rng.hpp"

namespace fimhom {

/// One term of a relation: coeff * (morphism applied to a generator).
struct RelationTerm {
  int gen = 0;       // index into Presentation::generators
  Morphism map;      // from the generator degree into the relation object
  u32 coeff = 1;     // nonzero residue mod p
};

/// An element of the free cover, supported at one object.
struct FreeElement {
  Obj object;
  std::vector<RelationTerm> terms;
};

/// A finite presentation of a module on a grid: generator degrees plus
/// relations in the corresponding free cover.
struct Presentation {
  u32 p = 2;
  int m = 1;
  Obj bounds;
  std::vector<Obj> generators;
  std::vector<FreeElement> relations;

  Grid grid() const { return Grid::make(bounds); }
};

/// Validates shape constraints; throws std::invalid_argument with a message
/// naming the offending component.
void check_presentation(const Presentation& P);

/// Realize the presentation on its grid: free cover fibers modulo the
/// smallest action-stable family containing every relation, computed
/// bottom-up in (rank, lex) order.
PointwiseModule evaluate_presentation(const Presentation& P);

struct RandomPresentationParams {
  int m = 1;
  Obj bounds;
  u32 p = 3;
  int max_gens = 3;
  int max_rels = 3;
  int max_terms = 2;
};

/// Deterministic in `seed`. Generator degrees and relation objects are drawn
/// from the grid interior (objects n with n + (1,...,1) still inside), so
/// shifted and derived modules stay analyzable.
Presentation random_presentation(u64 seed, const RandomPresentationParams& params);

}  // namespace fimhom
