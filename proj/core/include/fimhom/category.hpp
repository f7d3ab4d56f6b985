#pragma once

#include <map>
#include <string>
#include <vector>

#include "fimhom/field.hpp"

namespace fimhom {

/// An object of the truncated category: an m-tuple of naturals.
using Obj = std::vector<int>;

int rank_of(const Obj& n);
Obj plus_unit(const Obj& n, int coord);   // n + o_i
Obj minus_unit(const Obj& n, int coord);  // n - o_i (may go negative)
bool leq(const Obj& r, const Obj& n);     // componentwise
std::string obj_to_string(const Obj& n);

/// Truncation window {n : 0 <= n_i <= b_i}, with the canonical
/// (rank, lexicographic) object ordering used everywhere.
struct Grid {
  int m = 0;
  Obj bounds;
  std::vector<Obj> objects;

  static Grid make(const Obj& bounds);

  int size() const { return static_cast<int>(objects.size()); }
  bool contains(const Obj& n) const;
  /// Index in the canonical order, or -1.
  int index_of(const Obj& n) const;
  /// Index of objects[idx] + o_coord, or -1 when outside the grid.
  int up(int idx, int coord) const;
  /// Index of objects[idx] - o_coord, or -1 when outside.
  int down(int idx, int coord) const;
  Grid shrink(const Obj& delta) const;

  bool operator==(const Grid& o) const { return bounds == o.bounds; }

 private:
  std::map<Obj, int> index_;
};

/// An injection [r] -> [n], stored by its image tuple (1-based values).
struct Injection {
  int src = 0;
  int tgt = 0;
  std::vector<int> images;

  bool is_identity() const;
  bool operator==(const Injection&) const = default;
};

Injection identity_injection(int n);
/// The standard inclusion [n] -> [n+1], j |-> j.
Injection standard_inclusion(int n);
/// The adjacent transposition s_j in S_n (swaps j, j+1), 1 <= j <= n-1.
Injection adjacent_transposition(int n, int j);

struct Morphism {
  Obj src;
  Obj tgt;
  std::vector<Injection> parts;

  int degree() const { return rank_of(tgt) - rank_of(src); }
  bool operator==(const Morphism&) const = default;
};

Morphism identity_morphism(const Obj& n);
/// Degree-1 standard morphism at n in the given coordinate (0-based).
Morphism inclusion_morphism(const Obj& n, int coord);
/// The adjacent transposition s_j acting in the given coordinate at n.
Morphism transposition_morphism(const Obj& n, int coord, int j);

std::string morphism_to_string(const Morphism& f);

/// |C(r, n)| = prod_i n_i!/(n_i - r_i)!; zero when r is not <= n.
u64 hom_count(const Obj& r, const Obj& n);

/// All morphisms r -> n in lexicographic order of concatenated image lists.
std::vector<Morphism> enumerate_hom(const Obj& r, const Obj& n);

/// Position of f in enumerate_hom(f.src, f.tgt).
u64 hom_rank(const Morphism& f);
Morphism hom_unrank(const Obj& r, const Obj& n, u64 idx);

/// g after f; pre: f.tgt == g.src.
Morphism compose(const Morphism& g, const Morphism& f);

/// One generator step: a coordinate inclusion or an adjacent transposition.
struct Atom {
  bool is_inclusion = false;
  int coord = 0;  // 0-based
  int j = 0;      // transposition index, 1-based; unused for inclusions

  bool operator==(const Atom&) const = default;
};

/// A word of degree-1 generators applied left to right from `source`.
struct GeneratorWord {
  Obj source;
  std::vector<Atom> atoms;
};

/// Canonical factorization of f into inclusions and adjacent transpositions.
/// Coordinates are processed in ascending order; the completion of each
/// injection to a permutation assigns unused targets in increasing order, and
/// permutations decompose by insertion sort (word length = inversion count).
GeneratorWord factor(const Morphism& f);

/// Re-compose a generator word into the morphism it denotes.
Morphism recompose(const GeneratorWord& w);

/// Grid objects in the canonical (rank, lex) order.
std::vector<Obj> objects_by_rank(const Grid& grid);

}  // namespace fimhom
