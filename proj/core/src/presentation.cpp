#include "fimhom/presentation.hpp"

#include <stdexcept>
#include <string>

namespace fimhom {

void check_presentation(const Presentation& P) {
  if (!is_prime(P.p)) throw std::invalid_argument("field must be prime");
  if (P.m < 1) throw std::invalid_argument("m must be >= 1");
  if (static_cast<int>(P.bounds.size()) != P.m)
    throw std::invalid_argument("bounds length must equal m");
  Grid grid = P.grid();
  for (size_t g = 0; g < P.generators.size(); ++g) {
    if (!grid.contains(P.generators[g]))
      throw std::invalid_argument("generator " + std::to_string(g) + " outside grid");
  }
  for (size_t r = 0; r < P.relations.size(); ++r) {
    const FreeElement& rel = P.relations[r];
    std::string where = "relation " + std::to_string(r);
    if (!grid.contains(rel.object))
      throw std::invalid_argument(where + ": object outside grid");
    for (size_t t = 0; t < rel.terms.size(); ++t) {
      const RelationTerm& term = rel.terms[t];
      std::string twhere = where + " term " + std::to_string(t);
      if (term.gen < 0 || term.gen >= static_cast<int>(P.generators.size()))
        throw std::invalid_argument(twhere + ": generator index out of range");
      const Obj& d = P.generators[term.gen];
      if (term.map.src != d || term.map.tgt != rel.object)
        throw std::invalid_argument(twhere + ": morphism endpoints mismatch");
      if (!leq(d, rel.object))
        throw std::invalid_argument(twhere + ": generator degree not <= relation object");
      for (int i = 0; i < P.m; ++i) {
        const Injection& inj = term.map.parts[i];
        if (static_cast<int>(inj.images.size()) != d[i])
          throw std::invalid_argument(twhere + ": wrong image-list length");
        std::vector<bool> seen(rel.object[i] + 1, false);
        for (int v : inj.images) {
          if (v < 1 || v > rel.object[i])
            throw std::invalid_argument(twhere + ": image out of range");
          if (seen[v]) throw std::invalid_argument(twhere + ": duplicate image");
          seen[v] = true;
        }
      }
      if (term.coeff == 0 || term.coeff >= P.p)
        throw std::invalid_argument(twhere + ": coefficient must be a nonzero residue");
    }
  }
}

PointwiseModule evaluate_presentation(const Presentation& P) {
  check_presentation(P);
  Grid grid = P.grid();
  FreeModule F = make_free(grid, P.p, P.generators);
  PrimeField field(P.p);

  // relation vectors pushed into their objects
  std::vector<std::vector<Vec>> seeds(grid.size());
  for (const FreeElement& rel : P.relations) {
    int idx = grid.index_of(rel.object);
    Vec v(F.dims[idx], 0);
    for (const RelationTerm& term : rel.terms) {
      int b = F.basis_index(idx, term.gen, term.map);
      v[b] = field.add(v[b], term.coeff);
    }
    seeds[idx].push_back(std::move(v));
  }

  // smallest action-stable family containing the relations: one bottom-up
  // pass suffices because the grid is downward closed
  std::vector<Subspace> R(grid.size());
  for (int idx = 0; idx < grid.size(); ++idx) {
    const Obj& n = grid.objects[idx];
    std::vector<Vec> vecs = seeds[idx];
    for (int c = 0; c < grid.m; ++c) {
      int dn = grid.down(idx, c);
      if (dn < 0) continue;
      for (int r = 0; r < R[dn].rank(); ++r)
        vecs.push_back(F.apply_incl(dn, c, R[dn].row(r)));
    }
    std::vector<VecMap> maps;
    for (int c = 0; c < grid.m; ++c)
      for (int j = 1; j <= n[c] - 1; ++j)
        maps.push_back([&F, idx, c, j](const Vec& v) { return F.apply_trans(idx, c, j, v); });
    R[idx] = sum_and_close(F.dims[idx], P.p, vecs, maps);
  }

  // quotient fibers on the RREF-complement coordinates, with induced actions
  std::vector<QuotientData> Q(grid.size());
  std::vector<int> dims(grid.size());
  for (int idx = 0; idx < grid.size(); ++idx) {
    Q[idx] = quotient_data(R[idx]);
    dims[idx] = static_cast<int>(Q[idx].complement.size());
  }
  PointwiseModule V = PointwiseModule::shell(grid, P.p, dims);
  for (int idx = 0; idx < grid.size(); ++idx) {
    const Obj& n = grid.objects[idx];
    for (int c = 0; c < grid.m; ++c) {
      for (int j = 1; j <= n[c] - 1; ++j) {
        PrimeMatrix M(dims[idx], dims[idx], P.p);
        for (int k = 0; k < dims[idx]; ++k) {
          int img = F.trans_perm[idx][c][j - 1][Q[idx].complement[k]];
          for (int r = 0; r < dims[idx]; ++r) M.at(r, k) = Q[idx].proj.at(r, img);
        }
        V.trans[idx][c][j - 1] = std::move(M);
      }
      int up = grid.up(idx, c);
      if (up >= 0) {
        PrimeMatrix M(dims[up], dims[idx], P.p);
        for (int k = 0; k < dims[idx]; ++k) {
          int img = F.incl_perm[idx][c][Q[idx].complement[k]];
          for (int r = 0; r < dims[up]; ++r) M.at(r, k) = Q[up].proj.at(r, img);
        }
        V.incl[idx][c] = std::move(M);
      }
    }
  }
  return V;
}

Presentation random_presentation(u64 seed, const RandomPresentationParams& params) {
  if (params.m < 1 || static_cast<int>(params.bounds.size()) != params.m)
    throw std::invalid_argument("bad random presentation params");
  Grid grid = Grid::make(params.bounds);
  std::vector<Obj> interior;
  Obj ones(params.m, 1);
  for (const Obj& n : grid.objects) {
    Obj up = n;
    for (int i = 0; i < params.m; ++i) up[i] += 1;
    if (grid.contains(up)) interior.push_back(n);
  }
  if (interior.empty())
    throw std::invalid_argument("grid interior is empty; bounds must be >= 1 everywhere");

  DetRng rng(seed);
  Presentation P;
  P.p = params.p;
  P.m = params.m;
  P.bounds = params.bounds;

  int gens = 1 + static_cast<int>(rng.below(std::max(1, params.max_gens)));
  for (int g = 0; g < gens; ++g)
    P.generators.push_back(interior[rng.below(interior.size())]);

  int rels = static_cast<int>(rng.below(params.max_rels + 1));
  for (int r = 0; r < rels; ++r) {
    FreeElement rel;
    rel.object = interior[rng.below(interior.size())];
    int terms = 1 + static_cast<int>(rng.below(std::max(1, params.max_terms)));
    for (int t = 0; t < terms; ++t) {
      int g = static_cast<int>(rng.below(gens));
      const Obj& d = P.generators[g];
      if (!leq(d, rel.object)) continue;  // term skipped, deterministically
      u64 cnt = hom_count(d, rel.object);
      RelationTerm term;
      term.gen = g;
      term.map = hom_unrank(d, rel.object, rng.below(cnt));
      term.coeff = 1 + static_cast<u32>(rng.below(params.p - 1));
      rel.terms.push_back(std::move(term));
    }
    if (!rel.terms.empty()) P.relations.push_back(std::move(rel));
  }
  return P;
}

}  // namespace fimhom
