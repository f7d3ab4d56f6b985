#include "fimhom/category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fimhom {

int rank_of(const Obj& n) { return std::accumulate(n.begin(), n.end(), 0); }

Obj plus_unit(const Obj& n, int coord) {
  Obj r = n;
  r[coord] += 1;
  return r;
}

Obj minus_unit(const Obj& n, int coord) {
  Obj r = n;
  r[coord] -= 1;
  return r;
}

bool leq(const Obj& r, const Obj& n) {
  if (r.size() != n.size()) return false;
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] > n[i]) return false;
  return true;
}

std::string obj_to_string(const Obj& n) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < n.size(); ++i) {
    if (i) os << ',';
    os << n[i];
  }
  os << ')';
  return os.str();
}

Grid Grid::make(const Obj& bounds) {
  if (bounds.empty()) throw std::invalid_argument("grid needs m >= 1");
  for (int b : bounds)
    if (b < 0) throw std::invalid_argument("grid bounds must be non-negative");
  Grid g;
  g.m = static_cast<int>(bounds.size());
  g.bounds = bounds;
  Obj cur(g.m, 0);
  while (true) {
    g.objects.push_back(cur);
    int i = g.m - 1;
    while (i >= 0 && cur[i] == bounds[i]) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    cur[i] += 1;
  }
  std::sort(g.objects.begin(), g.objects.end(), [](const Obj& a, const Obj& b) {
    int ra = rank_of(a), rb = rank_of(b);
    return ra != rb ? ra < rb : a < b;
  });
  for (int i = 0; i < g.size(); ++i) g.index_[g.objects[i]] = i;
  return g;
}

bool Grid::contains(const Obj& n) const {
  if (static_cast<int>(n.size()) != m) return false;
  for (int i = 0; i < m; ++i)
    if (n[i] < 0 || n[i] > bounds[i]) return false;
  return true;
}

int Grid::index_of(const Obj& n) const {
  auto it = index_.find(n);
  return it == index_.end() ? -1 : it->second;
}

int Grid::up(int idx, int coord) const { return index_of(plus_unit(objects[idx], coord)); }

int Grid::down(int idx, int coord) const {
  const Obj& n = objects[idx];
  if (n[coord] == 0) return -1;
  return index_of(minus_unit(n, coord));
}

Grid Grid::shrink(const Obj& delta) const {
  Obj nb = bounds;
  for (int i = 0; i < m; ++i) {
    nb[i] -= delta[i];
    if (nb[i] < 0) throw std::invalid_argument("grid shrink below zero");
  }
  return Grid::make(nb);
}

bool Injection::is_identity() const {
  if (src != tgt) return false;
  for (int k = 0; k < src; ++k)
    if (images[k] != k + 1) return false;
  return true;
}

Injection identity_injection(int n) {
  Injection f{n, n, {}};
  f.images.resize(n);
  for (int k = 0; k < n; ++k) f.images[k] = k + 1;
  return f;
}

Injection standard_inclusion(int n) {
  Injection f = identity_injection(n);
  f.tgt = n + 1;
  return f;
}

Injection adjacent_transposition(int n, int j) {
  if (j < 1 || j > n - 1) throw std::invalid_argument("transposition index out of range");
  Injection f = identity_injection(n);
  std::swap(f.images[j - 1], f.images[j]);
  return f;
}

Morphism identity_morphism(const Obj& n) {
  Morphism f{n, n, {}};
  for (int c : n) f.parts.push_back(identity_injection(c));
  return f;
}

Morphism inclusion_morphism(const Obj& n, int coord) {
  Morphism f = identity_morphism(n);
  f.tgt = plus_unit(n, coord);
  f.parts[coord] = standard_inclusion(n[coord]);
  return f;
}

Morphism transposition_morphism(const Obj& n, int coord, int j) {
  Morphism f = identity_morphism(n);
  f.parts[coord] = adjacent_transposition(n[coord], j);
  return f;
}

std::string morphism_to_string(const Morphism& f) {
  std::ostringstream os;
  os << obj_to_string(f.src) << "->" << obj_to_string(f.tgt) << '[';
  for (size_t i = 0; i < f.parts.size(); ++i) {
    if (i) os << ';';
    for (size_t k = 0; k < f.parts[i].images.size(); ++k) {
      if (k) os << ',';
      os << f.parts[i].images[k];
    }
  }
  os << ']';
  return os.str();
}

namespace {

// falling factorial a!/(a-b)!
u64 falling(int a, int b) {
  u64 r = 1;
  for (int i = 0; i < b; ++i) r *= static_cast<u64>(a - i);
  return r;
}

void enum_injections(int r, int n, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  cur.reserve(r);
  // lexicographic over image tuples
  auto rec = [&](auto&& self, int k) -> void {
    if (k == r) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self, k + 1);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec, 0);
}

u64 injection_rank(const Injection& f) {
  std::vector<bool> used(f.tgt + 1, false);
  u64 idx = 0;
  for (int k = 0; k < f.src; ++k) {
    int v = f.images[k];
    int cnt = 0;
    for (int w = 1; w < v; ++w)
      if (!used[w]) ++cnt;
    idx += static_cast<u64>(cnt) * falling(f.tgt - k - 1, f.src - k - 1);
    used[v] = true;
  }
  return idx;
}

Injection injection_unrank(int r, int n, u64 idx) {
  Injection f{r, n, {}};
  std::vector<bool> used(n + 1, false);
  for (int k = 0; k < r; ++k) {
    u64 block = falling(n - k - 1, r - k - 1);
    u64 q = idx / block;
    idx %= block;
    int v = 0;
    for (int w = 1; w <= n; ++w) {
      if (used[w]) continue;
      if (q == 0) {
        v = w;
        break;
      }
      --q;
    }
    used[v] = true;
    f.images.push_back(v);
  }
  return f;
}

}  // namespace

u64 hom_count(const Obj& r, const Obj& n) {
  if (r.size() != n.size()) throw std::invalid_argument("object arity mismatch");
  if (!leq(r, n)) return 0;
  u64 c = 1;
  for (size_t i = 0; i < r.size(); ++i) c *= falling(n[i], r[i]);
  return c;
}

std::vector<Morphism> enumerate_hom(const Obj& r, const Obj& n) {
  std::vector<Morphism> out;
  if (r.size() != n.size()) throw std::invalid_argument("object arity mismatch");
  if (!leq(r, n)) return out;
  int m = static_cast<int>(r.size());
  std::vector<std::vector<std::vector<int>>> per(m);
  for (int i = 0; i < m; ++i) enum_injections(r[i], n[i], per[i]);
  std::vector<size_t> pos(m, 0);
  while (true) {
    Morphism f{r, n, {}};
    for (int i = 0; i < m; ++i)
      f.parts.push_back(Injection{r[i], n[i], per[i][pos[i]]});
    out.push_back(std::move(f));
    int i = m - 1;
    while (i >= 0 && pos[i] + 1 == per[i].size()) {
      pos[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pos[i];
  }
  return out;
}

u64 hom_rank(const Morphism& f) {
  u64 idx = 0;
  for (size_t i = 0; i < f.parts.size(); ++i) {
    u64 cnt = falling(f.tgt[i], f.src[i]);
    idx = idx * cnt + injection_rank(f.parts[i]);
  }
  return idx;
}

Morphism hom_unrank(const Obj& r, const Obj& n, u64 idx) {
  int m = static_cast<int>(r.size());
  std::vector<u64> counts(m);
  for (int i = 0; i < m; ++i) counts[i] = falling(n[i], r[i]);
  std::vector<u64> part(m);
  for (int i = m - 1; i >= 0; --i) {
    part[i] = idx % counts[i];
    idx /= counts[i];
  }
  Morphism f{r, n, {}};
  for (int i = 0; i < m; ++i) f.parts.push_back(injection_unrank(r[i], n[i], part[i]));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.tgt != g.src) throw std::invalid_argument("composition object mismatch");
  Morphism h{f.src, g.tgt, {}};
  for (size_t i = 0; i < f.parts.size(); ++i) {
    Injection c{f.parts[i].src, g.parts[i].tgt, {}};
    for (int k = 0; k < c.src; ++k)
      c.images.push_back(g.parts[i].images[f.parts[i].images[k] - 1]);
    h.parts.push_back(std::move(c));
  }
  return h;
}

GeneratorWord factor(const Morphism& f) {
  if (!leq(f.src, f.tgt))
    throw std::invalid_argument("factor requires source <= target");
  GeneratorWord w;
  w.source = f.src;
  for (size_t i = 0; i < f.parts.size(); ++i) {
    int r = f.parts[i].src, n = f.parts[i].tgt;
    for (int k = 0; k < n - r; ++k)
      w.atoms.push_back(Atom{true, static_cast<int>(i), 0});
    // complete to a permutation: unused targets in increasing order
    std::vector<int> line(n);
    std::vector<bool> used(n + 1, false);
    for (int k = 0; k < r; ++k) {
      line[k] = f.parts[i].images[k];
      used[line[k]] = true;
    }
    int next = 1;
    for (int k = r; k < n; ++k) {
      while (used[next]) ++next;
      line[k] = next;
      used[next] = true;
    }
    // insertion sort; recorded swaps applied left to right compose to the permutation
    for (int k = 1; k < n; ++k) {
      int pos = k;
      while (pos > 0 && line[pos - 1] > line[pos]) {
        std::swap(line[pos - 1], line[pos]);
        w.atoms.push_back(Atom{false, static_cast<int>(i), pos});
        --pos;
      }
    }
  }
  return w;
}

Morphism recompose(const GeneratorWord& w) {
  Morphism f = identity_morphism(w.source);
  for (const Atom& a : w.atoms) {
    Morphism step = a.is_inclusion ? inclusion_morphism(f.tgt, a.coord)
                                   : transposition_morphism(f.tgt, a.coord, a.j);
    f = compose(step, f);
  }
  return f;
}

std::vector<Obj> objects_by_rank(const Grid& grid) { return grid.objects; }

}  // namespace fimhom
