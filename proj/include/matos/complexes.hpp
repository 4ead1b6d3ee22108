#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "subsets.hpp"

namespace matos {

using IntSequence = std::vector<long long>;

inline IntSequence nonzero_part(const IntSequence& h) {
  IntSequence out = h;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

struct GroundPartition {
  std::vector<Mask> blocks;  // pairwise disjoint, nonempty, sorted by least element
};

/// Simplicial complex over the ground set {1..n}. Faces are represented by
/// the family of inclusion-maximal faces (facets) as bitmasks; ground
/// elements belonging to no facet are loops. Keeping loops explicit lets
/// links and deletions stay defined over the original ground set.
struct SimplicialComplex {
  int n = 0;
  std::vector<Mask> facets;  // sorted, antichain, nonempty
  Mask loops = 0;

  Mask vertex_mask() const {
    Mask u = 0;
    for (Mask f : facets) u |= f;
    return u;
  }
  int dim() const {
    int s = 0;
    for (Mask f : facets) s = std::max(s, popcount(f));
    return s - 1;
  }
  int rank() const { return dim() + 1; }

  bool operator==(const SimplicialComplex& o) const {
    return n == o.n && facets == o.facets && loops == o.loops;
  }
};

inline bool is_face(const SimplicialComplex& c, Mask s) {
  for (Mask f : c.facets)
    if ((s & ~f) == 0) return true;
  return false;
}

inline SimplicialComplex from_facets(int n, std::vector<Mask> fam) {
  if (n < 0 || n > 64) throw std::invalid_argument("ground size out of range [0,64]");
  if (fam.empty()) throw std::invalid_argument("empty complex family");
  for (Mask f : fam)
    if (f & ~full_mask(n)) throw std::invalid_argument("element out of range");
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  SimplicialComplex c;
  c.n = n;
  for (Mask f : fam) {
    bool maximal = true;
    for (Mask g : fam)
      if (g != f && (f & ~g) == 0) {
        maximal = false;
        break;
      }
    if (maximal) c.facets.push_back(f);
  }
  c.loops = full_mask(n) & ~c.vertex_mask();
  return c;
}

inline SimplicialComplex from_facet_sets(int n, const std::vector<std::vector<int>>& fam) {
  std::vector<Mask> masks;
  for (const auto& s : fam) {
    Mask m = 0;
    for (int v : s) {
      if (v < 1 || v > n) throw std::invalid_argument("element out of range");
      m |= bit(v);
    }
    masks.push_back(m);
  }
  return from_facets(n, masks);
}

/// All inclusion-minimal non-faces, loops included as singletons.
inline std::vector<Mask> circuits(const SimplicialComplex& c) {
  std::vector<Mask> out;
  for (int v = 1; v <= c.n; ++v)
    if (contains(c.loops, v)) out.push_back(bit(v));
  Mask verts = c.vertex_mask();
  int maxk = std::min(c.dim() + 2, popcount(verts));
  for (int k = 2; k <= maxk; ++k) {
    for_each_subset_of_size(verts, k, [&](Mask s) {
      if (is_face(c, s)) return;
      Mask t = s;
      while (t) {
        Mask lo = t & (~t + 1);
        t &= t - 1;
        if (!is_face(c, s & ~lo)) return;  // a smaller non-face sits inside
      }
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Faces are the subsets containing no circuit; inverse of circuits().
inline SimplicialComplex from_circuits(int n, std::vector<Mask> circ) {
  if (n < 0 || n > 64) throw std::invalid_argument("ground size out of range [0,64]");
  for (Mask a : circ) {
    if (a == 0) throw std::invalid_argument("empty circuit");
    if (a & ~full_mask(n)) throw std::invalid_argument("element out of range");
    for (Mask b : circ)
      if (a != b && (a & ~b) == 0) throw std::invalid_argument("circuits must form an antichain");
  }
  Mask loop_mask = 0;
  for (Mask a : circ)
    if (popcount(a) == 1) loop_mask |= a;
  auto dependent = [&](Mask s) {
    for (Mask a : circ)
      if ((a & ~s) == 0) return true;
    return false;
  };
  // Grow faces level by level, extending each face only past its top element.
  std::vector<Mask> level{0};
  std::unordered_set<Mask> facet_set;
  std::vector<Mask> all_faces{0};
  while (!level.empty()) {
    std::vector<Mask> next;
    for (Mask f : level) {
      int lo = f == 0 ? 1 : highest_element(f) + 1;
      for (int v = lo; v <= n; ++v) {
        if (contains(loop_mask, v)) continue;
        Mask s = f | bit(v);
        if (!dependent(s)) next.push_back(s);
      }
    }
    all_faces.insert(all_faces.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<Mask> facets;
  for (Mask f : all_faces) {
    bool maximal = true;
    for (int v = 1; v <= n && maximal; ++v)
      if (!contains(f, v) && !contains(loop_mask, v) && !dependent(f | bit(v))) maximal = false;
    if (maximal) facets.push_back(f);
  }
  if (facets.empty()) facets.push_back(0);
  return from_facets(n, facets);
}

inline std::vector<Mask> all_faces(const SimplicialComplex& c) {
  std::unordered_set<Mask> seen;
  for (Mask f : c.facets) {
    // enumerate submasks of f
    Mask s = f;
    for (;;) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return std::vector<Mask>(seen.begin(), seen.end());
}

/// Entry j counts the faces of cardinality j, so entry 0 is f_{-1} = 1.
inline IntSequence f_vector(const SimplicialComplex& c) {
  IntSequence f(c.dim() + 2, 0);
  for (Mask s : all_faces(c)) f[popcount(s)] += 1;
  return f;
}

/// h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1}, with d = dim + 1.
inline IntSequence h_vector(const SimplicialComplex& c) {
  IntSequence f = f_vector(c);
  int d = c.dim() + 1;
  IntSequence h(d + 1, 0);
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= j; ++i) {
      long long term = binomial(d - i, j - i) * f[i];
      h[j] += ((j - i) % 2 == 0) ? term : -term;
    }
  return h;
}

/// Inverse relation: f_{j-1} = sum_i C(d-i, j-i) h_i.
inline IntSequence f_from_h(const IntSequence& h) {
  int d = static_cast<int>(h.size()) - 1;
  IntSequence f(d + 1, 0);
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= j; ++i) f[j] += binomial(d - i, j - i) * h[i];
  return f;
}

inline bool is_pure(const SimplicialComplex& c) {
  for (Mask f : c.facets)
    if (popcount(f) != popcount(c.facets.front())) return false;
  return true;
}

/// Basis-exchange recognizer. Agreement with the restriction-purity and
/// circuit-exchange definitions is enforced by tests, not assumed.
inline bool is_matroid(const SimplicialComplex& c) {
  if (!is_pure(c)) return false;
  std::unordered_set<Mask> bases(c.facets.begin(), c.facets.end());
  for (Mask b1 : c.facets)
    for (Mask b2 : c.facets) {
      if (b1 == b2) continue;
      Mask out = b1 & ~b2;
      Mask in = b2 & ~b1;
      Mask t = out;
      while (t) {
        Mask x = t & (~t + 1);
        t &= t - 1;
        bool ok = false;
        Mask u = in;
        while (u) {
          Mask y = u & (~u + 1);
          u &= u - 1;
          if (bases.count((b1 & ~x) | y)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  return true;
}

inline bool circuit_exchange_holds(const SimplicialComplex& c) {
  std::vector<Mask> circ = circuits(c);
  for (size_t i = 0; i < circ.size(); ++i)
    for (size_t j = i + 1; j < circ.size(); ++j) {
      Mask common = circ[i] & circ[j];
      Mask t = common;
      while (t) {
        Mask v = t & (~t + 1);
        t &= t - 1;
        if (is_face(c, (circ[i] | circ[j]) & ~v)) return false;
      }
    }
  return true;
}

/// Restriction to V - {v}, kept over the same ground set with v a loop.
inline SimplicialComplex deletion(const SimplicialComplex& c, int v) {
  if (v < 1 || v > c.n) throw std::invalid_argument("deletion: element out of range");
  std::vector<Mask> fam;
  for (Mask f : c.facets) fam.push_back(f & ~bit(v));
  return from_facets(c.n, fam);
}

inline SimplicialComplex link(const SimplicialComplex& c, int v) {
  if (v < 1 || v > c.n) throw std::invalid_argument("link: element out of range");
  if (contains(c.loops, v) || !is_face(c, bit(v))) throw std::invalid_argument("link of a loop");
  std::vector<Mask> fam;
  for (Mask f : c.facets)
    if (contains(f, v)) fam.push_back(f & ~bit(v));
  return from_facets(c.n, fam);
}

inline Mask coloops(const SimplicialComplex& c) {
  Mask m = c.facets.front();
  for (Mask f : c.facets) m &= f;
  return m;
}

inline bool is_cone(const SimplicialComplex& c) { return coloops(c) != 0; }

/// Faces of dimension at most i.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
  if (i < -1 || i > c.dim()) throw std::invalid_argument("skeleton: dimension out of range");
  if (i == c.dim()) return c;
  std::vector<Mask> fam{0};
  for (Mask f : c.facets) {
    int k = std::min(i + 1, popcount(f));
    for_each_subset_of_size(f, k, [&](Mask s) { fam.push_back(s); });
  }
  return from_facets(c.n, fam);
}

/// Vertices i,j in series: every circuit through i goes through j and
/// conversely. Classes are maximal, ordered by least element.
inline GroundPartition series_classes(const SimplicialComplex& c) {
  std::vector<Mask> circ = circuits(c);
  std::map<std::vector<bool>, Mask> classes;
  Mask verts = c.vertex_mask();
  for (int v = 1; v <= c.n; ++v) {
    if (!contains(verts, v)) continue;
    std::vector<bool> sig;
    sig.reserve(circ.size());
    for (Mask a : circ) sig.push_back(contains(a, v));
    classes[sig] |= bit(v);
  }
  GroundPartition p;
  for (auto& [sig, m] : classes) p.blocks.push_back(m);
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](Mask a, Mask b) { return lowest_element(a) < lowest_element(b); });
  return p;
}

/// Equivalence generated by the 2-element circuits; singletons included.
inline GroundPartition parallel_classes(const SimplicialComplex& c) {
  Mask verts = c.vertex_mask();
  std::vector<int> parent(c.n + 1);
  for (int v = 0; v <= c.n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Mask a : circuits(c))
    if (popcount(a) == 2) {
      auto e = elements_of(a);
      parent[find(e[0])] = find(e[1]);
    }
  std::map<int, Mask> classes;
  for (int v = 1; v <= c.n; ++v)
    if (contains(verts, v)) classes[find(v)] |= bit(v);
  GroundPartition p;
  for (auto& [root, m] : classes) p.blocks.push_back(m);
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](Mask a, Mask b) { return lowest_element(a) < lowest_element(b); });
  return p;
}

inline bool is_complete_intersection(const SimplicialComplex& c) {
  std::vector<Mask> circ = circuits(c);
  for (size_t i = 0; i < circ.size(); ++i)
    for (size_t j = i + 1; j < circ.size(); ++j)
      if (circ[i] & circ[j]) return false;
  return true;
}

/// Circuit cardinalities of a complete intersection, ascending.
inline IntSequence ci_degrees(const SimplicialComplex& c) {
  if (!is_complete_intersection(c))
    throw std::invalid_argument("ci_degrees: not a complete intersection");
  IntSequence d;
  for (Mask a : circuits(c)) d.push_back(popcount(a));
  std::sort(d.begin(), d.end());
  return d;
}

namespace detail {

// T(x,1) by deletion-contraction over a basis family; coefficients ascending in x.
inline std::vector<long long> tutte_x1(std::vector<Mask> bases, Mask elems) {
  if (elems == 0) return {1};
  Mask e = elems & (~elems + 1);
  bool in_all = true, in_some = false;
  for (Mask b : bases) {
    if (b & e) in_some = true;
    else in_all = false;
  }
  if (!in_some) return tutte_x1(std::move(bases), elems & ~e);  // loop: factor y -> 1
  std::vector<Mask> contracted;
  for (Mask b : bases)
    if (b & e) contracted.push_back(b & ~e);
  std::sort(contracted.begin(), contracted.end());
  contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
  std::vector<long long> t_con = tutte_x1(std::move(contracted), elems & ~e);
  if (in_all) {
    t_con.insert(t_con.begin(), 0);  // coloop: factor x
    return t_con;
  }
  std::vector<Mask> deleted;
  for (Mask b : bases)
    if (!(b & e)) deleted.push_back(b);
  std::vector<long long> t_del = tutte_x1(std::move(deleted), elems & ~e);
  if (t_del.size() < t_con.size()) t_del.resize(t_con.size(), 0);
  for (size_t i = 0; i < t_con.size(); ++i) t_del[i] += t_con[i];
  return t_del;
}

}  // namespace detail

/// Coefficients of T(x,1), reported as (h_0,...,h_d) and padded with
/// trailing zeros to length rank+1, matching h_vector's cone convention.
inline IntSequence tutte_h(const SimplicialComplex& c) {
  if (!is_matroid(c)) throw std::invalid_argument("tutte_h: not a matroid");
  int d = c.rank();
  std::vector<long long> poly = detail::tutte_x1(c.facets, c.vertex_mask());
  IntSequence h(d + 1, 0);
  for (size_t i = 0; i < poly.size(); ++i) {
    // coefficient of x^i contributes h_{d-i}
    h[d - static_cast<int>(i)] = poly[i];
  }
  return h;
}

/// Join with disjointly relabeled ground sets; facets are unions F1 u F2.
inline SimplicialComplex join(const SimplicialComplex& c1, const SimplicialComplex& c2) {
  if (c1.n + c2.n > 64) throw std::invalid_argument("join: ground size out of range");
  std::vector<Mask> fam;
  for (Mask f1 : c1.facets)
    for (Mask f2 : c2.facets) fam.push_back(f1 | (f2 << c1.n));
  SimplicialComplex c = from_facets(c1.n + c2.n, fam);
  c.loops = c1.loops | (c2.loops << c1.n);
  return c;
}

/// Cone with a single new apex, relabeled as element n+1.
inline SimplicialComplex cone(const SimplicialComplex& c) {
  SimplicialComplex apex;
  apex.n = 1;
  apex.facets = {bit(1)};
  return join(c, apex);
}

/// Drop loops and relabel the vertices to a compact ground set {1..k},
/// preserving order. Loops never change an h-vector.
inline SimplicialComplex strip_loops(const SimplicialComplex& c) {
  Mask verts = c.vertex_mask();
  std::vector<int> newlab(c.n + 1, 0);
  int k = 0;
  for (int v = 1; v <= c.n; ++v)
    if (contains(verts, v)) newlab[v] = ++k;
  std::vector<Mask> fam;
  for (Mask f : c.facets) {
    Mask g = 0;
    for (int v : elements_of(f)) g |= bit(newlab[v]);
    fam.push_back(g);
  }
  SimplicialComplex out;
  out.n = k;
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  out.facets = fam;
  out.loops = 0;
  return out;
}

}  // namespace matos
