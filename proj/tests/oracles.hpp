#pragma once

// Brute-force reference routines used only by the tests. Everything here
// works by direct enumeration over all subsets, independent of the
// library's algorithms, so it stays valid as an oracle.

#include <map>
#include <set>
#include <vector>

#include "matos/complexes.hpp"

namespace oracle {

using matos::Mask;
using matos::SimplicialComplex;

// Full face list by scanning every subset of the ground set.
inline std::set<Mask> faces_by_scan(const SimplicialComplex& c) {
  std::set<Mask> out;
  for (Mask s = 0; s <= matos::full_mask(c.n); ++s) {
    if (matos::is_face(c, s)) out.insert(s);
    if (s == matos::full_mask(c.n)) break;
  }
  return out;
}

// Minimal non-faces by scanning every subset.
inline std::vector<Mask> minimal_nonfaces_by_scan(const SimplicialComplex& c) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= matos::full_mask(c.n); ++s) {
    if (matos::is_face(c, s)) {
      if (s == matos::full_mask(c.n)) break;
      continue;
    }
    bool minimal = true;
    Mask t = s;
    while (t && minimal) {
      Mask v = t & (~t + 1);
      t &= t - 1;
      if (!matos::is_face(c, s & ~v)) minimal = false;
    }
    if (minimal) out.push_back(s);
    if (s == matos::full_mask(c.n)) break;
  }
  return out;
}

// The textbook matroid definition: every vertex-subset restriction is pure.
inline bool is_matroid_by_restriction_purity(const SimplicialComplex& c) {
  Mask verts = c.vertex_mask();
  for (Mask w = verts;; w = (w - 1) & verts) {
    // facets of the restriction = maximal members of {F & w}
    std::vector<Mask> restricted;
    for (Mask f : c.facets) restricted.push_back(f & w);
    int sz = -1;
    for (Mask r : restricted) {
      bool maximal = true;
      for (Mask r2 : restricted)
        if (r2 != r && (r & ~r2) == 0) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (sz == -1) sz = matos::popcount(r);
      else if (sz != matos::popcount(r)) return false;
    }
    if (w == 0) break;
  }
  return true;
}

// f-vector by direct face count.
inline matos::IntSequence f_vector_by_scan(const SimplicialComplex& c) {
  matos::IntSequence f(c.dim() + 2, 0);
  for (Mask s : faces_by_scan(c)) f[matos::popcount(s)] += 1;
  return f;
}

}  // namespace oracle
