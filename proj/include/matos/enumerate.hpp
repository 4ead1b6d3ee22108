#pragma once

// Exhaustive enumeration of loopless matroids on a small labeled ground set.
//
// Ranks 1..3 are generated structurally: a loopless matroid of rank <= 3 is a
// partition of the ground set into parallel classes together with a simple
// quotient, and a simple rank-3 matroid on m points is exactly a family of
// "lines" (subsets of size >= 3, pairwise meeting in at most one point, none
// containing every point). Ranks between 4 and n-1 fall back to backtracking
// over basis families with exchange-repair pruning, which is only feasible for
// n <= 6. The up-to-isomorphism mode emits one representative per isomorphism
// class via orderly generation: lines are added in increasing bitmask order
// and a partial family is extended only while it is the lexicographically
// least member of its orbit under the block permutations that preserve block
// sizes (every canonical family has a canonical prefix, so nothing is lost).

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matos/complexes.hpp"
#include "matos/subsets.hpp"

namespace matos {

namespace detail {

// Set partitions of {0..n-1} as restricted growth strings.
template <class F>
void rgs_rec(int n, int i, int used, std::vector<int>& a, F&& f) {
  if (i == n) {
    f(a, used);
    return;
  }
  for (int v = 0; v <= used; ++v) {
    a[i] = v;
    rgs_rec(n, i + 1, std::max(used, v + 1), a, f);
  }
}

template <class F>
void for_each_set_partition(int n, F&& f) {
  std::vector<int> a(n, 0);
  rgs_rec(n, 0, 0, a, f);
}

// Integer partitions of n with parts listed in non-increasing order.
template <class F>
void partitions_rec(int n, int max_part, std::vector<int>& parts, F&& f) {
  if (n == 0) {
    f(parts);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(n - p, p, parts, f);
    parts.pop_back();
  }
}

template <class F>
void for_each_integer_partition(int n, F&& f) {
  std::vector<int> parts;
  partitions_rec(n, n, parts, f);
}

inline int popcount8(uint8_t x) { return __builtin_popcount(x); }

// Rank-2 matroid with the given parallel classes: bases are the cross pairs.
inline SimplicialComplex rank2_from_blocks(int n, const std::vector<Mask>& blocks) {
  std::vector<Mask> facets;
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j)
      for (int a : elements_of(blocks[i]))
        for (int b : elements_of(blocks[j])) facets.push_back(bit(a) | bit(b));
  return from_facets(n, facets);
}

// Rank-3 matroid with the given parallel classes and lines on block indices:
// bases are triples of pairwise distinct, non-collinear blocks.
inline SimplicialComplex rank3_from_blocks(int n, const std::vector<Mask>& blocks,
                                           const std::vector<uint8_t>& lines) {
  int m = static_cast<int>(blocks.size());
  std::vector<Mask> facets;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        uint8_t triple = static_cast<uint8_t>((1u << i) | (1u << j) | (1u << k));
        bool collinear = false;
        for (uint8_t l : lines)
          if ((l & triple) == triple) {
            collinear = true;
            break;
          }
        if (collinear) continue;
        for (int a : elements_of(blocks[i]))
          for (int b : elements_of(blocks[j]))
            for (int c : elements_of(blocks[k])) facets.push_back(bit(a) | bit(b) | bit(c));
      }
  return from_facets(n, facets);
}

// All line families on m points: subsets of size 3..m-1 with pairwise
// intersections of at most one point, generated in increasing bitmask order.
template <class F>
void family_rec(const std::vector<uint8_t>& cands, size_t pos, std::vector<uint8_t>& fam, F&& f) {
  f(fam);
  for (size_t j = pos; j < cands.size(); ++j) {
    bool ok = true;
    for (uint8_t l : fam)
      if (popcount8(l & cands[j]) > 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    fam.push_back(cands[j]);
    family_rec(cands, j + 1, fam, f);
    fam.pop_back();
  }
}

inline std::vector<uint8_t> line_candidates(int m) {
  std::vector<uint8_t> cands;
  for (int mask = 0; mask < (1 << m); ++mask) {
    int pc = __builtin_popcount(static_cast<unsigned>(mask));
    if (pc >= 3 && pc <= m - 1) cands.push_back(static_cast<uint8_t>(mask));
  }
  return cands;
}

// Permutations of {0..m-1} preserving the part sizes, with a 256-entry
// bitmask-image table per permutation for fast line mapping.
struct BlockPerms {
  std::vector<std::array<uint8_t, 256>> maps;

  explicit BlockPerms(const std::vector<int>& sizes) {
    int m = static_cast<int>(sizes.size());
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    do {
      bool preserves = true;
      for (int i = 0; i < m && preserves; ++i) preserves = sizes[p[i]] == sizes[i];
      if (!preserves) continue;
      bool identity = true;
      for (int i = 0; i < m && identity; ++i) identity = p[i] == i;
      if (identity) continue;
      std::array<uint8_t, 256> tab{};
      for (int mask = 0; mask < (1 << m); ++mask) {
        uint8_t img = 0;
        for (int i = 0; i < m; ++i)
          if (mask & (1 << i)) img |= static_cast<uint8_t>(1u << p[i]);
        tab[mask] = img;
      }
      maps.push_back(tab);
    } while (std::next_permutation(p.begin(), p.end()));
  }
};

// Is the (ascending) family lexicographically least in its orbit?
inline bool family_is_canonical(const std::vector<uint8_t>& fam, const BlockPerms& perms) {
  if (fam.empty()) return true;
  std::vector<uint8_t> img(fam.size());
  for (const auto& tab : perms.maps) {
    // the sorted image starts with the minimum image; compare that first
    uint8_t mn = 255;
    bool smaller = false;
    for (uint8_t l : fam) {
      uint8_t v = tab[l];
      if (v < fam[0]) {
        smaller = true;
        break;
      }
      mn = std::min(mn, v);
    }
    if (smaller) return false;
    if (mn != fam[0]) continue;
    for (size_t i = 0; i < fam.size(); ++i) img[i] = tab[fam[i]];
    std::sort(img.begin(), img.end());
    if (std::lexicographical_compare(img.begin(), img.end(), fam.begin(), fam.end())) return false;
  }
  return true;
}

template <class F>
void family_rec_canonical(const std::vector<uint8_t>& cands, size_t pos, std::vector<uint8_t>& fam,
                          const BlockPerms& perms, F&& f) {
  f(fam);
  for (size_t j = pos; j < cands.size(); ++j) {
    bool ok = true;
    for (uint8_t l : fam)
      if (popcount8(l & cands[j]) > 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    fam.push_back(cands[j]);
    if (family_is_canonical(fam, perms)) family_rec_canonical(cands, j + 1, fam, perms, f);
    fam.pop_back();
  }
}

inline std::vector<Mask> blocks_from_rgs(int n, const std::vector<int>& a, int m) {
  std::vector<Mask> blocks(m, 0);
  for (int i = 0; i < n; ++i) blocks[a[i]] |= bit(i + 1);
  return blocks;
}

inline std::vector<Mask> blocks_from_sizes(const std::vector<int>& sizes) {
  std::vector<Mask> blocks;
  int next = 1;
  for (int s : sizes) {
    Mask b = 0;
    for (int i = 0; i < s; ++i) b |= bit(next++);
    blocks.push_back(b);
  }
  return blocks;
}

// Lexicographically least facet list over all ground-set permutations.
inline std::vector<Mask> canonical_facet_form(const SimplicialComplex& c) {
  std::vector<int> p(c.n);
  for (int i = 0; i < c.n; ++i) p[i] = i;
  std::vector<Mask> best = c.facets;
  std::vector<Mask> img(c.facets.size());
  do {
    for (size_t f = 0; f < c.facets.size(); ++f) {
      Mask v = 0;
      for (int e : elements_of(c.facets[f])) v |= bit(p[e - 1] + 1);
      img[f] = v;
    }
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Backtracking over families of r-subsets; yields every loopless matroid of
// rank r on {1..n} exactly once, candidates scanned in increasing mask order.
template <class F>
struct BasisBacktracker {
  int n, r;
  Mask full;
  std::vector<Mask> cands;
  std::vector<Mask> suffix_union;  // union of cands[pos..]
  std::vector<Mask> chosen;
  F& yield;

  BasisBacktracker(int n_, int r_, F& y) : n(n_), r(r_), full(full_mask(n_)), yield(y) {
    for_each_subset_of_size(full, r, [&](Mask b) { cands.push_back(b); });
    std::sort(cands.begin(), cands.end());
    suffix_union.assign(cands.size() + 1, 0);
    for (int i = static_cast<int>(cands.size()) - 1; i >= 0; --i)
      suffix_union[i] = suffix_union[i + 1] | cands[i];
  }

  // Can the exchange condition between A and B still be satisfied given the
  // chosen bases and the undecided candidates (those with mask > frontier)?
  bool repairable(Mask A, Mask B, Mask frontier) const {
    for (Mask diff = A & ~B; diff; diff &= diff - 1) {
      Mask x = diff & (~diff + 1);
      bool ok = false;
      for (Mask d2 = B & ~A; d2 && !ok; d2 &= d2 - 1) {
        Mask y = d2 & (~d2 + 1);
        Mask cand = (A & ~x) | y;
        // cand >= frontier: either the basis currently being added or an
        // undecided candidate further along the scan
        if (cand >= frontier) ok = true;
        else ok = std::binary_search(chosen.begin(), chosen.end(), cand);
      }
      if (!ok) return false;
    }
    return true;
  }

  void rec(size_t pos, Mask covered) {
    if ((covered | suffix_union[pos]) != full) return;
    if (pos == cands.size()) {
      if (chosen.empty()) return;
      SimplicialComplex c;
      c.n = n;
      c.facets = chosen;
      if (is_matroid(c)) yield(c);
      return;
    }
    Mask b = cands[pos];
    bool feasible = true;
    for (Mask a : chosen)
      if (!repairable(a, b, b) || !repairable(b, a, b)) {
        feasible = false;
        break;
      }
    if (feasible) {
      chosen.push_back(b);
      rec(pos + 1, covered | b);
      chosen.pop_back();
    }
    rec(pos + 1, covered);
  }
};

template <class F>
void backtrack_matroids(int n, int rank, F&& yield) {
  BasisBacktracker<F> bt(n, rank, yield);
  bt.rec(0, 0);
}

}  // namespace detail

/// Streams every loopless matroid of the given rank on the labeled ground set
/// {1..n} exactly once (or one representative per isomorphism class when
/// `up_to_iso` is set) to `yield`, in a fixed deterministic order.
template <class F>
void enumerate_matroids_stream(int n, int rank, F&& yield, bool up_to_iso = false, int cap = 8) {
  if (n < 1) throw std::invalid_argument("ground set must be nonempty");
  if (rank < 1 || rank > n) throw std::invalid_argument("rank must lie between 1 and n");
  if (n > cap)
    throw std::runtime_error("ground-set size " + std::to_string(n) +
                             " exceeds the enumeration cap " + std::to_string(cap) +
                             "; pass a larger cap explicitly to proceed");
  if (rank == n) {
    std::vector<Mask> f{full_mask(n)};
    yield(from_facets(n, f));
    return;
  }
  if (rank == 1) {
    std::vector<Mask> f;
    for (int v = 1; v <= n; ++v) f.push_back(bit(v));
    yield(from_facets(n, f));
    return;
  }
  if (rank == 2) {
    if (up_to_iso) {
      detail::for_each_integer_partition(n, [&](const std::vector<int>& sizes) {
        if (sizes.size() < 2) return;
        yield(detail::rank2_from_blocks(n, detail::blocks_from_sizes(sizes)));
      });
    } else {
      detail::for_each_set_partition(n, [&](const std::vector<int>& a, int m) {
        if (m < 2) return;
        yield(detail::rank2_from_blocks(n, detail::blocks_from_rgs(n, a, m)));
      });
    }
    return;
  }
  if (rank == 3) {
    if (up_to_iso) {
      detail::for_each_integer_partition(n, [&](const std::vector<int>& sizes) {
        int m = static_cast<int>(sizes.size());
        if (m < 3) return;
        auto blocks = detail::blocks_from_sizes(sizes);
        auto cands = detail::line_candidates(m);
        detail::BlockPerms perms(sizes);
        std::vector<uint8_t> fam;
        detail::family_rec_canonical(cands, 0, fam, perms, [&](const std::vector<uint8_t>& lines) {
          yield(detail::rank3_from_blocks(n, blocks, lines));
        });
      });
    } else {
      detail::for_each_set_partition(n, [&](const std::vector<int>& a, int m) {
        if (m < 3) return;
        auto blocks = detail::blocks_from_rgs(n, a, m);
        auto cands = detail::line_candidates(m);
        std::vector<uint8_t> fam;
        detail::family_rec(cands, 0, fam, [&](const std::vector<uint8_t>& lines) {
          yield(detail::rank3_from_blocks(n, blocks, lines));
        });
      });
    }
    return;
  }
  // 4 <= rank <= n-1: basis-family backtracking
  if (n > 6)
    throw std::runtime_error(
        "ranks between 4 and n-1 use basis-family backtracking, which is limited to n <= 6; "
        "restrict n or the rank range");
  auto emit = [&](const SimplicialComplex& c) {
    if (!up_to_iso) {
      yield(c);
      return;
    }
    if (detail::canonical_facet_form(c) == c.facets) yield(c);
  };
  detail::backtrack_matroids(n, rank, emit);
}

/// Collects the enumeration into a vector (convenient for small n).
inline std::vector<SimplicialComplex> enumerate_matroids(int n, int rank, bool up_to_iso = false,
                                                         int cap = 8) {
  std::vector<SimplicialComplex> out;
  enumerate_matroids_stream(
      n, rank, [&](const SimplicialComplex& c) { out.push_back(c); }, up_to_iso, cap);
  return out;
}

}  // namespace matos
