#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace matos {

// Subsets of a ground set {1..n}, n <= 64, live in one machine word.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int v) { return Mask{1} << (v - 1); }  // elements are 1-based

inline bool contains(Mask m, int v) { return (m >> (v - 1)) & 1; }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline int lowest_element(Mask m) { return std::countr_zero(m) + 1; }

inline int highest_element(Mask m) { return 64 - std::countl_zero(m); }

// Gosper's hack: next larger word with the same popcount.
inline Mask next_same_popcount(Mask c) {
  Mask u = c & (~c + 1);
  Mask v = c + u;
  return v + (((v ^ c) / u) >> 2);
}

// Visit all k-subsets of the set `universe`, in increasing bitmask order.
template <class F>
void for_each_subset_of_size(Mask universe, int k, F&& f) {
  int m = popcount(universe);
  if (k < 0 || k > m) return;
  std::vector<int> elems;
  elems.reserve(m);
  for (int v = 1; v <= 64 && bit(v) <= universe; ++v)
    if (contains(universe, v)) elems.push_back(v);
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask c = full_mask(k);  // compressed k-subset over positions 0..m-1
  Mask last = c << (m - k);
  for (;;) {
    Mask s = 0;
    Mask t = c;
    while (t) {
      int p = std::countr_zero(t);
      t &= t - 1;
      s |= bit(elems[p]);
    }
    f(s);
    if (c == last) break;
    c = next_same_popcount(c);
  }
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int p = std::countr_zero(m);
    m &= m - 1;
    out.push_back(p + 1);
  }
  return out;
}

}  // namespace matos
