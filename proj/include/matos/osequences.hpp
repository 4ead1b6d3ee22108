#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "complexes.hpp"  // IntSequence

namespace matos {

// Exponent vector over y_1..y_r.
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Finite monomial set closed under divisibility.
struct OrderIdeal {
  int r = 0;
  std::set<Monomial> monomials;  // deterministic order

  bool contains(const Monomial& m) const { return monomials.count(m) > 0; }
};

inline bool is_downward_closed(const OrderIdeal& X) {
  if (!X.contains(Monomial(X.r, 0))) return false;
  for (const auto& m : X.monomials)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) {
        Monomial q = m;
        q[i] -= 1;
        if (!X.contains(q)) return false;
      }
  return true;
}

inline std::vector<Monomial> maximal_monomials(const OrderIdeal& X) {
  std::vector<Monomial> out;
  for (const auto& m : X.monomials) {
    bool maximal = true;
    for (size_t i = 0; i < m.size() && maximal; ++i) {
      Monomial q = m;
      q[i] += 1;
      if (X.contains(q)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

inline bool is_pure_ideal(const OrderIdeal& X) {
  auto mx = maximal_monomials(X);
  for (const auto& m : mx)
    if (degree(m) != degree(mx.front())) return false;
  return true;
}

inline OrderIdeal downward_closure(int r, const std::vector<Monomial>& maxima) {
  if (maxima.empty()) throw std::invalid_argument("downward_closure: empty generating set");
  OrderIdeal X;
  X.r = r;
  std::vector<Monomial> frontier;
  for (const auto& m : maxima) {
    if (static_cast<int>(m.size()) != r) throw std::invalid_argument("variable count mismatch");
    if (X.monomials.insert(m).second) frontier.push_back(m);
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (int i = 0; i < r; ++i)
        if (m[i] > 0) {
          Monomial q = m;
          q[i] -= 1;
          if (X.monomials.insert(q).second) next.push_back(q);
        }
    frontier = std::move(next);
  }
  return X;
}

inline IntSequence rank_vector(const OrderIdeal& X) {
  int e = 0;
  for (const auto& m : X.monomials) e = std::max(e, degree(m));
  IntSequence h(e + 1, 0);
  for (const auto& m : X.monomials) h[degree(m)] += 1;
  return h;
}

/// All monomials of the given degree in r variables, lexicographically
/// descending (y_1 > y_2 > ... > y_r).
inline std::vector<Monomial> monomials_of_degree(int r, int d) {
  std::vector<Monomial> out;
  if (r == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Monomial cur(r, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r - 1) {
      cur[i] = left;
      out.push_back(cur);
      cur[i] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, d);
  return out;
}

/// value^<i>: the Macaulay bound on the next entry of an O-sequence.
inline long long macaulay_next_bound(long long value, int i) {
  if (value <= 0) return 0;
  long long bound = 0;
  long long rem = value;
  int j = i;
  while (rem > 0 && j >= 1) {
    long long a = j;
    while (binomial(a + 1, j) <= rem) ++a;
    rem -= binomial(a, j);
    bound += binomial(a + 1, j + 1);
    --j;
  }
  return bound;
}

inline bool is_O_sequence(const IntSequence& h) {
  if (h.empty() || h[0] != 1) return false;
  for (long long x : h)
    if (x < 0) return false;
  for (size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i + 1] > macaulay_next_bound(h[i], static_cast<int>(i))) return false;
  return true;
}

/// Per degree i, the last h_i monomials in the lexicographic order on
/// y_1..y_{h_1}. Macaulay's theorem makes this an order ideal exactly when
/// h is an O-sequence.
inline OrderIdeal lex_segment_ideal(const IntSequence& h) {
  if (!is_O_sequence(h)) throw std::invalid_argument("lex_segment_ideal: not an O-sequence");
  int r = static_cast<int>(h.size() > 1 ? h[1] : 0);
  OrderIdeal X;
  X.r = r;
  X.monomials.insert(Monomial(r, 0));
  for (size_t i = 1; i < h.size(); ++i) {
    auto layer = monomials_of_degree(r, static_cast<int>(i));  // lex descending
    for (long long k = 0; k < h[i]; ++k) X.monomials.insert(layer[layer.size() - 1 - k]);
  }
  return X;
}

inline IntSequence first_difference(const IntSequence& h) {
  IntSequence d(h.size(), 0);
  if (h.empty()) return d;
  d[0] = 1;
  for (size_t i = 1; i < h.size(); ++i) d[i] = h[i] - h[i - 1];
  return d;
}

inline bool is_differentiable(const IntSequence& h) { return is_O_sequence(first_difference(h)); }

/// h_i <= h_{e-i} for all i <= e/2.
inline bool is_flawless(const IntSequence& h) {
  int e = static_cast<int>(h.size()) - 1;
  for (int i = 0; 2 * i <= e; ++i)
    if (h[i] > h[e - i]) return false;
  return true;
}

inline IntSequence shifted_sum(const IntSequence& h, const IntSequence& h2) {
  if (h2.size() + 1 != h.size())
    throw std::invalid_argument("shifted_sum: socle degree of h' must be e-1");
  IntSequence out(h.size(), 0);
  for (size_t i = 0; i < h.size(); ++i) out[i] = h[i] + (i >= 1 ? h2[i - 1] : 0);
  return out;
}

// ---------------------------------------------------------------------------
// Pure O-sequence decision machinery.

enum class Purity { pure, not_pure, undecided };

struct PurityVerdict {
  Purity outcome = Purity::undecided;
  std::string decided_by;
  std::optional<OrderIdeal> witness;  // present when pure and a witness was built
};

struct SearchOutcome {
  enum class Status { found, exhausted, cap };
  Status status = Status::cap;
  std::optional<OrderIdeal> witness;
  long long nodes = 0;
};

inline constexpr long long kDefaultSearchCap = 200'000'000;

namespace detail {

// Witness search organized degree by degree: a pure order ideal with rank
// vector h is exactly a chain of layers L_1,...,L_e with |L_d| = h_d,
// every degree-(d-1) divisor of L_d inside L_{d-1}, and every member of
// L_{d-1} dividing some member of L_d. The last layer reduces to a
// set-cover feasibility question instead of another subset enumeration.
struct WitnessSearch {
  int r, e;
  IntSequence target;
  std::vector<std::vector<Monomial>> layers;            // degree 0..e
  std::vector<std::vector<std::vector<int>>> divisors;  // [deg][idx] -> degree-(deg-1) indices
  std::vector<std::vector<int>> chosen_layers;          // L_1..L_{e}
  long long nodes = 0, cap = 0;
  bool capped = false;
  bool found = false;

  WitnessSearch(const IntSequence& h, long long cap_) : target(h), cap(cap_) {
    e = static_cast<int>(h.size()) - 1;
    r = static_cast<int>(h[1]);
    layers.resize(e + 1);
    divisors.resize(e + 1);
    for (int d = 0; d <= e; ++d) layers[d] = monomials_of_degree(r, d);
    for (int d = 1; d <= e; ++d) {
      divisors[d].resize(layers[d].size());
      std::map<Monomial, int> index;
      for (size_t k = 0; k < layers[d - 1].size(); ++k) index[layers[d - 1][k]] = static_cast<int>(k);
      for (size_t k = 0; k < layers[d].size(); ++k)
        for (int i = 0; i < r; ++i)
          if (layers[d][k][i] > 0) {
            Monomial q = layers[d][k];
            q[i] -= 1;
            int idx = index[q];
            auto& lst = divisors[d][k];
            if (std::find(lst.begin(), lst.end(), idx) == lst.end()) lst.push_back(idx);
          }
    }
    chosen_layers.assign(e + 1, {});
  }

  bool tick() {
    if (++nodes > cap) capped = true;
    return capped;
  }

  // Is there a subset of `sets` of size <= budget covering all of `universe`?
  // Branches on the least-covered element; `sets` are index lists into the
  // previous layer, `universe` a sorted list of previous-layer indices.
  // On success `chosen` holds the indices of the selected sets.
  bool coverable(const std::vector<int>& universe, const std::vector<std::vector<int>*>& sets,
                 long long budget, std::vector<size_t>& chosen) {
    if (budget < 0) return false;
    std::vector<char> covered(layers[e - 1].size(), 0);
    return cover_rec(universe, sets, std::vector<char>(sets.size(), 0), covered, budget, chosen);
  }

  bool cover_rec(const std::vector<int>& universe, const std::vector<std::vector<int>*>& sets,
                 std::vector<char> used, std::vector<char>& covered, long long budget,
                 std::vector<size_t>& chosen) {
    if (tick()) return true;  // treated as "maybe"; cap flag checked by caller
    int pick = -1;
    size_t pick_options = ~size_t{0};
    for (int u : universe) {
      if (covered[u]) continue;
      size_t options = 0;
      for (size_t s = 0; s < sets.size(); ++s) {
        if (used[s]) continue;
        if (std::find(sets[s]->begin(), sets[s]->end(), u) != sets[s]->end()) ++options;
      }
      if (options == 0) return false;
      if (options < pick_options) {
        pick_options = options;
        pick = u;
      }
    }
    if (pick == -1) return true;  // everything covered
    if (budget == 0) return false;
    for (size_t s = 0; s < sets.size(); ++s) {
      if (used[s]) continue;
      if (std::find(sets[s]->begin(), sets[s]->end(), pick) == sets[s]->end()) continue;
      std::vector<int> newly;
      for (int u : *sets[s])
        if (!covered[u]) {
          covered[u] = 1;
          newly.push_back(u);
        }
      used[s] = 1;
      chosen.push_back(s);
      bool ok = cover_rec(universe, sets, used, covered, budget - 1, chosen);
      if (ok || capped) return ok;
      chosen.pop_back();
      for (int u : newly) covered[u] = 0;
    }
    return false;
  }

  // Extend a partial layer L_d, then recurse into degree d+1.
  bool layer_rec(int d, const std::vector<int>& allowed, size_t pos, std::vector<int>& picked,
                 std::vector<int>& cover_count /* per prev-layer index */,
                 const std::vector<int>& prev) {
    if (tick()) return false;
    long long remaining = target[d] - static_cast<long long>(picked.size());
    long long uncovered = 0;
    for (int u : prev)
      if (cover_count[u] == 0) ++uncovered;
    if (remaining == 0) {
      if (uncovered > 0) return false;
      chosen_layers[d] = picked;
      return descend(d + 1, picked);
    }
    if (static_cast<long long>(allowed.size() - pos) < remaining) return false;
    if (uncovered > remaining * d) return false;  // each pick covers at most d divisors
    // include allowed[pos]
    int k = allowed[pos];
    picked.push_back(k);
    for (int u : divisors[d][k]) cover_count[u] += 1;
    if (layer_rec(d, allowed, pos + 1, picked, cover_count, prev)) return true;
    picked.pop_back();
    for (int u : divisors[d][k]) cover_count[u] -= 1;
    if (capped) return false;
    // exclude allowed[pos]
    return layer_rec(d, allowed, pos + 1, picked, cover_count, prev);
  }

  bool descend(int d, const std::vector<int>& prev) {
    if (tick()) return false;
    std::vector<char> in_prev(layers[d - 1].size(), 0);
    for (int u : prev) in_prev[u] = 1;
    std::vector<int> allowed;
    for (size_t k = 0; k < layers[d].size(); ++k) {
      bool ok = true;
      for (int u : divisors[d][k])
        if (!in_prev[u]) {
          ok = false;
          break;
        }
      if (ok) allowed.push_back(static_cast<int>(k));
    }
    if (static_cast<long long>(allowed.size()) < target[d]) return false;
    if (d == e) {
      std::vector<std::vector<int>*> sets;
      for (int k : allowed) sets.push_back(&divisors[d][k]);
      std::vector<size_t> cover;
      bool ok = coverable(prev, sets, target[d], cover);
      if (capped) return false;
      if (!ok) return false;
      // materialize: the recorded cover, padded with unused allowed monomials
      std::vector<char> used(allowed.size(), 0);
      std::vector<int> out;
      for (size_t s : cover) {
        used[s] = 1;
        out.push_back(allowed[s]);
      }
      for (size_t s = 0; s < allowed.size() && static_cast<long long>(out.size()) < target[d]; ++s)
        if (!used[s]) out.push_back(allowed[s]);
      std::sort(out.begin(), out.end());
      chosen_layers[d] = out;
      found = true;
      return true;
    }
    std::vector<int> picked;
    std::vector<int> cover_count(layers[d - 1].size(), 0);
    return layer_rec(d, allowed, 0, picked, cover_count, prev);
  }

  SearchOutcome run() {
    SearchOutcome out;
    std::vector<int> vars(layers[1].size());
    for (size_t k = 0; k < vars.size(); ++k) vars[k] = static_cast<int>(k);
    bool ok = false;
    if (e == 1) {
      chosen_layers[1] = vars;
      found = ok = true;
    } else {
      ok = descend(2, vars);
    }
    out.nodes = nodes;
    if (capped) {
      out.status = SearchOutcome::Status::cap;
    } else if (ok && found) {
      out.status = SearchOutcome::Status::found;
      std::vector<Monomial> maxima;
      for (int k : chosen_layers[e]) maxima.push_back(layers[e][k]);
      out.witness = downward_closure(r, maxima);
    } else {
      out.status = SearchOutcome::Status::exhausted;
    }
    return out;
  }
};

}  // namespace detail

/// Exhaustive search for a pure order ideal with rank vector h, over
/// maximal-monomial sets of degree e in r = h_1 variables.
inline SearchOutcome pure_witness_search(const IntSequence& h, long long cap = kDefaultSearchCap) {
  SearchOutcome out;
  if (h.empty() || h[0] != 1) {
    out.status = SearchOutcome::Status::exhausted;
    return out;
  }
  int e = static_cast<int>(h.size()) - 1;
  if (e == 0) {
    out.status = SearchOutcome::Status::found;
    out.witness = OrderIdeal{0, {Monomial{}}};
    return out;
  }
  for (long long x : h)
    if (x < 0) {
      out.status = SearchOutcome::Status::exhausted;
      return out;
    }
  if (h[e] == 0 || h[1] == 0) {
    out.status = SearchOutcome::Status::exhausted;
    return out;
  }
  int r = static_cast<int>(h[1]);
  for (int d = 1; d <= e; ++d)
    if (h[d] > binomial(r + d - 1, d)) {
      out.status = SearchOutcome::Status::exhausted;
      return out;
    }
  detail::WitnessSearch search(h, cap);
  out = search.run();
  // h_1 must be exactly r: every variable appears, because the closure of
  // degree-e monomials in r used variables has degree-1 layer = used vars.
  if (out.status == SearchOutcome::Status::found) {
    IntSequence rv = rank_vector(*out.witness);
    if (rv != h) out.status = SearchOutcome::Status::exhausted;  // unreachable; guarded by dfs
  }
  return out;
}

namespace detail {

inline bool nondecreasing(const IntSequence& h) {
  for (size_t i = 0; i + 1 < h.size(); ++i)
    if (h[i] > h[i + 1]) return false;
  return true;
}

}  // namespace detail

/// Layered pure-O-sequence decision: necessary filters, then the closed
/// forms valid in small socle degree, then exhaustive witness search.
/// Never conflates "not pure" with "undecided".
inline PurityVerdict is_pure_O_sequence(const IntSequence& h, long long cap = kDefaultSearchCap) {
  PurityVerdict v;
  auto decide_pure = [&](const std::string& layer) {
    v.outcome = Purity::pure;
    v.decided_by = layer;
    auto s = pure_witness_search(h, cap);
    if (s.status == SearchOutcome::Status::found) v.witness = s.witness;
  };
  if (!is_O_sequence(h)) {
    v.outcome = Purity::not_pure;
    v.decided_by = "o_sequence_filter";
    return v;
  }
  int e = static_cast<int>(h.size()) - 1;
  if (e == 0) {
    v.outcome = Purity::pure;
    v.decided_by = "closed_form_trivial";
    v.witness = OrderIdeal{0, {Monomial{}}};
    return v;
  }
  if (h[e] == 0) {
    v.outcome = Purity::not_pure;
    v.decided_by = "trailing_zero";
    return v;
  }
  if (!is_flawless(h)) {
    v.outcome = Purity::not_pure;
    v.decided_by = "flawless_filter";
    return v;
  }
  IntSequence first_half(h.begin(), h.begin() + (e + 1) / 2 + 1);
  if (!is_differentiable(first_half)) {
    v.outcome = Purity::not_pure;
    v.decided_by = "first_half_filter";
    return v;
  }
  long long r = h[1];
  if (e == 1) {
    decide_pure("closed_form_e1");
    return v;
  }
  if (e == 2) {
    bool pure = (r + 1) / 2 <= h[2] && h[2] <= binomial(r + 1, 2);
    if (pure) decide_pure("closed_form_e2");
    else {
      v.outcome = Purity::not_pure;
      v.decided_by = "closed_form_e2";
    }
    return v;
  }
  if (e == 3 && h[2] == r) {
    bool pure = (r + 2) / 3 <= h[3] && h[3] <= r;
    if (pure) decide_pure("closed_form_rrt");
    else {
      v.outcome = Purity::not_pure;
      v.decided_by = "closed_form_rrt";
    }
    return v;
  }
  if (is_differentiable(h)) {
    decide_pure("differentiable");
    return v;
  }
  if (e == 3 && detail::nondecreasing(h)) {
    // socle degree 3 nondecreasing pure O-sequences are differentiable
    v.outcome = Purity::not_pure;
    v.decided_by = "nondecreasing_not_differentiable";
    return v;
  }
  auto s = pure_witness_search(h, cap);
  switch (s.status) {
    case SearchOutcome::Status::found:
      v.outcome = Purity::pure;
      v.decided_by = "search";
      v.witness = s.witness;
      break;
    case SearchOutcome::Status::exhausted:
      v.outcome = Purity::not_pure;
      v.decided_by = "search";
      break;
    case SearchOutcome::Status::cap:
      v.outcome = Purity::undecided;
      v.decided_by = "cap";
      break;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Verdicts shared with the conjecture harness.

struct Verdict {
  enum class Outcome { pass, fail, undecided };
  Outcome outcome = Outcome::pass;
  std::string method;
  std::string counterexample;  // nonempty iff outcome == fail

  bool passed() const { return outcome == Outcome::pass; }
};

inline std::string sequence_to_string(const IntSequence& h) {
  std::string s = "(";
  for (size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + ")";
}

/// ICP instance test: every sequence strictly between low and high at
/// coordinate i must be pure when both endpoints are.
inline Verdict icp_interval_test(const IntSequence& low, const IntSequence& high, size_t i,
                                 long long cap = kDefaultSearchCap) {
  if (low.size() != high.size() || i >= low.size())
    throw std::invalid_argument("icp_interval_test: shape mismatch");
  for (size_t k = 0; k < low.size(); ++k)
    if (k != i && low[k] != high[k])
      throw std::invalid_argument("icp_interval_test: endpoints differ off coordinate i");
  if (low[i] > high[i]) throw std::invalid_argument("icp_interval_test: low_i > high_i");
  if (is_pure_O_sequence(low, cap).outcome != Purity::pure ||
      is_pure_O_sequence(high, cap).outcome != Purity::pure)
    throw std::invalid_argument("icp_interval_test: endpoints must be pure");
  Verdict v;
  v.method = "interval_scan";
  for (long long beta = low[i] + 1; beta < high[i]; ++beta) {
    IntSequence mid = low;
    mid[i] = beta;
    auto p = is_pure_O_sequence(mid, cap);
    if (p.outcome == Purity::not_pure) {
      v.outcome = Verdict::Outcome::fail;
      v.counterexample = sequence_to_string(mid);
      return v;
    }
    if (p.outcome == Purity::undecided) v.outcome = Verdict::Outcome::undecided;
  }
  return v;
}

}  // namespace matos
