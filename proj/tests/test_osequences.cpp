#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matos/osequences.hpp"

using namespace matos;

namespace {

// Constructive Macaulay oracle, independent of lex_segment_ideal: take the
// last h_i monomials of each degree in lex order and check divisibility
// closure directly.
bool is_O_sequence_by_lex_closure(const IntSequence& h) {
  if (h.empty() || h[0] != 1) return false;
  for (long long x : h)
    if (x < 0) return false;
  int r = h.size() > 1 ? static_cast<int>(h[1]) : 0;
  OrderIdeal X;
  X.r = r;
  X.monomials.insert(Monomial(r, 0));
  for (size_t i = 1; i < h.size(); ++i) {
    auto layer = monomials_of_degree(r, static_cast<int>(i));
    if (h[i] > static_cast<long long>(layer.size())) return false;
    for (long long k = 0; k < h[i]; ++k) X.monomials.insert(layer[layer.size() - 1 - k]);
  }
  return is_downward_closed(X);
}

// Exhaustive purity oracle for tiny parameters: try every subset of the
// top-degree layer as the maximal monomials.
bool is_pure_by_enumeration(const IntSequence& h) {
  if (h.empty() || h[0] != 1) return false;
  int e = static_cast<int>(h.size()) - 1;
  if (e == 0) return true;
  int r = static_cast<int>(h[1]);
  if (h[e] <= 0 || r <= 0) return false;
  auto layer = monomials_of_degree(r, e);
  int m = static_cast<int>(layer.size());
  for (unsigned long s = 1; s < (1ul << m); ++s) {
    if (__builtin_popcountl(s) != h[e]) continue;
    std::vector<Monomial> maxima;
    for (int j = 0; j < m; ++j)
      if ((s >> j) & 1) maxima.push_back(layer[j]);
    if (rank_vector(downward_closure(r, maxima)) == h) return true;
  }
  return false;
}

Monomial mono(std::vector<int> e) { return e; }

}  // namespace

TEST_CASE("downward_closure") {
  auto X = downward_closure(2, {mono({1, 1})});
  CHECK(X.monomials.size() == 4);
  CHECK(rank_vector(X) == IntSequence{1, 2, 1});
  CHECK(is_downward_closed(X));
  CHECK(is_pure_ideal(X));

  // the init >= 3 construction at r = 3
  auto Y = downward_closure(3, {mono({0, 0, 3}), mono({2, 0, 1}), mono({1, 1, 1}), mono({0, 2, 1})});
  CHECK(rank_vector(Y) == IntSequence{1, 3, 6, 4});

  auto Z = downward_closure(1, {mono({4})});
  CHECK(rank_vector(Z) == IntSequence{1, 1, 1, 1, 1});
}

TEST_CASE("rank_vector") {
  auto chain = downward_closure(1, {mono({2})});
  CHECK(rank_vector(chain) == IntSequence{1, 1, 1});
  std::vector<Monomial> deg2 = monomials_of_degree(3, 2);
  auto full = downward_closure(3, deg2);
  CHECK(rank_vector(full) == IntSequence{1, 3, 6});
}

TEST_CASE("macaulay_next_bound") {
  CHECK(macaulay_next_bound(2, 1) == 3);
  CHECK(macaulay_next_bound(6, 2) == 10);
  CHECK(macaulay_next_bound(0, 1) == 0);
  CHECK(macaulay_next_bound(0, 7) == 0);
  CHECK(macaulay_next_bound(2, 2) == 2);
  CHECK(macaulay_next_bound(9, 2) == 16);
}

TEST_CASE("is_O_sequence") {
  CHECK(is_O_sequence({1, 3, 6, 10}));
  CHECK_FALSE(is_O_sequence({1, 2, 4}));
  CHECK(is_O_sequence({1, 7, 9, 12}));
  CHECK_FALSE(is_O_sequence({2, 1}));
  CHECK_FALSE(is_O_sequence({1, 2, -1}));
  CHECK(is_O_sequence({1}));
}

TEST_CASE("lex_segment_ideal") {
  auto X = lex_segment_ideal({1, 2, 2});
  std::set<Monomial> expect{mono({0, 0}), mono({1, 0}), mono({0, 1}), mono({0, 2}), mono({1, 1})};
  CHECK(X.monomials == expect);
  CHECK(rank_vector(X) == IntSequence{1, 2, 2});

  auto chain = lex_segment_ideal({1, 1, 1});
  CHECK(rank_vector(chain) == IntSequence{1, 1, 1});
  CHECK(is_downward_closed(chain));

  auto full = lex_segment_ideal({1, 3, 6});
  CHECK(full.monomials.size() == 10);

  CHECK_THROWS(lex_segment_ideal({1, 2, 4}));
}

TEST_CASE("macaulay test vs lex-closure oracle, small sweep") {
  for (int h1 = 0; h1 <= 3; ++h1)
    for (int h2 = 0; h2 <= 12; ++h2)
      for (int h3 = 0; h3 <= 12; ++h3) {
        IntSequence h{1, h1, h2, h3};
        CAPTURE(h1);
        CAPTURE(h2);
        CAPTURE(h3);
        CHECK(is_O_sequence(h) == is_O_sequence_by_lex_closure(h));
      }
}

TEST_CASE("first difference and differentiability") {
  CHECK(first_difference({1, 7, 9, 12}) == IntSequence{1, 6, 2, 3});
  CHECK_FALSE(is_differentiable({1, 7, 9, 12}));
  CHECK(is_differentiable({1, 3, 6, 10}));
  CHECK(first_difference({1, 1}) == IntSequence{1, 0});
  CHECK(is_differentiable({1, 1}));
  CHECK_FALSE(is_differentiable({1, 2, 1}));  // negative difference
}

TEST_CASE("flawless") {
  CHECK_FALSE(is_flawless({1, 4, 2, 4}));
  CHECK(is_flawless({1, 2, 3, 2}));
  CHECK(is_flawless({1}));
}

TEST_CASE("shifted_sum") {
  CHECK(shifted_sum({1, 6, 6, 6}, {1, 3, 6}) == IntSequence{1, 7, 9, 12});
  CHECK(shifted_sum({1, 1, 1}, {1, 1}) == IntSequence{1, 2, 2});
  CHECK_THROWS(shifted_sum({1, 1, 1}, {1, 1, 1}));
}

TEST_CASE("is_pure_O_sequence basics") {
  auto p = is_pure_O_sequence({1, 3, 6});
  CHECK(p.outcome == Purity::pure);
  REQUIRE(p.witness.has_value());
  CHECK(rank_vector(*p.witness) == IntSequence{1, 3, 6});

  CHECK(is_pure_O_sequence({1, 7, 9, 12}).outcome == Purity::not_pure);
  CHECK(is_pure_O_sequence({1, 3, 1}).outcome == Purity::not_pure);
  CHECK(is_pure_O_sequence({1, 6, 6, 6}).outcome == Purity::pure);
  CHECK(is_pure_O_sequence({1}).outcome == Purity::pure);
  CHECK(is_pure_O_sequence({1, 2, 0}).outcome == Purity::not_pure);
  CHECK(is_pure_O_sequence({1, 3, 6, 4}).outcome == Purity::pure);
}

TEST_CASE("pure_witness_search") {
  auto s = pure_witness_search({1, 2, 1});
  REQUIRE(s.status == SearchOutcome::Status::found);
  auto mx = maximal_monomials(*s.witness);
  REQUIRE(mx.size() == 1);
  CHECK(mx[0] == mono({1, 1}));

  CHECK(pure_witness_search({1, 3, 6, 4}).status == SearchOutcome::Status::found);
  auto big = pure_witness_search({1, 6, 6, 6});
  REQUIRE(big.status == SearchOutcome::Status::found);
  CHECK(rank_vector(*big.witness) == IntSequence{1, 6, 6, 6});
  CHECK(pure_witness_search({1, 7, 9, 12}).status == SearchOutcome::Status::exhausted);
}

TEST_CASE("purity vs exhaustive enumeration, tiny range") {
  for (int r = 1; r <= 3; ++r)
    for (int e = 1; e <= 3; ++e) {
      long long top = binomial(r + e - 1, e);
      std::vector<IntSequence> grid;
      if (e == 1) grid.push_back({1, r});
      else if (e == 2) {
        for (long long a = 0; a <= top; ++a) grid.push_back({1, r, a});
      } else {
        for (long long a = 0; a <= binomial(r + 1, 2); ++a)
          for (long long b = 0; b <= top; ++b) grid.push_back({1, r, a, b});
      }
      for (const auto& h : grid) {
        auto v = is_pure_O_sequence(h);
        REQUIRE(v.outcome != Purity::undecided);
        CAPTURE(sequence_to_string(h));
        CHECK((v.outcome == Purity::pure) == is_pure_by_enumeration(h));
        if (v.witness) {
          CHECK(is_downward_closed(*v.witness));
          CHECK(is_pure_ideal(*v.witness));
          CHECK(rank_vector(*v.witness) == h);
        }
      }
    }
}

TEST_CASE("Hausel-Hibi and differentiable=>pure, small sweep") {
  for (int r = 1; r <= 3; ++r)
    for (long long a = 0; a <= binomial(r + 1, 2); ++a)
      for (long long b = 0; b <= binomial(r + 2, 3); ++b) {
        IntSequence h{1, r, a, b};
        auto v = is_pure_O_sequence(h);
        if (v.outcome == Purity::pure) {
          CHECK(is_flawless(h));
          IntSequence first_half{1, h[1], h[2]};
          CHECK(is_differentiable(first_half));
        }
        if (is_differentiable(h)) CHECK(v.outcome == Purity::pure);
      }
}

TEST_CASE("shifted-sum O-sequence lemma, small sweep") {
  for (long long h1 = 1; h1 <= 3; ++h1)
    for (long long h2 = 0; h2 <= 6; ++h2)
      for (long long h3 = 0; h3 <= 8; ++h3) {
        IntSequence h{1, h1, h2, h3};
        if (!is_O_sequence(h)) continue;
        for (long long g1 = 1; g1 <= h1; ++g1)
          for (long long g2 = 0; g2 <= h2; ++g2) {
            IntSequence g{1, g1, g2};
            if (!is_O_sequence(g)) continue;
            CHECK(is_O_sequence(shifted_sum(h, g)));
          }
      }
}

TEST_CASE("icp_interval_test") {
  auto v = icp_interval_test({1, 3, 3, 1}, {1, 3, 3, 3}, 3);
  CHECK(v.passed());
  auto deg = icp_interval_test({1, 2, 1}, {1, 2, 1}, 2);
  CHECK(deg.passed());
  CHECK_THROWS(icp_interval_test({1, 3, 3, 1}, {1, 3, 4, 3}, 3));
  CHECK_THROWS(icp_interval_test({1, 7, 9, 12}, {1, 7, 9, 14}, 3));
}
