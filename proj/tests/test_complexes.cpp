#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matos/complexes.hpp"
#include "oracles.hpp"

using namespace matos;

namespace {

SimplicialComplex triangle_boundary() { return from_facet_sets(3, {{1, 2}, {1, 3}, {2, 3}}); }

SimplicialComplex four_cycle() { return from_facet_sets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

SimplicialComplex full_simplex(int n) {
  return from_facets(n, {full_mask(n)});
}

// Smallest dimension-3 matroid that is neither a cone nor a complete
// intersection while every vertex deletion is a cone.
SimplicialComplex example_complex() {
  return from_circuits(6, {bit(1) | bit(2) | bit(5) | bit(6), bit(1) | bit(2) | bit(3) | bit(4),
                           bit(3) | bit(4) | bit(5) | bit(6)});
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> nfacets(1, 5);
  std::uniform_int_distribution<Mask> sub(1, full_mask(n));
  std::vector<Mask> fam;
  int k = nfacets(rng);
  for (int i = 0; i < k; ++i) fam.push_back(sub(rng));
  return from_facets(n, fam);
}

}  // namespace

TEST_CASE("from_facets basics") {
  auto t = triangle_boundary();
  CHECK(t.facets.size() == 3);
  CHECK(t.loops == 0);

  auto c = from_facet_sets(4, {{1, 2}, {2}, {3, 4}});
  CHECK(c.facets == std::vector<Mask>{bit(1) | bit(2), bit(3) | bit(4)});
  CHECK(c.loops == 0);

  auto d = from_facet_sets(5, {{1, 2}, {3, 4}});
  CHECK(d.loops == bit(5));

  CHECK_THROWS_WITH(from_facets(3, {}), doctest::Contains("empty complex family"));
  CHECK_THROWS(from_facet_sets(3, {{1, 4}}));
}

TEST_CASE("circuits against brute-force minimal non-face scan") {
  auto fc = four_cycle();
  CHECK(circuits(fc) == std::vector<Mask>{bit(1) | bit(3), bit(2) | bit(4)});
  CHECK(circuits(fc) == oracle::minimal_nonfaces_by_scan(fc));

  CHECK(circuits(full_simplex(3)).empty());

  auto ex = example_complex();
  auto circ = circuits(ex);
  std::vector<Mask> expect{bit(1) | bit(2) | bit(3) | bit(4), bit(1) | bit(2) | bit(5) | bit(6),
                           bit(3) | bit(4) | bit(5) | bit(6)};
  std::sort(expect.begin(), expect.end());
  CHECK(circ == expect);
  CHECK(from_circuits(6, circ) == ex);
}

TEST_CASE("from_circuits") {
  auto c = from_circuits(4, {bit(1) | bit(3), bit(2) | bit(4)});
  CHECK(c == four_cycle());
  CHECK(from_circuits(3, {}) == full_simplex(3));
  auto ex = example_complex();
  CHECK(ex.facets.size() == 12);
  for (Mask f : ex.facets) CHECK(popcount(f) == 4);
  CHECK_THROWS_WITH(from_circuits(3, {bit(1), bit(1) | bit(2)}), doctest::Contains("antichain"));
}

TEST_CASE("f_vector") {
  CHECK(f_vector(triangle_boundary()) == IntSequence{1, 3, 3});
  auto tetra = from_facet_sets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(f_vector(tetra) == IntSequence{1, 4, 6, 4});
  CHECK(f_vector(four_cycle()) == IntSequence{1, 4, 4});
}

TEST_CASE("h_vector") {
  CHECK(h_vector(triangle_boundary()) == IntSequence{1, 1, 1});
  CHECK(h_vector(four_cycle()) == IntSequence{1, 2, 1});
  CHECK(h_vector(example_complex()) == IntSequence{1, 2, 3, 4, 2});
  CHECK(h_vector(full_simplex(4)) == IntSequence{1, 0, 0, 0, 0});
  // empty complex {emptyset}
  auto empty = from_facets(2, {Mask{0}});
  CHECK(h_vector(empty) == IntSequence{1});
}

TEST_CASE("purity and matroid recognizers") {
  CHECK(is_pure(triangle_boundary()));
  CHECK_FALSE(is_pure(from_facet_sets(3, {{1, 2}, {3}})));
  CHECK(is_matroid(four_cycle()));
  // {{1,2},{2,3}} is the rank-2 matroid with 1 and 3 parallel
  CHECK(is_matroid(from_facet_sets(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_matroid(from_facet_sets(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(oracle::is_matroid_by_restriction_purity(from_facet_sets(4, {{1, 2}, {3, 4}})));
  CHECK(is_matroid(example_complex()));
  CHECK(circuit_exchange_holds(four_cycle()));
  CHECK_FALSE(circuit_exchange_holds(from_facet_sets(4, {{1, 2}, {3, 4}})));
  // disjoint circuits: vacuously fine
  CHECK(circuit_exchange_holds(from_circuits(4, {bit(1) | bit(2), bit(3) | bit(4)})));
}

TEST_CASE("deletion and link") {
  auto fc = four_cycle();
  auto d1 = deletion(fc, 1);
  CHECK(d1.facets == std::vector<Mask>{bit(2) | bit(3), bit(3) | bit(4)});
  CHECK(d1.loops == bit(1));

  auto l1 = link(fc, 1);
  CHECK(l1.facets == std::vector<Mask>{bit(2), bit(4)});
  CHECK(l1.loops == (bit(1) | bit(3)));

  auto simplex = full_simplex(4);
  auto ls = link(simplex, 2);
  CHECK(ls.facets == std::vector<Mask>{bit(1) | bit(3) | bit(4)});

  CHECK_THROWS_WITH(link(from_facet_sets(3, {{1, 2}}), 3), doctest::Contains("loop"));

  // cone with non-apex deletion stays a cone
  auto c = cone(four_cycle());
  CHECK(is_cone(deletion(c, 1)));
}

TEST_CASE("coloops and cones") {
  CHECK(coloops(cone(four_cycle())) == bit(5));
  CHECK(coloops(four_cycle()) == 0);
  CHECK(coloops(example_complex()) == 0);
}

TEST_CASE("skeleton") {
  auto tetra = from_facet_sets(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  auto k4 = skeleton(tetra, 1);
  CHECK(k4.facets.size() == 6);
  CHECK(k4.dim() == 1);
  CHECK(skeleton(tetra, tetra.dim()) == tetra);
  CHECK_THROWS(skeleton(tetra, 3));
  auto pts = skeleton(tetra, 0);
  CHECK(pts.facets.size() == 4);
  auto e = skeleton(tetra, -1);
  CHECK(e.facets == std::vector<Mask>{0});
}

TEST_CASE("series and parallel classes") {
  auto p = series_classes(four_cycle());
  CHECK(p.blocks == std::vector<Mask>{bit(1) | bit(3), bit(2) | bit(4)});
  // no circuits: one class holding every vertex
  CHECK(series_classes(full_simplex(3)).blocks == std::vector<Mask>{bit(1) | bit(2) | bit(3)});
  auto octa = from_circuits(6, {bit(1) | bit(2), bit(3) | bit(4), bit(5) | bit(6)});
  CHECK(series_classes(octa).blocks ==
        std::vector<Mask>{bit(1) | bit(2), bit(3) | bit(4), bit(5) | bit(6)});

  auto par = parallel_classes(from_circuits(3, {bit(1) | bit(2), bit(1) | bit(3), bit(2) | bit(3)}));
  CHECK(par.blocks == std::vector<Mask>{bit(1) | bit(2) | bit(3)});
  CHECK(parallel_classes(four_cycle()).blocks ==
        std::vector<Mask>{bit(1) | bit(3), bit(2) | bit(4)});
  // no degree-2 circuits: all singletons
  CHECK(parallel_classes(example_complex()).blocks.size() == 6);
}

TEST_CASE("complete intersections") {
  CHECK(is_complete_intersection(four_cycle()));
  CHECK(ci_degrees(four_cycle()) == IntSequence{2, 2});
  CHECK_FALSE(is_complete_intersection(example_complex()));
  CHECK_THROWS(ci_degrees(example_complex()));
  CHECK(is_complete_intersection(full_simplex(3)));
  CHECK(ci_degrees(full_simplex(3)).empty());
}

TEST_CASE("tutte_h") {
  CHECK(tutte_h(four_cycle()) == IntSequence{1, 2, 1});
  CHECK(tutte_h(full_simplex(4)) == IntSequence{1, 0, 0, 0, 0});
  CHECK(tutte_h(example_complex()) == IntSequence{1, 2, 3, 4, 2});
  CHECK_THROWS(tutte_h(from_facet_sets(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("join and cone") {
  auto c = cone(four_cycle());
  CHECK(coloops(c) == bit(5));
  CHECK(nonzero_part(h_vector(c)) == nonzero_part(h_vector(four_cycle())));

  auto j = join(triangle_boundary(), triangle_boundary());
  CHECK(is_complete_intersection(j));
  CHECK(ci_degrees(j) == IntSequence{3, 3});
  CHECK(h_vector(j) == IntSequence{1, 2, 3, 2, 1});
}

TEST_CASE("strip_loops") {
  auto l1 = link(four_cycle(), 1);
  auto s = strip_loops(l1);
  CHECK(s.n == 2);
  CHECK(s.facets == std::vector<Mask>{bit(1), bit(2)});
  CHECK(nonzero_part(h_vector(s)) == nonzero_part(h_vector(l1)));
}

TEST_CASE("randomized agreement with brute-force oracles, n <= 7") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto c = random_complex(rng, n);
    CAPTURE(n);
    CHECK(f_vector(c) == oracle::f_vector_by_scan(c));
    CHECK(circuits(c) == oracle::minimal_nonfaces_by_scan(c));
    bool m1 = is_matroid(c);
    bool m2 = oracle::is_matroid_by_restriction_purity(c);
    bool m3 = circuit_exchange_holds(c);
    CHECK(m1 == m2);
    CHECK(m1 == m3);
    // the two displayed f/h formulas are mutually inverse
    CHECK(f_from_h(h_vector(c)) == f_vector(c));
  }
}

TEST_CASE("skeleton consecutive-sum rule and commutation, randomized") {
  std::mt19937_64 rng(911);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto c = random_complex(rng, n);
    int d = c.dim();
    for (int j = 0; j < d; ++j) {
      auto hj = h_vector(skeleton(c, j));
      auto hj1 = h_vector(skeleton(c, j + 1));
      for (int i = 0; i <= 2 && i < static_cast<int>(hj.size()); ++i) {
        long long sum = 0;
        for (int k = 0; k <= i && k < static_cast<int>(hj1.size()); ++k) sum += hj1[k];
        CHECK(hj[i] == sum);
      }
    }
    Mask verts = c.vertex_mask();
    for (int v = 1; v <= n; ++v) {
      if (!contains(verts, v)) continue;
      for (int j = 0; j <= d; ++j) {
        CHECK(skeleton(deletion(c, v), std::min(j, deletion(c, v).dim())) ==
              deletion(skeleton(c, j), v));
        if (j >= 1 && is_face(c, bit(v))) {
          auto lk = link(c, v);
          if (lk.dim() >= j - 1) CHECK(skeleton(lk, j - 1) == link(skeleton(c, j), v));
        }
      }
    }
  }
}

TEST_CASE("matroid closure under deletion and link; shifted-sum identity") {
  std::vector<SimplicialComplex> ms{four_cycle(), triangle_boundary(), example_complex(),
                                    from_circuits(6, {bit(1) | bit(2), bit(3) | bit(4), bit(5) | bit(6)})};
  for (const auto& c : ms) {
    REQUIRE(is_matroid(c));
    auto h = h_vector(c);
    Mask verts = c.vertex_mask();
    Mask col = coloops(c);
    for (int v = 1; v <= c.n; ++v) {
      if (!contains(verts, v)) continue;
      auto del = deletion(c, v);
      auto lk = link(c, v);
      CHECK(is_matroid(del));
      CHECK(is_matroid(lk));
      if (contains(col, v)) continue;
      auto hd = h_vector(del);
      auto hl = h_vector(lk);
      for (size_t i = 0; i < h.size(); ++i) {
        long long expect = (i < hd.size() ? hd[i] : 0) + (i >= 1 && i - 1 < hl.size() ? hl[i - 1] : 0);
        CHECK(h[i] == expect);
      }
    }
    // basis count = sum of h entries
    long long sum = 0;
    for (long long x : h) sum += x;
    CHECK(sum == static_cast<long long>(c.facets.size()));
    // cone fact
    CHECK((h.back() != 0) == (coloops(c) == 0));
  }
}
