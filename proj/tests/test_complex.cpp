#include "doctest.h"

#include "coxcomb/complex.hpp"
#include "oracles.hpp"

using namespace coxcomb;

namespace {

std::vector<std::pair<Kind, int>> small_systems() {
  std::vector<std::pair<Kind, int>> v;
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
    for (int n = minimum_rank(k); n <= 4; ++n) v.emplace_back(k, n);
  return v;
}

}  // namespace

TEST_CASE("special vertices") {
  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(is_special(b2, b2.zero()));
  CHECK_FALSE(is_special(b2, b2.coweight(2) / Rational(2)));
  CHECK(is_special(b2, b2.coweight(1)));
  const auto v = special_vertex(b2, {2, -1});
  CHECK(v.position == Rational(2) * b2.coweight(1) - b2.coweight(2));
  CHECK(special_vertex_at(b2, v.position) == v);
  CHECK_THROWS_WITH_AS(special_vertex_at(b2, b2.coweight(2) / Rational(2)), doctest::Contains("not a special vertex"),
                       Error);
}

TEST_CASE("both specialness oracles agree on a half-integral box") {
  for (auto [k, n] : small_systems()) {
    CAPTURE(k);
    CAPTURE(n);
    const auto rs = build_root_system(k, n);
    const int r = n <= 2 ? 4 : (n == 3 ? 3 : 2);
    // Points with coweight coordinates in (1/2)Z, |c_i| <= r.
    for (const auto& p : oracle::lattice_box(n, 2 * r)) {
      std::vector<Rational> c;
      for (auto x : p) c.push_back(frac(static_cast<long>(x), 2));
      const RatVec v = from_coweight_coords(rs, c);
      CHECK(is_special(rs, v) == has_integral_coweight_coords(rs, v));
    }
  }
}

TEST_CASE("edge types") {
  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(edge_type(b2, b2.coweight(1)) == 1);
  CHECK(edge_type(b2, b2.coweight(2)) == 2);
  CHECK(edge_type(b2, -eps(b2, 1)) == 1);
  CHECK(edge_type(b2, b2.coweight(2) / Rational(2)) == 2);
  CHECK_THROWS_AS(edge_type(b2, Rational(3) * eps(b2, 1)), Error);
  const auto a3 = build_root_system(Kind::A, 3);
  for (const auto& u : orbit(a3, a3.coweight(1))) CHECK(edge_type(a3, u) == 1);
}

TEST_CASE("edge type is invariant under the Weyl group") {
  for (auto [k, n] : small_systems()) {
    const auto rs = build_root_system(k, n);
    const SpecialGraph g(rs);
    for (int i = 1; i <= n; ++i) {
      const auto s = simple_reflection(rs, i);
      for (const auto& st : g.steps()) {
        CHECK(edge_type(rs, s.apply(st.vec)) == st.etype);
        CHECK(edge_type(rs, st.vec) == st.etype);
      }
    }
  }
}

TEST_CASE("special graph degrees and symmetry") {
  CHECK(SpecialGraph(build_root_system(Kind::A, 2)).degree() == 6);
  CHECK(SpecialGraph(build_root_system(Kind::B, 2)).degree() == 8);
  for (auto [k, n] : small_systems()) {
    const auto rs = build_root_system(k, n);
    const SpecialGraph g(rs);
    std::size_t total = 0;
    for (int i = 1; i <= n; ++i) total += orbit(rs, rs.coweight(i)).size();
    CHECK(g.degree() == total);
    for (const auto& st : g.steps()) {
      CHECK(g.find_step(-st.delta).has_value());
      CHECK(is_special(rs, st.vec));
      CHECK(lattice_coords_of(rs, st.vec) == st.delta);
      // No special vertex strictly inside the segment.
      const int c = rs.mark(st.etype);
      for (int m = 1; m < c; ++m) CHECK_FALSE(is_special(rs, frac(m, c) * st.vec));
    }
  }
}

TEST_CASE("neighbors are translation invariant") {
  const auto b2 = build_root_system(Kind::B, 2);
  const auto base = neighbors(b2, special_vertex(b2, {0, 0}));
  const auto x = special_vertex(b2, {3, -2});
  const auto moved = neighbors(b2, x);
  REQUIRE(moved.size() == base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(moved[i].origin == x);
    CHECK(moved[i].step == base[i].step);
    CHECK(special_vertex_at(b2, x.position + moved[i].step).lattice_coords ==
          LatticePoint{3, -2} + lattice_coords_of(b2, base[i].step));
  }
}

TEST_CASE("integer reflections agree with the rational action") {
  for (auto [k, n] : small_systems()) {
    const auto rs = build_root_system(k, n);
    const SpecialGraph g(rs);
    for (const auto& p : oracle::lattice_box(n, 1))
      for (int i = 1; i <= n; ++i) {
        const RatVec img = reflect(rs, i, g.vertex(p).position);
        CHECK(g.vertex(g.reflect(i, p)).position == img);
      }
  }
}

TEST_CASE("graph distances") {
  const auto a2 = build_root_system(Kind::A, 2);
  const auto o = special_vertex(a2, {0, 0});
  CHECK(graph_distance(a2, o, o, 5) == 0);
  CHECK(graph_distance(a2, o, special_vertex(a2, {1, 1}), 5) == 2);
  CHECK_FALSE(graph_distance(a2, o, special_vertex(a2, {9, 0}), 4).has_value());
  for (Kind k : {Kind::A, Kind::B, Kind::C}) {
    const auto rs = build_root_system(k, 2);
    const SpecialGraph g(rs);
    // (., alpha~) / max_step (., alpha~) is a lower bound on the distance.
    Rational reach = 0;
    for (const auto& s : g.steps()) reach = std::max(reach, inner(s.vec, rs.highest_root));
    for (int m = 1; m <= 4; ++m) {
      const LatticePoint y{m, 0};
      const auto d = graph_distance(g, LatticePoint{0, 0}, y, 10);
      REQUIRE(d);
      CHECK(*d == m);
      CHECK(Rational(*d) * reach >= inner(g.vertex(y).position, rs.highest_root));
    }
  }
}

TEST_CASE("distance table matches direct search") {
  const auto c2 = build_root_system(Kind::C, 2);
  const SpecialGraph g(c2);
  const DistanceTable t(g, 4);
  for (const auto& p : t.points()) CHECK(t.distance(p) == graph_distance(g, LatticePoint{0, 0}, p, 4));
  for (std::size_t i = 1; i < t.points().size(); ++i)
    CHECK(*t.distance(t.points()[i - 1]) <= *t.distance(t.points()[i]));
  CHECK(t.points_within(0).size() == 1);
  CHECK(t.points_within(1).size() == 1 + g.degree());
}

TEST_CASE("standard alcove") {
  const auto a2 = build_root_system(Kind::A, 2);
  CHECK(standard_alcove(a2) == std::vector<RatVec>{a2.zero(), a2.coweight(1), a2.coweight(2)});
  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(standard_alcove(b2) == std::vector<RatVec>{b2.zero(), b2.coweight(1), b2.coweight(2) / Rational(2)});
  for (auto [k, n] : small_systems()) {
    const auto rs = build_root_system(k, n);
    for (const auto& v : standard_alcove(rs)) {
      CHECK(is_dominant(rs, v));
      CHECK(inner(v, rs.highest_root) <= 1);
    }
  }
}

TEST_CASE("fine skeleton vertices") {
  // In type A every vertex of the fine skeleton is special.
  for (int n = 1; n <= 4; ++n) {
    const auto rs = build_root_system(Kind::A, n);
    const auto group = enumerate_weyl_group(rs);
    const FineSkeleton f(rs, group);
    CHECK(f.scale() == 1);
    for (const auto& v : f.vertices_in_box(n <= 2 ? 3 : 1)) CHECK(is_special(rs, f.position(v)));
  }
  const auto b2 = build_root_system(Kind::B, 2);
  const auto group = enumerate_weyl_group(b2);
  const FineSkeleton f(b2, group);
  const LatticePoint half_omega2{0, 1};  // scale 2
  REQUIRE(f.scale() == 2);
  CHECK(f.is_vertex(half_omega2));
  CHECK(f.position(half_omega2) == b2.coweight(2) / Rational(2));
  CHECK_FALSE(is_special(b2, f.position(half_omega2)));
  CHECK(f.max_edge_norm2() == 1);
  // Degree of the origin: the vertices adjacent to 0 in (pi/2, pi/4, pi/4) triangles.
  CHECK(f.offsets(LatticePoint{0, 0}).size() == 8);
  CHECK(f.offsets(half_omega2).size() == 4);
}

TEST_CASE("hull box") {
  const auto a2 = build_root_system(Kind::A, 2);
  const auto o = special_vertex(a2, {0, 0});
  const auto y = special_vertex(a2, {1, 1});
  const auto box = hull_box(a2, o, y);
  CHECK(box.contains(a2.coweight(1)));
  CHECK(box.contains(a2.coweight(2)));
  CHECK(box.contains(o.position));
  CHECK(box.contains(y.position));
  CHECK(box.apex() == y.position);
  CHECK_FALSE(box.contains(-a2.coweight(1)));
  const auto degenerate = hull_box(a2, y, y);
  CHECK(degenerate.contains(y.position));
  CHECK_FALSE(degenerate.contains(o.position));
  CHECK_THROWS_AS(hull_box(a2, o, special_vertex(a2, {-1, 0}), identity_element(a2)), Error);
}

TEST_CASE("hull box equals the intersection of opposite sectors") {
  for (Kind k : {Kind::A, Kind::B, Kind::C}) {
    const auto rs = build_root_system(k, 2);
    const auto group = enumerate_weyl_group(rs);
    const FineSkeleton f(rs, group);
    const auto o = special_vertex(rs, {0, 0});
    for (const auto& yc : oracle::lattice_box(2, 2)) {
      const auto y = special_vertex(rs, yc);
      const auto witnesses = dominance_witnesses(rs, group, y.position);
      REQUIRE_FALSE(witnesses.empty());
      const auto& w = witnesses.front();
      const auto winv = w.inverse();
      const auto box = hull_box(rs, o, y);
      // Fine-lattice points of a bounding region, special or not.
      for (const auto& zs : oracle::lattice_box(2, 3 * static_cast<int>(f.scale()))) {
        const RatVec z = f.position(zs);
        const bool in_sectors = is_dominant(rs, winv.apply(z)) && is_dominant(rs, winv.apply(y.position - z));
        CHECK(box.contains(z) == in_sectors);
      }
      // Any valid witness gives the same point set.
      for (const auto& w2 : witnesses) {
        const auto box2 = hull_box(rs, o, y, w2);
        for (const auto& zs : oracle::lattice_box(2, 2 * static_cast<int>(f.scale())))
          CHECK(box2.contains(f.position(zs)) == box.contains(f.position(zs)));
      }
    }
  }
}
