#include "doctest.h"

#include "coxcomb/weyl.hpp"
#include "oracles.hpp"

using namespace coxcomb;

TEST_CASE("simple reflections act as permutations and sign changes") {
  const auto a2 = build_root_system(Kind::A, 2);
  const auto s1 = simple_reflection(a2, 1);
  CHECK(s1.apply(a2.simple_root(1)) == -a2.simple_root(1));
  CHECK(s1.apply(eps(a2, 0)) == eps(a2, 1));
  CHECK(reflect(a2, 1, eps(a2, 0)) == eps(a2, 1));
  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(simple_reflection(b2, 2).apply(eps(b2, 2)) == -eps(b2, 2));
  CHECK_THROWS_AS(simple_reflection(b2, 3), Error);
  CHECK_THROWS_AS(simple_reflection(b2, 0), Error);
}

TEST_CASE("group orders match the closed forms") {
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
    for (int n = minimum_rank(k); n <= 4; ++n) {
      CAPTURE(kind_letter(k));
      CAPTURE(n);
      const auto rs = build_root_system(k, n);
      CHECK(static_cast<std::int64_t>(enumerate_weyl_group(rs).size()) == oracle::weyl_order(k, n));
    }
  CHECK(enumerate_weyl_group(build_root_system(Kind::A, 2)).size() == 6);
  CHECK(enumerate_weyl_group(build_root_system(Kind::B, 3)).size() == 48);
  CHECK(enumerate_weyl_group(build_root_system(Kind::D, 4)).size() == 192);
}

TEST_CASE("group cap is enforced") {
  const auto b4 = build_root_system(Kind::B, 4);
  CHECK_THROWS_WITH_AS(enumerate_weyl_group(b4, 100), doctest::Contains("exceeds cap 100"), CapExceeded);
}

TEST_CASE("elements are orthogonal and preserve roots") {
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
    for (int n = minimum_rank(k); n <= 4; ++n) {
      const auto rs = build_root_system(k, n);
      const std::set<RatVec> roots(rs.roots.begin(), rs.roots.end());
      for (const auto& w : enumerate_weyl_group(rs)) {
        CHECK((w.matrix.transpose() * w.matrix).is_identity());
        std::set<RatVec> img;
        for (const auto& r : rs.roots) img.insert(w.apply(r));
        CHECK(img == roots);
        WeylElement from_word = identity_element(rs);
        for (int i : w.word) from_word = from_word * simple_reflection(rs, i);
        CHECK(from_word == w);
        CHECK((w * w.inverse()).is_identity());
      }
    }
}

TEST_CASE("dominant representative") {
  const auto a2 = build_root_system(Kind::A, 2);
  const auto dom = dominant_representative(a2, a2.coweight(1) + a2.coweight(2));
  CHECK(dom.dominant == a2.coweight(1) + a2.coweight(2));
  CHECK(dom.witness.is_identity());
  CHECK(dom.witness.word.empty());

  const auto neg = dominant_representative(a2, -a2.coweight(1));
  const auto brute = oracle::dominant_members(a2, orbit(a2, -a2.coweight(1)));
  REQUIRE(brute.size() == 1);
  CHECK(neg.dominant == brute[0]);
  CHECK(neg.dominant == a2.coweight(2));

  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(dominant_representative(b2, -eps(b2, 1)).dominant == b2.coweight(1));
  CHECK_THROWS_AS(dominant_representative(a2, eps(a2, 0)), Error);
}

TEST_CASE("dominant point is unique in its orbit") {
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
    for (int n = minimum_rank(k); n <= 4 - (k == Kind::D ? 0 : 1); ++n) {
      const auto rs = build_root_system(k, n);
      for (int seed = 0; seed < 12; ++seed) {
        std::vector<Rational> c;
        for (int i = 0; i < n; ++i) c.push_back(frac((seed * 7 + i * 5) % 9 - 4, 1 + (seed + i) % 3));
        const RatVec v = from_coweight_coords(rs, c);
        const auto rep = dominant_representative(rs, v);
        CHECK(is_dominant(rs, rep.dominant));
        CHECK(rep.witness.apply(rep.dominant) == v);
        const auto brute = oracle::dominant_members(rs, orbit(rs, v));
        REQUIRE(brute.size() == 1);
        CHECK(brute[0] == rep.dominant);
      }
    }
}

TEST_CASE("orbits") {
  const auto a2 = build_root_system(Kind::A, 2);
  CHECK(orbit(a2, a2.coweight(1)).size() == 3);
  CHECK(orbit(a2, a2.zero()).size() == 1);
  const auto b2 = build_root_system(Kind::B, 2);
  const auto o = orbit(b2, b2.coweight(1));
  CHECK(std::set<RatVec>(o.begin(), o.end()) ==
        std::set<RatVec>{eps(b2, 1), -eps(b2, 1), eps(b2, 2), -eps(b2, 2)});
  CHECK_THROWS_AS(orbit(b2, b2.coweight(1) + b2.coweight(2), 3), CapExceeded);
}

TEST_CASE("orbit size times stabilizer order is the group order") {
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
    for (int n = minimum_rank(k); n <= 4; ++n) {
      const auto rs = build_root_system(k, n);
      const auto group = enumerate_weyl_group(rs);
      std::vector<RatVec> samples = rs.coweights;
      samples.push_back(rs.highest_root);
      samples.push_back(rs.coweight(1) + Rational(2) * rs.coweight(n));
      for (const auto& v : samples) {
        const std::vector<RatVec> fixed{v};
        CHECK(orbit(rs, v).size() * elements_fixing(group, fixed).size() == group.size());
      }
    }
}

TEST_CASE("pointwise stabilizers") {
  const auto b3 = build_root_system(Kind::B, 3);
  const auto group = enumerate_weyl_group(b3);
  CHECK(elements_fixing(group, std::span<const RatVec>{}).size() == group.size());
  const auto all = elements_fixing(group, b3.coweights);
  REQUIRE(all.size() == 1);
  CHECK(all[0].is_identity());

  // In D4 the reflection in alpha_4 = e3 + e4 is orthogonal to omega_1..omega_3.
  const auto d4 = build_root_system(Kind::D, 4);
  const std::vector<RatVec> first3(d4.coweights.begin(), d4.coweights.begin() + 3);
  const auto fix = elements_fixing(d4, first3);
  REQUIRE(fix.size() == 2);
  CHECK(fix[0].is_identity());
  CHECK(fix[1] == simple_reflection(d4, 4));
}

TEST_CASE("dominance witnesses") {
  const auto a2 = build_root_system(Kind::A, 2);
  const auto group = enumerate_weyl_group(a2);
  CHECK(dominance_witnesses(a2, group, a2.coweight(1) + a2.coweight(2)).size() == 1);
  CHECK(dominance_witnesses(a2, group, Rational(2) * a2.coweight(1)).size() == 2);
  CHECK(dominance_witnesses(a2, group, a2.zero()).size() == 6);
}
