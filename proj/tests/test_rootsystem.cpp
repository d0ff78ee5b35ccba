#include <map>

#include "doctest.h"

#include "coxcomb/rootsystem.hpp"
#include "oracles.hpp"

using namespace coxcomb;

namespace {

const std::vector<std::pair<Kind, int>>& systems_up_to(int max_rank) {
  static std::map<int, std::vector<std::pair<Kind, int>>> cache;
  auto& v = cache[max_rank];
  if (v.empty())
    for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D})
      for (int n = minimum_rank(k); n <= max_rank; ++n) v.emplace_back(k, n);
  return v;
}

}  // namespace

TEST_CASE("highest roots and marks of small systems") {
  const auto a2 = build_root_system(Kind::A, 2);
  CHECK(a2.highest_root == eps(a2, 0) - eps(a2, 2));
  CHECK(a2.marks == std::vector<int>{1, 1});

  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(b2.highest_root == eps(b2, 1) + eps(b2, 2));
  const auto b2_marks = oracle::eliminate(b2.simple_roots, b2.highest_root);
  REQUIRE(b2_marks);
  CHECK(*b2_marks == std::vector<Rational>{1, 2});
  CHECK(b2.marks == std::vector<int>{1, 2});

  const auto c3 = build_root_system(Kind::C, 3);
  CHECK(c3.highest_root == Rational(2) * eps(c3, 1));
  const auto c3_marks = oracle::eliminate(c3.simple_roots, c3.highest_root);
  REQUIRE(c3_marks);
  CHECK(*c3_marks == std::vector<Rational>{2, 2, 1});
  CHECK(c3.marks == std::vector<int>{2, 2, 1});
}

TEST_CASE("coweights of B3 and A3") {
  const auto b3 = build_root_system(Kind::B, 3);
  RatVec partial(3);
  for (int i = 1; i <= 3; ++i) {
    partial += eps(b3, i);
    CHECK(b3.coweight(i) == partial);
  }
  const auto a3 = build_root_system(Kind::A, 3);
  RatVec all(4);
  for (int i = 0; i <= 3; ++i) all += eps(a3, i);
  CHECK(a3.coweight(1) == eps(a3, 0) - frac(1, 4) * all);
}

TEST_CASE("coweights of C_n and D_n carry halves") {
  const auto c3 = build_root_system(Kind::C, 3);
  CHECK(c3.coweight(3) == RatVec{frac(1, 2), frac(1, 2), frac(1, 2)});
  const auto d5 = build_root_system(Kind::D, 5);
  CHECK(d5.coweight(4) == RatVec{frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2), frac(-1, 2)});
  CHECK(d5.coweight(5) == RatVec{frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2)});
  CHECK(d5.marks == std::vector<int>{1, 2, 2, 1, 1});
}

TEST_CASE("rank limits name the minimum") {
  CHECK_THROWS_WITH_AS(build_root_system(Kind::D, 3), doctest::Contains("minimum rank for type D is 4"), Error);
  CHECK_THROWS_WITH_AS(build_root_system(Kind::B, 1), doctest::Contains("minimum rank for type B is 2"), Error);
  CHECK_THROWS_AS(build_root_system(Kind::A, 0), Error);
  CHECK_THROWS_AS(parse_kind("E"), Error);
  CHECK(parse_kind("c") == Kind::C);
}

TEST_CASE("root data invariants through rank 6") {
  for (auto [k, n] : systems_up_to(6)) {
    CAPTURE(kind_letter(k));
    CAPTURE(n);
    const auto rs = build_root_system(k, n);
    CHECK(rs.roots.size() == oracle::root_count(k, n));
    const auto brute = oracle::brute_roots(k, n);
    CHECK(std::set<RatVec>(rs.roots.begin(), rs.roots.end()) == brute);

    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(inner(rs.coweight(i), rs.simple_root(j)) == (i == j ? 1 : 0));

    RatVec sum(rs.ambient_dim);
    for (int i = 1; i <= n; ++i) sum += Rational(rs.mark(i)) * rs.simple_root(i);
    CHECK(sum == rs.highest_root);

    for (const auto& a : rs.roots) {
      const auto diff = oracle::eliminate(rs.simple_roots, rs.highest_root - a);
      REQUIRE(diff);
      CHECK(std::all_of(diff->begin(), diff->end(), [](const Rational& q) { return sgn(q) >= 0; }));
      for (const auto& b : rs.roots) CHECK(is_integer(Rational(2) * inner(a, b) / norm2(a)));
      int multiples = 0;
      for (const auto& b : rs.roots) {
        const auto t = oracle::eliminate({a}, b);
        if (t) {
          ++multiples;
          CHECK((*t)[0] * (*t)[0] == 1);
        }
      }
      CHECK(multiples == 2);
      const Rational len = norm2(a);
      switch (k) {
        case Kind::A:
        case Kind::D: CHECK(len == 2); break;
        case Kind::B: CHECK((len == 1 || len == 2)); break;
        case Kind::C: CHECK((len == 2 || len == 4)); break;
      }
    }
    if (k == Kind::A)
      for (const auto& w : rs.coweights) CHECK(w.sum() == 0);
  }
}

TEST_CASE("duality holds through rank 8") {
  for (auto [k, n] : systems_up_to(8)) {
    const auto rs = build_root_system(k, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(inner(rs.coweight(i), rs.simple_root(j)) == (i == j ? 1 : 0));
  }
}

TEST_CASE("expansion in simple roots") {
  const auto a2 = build_root_system(Kind::A, 2);
  CHECK(expand_in_simple_roots(a2, a2.highest_root) == std::vector<Rational>{1, 1});
  CHECK(expand_in_simple_roots(a2, a2.zero()) == std::vector<Rational>{0, 0});
  CHECK_THROWS_AS(expand_in_simple_roots(a2, eps(a2, 0)), Error);
  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(expand_in_simple_roots(b2, b2.highest_root) == std::vector<Rational>{1, 2});

  for (auto [k, n] : systems_up_to(4)) {
    const auto rs = build_root_system(k, n);
    std::vector<Rational> a;
    for (int i = 1; i <= n; ++i) a.push_back(frac(3 * i - 7, i + 1));
    RatVec v(rs.ambient_dim);
    for (int i = 0; i < n; ++i) v += a[i] * rs.simple_roots[i];
    CHECK(expand_in_simple_roots(rs, v) == a);
  }
}

TEST_CASE("inner products") {
  const auto b3 = build_root_system(Kind::B, 3);
  CHECK(inner(eps(b3, 1), eps(b3, 1)) == 1);
  CHECK(inner(b3.coweight(1), b3.simple_root(2)) == 0);
  CHECK(inner(b3.coweight(1), b3.coweight(2)) == 1);
}

TEST_CASE("coweight coordinates") {
  const auto b2 = build_root_system(Kind::B, 2);
  CHECK(coweight_coords(b2, eps(b2, 1) + eps(b2, 2)) == std::vector<Rational>{0, 1});
  const auto a2 = build_root_system(Kind::A, 2);
  CHECK(coweight_coords(a2, a2.simple_root(1)) == std::vector<Rational>{2, -1});
  CHECK_THROWS_AS(coweight_coords(a2, eps(a2, 1)), Error);
  for (auto [k, n] : systems_up_to(5)) {
    const auto rs = build_root_system(k, n);
    for (int i = 1; i <= n; ++i) {
      std::vector<Rational> e(n, 0);
      e[i - 1] = 1;
      CHECK(coweight_coords(rs, rs.coweight(i)) == e);
    }
    RatVec v = rs.highest_root;
    const auto c = coweight_coords(rs, v);
    for (int i = 1; i <= n; ++i) CHECK(c[i - 1] == inner(v, rs.simple_root(i)));
    CHECK(from_coweight_coords(rs, c) == v);
  }
}
