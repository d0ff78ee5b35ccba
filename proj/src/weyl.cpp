#include "coxcomb/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace coxcomb {

WeylElement WeylElement::inverse() const {
  // Orthogonal, so the inverse is the transpose; the word reverses.
  WeylElement inv{matrix.transpose(), std::vector<int>(word.rbegin(), word.rend())};
  return inv;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement p{a.matrix * b.matrix, a.word};
  p.word.insert(p.word.end(), b.word.begin(), b.word.end());
  return p;
}

WeylElement identity_element(const RootSystem& rs) {
  return WeylElement{RatMatrix::identity(rs.ambient_dim), {}};
}

namespace {
struct MatrixHash {
  std::size_t operator()(const RatMatrix& m) const { return m.hash(); }
};

void check_index(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank)
    throw Error("simple reflection index " + std::to_string(i) + " out of range 1.." + std::to_string(rs.rank));
}
}  // namespace

WeylElement simple_reflection(const RootSystem& rs, int i) {
  check_index(rs, i);
  const RatVec& a = rs.simple_root(i);
  const RatVec av = coroot(a);
  RatMatrix m = RatMatrix::identity(rs.ambient_dim);
  for (int r = 0; r < rs.ambient_dim; ++r)
    for (int c = 0; c < rs.ambient_dim; ++c) m(r, c) -= av[r] * a[c];
  return WeylElement{std::move(m), {i}};
}

RatVec reflect(const RootSystem& rs, int i, const RatVec& v) {
  check_index(rs, i);
  const RatVec& a = rs.simple_root(i);
  const Rational p = inner(v, a);
  if (sgn(p) == 0) return v;
  return v - (p * Rational(2) / norm2(a)) * a;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap) {
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs.rank; ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> out{identity_element(rs)};
  std::unordered_set<RatMatrix, MatrixHash> seen{out[0].matrix};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = out[head] * s;
      if (seen.insert(next.matrix).second) {
        if (out.size() >= cap)
          throw CapExceeded("Weyl group of " + rs.name() + " exceeds cap " + std::to_string(cap) +
                            " (at least " + std::to_string(out.size() + 1) + " elements found)");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

bool is_dominant(const RootSystem& rs, const RatVec& v) {
  for (const auto& a : rs.simple_roots)
    if (sgn(inner(v, a)) < 0) return false;
  return true;
}

DominantRep dominant_representative(const RootSystem& rs, const RatVec& v) {
  if (!in_span(rs, v)) throw Error("dominant_representative: vector " + to_string(v) + " is outside V");
  RatVec cur = v;
  std::vector<int> applied;
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= rs.rank; ++i)
      if (sgn(inner(cur, rs.simple_root(i))) < 0) {
        pick = i;
        break;
      }
    if (pick == 0) break;
    cur = reflect(rs, pick, cur);
    applied.push_back(pick);
  }
  // cur = s_k ... s_1 v, so v = s_1 ... s_k cur.
  WeylElement w = identity_element(rs);
  for (int i : applied) w = w * simple_reflection(rs, i);
  return DominantRep{std::move(cur), std::move(w)};
}

std::vector<RatVec> orbit(const RootSystem& rs, const RatVec& v, std::size_t cap) {
  if (!in_span(rs, v)) throw Error("orbit: vector " + to_string(v) + " is outside V");
  std::vector<RatVec> out{v};
  std::unordered_set<RatVec, RatVecHash> seen{v};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int i = 1; i <= rs.rank; ++i) {
      RatVec u = reflect(rs, i, out[head]);
      if (seen.insert(u).second) {
        if (out.size() >= cap) throw CapExceeded("orbit exceeds cap " + std::to_string(cap));
        out.push_back(std::move(u));
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> elements_fixing(std::span<const WeylElement> group, std::span<const RatVec> fixed) {
  std::vector<WeylElement> out;
  for (const auto& w : group) {
    bool ok = true;
    for (const auto& u : fixed)
      if (!(w.apply(u) == u)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<WeylElement> elements_fixing(const RootSystem& rs, std::span<const RatVec> fixed, std::size_t cap) {
  const auto group = enumerate_weyl_group(rs, cap);
  return elements_fixing(group, fixed);
}

std::vector<WeylElement> dominance_witnesses(const RootSystem& rs, std::span<const WeylElement> group,
                                             const RatVec& v) {
  std::vector<WeylElement> out;
  for (const auto& w : group)
    if (is_dominant(rs, w.matrix.transpose().apply(v))) out.push_back(w);
  return out;
}

}  // namespace coxcomb
