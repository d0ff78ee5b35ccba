#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coxcomb/rootsystem.hpp"

namespace coxcomb {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// Element of the finite Weyl group acting on the ambient space.
/// Equality is matrix equality; the witness word is any word in simple
/// reflections (1-based indices) that produces the matrix.
struct WeylElement {
  RatMatrix matrix;
  std::vector<int> word;

  RatVec apply(const RatVec& v) const { return matrix.apply(v); }
  bool is_identity() const { return matrix.is_identity(); }
  WeylElement inverse() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.matrix.hash(); }
};

WeylElement identity_element(const RootSystem& rs);

/// s_{alpha_i}: v -> v - (v, alpha_i) alpha_i^vee. Throws Error for i outside 1..rank.
WeylElement simple_reflection(const RootSystem& rs, int i);

/// Applies s_{alpha_i} to v without building a matrix.
RatVec reflect(const RootSystem& rs, int i, const RatVec& v);

/// All of W by breadth-first closure over simple reflections, identity
/// first. Throws CapExceeded once more than `cap` elements are found.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap = kDefaultGroupCap);

bool is_dominant(const RootSystem& rs, const RatVec& v);

struct DominantRep {
  RatVec dominant;
  WeylElement witness;  // witness.apply(dominant) == v
};

/// Greedy: while some (v, alpha_i) < 0, reflect in the smallest such i.
DominantRep dominant_representative(const RootSystem& rs, const RatVec& v);

/// The W-orbit of v by BFS over simple reflections, sorted.
std::vector<RatVec> orbit(const RootSystem& rs, const RatVec& v, std::size_t cap = kDefaultGroupCap);

/// Every w in `group` with w u = u for all u in `fixed`.
std::vector<WeylElement> elements_fixing(std::span<const WeylElement> group, std::span<const RatVec> fixed);
std::vector<WeylElement> elements_fixing(const RootSystem& rs, std::span<const RatVec> fixed,
                                         std::size_t cap = kDefaultGroupCap);

/// Every w in `group` with w^{-1} v dominant.
std::vector<WeylElement> dominance_witnesses(const RootSystem& rs, std::span<const WeylElement> group,
                                             const RatVec& v);

}  // namespace coxcomb
