#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxcomb/rootsystem.hpp"
#include "coxcomb/weyl.hpp"

namespace coxcomb {

/// Integer coordinates in the basis of fundamental coweights.
using LatticePoint = std::vector<std::int64_t>;

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a);
std::string to_string(const LatticePoint& p);

/// A point of the coweight lattice, carried in both coordinate systems.
struct SpecialVertex {
  RatVec position;
  LatticePoint lattice_coords;

  friend bool operator==(const SpecialVertex& a, const SpecialVertex& b) {
    return a.lattice_coords == b.lattice_coords;
  }
};

SpecialVertex special_vertex(const RootSystem& rs, const LatticePoint& coords);
/// Throws Error("not a special vertex") if `position` is not in the coweight lattice.
SpecialVertex special_vertex_at(const RootSystem& rs, const RatVec& position);
/// Integer coweight coordinates of a lattice vector; throws if not integral.
LatticePoint lattice_coords_of(const RootSystem& rs, const RatVec& v);

/// Wall integrality: (v, alpha) is an integer for every root alpha.
bool is_special(const RootSystem& rs, const RatVec& v);
/// Second oracle: the coweight coordinates of v (found by elimination) are integers.
bool has_integral_coweight_coords(const RootSystem& rs, const RatVec& v);

/// The unique i with `step` in W.omega_i (a special-graph step) or in
/// W.(omega_i / c_i) (a fine skeleton edge at a special vertex). Throws
/// Error when the step is in neither catalog.
int edge_type(const RootSystem& rs, const RatVec& step);

/// 0, omega_1/c_1, ..., omega_n/c_n
std::vector<RatVec> standard_alcove(const RootSystem& rs);

struct SpecialEdge {
  SpecialVertex origin;
  RatVec step;
  int etype = 0;
};

/// A directed special-graph step from the origin: an element of W.omega_etype.
struct StepClass {
  int etype = 0;
  RatVec vec;
  LatticePoint delta;  // vec in coweight coordinates
};

/// The special-vertex graph of one apartment. Edges are the translates of
/// the steps W.omega_i, i = 1..n. Immutable after construction.
class SpecialGraph {
 public:
  explicit SpecialGraph(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank; }
  /// Ordered by type, then by vector.
  const std::vector<StepClass>& steps() const { return steps_; }
  std::size_t degree() const { return steps_.size(); }
  std::optional<std::size_t> find_step(const LatticePoint& delta) const;
  /// Exact (step_i, step_j).
  const Rational& step_inner(std::size_t i, std::size_t j) const { return step_gram_[i * steps_.size() + j]; }
  /// Exact (p, q) for lattice vectors given in coweight coordinates.
  Rational inner(const LatticePoint& p, const LatticePoint& q) const;
  Rational norm2(const LatticePoint& p) const { return inner(p, p); }

  SpecialVertex vertex(const LatticePoint& coords) const { return special_vertex(rs_, coords); }
  std::vector<SpecialEdge> neighbors(const SpecialVertex& x) const;

  /// s_i in coweight coordinates: p - p_i alpha_i^vee, all integer.
  LatticePoint reflect(int i, const LatticePoint& p) const;

 private:
  RootSystem rs_;
  std::vector<StepClass> steps_;
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> index_;
  std::vector<Rational> step_gram_;
  RatMatrix coweight_gram_;
  std::vector<LatticePoint> coroots_;  // alpha_i^vee in coweight coordinates
};

std::vector<SpecialEdge> neighbors(const RootSystem& rs, const SpecialVertex& x);

/// Breadth-first ball around the origin of the special graph.
/// By translation invariance this gives d(x, y) = d(0, y - x).
class DistanceTable {
 public:
  DistanceTable(const SpecialGraph& g, int radius);

  int radius() const { return radius_; }
  /// Distance from 0 to delta, or nullopt when it exceeds radius().
  std::optional<int> distance(const LatticePoint& delta) const;
  /// Ball points in BFS order (non-decreasing distance, deterministic).
  const std::vector<LatticePoint>& points() const { return order_; }
  std::vector<LatticePoint> points_within(int r) const;

 private:
  int radius_;
  std::vector<LatticePoint> order_;
  std::unordered_map<LatticePoint, int, LatticePointHash> dist_;
};

/// BFS distance in the special graph; nullopt when it exceeds cap.
std::optional<int> graph_distance(const SpecialGraph& g, const LatticePoint& x, const LatticePoint& y, int cap);
std::optional<int> graph_distance(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y, int cap);

/// Convex hull of two special vertices as a parallelepiped:
/// { x + sum z_i e_i : 0 <= z_i <= m_i }.
struct HullBox {
  SpecialVertex base;
  std::vector<std::pair<RatVec, Rational>> frame;  // (e_i, m_i)
  std::vector<RatVec> dual;                        // (e_i, dual_j) = delta_ij

  std::vector<Rational> frame_coords(const RatVec& z) const;
  bool contains(const RatVec& z) const;
  RatVec apex() const;
};

/// Frame e_i = w (omega_i / c_i) with (v_dom, w) = dominant_representative(y - x).
HullBox hull_box(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y);
/// Same with an explicit witness; throws Error unless w^{-1}(y - x) is dominant.
HullBox hull_box(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y, const WeylElement& w);

/// 1-skeleton of the full Coxeter complex (all alcove edges).
///
/// Vertices are encoded by coweight coordinates multiplied by scale(), which
/// makes every vertex integral. Adjacency depends only on the class of a
/// vertex modulo the coweight lattice.
class FineSkeleton {
 public:
  FineSkeleton(const RootSystem& rs, std::span<const WeylElement> group);

  std::int64_t scale() const { return scale_; }
  bool is_vertex(const LatticePoint& scaled) const;
  const std::vector<LatticePoint>& offsets(const LatticePoint& scaled) const;
  RatVec position(const LatticePoint& scaled) const;
  LatticePoint scaled_from_lattice(const LatticePoint& coords) const;
  /// Vertices x = lambda + w v_a with lambda in the coweight box |lambda_i| <= r.
  std::vector<LatticePoint> vertices_in_box(int r) const;
  /// Class representatives w v_a, one per residue class.
  const std::vector<LatticePoint>& class_representatives() const { return reps_; }
  Rational max_edge_norm2() const { return max_edge_norm2_; }

  /// BFS ball from the origin vertex in the fine graph.
  std::unordered_map<LatticePoint, int, LatticePointHash> ball(int radius) const;

 private:
  LatticePoint residue(const LatticePoint& scaled) const;

  RootSystem rs_;
  std::int64_t scale_ = 1;
  std::unordered_map<LatticePoint, std::vector<LatticePoint>, LatticePointHash> offsets_;
  std::vector<LatticePoint> reps_;
  Rational max_edge_norm2_;
};

}  // namespace coxcomb
