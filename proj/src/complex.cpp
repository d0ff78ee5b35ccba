#include "coxcomb/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coxcomb {

std::size_t LatticePointHash::operator()(const LatticePoint& p) const {
  std::size_t h = p.size();
  for (auto x : p) hash_combine(h, std::hash<std::int64_t>{}(x));
  return h;
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw Error("lattice dimension mismatch");
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw Error("lattice dimension mismatch");
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

SpecialVertex special_vertex(const RootSystem& rs, const LatticePoint& coords) {
  if (coords.size() != static_cast<std::size_t>(rs.rank)) throw Error("lattice coordinate count mismatch");
  RatVec pos = rs.zero();
  for (int i = 0; i < rs.rank; ++i)
    if (coords[i] != 0) pos += Rational(static_cast<long>(coords[i])) * rs.coweights[i];
  return SpecialVertex{std::move(pos), coords};
}

LatticePoint lattice_coords_of(const RootSystem& rs, const RatVec& v) {
  const auto a = coweight_coords(rs, v);
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_integer(a[i]) || !a[i].get_num().fits_slong_p())
      throw Error("not a special vertex: " + to_string(v));
    out[i] = a[i].get_num().get_si();
  }
  return out;
}

SpecialVertex special_vertex_at(const RootSystem& rs, const RatVec& position) {
  return SpecialVertex{position, lattice_coords_of(rs, position)};
}

bool is_special(const RootSystem& rs, const RatVec& v) {
  if (!in_span(rs, v)) throw Error("is_special: " + to_string(v) + " is outside V");
  for (const auto& a : rs.roots)
    if (!is_integer(inner(v, a))) return false;
  return true;
}

bool has_integral_coweight_coords(const RootSystem& rs, const RatVec& v) {
  for (const auto& a : coweight_coords(rs, v))
    if (!is_integer(a)) return false;
  return true;
}

int edge_type(const RootSystem& rs, const RatVec& step) {
  if (!in_span(rs, step) || step.is_zero()) throw Error("edge_type: invalid step " + to_string(step));
  const RatVec dom = dominant_representative(rs, step).dominant;
  for (int i = 1; i <= rs.rank; ++i) {
    if (dom == rs.coweight(i)) return i;
    if (dom == rs.coweight(i) / Rational(rs.mark(i))) return i;
  }
  throw Error("edge_type: " + to_string(step) + " is not a quasi-special edge in the catalog");
}

std::vector<RatVec> standard_alcove(const RootSystem& rs) {
  std::vector<RatVec> v{rs.zero()};
  for (int i = 1; i <= rs.rank; ++i) v.push_back(rs.coweight(i) / Rational(rs.mark(i)));
  return v;
}

SpecialGraph::SpecialGraph(RootSystem rs) : rs_(std::move(rs)) {
  for (int i = 1; i <= rs_.rank; ++i)
    for (auto& v : orbit(rs_, rs_.coweight(i))) {
      LatticePoint d = lattice_coords_of(rs_, v);
      steps_.push_back(StepClass{i, std::move(v), std::move(d)});
    }
  for (std::size_t s = 0; s < steps_.size(); ++s) {
    if (!index_.emplace(steps_[s].delta, s).second)
      throw Error("special step catalog has a repeated vector");
  }
  const std::size_t m = steps_.size();
  step_gram_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) step_gram_[i * m + j] = coxcomb::inner(steps_[i].vec, steps_[j].vec);
  coweight_gram_ = RatMatrix(rs_.rank, rs_.rank);
  for (int i = 0; i < rs_.rank; ++i)
    for (int j = 0; j < rs_.rank; ++j) coweight_gram_(i, j) = coxcomb::inner(rs_.coweights[i], rs_.coweights[j]);
  for (const auto& a : rs_.simple_roots) coroots_.push_back(lattice_coords_of(rs_, coroot(a)));
}

LatticePoint SpecialGraph::reflect(int i, const LatticePoint& p) const {
  const std::int64_t c = p.at(i - 1);
  if (c == 0) return p;
  LatticePoint r = p;
  const auto& av = coroots_[i - 1];
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * av[k];
  return r;
}

std::optional<std::size_t> SpecialGraph::find_step(const LatticePoint& delta) const {
  auto it = index_.find(delta);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational SpecialGraph::inner(const LatticePoint& p, const LatticePoint& q) const {
  Rational s = 0;
  for (int i = 0; i < rs_.rank; ++i) {
    if (p[i] == 0) continue;
    for (int j = 0; j < rs_.rank; ++j)
      if (q[j] != 0) s += coweight_gram_(i, j) * Rational(static_cast<long>(p[i] * q[j]));
  }
  return s;
}

std::vector<SpecialEdge> SpecialGraph::neighbors(const SpecialVertex& x) const {
  std::vector<SpecialEdge> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(SpecialEdge{x, s.vec, s.etype});
  return out;
}

std::vector<SpecialEdge> neighbors(const RootSystem& rs, const SpecialVertex& x) {
  return SpecialGraph(rs).neighbors(x);
}

DistanceTable::DistanceTable(const SpecialGraph& g, int radius) : radius_(radius) {
  const LatticePoint origin(g.rank(), 0);
  order_.push_back(origin);
  dist_.emplace(origin, 0);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const LatticePoint cur = order_[head];
    const int d = dist_.at(cur);
    if (d >= radius_) continue;
    for (const auto& s : g.steps()) {
      LatticePoint nxt = cur + s.delta;
      if (dist_.emplace(nxt, d + 1).second) order_.push_back(std::move(nxt));
    }
  }
}

std::optional<int> DistanceTable::distance(const LatticePoint& delta) const {
  auto it = dist_.find(delta);
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

std::vector<LatticePoint> DistanceTable::points_within(int r) const {
  std::vector<LatticePoint> out;
  for (const auto& p : order_)
    if (dist_.at(p) <= r) out.push_back(p);
  return out;
}

std::optional<int> graph_distance(const SpecialGraph& g, const LatticePoint& x, const LatticePoint& y, int cap) {
  const LatticePoint target = y - x;
  std::vector<LatticePoint> frontier{LatticePoint(g.rank(), 0)};
  if (frontier.front() == target) return 0;
  std::unordered_map<LatticePoint, int, LatticePointHash> seen{{frontier.front(), 0}};
  for (int d = 1; d <= cap; ++d) {
    std::vector<LatticePoint> next;
    for (const auto& p : frontier)
      for (const auto& s : g.steps()) {
        LatticePoint q = p + s.delta;
        if (q == target) return d;
        if (seen.emplace(q, d).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<int> graph_distance(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y, int cap) {
  return graph_distance(SpecialGraph(rs), x.lattice_coords, y.lattice_coords, cap);
}

std::vector<Rational> HullBox::frame_coords(const RatVec& z) const {
  const RatVec rel = z - base.position;
  std::vector<Rational> c;
  c.reserve(dual.size());
  for (const auto& f : dual) c.push_back(inner(rel, f));
  return c;
}

bool HullBox::contains(const RatVec& z) const {
  const RatVec rel = z - base.position;
  // rel must lie in the span of the frame as well (type A: sum-zero).
  RatVec back(rel.dim());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Rational zi = inner(rel, dual[i]);
    if (sgn(zi) < 0 || zi > frame[i].second) return false;
    back += zi * frame[i].first;
  }
  return back == rel;
}

RatVec HullBox::apex() const {
  RatVec y = base.position;
  for (const auto& [e, m] : frame) y += m * e;
  return y;
}

HullBox hull_box(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y, const WeylElement& w) {
  const RatVec v = y.position - x.position;
  const RatVec u = w.matrix.transpose().apply(v);
  if (!is_dominant(rs, u)) throw Error("hull_box: witness does not map " + to_string(v) + " to the dominant sector");
  HullBox box{x, {}, {}};
  for (int i = 1; i <= rs.rank; ++i) {
    const Rational c(rs.mark(i));
    const Rational k = inner(u, rs.simple_root(i));
    box.frame.emplace_back(w.apply(rs.coweight(i) / c), c * k);
    box.dual.push_back(c * w.apply(rs.simple_root(i)));
  }
  return box;
}

HullBox hull_box(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y) {
  const auto rep = dominant_representative(rs, y.position - x.position);
  return hull_box(rs, x, y, rep.witness);
}

FineSkeleton::FineSkeleton(const RootSystem& rs, std::span<const WeylElement> group) : rs_(rs) {
  for (int c : rs_.marks) scale_ = std::lcm(scale_, static_cast<std::int64_t>(c));
  const auto alcove = standard_alcove(rs_);
  const Rational scale(static_cast<long>(scale_));

  auto scaled = [&](const RatVec& v) {
    LatticePoint out;
    for (const auto& a : coweight_coords(rs_, v)) {
      const Rational s = a * scale;
      if (!is_integer(s)) throw Error("fine skeleton: vertex not on the scaled lattice");
      out.push_back(s.get_num().get_si());
    }
    return out;
  };

  std::unordered_map<LatticePoint, std::set<LatticePoint>, LatticePointHash> acc;
  for (const auto& w : group) {
    std::vector<LatticePoint> img;
    for (const auto& v : alcove) img.push_back(scaled(w.apply(v)));
    for (std::size_t a = 0; a < img.size(); ++a) {
      const LatticePoint key = residue(img[a]);
      auto [it, fresh] = acc.try_emplace(key);
      if (fresh) reps_.push_back(img[a]);
      for (std::size_t b = 0; b < img.size(); ++b)
        if (a != b) it->second.insert(img[b] - img[a]);
    }
  }
  max_edge_norm2_ = 0;
  for (auto& [key, offs] : acc) {
    std::vector<LatticePoint> v(offs.begin(), offs.end());
    for (const auto& o : v) {
      RatVec p = position(o);
      max_edge_norm2_ = std::max(max_edge_norm2_, coxcomb::norm2(p));
    }
    offsets_.emplace(key, std::move(v));
  }
  std::sort(reps_.begin(), reps_.end());
}

LatticePoint FineSkeleton::residue(const LatticePoint& scaled) const {
  LatticePoint r(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) r[i] = ((scaled[i] % scale_) + scale_) % scale_;
  return r;
}

bool FineSkeleton::is_vertex(const LatticePoint& scaled) const { return offsets_.count(residue(scaled)) != 0; }

const std::vector<LatticePoint>& FineSkeleton::offsets(const LatticePoint& scaled) const {
  auto it = offsets_.find(residue(scaled));
  if (it == offsets_.end()) throw Error("fine skeleton: " + to_string(scaled) + " is not a vertex");
  return it->second;
}

RatVec FineSkeleton::position(const LatticePoint& scaled) const {
  std::vector<Rational> a;
  for (auto x : scaled) a.push_back(frac(static_cast<long>(x), static_cast<long>(scale_)));
  return from_coweight_coords(rs_, a);
}

LatticePoint FineSkeleton::scaled_from_lattice(const LatticePoint& coords) const {
  LatticePoint r(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) r[i] = coords[i] * scale_;
  return r;
}

std::vector<LatticePoint> FineSkeleton::vertices_in_box(int r) const {
  std::vector<LatticePoint> out;
  const int n = rs_.rank;
  LatticePoint lam(n, -r);
  for (;;) {
    const LatticePoint base = scaled_from_lattice(lam);
    for (const auto& rep : reps_) out.push_back(base + rep);
    int i = 0;
    while (i < n && lam[i] == r) lam[i++] = -r;
    if (i == n) break;
    ++lam[i];
  }
  return out;
}

std::unordered_map<LatticePoint, int, LatticePointHash> FineSkeleton::ball(int radius) const {
  const LatticePoint origin(rs_.rank, 0);
  std::unordered_map<LatticePoint, int, LatticePointHash> dist{{origin, 0}};
  std::vector<LatticePoint> frontier{origin};
  for (int d = 1; d <= radius; ++d) {
    std::vector<LatticePoint> next;
    for (const auto& p : frontier)
      for (const auto& o : offsets(p)) {
        LatticePoint q = p + o;
        if (dist.emplace(q, d).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace coxcomb
