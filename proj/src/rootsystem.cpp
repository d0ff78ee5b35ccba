#include "coxcomb/rootsystem.hpp"

#include <algorithm>
#include <cctype>

namespace coxcomb {

char kind_letter(Kind k) {
  switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    case Kind::D: return 'D';
  }
  return '?';
}

Kind parse_kind(std::string_view s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return Kind::A;
      case 'B': return Kind::B;
      case 'C': return Kind::C;
      case 'D': return Kind::D;
      default: break;
    }
  }
  throw Error("unsupported root system kind '" + std::string(s) + "' (expected A, B, C or D)");
}

int minimum_rank(Kind k) {
  switch (k) {
    case Kind::A: return 1;
    case Kind::B:
    case Kind::C: return 2;
    case Kind::D: return 4;
  }
  return 1;
}

std::string RootSystem::name() const { return std::string(1, kind_letter(kind)) + std::to_string(rank); }

RatVec eps(const RootSystem& rs, int i) {
  const int idx = rs.kind == Kind::A ? i : i - 1;
  if (idx < 0 || idx >= rs.ambient_dim) throw Error("eps index out of range");
  return RatVec::unit(rs.ambient_dim, idx);
}

RatVec coroot(const RatVec& alpha) { return (Rational(2) / norm2(alpha)) * alpha; }

namespace {

RatMatrix gram(std::span<const RatVec> basis) {
  RatMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = inner(basis[i], basis[j]);
  return g;
}

// Expansion of v in an arbitrary basis of V, verified by reconstruction.
std::vector<Rational> expand(std::span<const RatVec> basis, const RatVec& v, const char* what) {
  if (basis.empty()) throw Error("empty basis");
  if (v.dim() != basis.front().dim()) throw Error(std::string(what) + ": dimension mismatch");
  std::vector<Rational> rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = inner(v, basis[i]);
  auto a = solve(gram(basis), rhs);
  RatVec back(v.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) back += a[i] * basis[i];
  if (!(back == v)) throw Error(std::string(what) + ": vector " + to_string(v) + " is outside V");
  return a;
}

void add_root(std::vector<RatVec>& out, int dim, std::initializer_list<std::pair<int, int>> terms) {
  RatVec v(dim);
  for (auto [idx, c] : terms) v[idx] += c;
  out.push_back(std::move(v));
}

}  // namespace

RootSystem build_root_system(Kind kind, int rank) {
  if (rank < minimum_rank(kind))
    throw Error(std::string("root system ") + kind_letter(kind) + std::to_string(rank) +
                " unsupported: minimum rank for type " + kind_letter(kind) + " is " +
                std::to_string(minimum_rank(kind)));
  if (rank > 64) throw Error("rank too large");

  RootSystem rs;
  rs.kind = kind;
  rs.rank = rank;
  const int n = rank;
  rs.ambient_dim = kind == Kind::A ? n + 1 : n;
  const int dim = rs.ambient_dim;

  // Coordinates use 0-based ambient indices; for B/C/D eps_i is index i-1.
  auto& roots = rs.roots;
  switch (kind) {
    case Kind::A:
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) add_root(roots, dim, {{i, 1}, {j, -1}});
      for (int i = 1; i <= n; ++i) add_root(rs.simple_roots, dim, {{i - 1, 1}, {i, -1}});
      break;
    case Kind::B:
    case Kind::C:
    case Kind::D: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) add_root(roots, dim, {{i, si}, {j, sj}});
      const int lone = kind == Kind::C ? 2 : 1;
      if (kind != Kind::D)
        for (int i = 0; i < n; ++i)
          for (int s : {1, -1}) add_root(roots, dim, {{i, s * lone}});
      for (int i = 0; i + 1 < n; ++i) add_root(rs.simple_roots, dim, {{i, 1}, {i + 1, -1}});
      if (kind == Kind::D)
        add_root(rs.simple_roots, dim, {{n - 2, 1}, {n - 1, 1}});
      else
        add_root(rs.simple_roots, dim, {{n - 1, lone}});
      break;
    }
  }
  std::sort(roots.begin(), roots.end());

  // Dual basis: omega_i = sum_j (G^{-1})_{ij} alpha_j keeps omega_i in V.
  const RatMatrix ginv = inverse(gram(rs.simple_roots));
  for (int i = 0; i < n; ++i) {
    RatVec w(dim);
    for (int j = 0; j < n; ++j) w += ginv(i, j) * rs.simple_roots[j];
    rs.coweights.push_back(std::move(w));
  }

  // Highest root: the unique root of maximal height.
  Rational best_height = 0;
  int ties = 0;
  for (const auto& r : roots) {
    Rational h = 0;
    for (const auto& a : expand(rs.simple_roots, r, "highest root")) h += a;
    if (rs.highest_root.dim() == 0 || h > best_height) {
      best_height = h;
      rs.highest_root = r;
      ties = 1;
    } else if (h == best_height) {
      ++ties;
    }
  }
  if (ties != 1) throw Error("highest root not unique");
  for (const auto& c : expand(rs.simple_roots, rs.highest_root, "marks")) {
    if (!is_integer(c) || sgn(c) <= 0) throw Error("marks are not positive integers");
    rs.marks.push_back(static_cast<int>(c.get_num().get_si()));
  }
  return rs;
}

std::vector<Rational> expand_in_simple_roots(const RootSystem& rs, const RatVec& v) {
  return expand(rs.simple_roots, v, "expand_in_simple_roots");
}

std::vector<Rational> coweight_coords(const RootSystem& rs, const RatVec& v) {
  return expand(rs.coweights, v, "coweight_coords");
}

RatVec from_coweight_coords(const RootSystem& rs, std::span<const Rational> a) {
  if (a.size() != static_cast<std::size_t>(rs.rank)) throw Error("coweight coordinate count mismatch");
  RatVec v = rs.zero();
  for (int i = 0; i < rs.rank; ++i)
    if (sgn(a[i]) != 0) v += a[i] * rs.coweights[i];
  return v;
}

bool in_span(const RootSystem& rs, const RatVec& v) {
  if (v.dim() != static_cast<std::size_t>(rs.ambient_dim)) return false;
  return rs.kind != Kind::A || sgn(v.sum()) == 0;
}

}  // namespace coxcomb
