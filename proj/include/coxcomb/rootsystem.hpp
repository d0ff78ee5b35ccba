#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxcomb/rational.hpp"

namespace coxcomb {

enum class Kind { A, B, C, D };

char kind_letter(Kind k);
/// Accepts "A".."D" (case-insensitive). Throws Error otherwise.
Kind parse_kind(std::string_view s);
/// Smallest rank for which the kind is a distinct irreducible system.
int minimum_rank(Kind k);

/// Static data of one classical root system.
///
/// Type A_n lives in the ambient space R^{n+1} (sum-zero hyperplane V);
/// B_n, C_n, D_n live in R^n. Simple roots and fundamental coweights are in
/// Bourbaki order. Immutable after build_root_system().
struct RootSystem {
  Kind kind = Kind::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RatVec> roots;         // all of Phi, sorted lexicographically
  std::vector<RatVec> simple_roots;  // alpha_1 .. alpha_n
  RatVec highest_root;
  std::vector<int> marks;            // c_i with highest_root = sum c_i alpha_i
  std::vector<RatVec> coweights;     // dual basis to simple_roots

  std::string name() const;  // "B3"
  const RatVec& simple_root(int i) const { return simple_roots.at(i - 1); }
  const RatVec& coweight(int i) const { return coweights.at(i - 1); }
  int mark(int i) const { return marks.at(i - 1); }
  RatVec zero() const { return RatVec(ambient_dim); }
};

/// Builds A_n (n>=1), B_n, C_n (n>=2), D_n (n>=4) with the standard
/// epsilon coordinates. Marks and coweights are computed, not tabulated.
RootSystem build_root_system(Kind kind, int rank);

/// eps_i in the ambient space. For type A the index runs 0..n, otherwise 1..n.
RatVec eps(const RootSystem& rs, int i);

/// Coroot 2 alpha / (alpha, alpha).
RatVec coroot(const RatVec& alpha);

/// Coefficients a with v = sum a_i alpha_i. Throws Error if v is outside
/// the span of the simple roots (for A_n: coordinate sum nonzero).
std::vector<Rational> expand_in_simple_roots(const RootSystem& rs, const RatVec& v);

/// Coefficients a with v = sum a_i omega_i, solved by elimination against
/// the coweight Gram matrix. Throws Error if v is outside V.
std::vector<Rational> coweight_coords(const RootSystem& rs, const RatVec& v);

/// sum a_i omega_i
RatVec from_coweight_coords(const RootSystem& rs, std::span<const Rational> a);

/// True when v lies in V (always for B/C/D of the right dimension).
bool in_span(const RootSystem& rs, const RatVec& v);

}  // namespace coxcomb
