#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxcomb/combing.hpp"

namespace coxcomb {

/// Worker count used when a harness is given jobs <= 0.
int default_jobs();

/// Runs fn(i, worker) for i in [0, n) on `jobs` threads. Items are dealt out
/// in contiguous blocks; fn must only touch its worker-local state.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t, int)>& fn);

// ------------------------------------------------------------- fixer lemma

struct Lemma62Witness {
  int j = 0;
  int k = 0;
  RatVec omega;
};

/// For every k, omega in W omega_k and j < k with (omega_j, omega) =
/// (omega_j, omega_k): is there w fixing omega_1..omega_j with w omega_k = omega?
struct Lemma62Report {
  std::string system;
  std::size_t group_order = 0;
  std::size_t checks = 0;
  std::vector<Lemma62Witness> counterexamples;  // sorted by (j, k, omega)

  bool holds() const { return counterexamples.empty(); }
};

Lemma62Report check_lemma_62(const RootSystem& rs, std::size_t cap = kDefaultGroupCap);

// ------------------------------------------------------------- local-global

struct LocalGlobalViolation {
  LatticePoint endpoint;
  std::size_t local_paths = 0;     // local-rule paths from 0 ending here
  bool combing_is_local = false;
  std::vector<CombingWord> others;  // local paths that differ from the combing path (at most 4 kept)
};

struct LocalGlobalReport {
  std::string system;
  int radius = 0;
  std::size_t max_length = 0;      // longest combing path into the ball
  std::size_t endpoints = 0;
  std::size_t local_paths = 0;     // all local paths of length <= max_length
  std::size_t foreign_paths = 0;   // local paths that are not the combing path to their endpoint
  std::vector<LocalGlobalViolation> violations;  // endpoints inside the ball, sorted

  bool holds() const { return violations.empty() && foreign_paths == 0; }
};

LocalGlobalReport check_local_global(const RootSystem& rs, int radius, int jobs = 0,
                                     std::size_t path_cap = kDefaultPathCap);

// ---------------------------------------------------------------------- ftp

struct FtpWitness {
  LatticePoint x, x2, y, y2;
  std::size_t t = 0;
  int separation = 0;
};

struct FtpLevel {
  int radius = 0;
  std::size_t pairs = 0;
  int k = 0;             // max separation over all pairs at this radius
  int k_same_start = 0;  // restricted to x = x'
};

/// Pairs of combing paths 0 -> y and x' -> y' with x' in {0} u N(0) and
/// y, y' in the radius ball with d(y, y') <= 1. Time runs one special edge
/// per unit; paths stay at their endpoint afterwards.
struct FtpReport {
  std::string system;
  int radius = 0;
  std::size_t pair_count = 0;
  int max_separation = 0;             // special-graph metric
  Rational max_separation_euclid2;    // squared Euclidean distance
  FtpWitness witness;
  std::vector<FtpLevel> table;        // radius 0..radius

  /// k(r) non-decreasing, and equal at the last two radii.
  bool stabilized() const;
};

FtpReport check_ftp(const RootSystem& rs, int radius, int jobs = 0);
/// Recomputes d(alpha(t), beta(t)) for the two combing paths of a witness.
int ftp_separation(const SpecialGraph& g, const FtpWitness& w, int cap = 64);

// ------------------------------------------------------------ quasi-metrics

struct RatioRange {
  Rational min;
  Rational max;
  LatticePoint argmax;
};

/// Ratios against d_spec(0, y) over y != 0 in the radius ball.
struct QuasiReport {
  std::string system;
  int radius = 0;
  std::size_t points = 0;
  RatioRange combing;          // |combing_path(0, y)| / d_spec
  RatioRange euclid2;          // |y|^2 / d_spec^2
  RatioRange fine;             // d_fine / d_spec
  std::size_t geodesic = 0;    // endpoints with |combing_path| = d_spec
  Rational euclid2_bound;      // max |omega_i|^2
  int fine_bound = 0;          // max c_i

  bool holds() const;
};

QuasiReport check_quasi_constants(const RootSystem& rs, int radius, int jobs = 0);

// ------------------------------------------------------- uniqueness and hull

struct UniquenessViolation {
  LatticePoint endpoint;
  std::string property;  // endpoint | length | local | fsa | hull | witness
};

/// Well-formedness of combing_path(0, y) over the radius ball: endpoint,
/// length sum k_i, local rules and FSA acceptance of every prefix, hull
/// membership of every vertex, and equality across all dominance witnesses.
struct UniquenessReport {
  std::string system;
  int radius = 0;
  std::size_t endpoints = 0;
  std::size_t wall_endpoints = 0;    // more than one dominance witness
  std::size_t max_witnesses = 0;
  std::size_t witness_words = 0;     // words compared in total
  std::size_t hull_checks = 0;
  std::vector<UniquenessViolation> violations;

  bool holds() const { return violations.empty(); }
};

UniquenessReport check_uniqueness_and_hull(const RootSystem& rs, int radius, int jobs = 0);

// -------------------------------------------------------------- fsa vs paths

/// Label sequences of length <= max_length accepted by the automaton, kept
/// when realizable as paths from 0, against enumerate_local_paths.
struct LanguageReport {
  std::string system;
  std::size_t max_length = 0;
  std::vector<std::size_t> fsa_words;    // per length
  std::vector<std::size_t> local_paths;  // per length
  std::vector<std::size_t> mismatches;   // per length, symmetric difference size

  bool holds() const;
};

LanguageReport check_fsa_language(const RootSystem& rs, std::size_t max_length);

/// Default verification radius by rank: 2 -> 6, 3 -> 4, otherwise 3 (1 -> 8).
int default_radius(int rank);

nlohmann::json to_json(const Lemma62Report& r);
nlohmann::json to_json(const LocalGlobalReport& r);
nlohmann::json to_json(const FtpReport& r);
nlohmann::json to_json(const QuasiReport& r);
nlohmann::json to_json(const UniquenessReport& r);
nlohmann::json to_json(const LanguageReport& r);

}  // namespace coxcomb
