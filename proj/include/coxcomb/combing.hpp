#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxcomb/complex.hpp"

namespace coxcomb {

struct WordStep {
  RatVec step;
  int etype = 0;
  LatticePoint delta;  // step in coweight coordinates

  friend bool operator==(const WordStep& a, const WordStep& b) { return a.delta == b.delta && a.etype == b.etype; }
};

/// An edge path in the special graph.
struct CombingWord {
  SpecialVertex start;
  std::vector<WordStep> steps;

  std::size_t length() const { return steps.size(); }
  /// start, start + s_1, ..., end (length() + 1 entries).
  std::vector<LatticePoint> vertex_coords() const;
  LatticePoint end_coords() const;
  CombingWord prefix(std::size_t len) const;

  friend bool operator==(const CombingWord& a, const CombingWord& b) {
    return a.start == b.start && a.steps == b.steps;
  }
  friend bool operator<(const CombingWord& a, const CombingWord& b);
};

/// The combing path from x to y: with (v_dom, w) the dominant representative
/// of y - x and k its coweight coordinates, k_1 copies of w omega_1, then
/// k_2 copies of w omega_2, and so on.
CombingWord combing_path(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y);
/// Same with an explicit witness; throws Error unless w^{-1}(y - x) is dominant.
CombingWord combing_path(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y, const WeylElement& w);
/// Lattice-only variant used by the harnesses: returns step indices into g.steps().
std::vector<std::size_t> combing_steps(const SpecialGraph& g, const LatticePoint& delta);

CombingWord word_from_steps(const SpecialGraph& g, const LatticePoint& start, const std::vector<std::size_t>& idx);

/// Exact test that d2 is a positive multiple of d1.
bool is_straight(const RatVec& d1, const RatVec& d2);

/// The local rule for consecutive special steps (d1 of type i, d2 of type j):
/// straight continuation, or i < j with (d1, d2) = (omega_i, omega_j).
bool is_local_pair(const RootSystem& rs, const RatVec& d1, int i, const RatVec& d2, int j);

/// True iff every consecutive pair of steps obeys the local rule.
/// Throws Error if the word is not an edge path of the special graph.
bool is_local_path(const RootSystem& rs, const CombingWord& word);

/// Finite state automaton over directed special edges modulo translation.
/// States are the step classes; all states are initial and accepting.
/// A transition s -> t means "an edge labelled s may be followed by t".
struct Fsa {
  std::vector<StepClass> states;
  std::vector<std::vector<bool>> transitions;

  std::size_t state_count() const { return states.size(); }
  std::size_t transition_count() const;
  std::vector<std::size_t> successors(std::size_t s) const;
};

Fsa build_fsa(const SpecialGraph& g);
Fsa build_fsa(const RootSystem& rs);
/// Alternative transition rule: (d1, d2) is simultaneously W-conjugate to
/// (omega_i, omega_j) with i < j, or straight.
Fsa build_fsa_by_conjugacy(const SpecialGraph& g, std::span<const WeylElement> group);

/// Subset simulation. Letters are state indices; an unknown letter rejects.
bool fsa_accepts(const Fsa& fsa, const std::vector<std::size_t>& letters);
/// Labels each step of the word by its class; rejects steps outside the catalog.
bool fsa_accepts(const Fsa& fsa, const CombingWord& word);

/// All label sequences of length `length` accepted by the automaton.
std::vector<std::vector<std::size_t>> fsa_words(const Fsa& fsa, std::size_t length, std::size_t cap);

inline constexpr std::size_t kDefaultLengthCap = 24;
inline constexpr std::size_t kDefaultPathCap = 5'000'000;

/// Every edge path of exactly `length` steps from `from` whose consecutive
/// pairs satisfy the local rule. Sorted.
std::vector<CombingWord> enumerate_local_paths(const SpecialGraph& g, const SpecialVertex& from, std::size_t length,
                                               std::size_t length_cap = kDefaultLengthCap,
                                               std::size_t count_cap = kDefaultPathCap);
std::vector<CombingWord> enumerate_local_paths(const RootSystem& rs, const SpecialVertex& from, std::size_t length);

/// "(type i; (x, y, z))"
std::string state_label(const StepClass& s);
std::string to_dot(const Fsa& fsa, const std::string& name);

/// [{"step": ["1", "-1/2", ...], "type": 1}, ...]
nlohmann::json word_to_json(const CombingWord& w);
CombingWord word_from_json(const RootSystem& rs, const SpecialVertex& start, const nlohmann::json& j);

}  // namespace coxcomb
