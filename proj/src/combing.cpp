#include "coxcomb/combing.hpp"

#include <algorithm>

namespace coxcomb {

std::vector<LatticePoint> CombingWord::vertex_coords() const {
  std::vector<LatticePoint> out{start.lattice_coords};
  for (const auto& s : steps) out.push_back(out.back() + s.delta);
  return out;
}

LatticePoint CombingWord::end_coords() const {
  LatticePoint p = start.lattice_coords;
  for (const auto& s : steps) p = p + s.delta;
  return p;
}

CombingWord CombingWord::prefix(std::size_t len) const {
  CombingWord w{start, {}};
  w.steps.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(std::min(len, steps.size())));
  return w;
}

bool operator<(const CombingWord& a, const CombingWord& b) {
  if (a.start.lattice_coords != b.start.lattice_coords) return a.start.lattice_coords < b.start.lattice_coords;
  return std::lexicographical_compare(a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
                                      [](const WordStep& x, const WordStep& y) {
                                        if (x.etype != y.etype) return x.etype < y.etype;
                                        return x.delta < y.delta;
                                      });
}

CombingWord combing_path(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y, const WeylElement& w) {
  const RatVec v = y.position - x.position;
  const RatVec u = w.matrix.transpose().apply(v);
  if (!is_dominant(rs, u)) throw Error("combing_path: witness does not map y - x to the dominant sector");
  CombingWord word{x, {}};
  for (int i = 1; i <= rs.rank; ++i) {
    const Rational k = inner(u, rs.simple_root(i));
    if (!is_integer(k)) throw Error("combing_path: endpoints are not both special");
    const long reps = k.get_num().get_si();
    if (reps == 0) continue;
    const RatVec step = w.apply(rs.coweight(i));
    const WordStep ws{step, i, lattice_coords_of(rs, step)};
    for (long r = 0; r < reps; ++r) word.steps.push_back(ws);
  }
  return word;
}

CombingWord combing_path(const RootSystem& rs, const SpecialVertex& x, const SpecialVertex& y) {
  if (!is_special(rs, x.position) || !is_special(rs, y.position))
    throw Error("combing_path: not a special vertex");
  const auto rep = dominant_representative(rs, y.position - x.position);
  return combing_path(rs, x, y, rep.witness);
}

std::vector<std::size_t> combing_steps(const SpecialGraph& g, const LatticePoint& delta) {
  // Greedy reduction to the dominant cone, all in integer coweight coordinates.
  LatticePoint cur = delta;
  std::vector<int> applied;
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= g.rank(); ++i)
      if (cur[i - 1] < 0) {
        pick = i;
        break;
      }
    if (pick == 0) break;
    cur = g.reflect(pick, cur);
    applied.push_back(pick);
  }
  std::vector<std::size_t> out;
  for (int i = 1; i <= g.rank(); ++i) {
    if (cur[i - 1] == 0) continue;
    LatticePoint step(g.rank(), 0);
    step[i - 1] = 1;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) step = g.reflect(*it, step);
    const auto idx = g.find_step(step);
    if (!idx) throw Error("combing_steps: step outside the catalog");
    out.insert(out.end(), static_cast<std::size_t>(cur[i - 1]), *idx);
  }
  return out;
}

CombingWord word_from_steps(const SpecialGraph& g, const LatticePoint& start, const std::vector<std::size_t>& idx) {
  CombingWord w{g.vertex(start), {}};
  w.steps.reserve(idx.size());
  for (auto i : idx) {
    const auto& s = g.steps().at(i);
    w.steps.push_back(WordStep{s.vec, s.etype, s.delta});
  }
  return w;
}

bool is_straight(const RatVec& d1, const RatVec& d2) {
  if (d1.dim() != d2.dim() || d1.is_zero() || d2.is_zero()) return false;
  // d2 = t d1 with t > 0, checked coordinate by coordinate.
  Rational t;
  bool have_t = false;
  for (std::size_t i = 0; i < d1.dim(); ++i) {
    if (sgn(d1[i]) == 0) {
      if (sgn(d2[i]) != 0) return false;
      continue;
    }
    const Rational r = d2[i] / d1[i];
    if (!have_t) {
      t = r;
      have_t = true;
    } else if (r != t) {
      return false;
    }
  }
  return have_t && sgn(t) > 0;
}

bool is_local_pair(const RootSystem& rs, const RatVec& d1, int i, const RatVec& d2, int j) {
  if (is_straight(d1, d2)) return true;
  return i < j && inner(d1, d2) == inner(rs.coweight(i), rs.coweight(j));
}

bool is_local_path(const RootSystem& rs, const CombingWord& word) {
  for (const auto& s : word.steps) {
    if (s.etype < 1 || s.etype > rs.rank || edge_type(rs, s.step) != s.etype ||
        !(rs.coweight(s.etype) == dominant_representative(rs, s.step).dominant))
      throw Error("is_local_path: " + to_string(s.step) + " is not a special-graph step of type " +
                  std::to_string(s.etype));
  }
  for (std::size_t k = 1; k < word.steps.size(); ++k) {
    const auto& a = word.steps[k - 1];
    const auto& b = word.steps[k];
    if (!is_local_pair(rs, a.step, a.etype, b.step, b.etype)) return false;
  }
  return true;
}

std::size_t Fsa::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : transitions) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return n;
}

std::vector<std::size_t> Fsa::successors(std::size_t s) const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < states.size(); ++t)
    if (transitions[s][t]) out.push_back(t);
  return out;
}

Fsa build_fsa(const SpecialGraph& g) {
  const auto& rs = g.root_system();
  const auto& st = g.steps();
  Fsa fsa{st, std::vector<std::vector<bool>>(st.size(), std::vector<bool>(st.size(), false))};
  for (std::size_t s = 0; s < st.size(); ++s)
    for (std::size_t t = 0; t < st.size(); ++t) {
      const int i = st[s].etype;
      const int j = st[t].etype;
      fsa.transitions[s][t] = is_straight(st[s].vec, st[t].vec) ||
                              (i < j && g.step_inner(s, t) == inner(rs.coweight(i), rs.coweight(j)));
    }
  return fsa;
}

Fsa build_fsa(const RootSystem& rs) { return build_fsa(SpecialGraph(rs)); }

Fsa build_fsa_by_conjugacy(const SpecialGraph& g, std::span<const WeylElement> group) {
  const auto& rs = g.root_system();
  const auto& st = g.steps();
  Fsa fsa{st, std::vector<std::vector<bool>>(st.size(), std::vector<bool>(st.size(), false))};
  // images[w][i] = index of w omega_i among the steps.
  std::vector<std::vector<std::size_t>> images;
  for (const auto& w : group) {
    std::vector<std::size_t> row;
    for (int i = 1; i <= rs.rank; ++i) row.push_back(*g.find_step(lattice_coords_of(rs, w.apply(rs.coweight(i)))));
    images.push_back(std::move(row));
  }
  for (std::size_t s = 0; s < st.size(); ++s) {
    fsa.transitions[s][s] = true;
    for (std::size_t t = 0; t < st.size(); ++t)
      if (is_straight(st[s].vec, st[t].vec)) fsa.transitions[s][t] = true;
  }
  for (const auto& row : images)
    for (int i = 1; i <= rs.rank; ++i)
      for (int j = i + 1; j <= rs.rank; ++j) fsa.transitions[row[i - 1]][row[j - 1]] = true;
  return fsa;
}

bool fsa_accepts(const Fsa& fsa, const std::vector<std::size_t>& letters) {
  std::vector<bool> current(fsa.state_count(), true);
  for (auto a : letters) {
    if (a >= fsa.state_count() || !current[a]) return false;
    current = fsa.transitions[a];
  }
  return true;
}

bool fsa_accepts(const Fsa& fsa, const CombingWord& word) {
  std::vector<std::size_t> letters;
  for (const auto& s : word.steps) {
    auto it = std::find_if(fsa.states.begin(), fsa.states.end(),
                           [&](const StepClass& c) { return c.delta == s.delta && c.etype == s.etype; });
    if (it == fsa.states.end()) return false;
    letters.push_back(static_cast<std::size_t>(it - fsa.states.begin()));
  }
  return fsa_accepts(fsa, letters);
}

std::vector<std::vector<std::size_t>> fsa_words(const Fsa& fsa, std::size_t length, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  if (length == 0) return {{}};
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t last) -> void {
    if (cur.size() == length) {
      if (out.size() >= cap) throw CapExceeded("fsa_words: more than " + std::to_string(cap) + " words");
      out.push_back(cur);
      return;
    }
    for (std::size_t t = 0; t < fsa.state_count(); ++t) {
      if (!fsa.transitions[last][t]) continue;
      cur.push_back(t);
      self(self, t);
      cur.pop_back();
    }
  };
  for (std::size_t s = 0; s < fsa.state_count(); ++s) {
    cur.assign(1, s);
    if (length == 1) {
      out.push_back(cur);
      continue;
    }
    rec(rec, s);
  }
  return out;
}

std::vector<CombingWord> enumerate_local_paths(const SpecialGraph& g, const SpecialVertex& from, std::size_t length,
                                               std::size_t length_cap, std::size_t count_cap) {
  if (length > length_cap)
    throw CapExceeded("enumerate_local_paths: length " + std::to_string(length) + " exceeds cap " +
                      std::to_string(length_cap));
  const auto& rs = g.root_system();
  const auto& st = g.steps();
  std::vector<CombingWord> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == length) {
      if (out.size() >= count_cap)
        throw CapExceeded("enumerate_local_paths: more than " + std::to_string(count_cap) + " paths");
      out.push_back(word_from_steps(g, from.lattice_coords, cur));
      return;
    }
    for (std::size_t t = 0; t < st.size(); ++t) {
      if (!cur.empty()) {
        const auto& a = st[cur.back()];
        if (!is_local_pair(rs, a.vec, a.etype, st[t].vec, st[t].etype)) continue;
      }
      cur.push_back(t);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CombingWord> enumerate_local_paths(const RootSystem& rs, const SpecialVertex& from, std::size_t length) {
  return enumerate_local_paths(SpecialGraph(rs), from, length);
}

std::string state_label(const StepClass& s) {
  return "(type " + std::to_string(s.etype) + "; " + to_string(s.vec) + ")";
}

std::string to_dot(const Fsa& fsa, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n  rankdir=LR;\n  node [shape=doublecircle];\n";
  for (std::size_t s = 0; s < fsa.state_count(); ++s)
    out += "  s" + std::to_string(s) + " [label=\"" + state_label(fsa.states[s]) + "\"];\n";
  for (std::size_t s = 0; s < fsa.state_count(); ++s)
    for (std::size_t t = 0; t < fsa.state_count(); ++t)
      if (fsa.transitions[s][t]) out += "  s" + std::to_string(s) + " -> s" + std::to_string(t) + ";\n";
  return out + "}\n";
}

nlohmann::json word_to_json(const CombingWord& w) {
  auto arr = nlohmann::json::array();
  for (const auto& s : w.steps) {
    auto v = nlohmann::json::array();
    for (const auto& x : s.step) v.push_back(to_string(x));
    arr.push_back({{"step", v}, {"type", s.etype}});
  }
  return arr;
}

CombingWord word_from_json(const RootSystem& rs, const SpecialVertex& start, const nlohmann::json& j) {
  CombingWord w{start, {}};
  for (const auto& e : j) {
    std::vector<Rational> c;
    for (const auto& x : e.at("step")) {
      Rational q(x.get<std::string>());
      q.canonicalize();
      c.push_back(q);
    }
    RatVec v(std::move(c));
    w.steps.push_back(WordStep{v, e.at("type").get<int>(), lattice_coords_of(rs, v)});
  }
  return w;
}

}  // namespace coxcomb
