#include "coxcomb/verify.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace coxcomb {

int default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t, int)>& fn) {
  if (jobs <= 0) jobs = default_jobs();
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(n, lo + block);
        for (std::size_t i = lo; i < hi; ++i) fn(i, static_cast<int>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

int default_radius(int rank) {
  switch (rank) {
    case 1: return 8;
    case 2: return 6;
    case 3: return 4;
    default: return 3;
  }
}

namespace {

std::vector<LatticePoint> path_vertices(const SpecialGraph& g, const LatticePoint& start,
                                        const std::vector<std::size_t>& idx) {
  std::vector<LatticePoint> out{start};
  for (auto i : idx) out.push_back(out.back() + g.steps()[i].delta);
  return out;
}

std::size_t worker_count(int jobs) { return static_cast<std::size_t>(jobs <= 0 ? default_jobs() : jobs); }

}  // namespace

// ------------------------------------------------------------- fixer lemma

Lemma62Report check_lemma_62(const RootSystem& rs, std::size_t cap) {
  Lemma62Report rep;
  rep.system = rs.name();
  const auto group = enumerate_weyl_group(rs, cap);
  rep.group_order = group.size();
  for (int k = 2; k <= rs.rank; ++k) {
    const RatVec& wk = rs.coweight(k);
    const auto orb = orbit(rs, wk, cap);
    for (int j = 1; j < k; ++j) {
      const std::vector<RatVec> fixed(rs.coweights.begin(), rs.coweights.begin() + j);
      const auto fixers = elements_fixing(group, fixed);
      const Rational target = inner(rs.coweight(j), wk);
      for (const auto& om : orb) {
        if (inner(rs.coweight(j), om) != target) continue;
        ++rep.checks;
        const bool found =
            std::any_of(fixers.begin(), fixers.end(), [&](const WeylElement& w) { return w.apply(wk) == om; });
        if (!found) rep.counterexamples.push_back(Lemma62Witness{j, k, om});
      }
    }
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(), [](const auto& a, const auto& b) {
    if (a.j != b.j) return a.j < b.j;
    if (a.k != b.k) return a.k < b.k;
    return a.omega < b.omega;
  });
  return rep;
}

// ------------------------------------------------------------- local-global

LocalGlobalReport check_local_global(const RootSystem& rs, int radius, int jobs, std::size_t path_cap) {
  const SpecialGraph g(rs);
  const Fsa fsa = build_fsa(g);
  const DistanceTable ball(g, radius);

  LocalGlobalReport rep;
  rep.system = rs.name();
  rep.radius = radius;
  rep.endpoints = ball.points().size();

  std::unordered_map<LatticePoint, std::vector<std::size_t>, LatticePointHash> combing;
  for (const auto& y : ball.points()) {
    auto c = combing_steps(g, y);
    rep.max_length = std::max(rep.max_length, c.size());
    combing.emplace(y, std::move(c));
  }

  struct Local {
    std::size_t paths = 0;
    std::size_t foreign = 0;
    std::unordered_map<LatticePoint, std::vector<std::vector<std::size_t>>, LatticePointHash> hits;
  };
  const std::size_t workers = worker_count(jobs);
  std::vector<Local> acc(workers);
  const std::size_t limit = rep.max_length;

  auto visit = [&](Local& loc, const std::vector<std::size_t>& word, const LatticePoint& end) {
    if (++loc.paths > path_cap) throw CapExceeded("local-global: more than " + std::to_string(path_cap) + " local paths");
    auto it = combing.find(end);
    const bool inside = it != combing.end();
    const auto expected = inside ? it->second : combing_steps(g, end);
    if (word != expected) ++loc.foreign;
    if (inside) loc.hits[end].push_back(word);
  };

  // The empty path ends at 0.
  acc[0].hits[LatticePoint(rs.rank, 0)].push_back({});
  acc[0].paths = 1;

  parallel_for(g.degree(), static_cast<int>(workers), [&](std::size_t first, int w) {
    Local& loc = acc[static_cast<std::size_t>(w)];
    std::vector<std::size_t> word{first};
    LatticePoint end = g.steps()[first].delta;
    std::vector<LatticePoint> ends{end};
    auto rec = [&](auto&& self) -> void {
      visit(loc, word, ends.back());
      if (word.size() == limit) return;
      for (auto t : fsa.successors(word.back())) {
        word.push_back(t);
        ends.push_back(ends.back() + g.steps()[t].delta);
        self(self);
        ends.pop_back();
        word.pop_back();
      }
    };
    if (limit > 0) rec(rec);
  });

  std::unordered_map<LatticePoint, std::vector<std::vector<std::size_t>>, LatticePointHash> hits;
  for (auto& loc : acc) {
    rep.local_paths += loc.paths;
    rep.foreign_paths += loc.foreign;
    for (auto& [y, ws] : loc.hits) {
      auto& dst = hits[y];
      dst.insert(dst.end(), ws.begin(), ws.end());
    }
  }
  for (const auto& y : ball.points()) {
    auto& ws = hits[y];
    std::sort(ws.begin(), ws.end());
    const auto& c = combing.at(y);
    const bool has = std::binary_search(ws.begin(), ws.end(), c);
    if (ws.size() == 1 && has) continue;
    LocalGlobalViolation v{y, ws.size(), fsa_accepts(fsa, c), {}};
    for (const auto& w : ws) {
      if (w == c) continue;
      if (v.others.size() == 4) break;
      v.others.push_back(word_from_steps(g, LatticePoint(rs.rank, 0), w));
    }
    rep.violations.push_back(std::move(v));
  }
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const auto& a, const auto& b) { return a.endpoint < b.endpoint; });
  return rep;
}

// ---------------------------------------------------------------------- ftp

bool FtpReport::stabilized() const {
  for (std::size_t i = 1; i < table.size(); ++i)
    if (table[i].k < table[i - 1].k) return false;
  return table.size() < 2 || table[table.size() - 1].k == table[table.size() - 2].k;
}

namespace {

LatticePoint at_time(const std::vector<LatticePoint>& verts, std::size_t t) {
  return verts[std::min(t, verts.size() - 1)];
}

struct SeparationOracle {
  const SpecialGraph& g;
  const DistanceTable& table;
  int distance(const LatticePoint& delta) const {
    if (auto d = table.distance(delta)) return *d;
    if (auto d = graph_distance(g, LatticePoint(g.rank(), 0), delta, 4 * table.radius() + 8)) return *d;
    throw CapExceeded("ftp: separation beyond search cap");
  }
};

}  // namespace

int ftp_separation(const SpecialGraph& g, const FtpWitness& w, int cap) {
  const auto a = path_vertices(g, w.x, combing_steps(g, w.y - w.x));
  const auto b = path_vertices(g, w.x2, combing_steps(g, w.y2 - w.x2));
  auto d = graph_distance(g, at_time(a, w.t), at_time(b, w.t), cap);
  if (!d) throw CapExceeded("ftp_separation: beyond cap");
  return *d;
}

FtpReport check_ftp(const RootSystem& rs, int radius, int jobs) {
  const SpecialGraph g(rs);
  const DistanceTable ball(g, radius);
  const DistanceTable near(g, std::min(radius + 2, 2 * radius + 1));
  const SeparationOracle sep{g, near};
  const LatticePoint origin(rs.rank, 0);

  std::vector<LatticePoint> starts{origin};
  for (const auto& s : g.steps()) starts.push_back(s.delta);

  const auto& pts = ball.points();
  std::unordered_map<LatticePoint, std::vector<LatticePoint>, LatticePointHash> from0;
  for (const auto& y : pts) from0.emplace(y, path_vertices(g, origin, combing_steps(g, y)));

  struct Best {
    int sep = -1;
    std::size_t order = 0;  // global pair order, for deterministic ties
    FtpWitness w;
  };
  struct Local {
    std::vector<std::size_t> pairs;
    std::vector<int> k, k_same;
    Best best;
    Rational e2;
  };
  const std::size_t workers = worker_count(jobs);
  std::vector<Local> acc(workers);
  for (auto& l : acc) {
    l.pairs.assign(static_cast<std::size_t>(radius) + 1, 0);
    l.k.assign(static_cast<std::size_t>(radius) + 1, 0);
    l.k_same.assign(static_cast<std::size_t>(radius) + 1, 0);
  }
  parallel_for(pts.size(), static_cast<int>(workers), [&](std::size_t iy, int wkr) {
    Local& loc = acc[static_cast<std::size_t>(wkr)];
    const LatticePoint& y = pts[iy];
    const int dy = *ball.distance(y);
    const auto& alpha = from0.at(y);
    for (std::size_t iy2 = 0; iy2 <= g.degree(); ++iy2) {
      const LatticePoint y2 = iy2 == 0 ? y : y + g.steps()[iy2 - 1].delta;
      const auto dy2 = ball.distance(y2);
      if (!dy2) continue;
      const auto level = static_cast<std::size_t>(std::max(dy, *dy2));
      for (std::size_t ix = 0; ix < starts.size(); ++ix) {
        const LatticePoint& x2 = starts[ix];
        const auto beta = ix == 0 ? from0.at(y2) : path_vertices(g, x2, combing_steps(g, y2 - x2));
        const std::size_t span = std::max(alpha.size(), beta.size());
        int worst = 0;
        std::size_t worst_t = 0;
        for (std::size_t t = 0; t < span; ++t) {
          const int d = sep.distance(at_time(beta, t) - at_time(alpha, t));
          if (d > worst) {
            worst = d;
            worst_t = t;
          }
        }
        ++loc.pairs[level];
        loc.k[level] = std::max(loc.k[level], worst);
        if (ix == 0) loc.k_same[level] = std::max(loc.k_same[level], worst);
        const std::size_t order = (iy * (g.degree() + 1) + iy2) * starts.size() + ix;
        if (worst > loc.best.sep || (worst == loc.best.sep && order < loc.best.order)) {
          loc.best.sep = worst;
          loc.best.order = order;
          loc.best.w = FtpWitness{origin, x2, y, y2, worst_t, worst};
        }
        for (std::size_t t = 0; t < span; ++t) {
          const Rational e2 = g.norm2(at_time(beta, t) - at_time(alpha, t));
          if (e2 > loc.e2) loc.e2 = e2;
        }
      }
    }
  });

  FtpReport rep;
  rep.system = rs.name();
  rep.radius = radius;
  std::vector<std::size_t> pairs(static_cast<std::size_t>(radius) + 1, 0);
  std::vector<int> k(pairs.size(), 0), ks(pairs.size(), 0);
  Best best;
  Rational e2max;
  for (const auto& l : acc) {
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      pairs[r] += l.pairs[r];
      k[r] = std::max(k[r], l.k[r]);
      ks[r] = std::max(ks[r], l.k_same[r]);
    }
    if (l.best.sep > best.sep || (l.best.sep == best.sep && l.best.order < best.order)) best = l.best;
    e2max = std::max(e2max, l.e2);
  }
  std::size_t cum_pairs = 0;
  int cum_k = 0, cum_ks = 0;
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    cum_pairs += pairs[r];
    cum_k = std::max(cum_k, k[r]);
    cum_ks = std::max(cum_ks, ks[r]);
    rep.table.push_back(FtpLevel{static_cast<int>(r), cum_pairs, cum_k, cum_ks});
  }
  rep.pair_count = cum_pairs;
  rep.max_separation = cum_k;
  rep.max_separation_euclid2 = e2max;
  rep.witness = best.w;
  return rep;
}

// ------------------------------------------------------------ quasi-metrics

bool QuasiReport::holds() const {
  if (points == 0) return true;
  return combing.min >= 1 && sgn(euclid2.min) > 0 && euclid2.max <= euclid2_bound && sgn(fine.min) > 0 &&
         fine.max <= Rational(fine_bound);
}

QuasiReport check_quasi_constants(const RootSystem& rs, int radius, int jobs) {
  const SpecialGraph g(rs);
  const DistanceTable ball(g, radius);
  const auto group = enumerate_weyl_group(rs);
  const FineSkeleton fine(rs, group);

  QuasiReport rep;
  rep.system = rs.name();
  rep.radius = radius;
  rep.fine_bound = *std::max_element(rs.marks.begin(), rs.marks.end());
  rep.euclid2_bound = 0;
  for (const auto& w : rs.coweights) rep.euclid2_bound = std::max(rep.euclid2_bound, norm2(w));

  const auto fdist = fine.ball(rep.fine_bound * radius);

  struct Sample {
    std::size_t comb = 0;
    int d = 0;
    Rational e2;
    int fine = 0;
  };
  const auto& pts = ball.points();
  std::vector<Sample> samples(pts.size());
  parallel_for(pts.size(), jobs, [&](std::size_t i, int) {
    const auto& y = pts[i];
    Sample s;
    s.d = *ball.distance(y);
    s.comb = combing_steps(g, y).size();
    s.e2 = g.norm2(y);
    auto it = fdist.find(fine.scaled_from_lattice(y));
    if (it == fdist.end()) throw CapExceeded("quasi: fine distance beyond search radius at " + to_string(y));
    s.fine = it->second;
    samples[i] = std::move(s);
  });

  bool first = true;
  auto update = [](RatioRange& r, const Rational& v, const LatticePoint& y, bool init) {
    if (init) {
      r.min = v;
      r.max = v;
      r.argmax = y;
      return;
    }
    if (v < r.min) r.min = v;
    if (v > r.max) {
      r.max = v;
      r.argmax = y;
    }
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& s = samples[i];
    if (s.d == 0) continue;
    ++rep.points;
    if (s.comb == static_cast<std::size_t>(s.d)) ++rep.geodesic;
    const Rational d(s.d);
    update(rep.combing, Rational(static_cast<long>(s.comb)) / d, pts[i], first);
    update(rep.euclid2, s.e2 / (d * d), pts[i], first);
    update(rep.fine, Rational(s.fine) / d, pts[i], first);
    first = false;
  }
  return rep;
}

// ------------------------------------------------------- uniqueness and hull

UniquenessReport check_uniqueness_and_hull(const RootSystem& rs, int radius, int jobs) {
  const SpecialGraph g(rs);
  const Fsa fsa = build_fsa(g);
  const DistanceTable ball(g, radius);
  const auto group = enumerate_weyl_group(rs);
  const SpecialVertex origin = g.vertex(LatticePoint(rs.rank, 0));

  struct Local {
    std::size_t walls = 0, max_w = 0, words = 0, hull = 0;
    std::vector<UniquenessViolation> bad;
  };
  const std::size_t workers = worker_count(jobs);
  std::vector<Local> acc(workers);
  const auto& pts = ball.points();

  parallel_for(pts.size(), static_cast<int>(workers), [&](std::size_t i, int wkr) {
    Local& loc = acc[static_cast<std::size_t>(wkr)];
    const auto& yc = pts[i];
    const SpecialVertex y = g.vertex(yc);
    const CombingWord word = combing_path(rs, origin, y);
    auto flag = [&](const char* what) { loc.bad.push_back(UniquenessViolation{yc, what}); };

    if (word.end_coords() != yc) flag("endpoint");
    const auto dom = dominant_representative(rs, y.position);
    std::int64_t total = 0;
    for (auto k : lattice_coords_of(rs, dom.dominant)) total += k;
    if (static_cast<std::int64_t>(word.length()) != total) flag("length");
    if (!is_local_path(rs, word)) flag("local");
    for (std::size_t p = 0; p <= word.length(); ++p)
      if (!fsa_accepts(fsa, word.prefix(p))) {
        flag("fsa");
        break;
      }
    const auto box = hull_box(rs, origin, y);
    bool inside = true;
    for (const auto& v : word.vertex_coords()) {
      ++loc.hull;
      if (!box.contains(g.vertex(v).position)) inside = false;
    }
    if (!inside) flag("hull");
    const auto ws = dominance_witnesses(rs, group, y.position);
    loc.max_w = std::max(loc.max_w, ws.size());
    if (ws.size() > 1) ++loc.walls;
    bool same = true;
    for (const auto& w : ws) {
      ++loc.words;
      if (!(combing_path(rs, origin, y, w) == word)) same = false;
    }
    if (!same) flag("witness");
  });

  UniquenessReport rep;
  rep.system = rs.name();
  rep.radius = radius;
  rep.endpoints = pts.size();
  for (auto& l : acc) {
    rep.wall_endpoints += l.walls;
    rep.max_witnesses = std::max(rep.max_witnesses, l.max_w);
    rep.witness_words += l.words;
    rep.hull_checks += l.hull;
    rep.violations.insert(rep.violations.end(), l.bad.begin(), l.bad.end());
  }
  std::sort(rep.violations.begin(), rep.violations.end(), [](const auto& a, const auto& b) {
    if (a.endpoint != b.endpoint) return a.endpoint < b.endpoint;
    return a.property < b.property;
  });
  return rep;
}

// -------------------------------------------------------------- fsa vs paths

bool LanguageReport::holds() const {
  return std::all_of(mismatches.begin(), mismatches.end(), [](std::size_t m) { return m == 0; });
}

LanguageReport check_fsa_language(const RootSystem& rs, std::size_t max_length) {
  const SpecialGraph g(rs);
  const Fsa fsa = build_fsa(g);
  const LatticePoint origin(rs.rank, 0);
  const SpecialVertex from = g.vertex(origin);

  LanguageReport rep;
  rep.system = rs.name();
  rep.max_length = max_length;
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::set<std::vector<LatticePoint>> accepted;
    for (const auto& letters : fsa_words(fsa, len, kDefaultPathCap)) accepted.insert(path_vertices(g, origin, letters));
    std::set<std::vector<LatticePoint>> local;
    for (const auto& w : enumerate_local_paths(g, from, len)) local.insert(w.vertex_coords());
    std::vector<std::vector<LatticePoint>> diff;
    std::set_symmetric_difference(accepted.begin(), accepted.end(), local.begin(), local.end(),
                                  std::back_inserter(diff));
    rep.fsa_words.push_back(accepted.size());
    rep.local_paths.push_back(local.size());
    rep.mismatches.push_back(diff.size());
  }
  return rep;
}

// --------------------------------------------------------------------- json

namespace {

nlohmann::json vec_json(const RatVec& v) {
  auto a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

nlohmann::json rat_json(const Rational& q) { return {{"exact", to_string(q)}, {"approx", q.get_d()}}; }

nlohmann::json range_json(const RatioRange& r) {
  return {{"min", rat_json(r.min)}, {"max", rat_json(r.max)}, {"argmax", r.argmax}};
}

}  // namespace

nlohmann::json to_json(const Lemma62Report& r) {
  auto ce = nlohmann::json::array();
  for (const auto& c : r.counterexamples) ce.push_back({{"j", c.j}, {"k", c.k}, {"omega", vec_json(c.omega)}});
  return {{"system", r.system},
          {"status", r.holds() ? "holds" : "fails"},
          {"group_order", r.group_order},
          {"checks", r.checks},
          {"counterexamples", ce}};
}

nlohmann::json to_json(const LocalGlobalReport& r) {
  auto v = nlohmann::json::array();
  for (const auto& x : r.violations) {
    auto others = nlohmann::json::array();
    for (const auto& w : x.others) others.push_back(word_to_json(w));
    v.push_back({{"endpoint", x.endpoint},
                 {"local_paths", x.local_paths},
                 {"combing_is_local", x.combing_is_local},
                 {"other_paths", others}});
  }
  return {{"system", r.system},
          {"status", r.holds() ? "holds" : "fails"},
          {"radius", r.radius},
          {"max_length", r.max_length},
          {"endpoints", r.endpoints},
          {"local_paths", r.local_paths},
          {"foreign_paths", r.foreign_paths},
          {"violations", v}};
}

nlohmann::json to_json(const FtpReport& r) {
  auto t = nlohmann::json::array();
  for (const auto& l : r.table)
    t.push_back({{"radius", l.radius}, {"pairs", l.pairs}, {"k", l.k}, {"k_same_start", l.k_same_start}});
  return {{"system", r.system},
          {"radius", r.radius},
          {"pair_count", r.pair_count},
          {"max_separation", r.max_separation},
          {"max_separation_euclid2", rat_json(r.max_separation_euclid2)},
          {"stabilized", r.stabilized()},
          {"witness",
           {{"x", r.witness.x},
            {"x2", r.witness.x2},
            {"y", r.witness.y},
            {"y2", r.witness.y2},
            {"t", r.witness.t},
            {"separation", r.witness.separation}}},
          {"table", t}};
}

nlohmann::json to_json(const QuasiReport& r) {
  return {{"system", r.system},
          {"status", r.holds() ? "holds" : "fails"},
          {"radius", r.radius},
          {"points", r.points},
          {"geodesic", r.geodesic},
          {"combing_over_dspec", range_json(r.combing)},
          {"euclid2_over_dspec2", range_json(r.euclid2)},
          {"euclid2_bound", rat_json(r.euclid2_bound)},
          {"dfine_over_dspec", range_json(r.fine)},
          {"dfine_bound", r.fine_bound}};
}

nlohmann::json to_json(const UniquenessReport& r) {
  auto v = nlohmann::json::array();
  for (const auto& x : r.violations) v.push_back({{"endpoint", x.endpoint}, {"property", x.property}});
  return {{"system", r.system},
          {"status", r.holds() ? "holds" : "fails"},
          {"radius", r.radius},
          {"endpoints", r.endpoints},
          {"wall_endpoints", r.wall_endpoints},
          {"max_witnesses", r.max_witnesses},
          {"witness_words", r.witness_words},
          {"hull_checks", r.hull_checks},
          {"violations", v}};
}

nlohmann::json to_json(const LanguageReport& r) {
  return {{"system", r.system},
          {"status", r.holds() ? "holds" : "fails"},
          {"max_length", r.max_length},
          {"fsa_words", r.fsa_words},
          {"local_paths", r.local_paths},
          {"mismatches", r.mismatches}};
}

}  // namespace coxcomb
