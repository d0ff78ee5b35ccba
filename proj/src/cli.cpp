#include "coxcomb/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxcomb/verify.hpp"

namespace coxcomb {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string kind;
  int rank = 0;
  int radius = 0;  // 0: default for the rank
  std::size_t length = kDefaultLengthCap;
  int jobs = 0;
  std::string format;
  std::string out;
};

RootSystem load_system(const RunConfig& cfg) {
  try {
    return build_root_system(parse_kind(cfg.kind), cfg.rank);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int radius_of(const RunConfig& cfg, int rank) {
  if (cfg.radius < 0) throw UsageError("--radius must be nonnegative");
  return cfg.radius == 0 ? default_radius(rank) : cfg.radius;
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed, const char* cmd) {
  for (const char* a : allowed)
    if (fmt == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError(std::string("format '") + fmt + "' is not available for " + cmd + " (use " + list + ")");
}

std::vector<long> parse_coords(const std::string& text, int rank, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    long v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size()) {
      // Rationals and decimals are legal coordinates but never lattice points.
      if (item.find_first_of("/.") != std::string::npos) throw UsageError("not a special vertex: " + text);
      throw UsageError(std::string("cannot parse ") + what + " coordinate '" + item + "'");
    }
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != rank)
    throw UsageError(std::string(what) + " needs " + std::to_string(rank) + " comma-separated coweight coordinates");
  return out;
}

LatticePoint to_lattice(const std::vector<long>& v) { return LatticePoint(v.begin(), v.end()); }

json vec_json(const RatVec& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json envelope(const std::string& suite, const RootSystem& rs, json params, json result, json witnesses) {
  return {{"suite", suite},
          {"kind", std::string(1, kind_letter(rs.kind))},
          {"rank", rs.rank},
          {"params", std::move(params)},
          {"result", std::move(result)},
          {"witnesses", std::move(witnesses)}};
}

// ------------------------------------------------------------- text output

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("exact")) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v.at("approx").get<double>());
    return v.at("exact").get<std::string>() + " (~" + buf + ")";
  }
  return v.dump();
}

bool is_table(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); });
}

void table_text(std::ostream& os, const json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) cols.push_back(it.key());
  std::vector<std::size_t> width(cols.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? scalar_text(r.at(cols[c])) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& l : cells) emit(l);
}

void object_text(std::ostream& os, const json& obj, const std::string& indent) {
  std::size_t w = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it) w = std::max(w, it.key().size());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const json& v = it.value();
    const std::string pad(w - it.key().size() + 2, ' ');
    if (is_table(v)) {
      os << indent << it.key() << '\n';
      table_text(os, v, indent + "  ");
    } else if (v.is_object() && !v.contains("exact")) {
      os << indent << it.key() << '\n';
      object_text(os, v, indent + "  ");
    } else if (v.is_array() && v.empty()) {
      os << indent << it.key() << pad << "none\n";
    } else {
      os << indent << it.key() << pad << scalar_text(v) << '\n';
    }
  }
}

std::string report_text(const json& doc) {
  std::ostringstream os;
  os << doc.at("suite").get<std::string>() << ' ' << doc.at("kind").get<std::string>() << doc.at("rank") << '\n';
  json body = doc.at("result");
  if (body.contains("status")) os << "status  " << body.at("status").get<std::string>() << '\n';
  body.erase("status");
  object_text(os, doc.at("params"), "  ");
  object_text(os, body, "");
  if (!doc.at("witnesses").empty()) {
    os << "witnesses\n";
    if (is_table(doc.at("witnesses"))) table_text(os, doc.at("witnesses"), "  ");
    else
      for (const auto& w : doc.at("witnesses")) os << "  " << w.dump() << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------- subcommands

struct Outcome {
  std::string text;
  int code = kExitPass;
};

Outcome cmd_info(const RunConfig& cfg) {
  const auto rs = load_system(cfg);
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  require_format(fmt, {"text", "json"}, "info");
  const SpecialGraph g(rs);
  const auto group = enumerate_weyl_group(rs);
  const auto alcove = standard_alcove(rs);

  if (fmt == "json") {
    json roots = json::array(), simple = json::array(), cw = json::array(), alc = json::array();
    for (const auto& r : rs.roots) roots.push_back(vec_json(r));
    for (const auto& r : rs.simple_roots) simple.push_back(vec_json(r));
    for (const auto& r : rs.coweights) cw.push_back(vec_json(r));
    for (const auto& r : alcove) alc.push_back(vec_json(r));
    json result = {{"roots", roots},
                   {"root_count", rs.roots.size()},
                   {"simple_roots", simple},
                   {"highest_root", vec_json(rs.highest_root)},
                   {"marks", rs.marks},
                   {"coweights", cw},
                   {"weyl_order", group.size()},
                   {"alcove", alc},
                   {"degree", g.degree()}};
    return {envelope("info", rs, json::object(), result, json::array()).dump(2) + "\n"};
  }

  std::ostringstream os;
  os << "system        " << rs.name() << '\n';
  os << "ambient dim   " << rs.ambient_dim << '\n';
  os << "roots         " << rs.roots.size() << '\n';
  for (const auto& r : rs.roots) os << "  " << to_string(r) << "  " << eps_string(rs, r) << '\n';
  os << "simple roots\n";
  for (int i = 1; i <= rs.rank; ++i)
    os << "  alpha_" << i << "  " << to_string(rs.simple_root(i)) << "  " << eps_string(rs, rs.simple_root(i)) << '\n';
  os << "highest root  " << to_string(rs.highest_root) << "  " << eps_string(rs, rs.highest_root) << '\n';
  os << "marks        ";
  for (int c : rs.marks) os << ' ' << c;
  os << '\n';
  os << "coweights\n";
  for (int i = 1; i <= rs.rank; ++i)
    os << "  omega_" << i << "  " << to_string(rs.coweight(i)) << "  " << eps_string(rs, rs.coweight(i)) << '\n';
  os << "|W|           " << group.size() << '\n';
  os << "alcove        ";
  for (std::size_t i = 0; i < alcove.size(); ++i) os << (i ? ", " : "") << eps_string(rs, alcove[i]);
  os << '\n';
  os << "degree        " << g.degree() << '\n';
  return {os.str()};
}

Outcome cmd_comb(const RunConfig& cfg, const std::string& from_s, const std::string& to_s) {
  const auto rs = load_system(cfg);
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  require_format(fmt, {"text", "json"}, "comb");
  const SpecialGraph g(rs);
  const auto x = g.vertex(to_lattice(parse_coords(from_s, rs.rank, "--from")));
  const auto y = g.vertex(to_lattice(parse_coords(to_s, rs.rank, "--to")));
  const CombingWord word = combing_path(rs, x, y);
  const HullBox box = hull_box(rs, x, y);

  if (fmt == "json") {
    json extents = json::array();
    for (const auto& [e, m] : box.frame) extents.push_back({{"direction", vec_json(e)}, {"extent", to_string(m)}});
    json verts = json::array();
    for (const auto& v : word.vertex_coords()) verts.push_back(v);
    json result = {{"length", word.length()},
                   {"steps", word_to_json(word)},
                   {"vertices", verts},
                   {"hull", extents}};
    json params = {{"from", x.lattice_coords}, {"to", y.lattice_coords}};
    return {envelope("comb", rs, params, result, json::array()).dump(2) + "\n"};
  }

  std::ostringstream os;
  os << "system  " << rs.name() << '\n';
  os << "from    " << to_string(x.lattice_coords) << '\n';
  os << "to      " << to_string(y.lattice_coords) << '\n';
  os << "length  " << word.length() << '\n';
  for (std::size_t i = 0; i < word.steps.size(); ++i) {
    const auto& s = word.steps[i];
    os << "  " << i + 1 << "  type " << s.etype << "  " << to_string(s.delta) << "  " << eps_string(rs, s.step) << '\n';
  }
  os << "hull extents ";
  for (const auto& [e, m] : box.frame) os << ' ' << to_string(m);
  os << '\n';
  for (std::size_t i = 0; i < box.frame.size(); ++i)
    os << "  e_" << i + 1 << "  " << eps_string(rs, box.frame[i].first) << "  extent " << to_string(box.frame[i].second)
       << '\n';
  return {os.str()};
}

json extract(json& result, const char* key) {
  json w = result.contains(key) ? result.at(key) : json::array();
  result.erase(key);
  return w;
}

Outcome cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const auto rs = load_system(cfg);
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  if (suite == "ftp") require_format(fmt, {"text", "json", "csv"}, "verify ftp");
  else require_format(fmt, {"text", "json"}, ("verify " + suite).c_str());
  if (cfg.length == 0) throw UsageError("--length must be positive");
  const bool d_kind = rs.kind == Kind::D;

  json params = json::object();
  json result, witnesses;
  bool pass = true;
  std::string csv;

  if (suite == "lemma62") {
    const auto rep = check_lemma_62(rs);
    result = to_json(rep);
    witnesses = extract(result, "counterexamples");
    if (d_kind) {
      result["status"] = rep.holds() ? "holds (unexpected)" : "fails (expected)";
      pass = !rep.holds();
    } else {
      pass = rep.holds();
    }
  } else if (suite == "local-global") {
    const int r = radius_of(cfg, rs.rank);
    params = {{"radius", r}, {"length_cap", cfg.length}, {"jobs", cfg.jobs}};
    const auto rep = check_local_global(rs, r, cfg.jobs);
    if (rep.max_length > cfg.length)
      throw CapExceeded("local-global: combing length " + std::to_string(rep.max_length) + " exceeds --length " +
                        std::to_string(cfg.length));
    result = to_json(rep);
    witnesses = extract(result, "violations");
    if (d_kind) {
      if (!rep.holds()) result["status"] = "fails (expected)";
      pass = true;
    } else {
      pass = rep.holds();
    }
  } else if (suite == "ftp") {
    const int r = radius_of(cfg, rs.rank);
    params = {{"radius", r}, {"jobs", cfg.jobs}};
    const auto rep = check_ftp(rs, r, cfg.jobs);
    result = to_json(rep);
    result["status"] = rep.stabilized() ? "stabilized" : "not stabilized";
    witnesses = json::array({extract(result, "witness")});
    pass = rep.stabilized();
    csv = "kind,rank,radius,pairs,k,k_same_start\n";
    for (const auto& l : rep.table)
      csv += std::string(1, kind_letter(rs.kind)) + "," + std::to_string(rs.rank) + "," + std::to_string(l.radius) +
             "," + std::to_string(l.pairs) + "," + std::to_string(l.k) + "," + std::to_string(l.k_same_start) + "\n";
  } else if (suite == "quasi") {
    const int r = radius_of(cfg, rs.rank);
    params = {{"radius", r}, {"jobs", cfg.jobs}};
    const auto rep = check_quasi_constants(rs, r, cfg.jobs);
    result = to_json(rep);
    witnesses = json::array();
    for (const char* key : {"combing_over_dspec", "euclid2_over_dspec2", "dfine_over_dspec"})
      witnesses.push_back({{"ratio", key}, {"argmax", result.at(key).at("argmax")}});
    pass = rep.holds();
  } else if (suite == "uniqueness") {
    const int r = radius_of(cfg, rs.rank);
    params = {{"radius", r}, {"jobs", cfg.jobs}};
    const auto rep = check_uniqueness_and_hull(rs, r, cfg.jobs);
    result = to_json(rep);
    witnesses = extract(result, "violations");
    pass = rep.holds();
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }

  // Counterexample vectors read better in epsilon notation.
  if (suite == "lemma62")
    for (auto& w : witnesses) {
      std::vector<Rational> c;
      for (const auto& s : w.at("omega")) c.emplace_back(s.get<std::string>());
      for (auto& q : c) q.canonicalize();
      w["omega_eps"] = eps_string(rs, RatVec(std::move(c)));
    }

  const json doc = envelope(suite, rs, params, result, witnesses);
  Outcome o;
  o.code = pass ? kExitPass : kExitFail;
  if (fmt == "json") o.text = doc.dump(2) + "\n";
  else if (fmt == "csv") o.text = csv;
  else o.text = report_text(doc);
  return o;
}

Outcome cmd_fsa(const RunConfig& cfg, std::ostream& out) {
  const auto rs = load_system(cfg);
  const std::string fmt = cfg.format.empty() ? "dot" : cfg.format;
  require_format(fmt, {"dot", "json", "text"}, "fsa");
  const SpecialGraph g(rs);
  const Fsa fsa = build_fsa(g);
  Outcome o;
  const std::string counts =
      "states " + std::to_string(fsa.state_count()) + ", transitions " + std::to_string(fsa.transition_count());
  if (fmt == "dot") {
    o.text = "// " + rs.name() + ": " + counts + "\n" + to_dot(fsa, rs.name());
  } else if (fmt == "json") {
    json states = json::array(), trans = json::array();
    for (const auto& s : fsa.states)
      states.push_back({{"type", s.etype}, {"step", vec_json(s.vec)}, {"label", state_label(s)}});
    for (std::size_t s = 0; s < fsa.state_count(); ++s)
      for (auto t : fsa.successors(s)) trans.push_back({s, t});
    json result = {{"state_count", fsa.state_count()},
                   {"transition_count", fsa.transition_count()},
                   {"states", states},
                   {"transitions", trans}};
    o.text = envelope("fsa", rs, json::object(), result, json::array()).dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << rs.name() << ": " << counts << '\n';
    for (std::size_t s = 0; s < fsa.state_count(); ++s) {
      os << "  " << s << "  " << state_label(fsa.states[s]) << "  ->";
      for (auto t : fsa.successors(s)) os << ' ' << t;
      os << '\n';
    }
    o.text = os.str();
  }
  if (!cfg.out.empty()) out << rs.name() << ": " << counts << '\n';
  return o;
}

Outcome cmd_plot(const RunConfig& cfg, const std::vector<std::string>& path_specs, int corridor) {
  const auto rs = load_system(cfg);
  if (rs.rank != 2) throw UsageError("plot needs a rank-2 system, got " + rs.name());
  const std::string fmt = cfg.format.empty() ? "svg" : cfg.format;
  require_format(fmt, {"svg"}, "plot");
  if (corridor < 0) throw UsageError("--corridor must be nonnegative");
  std::vector<std::pair<std::vector<long>, std::vector<long>>> paths;
  for (const auto& p : path_specs) {
    const auto colon = p.find(':');
    if (colon == std::string::npos) throw UsageError("--path expects FROM:TO, e.g. 0,0:2,1");
    paths.emplace_back(parse_coords(p.substr(0, colon), 2, "--path"), parse_coords(p.substr(colon + 1), 2, "--path"));
  }
  return {render_svg(rs, cfg.radius == 0 ? 3 : radius_of(cfg, 2), paths, corridor)};
}

}  // namespace

// ------------------------------------------------------------------ helpers

std::string eps_string(const RootSystem& rs, const RatVec& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  const int base = rs.kind == Kind::A ? 0 : 1;
  std::string s;
  int terms = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const mpz_class n = mpz_class(v[i] * Rational(den));
    if (n == 0) continue;
    const bool neg = n < 0;
    const mpz_class a = neg ? mpz_class(-n) : n;
    if (neg) s += "-";
    else if (terms) s += "+";
    if (a != 1) s += a.get_str();
    s += "\xCE\xB5_" + std::to_string(static_cast<int>(i) + base);
    ++terms;
  }
  if (terms == 0) return "0";
  if (den == 1) return s;
  return (terms > 1 ? "(" + s + ")" : s) + "/" + den.get_str();
}

std::string render_svg(const RootSystem& rs, int radius,
                       const std::vector<std::pair<std::vector<long>, std::vector<long>>>& paths, int corridor) {
  if (rs.rank != 2) throw Error("render_svg: rank-2 systems only");
  const SpecialGraph g(rs);
  const DistanceTable ball(g, radius);

  // Orthonormal frame of V; doubles only from here on.
  std::vector<std::vector<double>> frame;
  if (rs.kind == Kind::A) {
    frame = {{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0}, {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)}};
  } else {
    frame = {{1, 0}, {0, 1}};
  }
  auto project = [&](const RatVec& v) {
    std::array<double, 2> p{0, 0};
    for (int a = 0; a < 2; ++a)
      for (std::size_t i = 0; i < v.dim(); ++i) p[a] += frame[a][i] * v[i].get_d();
    return p;
  };
  auto at = [&](const LatticePoint& c) { return project(g.vertex(c).position); };

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& c : ball.points()) {
    const auto p = at(c);
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  const double margin = 0.5;
  lo_x -= margin, hi_x += margin, lo_y -= margin, hi_y += margin;
  const double px = 60;
  const double width = (hi_x - lo_x) * px, height = (hi_y - lo_y) * px;

  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 5e-3 ? 0.0 : v);
    return std::string(buf);
  };
  auto sx = [&](double x) { return fmt((x - lo_x) * px); };
  auto sy = [&](double y) { return fmt((hi_y - y) * px); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  os << "<title>" << rs.name() << " alcoves, radius " << radius << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Walls (alpha, lambda) = k for positive roots alpha.
  os << "<g stroke=\"#9a9a9a\" stroke-width=\"0.8\">\n";
  for (const auto& alpha : rs.roots) {
    const auto coeff = expand_in_simple_roots(rs, alpha);
    if (std::any_of(coeff.begin(), coeff.end(), [](const Rational& q) { return sgn(q) < 0; })) continue;
    const auto a = project(alpha);
    const std::array<std::array<double, 2>, 4> corners{{{lo_x, lo_y}, {hi_x, lo_y}, {hi_x, hi_y}, {lo_x, hi_y}}};
    double mn = 1e300, mx = -1e300;
    for (const auto& c : corners) {
      const double v = a[0] * c[0] + a[1] * c[1];
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    for (long k = static_cast<long>(std::ceil(mn)); k <= static_cast<long>(std::floor(mx)); ++k) {
      std::vector<std::array<double, 2>> hits;
      for (int e = 0; e < 4; ++e) {
        const auto& p = corners[e];
        const auto& q = corners[(e + 1) % 4];
        const double fp = a[0] * p[0] + a[1] * p[1] - k, fq = a[0] * q[0] + a[1] * q[1] - k;
        if ((fp < 0) == (fq < 0) && fp != 0) continue;
        if (fp == fq) continue;
        const double t = fp / (fp - fq);
        const std::array<double, 2> h{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
        if (std::none_of(hits.begin(), hits.end(), [&](const auto& o) {
              return std::abs(o[0] - h[0]) < 1e-9 && std::abs(o[1] - h[1]) < 1e-9;
            }))
          hits.push_back(h);
      }
      if (hits.size() < 2) continue;
      os << "  <line x1=\"" << sx(hits[0][0]) << "\" y1=\"" << sy(hits[0][1]) << "\" x2=\"" << sx(hits[1][0])
         << "\" y2=\"" << sy(hits[1][1]) << "\"/>\n";
    }
  }
  os << "</g>\n";

  static const char* palette[] = {"#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#117a65"};
  if (corridor > 0 && !paths.empty()) {
    const DistanceTable near(g, corridor);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto word = combing_path(rs, g.vertex(to_lattice(paths[i].first)), g.vertex(to_lattice(paths[i].second)));
      std::set<LatticePoint> band;
      for (const auto& v : word.vertex_coords())
        for (const auto& q : near.points()) band.insert(v + q);
      os << "<g fill=\"" << palette[i % 6] << "\" fill-opacity=\"0.15\">\n";
      for (const auto& c : band) {
        const auto p = at(c);
        os << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"9\"/>\n";
      }
      os << "</g>\n";
    }
  }

  os << "<g fill=\"black\">\n";
  auto sorted = ball.points();
  std::sort(sorted.begin(), sorted.end());
  for (const auto& c : sorted) {
    const auto p = at(c);
    os << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"2.5\"/>\n";
  }
  os << "</g>\n";

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto word = combing_path(rs, g.vertex(to_lattice(paths[i].first)), g.vertex(to_lattice(paths[i].second)));
    os << "<g stroke=\"" << palette[i % 6] << "\" fill=\"" << palette[i % 6] << "\">\n";
    os << "  <polyline fill=\"none\" stroke-width=\"2.5\" points=\"";
    bool first = true;
    for (const auto& v : word.vertex_coords()) {
      const auto p = at(v);
      os << (first ? "" : " ") << sx(p[0]) << ',' << sy(p[1]);
      first = false;
    }
    os << "\"/>\n";
    const auto s = at(word.start.lattice_coords);
    const auto e = at(word.end_coords());
    os << "  <circle cx=\"" << sx(s[0]) << "\" cy=\"" << sy(s[1]) << "\" r=\"4.5\"/>\n";
    os << "  <rect x=\"" << fmt((e[0] - lo_x) * px - 4.5) << "\" y=\"" << fmt((hi_y - e[1]) * px - 4.5)
       << "\" width=\"9\" height=\"9\"/>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------- dispatch

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combings of Euclidean Coxeter complexes: construction, automata and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("kind", cfg.kind, "Root system kind: A, B, C or D")->required();
    sub->add_option("rank", cfg.rank, "Rank n")->required();
  };
  auto add_output = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", cfg.format, "Output format: " + formats);
    sub->add_option("--out", cfg.out, "Write the output to this file instead of stdout");
  };

  auto* info = app.add_subcommand("info", "Root data, Weyl group order, alcove and special-graph degree");
  add_system(info);
  add_output(info, "text | json");

  std::string from_s, to_s;
  auto* comb = app.add_subcommand("comb", "Combing path between two special vertices");
  add_system(comb);
  comb->add_option("--from", from_s, "Start in coweight coordinates, e.g. 0,0 (use --from=-1,2 for negatives)")
      ->required();
  comb->add_option("--to", to_s, "End in coweight coordinates")->required();
  add_output(comb, "text | json");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "ftp | local-global | lemma62 | quasi | uniqueness")
      ->required()
      ->check(CLI::IsMember({"ftp", "local-global", "lemma62", "quasi", "uniqueness"}));
  add_system(verify);
  verify->add_option("--radius", cfg.radius, "Ball radius in the special graph (default by rank: 6, 4, 3)");
  verify->add_option("--length", cfg.length, "Cap on local-path length");
  verify->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)");
  add_output(verify, "text | json | csv (ftp only)");

  auto* fsa = app.add_subcommand("fsa", "Export the automaton over special-edge classes");
  add_system(fsa);
  add_output(fsa, "dot | json | text");

  std::vector<std::string> path_specs;
  int corridor = 0;
  auto* plot = app.add_subcommand("plot", "SVG of a rank-2 alcove tessellation with combing paths");
  add_system(plot);
  plot->add_option("--radius", cfg.radius, "Region radius in the special graph (default 3)");
  plot->add_option("--path", path_specs, "Combing path FROM:TO in coweight coordinates (repeatable)");
  plot->add_option("--corridor", corridor, "Shade special vertices within this distance of each path");
  add_output(plot, "svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Outcome o;
    if (*info) o = cmd_info(cfg);
    else if (*comb) o = cmd_comb(cfg, from_s, to_s);
    else if (*verify) o = cmd_verify(cfg, suite);
    else if (*fsa) o = cmd_fsa(cfg, out);
    else if (*plot) o = cmd_plot(cfg, path_specs, corridor);

    if (cfg.out.empty()) {
      out << o.text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw UsageError("cannot open " + cfg.out + " for writing");
      f << o.text;
      if (!f) throw UsageError("failed writing " + cfg.out);
    }
    return o.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exhausted: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"coxcomb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace coxcomb
