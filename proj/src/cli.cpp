#include "tticad/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tticad {

using nlohmann::json;

namespace {

class OrderLexer {
 public:
  explicit OrderLexer(const std::string& s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("order: " + msg, 1, static_cast<int>(pos_) + 1);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

bool is_permutation_of(std::vector<int> v, std::size_t n) {
  if (v.size() != n) return false;
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

ProcessingOrder parse_order(const std::string& text, const std::vector<std::size_t>& system_sizes) {
  OrderLexer lx(text);
  ProcessingOrder order;
  do {
    int s = lx.number();
    if (s < 1 || static_cast<std::size_t>(s) > system_sizes.size()) lx.fail("no system " + std::to_string(s));
    order.systems.push_back(s);
    std::optional<std::vector<int>> perm;
    if (lx.accept('[')) {
      perm.emplace();
      do {
        perm->push_back(lx.number());
      } while (lx.accept(','));
      lx.expect(']');
      if (!is_permutation_of(*perm, system_sizes[static_cast<std::size_t>(s - 1)]))
        lx.fail("constraints of system " + std::to_string(s) + " are not a permutation");
    }
    order.constraints.push_back(perm);
  } while (lx.accept(','));
  if (!lx.at_end()) lx.fail("unexpected text");
  if (!is_permutation_of(order.systems, system_sizes.size())) lx.fail("systems are not a permutation");
  return order;
}

std::string format_order(const ProcessingOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.systems.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(order.systems[i]);
    if (order.constraints[i]) {
      out += "[";
      for (std::size_t k = 0; k < order.constraints[i]->size(); ++k)
        out += (k ? "," : "") + std::to_string((*order.constraints[i])[k]);
      out += "]";
    }
  }
  return out;
}

Problem apply_order(const Problem& problem, const ProcessingOrder& order) {
  Problem out = problem;
  out.systems.clear();
  out.system_text.clear();
  for (std::size_t i = 0; i < order.systems.size(); ++i) {
    std::size_t s = static_cast<std::size_t>(order.systems[i] - 1);
    const auto& src = problem.systems.at(s);
    std::vector<RawConstraint> sys;
    if (order.constraints[i]) {
      for (int k : *order.constraints[i]) sys.push_back(src.at(static_cast<std::size_t>(k - 1)));
    } else {
      sys = src;
    }
    out.systems.push_back(std::move(sys));
    out.system_text.push_back(s < problem.system_text.size() ? problem.system_text[s] : "");
  }
  out.order = format_order(order);
  return out;
}

std::vector<ProcessingOrder> equation_orders(const Problem& problem) {
  std::size_t r = problem.systems.size();
  std::vector<std::vector<std::vector<int>>> choices(r);
  for (std::size_t s = 0; s < r; ++s) {
    std::vector<int> eqs, rest;
    for (std::size_t k = 0; k < problem.systems[s].size(); ++k) {
      (problem.systems[s][k].rel == Relation::Eq ? eqs : rest).push_back(static_cast<int>(k + 1));
    }
    std::sort(eqs.begin(), eqs.end());
    do {
      std::vector<int> perm = eqs;
      perm.insert(perm.end(), rest.begin(), rest.end());
      choices[s].push_back(perm);
    } while (std::next_permutation(eqs.begin(), eqs.end()));
  }
  std::vector<ProcessingOrder> out;
  std::vector<int> sys(r);
  std::iota(sys.begin(), sys.end(), 1);
  do {
    std::vector<std::size_t> pick(r, 0);
    while (true) {
      ProcessingOrder o;
      o.systems = sys;
      for (std::size_t i = 0; i < r; ++i) o.constraints.push_back(choices[static_cast<std::size_t>(sys[i] - 1)][pick[i]]);
      out.push_back(o);
      std::size_t i = 0;
      while (i < r && ++pick[i] == choices[static_cast<std::size_t>(sys[i] - 1)].size()) pick[i++] = 0;
      if (i == r) break;
    }
  } while (std::next_permutation(sys.begin(), sys.end()));
  return out;
}

std::vector<SemiAlgebraicSystem> systems_of(const Problem& problem) {
  std::vector<SemiAlgebraicSystem> L;
  for (const auto& s : problem.systems) L.push_back(normalize_system(s));
  return L;
}

RunResult run(const Problem& problem, const RunOptions& options) {
  RunResult res;
  res.problem = problem;
  std::optional<std::string> order = options.order ? options.order : problem.order;
  if (order) {
    std::vector<std::size_t> sizes;
    for (const auto& s : problem.systems) sizes.push_back(s.size());
    res.problem = apply_order(problem, parse_order(*order, sizes));
  }
  res.mode = options.mode.value_or(problem.mode);
  auto L = systems_of(res.problem);
  int n = static_cast<int>(problem.variables.size());
  auto t0 = std::chrono::steady_clock::now();
  if (res.mode == Mode::Tti) {
    res.cad = rc_tticad(L, n, options.limits, &res.trace, problem.variables);
  } else {
    res.cad = sign_invariant_cad(L, n, options.limits);
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<std::size_t> cells_per_level(const CAD& cad) {
  std::vector<std::size_t> out;
  for (int k = 1; k <= cad.n; ++k) {
    std::set<std::vector<int>> prefixes;
    for (const auto& c : cad.cells) prefixes.emplace(c.index.begin(), c.index.begin() + k);
    out.push_back(prefixes.size());
  }
  return out;
}

std::string summary(const RunResult& result) {
  const CAD& cad = result.cad;
  std::ostringstream os;
  os << cad.cells.size() << " cells, " << cad.full_dimensional_count() << " full-dimensional, base line "
     << cad.base_line_count() << " cells\n";
  os << "cells per level:";
  for (auto c : cells_per_level(cad)) os << " " << c;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", result.seconds);
  os << "\ntime: " << buf << " s\n";
  return os.str();
}

CellDump make_cell_dump(const RunResult& result) {
  CellDump d;
  const auto& names = result.problem.variables;
  d.variables = names;
  d.systems = result.problem.system_text;
  d.mode = result.mode == Mode::Tti ? "tti" : "sign";
  for (const auto& c : result.cad.cells) {
    CellRecord r;
    r.index = c.index;
    r.dimension = c.dimension();
    r.truth = c.truth;
    for (const auto& l : c.levels) {
      LevelDump ld;
      ld.section = l.section;
      if (l.section) ld.root = BoundDump{l.poly.to_string(names), l.root_index};
      if (l.below) ld.below = BoundDump{l.below->poly.to_string(names), l.below->root_index};
      if (l.above) ld.above = BoundDump{l.above->poly.to_string(names), l.above->root_index};
      r.levels.push_back(ld);
    }
    for (const auto& s : c.sample) {
      SampleDump sd;
      sd.rational = s->rational;
      if (s->rational) {
        sd.value = rational_text(s->value);
      } else {
        sd.poly = s->def.to_string(names);
        sd.lo = rational_text(s->lo);
        sd.hi = rational_text(s->hi);
      }
      r.sample.push_back(sd);
    }
    d.cells.push_back(std::move(r));
  }
  return d;
}

namespace {

json bound_json(const std::optional<BoundDump>& b) {
  if (!b) return nullptr;
  return {{"poly", b->poly}, {"root_index", b->root_index}};
}

std::optional<BoundDump> bound_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return BoundDump{j.at("poly").get<std::string>(), j.at("root_index").get<int>()};
}

}  // namespace

std::string CellDump::to_json() const {
  json cells_j = json::array();
  for (const auto& c : cells) {
    json levels_j = json::array();
    for (const auto& l : c.levels) {
      if (l.section) {
        levels_j.push_back({{"kind", "section"}, {"root", bound_json(l.root)}});
      } else {
        levels_j.push_back({{"kind", "sector"}, {"below", bound_json(l.below)}, {"above", bound_json(l.above)}});
      }
    }
    json sample_j = json::array();
    for (const auto& s : c.sample) {
      if (s.rational) {
        sample_j.push_back({{"value", s.value}});
      } else {
        sample_j.push_back({{"poly", s.poly}, {"interval", {s.lo, s.hi}}});
      }
    }
    cells_j.push_back({{"index", c.index},
                       {"dimension", c.dimension},
                       {"levels", levels_j},
                       {"sample", sample_j},
                       {"truth", c.truth}});
  }
  json j = {{"variables", variables},
            {"systems", systems},
            {"mode", mode},
            {"cell_count", cells.size()},
            {"cells", cells_j}};
  return j.dump(1);
}

CellDump CellDump::from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    CellDump d;
    d.variables = j.at("variables").get<std::vector<std::string>>();
    d.systems = j.at("systems").get<std::vector<std::string>>();
    d.mode = j.at("mode").get<std::string>();
    for (const auto& cj : j.at("cells")) {
      CellRecord r;
      r.index = cj.at("index").get<std::vector<int>>();
      r.dimension = cj.at("dimension").get<int>();
      r.truth = cj.at("truth").get<std::vector<bool>>();
      for (const auto& lj : cj.at("levels")) {
        LevelDump l;
        l.section = lj.at("kind").get<std::string>() == "section";
        if (l.section) {
          l.root = bound_from(lj.at("root"));
        } else {
          l.below = bound_from(lj.at("below"));
          l.above = bound_from(lj.at("above"));
        }
        r.levels.push_back(l);
      }
      for (const auto& sj : cj.at("sample")) {
        SampleDump s;
        s.rational = sj.contains("value");
        if (s.rational) {
          s.value = sj.at("value").get<std::string>();
        } else {
          s.poly = sj.at("poly").get<std::string>();
          s.lo = sj.at("interval").at(0).get<std::string>();
          s.hi = sj.at("interval").at(1).get<std::string>();
        }
        r.sample.push_back(s);
      }
      d.cells.push_back(std::move(r));
    }
    if (j.at("cell_count").get<std::size_t>() != d.cells.size())
      throw ParseError("cell_count disagrees with the cell list", 1, 1);
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("cell dump: ") + e.what(), 1, 1);
  }
}

Box default_box(const CAD& cad) {
  std::vector<double> xs, ys, ys_all;
  for (const auto& c : cad.cells) {
    if (c.sample.size() < 2) continue;
    if (c.levels[0].section) xs.push_back(c.sample[0]->approx());
    if (!c.levels[1].section) continue;
    ys_all.push_back(c.sample[1]->approx());
    if (c.levels[0].section) ys.push_back(c.sample[1]->approx());
  }
  if (ys.empty()) ys = ys_all;
  auto range = [](std::vector<double>& v) {
    if (v.empty()) return std::pair{-1.0, 1.0};
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    double pad = 0.15 * (*hi - *lo) + 1;
    return std::pair{*lo - pad, *hi + pad};
  };
  auto [x0, x1] = range(xs);
  auto [y0, y1] = range(ys);
  // Equal scales on both axes.
  double w = std::max(x1 - x0, y1 - y0);
  double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  return {cx - w / 2, cx + w / 2, cy - w / 2, cy + w / 2};
}

namespace {

const char* const kPalette[] = {"#f2f2f2", "#8ecae6", "#ffb703", "#90be6d", "#e76f51", "#b392ac", "#2a9d8f", "#f4a261"};

std::string color_of(const std::vector<bool>& truth) {
  std::size_t mask = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i]) mask |= std::size_t{1} << (i % 16);
  }
  if (mask == 0) return kPalette[0];
  return kPalette[1 + (mask - 1) % 7];
}

class Plotter {
 public:
  Plotter(const Box& box) : box_(box) {}

  double sx(double x) const { return 10 + 600 * (x - box_.xmin) / (box_.xmax - box_.xmin); }
  double sy(double y) const { return 10 + 600 * (box_.ymax - y) / (box_.ymax - box_.ymin); }
  double clip_y(double y) const { return std::clamp(y, box_.ymin, box_.ymax); }

  // The root_index-th real root in y of poly at x = t, if present.
  std::optional<double> root_at(const RootRef& r, double t) const {
    std::vector<CoordPtr> prefix = {Coordinate::make_rational(0, Rational(t))};
    if (is_zero_at(r.poly.lc(1), prefix)) return std::nullopt;
    auto roots = isolate_roots(r.poly, 1, prefix);
    if (static_cast<int>(roots.size()) < r.root_index) return std::nullopt;
    return roots[static_cast<std::size_t>(r.root_index - 1)]->approx();
  }

  std::vector<double> xs(double a, double b) const {
    std::vector<double> out;
    const int k = 48;
    double eps = (b - a) * 1e-4;
    for (int j = 0; j <= k; ++j) out.push_back(a + eps + (b - a - 2 * eps) * j / k);
    return out;
  }

  std::string pt(double x, double y) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(x), sy(clip_y(y)));
    return buf;
  }

 private:
  Box box_;
};

}  // namespace

std::string emit_svg(const CAD& cad, const Box& box, const std::vector<std::string>& names) {
  if (cad.n != 2) throw UnsupportedDimension("SVG output needs exactly two variables, got " + std::to_string(cad.n));
  Plotter pl(box);
  // x extent of each base line cell.
  std::map<int, double> section_x;
  for (const auto& c : cad.cells) {
    if (c.index[0] % 2 == 0) section_x[c.index[0]] = c.sample[0]->approx();
  }
  auto x_range = [&](int i) {
    double a = box.xmin, b = box.xmax;
    if (auto it = section_x.find(i - 1); it != section_x.end()) a = it->second;
    if (auto it = section_x.find(i + 1); it != section_x.end()) b = it->second;
    return std::pair{std::max(a, box.xmin), std::min(b, box.xmax)};
  };
  std::ostringstream regions, curves, points;
  for (const auto& c : cad.cells) {
    const CellLevel& ly = c.levels[1];
    std::string color = color_of(c.truth);
    bool true_somewhere = std::find(c.truth.begin(), c.truth.end(), true) != c.truth.end();
    std::string stroke = true_somewhere ? color : "#555555";
    if (c.index[0] % 2 == 1) {
      auto [a, b] = x_range(c.index[0]);
      if (a >= b) continue;
      auto xs = pl.xs(a, b);
      if (!ly.section) {
        std::string upper, lower;
        for (double t : xs) {
          double y = ly.above ? pl.root_at(*ly.above, t).value_or(box.ymax) : box.ymax;
          upper += pl.pt(t, y);
        }
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
          double y = ly.below ? pl.root_at(*ly.below, *it).value_or(box.ymin) : box.ymin;
          lower += pl.pt(*it, y);
        }
        regions << "<polygon points=\"" << upper << lower << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
      } else {
        std::string line;
        for (double t : xs) {
          if (auto y = pl.root_at(RootRef{ly.poly, ly.root_index}, t)) line += pl.pt(t, *y);
        }
        curves << "<polyline points=\"" << line << "\" fill=\"none\" stroke=\"" << stroke
               << "\" stroke-width=\"1.5\"/>\n";
      }
    } else {
      double x = c.sample[0]->approx();
      if (x < box.xmin || x > box.xmax) continue;
      if (!ly.section) {
        std::vector<CoordPtr> prefix = {c.sample[0]};
        auto bound = [&](const std::optional<RootRef>& r, double dflt) {
          if (!r) return dflt;
          auto roots = isolate_roots(r->poly, 1, prefix);
          return roots.at(static_cast<std::size_t>(r->root_index - 1))->approx();
        };
        double y0 = bound(ly.below, box.ymin), y1 = bound(ly.above, box.ymax);
        curves << "<polyline points=\"" << pl.pt(x, y0) << pl.pt(x, y1) << "\" fill=\"none\" stroke=\"" << stroke
               << "\" stroke-width=\"1\"/>\n";
      } else {
        double y = c.sample[1]->approx();
        if (y < box.ymin || y > box.ymax) continue;
        char buf[128];
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"%s\"/>\n", pl.sx(x), pl.sy(y),
                      true_somewhere ? color.c_str() : "#222222");
        points << buf;
      }
    }
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"620\" height=\"640\" viewBox=\"0 0 620 640\">\n";
  os << "<title>" << cad.cells.size() << " cells</title>\n";
  os << "<rect x=\"10\" y=\"10\" width=\"600\" height=\"600\" fill=\"" << kPalette[0] << "\"/>\n";
  os << regions.str() << curves.str() << points.str();
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<text x=\"10\" y=\"630\" font-family=\"monospace\" font-size=\"11\">%s in [%.3g, %.3g], %s in [%.3g, "
                "%.3g]</text>\n",
                names.size() > 0 ? names[0].c_str() : "x", box.xmin, box.xmax,
                names.size() > 1 ? names[1].c_str() : "y", box.ymin, box.ymax);
  os << buf << "</svg>\n";
  return os.str();
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-24s %3s %-8s %8s %10s\n", "problem", "n", "status", "cells", "time(s)");
  os << buf;
  for (const auto& r : rows) {
    std::string cells = r.status == "ok" ? std::to_string(r.cells) : "-";
    std::snprintf(buf, sizeof buf, "%-24s %3d %-8s %8s %10.3f\n", r.problem.c_str(), r.n, r.status.c_str(),
                  cells.c_str(), r.seconds);
    os << buf;
  }
  return os.str();
}

}  // namespace tticad
