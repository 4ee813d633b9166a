#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tticad/cli.hpp"
#include "tticad/combdiag.hpp"
#include "tticad/regchain.hpp"

using namespace tticad;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kResource = 3, kInvariant = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct DecomposeArgs {
  std::vector<std::string> files;
  std::string mode;
  std::string order;
  std::string json_out;
  std::string svg_out;
  bool dump_tree = false;
  bool trace = false;
  bool bench = false;
  bool all_orders = false;
  double timeout = 0;
  std::size_t max_nodes = 0;
};

RunOptions options_from(const DecomposeArgs& a) {
  RunOptions o;
  if (a.mode == "tti") o.mode = Mode::Tti;
  if (a.mode == "sign") o.mode = Mode::Sign;
  if (!a.order.empty()) o.order = a.order;
  o.limits.max_nodes = a.max_nodes;
  if (a.timeout > 0) {
    o.limits.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(a.timeout));
  }
  return o;
}

int bench(const DecomposeArgs& a) {
  std::vector<BenchRow> rows;
  for (const auto& f : a.files) {
    BenchRow row;
    row.problem = std::filesystem::path(f).stem().string();
    auto t0 = std::chrono::steady_clock::now();
    try {
      Problem p = parse_problem(read_file(f));
      row.n = static_cast<int>(p.variables.size());
      RunResult r = run(p, options_from(a));
      row.status = "ok";
      row.cells = r.cad.cells.size();
      row.seconds = r.seconds;
    } catch (const ResourceLimitError&) {
      row.status = "timeout";
    } catch (const std::exception&) {
      row.status = "error";
    }
    if (row.status != "ok")
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(row);
  }
  std::cout << format_bench(rows);
  return kOk;
}

int all_orders(const Problem& p, const DecomposeArgs& a) {
  std::size_t lo = 0, hi = 0;
  for (const auto& o : equation_orders(p)) {
    RunOptions opts = options_from(a);
    opts.order = format_order(o);
    RunResult r = run(p, opts);
    std::size_t c = r.cad.cells.size();
    std::cout << *opts.order << "  " << c << "\n";
    lo = lo == 0 ? c : std::min(lo, c);
    hi = std::max(hi, c);
  }
  std::cout << "min " << lo << " max " << hi << "\n";
  return kOk;
}

int decompose(const DecomposeArgs& a) {
  if (a.bench) return bench(a);
  if (a.files.size() != 1) throw CLI::ValidationError("decompose", "expected exactly one problem file without --bench");
  const std::string& file = a.files.front();
  try {
    Problem p = parse_problem(read_file(file));
    if (a.all_orders) return all_orders(p, a);
    RunResult r = run(p, options_from(a));
    std::cout << summary(r);
    if (a.trace) {
      for (const auto& t : r.trace) {
        for (const auto& c : t.conditions) std::cout << c << "; ";
        std::cout << "-> " << t.action << "\n";
      }
    }
    if (a.dump_tree) std::cout << format_tree(*r.cad.tree, p.variables);
    if (!a.json_out.empty()) write_file(a.json_out, make_cell_dump(r).to_json());
    if (!a.svg_out.empty()) write_file(a.svg_out, emit_svg(r.cad, default_box(r.cad), p.variables));
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << file << ": error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ArityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit reached: " << e.what() << "\n";
    return kResource;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
}

int combdiag(int r_max, int s_max, int t_max) {
  std::printf("%3s %3s %3s %14s %14s %14s %14s %s\n", "r", "s", "t", "complete", "formula", "partial", "formula",
              "ok");
  bool all_ok = true;
  for (int r = 1; r <= r_max; ++r)
    for (int s = 0; s <= s_max; ++s)
      for (int t = 0; t <= t_max; ++t) {
        if (s == 0 && t == 0) continue;
        DiagramShape sh{r, s, t};
        auto L = systems_of_shape(sh);
        mpz_class d0 = build_diagram_list(L, DiagramVariant::Complete).node_count();
        mpz_class d1 = build_diagram_list(L, DiagramVariant::Partial).node_count();
        mpz_class f0 = closed_form(sh, DiagramVariant::Complete);
        mpz_class f1 = closed_form(sh, DiagramVariant::Partial);
        bool ok = d0 == f0 && d1 == f1;
        all_ok = all_ok && ok;
        std::printf("%3d %3d %3d %14s %14s %14s %14s %s\n", r, s, t, d0.get_str().c_str(), f0.get_str().c_str(),
                    d1.get_str().c_str(), f1.get_str().c_str(), ok ? "yes" : "NO");
      }
  return all_ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truth-table invariant cylindrical algebraic decomposition"};
  app.require_subcommand(1);

  DecomposeArgs d;
  auto* dec = app.add_subcommand("decompose", "Decompose the problem in a file");
  dec->add_option("files", d.files, "Problem file(s); several only with --bench")->required();
  dec->add_option("--mode", d.mode, "tti or sign (overrides the file)")->check(CLI::IsMember({"tti", "sign"}));
  dec->add_option("--order", d.order, "Processing order, e.g. 2,1[2,1,3]");
  dec->add_option("--json", d.json_out, "Write the cells as JSON");
  dec->add_option("--svg", d.svg_out, "Draw the decomposition (two variables only)");
  dec->add_flag("--dump-tree", d.dump_tree, "Print the complex cylindrical tree");
  dec->add_flag("--trace", d.trace, "Print the case analysis");
  dec->add_flag("--bench", d.bench, "Print a timing table over the given files");
  dec->add_flag("--all-orders", d.all_orders, "Count cells for every system and equation order");
  dec->add_option("--timeout", d.timeout, "Abort after this many seconds");
  dec->add_option("--max-nodes", d.max_nodes, "Abort when the tree grows beyond this many nodes");

  int r_max = 4, s_max = 3, t_max = 3;
  auto* cd = app.add_subcommand("combdiag", "Tabulate combination diagram sizes against their closed forms");
  cd->add_option("--r-max", r_max, "Largest number of systems")->check(CLI::Range(1, 8));
  cd->add_option("--s-max", s_max, "Largest number of equations per system")->check(CLI::Range(0, 8));
  cd->add_option("--t-max", t_max, "Largest number of other constraints per system")->check(CLI::Range(0, 8));

  try {
    app.parse(argc, argv);
    if (*dec) return decompose(d);
    if (*cd) return combdiag(r_max, s_max, t_max);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
