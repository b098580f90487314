// shadowlab command-line front end.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "shadowlab/bounds.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/explore.hpp"
#include "shadowlab/families.hpp"
#include "shadowlab/hypergraph_io.hpp"
#include "shadowlab/report_io.hpp"

namespace fs = std::filesystem;
using namespace shadowlab;

namespace {

constexpr int kExitFree = 0;
constexpr int kExitContains = 1;
constexpr int kExitError = 2;
constexpr int kExitPartial = 3;

struct Globals {
  std::string out;
  std::string format = "json";
  std::string manifest;
  int threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget_nodes = 0;
  double budget_secs = 0.0;
};

struct Run {
  Globals g;
  std::ostringstream out;  // captured stdout
  cli::RunManifest manifest;
  std::vector<fs::path> files;
};

std::string density_line(const Hypergraph& h) {
  std::ostringstream os;
  os << "n=" << h.n() << " r=" << h.r() << " edges=" << h.size();
  if (h.n() >= h.r() && h.r() >= 2)
    os << " x=" << to_string(shadow_density(h)) << " y=" << to_string(edge_density(h)) << " (x~"
       << format_double(to_double(shadow_density(h))) << ", y~" << format_double(to_double(edge_density(h))) << ")";
  return os.str();
}

GraphFormat graph_format(const std::string& f) {
  if (f == "json") return GraphFormat::Json;
  if (f == "text") return GraphFormat::Text;
  throw std::invalid_argument("hypergraph output format must be json or text, not '" + f + "'");
}

void emit_graph(Run& run, const Hypergraph& h) {
  const auto fmt = graph_format(run.g.format);
  if (run.g.out.empty()) {
    run.out << (fmt == GraphFormat::Json ? to_json(h) : to_text(h));
    return;
  }
  write_hypergraph(h, run.g.out, fmt);
  run.files.push_back(run.g.out);
}

SearchConfig base_config(const Globals& g) {
  SearchConfig cfg;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  cfg.node_budget = g.budget_nodes;
  cfg.time_budget_secs = g.budget_secs;
  return cfg;
}

// ---------------------------------------------------------------- construct

int cmd_construct(Run& run, const std::string& spec_text, std::ostream& err) {
  const auto spec = ConstructionSpec::parse(spec_text);
  const auto h = build(spec);
  const std::string summary = spec.to_string() + ": " + density_line(h) + "\n";
  if (run.g.out.empty())
    err << summary;
  else
    run.out << summary;
  emit_graph(run, h);
  return 0;
}

// ---------------------------------------------------------------- check

int cmd_check(Run& run, const std::string& path, const std::string& family_text) {
  const auto h = read_hypergraph(path);
  const auto f = ForbiddenFamily::parse(family_text);
  const auto det = is_free(h, f);
  const bool json = run.g.format == "json";
  nlohmann::ordered_json j;
  j["family"] = f.to_string();
  j["free"] = det.free;
  j["summary"] = density_line(h);
  if (!json) run.out << (det.free ? "free" : "contains") << " " << f.to_string() << "\n" << density_line(h) << "\n";
  if (det.witness) {
    const auto wj = witness_json(*det.witness, f);
    j["witness"] = nlohmann::ordered_json::parse(wj);
    if (!json) run.out << "witness " << wj << "\n";
  }
  if (f.kind == ForbiddenFamily::Kind::Cancellative && det.free) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& b : check_cancellative_inequalities(h)) {
      arr.push_back({{"inequality", b.inequality},
                     {"curve", b.curve.to_string()},
                     {"lhs", b.lhs},
                     {"rhs", b.rhs},
                     {"slack", b.slack},
                     {"satisfied", b.satisfied}});
      if (!json)
        run.out << "bound " << b.inequality << ": " << format_double(b.lhs) << " <= " << format_double(b.rhs)
                << " slack=" << format_double(b.slack) << (b.satisfied ? " ok" : " VIOLATED") << "\n";
    }
    j["bounds"] = std::move(arr);
  }
  if (f.kind == ForbiddenFamily::Kind::CoveringClique && det.free && f.l >= h.r()) {
    const auto chain = check_fisher_ryan_chain(h, f.l);
    j["chain"] = {{"values", chain.values}, {"sizes", chain.sizes}, {"non_decreasing", chain.non_decreasing}};
    if (!json) {
      run.out << "chain";
      for (double v : chain.values) run.out << " " << format_double(v);
      run.out << (chain.non_decreasing ? " non-decreasing" : " DECREASING") << "\n";
    }
  }
  if (json) run.out << j.dump() << "\n";
  if (!run.g.out.empty()) {
    write_text_file(run.g.out, json ? j.dump(2) + "\n" : run.out.str());
    run.files.push_back(run.g.out);
  }
  return det.free ? kExitFree : kExitContains;
}

// ---------------------------------------------------------------- curve

std::string gnuplot_script(const std::string& csv, const std::string& id, double lo, double hi) {
  std::ostringstream os;
  os << "# gnuplot script for " << id << "\n"
     << "set datafile separator ','\n"
     << "set key off\nset size square\n"
     << "set xrange [0:1]\nset yrange [0:1]\n"
     << "set xlabel 'x (shadow density)'\nset ylabel 'y (edge density)'\n"
     << "set arrow from " << format_double(lo) << ",0 to " << format_double(lo) << ",1 nohead dt 2 lc rgb 'gray'\n"
     << "set arrow from " << format_double(hi) << ",0 to " << format_double(hi) << ",1 nohead dt 2 lc rgb 'gray'\n"
     << "set label '(2/3, 2/9)' at 0.6667,0.2222 point pt 7 offset 1,1\n"
     << "set label '(6/7, 6/49)' at 0.8571,0.1224 point pt 7 offset 1,1\n"
     << "set label '(8/9, 8/81)' at 0.8889,0.0988 point pt 7 offset 1,-1\n"
     << "plot '" << csv << "' every ::1 using 1:2 with lines lw 2 title '" << id << "'\n";
  return os.str();
}

int cmd_curve(Run& run, const std::string& id, int grid, const std::string& gnuplot) {
  if (grid < 2) throw std::invalid_argument("grid must be at least 2");
  std::ostringstream csv;
  csv << "x,y,curve_id\r\n";
  double lo = 0, hi = 1;
  if (id == "fano-param") {
    lo = 1.0 / 7.0;
    hi = 1.0 / 3.0;
    for (int i = 0; i < grid; ++i) {
      const double a = (i == grid - 1) ? hi : lo + (hi - lo) * i / (grid - 1);
      const auto [x, y] = fano_parametric(a);
      csv << format_double(x) << ',' << format_double(y) << ',' << id << "\r\n";
    }
    lo = fano_parametric(hi).first;
    hi = fano_parametric(1.0 / 7.0).first;
  } else {
    const auto curve = CurveId::parse(id);
    std::tie(lo, hi) = curve.domain();
    for (int i = 0; i < grid; ++i) {
      double x;
      if (curve.open_at_lower())
        x = lo + (hi - lo) * (i + 1) / grid;
      else
        x = lo + (hi - lo) * i / (grid - 1);
      if (i == grid - 1) x = hi;
      csv << format_double(x) << ',' << format_double(curve(x)) << ',' << csv_field(curve.to_string()) << "\r\n";
    }
  }
  if (run.g.out.empty()) {
    run.out << csv.str();
  } else {
    write_text_file(run.g.out, csv.str());
    run.files.push_back(run.g.out);
  }
  if (!gnuplot.empty()) {
    const std::string data = run.g.out.empty() ? "curve.csv" : fs::path(run.g.out).filename().string();
    write_text_file(gnuplot, gnuplot_script(data, id, lo, hi));
    run.files.push_back(gnuplot);
  }
  return 0;
}

// ---------------------------------------------------------------- explore

struct ExploreArgs {
  int n = 6;
  int r = 3;
  std::string family = "empty";
  std::string mode = "exact";
  bool iso = false;
  int split_depth = 2;
  int samples = 100;
  double target_x = 0.5;
  double target_y = 0.1;
  int steps = 100000;
  std::optional<std::int64_t> shadow;
};

int cmd_explore(Run& run, const ExploreArgs& a) {
  auto cfg = base_config(run.g);
  cfg.mode = SearchConfig::parse_mode(a.mode);
  cfg.iso_reduction = a.iso;
  cfg.split_depth = a.split_depth;
  cfg.samples = a.samples;
  cfg.target_x = a.target_x;
  cfg.target_y = a.target_y;
  cfg.anneal_steps = a.steps;
  if (!cfg.stochastic()) cfg.seed = 0;  // exact modes ignore the seed
  const auto f = ForbiddenFamily::parse(a.family);

  ExploreReport rep;
  if (a.shadow) {
    cfg.mode = SearchConfig::Mode::BranchBound;
    const auto q = max_edges_given_shadow(a.n, a.r, f, *a.shadow, cfg);
    rep.family = f;
    rep.n = a.n;
    rep.r = a.r;
    rep.config = cfg;
    rep.stats = q.stats;
    if (q.witness) {
      rep.points.push_back({*a.shadow, q.max_edges, 1});
      rep.extremal.emplace(*a.shadow, ExtremalEntry{q.max_edges, *q.witness});
    } else if (q.outcome == ShadowQuery::Outcome::Infeasible) {
      rep.infeasible.push_back(*a.shadow);
    }
  } else {
    rep = point_cloud(a.n, a.r, f, cfg);
  }

  if (run.g.out.empty()) {
    run.out << report_json(rep);
  } else {
    for (auto& p : write_report(rep, run.g.out)) run.files.push_back(p);
    run.out << "family=" << f.to_string() << " n=" << a.n << " r=" << a.r << " points=" << rep.points.size()
            << " visited=" << rep.stats.visited;
    if (auto m = rep.max_edges()) run.out << " max_edges=" << *m;
    if (!rep.infeasible.empty()) run.out << " infeasible=" << rep.infeasible.size();
    run.out << (rep.stats.partial ? " partial" : "") << "\n";
  }
  return rep.stats.partial ? kExitPartial : 0;
}

// ---------------------------------------------------------------- reduce / chain / kk

int cmd_reduce(Run& run, const std::string& path, double d) {
  const auto h = read_hypergraph(path);
  const auto res = algorithm1_reduce(h, d);
  const bool same_shadow = shadow(res.graph, 1) == shadow(h, 1);
  run.out << "before: " << density_line(h) << "\n"
          << "after:  " << density_line(res.graph) << "\n"
          << to_string(res.status) << " (target " << res.target_edges << " edges, removed " << res.removed << ")\n"
          << "shadow preserved: " << (same_shadow ? "yes" : "NO") << "\n";
  if (!run.g.out.empty()) {
    write_hypergraph(res.graph, run.g.out, graph_format(run.g.format));
    run.files.push_back(run.g.out);
  }
  return same_shadow ? 0 : kExitError;
}

int cmd_chain(Run& run, const std::string& path, int l) {
  const auto h = read_hypergraph(path);
  const auto c = check_fisher_ryan_chain(h, l);
  for (std::size_t k = 0; k < c.values.size(); ++k)
    run.out << "i=" << (h.r() - l + static_cast<int>(k)) << " size=" << c.sizes[k] << " value=" << format_double(c.values[k])
            << "\n";
  run.out << (c.non_decreasing ? "non-decreasing" : "DECREASING") << "\n";
  return c.non_decreasing ? 0 : kExitContains;
}

int cmd_kk(Run& run, std::int64_t s, int r, int n) {
  const double v = kruskal_katona_max_edges(s, r, n);
  run.out << "shadow=" << s << " r=" << r << " n=" << n << " max_edges<=" << format_double(v) << "\n";
  return 0;
}

int cmd_replay(Run& run, const std::string& path, std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool write_manifest) {
  Run run;
  CLI::App app{"shadowlab: shadows and edge densities of hypergraphs with forbidden families", "shadowlab"};
  app.set_version_flag("--version", SHADOWLAB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  auto& g = run.g;
  app.add_option("--out", g.out, "Output file (directory for explore)");
  app.add_option("--format", g.format, "Output format: json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--manifest", g.manifest, "Manifest path (default: next to --out, else stderr)");
  app.add_option("--threads", g.threads, "Worker threads (default: available parallelism)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for stochastic modes");
  app.add_option("--budget-nodes", g.budget_nodes, "Node budget (0: unlimited)");
  app.add_option("--budget-secs", g.budget_secs, "Wall-clock budget in seconds (0: unlimited)");

  std::string spec, file, family, curve_id, gnuplot, manifest_in;
  int grid = 512, l = 0, kk_r = 3, kk_n = 0;
  double density = 0.5;
  std::int64_t kk_s = 0;
  ExploreArgs ea;

  auto* construct = app.add_subcommand("construct", "Build a named construction");
  construct->add_option("spec", spec, "e.g. turan:6:3:3, star:7:3, sts:7, fano-blowup:70:1/7")->required();

  auto* check = app.add_subcommand("check", "Test a hypergraph for a forbidden family (exit 0 free, 1 contains)");
  check->add_option("file", file, "Hypergraph file (json or text)")->required();
  check->add_option("family", family, "empty, T:r, K:r:l+1, H:r:l+1, D, Dr:r")->required();

  auto* curve = app.add_subcommand("curve", "Sample a boundary curve as CSV");
  curve->add_option("curve", curve_id, "Curve id, e.g. cancellative-left:3, general-k:9, fano-param")->required();
  curve->add_option("--grid", grid, "Number of samples")->check(CLI::Range(2, 10000000));
  curve->add_option("--gnuplot", gnuplot, "Also write a gnuplot script here");

  auto* explore = app.add_subcommand("explore", "Enumerate or sample family-free hypergraphs");
  explore->add_option("--n", ea.n, "Vertices")->required()->check(CLI::Range(1, 64));
  explore->add_option("--r", ea.r, "Uniformity")->check(CLI::Range(1, 64));
  explore->add_option("--family", ea.family, "Forbidden family");
  explore->add_option("--mode", ea.mode, "exact, branch-bound, random-maximal or anneal");
  explore->add_flag("--iso", ea.iso, "Expand canonical representatives only (n <= 8)");
  explore->add_option("--split-depth", ea.split_depth, "Edge decisions before parallel split")->check(CLI::Range(0, 64));
  explore->add_option("--samples", ea.samples, "Samples (stochastic modes)")->check(CLI::NonNegativeNumber);
  explore->add_option("--target-x", ea.target_x, "Anneal target shadow density");
  explore->add_option("--target-y", ea.target_y, "Anneal target edge density");
  explore->add_option("--steps", ea.steps, "Anneal steps per chain")->check(CLI::NonNegativeNumber);
  explore->add_option("--shadow", ea.shadow, "Only maximize |H| for this shadow size");

  auto* reduce = app.add_subcommand("reduce", "Shadow-preserving edge removal to a density threshold");
  reduce->add_option("file", file, "Hypergraph file")->required();
  reduce->add_option("--density,-d", density, "Threshold d in [0,1]")->required()->check(CLI::Range(0.0, 1.0));

  auto* chain = app.add_subcommand("chain", "Shadow chain of a covering-clique-free hypergraph");
  chain->add_option("file", file, "Hypergraph file")->required();
  chain->add_option("--l", l, "Clique parameter (core size l+1)")->required();

  auto* kk = app.add_subcommand("kk", "Kruskal-Katona bound on |H| given |dH|");
  kk->add_option("--shadow", kk_s, "Shadow size")->required();
  kk->add_option("--r", kk_r, "Uniformity");
  kk->add_option("--n", kk_n, "Vertices")->required();

  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare digests");
  replay->add_option("manifest", manifest_in, "Manifest file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  int code = 0;
  try {
    if (*construct) code = cmd_construct(run, spec, err);
    else if (*check) code = cmd_check(run, file, family);
    else if (*curve) code = cmd_curve(run, curve_id, grid, gnuplot);
    else if (*explore) code = cmd_explore(run, ea);
    else if (*reduce) code = cmd_reduce(run, file, density);
    else if (*chain) code = cmd_chain(run, file, l);
    else if (*kk) code = cmd_kk(run, kk_s, kk_r, kk_n);
    else if (*replay) return cmd_replay(run, manifest_in, err);
  } catch (const std::exception& e) {
    out << run.out.str();
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  const std::string captured = run.out.str();
  out << captured;
  if (!write_manifest) return code;

  run.manifest.command.push_back("shadowlab");
  run.manifest.command.insert(run.manifest.command.end(), args.begin(), args.end());
  run.manifest.seed = g.seed;
  run.manifest.version = SHADOWLAB_VERSION;
  for (const auto& p : run.files) run.manifest.add_file(p);
  run.manifest.add_stdout(captured);
  fs::path mpath = g.manifest;
  if (mpath.empty() && !g.out.empty()) mpath = *explore ? fs::path(g.out) / "manifest.json" : fs::path(g.out + ".manifest.json");
  try {
    if (mpath.empty())
      err << "manifest " << run.manifest.to_json(false);
    else
      write_text_file(mpath, run.manifest.to_json());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}

int cmd_replay(Run& run, const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kExitError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  cli::RunManifest m;
  try {
    m = cli::RunManifest::parse(buf.str());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (m.command.empty()) {
    err << "error: manifest has no command\n";
    return kExitError;
  }
  std::vector<std::string> args(m.command.begin() + 1, m.command.end());
  std::ostringstream sink_out, sink_err;
  run_cli(args, sink_out, sink_err, false);
  bool same = true;
  for (const auto& o : m.outputs) {
    const std::string now = o.path == "<stdout>" ? cli::sha256_hex(sink_out.str()) : cli::file_sha256(o.path);
    const bool ok = now == o.sha256;
    same = same && ok;
    run.out << (ok ? "same " : "DIFFERENT ") << o.path << "\n";
  }
  std::cout << run.out.str();
  return same ? 0 : kExitContains;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args, std::cout, std::cerr, true);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
