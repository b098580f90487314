// Acceptance checks 1-11. Usage: acceptance <path-to-shadowlab> <work-dir>
// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "shadowlab/bounds.hpp"
#include "shadowlab/canonical.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/explore.hpp"
#include "shadowlab/families.hpp"
#include "shadowlab/hypergraph_io.hpp"

using namespace shadowlab;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_work;

struct Verdict {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(const std::string& args) {
  const std::string cmd = "cd '" + g_work.string() + "' && '" + g_cli + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

SearchConfig serial() {
  SearchConfig c;
  c.threads = 1;
  return c;
}

Hypergraph from_masks(int n, int r, std::span<const Mask> masks) {
  std::vector<Edge> es;
  for (Mask m : masks) {
    Edge e;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) e.push_back(static_cast<Vertex>(v));
    es.push_back(std::move(e));
  }
  return Hypergraph(n, r, es);
}

Hypergraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (keep(rng)) es.push_back({a, b, c});
  return Hypergraph(n, 3, es);
}

// ------------------------------------------------------------------ criteria

Verdict c1() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n : {5, 6}) {
    const auto rep = enumerate_free(n, 3, ForbiddenFamily::cancellative(3), serial());
    const auto want = static_cast<std::int64_t>(turan(n, 3, 3).size());
    const auto got = rep.max_edges().value_or(-1);
    v.note << " n=" << n << " max=" << got << " t3=" << want;
    v.require(got == want, "max edges differs from |T_3(n,3)|");
    if (n == 6 && got == want) {
      const auto s = std::find_if(rep.extremal.begin(), rep.extremal.end(),
                                  [&](const auto& kv) { return kv.second.max_edges == got; });
      v.require(canonical_form(s->second.witness) == canonical_form(turan(6, 3, 3)), "witness not T_3(6,3)");
    }
  }
  const double t = seconds_since(t0);
  v.note << " time=" << t << "s";
  v.require(t < 60, "slower than 60 s");
  return v;
}

Verdict c2() {
  Verdict v;
  const auto rep = enumerate_free(6, 3, ForbiddenFamily::covering_clique(3, 3), serial());
  const auto got = rep.max_edges().value_or(-1);
  v.note << " max=" << got;
  v.require(got == static_cast<std::int64_t>(turan(6, 3, 3).size()), "max edges differs from 8");
  bool turan_witness = false;
  for (const auto& [s, e] : rep.extremal)
    if (e.max_edges == got) turan_witness = turan_witness || isomorphic(e.witness, turan(6, 3, 3));
  v.require(turan_witness, "no Turan witness");
  return v;
}

// criteria 3 and 4 share the corpus of cancellative graphs visited at n <= 6
struct CancellativeCorpus {
  std::uint64_t graphs = 0;
  std::uint64_t power_fail = 0;
  std::uint64_t quad_fail = 0;
  bool tight_at_turan = false;
};

const CancellativeCorpus& corpus() {
  static const CancellativeCorpus c = [] {
    CancellativeCorpus out;
    std::mutex mu;
    for (int n = 3; n <= 6; ++n) {
      const Visitor visit = [&](std::span<const Mask> es, std::int64_t s) {
        const auto m = static_cast<std::int64_t>(es.size());
        const bool p = cancellative_power_bound_holds(m, s, 3);
        const bool q = cancellative_quadratic_bound_holds(m, s, n);
        std::lock_guard lock(mu);
        ++out.graphs;
        out.power_fail += !p;
        out.quad_fail += !q;
        if (n == 6 && m == 8 && s == 12 && isomorphic(from_masks(6, 3, es), turan(6, 3, 3)))
          out.tight_at_turan = std::abs(std::pow(s / 3.0, 1.5) - m) <= 1e-12;
      };
      enumerate_free(n, 3, ForbiddenFamily::cancellative(3), serial(), visit);
    }
    return out;
  }();
  return c;
}

Verdict c3() {
  Verdict v;
  const auto& c = corpus();
  v.note << " graphs=" << c.graphs << " violations=" << c.power_fail;
  v.require(c.power_fail == 0, "power bound violated");
  v.require(c.tight_at_turan, "no equality at T_3(6,3)");
  return v;
}

Verdict c4() {
  Verdict v;
  const auto& c = corpus();
  v.note << " graphs=" << c.graphs << " violations=" << c.quad_fail;
  v.require(c.quad_fail == 0, "quadratic bound violated");
  return v;
}

Verdict c5() {
  Verdict v;
  std::mt19937_64 rng(20250501);
  std::uniform_real_distribution<double> density(0.05, 0.4);
  int sampled = 0, tries = 0, bad = 0;
  while (sampled < 200 && tries < 100000) {
    ++tries;
    const auto h = random_graph(7, density(rng), rng);
    if (!covering_clique_free(h, 3).free) continue;
    ++sampled;
    const auto c = check_fisher_ryan_chain(h, 3);
    bool mono = true;
    for (std::size_t i = 1; i < c.values.size(); ++i)
      mono = mono && c.values[i - 1] <= c.values[i] * (1 + 1e-12) + 1e-300;
    bad += !(mono && c.non_decreasing);
  }
  v.note << " sampled=" << sampled << " non-monotone=" << bad;
  v.require(sampled == 200, "could not sample 200 graphs");
  v.require(bad == 0, "chain decreased");
  const auto t = check_fisher_ryan_chain(turan(9, 3, 3), 3);
  bool constant = true;
  for (double x : t.values) constant = constant && std::abs(x - 3.0) <= 1e-12 * 3.0;
  v.require(constant, "T_3(9,3) chain not constant at 3");
  return v;
}

Verdict c6() {
  Verdict v;
  constexpr double tol = 1e-9;
  double worst = std::abs(curve_cancellative_left(2.0 / 3, 3) - 2.0 / 9);
  for (int k : {7, 9, 13}) {
    worst = std::max(worst, std::abs(curve_general_k_lower((k - 1.0) / k, k) - (k - 1.0) / (k * k)));
    worst = std::max(worst, std::abs(curve_general_k_lower(2.0 / 3, k) - 2.0 / 9));
  }
  for (int i = 0; i < 1000; ++i) {
    const double x = 2.0 / 3 + (6.0 / 7 - 2.0 / 3) * i / 999;
    worst = std::max(worst, std::abs(curve_general_k_lower(x, 7) - curve_fano_lower(x)));
  }
  v.note << " max deviation=" << worst;
  v.require(worst <= tol, "identity off by more than 1e-9");
  return v;
}

Verdict c7() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  auto check = [&](const std::string& name, const Hypergraph& h) {
    const int n = h.n();
    const double x = to_double(shadow_density(h)), y = to_double(edge_density(h));
    v.note << " " << name << " (x,y)=(" << x << "," << y << ")";
    v.require(is_cancellative(h).free, name + " not cancellative");
    v.require(std::abs(x - 6.0 / 7) <= 10.0 / n && std::abs(y - 6.0 / 49) <= 10.0 / n, name + " densities off");
  };
  check("sts_blowup(21,7)", sts_blowup(21, 7));
  check("fano_blowup(70,1/7)", fano_blowup(70, 1.0 / 7));
  const double t = seconds_since(t0);
  v.note << " time=" << t << "s";
  v.require(t < 10, "slower than 10 s");
  return v;
}

Verdict c8() {
  Verdict v;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> size(6, 20);
  std::uniform_real_distribution<double> density(0.2, 1.0);
  int runs = 0, shadow_changed = 0, nontrivial = 0, in_window = 0, impossible = 0, stalled_possible = 0;
  for (int g = 0; g < 100; ++g) {
    const int n = size(rng);
    const auto h = random_graph(n, density(rng), rng);
    const auto before = shadow(h, 1);
    const double total = static_cast<double>(binomial(n, 3));
    for (int k = 1; k <= 9; ++k) {
      const double d = k / 10.0;
      const auto res = algorithm1_reduce(h, d);
      ++runs;
      shadow_changed += !(shadow(res.graph, 1) == before);
      if (res.status == ReduceResult::Status::GuardDensity || res.status == ReduceResult::Status::GuardSize) continue;
      ++nontrivial;
      const double y = res.graph.size() / total;
      if (y > d - 1 / total && y <= d) {
        ++in_window;
        continue;
      }
      // each edge covers at most 3 shadow pairs, so fewer than |dH|/3 edges cannot keep the shadow
      if (res.target_edges * 3 < static_cast<std::int64_t>(before.size()))
        ++impossible;
      else
        ++stalled_possible;
    }
  }
  v.note << " runs=" << runs << " shadow changed=" << shadow_changed << " nontrivial=" << nontrivial
         << " in window=" << in_window << " window unreachable while keeping the shadow=" << impossible
         << " stalled otherwise=" << stalled_possible;
  v.require(shadow_changed == 0, "shadow not preserved");
  v.require(in_window == nontrivial, "density outside (d - 1/C(n,3), d]");
  return v;
}

Verdict c9() {
  Verdict v;
  std::mutex mu;
  std::uint64_t visited = 0, bad = 0;
  for (int n = 3; n <= 6; ++n) {
    const Visitor visit = [&](std::span<const Mask> es, std::int64_t s) {
      const bool ok = static_cast<double>(es.size()) <= kruskal_katona_max_edges(s, 3, n) + 1e-9;
      std::lock_guard lock(mu);
      ++visited;
      bad += !ok;
    };
    enumerate_free(n, 3, ForbiddenFamily::empty(), serial(), visit);
  }
  double worst_tight = 0;
  for (int n = 3; n <= 6; ++n)
    for (int m = 3; m <= n; ++m) {
      const auto k = clique_plus_isolated(n, 3, static_cast<double>(m) / n);
      const auto s = static_cast<std::int64_t>(shadow(k, 1).size());
      worst_tight = std::max(worst_tight, std::abs(kruskal_katona_max_edges(s, 3, n) - static_cast<double>(k.size())));
    }
  v.note << " visited=" << visited << " violations=" << bad << " worst tight gap=" << worst_tight;
  v.require(bad == 0, "bound violated");
  v.require(worst_tight <= 1e-9, "complete graphs not tight");
  return v;
}

Verdict c10() {
  Verdict v;
  write_hypergraph(star(7, 3), g_work / "star7.json", GraphFormat::Json);
  write_hypergraph(expansion(3, 3), g_work / "h43.json", GraphFormat::Json);
  const int star_code = run_cli("check star7.json D");
  const int h_code = run_cli("check h43.json D");
  const auto rep = enumerate_free(6, 3, ForbiddenFamily::discontinuity_d(), serial());
  const auto got = rep.max_edges().value_or(-1);
  v.note << " star exit=" << star_code << " H43 exit=" << h_code << " n=6 max=" << got << " (expected 8)";
  v.require(star_code == 0, "star(7,3) not D-free");
  v.require(h_code == 1, "H_4^3 not detected");
  v.require(got == 8, "n=6 extremal number is not 8");
  return v;
}

Verdict c11() {
  Verdict v;
  const std::vector<std::string> runs{
      "explore --n 6 --r 3 --family T:3",
      "explore --n 6 --r 3 --family D --iso",
      "explore --n 6 --r 3 --family K:3:4 --mode bb",
      "--seed 42 explore --n 14 --r 3 --family T:3 --mode random --samples 40",
      "--seed 7 explore --n 8 --r 3 --family D --mode anneal --samples 4 --steps 4000",
  };
  int compared = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::vector<fs::path> dirs;
    for (int threads : {1, 4, 1, 4}) {
      const auto dir = g_work / ("det" + std::to_string(i) + "_" + std::to_string(dirs.size()));
      fs::remove_all(dir);
      const int code = run_cli("--threads " + std::to_string(threads) + " --out " + dir.string() + " " + runs[i]);
      v.require(code == 0, "explore failed: " + runs[i]);
      dirs.push_back(dir);
    }
    for (auto it = fs::recursive_directory_iterator(dirs[0]); it != fs::recursive_directory_iterator(); ++it) {
      if (!it->is_regular_file() || it->path().filename() == "manifest.json") continue;
      const auto rel = fs::relative(it->path(), dirs[0]);
      const auto ref = slurp(it->path());
      for (std::size_t k = 1; k < dirs.size(); ++k) {
        ++compared;
        v.require(slurp(dirs[k] / rel) == ref, runs[i] + ": " + rel.string() + " differs");
      }
    }
  }
  v.note << " file comparisons=" << compared;
  v.require(compared > 0, "nothing compared");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <shadowlab> <work-dir>\n";
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  g_work = fs::absolute(argv[2]);
  fs::create_directories(g_work);

  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"exact enumeration T:3 matches t_3(n,3) at n=5,6", c1},
      {"K:3:4 extremal number at n=6", c2},
      {"|H| <= (|dH|/3)^(3/2) on visited cancellative graphs", c3},
      {"|H| <= (n^2-2|dH|)|dH|/(3n) + 3n^2 on visited cancellative graphs", c4},
      {"Fisher-Ryan chain on random K_4^3-free graphs", c5},
      {"curve identities", c6},
      {"STS and Fano blow-ups", c7},
      {"Algorithm 1 contract", c8},
      {"Kruskal-Katona on every graph at n<=6", c9},
      {"family D membership and n=6 extremal number", c10},
      {"explore reports identical across --threads 1 and 4", c11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.note << " exception: " << e.what();
    }
    failed += !v.pass;
    std::cout << "criterion " << (i + 1) << ": " << (v.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ";"
              << v.note.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
