#include "shadowlab/report_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/hypergraph_io.hpp"

namespace shadowlab {

using nlohmann::ordered_json;

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return {buf, ptr};
}

std::string witness_id(std::int64_t shadow_size) { return "shadow_" + std::to_string(shadow_size); }

namespace {

std::string fraction(std::int64_t p, std::int64_t q) { return to_string(Rational(p, q)); }

ordered_json graph_json(const Hypergraph& h) { return ordered_json::parse(to_json(h)); }

}  // namespace

std::string report_json(const ExploreReport& rep) {
  const auto& cfg = rep.config;
  const std::int64_t faces = binomial(rep.n, rep.r - 1);
  const std::int64_t edges = binomial(rep.n, rep.r);

  ordered_json j;
  j["family"] = rep.family.to_string();
  j["n"] = rep.n;
  j["r"] = rep.r;
  ordered_json c;
  c["mode"] = SearchConfig::to_string(cfg.mode);
  c["iso_reduction"] = cfg.iso_reduction;
  c["seed"] = cfg.seed;
  c["node_budget"] = cfg.node_budget;
  c["time_budget_secs"] = cfg.time_budget_secs;
  c["split_depth"] = cfg.split_depth;
  if (cfg.stochastic()) c["samples"] = cfg.samples;
  if (cfg.mode == SearchConfig::Mode::Anneal) {
    c["target_x"] = cfg.target_x;
    c["target_y"] = cfg.target_y;
    c["anneal_steps"] = cfg.anneal_steps;
    c["anneal_t0"] = cfg.anneal_t0;
    c["anneal_ratio"] = cfg.anneal_ratio;
  }
  j["config"] = std::move(c);
  j["point_label"] = "finite-n attainable";

  auto pts = ordered_json::array();
  for (const auto& p : rep.points) {
    ordered_json o;
    o["shadow_size"] = p.shadow_size;
    o["edge_count"] = p.edge_count;
    o["multiplicity"] = p.multiplicity;
    const auto d = rep.density(p);
    o["x"] = d.x;
    o["y"] = d.y;
    o["x_exact"] = fraction(p.shadow_size, faces);
    o["y_exact"] = fraction(p.edge_count, edges);
    pts.push_back(std::move(o));
  }
  j["points"] = std::move(pts);

  auto ext = ordered_json::array();
  for (const auto& [s, e] : rep.extremal) {
    ordered_json o;
    o["shadow_size"] = s;
    o["max_edges"] = e.max_edges;
    o["witness_id"] = witness_id(s);
    o["witness"] = graph_json(e.witness);
    ext.push_back(std::move(o));
  }
  j["extremal"] = std::move(ext);
  j["infeasible_shadow_sizes"] = rep.infeasible;

  ordered_json st;
  st["visited"] = rep.stats.visited;
  st["pruned_family"] = rep.stats.pruned_family;
  st["pruned_iso"] = rep.stats.pruned_iso;
  st["pruned_bound"] = rep.stats.pruned_bound;
  st["partial"] = rep.stats.partial;
  j["stats"] = std::move(st);
  return j.dump(2) + "\n";
}

std::string points_csv(const ExploreReport& rep) {
  const std::int64_t faces = binomial(rep.n, rep.r - 1);
  const std::int64_t edges = binomial(rep.n, rep.r);
  const std::string fam = csv_field(rep.family.to_string());
  std::ostringstream os;
  os << "n,r,family,shadow_size,edge_count,x,y,x_exact,y_exact,multiplicity\r\n";
  for (const auto& p : rep.points) {
    const auto d = rep.density(p);
    os << rep.n << ',' << rep.r << ',' << fam << ',' << p.shadow_size << ',' << p.edge_count << ','
       << format_double(d.x) << ',' << format_double(d.y) << ',' << fraction(p.shadow_size, faces) << ','
       << fraction(p.edge_count, edges) << ',' << p.multiplicity << "\r\n";
  }
  return os.str();
}

std::string extremal_csv(const ExploreReport& rep) {
  std::ostringstream os;
  os << "shadow_size,max_edges,witness_id\r\n";
  for (const auto& [s, e] : rep.extremal) os << s << ',' << e.max_edges << ',' << witness_id(s) << "\r\n";
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<std::filesystem::path> write_report(const ExploreReport& rep, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  auto put = [&](const std::filesystem::path& p, const std::string& text) {
    write_text_file(p, text);
    out.push_back(p);
  };
  put(dir / "report.json", report_json(rep));
  put(dir / "points.csv", points_csv(rep));
  put(dir / "extremal.csv", extremal_csv(rep));
  for (const auto& [s, e] : rep.extremal) put(dir / "witnesses" / (witness_id(s) + ".json"), to_json(e.witness));
  return out;
}

}  // namespace shadowlab
