#include "shadowlab/hypergraph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace shadowlab {

std::string to_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.n();
  j["r"] = h.r();
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
  }
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.n() << ' ' << h.r() << '\n';
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k];
    os << '\n';
  }
  return os.str();
}

Hypergraph parse_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("edges"))
      throw std::invalid_argument("hypergraph JSON needs keys n, r, edges");
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      Edge edge;
      for (const auto& v : e) {
        const auto value = v.get<long long>();
        if (value < 0) throw std::invalid_argument("negative vertex label");
        edge.push_back(static_cast<Vertex>(value));
      }
      edges.push_back(std::move(edge));
    }
    return Hypergraph(n, r, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed hypergraph JSON: ") + e.what());
  }
}

Hypergraph parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1, r = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (ls >> n >> r) break;
  }
  if (n < 0 || r < 1) throw std::invalid_argument("text hypergraph needs an 'n r' header");
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Edge e;
    long long v;
    while (ls >> v) {
      if (v < 0) throw std::invalid_argument("negative vertex label");
      e.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) throw std::invalid_argument("non-numeric token in edge line: " + line);
    if (!e.empty()) edges.push_back(std::move(e));
  }
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_json(text);
  return parse_text(text);
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

void write_hypergraph(const Hypergraph& h, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << (format == GraphFormat::Json ? to_json(h) : to_text(h));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace shadowlab
