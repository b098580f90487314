#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

enum class GraphFormat { Json, Text };

/// {"n":N,"r":R,"edges":[[...],...]} on one line, edges canonical.
std::string to_json(const Hypergraph& h);
/// Header "n r", then one space-separated edge per line.
std::string to_text(const Hypergraph& h);

Hypergraph parse_json(std::string_view text);
Hypergraph parse_text(std::string_view text);
/// Chooses JSON when the first non-blank character is '{'.
Hypergraph parse_hypergraph(std::string_view text);

Hypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(const Hypergraph& h, const std::filesystem::path& path, GraphFormat format);

}  // namespace shadowlab
