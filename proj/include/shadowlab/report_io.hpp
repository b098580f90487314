#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/explore.hpp"

namespace shadowlab {

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view text);
/// Shortest round-trip decimal.
std::string format_double(double v);

std::string witness_id(std::int64_t shadow_size);

/// Report JSON. Thread count and wall time are left out so that reruns
/// compare byte for byte.
std::string report_json(const ExploreReport& rep);
/// n,r,family,shadow_size,edge_count,x,y,x_exact,y_exact,multiplicity
std::string points_csv(const ExploreReport& rep);
/// shadow_size,max_edges,witness_id
std::string extremal_csv(const ExploreReport& rep);

/// Writes report.json, points.csv, extremal.csv and witnesses/*.json under
/// dir; returns the written paths in a stable order.
std::vector<std::filesystem::path> write_report(const ExploreReport& rep, const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace shadowlab
