#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace cubicdist {

inline constexpr const char* kToolVersion = "cubic-dist 1.0.0";

// 12 significant digits, the CSV/JSON number format.
std::string fmt12(double v);

// Config echo: "# key=value" lines, then the mandatory header row.
void write_csv_header(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& config,
                      const std::string& columns);

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

std::string cache_directory();  // $CUBIC_DIST_CACHE or "cache"

}  // namespace cubicdist
