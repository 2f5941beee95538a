#include "cubicdist/csvio.hpp"

#include <cstdlib>

namespace cubicdist {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv_header(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& config,
                      const std::string& columns) {
  os << "# tool=" << kToolVersion << "\n";
  for (const auto& [k, v] : config) os << "# " << k << "=" << v << "\n";
  os << columns << "\n";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ",";
    os << fields[i];
  }
  os << "\n";
}

std::string cache_directory() {
  const char* env = std::getenv("CUBIC_DIST_CACHE");
  return env && *env ? env : "cache";
}

}  // namespace cubicdist
