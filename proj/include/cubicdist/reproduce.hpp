#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubicdist {

enum class Profile { kQuick, kFull };

inline const char* profile_name(Profile p) { return p == Profile::kQuick ? "quick" : "full"; }

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance pipeline (12 criteria). The quick profile keeps
// the distribution sweep at family norm 1e5 (headline comparison at 1e4,
// threshold 0.10); the full profile evaluates the family to 1e6 (threshold
// 0.05). Everything else runs at its stated scale in both profiles. One
// log line is emitted per criterion.
std::vector<CriterionResult> run_acceptance(Profile profile, int threads, std::ostream& log);

}  // namespace cubicdist
