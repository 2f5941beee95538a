#pragma once

#include <stdexcept>
#include <string>

namespace cubicdist {

// Selects between the logarithm (Case 1) and the logarithmic derivative
// (Case 2) of the L-value, everywhere both appear.
enum class CaseKind { Log, LogDeriv };

inline const char* case_name(CaseKind k) { return k == CaseKind::Log ? "log" : "logderiv"; }

inline CaseKind case_from_name(const std::string& s) {
  if (s == "log") return CaseKind::Log;
  if (s == "logderiv") return CaseKind::LogDeriv;
  throw std::invalid_argument("unknown case: " + s + " (expected log|logderiv)");
}

}  // namespace cubicdist
