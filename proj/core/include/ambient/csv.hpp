#pragma once

#include <stdexcept>
#include <string>

#include "ambient/simulate.hpp"

namespace ambient {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kTraceCsvHeader =
    "t,err_A,err_b,V,membership,sigma_min,sigma_max,xi_norm";

/// Writes the trace as CSV: the exact header above, one row per trace row,
/// 17 significant digits (value-preserving), LF line endings.
void emit_csv(const SimulationTrace& trace, const std::string& path);

/// In-memory form of the same bytes.
std::string trace_to_csv(const SimulationTrace& trace);

}  // namespace ambient
