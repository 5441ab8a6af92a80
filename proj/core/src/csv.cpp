#include "ambient/csv.hpp"

#include <cstdio>
#include <fstream>

namespace ambient {
namespace {

void append_value(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::string trace_to_csv(const SimulationTrace& trace) {
  std::string out = kTraceCsvHeader;
  out += '\n';
  for (const TraceRow& row : trace) {
    const double values[] = {row.t,          row.err_A,     row.err_b,     row.V,
                             row.membership, row.sigma_min, row.sigma_max, row.xi_norm};
    for (int i = 0; i < 8; ++i) {
      if (i) out += ',';
      append_value(out, values[i]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const SimulationTrace& trace, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("emit_csv: cannot open '" + path + "' for writing");
  const std::string body = trace_to_csv(trace);
  file.write(body.data(), static_cast<std::streamsize>(body.size()));
  file.flush();
  if (!file) throw IoError("emit_csv: write to '" + path + "' failed");
}

}  // namespace ambient
