#include "gib/record.hpp"

#include <cstdio>
#include <stdexcept>

namespace gib {

const std::array<const char*, kRecordColumns>& record_columns() {
  static const std::array<const char*, kRecordColumns> cols = {
      "t",           "H",           "P",
      "I",           "J",           "N",
      "dIdt_fd",     "dIdt_formula", "dJdt_fd",
      "dJdt_formula", "dNdt_fd",     "dNdt_formula",
      "Qt",          "SQt",         "PQt",
      "lyap_v2",     "lyap_uHu",    "lyap_up1",
      "lyap_uHup",   "norm_interior", "norm_exterior",
      "sup_u",       "tail_spec"};
  return cols;
}

std::array<double, kRecordColumns> record_values(const DiagnosticsRecord& r) {
  return {r.t,          r.H,           r.P,
          r.I,          r.J,           r.N,
          r.dIdt_fd,    r.dIdt_formula, r.dJdt_fd,
          r.dJdt_formula, r.dNdt_fd,   r.dNdt_formula,
          r.Qt,         r.SQt,         r.PQt,
          r.lyap_v2,    r.lyap_uHu,    r.lyap_up1,
          r.lyap_uHup,  r.norm_interior, r.norm_exterior,
          r.sup_u,      r.tail_spec};
}

std::string csv_header() {
  std::string out;
  const auto& cols = record_columns();
  for (int i = 0; i < kRecordColumns; ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  return out;
}

std::string to_csv_row(const DiagnosticsRecord& r) {
  const auto vals = record_values(r);
  std::string out;
  char buf[40];
  for (int i = 0; i < kRecordColumns; ++i) {
    if (i) out += ',';
    std::snprintf(buf, sizeof(buf), "%.17g", vals[i]);
    out += buf;
  }
  return out;
}

void write_records(const std::string& path,
                   std::span<const DiagnosticsRecord> rows) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("write_records: cannot open " + path);
  std::string text = csv_header();
  text += '\n';
  for (const auto& r : rows) {
    text += to_csv_row(r);
    text += '\n';
  }
  const std::size_t written = std::fwrite(text.data(), 1, text.size(), f);
  const int closed = std::fclose(f);
  if (written != text.size() || closed != 0)
    throw std::runtime_error("write_records: short write to " + path);
}

}  // namespace gib
