#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace gib {

// One sampled row of time-series output. Column order is fixed and mirrored
// exactly by the CSV header and the JSON column manifest.
struct DiagnosticsRecord {
  double t = 0.0;
  double H = 0.0;
  double P = 0.0;
  double I = 0.0;
  double J = 0.0;
  double N = 0.0;
  double dIdt_fd = 0.0;
  double dIdt_formula = 0.0;
  double dJdt_fd = 0.0;
  double dJdt_formula = 0.0;
  double dNdt_fd = 0.0;
  double dNdt_formula = 0.0;
  double Qt = 0.0;
  double SQt = 0.0;
  double PQt = 0.0;
  double lyap_v2 = 0.0;
  double lyap_uHu = 0.0;
  double lyap_up1 = 0.0;
  double lyap_uHup = 0.0;
  double norm_interior = 0.0;
  double norm_exterior = 0.0;
  double sup_u = 0.0;
  double tail_spec = 0.0;
};

inline constexpr int kRecordColumns = 23;

const std::array<const char*, kRecordColumns>& record_columns();
std::array<double, kRecordColumns> record_values(const DiagnosticsRecord& r);

std::string csv_header();
// Floating point printed with 17 significant digits.
std::string to_csv_row(const DiagnosticsRecord& r);

// Writes header plus one line per record; throws on I/O failure naming the
// path.
void write_records(const std::string& path,
                   std::span<const DiagnosticsRecord> rows);

}  // namespace gib
