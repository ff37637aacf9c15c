#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubic {

inline constexpr const char* kToolVersion = "1.0.0";

struct CheckRow {
  std::string id;
  int q = 0;
  std::string expected; // closed-form value, decimal string
  std::string actual;   // computed value, decimal string
  bool pass = false;
  bool informational = false; // never gates the overall verdict
  double ms = 0;
};

struct FieldStamp {
  int q = 0;
  std::string modulus;
  uint64_t point_order_hash = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<FieldStamp> fields;
  std::vector<CheckRow> rows;

  bool overall() const {
    for (const auto& r : rows)
      if (!r.pass && !r.informational) return false;
    return true;
  }
  void append(const VerificationReport& o);
  CheckRow& add(const std::string& id, int q, const std::string& expected,
                const std::string& actual, bool informational = false);
  void stamp_field(int q);
};

// Deterministic payload; timings are emitted only when include_timing is set.
std::string report_to_json(const VerificationReport& r, bool include_timing = false);
std::string report_to_csv(const VerificationReport& r, bool include_timing = false);

} // namespace cubic
