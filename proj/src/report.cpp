#include "cubic/report.hpp"

#include <json.hpp>

#include <sstream>

#include "cubic/gf.hpp"
#include "cubic/plane.hpp"

namespace cubic {

void VerificationReport::append(const VerificationReport& o) {
  for (const auto& f : o.fields) {
    bool seen = false;
    for (const auto& mine : fields)
      if (mine.q == f.q) seen = true;
    if (!seen) fields.push_back(f);
  }
  rows.insert(rows.end(), o.rows.begin(), o.rows.end());
}

CheckRow& VerificationReport::add(const std::string& id, int q, const std::string& expected,
                                  const std::string& actual, bool informational) {
  CheckRow r;
  r.id = id;
  r.q = q;
  r.expected = expected;
  r.actual = actual;
  r.pass = (expected == actual);
  r.informational = informational;
  rows.push_back(std::move(r));
  return rows.back();
}

void VerificationReport::stamp_field(int q) {
  for (const auto& f : fields)
    if (f.q == q) return;
  Field F = Field::make(q);
  Plane pl(F);
  std::ostringstream mod;
  for (size_t i = 0; i < F.modulus().size(); ++i) {
    if (i) mod << ",";
    mod << F.modulus()[i];
  }
  fields.push_back({q, mod.str(), pl.point_order_hash()});
}

std::string report_to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["tool_version"] = kToolVersion;
  j["overall"] = r.overall() ? "pass" : "fail";
  j["fields"] = nlohmann::ordered_json::array();
  for (const auto& f : r.fields) {
    nlohmann::ordered_json jf;
    jf["q"] = f.q;
    jf["modulus"] = f.modulus;
    jf["point_order_hash"] = std::to_string(f.point_order_hash);
    j["fields"].push_back(jf);
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json jr;
    jr["id"] = row.id;
    jr["q"] = row.q;
    jr["expected"] = row.expected;
    jr["actual"] = row.actual;
    jr["verdict"] = row.pass ? "pass" : "fail";
    if (row.informational) jr["informational"] = true;
    j["checks"].push_back(jr);
  }
  if (include_timing) {
    j["timing_ms"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
      nlohmann::ordered_json jt;
      jt["id"] = row.id;
      jt["q"] = row.q;
      jt["ms"] = row.ms;
      j["timing_ms"].push_back(jt);
    }
  }
  return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& r, bool include_timing) {
  std::ostringstream os;
  os << "suite,id,q,expected,actual,verdict,informational";
  if (include_timing) os << ",ms";
  os << "\n";
  for (const auto& row : r.rows) {
    os << r.suite << "," << row.id << "," << row.q << "," << row.expected << ","
       << row.actual << "," << (row.pass ? "pass" : "fail") << ","
       << (row.informational ? "1" : "0");
    if (include_timing) os << "," << row.ms;
    os << "\n";
  }
  return os.str();
}

} // namespace cubic
