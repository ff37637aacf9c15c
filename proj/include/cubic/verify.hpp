#pragma once

#include <string>
#include <vector>

#include "cubic/census.hpp"
#include "cubic/closed_forms.hpp"
#include "cubic/report.hpp"

namespace cubic {

// Census run + side-by-side comparison against the registered closed forms.
VerificationReport verify_census_case(PairCase c, int q, const EngineOptions& opt = {});
VerificationReport compare_census(const CensusTable& t, PairCase c, int q, const Geometry& g,
                                  const EngineOptions& opt, double census_ms);
// CensusTable plus its report, for the CLI.
struct CensusRun {
  CensusTable table;
  VerificationReport report;
};
CensusRun run_census(int d, int e, int q, bool affine, const EngineOptions& opt = {});

VerificationReport verify_codes(const std::vector<int>& qs, const EngineOptions& opt = {});
VerificationReport verify_duals(const std::vector<int>& qs, const EngineOptions& opt = {});
VerificationReport verify_configs(const std::vector<int>& qs, const EngineOptions& opt = {});
VerificationReport verify_classnumbers(const std::vector<int>& qs, const EngineOptions& opt = {});
VerificationReport verify_appendix(const std::vector<int>& qs, const EngineOptions& opt = {});
VerificationReport verify_structural(const std::vector<int>& qs, const EngineOptions& opt = {});

// suite in {codes, duals, configs, classnumbers, appendix, census, structural,
// all}; an empty qs picks each suite's default list.
VerificationReport verify_suite(const std::string& suite, std::vector<int> qs,
                                const EngineOptions& opt = {});

std::vector<int> default_qs_for_suite(const std::string& suite);

} // namespace cubic
