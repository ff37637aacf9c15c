// cubic-census: exact censuses of plane curve intersections over small finite
// fields, weight enumerators of the associated projective Reed-Muller codes,
// and verification suites comparing every count against its closed form.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cubic/census.hpp"
#include "cubic/codes.hpp"
#include "cubic/classnum.hpp"
#include "cubic/configs.hpp"
#include "cubic/report.hpp"
#include "cubic/verify.hpp"

using namespace cubic;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  os << text;
}

std::vector<int> parse_qlist(const std::string& s) {
  std::vector<int> qs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) qs.push_back(std::stoi(item));
  return qs;
}

nlohmann::ordered_json census_json(const CensusTable& t) {
  nlohmann::ordered_json j;
  j["q"] = t.q;
  j["d"] = t.d;
  j["e"] = t.e;
  j["affine"] = t.affine;
  j["length"] = t.n;
  j["zero_pairs"] = t.zero_pairs.get_str();
  j["proportional_pairs"] = t.proportional_pairs.get_str();
  auto arr = [](const std::vector<mpz_class>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  j["coprime_by_common_zeros"] = arr(t.coprime);
  j["shared_component_by_common_zeros"] = arr(t.shared);
  j["grand_total"] = t.grand_total().get_str();
  return j;
}

std::string census_csv(const CensusTable& t) {
  std::ostringstream os;
  os << "common_zeros,coprime_pairs,shared_component_pairs\n";
  for (int k = 0; k <= t.n; ++k)
    os << k << "," << t.coprime[k].get_str() << "," << t.shared[k].get_str() << "\n";
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact plane-curve intersection censuses and code enumerators"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  int threads = 0;
  bool extended = false;
  bool timing = false;
  uint64_t budget_override = 0;
  std::string format = "json";
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (default: CUBIC_CENSUS_THREADS or all cores)");
  app.add_flag("--extended", extended, "allow the long-running budgets (q=4 cubic-cubic census)");
  app.add_flag("--timing", timing, "include a timing section in reports");
  app.add_option("--budget-override", budget_override, "raw pair-operation budget override");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  auto* census = app.add_subcommand("census", "brute-force pair census with closed-form comparison");
  int d = 3, e = 3, q = 3;
  bool affine = false;
  census->add_option("--d", d, "degree of the first form")->required();
  census->add_option("--e", e, "degree of the second form")->required();
  census->add_option("--q", q, "field size")->required();
  census->add_flag("--affine", affine, "affine variant (d = e = 2)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::string qlist;
  verify->add_option("--suite", suite,
                     "codes|duals|configs|classnumbers|appendix|census|structural|all")
      ->required();
  verify->add_option("--q", qlist, "comma-separated field sizes (default: per-suite list)");

  auto* formulas = app.add_subcommand("formulas", "registered closed-form polynomials");
  std::string action, fid;
  long fq = 0;
  bool informational = false;
  formulas->add_option("action", action, "list or eval")->required();
  formulas->add_option("--id", fid, "formula id for eval");
  formulas->add_option("--q", fq, "evaluation point for eval");
  formulas->add_flag("--informational", informational, "evaluate outside the validity range");

  auto* trace = app.add_subcommand("trace-table", "exact trace-probability table for one field");
  int tq = 3;
  trace->add_option("--q", tq, "field size (prime power)")->required();

  auto* dump = app.add_subcommand("dump-code", "generator/dual matrices and the point order");
  int dq = 3, dd = 3;
  std::string dkind = "projective";
  bool dump_dual = false;
  dump->add_option("--q", dq, "field size")->required();
  dump->add_option("--d", dd, "form degree")->required();
  dump->add_option("--kind", dkind, "projective or affine")
      ->check(CLI::IsMember({"projective", "affine"}));
  dump->add_flag("--dual", dump_dual, "include the dual basis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : kExitUsage;
  }

  EngineOptions opt;
  opt.threads = threads;
  opt.extended = extended;
  opt.budget_override = budget_override;

  try {
    if (census->parsed()) {
      CensusRun run = run_census(d, e, q, affine, opt);
      if (format == "csv") {
        write_out(census_csv(run.table) + report_to_csv(run.report, timing), out_path);
      } else {
        nlohmann::ordered_json j;
        j["census"] = census_json(run.table);
        j["comparison"] = nlohmann::ordered_json::parse(report_to_json(run.report, timing));
        write_out(j.dump(2) + "\n", out_path);
      }
      return run.report.overall() ? kExitPass : kExitCheckFailed;
    }

    if (verify->parsed()) {
      VerificationReport rep = verify_suite(suite, parse_qlist(qlist), opt);
      write_out(format == "csv" ? report_to_csv(rep, timing) : report_to_json(rep, timing),
                out_path);
      return rep.overall() ? kExitPass : kExitCheckFailed;
    }

    if (formulas->parsed()) {
      const auto& reg = FormulaRegistry::instance();
      if (action == "list") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& f : reg.all()) {
          nlohmann::ordered_json jf;
          jf["id"] = f.id;
          jf["source"] = f.source;
          jf["q_min"] = f.q_min;
          jf["degree"] = f.poly.degree();
          jf["polynomial"] = f.poly.to_string();
          j.push_back(jf);
        }
        write_out(j.dump(2) + "\n", out_path);
        return kExitPass;
      }
      if (action == "eval") {
        if (fid.empty() || fq == 0) {
          std::cerr << "formulas eval needs --id and --q\n";
          return kExitUsage;
        }
        if (!reg.find(fid)) {
          std::cerr << "unknown formula id: " << fid << "\n";
          return kExitUsage;
        }
        mpq_class v = reg.eval(fid, fq, informational);
        v.canonicalize();
        write_out(v.get_str() + "\n", out_path);
        return kExitPass;
      }
      std::cerr << "formulas action must be list or eval\n";
      return kExitUsage;
    }

    if (trace->parsed()) {
      if (!is_prime_power(tq)) {
        std::cerr << "q must be a prime power\n";
        return kExitUsage;
      }
      nlohmann::ordered_json j;
      j["q"] = tq;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      mpq_class sum = 0;
      for (long t = -16; t <= 16; ++t) {
        if (t * t > 4L * tq) continue;
        mpq_class p = trace_probability(tq, t);
        sum += p;
        nlohmann::ordered_json jr;
        jr["t"] = t;
        jr["points"] = tq + 1 - t;
        jr["probability"] = p.get_str();
        rows.push_back(jr);
      }
      j["rows"] = rows;
      j["sum"] = sum.get_str();
      write_out(j.dump(2) + "\n", out_path);
      return sum == 1 ? kExitPass : kExitCheckFailed;
    }

    if (dump->parsed()) {
      Field F = Field::make(dq);
      Plane pl(F);
      LinearCode code = (dkind == "affine") ? build_affine_code(F, dd)
                                            : build_projective_code(pl, dd);
      nlohmann::ordered_json j;
      j["q"] = dq;
      j["kind"] = code.kind_tag();
      j["n"] = code.n;
      j["k"] = code.k;
      std::ostringstream mod;
      for (size_t i = 0; i < F.modulus().size(); ++i) {
        if (i) mod << ",";
        mod << F.modulus()[i];
      }
      j["modulus"] = mod.str();
      if (dkind == "projective") {
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& P : pl.points()) pts.push_back({P[0], P[1], P[2]});
        j["points"] = pts;
        j["point_order_hash"] = std::to_string(pl.point_order_hash());
      }
      auto matrix = [](const std::vector<std::vector<Elt>>& rows) {
        nlohmann::ordered_json m = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
          nlohmann::ordered_json jr = nlohmann::ordered_json::array();
          for (Elt v : r) jr.push_back(v);
          m.push_back(jr);
        }
        return m;
      };
      j["generator"] = matrix(code.gen);
      if (dump_dual) j["dual"] = matrix(dual_code(code).gen);
      write_out(j.dump(2) + "\n", out_path);
      return kExitPass;
    }
  } catch (const BudgetError& err) {
    std::cerr << "budget: " << err.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
