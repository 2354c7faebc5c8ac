#ifndef CURVEPI_VERIFY_HPP_
#define CURVEPI_VERIFY_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvepi/coset_table.hpp"
#include "curvepi/derivation.hpp"

namespace curvepi {

  enum class Status { pass, fail, inconclusive };
  std::string to_string(Status s);

  struct LemmaReport {
    std::string    id;
    std::string    title;
    Status         status = Status::fail;
    std::string    detail;  // witness on failure, budget hint when inconclusive
    nlohmann::json artifacts = nlohmann::json::object();
    double         elapsed   = 0.0;  // seconds
  };

  struct SuiteOptions {
    std::vector<std::string> only;  // empty runs everything
    EnumLimits               limits;
    DerivationBudget         budget;
  };

  // "V1" .. "V12"
  std::vector<std::string> const& lemma_ids();

  // Throws Error for an unknown lemma id.
  std::vector<LemmaReport> run_suite(SuiteOptions const& options = {});
  LemmaReport              run_lemma(std::string const& id, SuiteOptions const& options = {});

  bool all_passed(std::vector<LemmaReport> const& reports);

  // elapsed is emitted only with timings, so the default output is
  // byte-for-byte reproducible.
  nlohmann::json to_json(std::vector<LemmaReport> const& reports, bool timings = false);
  // "V1  PASS  Order 320: ..." lines.
  std::string format_reports(std::vector<LemmaReport> const& reports, bool timings = false);

}  // namespace curvepi

#endif  // CURVEPI_VERIFY_HPP_
