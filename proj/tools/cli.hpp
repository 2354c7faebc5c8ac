#ifndef CURVEPI_TOOLS_CLI_HPP_
#define CURVEPI_TOOLS_CLI_HPP_

#include <iosfwd>

namespace curvepi::cli {

  inline constexpr int kSuccess       = 0;
  inline constexpr int kDomainFailure = 1;  // overflow, not covered, failed lemma
  inline constexpr int kUsageError    = 2;

  // Entry point behind main(); stdin is read only when a subcommand needs a
  // presentation and none was given.
  int run_cli(int argc, char const* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace curvepi::cli

#endif  // CURVEPI_TOOLS_CLI_HPP_
