#ifndef CURVEPI_FIXTURES_HPP_
#define CURVEPI_FIXTURES_HPP_

#include <optional>
#include <span>
#include <string_view>

namespace curvepi {

  struct EmbeddedFixture {
    char const* name;  // path relative to fixtures/, e.g. "types/case_1_1.json"
    char const* json;
  };

  // JSON fixtures compiled into the library; the list ends before the
  // terminating empty entry.
  std::span<EmbeddedFixture const> embedded_fixtures();

  std::optional<std::string_view> find_fixture(std::string_view name);

}  // namespace curvepi

#endif  // CURVEPI_FIXTURES_HPP_
