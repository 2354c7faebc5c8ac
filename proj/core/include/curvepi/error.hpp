#ifndef CURVEPI_ERROR_HPP_
#define CURVEPI_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvepi {

  // Base class for every exception thrown by the library. Budget exhaustion,
  // enumeration overflow and unclassified inputs are results, not errors.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // One failed check with enough context to re-check it by hand.
  struct Issue {
    std::string check;
    std::string message;
  };

  struct ValidationReport {
    std::vector<Issue> issues;

    bool ok() const noexcept {
      return issues.empty();
    }
    void fail(std::string check, std::string message) {
      issues.push_back({std::move(check), std::move(message)});
    }
    bool has(std::string const& check) const {
      for (auto const& i : issues) {
        if (i.check == check) {
          return true;
        }
      }
      return false;
    }
  };

}  // namespace curvepi

#endif  // CURVEPI_ERROR_HPP_
