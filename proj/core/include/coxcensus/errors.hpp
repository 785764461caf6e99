#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxcensus {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// Raised when a search, enumeration or elimination runs past its configured
// limit. `stage` names the pipeline step that gave up.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string stage, const std::string& message);

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace coxcensus
