#ifndef ZECKGODEL_ERROR_HPP_
#define ZECKGODEL_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zg {

enum class ErrorKind {
  kInvalidArgument,
  kMalformedSupport,
  kNotASequenceCode,
  kCodeTooLarge,
  kInvalidSymbol,
  kParse,
  kNotWff,
  kNotTerm,
  kNumeralTooLarge,
  kZeroSymbol,
  kPrimeSupportGap,
  kFactorExceedsTable,
  kConfig,
};

// Stable identifier used in the CLI's JSON error objects.
std::string_view error_code_name(ErrorKind kind);

// Domain error raised by every module. `position` is set for parse errors
// (symbol index for symbol strings, byte offset for prefix text).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<std::size_t>& position() const { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace zg

#endif  // ZECKGODEL_ERROR_HPP_
