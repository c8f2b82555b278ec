#include "zeckgodel/error.hpp"

namespace zg {

std::string_view error_code_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kMalformedSupport: return "malformed_support";
    case ErrorKind::kNotASequenceCode: return "not_a_sequence_code";
    case ErrorKind::kCodeTooLarge: return "code_too_large";
    case ErrorKind::kInvalidSymbol: return "invalid_symbol_number";
    case ErrorKind::kParse: return "parse_error";
    case ErrorKind::kNotWff: return "not_a_wff_code";
    case ErrorKind::kNotTerm: return "not_a_term_code";
    case ErrorKind::kNumeralTooLarge: return "numeral_too_large";
    case ErrorKind::kZeroSymbol: return "zero_symbol";
    case ErrorKind::kPrimeSupportGap: return "gap_in_prime_support";
    case ErrorKind::kFactorExceedsTable: return "factor_exceeds_table";
    case ErrorKind::kConfig: return "config_error";
  }
  return "unknown";
}

}  // namespace zg
