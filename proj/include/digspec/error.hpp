#ifndef DIGSPEC_ERROR_HPP
#define DIGSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace digspec {

enum class ErrorCode {
  LoopArc,
  DuplicateArc,
  VertexOutOfRange,
  InvalidOrder,
  OrderMismatch,
  SearchSpaceTooLarge,
  NotSymmetric,
  NoConvergence,
  SingularBlock,
  IndexError,
  ParseError,
  Internal,
};

inline std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularBlock: return "SingularBlock";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace digspec

#endif  // DIGSPEC_ERROR_HPP
