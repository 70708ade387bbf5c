#ifndef NLIE_ERROR_HPP
#define NLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nlie {

enum class ErrorCode {
  parse,
  invalid_argument,
  field_mismatch,
  dimension_mismatch,
  not_an_ideal,
  fi_violation,
  budget_exceeded,
  unsupported,
};

/// Base of every exception thrown by the library. The code survives the
/// trip through the C API as an nlie_status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

}  // namespace nlie

#endif
