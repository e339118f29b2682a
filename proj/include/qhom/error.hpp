#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

enum class ErrorKind {
  InvalidModulus,
  ElementMismatch,
  NotOddOrder,
  NotAGroup,
  NotAQuasigroup,
  InvalidCocycle,
  ResourceLimit,
  Parse,
  Overflow,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the checked 64-bit arithmetic path; callers retry with bignums.
class OverflowError : public Error {
 public:
  OverflowError() : Error(ErrorKind::Overflow, "64-bit integer overflow") {}
};

// Resource budget shared by the linear algebra and chain-complex builders.
struct Budget {
  std::size_t max_group_order = 4096;
  std::size_t max_matrix_columns = 1'000'000;
  double max_elimination_seconds = 0.0;  // 0 = unlimited
};

const Budget& default_budget();

}  // namespace qhom
