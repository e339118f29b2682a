#include "qhom/error.hpp"

namespace qhom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::ElementMismatch: return "element-mismatch";
    case ErrorKind::NotOddOrder: return "not-odd-order";
    case ErrorKind::NotAGroup: return "not-a-group";
    case ErrorKind::NotAQuasigroup: return "not-a-quasigroup";
    case ErrorKind::InvalidCocycle: return "invalid-cocycle";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Overflow: return "overflow";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

const Budget& default_budget() {
  static const Budget budget{};
  return budget;
}

}  // namespace qhom
