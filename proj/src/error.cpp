#include "lce/error.hpp"

namespace lce {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::overlap: return "overlap";
    case ErrorKind::range: return "range";
    case ErrorKind::loop: return "loop";
    case ErrorKind::duplicate: return "duplicate";
    case ErrorKind::bijection: return "bijection";
    case ErrorKind::incomplete: return "incomplete";
    case ErrorKind::infeasible_ordering: return "infeasible-ordering";
    case ErrorKind::membership: return "membership";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::invalid_model: return "invalid-model";
    case ErrorKind::invalid_instance: return "invalid-instance";
    case ErrorKind::invalid_certificate: return "invalid-certificate";
    case ErrorKind::self_loop: return "self-loop";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace lce
