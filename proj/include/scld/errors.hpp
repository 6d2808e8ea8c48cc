#ifndef SCLD_ERRORS_HPP
#define SCLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scld {

enum class errc {
  invalid_vertex,
  malformed_facet,
  invalid_argument,
  pattern_too_large,
  oracle_too_large,
  no_positive_exponent,
  invalid_subcomplex,
  invalid_range,
  invalid_field,
  degenerate_mean,
  witness_bound_violated,
  nonconvergent_float,
  parse_error,
  io_error,
  internal,
};

const char* errc_name(errc code);

/// True for guard-type failures (size/enumeration limits), which the CLI
/// maps to a distinct exit code.
inline bool errc_is_guard(errc code) {
  return code == errc::pattern_too_large || code == errc::oracle_too_large;
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace scld

#endif
