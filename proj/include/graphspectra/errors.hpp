#pragma once

#include <stdexcept>
#include <string>

namespace graphspectra {

/// Failure categories raised by the toolkit. Each maps to a process exit
/// class: configuration problems (2), data problems (3), numerical
/// failures (4).
enum class errc {
  // configuration
  invalid_parameters,
  invalid_order,
  invalid_density,
  invalid_pivot,
  invalid_warp,
  invalid_config,
  // data
  index_out_of_range,
  self_loop,
  negative_weight,
  duplicate_edge,
  asymmetric_weight,
  isolated_vertex,
  disconnected,
  dimension_mismatch,
  domain_mismatch,
  duplicate_abscissa,
  non_monotone_input,
  parse_error,
  too_large,
  zero_signal,
  not_parseval,
  // numerical
  no_convergence,
  degree_too_large,
  non_monotone_esd,
  degenerate_signal,
  out_of_domain,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

/// Process exit code class for an error category (geared to the CLI:
/// 2 = config, 3 = data, 4 = numerical).
inline int exit_code_for(errc code) {
  switch (code) {
    case errc::invalid_parameters:
    case errc::invalid_order:
    case errc::invalid_density:
    case errc::invalid_pivot:
    case errc::invalid_warp:
    case errc::invalid_config:
      return 2;
    case errc::no_convergence:
    case errc::degree_too_large:
    case errc::non_monotone_esd:
    case errc::degenerate_signal:
    case errc::out_of_domain:
      return 4;
    default:
      return 3;
  }
}

}  // namespace graphspectra
