#pragma once

#include <stdexcept>
#include <string>

namespace mvkit {

// Library error kinds. Every throwing path uses one of these so the CLI can
// map failures to stable, machine-parsable names.
enum class errc {
  not_gcm,
  not_symmetrizable,
  bad_symmetrizer,
  bad_orientation,
  missing_orientation,
  incompatible_pairs,
  not_finite_type,
  cap_exceeded,
  size_guard,
  not_reduced,
  not_reduced_target,
  non_integral,
  negative_multiplicity,
  bad_window,
  g2_unsupported,
  nonneg_violation,
  on_wall,
  phi_nonzero,
  non_termination,
  overflow,
  bad_input,
};

const char* errc_name(errc c);

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw domain_error(code, what);
}

}  // namespace mvkit
