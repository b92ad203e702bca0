#pragma once

#include <stdexcept>
#include <string>

namespace plifs {

enum class Errc {
  invalid_arc,
  ambient_mismatch,
  empty_set,
  not_a_homeomorphism,
  out_of_domain,
  invalid_geometry,
  infeasible_slopes,
  overflow,
  insufficient_depth,
  evidence_contradicts_metadata,
  depth_exceeds_data,
  parse_error,
};

const char *errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) { throw Error(code, what); }

} // namespace plifs
