#pragma once

#include <stdexcept>
#include <string>

namespace wdrd {

enum class errc {
  invalid_parameter,
  format_error,
  not_a_group,
  loop_error,
  connectivity_error,
  no_circuit,
  domain_error,
  unsupported_family,
  parameter_out_of_range,
  search_exhausted,
  cache_corrupt,
  incomplete_catalog,
  invalid_state,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace wdrd
