#pragma once

#include <stdexcept>
#include <string>

namespace chronos {

enum class ErrorCode {
  malformed_input,
  loop_edge,
  invalid_label,
  invalid_vertex,
  precondition,
  not_a_forest,
  not_chordal,
  budget_exceeded,
  explosion,
  no_path,
  counter_failure,
  invalid_parameter,
  no_feasible_algorithm,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chronos
