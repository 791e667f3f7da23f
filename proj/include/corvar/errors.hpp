#pragma once

#include <stdexcept>
#include <string>

namespace corvar {

enum class errc {
  io,
  encoding,
  parse,
  invalid_arc,
  empty_corpus,
  schema,
  undefined_metric,
  length_mismatch,
  degenerate_input,
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

  // Exit-code class for the CLI: input errors vs semantic/invariant errors.
  bool is_input_error() const noexcept {
    switch (code_) {
      case errc::io:
      case errc::encoding:
      case errc::parse:
      case errc::invalid_arc:
      case errc::schema:
        return true;
      default:
        return false;
    }
  }

 private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace corvar
