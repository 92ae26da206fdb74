// Error taxonomy shared by the library and the CLI. Exit codes: 0 success,
// 2 input error, 3 translate-of-subtorus, 4 property failure, 5 precision
// budget exhausted.
#pragma once

#include <stdexcept>
#include <string>

namespace slopecert {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual int exit_code() const { return 1; }
};

struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 2; }
};

/// Syntax error with a byte offset into the source text.
struct ParseError : InputError {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : InputError(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// The scanned curve is a translate of the subtorus named by the witness
/// slope; the finiteness theorem excludes this case, so scans abort.
struct TranslateOfSubtorusError : Error {
  long p, q;
  TranslateOfSubtorusError(long p_, long q_)
      : Error("curve is a translate of the subtorus with slope (" +
              std::to_string(p_) + "," + std::to_string(q_) + ")"),
        p(p_),
        q(q_) {}
  int exit_code() const override { return 3; }
};

struct InfiniteIntersectionError : Error {
  explicit InfiniteIntersectionError(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 3; }
};

struct PropertyFailure : Error {
  explicit PropertyFailure(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 4; }
};

struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
  int exit_code() const override { return 5; }
};

/// A certified fact failed to re-verify. This is always a library bug, never
/// a property of the input.
struct CertificationBug : Error {
  explicit CertificationBug(const std::string& msg)
      : Error("certification bug: " + msg) {}
  int exit_code() const override { return 4; }
};

}  // namespace slopecert
