#ifndef SIGMALAT_ERROR_HPP
#define SIGMALAT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigmalat {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Closure / lattice / search grew past a configured cap ("not desk scale").
class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

class NotNormalError : public Error {
public:
  explicit NotNormalError(const std::string& msg) : Error(msg) {}
};

class BadActionError : public Error {
public:
  explicit BadActionError(const std::string& msg) : Error(msg) {}
};

class NotContainedError : public Error {
public:
  explicit NotContainedError(const std::string& msg) : Error(msg) {}
};

class NotSigmaSolubleError : public Error {
public:
  explicit NotSigmaSolubleError(const std::string& msg) : Error(msg) {}
};

class NotSolubleError : public Error {
public:
  explicit NotSolubleError(const std::string& msg) : Error(msg) {}
};

class NotChiefFactorError : public Error {
public:
  explicit NotChiefFactorError(const std::string& msg) : Error(msg) {}
};

class NotNormalizedError : public Error {
public:
  explicit NotNormalizedError(const std::string& msg) : Error(msg) {}
};

// Hard caps for closure sizes and lattice work.
struct Limits {
  std::uint64_t element_cap = 100000;
  std::uint64_t lattice_order_cap = 2000;
  std::uint64_t subgroup_cap = 100000;
};

}  // namespace sigmalat

#endif
