#pragma once
#include <stdexcept>
#include <string>

namespace sdl {

// Error categories map 1:1 onto CLI exit codes: usage -> 1, numerical -> 2,
// assertion -> 3. Library code throws; only main() translates to a code.
enum class ErrorKind { usage = 1, numerical = 2, assertion = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) {
  throw Error(ErrorKind::usage, msg);
}
[[noreturn]] inline void fail_numerical(const std::string& msg) {
  throw Error(ErrorKind::numerical, msg);
}
[[noreturn]] inline void fail_assertion(const std::string& msg) {
  throw Error(ErrorKind::assertion, msg);
}

}  // namespace sdl
