#pragma once

#include <stdexcept>
#include <string>

namespace subframe {

// Failure classes map 1:1 onto CLI exit codes.
enum class Errc {
    config = 2,       // bad parameters / config file
    capacity = 3,     // band or grid exceeds declared capability
    infeasible = 4,   // solver could not meet its tolerance
    io = 5,           // missing or unparsable artifact
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void throw_config(const std::string& msg) { throw Error(Errc::config, msg); }
[[noreturn]] inline void throw_capacity(const std::string& msg) { throw Error(Errc::capacity, msg); }
[[noreturn]] inline void throw_infeasible(const std::string& msg) { throw Error(Errc::infeasible, msg); }
[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(Errc::io, msg); }

}  // namespace subframe
