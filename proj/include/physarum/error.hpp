#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace physarum {

// Invalid configuration (bad parameter values, malformed scenario files,
// impossible inoculation requests). CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem / serialisation failures. CLI maps this to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void check_fail(const char* expr, const std::string& msg, const char* file,
                                    int line) {
    std::ostringstream os;
    os << "internal invariant violated: " << expr;
    if (!msg.empty()) os << " (" << msg << ")";
    os << " at " << file << ":" << line;
    throw std::logic_error(os.str());
}

}  // namespace detail

}  // namespace physarum

// Always-on invariant check; these guard state machine invariants, not user input.
#define PHYSARUM_CHECK(cond, msg)                                              \
    do {                                                                       \
        if (!(cond)) ::physarum::detail::check_fail(#cond, msg, __FILE__, __LINE__); \
    } while (0)
