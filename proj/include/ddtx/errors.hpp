#ifndef DDTX_ERRORS_HPP
#define DDTX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ddtx {

/// Bad arguments / malformed input files.  The CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

/// Filesystem failures, always carrying the offending path.  Exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace ddtx

#endif  // DDTX_ERRORS_HPP
