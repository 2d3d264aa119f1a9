#ifndef FSDKIT_ERRORS_HPP
#define FSDKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsdkit {

/// Bad caller input: shape mismatch, invalid option, missing file.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Computation produced non-finite values or an ill-posed subproblem.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File container problems.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CorruptFileError : IoError {
    explicit CorruptFileError(const std::string& msg) : IoError(msg) {}
};

struct VersionError : IoError {
    explicit VersionError(const std::string& msg) : IoError(msg) {}
};

}  // namespace fsdkit

#endif
