#ifndef FEDCS_ERROR_HPP
#define FEDCS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fedcs {

// Shape mismatches between tensors/layers.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Bad arguments that are not shape related (out-of-range labels, stale tapes, ...).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical failure: divergence, singular matrix, non-finite values.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or truncated files.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Partitioning constraints that cannot be satisfied.
struct PartitionError : std::runtime_error {
    explicit PartitionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inconsistent experiment configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fedcs

#endif
