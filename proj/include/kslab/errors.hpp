#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kslab {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed expression source; carries the byte offset of the problem.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Expression evaluation hit a domain error or produced a non-finite value.
class eval_error : public error {
public:
    using error::error;
};

/// Fields are not conformable (box or sample counts differ).
class shape_error : public error {
public:
    using error::error;
};

/// Requested shift is not an integer multiple of the grid spacing.
class alignment_error : public error {
public:
    using error::error;
};

/// Test function support violates the required boundary margin.
class support_error : public error {
public:
    using error::error;
};

/// Invalid run configuration (bad flags, incompatible options).
class config_error : public error {
public:
    using error::error;
};

/// A numerical contract was violated (nonzero mean, symmetry residue, ...).
class contract_error : public error {
public:
    using error::error;
};

/// File or stream I/O failure.
class io_error : public error {
public:
    using error::error;
};

} // namespace kslab
