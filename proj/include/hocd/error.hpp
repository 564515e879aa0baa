#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hocd {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// A grid or field is too small for the requested stencil.
class SizeError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Non-finite or otherwise unusable input data.
class DataError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, std::size_t index)
        : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}

    /// Row (tridiagonal/dense) or block (block-tridiagonal) where elimination failed.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace hocd
