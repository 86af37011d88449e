#ifndef SHIMIN_ERRORS_HPP
#define SHIMIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shimin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid family/rank combination or other bad configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Input outside the domain of an operation (not a root, bad dimension, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A sign pattern or negative set that no Shi region / Weyl element realizes.
class InadmissibleError : public Error {
public:
    using Error::Error;
};

/// A point lying on a hyperplane of the affine arrangement.
class DegeneratePointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An enumeration did not contain a dominating member for some region.
class SaturationError : public Error {
public:
    using Error::Error;
};

/// A configured size or depth limit was exceeded.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::size_t partial_count)
        : Error(what), partial_count_(partial_count) {}

    /// Number of results produced before the limit was hit.
    std::size_t partial_count() const noexcept { return partial_count_; }
    bool has_partial_results() const noexcept { return partial_count_ > 0; }

private:
    std::size_t partial_count_;
};

} // namespace shimin

#endif // SHIMIN_ERRORS_HPP
