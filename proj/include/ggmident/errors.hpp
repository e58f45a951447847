#ifndef GGMIDENT_ERRORS_HPP
#define GGMIDENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ggmident {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A node or matrix index outside 1..p.
class InvalidIndex : public Error {
public:
    using Error::Error;
};

/// A conditioning set that contains one of the query endpoints, or a
/// degenerate endpoint pair (u == v).
class InvalidConditioningSet : public Error {
public:
    using Error::Error;
};

/// The submatrix selected by a conditioning set is numerically singular
/// (estimated condition number above 1e12).
class SingularConditioningSet : public Error {
public:
    using Error::Error;
};

/// A matrix that was required to be symmetric positive definite is not.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// A sample conditional covariance was requested with |S| >= n.
class InsufficientSamples : public Error {
public:
    using Error::Error;
};

/// Inconsistent generator or run parameters.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Malformed input file; the message names the file and line.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ggmident

#endif  // GGMIDENT_ERRORS_HPP
