#ifndef ALGAME_ERRORS_HPP
#define ALGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace algame {

/// Thrown when a solve would exceed a configured position/size cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation is not defined for the given structure
/// (infinite option sets, nimber formulas outside the supported families, ...).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed textual input (structure specs, elements, ordinals).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace algame

#endif
