#pragma once

#include <stdexcept>
#include <string>

namespace rzs {

/// Thrown when an argument lies outside a function's mathematical domain or
/// outside the convergence guard of its primary evaluation path.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace rzs
