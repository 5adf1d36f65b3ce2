#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Precondition violations: bad coordinates, points outside the domain,
// malformed queries.  Mapped to ALC_INVALID at the C boundary.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Requests the library recognizes but deliberately does not serve
// (e.g. families without a compact survival formula, image sums above
// rank 2).  Mapped to ALC_UNSUPPORTED at the C boundary.
class unsupported : public std::runtime_error {
public:
    explicit unsupported(const std::string& what) : std::runtime_error(what) {}
};

} // namespace alcove
