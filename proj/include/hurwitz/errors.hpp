#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// A computational refusal: the request is well-formed but exceeds a
/// configured cap. Distinct from usage errors so callers can map it to a
/// dedicated exit status.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hurwitz
