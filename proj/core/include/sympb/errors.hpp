#pragma once

#include <stdexcept>
#include <string>

namespace sympb {

/// Raised when a computation would need series coefficients outside the
/// configured exponent window, or cannot certify a result at the available
/// precision. Never degrades into a silent truncation.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a size/memory guard is exceeded (enumeration too large,
/// ball too big). Carries whether partial results exist upstream.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what, bool partial = false)
        : std::runtime_error(what), partial_(partial) {}
    bool partial() const noexcept { return partial_; }

private:
    bool partial_;
};

/// Raised when an internal consistency check fails (model violation such as
/// an intra-parity edge or an orbit without a coordinate representative).
class model_violation : public std::logic_error {
public:
    explicit model_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace sympb
