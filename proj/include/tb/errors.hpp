#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tb {

// Thrown by parse() on malformed input. position() is the 0-based character
// offset at which parsing failed.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Evaluation outside a function's mathematical domain: ln of a non-positive
// argument, sqrt of a negative, division by zero, a jet divided by a
// near-zero constant term, gamma at a pole, and the like.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature failure: the node budget was exhausted before the requested
// tolerance was reached, or the integrand produced a non-finite value at an
// interior node.
class quadrature_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tb
