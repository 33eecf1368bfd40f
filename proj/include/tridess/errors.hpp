#pragma once

#include <stdexcept>
#include <string>

namespace tridess {

// Exit-code contract: 0 ok, 2 validation, 3 unsupported prime, 4 resource limit.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct unsupported_prime_error : std::runtime_error {
    explicit unsupported_prime_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Reduction at a prime dividing a denominator.
struct reduction_error : std::runtime_error {
    explicit reduction_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ambient element not fixed by the subfield's fixing group.
struct not_in_subfield_error : std::runtime_error {
    explicit not_in_subfield_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace tridess
