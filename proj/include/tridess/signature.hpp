#pragma once

#include <array>
#include <string>

#include "tridess/errors.hpp"

namespace tridess {

/// Signature entry: an integer >= 2, or kInf for a parabolic (infinite) vertex.
constexpr int kInf = 0;

inline bool is_inf(int s) { return s == kInf; }

/// Triangle-group signature (p, q, r), kept in user-given order.
struct Signature {
    int p = 2, q = 3, r = 7;

    std::array<int, 3> entries() const { return {p, q, r}; }

    bool operator==(const Signature&) const = default;
};

inline std::string entry_str(int s) { return is_inf(s) ? "inf" : std::to_string(s); }

inline std::string to_string(const Signature& sig) {
    return "(" + entry_str(sig.p) + "," + entry_str(sig.q) + "," + entry_str(sig.r) + ")";
}

/// Accepts "inf" or an integer >= 2.
int parse_entry(const std::string& s);

/// Validates strict hyperbolicity 1/p + 1/q + 1/r < 1 (with 1/inf = 0).
Signature validate_signature(int p, int q, int r);

}  // namespace tridess
