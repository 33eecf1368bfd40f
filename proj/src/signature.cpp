#include "tridess/signature.hpp"

#include "tridess/poly.hpp"

namespace tridess {

int parse_entry(const std::string& s) {
    if (s == "inf" || s == "oo") return kInf;
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw validation_error("signature entry must be an integer >= 2 or 'inf': " + s);
    }
    if (pos != s.size() || v < 2)
        throw validation_error("signature entry must be an integer >= 2 or 'inf': " + s);
    return v;
}

Signature validate_signature(int p, int q, int r) {
    for (int s : {p, q, r})
        if (!is_inf(s) && s < 2)
            throw validation_error("signature entry must be >= 2 or inf, got " + std::to_string(s));
    Rational sum(0);
    for (int s : {p, q, r})
        if (!is_inf(s)) sum += Rational(1, s);
    Signature sig{p, q, r};
    if (sum >= 1)
        throw validation_error("signature " + to_string(sig) +
                               " is not hyperbolic: 1/p + 1/q + 1/r >= 1");
    return sig;
}

}  // namespace tridess
