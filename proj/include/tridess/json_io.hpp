#pragma once

#include <json.hpp>

#include "tridess/galois.hpp"

namespace tridess {

using Json = nlohmann::ordered_json;

/// {"den": "<positive int>", "num": ["<int>", ...]} — common denominator,
/// ascending-degree numerators.
Json rationals_json(const std::vector<Rational>& coeffs);
Json poly_json(const IPoly& p);
Json signature_json(const Signature& sig);  // entries, inf as the string "inf"
Json field_json(const TraceFieldPtr& f);
Json prime_json(const PrimeIdeal& p);
Json dessin_json(const Dessin& d);
Json passport_json(const Passport& p);
Json report_json(const EulerThetaReport& r);

struct Config {
    std::size_t max_group_order = 1000000;
    bool force_bad_primes = false;
    std::string cache_dir;  // empty = no cache
};

/// Projective order of an automorphism inside Gal(K/Q).
unsigned automorphism_order(const TraceFieldPtr& field, long k);

// Shared command layer: the CLI, the python bindings and the tests all go
// through these builders, so output bytes are identical everywhere.
Json cmd_field(int p, int q, int r);
Json cmd_splits(int p, int q, int r, u64 ell);
Json cmd_dessin(int p, int q, int r, u64 ell, unsigned ideal_index, const Config& cfg = {});
Json cmd_orbit(int p, int q, int r, u64 ell, const Config& cfg = {});

std::string orbit_table(const Json& orbit_report);

std::string dump(const Json& j);

/// FNV-1a content hash, used for cache keys and passport hashes.
std::string fnv1a_hex(const std::string& s);

/// Runs cmd_dessin through the cache directory when configured
/// (write-temp-then-rename; cache hits return the stored bytes).
std::string cmd_dessin_cached(int p, int q, int r, u64 ell, unsigned ideal_index,
                              const Config& cfg);

}  // namespace tridess
