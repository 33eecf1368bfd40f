#include <pybind11/pybind11.h>

#include <sstream>

#include "tridess/json_io.hpp"
#include "tridess/selftest.hpp"

namespace py = pybind11;
using namespace tridess;

namespace {

Signature parse_sig(const std::string& p, const std::string& q, const std::string& r) {
    return validate_signature(parse_entry(p), parse_entry(q), parse_entry(r));
}

}  // namespace

PYBIND11_MODULE(_tridess, m) {
    m.doc() = "congruence dessins of hyperbolic triangle groups (JSON-string API)";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<unsupported_prime_error>(m, "UnsupportedPrimeError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    m.def(
        "field",
        [](const std::string& p, const std::string& q, const std::string& r) {
            Signature s = parse_sig(p, q, r);
            return dump(cmd_field(s.p, s.q, s.r));
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Trace field K_{p,q,r} as a JSON string; entries are decimal strings or 'inf'.");

    m.def(
        "splits",
        [](const std::string& p, const std::string& q, const std::string& r, u64 ell) {
            Signature s = parse_sig(p, q, r);
            return dump(cmd_splits(s.p, s.q, s.r, ell));
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("ell"),
        "Prime ideals above ell as a JSON string.");

    m.def(
        "dessin",
        [](const std::string& p, const std::string& q, const std::string& r, u64 ell,
           unsigned ideal_index, std::size_t max_group_order, bool force,
           const std::string& cache_dir) {
            Signature s = parse_sig(p, q, r);
            Config cfg;
            cfg.max_group_order = max_group_order;
            cfg.force_bad_primes = force;
            cfg.cache_dir = cache_dir;
            return cmd_dessin_cached(s.p, s.q, s.r, ell, ideal_index, cfg);
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("ell"), py::arg("ideal_index") = 0,
        py::arg("max_group_order") = 1000000, py::arg("force") = false, py::arg("cache_dir") = "",
        "Congruence dessin at one prime ideal as a JSON string (byte-deterministic).");

    m.def(
        "orbit",
        [](const std::string& p, const std::string& q, const std::string& r, u64 ell,
           std::size_t max_group_order, bool force) {
            Signature s = parse_sig(p, q, r);
            Config cfg;
            cfg.max_group_order = max_group_order;
            cfg.force_bad_primes = force;
            return dump(cmd_orbit(s.p, s.q, s.r, ell, cfg));
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("ell"),
        py::arg("max_group_order") = 1000000, py::arg("force") = false,
        "Galois orbits of the primes above ell and the Theorem-C verdict, as a JSON string.");

    m.def(
        "selftest",
        []() {
            std::ostringstream os;
            int failures = run_acceptance(os);
            return py::make_tuple(failures, os.str());
        },
        "Run the acceptance suite; returns (failure_count, transcript).");
}
