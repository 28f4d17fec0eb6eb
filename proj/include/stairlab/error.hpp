#pragma once

#include <stdexcept>
#include <string>

namespace stairlab {

// Error taxonomy shared by the C++ core and the C API (which maps codes 1:1).
enum class errc {
    none = 0,
    invalid_argument,
    parse_error,
    out_of_domain,
    division_by_zero,
    negative_radicand,
    mixed_radicands,
    not_quasi_perfect,
    formal_class,
    nonpositive_denominator,
    degenerate_denominator,
    degenerate_limit,
    mixed_eps,
    unordered_centers,
    invalid_triple,
    invalid_label,
    root_has_no_predecessor,
    parity_mismatch,
    parity_violation,
    invariant_violation,
    empty_selection,
    no_blocked_point,
    not_in_tree,
    not_representable,
    internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace stairlab
