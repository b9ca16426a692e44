#pragma once

#include <stdexcept>
#include <string>

namespace pact {

// Input-validation failures. Each carries a stable code plus a message
// naming a concrete witness (a triple, a set, a pair) where one exists.
enum class errc {
    // groups
    not_associative,
    no_identity,
    no_inverse,
    not_normal,
    not_continuous_group,
    not_homomorphism,
    // spaces
    missing_empty_or_full,
    not_closed_under_union,
    not_closed_under_intersection,
    unknown_point,
    not_a_partition,
    not_total,
    not_preorder,
    // partial actions
    identity_domain_not_full,
    domain_not_open,
    not_homeomorphism,
    composition_law_fails,
    evaluation_not_continuous,
    not_open_subset,
    not_global,
    gx_not_all_of_y,
    // metrics
    bad_metric,
    carrier_mismatch,
    not_metrizable,
    // inverse limits
    not_directed,
    not_nested,
    // misc
    hypotheses_not_met,
    parse_error,
    unknown_fixture,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

// A proven statement failed on a structure that satisfies its hypotheses.
// This is a bug in the implementation, never a property of the input.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& message)
        : std::logic_error("theorem violation: " + message) {}
};

} // namespace pact
