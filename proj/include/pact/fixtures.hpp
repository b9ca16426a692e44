#pragma once

#include <optional>

#include "pact/inverse_limit.hpp"
#include "pact/metrics.hpp"

namespace pact {

// A filesystem failure, distinct from validation errors for exit-code purposes.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

// A named problem instance: a partial action, optionally a metric on its
// carrier and subgroup/chain annotations for the quotient and limit commands.
struct Fixture {
    std::string name;
    std::string note;
    PartialAction action;
    std::optional<FiniteMetric> metric;
    std::vector<std::string> subgroup;             // default --subgroup
    std::vector<std::vector<std::string>> chain;   // default --chain, largest first
};

// Names of the embedded fixtures, in deterministic order.
std::vector<std::string> embedded_fixture_names();

// Parses a fixture from JSON text. The schema:
//   {"name": ..., "group": {"elements":[...], "table":[[...]], "topology": [[...]]?},
//    "space": {"points":[...], "opens":[[...]]} | {"points":[...], "preorder":[[x,y],...]},
//    "domains": {"g":[...]}, "maps": {"g":{"x":"y",...}},
//    "metric": {"points":[...], "dist":[["p/q",...]]}?,
//    "subgroup": [...]?, "chain": [[...],...]?}
// Maps are given on X_{g^-1}; an omitted g has empty domain; the identity may
// be omitted and defaults to the identity map on all of X.
Fixture parse_fixture(const std::string& text, const std::string& name);

// Resolution order: explicit path, then $PACT_FIXTURE_PATH/<name>.json, then
// the embedded library.
Fixture load_fixture(const std::string& path_or_name);

} // namespace pact
