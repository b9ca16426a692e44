#pragma once

#include "pact/fixtures.hpp"

namespace pact {

// One verification record. Hypotheses and flags are ordered name/value lists
// so that serialization is deterministic.
struct CheckRecord {
    std::string id;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::vector<std::pair<std::string, std::string>> flags;
    std::string verdict; // "holds" | "hypotheses-not-met" | "violated"
};

struct Report {
    std::string command;
    std::string fixture;
    std::vector<CheckRecord> checks;
    int exit_code = 0;
};

// All check ids the suite knows, in execution order.
std::vector<std::string> theorem_check_ids();

// Runs every applicable check (or only those selected) on the fixture.
// "violated" verdicts set exit_code 2 and are produced only by internal
// assertion failures, never by properties of the input.
Report run_theorem_suite(const Fixture& fx, const std::vector<std::string>& selection = {});

std::string report_json(const Report& r);
std::string report_text(const Report& r);

} // namespace pact
