#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcodes/analysis.hpp"

namespace pcodes {

struct VerifyCase {
    TheoremId id{};
    TheoremParams params;
    std::string label;
};

// Embedded copy of data/verify_all.json (the versioned case matrix).
const char* default_manifest_text();

// Parse a manifest document and expand wildcard entries:
//  - C3.6 "d": "*" expands to every almost bent monomial exponent for m
//  - "function": "ab-shift:+|-|0" is kept as a directive, resolved per run
std::vector<VerifyCase> manifest_cases(const nlohmann::json& doc);

std::vector<VerifyCase> default_cases();

// Build the field (honoring modulus overrides), resolve any function
// directive and run the verifier.
VerificationReport run_case(const VerifyCase& c,
                            const std::map<int, std::uint32_t>& field_overrides,
                            const VerifyOptions& opt);

// Run cases with a bounded worker pool; results in manifest order.
std::vector<VerificationReport> run_cases(const std::vector<VerifyCase>& cases,
                                          const std::map<int, std::uint32_t>& field_overrides,
                                          const VerifyOptions& opt, int jobs);

}  // namespace pcodes
