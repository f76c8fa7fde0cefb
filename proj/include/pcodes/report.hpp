#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pcodes/analysis.hpp"

namespace pcodes {

// JSON report object; counts are decimal strings (they can exceed any
// machine word). Field order is fixed so identical configs produce
// byte-identical output.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_runtime);

std::string report_to_table(const VerificationReport& r);

// one row per case: theorem, params, n, k, d, dual_d, verdict, runtime
std::string summary_csv(const std::vector<VerificationReport>& rs, bool include_runtime);

nlohmann::ordered_json spectrum_to_json(const FieldCtx& F, const FunctionSpec& f,
                                        const WalshSpectrum& sp, int ab /* -1 = refused */,
                                        bool apn);

std::string params_to_string(const TheoremParams& p);

}  // namespace pcodes
