#pragma once

#include <json.hpp>

#include "paraboson/mzops.hpp"
#include "paraboson/verify.hpp"

namespace paraboson {

using nlohmann::json;

json tableau_to_json(const YoungTableau& a);
json gamma_to_json(const ExponentMatrix& g);  // row-major integer array
json matrix_to_json(const RatMatrix& m);      // arrays of "num/den" strings
json vector_to_json(const FockVector& v);     // [{word, coeff}]
json hw_expansion_to_json(const HwExpansion& e, int n);

// Plain-text pretty form: "3/2 B1+ B2+ |0>" style, one term per line.
std::string vector_pretty(const FockVector& v);
// Bracket form for human cross-reading: "[B1+,B2+]^2 (B3+)^2".
std::string omega_bracket_latex(const YoungTableau& a);

struct EnumerateRecord {
    YoungTableau tableau;
    ExponentMatrix gamma;
    Rational norm2;
    FockVector vector;
};

struct JobConfig {
    int n = 3;
    int p = 2;
    int deg = 4;
    std::string format = "text";  // json | csv | latex | text
    unsigned long seed = 20240801UL;
};

std::string format_enumerate(const std::vector<EnumerateRecord>& records, const JobConfig& cfg);
std::string format_verify(const std::vector<CheckResult>& results, const std::string& suite,
                          const JobConfig& cfg);
std::string format_transition(const std::vector<TransitionBlock>& blocks, const Partition& lam,
                              const JobConfig& cfg);

}  // namespace paraboson
