#pragma once

#include <vector>

#include "echokit/model.hpp"

namespace echokit {

enum class EchoKind { two_pulse, three_pulse };

// Sampled echo-intensity-vs-delay curve. Delays are t12 for two-pulse traces
// and t23 for three-pulse traces (with t12 held in t12_fixed).
struct EchoTrace {
    std::vector<double> delays;       // s, strictly increasing, >= 0
    std::vector<double> intensities;  // arbitrary units, >= 0
    std::vector<double> stderrs;      // optional; empty or same length
    Environment env;
    EchoKind kind = EchoKind::two_pulse;
    double t12_fixed = 0.0;           // s, three-pulse only

    void validate() const;
};

}  // namespace echokit
