#include "echokit/trace.hpp"

#include <cmath>
#include <stdexcept>

namespace echokit {

void EchoTrace::validate() const {
    if (delays.size() != intensities.size())
        throw std::invalid_argument("EchoTrace: delays/intensities length mismatch");
    if (!stderrs.empty() && stderrs.size() != delays.size())
        throw std::invalid_argument("EchoTrace: stderr length mismatch");
    for (std::size_t i = 0; i < delays.size(); ++i) {
        if (!std::isfinite(delays[i]) || delays[i] < 0.0)
            throw std::invalid_argument("EchoTrace: delays must be finite and >= 0");
        if (i > 0 && !(delays[i] > delays[i - 1]))
            throw std::invalid_argument("EchoTrace: delays must be strictly increasing");
        if (!std::isfinite(intensities[i]) || intensities[i] < 0.0)
            throw std::invalid_argument("EchoTrace: intensities must be finite and >= 0");
    }
    if (kind == EchoKind::three_pulse && !(t12_fixed > 0.0))
        throw std::invalid_argument("EchoTrace: three-pulse trace requires t12_fixed > 0");
}

}  // namespace echokit
