#pragma once

#include <string>

#include "tmw/numeric/fixed_real.hpp"

namespace tmw::testing {

inline std::string data_path(const std::string& name) { return std::string(TMW_DATA_DIR) + "/" + name; }

// |x - decimal| within the tracked error plus `slack` units of 10^-digits.
inline bool agrees(const FixedReal& x, const std::string& decimal, long digits) {
    FixedReal y = FixedReal::from_string(decimal, x.precision());
    Rat diff = abs(x.center() - y.center());
    return diff <= make_rat(Int(1), pow10(digits)) + make_rat(x.error_ulps() + 1, pow10(x.precision()));
}

}  // namespace tmw::testing
