#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

#include "fuzzydb/util.hpp"

namespace fuzzydb {

/// A fuzzy membership degree in [0, 1]. Construction validates the range,
/// so a Fuzzy in flight is always a legal degree. All combinators here are
/// min/max based and never synthesize values absent from their inputs,
/// which keeps exact floating-point comparison sound throughout the engine.
class Fuzzy {
public:
    constexpr Fuzzy() = default;

    Fuzzy(double v) : v_(v) {
        if (std::isnan(v) || v < 0.0 || v > 1.0) {
            throw std::domain_error("fuzzy value out of [0, 1]: " + format_double(v));
        }
    }

    double value() const { return v_; }
    bool is_zero() const { return v_ == 0.0; }

    auto operator<=>(const Fuzzy&) const = default;

    std::string to_string() const { return format_double(v_); }

private:
    double v_ = 0.0;
};

}  // namespace fuzzydb
