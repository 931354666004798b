#pragma once

#include <cstdint>

namespace roma {

/// Per-call accounting. Aggregation is componentwise addition; all fields
/// stay non-negative.
struct TokenCost {
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
    double dollars = 0.0;
    double latency_seconds = 0.0;

    TokenCost& operator+=(const TokenCost& other) {
        input_tokens += other.input_tokens;
        output_tokens += other.output_tokens;
        dollars += other.dollars;
        latency_seconds += other.latency_seconds;
        return *this;
    }

    friend TokenCost operator+(TokenCost lhs, const TokenCost& rhs) {
        lhs += rhs;
        return lhs;
    }

    bool is_zero() const {
        return input_tokens == 0 && output_tokens == 0 && dollars == 0.0 &&
               latency_seconds == 0.0;
    }
};

}  // namespace roma
