// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vimaps {

enum class errc {
    invalid_argument,    // malformed input, out-of-range parameter
    order_mismatch,      // arithmetic between elements of different cyclotomic orders
    not_invertible,      // 1 - w^m with m = 0 mod n
    dimension_mismatch,  // insertion degree differs from the (twisted) virtual dimension
    regime_violation,    // d*l <= 2g - 2 for some hypersurface degree l
    not_rational,        // a supposedly Galois-invariant sum did not reduce to a constant
    non_integral,        // an integral class integrated to a non-integer
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::not_invertible: return "NotInvertible";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::regime_violation: return "RegimeViolation";
        case errc::not_rational: return "NotRational";
        case errc::non_integral: return "NonIntegral";
    }
    return "Unknown";
}

/// True for failures that indicate a bug rather than bad input.
constexpr bool is_internal(errc code) noexcept {
    return code == errc::not_rational || code == errc::non_integral || code == errc::order_mismatch;
}

class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

}  // namespace vimaps
