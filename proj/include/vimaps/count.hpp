// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace vimaps {

enum class Enumerativity {
    enumerative_if_weakly_convex,  // conditions on the insertions hold; still needs weak g-convexity and large d
    virtual_only,
    out_of_regime,
};

constexpr std::string_view to_string(Enumerativity e) noexcept {
    switch (e) {
        case Enumerativity::enumerative_if_weakly_convex: return "Enumerative-if-weakly-convex";
        case Enumerativity::virtual_only: return "VirtualOnly";
        case Enumerativity::out_of_regime: return "OutOfRegime";
    }
    return "Unknown";
}

struct Advisory {
    Enumerativity label = Enumerativity::virtual_only;
    std::string reason;
};

/// An exact virtual intersection number.
struct VirtualCount {
    mpq_class value;
    bool is_integer = true;
    std::optional<Advisory> advisory;
    std::uint64_t summands = 0;  // subset summands evaluated by the engine

    static VirtualCount of(const mpq_class& v, std::uint64_t summands = 0) {
        VirtualCount c;
        c.value = v;
        c.value.canonicalize();
        c.is_integer = c.value.get_den() == 1;
        c.summands = summands;
        return c;
    }
};

/// Throws non_integral unless the count certified as an integer.
inline const VirtualCount& require_integer(const VirtualCount& c, std::string_view what) {
    if (!c.is_integer) {
        throw error(errc::non_integral, std::string(what) + ": expected an integer, got " + c.value.get_str());
    }
    return c;
}

}  // namespace vimaps
