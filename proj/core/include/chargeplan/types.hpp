#pragma once

#include <cstdint>
#include <vector>

namespace chargeplan {

/// Dense candidate-site index, stable across all module boundaries.
using SiteId = std::uint32_t;

/// Dense location-of-interest index.
using InterestId = std::uint32_t;

/// Per-site 0/1 indicator vector, length = site count.
using Selection = std::vector<std::uint8_t>;

}  // namespace chargeplan
