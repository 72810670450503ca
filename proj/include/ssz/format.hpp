#pragma once

#include <string>

namespace ssz {

/// Pinned CSV number format: 10 significant digits, scientific for
/// 0 < |v| < 1e-3 (the tables' mixed style). Byte-deterministic for a
/// given value.
std::string format_value(double v);

/// Index-column format: exact integer digits when the value is integral
/// (covers n up to 10^19), otherwise format_value.
std::string format_index(double n);

}  // namespace ssz
