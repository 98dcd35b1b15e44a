#pragma once

namespace swrt {

/// Working precision in bits for the floating-point evaluation paths.
/// Defaults to 64 (hardware doubles); values above 64 switch the direct-sum
/// evaluators to 80-bit extended precision. Initialised once from the
/// SEIFERT_WRT_PRECISION environment variable.
int precision_bits();

/// True when the extended-precision paths are selected.
bool use_extended_precision();

}  // namespace swrt
