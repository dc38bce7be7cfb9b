#pragma once

namespace gencx {

/// Whether operations that have both a closed-form and a definitional
/// route evaluate both and compare them. Defaults to the GENCX_CROSS_CHECKS
/// build option; can be flipped at runtime.
bool cross_checks_enabled();
void set_cross_checks(bool enabled);

}  // namespace gencx
