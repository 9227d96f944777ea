#pragma once

// Affine rescaling of horizontal-lozenge positions to the GUE scale.

#include <string>
#include <vector>

namespace lozlab {

enum class Regime { standard, tall, wide };

Regime parse_regime(const std::string& name);
std::string regime_name(Regime r);

/// Scale divisor: sqrt(n(a^2+2a)/8) with a = m/n (standard), m/sqrt(8n) (tall),
/// 2 sqrt(m) (wide).
double regime_divisor(long n, long m, Regime regime);

/// (Y - m/2) / divisor elementwise.
std::vector<double> rescale_positions(const std::vector<long>& Y, long n, long m, Regime regime);

/// (Y - center) / divisor with an explicit divisor.
std::vector<double> rescale_with(const std::vector<long>& Y, double center, double divisor);

}  // namespace lozlab
