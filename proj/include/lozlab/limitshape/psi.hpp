#pragma once

// The limiting log-MGF Psi_a(u) = (a/2) ln u + 2 phi(ln u; a) of the free
// boundary model and its Taylor jet at u = 1.

#include <cstddef>

#include "lozlab/charlib/jet.hpp"
#include "lozlab/core/scalar.hpp"

namespace lozlab {

inline constexpr std::size_t kMaxPsiOrder = 16;
inline constexpr std::size_t kDefaultPsiOrder = 12;
inline constexpr unsigned kPsiPrecisionBits = 256;

/// h = ((u+1) + sqrt((u+1)^2 + (a^2+2a)(u-1)^2)) / 4.
Real psi_h(const Real& a, const Real& u);

/// phi(ln u; a), the per-row limit of ln S_{nu^m}(u; 2n) / (2n).
Real psi_phi(const Real& a, const Real& u);

/// Psi_a(u) evaluated pointwise (u > 0).
Real psi_direct(const Real& a, const Real& u);

/// Taylor jet of Psi_a at u = 1, computed at no less than 256 bits.
/// Throws std::invalid_argument for a <= 0 or order outside [2, 16].
Jet psi_jet(const Real& a, std::size_t order = kDefaultPsiOrder);

/// Jet of h at u = 1 (same rules as psi_jet).
Jet h_jet(const Real& a, std::size_t order = kDefaultPsiOrder);

}  // namespace lozlab
