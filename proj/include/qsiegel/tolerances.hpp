#pragma once

namespace qsiegel {

/// Numerical thresholds shared by every module. All values are for
/// unit-scaled double precision data with dimensions up to about 64.
struct Tolerances {
  double zero = 1e-10;  // absolute residual treated as zero
  double rank = 1e-9;   // singular values below rank * sigma_max are dropped
  double cone = 1e-10;  // spectral margin for cone membership
  double eig = 1e-8;    // relative gap for grouping equal eigenvalues
  double sub = 1e-8;    // projector distance for subspace equality/inclusion
  double psd = 1e-8;    // relative slack on minimal eigenvalues for PSD tests
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qsiegel
