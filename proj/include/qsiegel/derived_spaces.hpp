#pragma once

#include <optional>

#include "qsiegel/representation.hpp"
#include "qsiegel/subspace.hpp"

namespace qsiegel {

/// P = W cap jW and S = j(W^perp); under Im Q(S, S) = 0 they give
/// V = P + S + jS.
struct BaseSpaces {
  RealSubspace w;
  RealSubspace p;
  RealSubspace s;
  RealSubspace js;
};

BaseSpaces base_spaces(const JordanRepresentation& rep, const RealSubspace& w,
                       const Tolerances& tol = kDefaultTolerances);

struct DerivedSpaces {
  BaseSpaces base;
  Vec x;
  Mat gx;
  RealSubspace ker_gx;
  /// Radical of g_x restricted to P; empty when g_x|P is not PSD.
  RealSubspace n_x;
  bool psd_on_p = false;
  /// Smallest eigenvalue of g_x|P.
  double min_eig_on_p = 0.0;
  RealSubspace s_x;           // jW^{perp, g_x} cap W
  RealSubspace s_upper;       // complement of N_x in S_x
  RealSubspace p_upper;       // N_x^perp cap P
  /// Real matrix of the projection of V onto S^x + jS^x along P.
  Mat p_proj;
};

struct DeriveOptions {
  /// Replaces the default re h-orthocomplement of N_x in S_x.
  std::optional<RealSubspace> s_upper;
  /// When g_x|P is indefinite, continue with N_x = {0} instead of throwing.
  bool allow_indefinite = false;
};

/// Throws NotALinearSpace when g_x|P is indefinite (unless allowed), and
/// DecompositionFailure when P + S^x + jS^x does not span V.
DerivedSpaces derive_spaces(const JordanRepresentation& rep,
                            const RealSubspace& w, const Vec& x,
                            const DeriveOptions& options = {},
                            const Tolerances& tol = kDefaultTolerances);

}  // namespace qsiegel
