// Copyright 2026 The orientwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form characteristic functions of the embedded horizontal walk and
// the Fourier integrals built from them.
//
// Waiting times are geometric, P(ξ = l) = p q^l, with q the probability of a
// horizontal move. The simulated walk has q = 1/3, p = 2/3; both are free
// parameters here.
//
// All Fourier inversions carry the 1/(2π) normalization.

#pragma once

#include <complex>
#include <cstdint>

#include "orientwalk/quadrature.hpp"

namespace orientwalk {

using Complex = std::complex<double>;

class SpectralParams {
 public:
  /// Defaults to p = 2/3 (horizontal-move probability q = 1/3).
  SpectralParams() = default;
  /// 0 < p < 1, else std::invalid_argument.
  explicit SpectralParams(double p);

  double p() const { return p_; }
  double q() const { return 1.0 - p_; }

 private:
  double p_ = 2.0 / 3.0;
};

/// χ(θ) = E exp(iθξ) = p / (1 - q e^{iθ}).
Complex Chi(const SpectralParams& params, double theta);

/// 1 - χ(θ), without cancellation near θ = 0.
Complex OneMinusChi(const SpectralParams& params, double theta);

/// r(θ) = |χ(θ)| = p / sqrt(p² + 2q(1 - cos θ)).
double ModulusR(const SpectralParams& params, double theta);

/// α(θ) = arctan(q sin θ / (1 - q cos θ)), so χ = r e^{iα}.
double AngleAlpha(const SpectralParams& params, double theta);

/// f(s) = E s^{σ₁} = 1 - sqrt(1 - s²) for the first return time of a simple
/// walk. |s| <= 1, else std::domain_error.
double FirstReturnGf(double s);

/// E exp(iθ X_{σ_n}) on the alternate lattice: (1 - sqrt(1 - r(θ)²))^n.
double CharL(const SpectralParams& params, double theta, std::uint64_t n);

/// E exp(iθ X_{σ₁}) on the half-plane lattice:
///
///   g(θ) = ½ f(χ) + ½ e^{2iα} f(χ̄),   f(s) = 1 - sqrt(1 - s²),
///
/// from splitting on the sign of the first skeleton excursion: an upward
/// excursion of length τ sees ε = +1 throughout, a downward one sees +1 once
/// and -1 for τ - 1 steps. Equivalently (χ / 2r)[f(χ)e^{-iα} + f(χ̄)e^{iα}].
/// Square roots use the principal branch.
Complex GH(const SpectralParams& params, double theta);

/// 1 - g(θ), evaluated without cancellation near θ = 0.
Complex OneMinusGH(const SpectralParams& params, double theta);

/// (1 - g(θ)) / sqrt(θ) for θ > 0; tends to sqrt(q/p) as θ -> 0⁺.
Complex GHLimitRatio(const SpectralParams& params, double theta);

/// P(X_{σ_n} = 0) on the alternate lattice, n >= 1:
/// (1/2π) ∫_{-π}^{π} CharL(θ, n) dθ.
QuadratureResult ReturnProbL(const SpectralParams& params, std::uint64_t n,
                             const QuadratureSpec& spec = {});

/// Σ_{n=1..N} P(X_{σ_n} = 0), N >= 1. The sum is taken inside the integral:
/// Σ f^n = f (1 - f^N) / (1 - f).
QuadratureResult GreenSumL(const SpectralParams& params, std::uint64_t n_max,
                           const QuadratureSpec& spec = {});

/// (1/2π) ∫_{ε<=|θ|<=π} 1 / (1 - f(r(θ))) dθ: the alternate-lattice Green
/// sum with a cutoff; grows like (p / (π sqrt q)) ln(1/ε).
QuadratureResult GreenCutoffL(const SpectralParams& params, double cutoff,
                              const QuadratureSpec& spec = {});

/// (1/2π) ∫_{ε<=|θ|<=π} χ(θ) / (1 - g(θ)) dθ = (1/π) ∫_ε^π Re[χ/(1-g)] dθ:
/// the half-plane Green sum with a cutoff; converges as ε -> 0 since the
/// integrand is O(θ^-1/2). 0 < ε < π.
QuadratureResult GreenSumH(const SpectralParams& params, double cutoff,
                           const QuadratureSpec& spec = {});

/// Integrand of GreenSumH at θ (before the 1/π factor).
double GreenSumHIntegrand(const SpectralParams& params, double theta);

}  // namespace orientwalk
