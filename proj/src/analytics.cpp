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

#include "orientwalk/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orientwalk {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// 2q(1 - cos θ), accurate for small θ.
double HorizontalSpread(const SpectralParams& params, double theta) {
  const double half_sine = std::sin(0.5 * theta);
  return 4.0 * params.q() * half_sine * half_sine;
}

// sqrt(1 - r(θ)²) in [0, 1).
double ModulusGap(const SpectralParams& params, double theta) {
  const double spread = HorizontalSpread(params, theta);
  return std::sqrt(spread / (params.p() * params.p() + spread));
}

// sqrt(1 - χ²) on the principal branch.
Complex RootOneMinusChiSquared(const SpectralParams& params, double theta) {
  const Complex omc = OneMinusChi(params, theta);
  const Complex arg = omc * (2.0 - omc);
  if (theta != 0.0 && arg.imag() == 0.0 && arg.real() < 0.0) {
    throw std::logic_error("1 - chi^2 reached the principal-branch cut");
  }
  return std::sqrt(arg);
}

QuadratureResult Scaled(QuadratureResult r, double factor) {
  r.value *= factor;
  r.abs_error *= factor;
  return r;
}

}  // namespace

SpectralParams::SpectralParams(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("spectral parameter p must lie in (0, 1)");
  }
}

Complex Chi(const SpectralParams& params, double theta) {
  return params.p() / (1.0 - params.q() * std::exp(kI * theta));
}

Complex OneMinusChi(const SpectralParams& params, double theta) {
  // 1 - e^{iθ} = -2i sin(θ/2) e^{iθ/2}
  const Complex one_minus_phase =
      -2.0 * kI * std::sin(0.5 * theta) * std::exp(0.5 * kI * theta);
  return params.q() * one_minus_phase /
         (1.0 - params.q() * std::exp(kI * theta));
}

double ModulusR(const SpectralParams& params, double theta) {
  return params.p() / std::sqrt(params.p() * params.p() +
                                HorizontalSpread(params, theta));
}

double AngleAlpha(const SpectralParams& params, double theta) {
  return std::atan2(params.q() * std::sin(theta),
                    1.0 - params.q() * std::cos(theta));
}

double FirstReturnGf(double s) {
  if (!(std::abs(s) <= 1.0)) {
    throw std::domain_error("first-return generating function needs |s| <= 1");
  }
  return 1.0 - std::sqrt((1.0 - s) * (1.0 + s));
}

double CharL(const SpectralParams& params, double theta, std::uint64_t n) {
  if (n == 0) return 1.0;
  const double gap = ModulusGap(params, theta);
  return std::exp(static_cast<double>(n) * std::log1p(-gap));
}

Complex OneMinusGH(const SpectralParams& params, double theta) {
  const Complex root = RootOneMinusChiSquared(params, theta);
  const double alpha = AngleAlpha(params, theta);
  const Complex phase2 = std::exp(2.0 * kI * alpha);
  // 1 - e^{2iα} = -2i sin α e^{iα}
  const Complex one_minus_phase2 =
      -2.0 * kI * std::sin(alpha) * std::exp(kI * alpha);
  return 0.5 * (root + one_minus_phase2 + phase2 * std::conj(root));
}

Complex GH(const SpectralParams& params, double theta) {
  return 1.0 - OneMinusGH(params, theta);
}

Complex GHLimitRatio(const SpectralParams& params, double theta) {
  if (!(theta > 0.0)) {
    throw std::domain_error("limit ratio is defined for theta > 0");
  }
  return OneMinusGH(params, theta) / std::sqrt(theta);
}

QuadratureResult ReturnProbL(const SpectralParams& params, std::uint64_t n,
                             const QuadratureSpec& spec) {
  if (n == 0) throw std::invalid_argument("return probability needs n >= 1");
  const auto integrand = [&](double theta) { return CharL(params, theta, n); };
  return Scaled(IntegrateTowardZero(integrand, 0.0, kPi, spec), 1.0 / kPi);
}

QuadratureResult GreenSumL(const SpectralParams& params, std::uint64_t n_max,
                           const QuadratureSpec& spec) {
  if (n_max == 0) throw std::invalid_argument("green sum needs N >= 1");
  const double n = static_cast<double>(n_max);
  const auto integrand = [&](double theta) {
    const double gap = ModulusGap(params, theta);
    if (gap == 0.0) return n;
    const double partial = -std::expm1(n * std::log1p(-gap));
    return (1.0 - gap) / gap * partial;
  };
  return Scaled(IntegrateTowardZero(integrand, 0.0, kPi, spec), 1.0 / kPi);
}

QuadratureResult GreenCutoffL(const SpectralParams& params, double cutoff,
                              const QuadratureSpec& spec) {
  if (!(cutoff > 0.0 && cutoff < kPi)) {
    throw std::invalid_argument("cutoff must lie in (0, pi)");
  }
  const auto integrand = [&](double theta) {
    return 1.0 / ModulusGap(params, theta);
  };
  return Scaled(IntegrateTowardZero(integrand, cutoff, kPi, spec), 1.0 / kPi);
}

double GreenSumHIntegrand(const SpectralParams& params, double theta) {
  return (Chi(params, theta) / OneMinusGH(params, theta)).real();
}

QuadratureResult GreenSumH(const SpectralParams& params, double cutoff,
                           const QuadratureSpec& spec) {
  if (!(cutoff > 0.0 && cutoff < kPi)) {
    throw std::invalid_argument("cutoff must lie in (0, pi)");
  }
  const auto integrand = [&](double theta) {
    return GreenSumHIntegrand(params, theta);
  };
  return Scaled(IntegrateTowardZero(integrand, cutoff, kPi, spec), 1.0 / kPi);
}

}  // namespace orientwalk
