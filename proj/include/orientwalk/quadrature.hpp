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

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace orientwalk {

/// Raised when an integral does not reach its tolerance within the panel
/// budget; the message carries the achieved value and error estimate.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
  double rel_tol = 1e-8;
  /// Absolute floor on the error target, for integrals that vanish.
  double abs_tol = 1e-300;
  std::size_t max_panels = 50'000;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t panels = 0;
};

/// 15-point Gauss-Kronrod rule on [a, b]; error = |K15 - G7|.
QuadratureResult GaussKronrod15(const std::function<double(double)>& f,
                                double a, double b);

/// Globally adaptive integral of f over [lower, upper], 0 <= lower < upper.
///
/// The initial partition has edges upper * 2^-k, refining geometrically
/// toward 0 so that endpoint singularities like θ^-1/2 or kinks at θ = 0 sit
/// in small panels from the start. Panels with the largest error estimate are
/// bisected until the summed estimate is below max(rel_tol * |value|,
/// abs_tol). Panel sums are accumulated in left-endpoint order, so the result
/// does not depend on refinement order.
QuadratureResult IntegrateTowardZero(const std::function<double(double)>& f,
                                     double lower, double upper,
                                     const QuadratureSpec& spec = {});

}  // namespace orientwalk
