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

#include "orientwalk/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace orientwalk {

namespace {

// Kronrod abscissae (positive half, the last one is the centre) and weights;
// every odd-indexed abscissa is also a 7-point Gauss node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct LargerError {
  bool operator()(const Panel& l, const Panel& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

Panel MakePanel(const std::function<double(double)>& f, double a, double b) {
  const QuadratureResult r = GaussKronrod15(f, a, b);
  return {a, b, r.value, r.abs_error};
}

}  // namespace

QuadratureResult GaussKronrod15(const std::function<double(double)>& f,
                                double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[static_cast<std::size_t>(j)] * sum;
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half), 1};
}

QuadratureResult IntegrateTowardZero(const std::function<double(double)>& f,
                                     double lower, double upper,
                                     const QuadratureSpec& spec) {
  if (!(lower >= 0.0) || !(upper > lower)) {
    throw std::invalid_argument("integration needs 0 <= lower < upper");
  }
  if (!(spec.rel_tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }

  // Geometric edges upper, upper/2, ... down to lower (or 2^-60 * upper).
  std::vector<double> edges{upper};
  const double floor_edge = lower > 0.0 ? lower : std::ldexp(upper, -60);
  while (edges.back() * 0.5 > floor_edge) edges.push_back(edges.back() * 0.5);
  edges.push_back(floor_edge);
  if (lower == 0.0) edges.push_back(0.0);

  std::priority_queue<Panel, std::vector<Panel>, LargerError> queue;
  std::vector<Panel> done;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const Panel p = MakePanel(f, edges[i + 1], edges[i]);
    total += p.value;
    error += p.error;
    queue.push(p);
  }
  std::size_t panels = queue.size();

  auto target = [&] { return std::max(spec.rel_tol * std::abs(total), spec.abs_tol); };
  // A non-finite sum makes the relative target infinite too, so test it first.
  while (!std::isfinite(total) || !std::isfinite(error) || error > target()) {
    if (panels >= spec.max_panels || !std::isfinite(total) ||
        !std::isfinite(error)) {
      std::ostringstream msg;
      msg << "quadrature did not converge on [" << lower << ", " << upper
          << "]: value " << total << ", error estimate " << error
          << ", target " << target() << ", panels " << panels;
      throw NumericError(msg.str());
    }
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Cannot split further in floating point; freeze this panel.
      queue.pop();
      done.push_back(worst);
      if (queue.empty()) break;
      continue;
    }
    queue.pop();
    const Panel left = MakePanel(f, worst.a, mid);
    const Panel right = MakePanel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(),
            [](const Panel& l, const Panel& r) { return l.a < r.a; });
  QuadratureResult result;
  for (const Panel& p : done) {
    result.value += p.value;
    result.abs_error += p.error;
  }
  result.panels = done.size();
  if (result.abs_error > target() && result.abs_error > spec.abs_tol) {
    // Only reachable when every remaining panel is unsplittable.
    std::ostringstream msg;
    msg << "quadrature stalled at machine resolution: value " << result.value
        << ", error estimate " << result.abs_error;
    throw NumericError(msg.str());
  }
  return result;
}

}  // namespace orientwalk
