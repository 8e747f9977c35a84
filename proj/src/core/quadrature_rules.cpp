// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>

#include "ets/error.hpp"
#include "ets/integration.hpp"

namespace ets {
namespace {

constexpr int kMaxNodes = 200;

// Golub-Welsch eigenvalues seed each root; Newton on the orthonormal Hermite
// recurrence then polishes it and yields the weight 2 / p'^2.
Rule1D compute_gauss_hermite(int n) {
  constexpr double kPiM4 = 0.7511255444649425;  // pi^(-1/4)
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) raise(ErrorCode::NonConvergence, "Gauss-Hermite eigenvalue solve failed");

  Rule1D r;
  r.nodes.assign(static_cast<std::size_t>(n), 0.0);
  r.weights.assign(static_cast<std::size_t>(n), 0.0);
  // Eigenvalues come ascending; polish the nonnegative half and mirror.
  for (int i = n / 2; i < n; ++i) {
    double z = (n % 2 == 1 && i == n / 2) ? 0.0 : eig.eigenvalues()[i];
    double pp = 0.0;
    for (int it = 0; it < 20; ++it) {
      double p1 = kPiM4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    const auto hi = static_cast<std::size_t>(i), lo = static_cast<std::size_t>(n - 1 - i);
    r.nodes[hi] = z;
    r.nodes[lo] = -z;
    r.weights[hi] = r.weights[lo] = 2.0 / (pp * pp);
  }
  return r;
}

template <std::size_t N>
void legendre_nodes(std::vector<double>& t, std::vector<double>& w) {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& a = G::abscissa();
  const auto& wt = G::weights();
  t.clear();
  w.clear();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      t.push_back(0.0);
      w.push_back(wt[i]);
    } else {
      t.push_back(a[i]);
      w.push_back(wt[i]);
      t.push_back(-a[i]);
      w.push_back(wt[i]);
    }
  }
}

}  // namespace

const Rule1D& gauss_hermite(int n) {
  if (n < 1 || n > kMaxNodes) raise(ErrorCode::InvalidArgument, "Gauss-Hermite order must lie in [1, 200]");
  static std::array<std::once_flag, kMaxNodes + 1> once;
  static std::array<Rule1D, kMaxNodes + 1> table;
  const auto k = static_cast<std::size_t>(n);
  std::call_once(once[k], [k, n] { table[k] = compute_gauss_hermite(n); });
  return table[k];
}

Rule1D normal_gauss_hermite(double mean, double sigma, int n) {
  const Rule1D& g = gauss_hermite(n);
  Rule1D r;
  r.nodes.reserve(g.nodes.size());
  r.weights.reserve(g.nodes.size());
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    r.nodes.push_back(mean + std::numbers::sqrt2 * sigma * g.nodes[i]);
    r.weights.push_back(g.weights[i] * inv_sqrt_pi);
  }
  return r;
}

Rule1D normal_composite(double mean, double sigma, double fine, double reach, int points) {
  if (!(sigma > 0.0) || !(fine > 0.0)) raise(ErrorCode::InvalidArgument, "composite rule needs positive widths");
  std::vector<double> t, tw;
  if (points == 10) {
    legendre_nodes<10>(t, tw);
  } else if (points == 20) {
    legendre_nodes<20>(t, tw);
  } else {
    raise(ErrorCode::InvalidArgument, "composite rule supports 10 or 20 points");
  }

  const double lo = mean - 10.0 * sigma;
  const double hi = mean + 10.0 * sigma;
  std::vector<double> cuts;
  for (int j = -20; j <= 20; ++j) cuts.push_back(mean + 0.5 * sigma * j);
  const double r = std::min(reach, std::max(std::abs(lo), std::abs(hi)));
  const auto nf = static_cast<long>(std::ceil(r / fine));
  for (long j = -nf; j <= nf; ++j) cuts.push_back(fine * static_cast<double>(j));
  std::erase_if(cuts, [&](double c) { return c < lo || c > hi; });
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> edges;
  for (double c : cuts) {
    if (edges.empty() || c - edges.back() > 1e-9 * sigma) edges.push_back(c);
  }

  Rule1D out;
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double x = mid + half * t[i];
      const double u = (x - mean) / sigma;
      out.nodes.push_back(x);
      out.weights.push_back(half * tw[i] * norm * std::exp(-0.5 * u * u));
    }
  }
  return out;
}

}  // namespace ets
