// Copyright 2026 The lgmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Reference computations used only by the tests. They follow the
// Schroedinger picture step by step with a generic matrix exponential, so
// they share no code path with the library's Heisenberg-picture routines.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat expm_propagator(const Mat& h, double t) {
  const Mat a = Complex(0.0, -t) * h;
  return a.exp();
}

// ---------------------------------------------------------------------------
// Hand-rolled generators

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng); }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

  Vec state(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(normal(), normal());
    return v / v.norm();
  }
  Mat mixed(int n) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(), normal());
    }
    Mat r = g * g.adjoint();
    return r / r.trace().real();
  }
  Mat hermitian(int n, double scale = 1.0) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = Complex(normal(), normal());
    }
    return 0.5 * scale * (a + a.adjoint());
  }
  // Strictly increasing, gaps at least 0.05.
  std::vector<double> times(int k, double horizon = 3.0) {
    std::vector<double> t(static_cast<std::size_t>(k));
    double acc = uniform(0.0, 0.5);
    for (auto& x : t) {
      x = acc;
      acc += 0.05 + uniform(0.0, horizon / k);
    }
    return t;
  }
};

// ---------------------------------------------------------------------------
// Probabilities by explicit collapse

inline Mat basis_projector(int n, int k) {
  Mat p = Mat::Zero(n, n);
  p(k, k) = 1.0;
  return p;
}

// Rank-1 projectors onto the computational basis.
inline std::vector<Mat> fine(int n) {
  std::vector<Mat> out;
  for (int k = 0; k < n; ++k) out.push_back(basis_projector(n, k));
  return out;
}

// Two-outcome grouping (index 0: sign +1, 1: sign -1).
inline std::vector<Mat> grouping(const std::vector<int>& signs) {
  const int n = static_cast<int>(signs.size());
  std::vector<Mat> out(2, Mat::Zero(n, n));
  for (int k = 0; k < n; ++k) out[signs[static_cast<std::size_t>(k)] > 0 ? 0 : 1](k, k) = 1.0;
  return out;
}

// p(a_1, ..., a_k) for the measurements `meas[j]` at `times[j]`, by
// evolving, projecting and evolving the unnormalized branch. Row-major in
// the outcome indices.
inline std::vector<double> sequential(const Mat& rho, const Mat& h, const std::vector<double>& times,
                                      const std::vector<std::vector<Mat>>& meas) {
  std::vector<double> out;
  std::vector<std::size_t> idx(times.size(), 0);
  while (true) {
    Mat r = rho;
    double prev = 0.0;
    for (std::size_t j = 0; j < times.size(); ++j) {
      const Mat u = expm_propagator(h, times[j] - prev);
      prev = times[j];
      r = u * r * u.adjoint();
      const Mat& p = meas[j][idx[j]];
      r = p * r * p;
    }
    out.push_back(r.trace().real());
    std::size_t j = times.size();
    while (j > 0 && ++idx[j - 1] == meas[j - 1].size()) idx[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

// Heisenberg projector built from the generic exponential.
inline Mat heis(const Mat& p, const Mat& h, double t) {
  const Mat u = expm_propagator(h, t);
  return u.adjoint() * p * u;
}

// q(a_1, ..., a_k) = Re Tr(P_k(t_k) ... P_1(t_1) rho).
inline std::vector<double> quasi(const Mat& rho, const Mat& h, const std::vector<double>& times,
                                 const std::vector<std::vector<Mat>>& meas) {
  std::vector<double> out;
  std::vector<std::size_t> idx(times.size(), 0);
  while (true) {
    Mat c = Mat::Identity(rho.rows(), rho.cols());
    for (std::size_t j = 0; j < times.size(); ++j) c = heis(meas[j][idx[j]], h, times[j]) * c;
    out.push_back((c * rho).trace().real());
    std::size_t j = times.size();
    while (j > 0 && ++idx[j - 1] == meas[j - 1].size()) idx[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

// Re D(n1 m | n1' m) for two times and fine measurements.
inline double interference(const Mat& rho, const Mat& h, double t1, double t2, int n1, int n1p, int m) {
  const int n = static_cast<int>(rho.rows());
  const Mat pm = heis(basis_projector(n, m), h, t2);
  const Mat a = pm * heis(basis_projector(n, n1), h, t1);
  const Mat b = pm * heis(basis_projector(n, n1p), h, t1);
  return (a * rho * b.adjoint()).trace().real();
}

// ---------------------------------------------------------------------------
// N = 2 feasibility in closed form: the joint over three +-1 variables is
// fixed by the moments up to the triple moment D, so a joint exists iff the
// eight linear constraints on D are compatible.

inline bool dichotomic_three_time_feasible(double m1, double m2, double m3, double c12, double c23,
                                           double c13, double tol = 1e-12) {
  double lo = -1e300;
  double hi = 1e300;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        const double f = 1 + s1 * m1 + s2 * m2 + s3 * m3 + s1 * s2 * c12 + s2 * s3 * c23 + s1 * s3 * c13;
        // 8 p = f + s1 s2 s3 D >= 0
        if (s1 * s2 * s3 > 0) {
          lo = std::max(lo, -f);
        } else {
          hi = std::min(hi, f);
        }
      }
    }
  }
  return lo <= hi + tol;
}

}  // namespace oracle
