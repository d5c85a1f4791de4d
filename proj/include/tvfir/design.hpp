// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

#include "tvfir/types.hpp"

namespace tvfir {

/// One least-squares design task: fit every branch response A_n to 1 on
/// [omega1*T1, omega2*T1] and to 0 on the mirror band [-omega2*T1, -omega1*T1].
struct DesignProblem {
  SamplingPattern pattern;
  BandSpec band;
  int order = 0;       // N, even; h_n has N+1 taps k = -N/2..N/2
  double ridge = 0.0;  // Tikhonov term added to the Gram diagonal when solving

  void validate() const;
};

/// Normal equations of one branch. The band-limited error functional is the
/// quadratic form P_n(h) = h^H S h - 2 Re(c^H h) + const_term.
struct GramSystem {
  int branch = 0;
  int order = 0;
  std::vector<double> s;    // (N+1)x(N+1), row-major, real symmetric
  std::vector<cplx> c;      // N+1
  double const_term = 0.0;  // (omega2 - omega1)*T1 / (2*pi)

  double s_at(int row, int col) const {
    return s[static_cast<std::size_t>(row) * (order + 1) + static_cast<std::size_t>(col)];
  }
};

/// Offsets |x| below this are treated as exact zeros when evaluating the
/// degenerate branches of the c and S entry formulas. Skews are user input,
/// so engineered cancellations like k = d_{n-k} must be robust to decimal entry.
inline constexpr double kOffsetZeroTol = 1e-12;

/// Right-hand side c_n: entry k is the passband integral
/// (1/2pi) * Int_{w1}^{w2} exp(j*theta*(k - d_{n-k})) dtheta in closed form.
std::vector<cplx> build_c(const DesignProblem& problem, int branch);

/// Gram matrix S_n: entry (k,p) is (1/pi) * Int_{w1}^{w2} cos(theta*y) dtheta
/// with y = k + d_{n-p} - p - d_{n-k}, in closed form. The degenerate value
/// (w2-w1)/pi is used whenever |y| < kOffsetZeroTol, not only for k == p.
std::vector<double> build_s(const DesignProblem& problem, int branch);

GramSystem build_gram(const DesignProblem& problem, int branch);

struct DesignDiagnostics {
  double residual_inf = 0.0;  // ||S h - c||_inf against the unridged system
  double condition = 0.0;     // 1-norm condition estimate of S + ridge*I
};

struct BranchDesign {
  std::vector<cplx> h;
  DesignDiagnostics diagnostics;
};

/// Closed-form least-squares optimum h = (S + ridge*I)^{-1} c for one branch,
/// via a symmetric positive-definite factorization. Throws NumericalError
/// naming the branch if the (ridged) system is not positive definite.
BranchDesign design_filter(const DesignProblem& problem, int branch);

/// Designs every branch the downsampled-by-two output consumes: all M rows
/// for odd M, even-indexed rows only for even M (designed_subset set).
FilterBank design_bank(const DesignProblem& problem);

/// Branch frequency response A_n(omega*T1) = sum_k h(k) exp(-j*w*(k - d_{n-k}))
/// evaluated pointwise on the grid. Not conjugate symmetric in general.
std::vector<cplx> freq_response(std::span<const cplx> h, const SamplingPattern& pattern,
                                int branch, std::span<const double> omega_t1_grid);

/// P_n evaluated through the quadratic form of the Gram system.
double error_quadratic(std::span<const cplx> h, const DesignProblem& problem, int branch);

/// P_n evaluated by trapezoid integration of |A_n - 1|^2 over the passband
/// and |A_n|^2 over the mirror band, with grid_points samples per band.
double error_quadrature(std::span<const cplx> h, const DesignProblem& problem, int branch,
                        std::size_t grid_points = std::size_t{1} << 14);

}  // namespace tvfir
