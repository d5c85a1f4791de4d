// SPDX-License-Identifier: Apache-2.0
#include "tvfir/design.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace tvfir {

namespace {

constexpr double kPi = std::numbers::pi;

void require_branch(const DesignProblem& problem, int branch) {
  if (branch < 0 || branch >= problem.pattern.period) {
    std::ostringstream os;
    os << "branch index " << branch << " out of range for M = " << problem.pattern.period;
    throw ValidationError(os.str());
  }
}

}  // namespace

void DesignProblem::validate() const {
  pattern.validate();
  require_valid_band(band);
  if (order <= 0 || order % 2 != 0) {
    throw ValidationError("design problem: order N must be a positive even integer");
  }
  if (!(ridge >= 0.0)) {
    throw ValidationError("design problem: ridge must be >= 0");
  }
}

std::vector<cplx> build_c(const DesignProblem& problem, int branch) {
  problem.validate();
  require_branch(problem, branch);
  const int half = problem.order / 2;
  const double w1 = problem.band.omega1_t1();
  const double w2 = problem.band.omega2_t1();
  std::vector<cplx> c(static_cast<std::size_t>(problem.order) + 1);
  for (int k = -half; k <= half; ++k) {
    const double x = k - skew_at(problem.pattern, branch - k);
    cplx value;
    if (std::abs(x) < kOffsetZeroTol) {
      value = (w2 - w1) / (2.0 * kPi);
    } else {
      const cplx j(0.0, 1.0);
      value = (std::exp(j * (w2 * x)) - std::exp(j * (w1 * x))) / (j * (2.0 * kPi * x));
    }
    c[static_cast<std::size_t>(k + half)] = value;
  }
  return c;
}

std::vector<double> build_s(const DesignProblem& problem, int branch) {
  problem.validate();
  require_branch(problem, branch);
  const int half = problem.order / 2;
  const int n1 = problem.order + 1;
  const double w1 = problem.band.omega1_t1();
  const double w2 = problem.band.omega2_t1();
  // x_k = k - d_{branch-k}; entry (k,p) depends on y = x_k - x_p only.
  std::vector<double> offsets(static_cast<std::size_t>(n1));
  for (int k = -half; k <= half; ++k) {
    offsets[static_cast<std::size_t>(k + half)] = k - skew_at(problem.pattern, branch - k);
  }
  std::vector<double> s(static_cast<std::size_t>(n1) * n1);
  for (int r = 0; r < n1; ++r) {
    for (int col = 0; col <= r; ++col) {
      const double y = offsets[static_cast<std::size_t>(r)] - offsets[static_cast<std::size_t>(col)];
      double value;
      if (std::abs(y) < kOffsetZeroTol) {
        value = (w2 - w1) / kPi;
      } else {
        value = (std::sin(w2 * y) - std::sin(w1 * y)) / (kPi * y);
      }
      s[static_cast<std::size_t>(r) * n1 + col] = value;
      s[static_cast<std::size_t>(col) * n1 + r] = value;
    }
  }
  return s;
}

GramSystem build_gram(const DesignProblem& problem, int branch) {
  GramSystem gram;
  gram.branch = branch;
  gram.order = problem.order;
  gram.s = build_s(problem, branch);
  gram.c = build_c(problem, branch);
  gram.const_term = (problem.band.omega2_t1() - problem.band.omega1_t1()) / (2.0 * kPi);
  return gram;
}

BranchDesign design_filter(const DesignProblem& problem, int branch) {
  const GramSystem gram = build_gram(problem, branch);
  const int n1 = problem.order + 1;

  Eigen::Map<const Eigen::MatrixXd> s_map(gram.s.data(), n1, n1);
  Eigen::MatrixXd s_solve = s_map;
  if (problem.ridge > 0.0) {
    s_solve.diagonal().array() += problem.ridge;
  }

  Eigen::LLT<Eigen::MatrixXd> llt(s_solve);
  if (llt.info() != Eigen::Success) {
    std::ostringstream os;
    os << "Gram system for branch " << branch << " is not positive definite";
    if (problem.ridge > 0.0) {
      os << " even with ridge " << problem.ridge;
    } else {
      os << "; the band/order combination is numerically singular (consider a ridge)";
    }
    throw NumericalError(os.str());
  }

  Eigen::VectorXd c_re(n1), c_im(n1);
  for (int i = 0; i < n1; ++i) {
    c_re(i) = gram.c[static_cast<std::size_t>(i)].real();
    c_im(i) = gram.c[static_cast<std::size_t>(i)].imag();
  }
  const Eigen::VectorXd h_re = llt.solve(c_re);
  const Eigen::VectorXd h_im = llt.solve(c_im);

  BranchDesign out;
  out.h.resize(static_cast<std::size_t>(n1));
  for (int i = 0; i < n1; ++i) {
    out.h[static_cast<std::size_t>(i)] = cplx(h_re(i), h_im(i));
  }

  const Eigen::VectorXd res_re = s_map * h_re - c_re;
  const Eigen::VectorXd res_im = s_map * h_im - c_im;
  double residual = 0.0;
  for (int i = 0; i < n1; ++i) {
    residual = std::max(residual, std::hypot(res_re(i), res_im(i)));
  }
  out.diagnostics.residual_inf = residual;
  const double rcond = llt.rcond();
  out.diagnostics.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  return out;
}

FilterBank design_bank(const DesignProblem& problem) {
  problem.validate();
  FilterBank bank;
  bank.period = problem.pattern.period;
  bank.order = problem.order;
  bank.band = problem.band;
  bank.pattern = problem.pattern;
  bank.rows.assign(static_cast<std::size_t>(bank.period), {});
  const bool even_m = bank.period % 2 == 0;
  bank.designed_subset = even_m;
  const int step = even_m ? 2 : 1;
  for (int branch = 0; branch < bank.period; branch += step) {
    try {
      bank.rows[static_cast<std::size_t>(branch)] = design_filter(problem, branch).h;
    } catch (const NumericalError& err) {
      std::ostringstream os;
      os << "design_bank failed at branch " << branch << ": " << err.what();
      throw NumericalError(os.str());
    }
  }
  return bank;
}

std::vector<cplx> freq_response(std::span<const cplx> h, const SamplingPattern& pattern,
                                int branch, std::span<const double> omega_t1_grid) {
  pattern.validate();
  const int n1 = static_cast<int>(h.size());
  const int half = (n1 - 1) / 2;
  std::vector<double> offsets(h.size());
  for (int k = -half; k <= half; ++k) {
    offsets[static_cast<std::size_t>(k + half)] = k - skew_at(pattern, branch - k);
  }
  std::vector<cplx> response(omega_t1_grid.size());
  for (std::size_t g = 0; g < omega_t1_grid.size(); ++g) {
    const double w = omega_t1_grid[g];
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      acc += h[i] * std::polar(1.0, -w * offsets[i]);
    }
    response[g] = acc;
  }
  return response;
}

double error_quadratic(std::span<const cplx> h, const DesignProblem& problem, int branch) {
  const GramSystem gram = build_gram(problem, branch);
  const int n1 = problem.order + 1;
  if (static_cast<int>(h.size()) != n1) {
    throw ValidationError("error_quadratic: impulse response length must be N+1");
  }
  cplx quad(0.0, 0.0);
  for (int r = 0; r < n1; ++r) {
    cplx row_acc(0.0, 0.0);
    for (int col = 0; col < n1; ++col) {
      row_acc += gram.s_at(r, col) * h[static_cast<std::size_t>(col)];
    }
    quad += std::conj(h[static_cast<std::size_t>(r)]) * row_acc;
  }
  cplx cross(0.0, 0.0);
  for (int i = 0; i < n1; ++i) {
    cross += std::conj(gram.c[static_cast<std::size_t>(i)]) * h[static_cast<std::size_t>(i)];
  }
  return quad.real() - 2.0 * cross.real() + gram.const_term;
}

double error_quadrature(std::span<const cplx> h, const DesignProblem& problem, int branch,
                        std::size_t grid_points) {
  problem.validate();
  require_branch(problem, branch);
  if (grid_points < 2) {
    throw ValidationError("error_quadrature: need at least 2 grid points per band");
  }
  const double w1 = problem.band.omega1_t1();
  const double w2 = problem.band.omega2_t1();

  auto band_integral = [&](double lo, double hi, bool target_one) {
    std::vector<double> grid(grid_points);
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    for (std::size_t i = 0; i < grid_points; ++i) {
      grid[i] = lo + step * static_cast<double>(i);
    }
    const auto response = freq_response(h, problem.pattern, branch, grid);
    double acc = 0.0;
    for (std::size_t i = 0; i < grid_points; ++i) {
      const cplx err = target_one ? response[i] - 1.0 : response[i];
      const double weight = (i == 0 || i + 1 == grid_points) ? 0.5 : 1.0;
      acc += weight * std::norm(err);
    }
    return acc * step / (2.0 * kPi);
  };

  return band_integral(w1, w2, true) + band_integral(-w2, -w1, false);
}

}  // namespace tvfir
