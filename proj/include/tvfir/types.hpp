// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvfir {

using cplx = std::complex<double>;

/// Contract/configuration violation. The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure (e.g. singular Gram system). CLI exit code 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mathematical modulo: result in [0, m) for any sign of n.
inline long long mod_floor(long long n, long long m) {
  long long r = n % m;
  return r < 0 ? r + m : r;
}

/// M-periodic nonuniform sampling grid. Sample n is taken at the
/// normalized instant n + skews[n mod M]; skews are dimensionless
/// fractions of the high-rate period T1.
struct SamplingPattern {
  int period = 1;              // M
  std::vector<double> skews;   // d_0 .. d_{M-1}

  void validate() const;
};

/// Skew for an arbitrary (possibly negative) index via periodic extension.
double skew_at(const SamplingPattern& pattern, long long n);

/// Passband of the real bandpass signal in normalized frequency
/// (omega*T1, radians). The mirror band [-omega2, -omega1] is implied.
struct BandSpec {
  double omega_c_t1 = 0.0;  // carrier omega_c*T1
  double b_t1 = 0.0;        // two-sided bandwidth B*T1

  double omega1_t1() const { return omega_c_t1 - 0.5 * b_t1; }
  double omega2_t1() const { return omega_c_t1 + 0.5 * b_t1; }
};

/// Every violated band invariant, as human-readable strings. Empty = usable.
std::vector<std::string> validate_band(const BandSpec& band);

/// Throws ValidationError listing all violations.
void require_valid_band(const BandSpec& band);

/// The M branch impulse responses h_n(k), k = -N/2..N/2 (noncausal
/// indexing; coefficient k is stored at position k + N/2). For even M
/// only even-indexed rows are designed; the others stay empty.
struct FilterBank {
  int period = 1;                        // M
  int order = 0;                         // N, even
  std::vector<std::vector<cplx>> rows;   // size M; empty row = not designed
  BandSpec band;
  SamplingPattern pattern;
  bool designed_subset = false;

  bool has_row(int branch) const {
    return branch >= 0 && branch < period && !rows[static_cast<std::size_t>(branch)].empty();
  }
  void validate() const;
};

enum class RateTag { fs1, fs2 };

/// Contiguous sample buffer with absolute index semantics: samples[i]
/// holds the value at grid index start_index + i of the tagged rate.
struct SignalTrace {
  std::vector<cplx> samples;
  long long start_index = 0;
  RateTag rate = RateTag::fs1;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  long long last_index() const {
    return start_index + static_cast<long long>(samples.size()) - 1;
  }
  /// Value at absolute index n; caller guarantees n is in range.
  const cplx& at_index(long long n) const {
    return samples[static_cast<std::size_t>(n - start_index)];
  }
};

}  // namespace tvfir
