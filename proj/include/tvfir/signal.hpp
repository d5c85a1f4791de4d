// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>

#include "tvfir/types.hpp"

namespace tvfir {

/// One complex exponential of the baseband test signal:
/// amplitude * exp(j*(omega*tau + phase)), omega in rad per fs1 sample.
struct Tone {
  double amplitude = 0.0;
  double phase = 0.0;
  double omega = 0.0;
};

/// Analytic multitone baseband signal x_c, evaluated in closed form at any
/// (fractional) normalized time. No interpolation is involved anywhere.
struct MultitoneSignal {
  std::vector<Tone> tones;
};

/// x_c(tau) = sum_i A_i * exp(j*(Omega_i*tau + phi_i)); tau = t/T1.
cplx eval_baseband(const MultitoneSignal& sig, double tau);

/// Real bandpass value Re{ x_c(tau) * exp(j*omega_c_t1*tau) }.
double eval_bandpass(const MultitoneSignal& sig, double omega_c_t1, double tau);

/// x1(n) = x_c(n) at fs1, or x2(m) = x_c(2m) at fs2, over the index range
/// [first, first + count).
SignalTrace sample_uniform(const MultitoneSignal& sig, RateTag rate, long long first,
                           std::size_t count);

/// TI-ADC output v(n) = x_r((n + d_n)*T1), sampled analytically on the
/// M-periodic nonuniform grid. Real-valued (imaginary parts are zero).
SignalTrace sample_nonuniform(const MultitoneSignal& sig, double omega_c_t1,
                              const SamplingPattern& pattern, long long first,
                              std::size_t count);

/// Additive white Gaussian noise model. snr_db = +inf disables the noise;
/// the seed fully determines the realization.
struct NoiseSpec {
  double snr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
};

/// Returns a copy of the trace with zero-mean white Gaussian noise of
/// variance reference_power * 10^(-snr_db/10). A trace whose samples are all
/// purely real gets real noise; otherwise circular complex noise is used.
SignalTrace add_noise(const SignalTrace& trace, const NoiseSpec& spec, double reference_power);

/// Rejects any tone with |Omega| >= B*T1/2 of the band it will be used with.
void require_in_band(const MultitoneSignal& sig, const BandSpec& band);

/// Sample mean of |x|^2 over the trace.
double mean_power(const SignalTrace& trace);

}  // namespace tvfir
