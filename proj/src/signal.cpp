// SPDX-License-Identifier: Apache-2.0
#include "tvfir/signal.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace tvfir {

cplx eval_baseband(const MultitoneSignal& sig, double tau) {
  cplx acc(0.0, 0.0);
  for (const auto& tone : sig.tones) {
    acc += tone.amplitude * std::polar(1.0, tone.omega * tau + tone.phase);
  }
  return acc;
}

double eval_bandpass(const MultitoneSignal& sig, double omega_c_t1, double tau) {
  const cplx xc = eval_baseband(sig, tau);
  return (xc * std::polar(1.0, omega_c_t1 * tau)).real();
}

SignalTrace sample_uniform(const MultitoneSignal& sig, RateTag rate, long long first,
                           std::size_t count) {
  SignalTrace trace;
  trace.rate = rate;
  trace.start_index = first;
  trace.samples.resize(count);
  const double stride = rate == RateTag::fs1 ? 1.0 : 2.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double tau = stride * static_cast<double>(first + static_cast<long long>(i));
    trace.samples[i] = eval_baseband(sig, tau);
  }
  return trace;
}

SignalTrace sample_nonuniform(const MultitoneSignal& sig, double omega_c_t1,
                              const SamplingPattern& pattern, long long first,
                              std::size_t count) {
  pattern.validate();
  SignalTrace trace;
  trace.rate = RateTag::fs1;
  trace.start_index = first;
  trace.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long long n = first + static_cast<long long>(i);
    const double tau = static_cast<double>(n) + skew_at(pattern, n);
    trace.samples[i] = cplx(eval_bandpass(sig, omega_c_t1, tau), 0.0);
  }
  return trace;
}

SignalTrace add_noise(const SignalTrace& trace, const NoiseSpec& spec, double reference_power) {
  if (!(reference_power > 0.0)) {
    throw ValidationError("add_noise: reference power must be positive");
  }
  if (std::isinf(spec.snr_db)) {
    return trace;
  }
  const double variance = reference_power * std::pow(10.0, -spec.snr_db / 10.0);

  bool real_trace = true;
  for (const auto& v : trace.samples) {
    if (v.imag() != 0.0) {
      real_trace = false;
      break;
    }
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SignalTrace noisy = trace;
  if (real_trace) {
    const double sigma = std::sqrt(variance);
    for (auto& v : noisy.samples) {
      v += cplx(sigma * gauss(rng), 0.0);
    }
  } else {
    const double sigma = std::sqrt(variance / 2.0);
    for (auto& v : noisy.samples) {
      v += cplx(sigma * gauss(rng), sigma * gauss(rng));
    }
  }
  return noisy;
}

void require_in_band(const MultitoneSignal& sig, const BandSpec& band) {
  require_valid_band(band);
  const double limit = band.b_t1 / 2.0;
  for (std::size_t i = 0; i < sig.tones.size(); ++i) {
    if (!(std::abs(sig.tones[i].omega) < limit)) {
      std::ostringstream os;
      os << "tone " << i << " at Omega = " << sig.tones[i].omega
         << " rad lies outside the open baseband interval (-" << limit << ", " << limit << ")";
      throw ValidationError(os.str());
    }
  }
}

double mean_power(const SignalTrace& trace) {
  if (trace.empty()) {
    throw ValidationError("mean_power: empty trace");
  }
  double acc = 0.0;
  for (const auto& v : trace.samples) {
    acc += std::norm(v);
  }
  return acc / static_cast<double>(trace.samples.size());
}

}  // namespace tvfir
