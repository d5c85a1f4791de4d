// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "tvfir/types.hpp"

namespace tvfir {

/// Optional instrumentation for the reconstruction paths. branch_multiplies
/// counts coefficient multiplications attributed to each source branch filter;
/// when record_schedule is set, the source branch of every retained output is
/// appended to schedule in output-index order.
struct OpCounters {
  std::vector<std::uint64_t> branch_multiplies;
  std::uint64_t total_multiplies = 0;
  bool record_schedule = false;
  std::vector<int> schedule;

  void reset(int branches) {
    branch_multiplies.assign(static_cast<std::size_t>(branches), 0);
    total_multiplies = 0;
    schedule.clear();
  }
};

/// Branch indices that produce retained outputs, one output block in order:
/// (0, 2, ..., M-2) for even M and (0, 2, ..., M-1, 1, 3, ..., M-2) for odd M.
std::vector<int> branch_schedule(int period);

/// Reference reconstruction at the high rate: y(n) = sum_k v(n-k) h_{n mod M}(k)
/// for every n whose full tap window lies inside v (and whose branch row exists),
/// then y2(m) = 2 * y(2m) * exp(-j*2*omega_c_t1*m). Only fully-windowed outputs
/// are emitted; the output start index carries the N/2 causalization shift.
/// Throws ValidationError if a branch required by the retained outputs is absent.
SignalTrace reconstruct_direct(const SignalTrace& v, const FilterBank& bank,
                               double omega_c_t1, OpCounters* counters = nullptr);

/// One low-rate FIR subfilter of the blocked realization: taps[i] multiplies
/// input phase `input_phase` of block q + block_shift + i when producing the
/// output of block q.
struct PolyphaseComponent {
  int input_phase = 0;
  long long block_shift = 0;
  std::vector<cplx> taps;
};

/// Blocked low-rate realization. Inputs are consumed L high-rate samples at a
/// time (one TI-ADC block for even M, two consecutive blocks for odd M) and
/// each block yields L/2 outputs, one per output phase. Every filtering
/// operation runs at rate fs1/L.
struct PolyphaseBank {
  int length = 0;   // L: M for even M, 2M for odd M
  int period = 0;   // M
  int order = 0;    // N
  double omega_c_t1 = 0.0;
  long long latency = 0;  // causalization shift in high-rate samples (N/2)
  std::vector<int> schedule;  // source branch per output phase
  std::vector<std::vector<PolyphaseComponent>> phases;  // [L/2][L]

  std::size_t total_taps() const;
};

/// Splits each advanced branch filter into its L polyphase components.
/// Even M uses the even-indexed rows only; odd M uses all rows. Throws
/// ValidationError when a required row is missing.
PolyphaseBank build_polyphase(const FilterBank& bank);

/// Blocked reconstruction; output equals reconstruct_direct on the common
/// valid range. Requires the trace to cover whole blocks: start index and
/// length must both be multiples of L.
SignalTrace reconstruct_polyphase(const SignalTrace& v, const PolyphaseBank& poly,
                                  OpCounters* counters = nullptr);

}  // namespace tvfir
