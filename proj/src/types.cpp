// SPDX-License-Identifier: Apache-2.0
#include "tvfir/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tvfir {

void SamplingPattern::validate() const {
  if (period < 1) {
    throw ValidationError("sampling pattern: period M must be >= 1");
  }
  if (skews.size() != static_cast<std::size_t>(period)) {
    std::ostringstream os;
    os << "sampling pattern: expected " << period << " skews, got " << skews.size();
    throw ValidationError(os.str());
  }
  for (std::size_t i = 0; i < skews.size(); ++i) {
    if (!std::isfinite(skews[i]) || std::abs(skews[i]) >= 1.0) {
      std::ostringstream os;
      os << "sampling pattern: |d_" << i << "| must be < 1 sample period, got " << skews[i];
      throw ValidationError(os.str());
    }
  }
}

double skew_at(const SamplingPattern& pattern, long long n) {
  return pattern.skews[static_cast<std::size_t>(mod_floor(n, pattern.period))];
}

std::vector<std::string> validate_band(const BandSpec& band) {
  std::vector<std::string> violations;
  if (!(band.b_t1 > 0.0)) {
    violations.push_back("bandwidth B*T1 must be positive");
  }
  if (!(band.b_t1 < std::numbers::pi)) {
    violations.push_back("bandwidth B*T1 must be < pi (fs1 > 2B)");
  }
  if (!(band.omega1_t1() > 0.0)) {
    violations.push_back("lower band edge omega1*T1 must be > 0 (band must not touch DC)");
  }
  return violations;
}

void require_valid_band(const BandSpec& band) {
  auto violations = validate_band(band);
  if (violations.empty()) return;
  std::string msg = "invalid band:";
  for (const auto& v : violations) msg += " [" + v + "]";
  throw ValidationError(msg);
}

void FilterBank::validate() const {
  pattern.validate();
  require_valid_band(band);
  if (order <= 0 || order % 2 != 0) {
    throw ValidationError("filter bank: order N must be a positive even integer");
  }
  if (period != pattern.period) {
    throw ValidationError("filter bank: period disagrees with its sampling pattern");
  }
  if (rows.size() != static_cast<std::size_t>(period)) {
    throw ValidationError("filter bank: expected one row slot per branch");
  }
  for (int b = 0; b < period; ++b) {
    const auto& row = rows[static_cast<std::size_t>(b)];
    if (!row.empty() && row.size() != static_cast<std::size_t>(order) + 1) {
      std::ostringstream os;
      os << "filter bank: row " << b << " has " << row.size() << " taps, expected " << order + 1;
      throw ValidationError(os.str());
    }
  }
  if (designed_subset) {
    if (period % 2 != 0) {
      throw ValidationError("filter bank: designed_subset requires even M");
    }
    for (int b = 1; b < period; b += 2) {
      if (has_row(b)) {
        throw ValidationError("filter bank: designed_subset bank must not carry odd-indexed rows");
      }
    }
  }
}

}  // namespace tvfir
