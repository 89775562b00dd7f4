#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace ppbench::detail {

struct RawMonth {
  const char* label;
  const char* calendar;
  std::span<const double> values;
  std::size_t count;
  long tenths_sum;
  std::uint64_t fnv1a;  // over the magnitudes in tenths, in listing order
};

const std::array<RawMonth, 13>& raw_months();

}  // namespace ppbench::detail
