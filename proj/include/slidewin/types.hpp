#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slidewin {

/// Alphabet value. Symbols are 1-based: every symbol s satisfies
/// 1 <= s <= alphabet_size.
using Symbol = std::uint64_t;

/// Exact integer output value. Frequency-moment sums grow like n^k * n,
/// which overflows 64 bits already at modest n and k, so outputs are
/// arbitrary precision throughout.
using Value = boost::multiprecision::cpp_int;

/// The t outputs y_1..y_t of a sliding-window run.
using OutputVec = std::vector<Value>;

enum class StatKind { fk, f0_mod2, ed, order_stat };

/// Window description: window length n, number of outputs t (the input must
/// have length n + t - 1), and which statistic is computed per window.
struct WindowSpec {
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  StatKind stat = StatKind::fk;
  std::uint64_t k = 0;       // frequency-moment exponent, stat == fk
  std::uint64_t t_rank = 1;  // order-statistic rank, stat == order_stat

  /// Throws std::invalid_argument if the spec is malformed or does not fit
  /// an input of the given length.
  void validate(std::size_t input_len) const;
};

}  // namespace slidewin
