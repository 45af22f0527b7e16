#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slidewin/meter.hpp"
#include "slidewin/types.hpp"

namespace slidewin {

/// Read-only random-access input tape x over alphabet [1, alphabet_size].
/// Immutable after construction and therefore safely shareable across
/// threads.
class SymbolSeq {
 public:
  /// Throws std::invalid_argument on an empty sequence or on any symbol
  /// outside [1, alphabet_size]; the message names the offending index.
  SymbolSeq(std::vector<Symbol> data, Symbol alphabet_size);

  std::size_t size() const { return data_.size(); }
  Symbol alphabet_size() const { return alphabet_size_; }

  /// Unmetered access (oracle, tests, serialization).
  Symbol operator[](std::size_t i) const { return data_[i]; }

  /// Metered access: charges exactly one input read.
  Symbol read(std::size_t i, CostMeter& meter) const {
    meter.charge_read();
    return data_[i];
  }

  std::span<const Symbol> data() const { return data_; }

  /// Copy of the first `len` symbols with the same declared alphabet.
  SymbolSeq prefix(std::size_t len) const;

  friend bool operator==(const SymbolSeq& a, const SymbolSeq& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.data_ == b.data_;
  }

 private:
  std::vector<Symbol> data_;
  Symbol alphabet_size_;
};

}  // namespace slidewin
