#include "slidewin/symbol_seq.hpp"

#include <stdexcept>
#include <string>

namespace slidewin {

SymbolSeq::SymbolSeq(std::vector<Symbol> data, Symbol alphabet_size)
    : data_(std::move(data)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1) throw std::invalid_argument("SymbolSeq: alphabet_size must be positive");
  if (data_.empty()) throw std::invalid_argument("SymbolSeq: sequence must be nonempty");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] < 1 || data_[i] > alphabet_size_)
      throw std::invalid_argument("SymbolSeq: symbol " + std::to_string(data_[i]) +
                                  " at index " + std::to_string(i) +
                                  " outside alphabet [1, " + std::to_string(alphabet_size_) + "]");
  }
}

SymbolSeq SymbolSeq::prefix(std::size_t len) const {
  if (len < 1 || len > data_.size())
    throw std::invalid_argument("SymbolSeq::prefix: length out of range");
  return SymbolSeq(std::vector<Symbol>(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(len)),
                   alphabet_size_);
}

void WindowSpec::validate(std::size_t input_len) const {
  if (n < 1) throw std::invalid_argument("WindowSpec: n must be >= 1");
  if (t < 1) throw std::invalid_argument("WindowSpec: t must be >= 1");
  if (input_len != n + t - 1)
    throw std::invalid_argument("WindowSpec: input length " + std::to_string(input_len) +
                                " != n + t - 1 = " + std::to_string(n + t - 1));
  if (stat == StatKind::order_stat && (t_rank < 1 || t_rank > n))
    throw std::invalid_argument("WindowSpec: order-statistic rank " + std::to_string(t_rank) +
                                " outside [1, " + std::to_string(n) + "]");
}

}  // namespace slidewin
