#include "slidewin/meter.hpp"

#include <algorithm>
#include <bit>

namespace slidewin {

std::uint32_t SpaceBudget::word_bits_for(std::uint64_t n, std::uint64_t alphabet_size) {
  const std::uint64_t m = std::max<std::uint64_t>({n, alphabet_size, 2});
  return static_cast<std::uint32_t>(std::bit_width(m - 1));
}

SpaceBudget SpaceBudget::from_bits(std::uint64_t bits, std::uint32_t word_bits) {
  if (word_bits == 0) throw std::invalid_argument("SpaceBudget: word_bits must be positive");
  if (bits / word_bits < 1)
    throw std::invalid_argument("SpaceBudget: budget of " + std::to_string(bits) +
                                " bits is below one " + std::to_string(word_bits) +
                                "-bit word");
  return SpaceBudget{bits, word_bits};
}

SpaceBudget SpaceBudget::from_slots(std::uint64_t slots, std::uint32_t word_bits) {
  return from_bits(slots * word_bits, word_bits);
}

void CostMeter::alloc(std::uint64_t words, AllocKind kind, const char* site) {
  switch (kind) {
    case AllocKind::charged:
      charged_now_ += words;
      if (budget_ && charged_now_ > budget_->slots()) {
        std::string msg = "space budget violated: " + std::to_string(charged_now_) +
                          " words charged against " + std::to_string(budget_->slots()) +
                          " slots";
        if (site) msg += " at " + std::string(site);
        charged_now_ -= words;
        throw BudgetViolation(msg);
      }
      break;
    case AllocKind::bookkeeping:
      bookkeeping_now_ += words;
      bookkeeping_peak_ = std::max(bookkeeping_peak_, bookkeeping_now_);
      if (budget_ && bookkeeping_now_ > kBookkeepingAllowance) {
        std::string msg = "internal error: bookkeeping exceeds the documented allowance";
        if (site) msg += " at " + std::string(site);
        throw std::logic_error(msg);
      }
      break;
    case AllocKind::scratch:
      scratch_now_ += words;
      scratch_peak_ = std::max(scratch_peak_, scratch_now_);
      break;
  }
  aux_words_peak_ = std::max(aux_words_peak_, aux_words_now());
}

void CostMeter::release(std::uint64_t words, AllocKind kind) {
  std::uint64_t* gauge = nullptr;
  switch (kind) {
    case AllocKind::charged: gauge = &charged_now_; break;
    case AllocKind::bookkeeping: gauge = &bookkeeping_now_; break;
    case AllocKind::scratch: gauge = &scratch_now_; break;
  }
  if (words > *gauge)
    throw std::logic_error("internal error: release of " + std::to_string(words) +
                           " words underflows a gauge holding " + std::to_string(*gauge));
  *gauge -= words;
}

}  // namespace slidewin
