#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace slidewin {

/// Auxiliary-space ceiling. `bits` is the raw budget S; `word_bits` is the
/// machine word w = ceil(log2 max(n, |alphabet|)) (at least 1); the derived
/// slot count S' = floor(bits / word_bits) is what budgeted algorithms may
/// allocate. Input and output tapes are never charged against the budget.
struct SpaceBudget {
  std::uint64_t bits = 0;
  std::uint32_t word_bits = 1;

  std::uint64_t slots() const { return bits / word_bits; }

  /// Word size for a run over windows of length n and the given alphabet.
  static std::uint32_t word_bits_for(std::uint64_t n, std::uint64_t alphabet_size);

  static SpaceBudget from_bits(std::uint64_t bits, std::uint32_t word_bits);
  static SpaceBudget from_slots(std::uint64_t slots, std::uint32_t word_bits);
};

/// Raised when a charged allocation would exceed the attached budget's slots.
class BudgetViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which pool an allocation is charged to.
///
///  - charged:     the algorithm's budgeted working set; checked strictly
///                 against SpaceBudget::slots().
///  - bookkeeping: O(log n)-bit loop state, accumulators, recursion frames.
///                 Counted into the aux peak but exempt from the slot check;
///                 capped at kBookkeepingAllowance words while a budget is
///                 attached, so a budgeted run always reports
///                 aux_words_peak <= slots + kBookkeepingAllowance.
///  - scratch:     declared budget-exempt scratch (the plug-in ED solvers'
///                 own space). Counted into the aux peak and tracked
///                 separately.
enum class AllocKind { charged, bookkeeping, scratch };

/// Machine-independent cost accounting: one count per input-element read and
/// per symbol comparison, plus a word-granular gauge of live auxiliary
/// memory. Wall time is recorded but never used in correctness assertions.
/// One meter per algorithm run; not thread-safe.
class CostMeter {
 public:
  /// c1: bookkeeping words a budgeted run may use beyond its slots.
  static constexpr std::uint64_t kBookkeepingAllowance = 64;

  void charge_read(std::uint64_t count = 1) { input_reads_ += count; }
  void charge_cmp(std::uint64_t count = 1) { comparisons_ += count; }

  void alloc(std::uint64_t words, AllocKind kind = AllocKind::charged,
             const char* site = nullptr);
  void release(std::uint64_t words, AllocKind kind = AllocKind::charged);

  void attach_budget(const SpaceBudget& budget) { budget_ = budget; }
  void clear_budget() { budget_.reset(); }
  const std::optional<SpaceBudget>& budget() const { return budget_; }

  std::uint64_t input_reads() const { return input_reads_; }
  std::uint64_t comparisons() const { return comparisons_; }
  std::uint64_t cost() const { return input_reads_ + comparisons_; }

  std::uint64_t aux_words_now() const { return charged_now_ + bookkeeping_now_ + scratch_now_; }
  std::uint64_t aux_words_peak() const { return aux_words_peak_; }
  std::uint64_t bookkeeping_words_peak() const { return bookkeeping_peak_; }
  std::uint64_t scratch_words_peak() const { return scratch_peak_; }

  void add_wall_ns(std::uint64_t ns) { wall_ns_ += ns; }
  std::uint64_t wall_ns() const { return wall_ns_; }

 private:
  std::uint64_t input_reads_ = 0;
  std::uint64_t comparisons_ = 0;
  std::uint64_t charged_now_ = 0;
  std::uint64_t bookkeeping_now_ = 0;
  std::uint64_t scratch_now_ = 0;
  std::uint64_t aux_words_peak_ = 0;
  std::uint64_t bookkeeping_peak_ = 0;
  std::uint64_t scratch_peak_ = 0;
  std::uint64_t wall_ns_ = 0;
  std::optional<SpaceBudget> budget_;
};

/// RAII allocation: charges on construction, releases on destruction, so
/// error paths cannot leak gauge words.
class ScopedAlloc {
 public:
  ScopedAlloc(CostMeter& meter, std::uint64_t words, AllocKind kind = AllocKind::charged,
              const char* site = nullptr)
      : meter_(&meter), words_(words), kind_(kind) {
    meter_->alloc(words_, kind_, site);
  }
  ~ScopedAlloc() {
    if (meter_) meter_->release(words_, kind_);
  }
  ScopedAlloc(const ScopedAlloc&) = delete;
  ScopedAlloc& operator=(const ScopedAlloc&) = delete;
  ScopedAlloc(ScopedAlloc&& other) noexcept
      : meter_(other.meter_), words_(other.words_), kind_(other.kind_) {
    other.meter_ = nullptr;
  }

 private:
  CostMeter* meter_;
  std::uint64_t words_;
  AllocKind kind_;
};

/// Comparator that charges one comparison per invocation. Usable with the
/// standard sort/search algorithms.
struct CountingLess {
  CostMeter* meter;
  bool operator()(std::uint64_t a, std::uint64_t b) const {
    meter->charge_cmp();
    return a < b;
  }
};

}  // namespace slidewin
