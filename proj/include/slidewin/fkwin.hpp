#pragma once

#include <cstdint>
#include <vector>

#include "slidewin/meter.hpp"
#include "slidewin/symbol_seq.hpp"
#include "slidewin/types.hpp"

namespace slidewin {

/// Minimum budget (c0): the smallest slot count the algorithms accept.
inline constexpr std::uint64_t kFkMinBudgetSlots = 24;

/// Words charged per group element, worst case, including build temporaries.
/// The group size is derived as g = max(1, slots / kFkWordsPerGroupElement),
/// which keeps every charged allocation within the slot budget.
inline constexpr std::uint64_t kFkWordsPerGroupElement = 24;

/// Fixed bookkeeping words for one run (running output, loop indices,
/// sweep boundary); always <= CostMeter::kBookkeepingAllowance.
inline constexpr std::uint64_t kFkBookkeepingWords = 16;

struct FkStats {
  std::uint64_t first_window_passes = 0;
  std::uint64_t groups = 0;
  std::uint64_t max_group_size = 0;
  std::uint64_t head_moves_old = 0;
  std::uint64_t head_moves_new = 0;
  /// True iff in every group each head-pointer family moved at most
  /// group-size times.
  bool head_moves_bounded = true;
};

/// F_k of the first window x_1..x_n, computed space-bounded by a multi-pass
/// distinct-value sweep: a bounded ordered buffer of at most
/// B = max(1, (slots - 2) / 2) (value, frequency) pairs collects the
/// smallest distinct values above the previous pass's boundary, evicting the
/// largest buffered value on overflow; buffered pairs are emitted in order
/// and accumulate sum f^k. Reads <= (ceil(F0 / B) + 1) * n.
/// budget may be null (unbudgeted run, one pass).
Value first_window_fk(const SymbolSeq& x, std::uint64_t n, std::uint64_t k,
                      const SpaceBudget* budget, CostMeter& meter,
                      std::uint64_t* passes_out = nullptr);

/// Exact F_k over all n sliding windows of a length 2n-1 input. k = 1 is
/// answered directly as the constant n vector; k = 0 and k >= 2 run the
/// grouped incremental algorithm. Comparison-based: symbols are accessed
/// solely through ordering comparisons.
OutputVec sliding_fk(const SymbolSeq& x, std::uint64_t n, std::uint64_t k,
                     const SpaceBudget* budget, CostMeter& meter, FkStats* stats = nullptr);

/// Parity of the number of distinct elements per window; the same pass as
/// sliding_fk(k = 0), emitting the low bit of the running output.
OutputVec sliding_f0_mod2(const SymbolSeq& x, std::uint64_t n, const SpaceBudget* budget,
                          CostMeter& meter, FkStats* stats = nullptr);

namespace detail {

/// One group's working set, exposed for white-box tests.
///
/// The group derives outputs for windows start+1 .. start+gsz from the
/// window at `start`. Old block = x[start, start+gsz), new block =
/// x[start+n, start+n+gsz). `leaves` is the sorted distinct-symbol table of
/// both blocks; each leaf owns an ascending occurrence-index segment per
/// block and a mid-scan counter. c_old[e] counts occurrences of
/// x[start+e] strictly to its right inside the old block; c_new[e] counts
/// occurrences of x[start+n+e] strictly to its left inside the new block.
struct GroupState {
  std::size_t start = 0;
  std::size_t gsz = 0;
  std::vector<Symbol> leaves;
  std::vector<std::uint64_t> mid_count;            // C(leaf)
  std::vector<std::size_t> old_off, new_off;       // leaf segment offsets, size L+1
  std::vector<std::size_t> old_occ, new_occ;       // global occurrence indices
  std::vector<std::size_t> old_skip;               // old head: entries consumed from the left
  std::vector<std::size_t> new_taken;              // new head: entries admitted so far
  std::vector<std::size_t> p_old, p_new;           // element -> leaf
  std::vector<std::uint64_t> c_old, c_new;
  std::uint64_t charged_words = 0;                 // released by the caller

  std::size_t old_seg_len(std::size_t leaf) const { return old_off[leaf + 1] - old_off[leaf]; }
  std::size_t new_seg_len(std::size_t leaf) const { return new_off[leaf + 1] - new_off[leaf]; }
};

GroupState build_group_state(const SymbolSeq& x, std::size_t start, std::size_t gsz,
                             std::size_t n, CostMeter& meter);

/// Scan the middle x[start+gsz, start+n) maintaining the per-leaf counters.
void scan_middle(GroupState& gs, const SymbolSeq& x, std::size_t n, CostMeter& meter);

}  // namespace detail

}  // namespace slidewin
