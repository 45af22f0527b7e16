#pragma once

#include <cstdint>
#include <optional>

#include "slidewin/meter.hpp"
#include "slidewin/symbol_seq.hpp"
#include "slidewin/types.hpp"

namespace slidewin {

struct OsStats {
  std::uint64_t levels = 0;          // region-halving iterations
  std::uint64_t naive_scans = 0;     // one middle-window scan per level
};

/// Sliding maximum / minimum over a length 2n-1 input, O(n log n)
/// comparisons and a constant number of index registers: scan the middle
/// pending window naively, slide toward the half that contains its extreme
/// (ties broken to the leftmost), then iterate on the remaining half of the
/// pending outputs.
OutputVec sliding_max(const SymbolSeq& x, std::uint64_t n, CostMeter& meter,
                      OsStats* stats = nullptr);
OutputVec sliding_min(const SymbolSeq& x, std::uint64_t n, CostMeter& meter,
                      OsStats* stats = nullptr);

/// Per-window selection baseline for arbitrary ranks; the honest reference
/// point for rank statistics with no fast sliding algorithm. Accepts any
/// input length >= n and produces |x| - n + 1 outputs.
OutputVec sliding_order_baseline(const SymbolSeq& x, std::uint64_t n, std::uint64_t t_rank,
                                 CostMeter& meter);

struct SortingReductionCheck {
  bool ok = true;
  std::size_t first_mismatch = 0;  // 0-based output index, valid iff !ok
};

/// Builds the sorting-embedding input for payload s (values in {2..n-1}),
/// runs a sliding order-statistic implementation with rank |s|, and checks
/// that the first |s| outputs are s sorted in descending order. The
/// embedding guarantees this identity when |s| <= (n + 1) / 2 — beyond that
/// the payload itself starts leaving the window before all |s| outputs are
/// produced, and the checker may legitimately report a mismatch.
SortingReductionCheck verify_sorting_reduction(const std::vector<Symbol>& s, std::uint64_t n,
                                               std::uint64_t seed, CostMeter& meter);

}  // namespace slidewin
