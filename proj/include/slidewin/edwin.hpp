#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "slidewin/meter.hpp"
#include "slidewin/symbol_seq.hpp"
#include "slidewin/types.hpp"

namespace slidewin {

/// A read-only view of the input used by the reduction recursion. A view is
/// either the whole sequence, a contiguous slice of a parent view, or the
/// concatenation of two slices of a parent view. Reads translate indices up
/// the parent chain and charge exactly one input read, so a recursion level
/// costs a constant number of words instead of a materialized copy. Views
/// borrow their parent; keep parents alive (stack nesting does this
/// naturally).
class SeqView {
 public:
  explicit SeqView(const SymbolSeq& seq)
      : root_(&seq), off_a_(0), len_a_(seq.size()), off_b_(0), len_(seq.size()) {}
  SeqView(const SeqView& parent, std::size_t off, std::size_t len)
      : parent_(&parent), off_a_(off), len_a_(len), off_b_(0), len_(len) {}
  SeqView(const SeqView& parent, std::size_t off_a, std::size_t len_a, std::size_t off_b,
          std::size_t len_b)
      : parent_(&parent), off_a_(off_a), len_a_(len_a), off_b_(off_b), len_(len_a + len_b) {}

  std::size_t size() const { return len_; }

  Symbol at(std::size_t i, CostMeter& meter) const {
    const SeqView* v = this;
    while (v->parent_) {
      i = i < v->len_a_ ? v->off_a_ + i : v->off_b_ + (i - v->len_a_);
      v = v->parent_;
    }
    return v->root_->read(v->off_a_ + i, meter);
  }

 private:
  const SymbolSeq* root_ = nullptr;
  const SeqView* parent_ = nullptr;
  std::size_t off_a_, len_a_, off_b_, len_;
};

/// Single-instance element-distinctness solver. Errorless solvers never
/// misreport; one-sided solvers may wrongly report "distinct" but never
/// fabricate a duplicate.
class EdSolver {
 public:
  enum class ErrorMode { errorless, one_sided };
  virtual ~EdSolver() = default;

  /// True iff the range v[lo, lo+len) is reported all-distinct.
  virtual bool distinct(const SeqView& v, std::size_t lo, std::size_t len, CostMeter& meter) = 0;
  virtual ErrorMode error_mode() const { return ErrorMode::errorless; }
  virtual const char* name() const = 0;
};

/// Errorless reference solver: copies the range into declared budget-exempt
/// scratch, sorts, scans for an adjacent equal pair. O(L log L) comparisons.
std::unique_ptr<EdSolver> make_sort_ed_solver();

/// Errorless reference solver: hashed membership with every equality
/// resolved by a charged symbol comparison. Linear expected time.
std::unique_ptr<EdSolver> make_hash_ed_solver();

/// The errorless average-case scanner. At window start s it searches for the
/// first duplicate pair from the right-hand end of the window; a duplicate
/// whose left endpoint is j certifies 0 for every window start in [s, j] and
/// the scan restarts at j + 1; a fully distinct window emits 1 and advances
/// by one. |x| must be 2n - 1.
OutputVec avg_case_ed_sliding(const SymbolSeq& x, std::uint64_t n, CostMeter& meter);

struct EdReduceStats {
  std::uint64_t solver_calls = 0;
  std::uint64_t solver_reads = 0;
  std::uint64_t solver_comparisons = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t votes_per_probe = 1;

  std::uint64_t solver_cost() const { return solver_reads + solver_comparisons; }
};

struct EdReduceOptions {
  /// Repeat every solver probe C = 2*ceil(log2 n) + 1 times and take the
  /// majority. Needed only for one-sided solvers; errorless solvers give the
  /// same answer every time.
  bool randomized = false;
};

/// One size-reduction step over a range x[offset, offset + n + m - 1):
/// m outputs of window length n. Exposes the step's internals.
struct ReduceOutcome {
  OutputVec outputs;            // length m
  bool middle_duplicate = false;
  std::size_t i_L = 0;          // flank cut points, 1-based sentinel form
  std::size_t i_R = 0;
  OutputVec side;               // the (m-1)-window side problem's outputs, empty if middle_duplicate
};

ReduceOutcome reduce_window_ed(const SymbolSeq& x, std::size_t offset, std::uint64_t n,
                               std::uint64_t m, EdSolver& solver, CostMeter& meter,
                               EdReduceStats* stats = nullptr);

/// Sliding-window ED built from a single-instance solver: outputs are
/// computed in groups of ceil(t/2) via the size reduction, recursing on the
/// two-flank side problem down to direct scans at t <= 8. Exact for
/// errorless solvers; with one-sided solvers all errors report a
/// non-distinct window as distinct, never the reverse. |x| must be 2n - 1.
OutputVec ed_sliding_via_reduction(const SymbolSeq& x, std::uint64_t n, EdSolver& solver,
                                   CostMeter& meter, const EdReduceOptions* options = nullptr,
                                   EdReduceStats* stats = nullptr);

}  // namespace slidewin
