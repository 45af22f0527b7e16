#include "slidewin/edwin.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace slidewin {
namespace {

constexpr std::uint64_t kFrameBookkeepingWords = 16;
constexpr std::size_t kBaseCaseOutputs = 8;

void require_full_input(const SymbolSeq& x, std::uint64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (x.size() != 2 * n - 1)
    throw std::invalid_argument(std::string(who) + ": input length " + std::to_string(x.size()) +
                                " != 2n - 1 = " + std::to_string(2 * n - 1));
}

class SortEdSolver final : public EdSolver {
 public:
  bool distinct(const SeqView& v, std::size_t lo, std::size_t len, CostMeter& meter) override {
    ScopedAlloc scratch(meter, len, AllocKind::scratch, "ed_single_sort.buffer");
    std::vector<Symbol> buf;
    buf.reserve(len);
    for (std::size_t i = 0; i < len; ++i) buf.push_back(v.at(lo + i, meter));
    std::sort(buf.begin(), buf.end(), CountingLess{&meter});
    for (std::size_t i = 1; i < buf.size(); ++i) {
      meter.charge_cmp();
      if (buf[i] == buf[i - 1]) return false;
    }
    return true;
  }
  const char* name() const override { return "sort"; }
};

class HashEdSolver final : public EdSolver {
 public:
  bool distinct(const SeqView& v, std::size_t lo, std::size_t len, CostMeter& meter) override {
    struct CountingEq {
      CostMeter* m;
      bool operator()(Symbol a, Symbol b) const {
        m->charge_cmp();
        return a == b;
      }
    };
    // model cost: one table word plus one entry word per element
    ScopedAlloc scratch(meter, 2 * len, AllocKind::scratch, "ed_single_hash.table");
    std::unordered_set<Symbol, std::hash<Symbol>, CountingEq> seen(
        2 * len + 1, std::hash<Symbol>{}, CountingEq{&meter});
    for (std::size_t i = 0; i < len; ++i) {
      if (!seen.insert(v.at(lo + i, meter)).second) return false;
    }
    return true;
  }
  const char* name() const override { return "hash"; }
};

/// Ancestry of the reduction recursion. Output i (0-based, side-local) of a
/// side problem corresponds to output group_off + i of the parent
/// subproblem, masked by the parent group's flank cuts.
struct Frame {
  const Frame* up;
  std::size_t group_off;
  std::size_t i_L;  // 1-based: output i is forced 0 unless i > i_L and i <= i_R
  std::size_t i_R;
};

class EdReducer {
 public:
  EdReducer(EdSolver& solver, CostMeter& meter, std::uint64_t votes)
      : solver_(solver), meter_(meter), votes_(votes) {
    stats_.votes_per_probe = votes;
  }

  const EdReduceStats& stats() const { return stats_; }

  bool probe_distinct(const SeqView& v, std::size_t lo, std::size_t len) {
    const std::uint64_t reads_before = meter_.input_reads();
    const std::uint64_t cmps_before = meter_.comparisons();
    std::uint64_t dup_votes = 0;
    for (std::uint64_t i = 0; i < votes_; ++i) {
      if (!solver_.distinct(v, lo, len, meter_)) ++dup_votes;
    }
    stats_.solver_calls += votes_;
    stats_.solver_reads += meter_.input_reads() - reads_before;
    stats_.solver_comparisons += meter_.comparisons() - cmps_before;
    return dup_votes * 2 <= votes_;
  }

  // Suffix-distinctness is monotone: extending a suffix leftward can only
  // create duplicates, so the "duplicate" answers form a prefix of j.
  std::size_t find_i_L(const SeqView& v, std::size_t off, std::size_t w, std::size_t mg) {
    std::size_t lo = 1, hi = mg - 1, ans = 0;
    while (lo <= hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (!probe_distinct(v, off + mid - 1, w - mid + 1)) {
        ans = mid;
        lo = mid + 1;
      } else {
        if (mid == 1) break;
        hi = mid - 1;
      }
    }
    return ans;
  }

  std::size_t find_i_R(const SeqView& v, std::size_t off, std::size_t w, std::size_t mg) {
    std::size_t lo = 1, hi = mg - 1, ans = mg;
    while (lo <= hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (!probe_distinct(v, off + mg - 1, w - mg + 1 + mid)) {
        ans = mid;
        if (mid == 1) break;
        hi = mid - 1;
      } else {
        lo = mid + 1;
      }
    }
    return ans;
  }

  void solve(const SeqView& v, std::size_t w, std::size_t t, const Frame* chain,
             std::vector<std::uint8_t>& out, std::uint64_t depth) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
    ScopedAlloc frame_bk(meter_, kFrameBookkeepingWords, AllocKind::bookkeeping, "edwin.frame");

    if (t <= kBaseCaseOutputs) {
      for (std::size_t s = 0; s < t; ++s) emit(chain, s, window_distinct(v, s, w), out);
      return;
    }

    const std::size_t m = (t + 1) / 2;
    for (std::size_t off = 0; off < t; off += m) {
      const std::size_t mg = std::min(m, t - off);
      if (!probe_distinct(v, off + mg - 1, w - mg + 1)) {
        // the shared middle has a duplicate: it lies in all mg windows
        for (std::size_t i = 0; i < mg; ++i) emit(chain, off + i, false, out);
        continue;
      }
      const std::size_t i_L = find_i_L(v, off, w, mg);
      const std::size_t i_R = find_i_R(v, off, w, mg);
      const SeqView side(v, off, mg - 1, off + w, mg - 1);
      const Frame frame{chain, off, i_L, i_R};
      solve(side, mg - 1, mg, &frame, out, depth + 1);
    }
  }

 private:
  bool window_distinct(const SeqView& v, std::size_t s, std::size_t w) {
    for (std::size_t a = s; a + 1 < s + w; ++a) {
      const Symbol va = v.at(a, meter_);
      for (std::size_t b = a + 1; b < s + w; ++b) {
        meter_.charge_cmp();
        if (v.at(b, meter_) == va) return false;
      }
    }
    return true;
  }

  // Translate a subproblem-local output position up the frame chain,
  // AND-ing each ancestor group's flank mask, and write the root output.
  void emit(const Frame* chain, std::size_t pos, bool bit, std::vector<std::uint8_t>& out) {
    for (const Frame* f = chain; f; f = f->up) {
      if (pos + 1 <= f->i_L || pos + 1 > f->i_R) bit = false;
      pos = f->group_off + pos;
    }
    out[pos] = bit ? 1 : 0;
  }

  EdSolver& solver_;
  CostMeter& meter_;
  std::uint64_t votes_;
  EdReduceStats stats_;
};

std::uint64_t probe_votes(std::uint64_t n, const EdReduceOptions* options) {
  if (!options || !options->randomized) return 1;
  const std::uint64_t log_n = std::bit_width(std::max<std::uint64_t>(n, 2) - 1);
  return 2 * log_n + 1;
}

}  // namespace

std::unique_ptr<EdSolver> make_sort_ed_solver() { return std::make_unique<SortEdSolver>(); }
std::unique_ptr<EdSolver> make_hash_ed_solver() { return std::make_unique<HashEdSolver>(); }

OutputVec avg_case_ed_sliding(const SymbolSeq& x, std::uint64_t n, CostMeter& meter) {
  require_full_input(x, n, "avg_case_ed_sliding");
  const std::size_t t = n;
  ScopedAlloc bk(meter, 8, AllocKind::bookkeeping, "edwin.avg_registers");
  std::vector<std::uint8_t> bits(t, 0);

  std::size_t s = 0;
  while (s < t) {
    bool found = false;
    std::size_t dup_left = 0;
    for (std::size_t j = s + n - 1;; --j) {
      const Symbol vj = x.read(j, meter);
      for (std::size_t h = j + 1; h < s + n; ++h) {
        meter.charge_cmp();
        if (x.read(h, meter) == vj) {
          found = true;
          dup_left = j;
          break;
        }
      }
      if (found || j == s) break;
    }
    if (!found) {
      bits[s] = 1;
      ++s;
      continue;
    }
    // both endpoints of the pair sit in every window starting in [s, dup_left]
    for (std::size_t u = s; u <= dup_left && u < t; ++u) bits[u] = 0;
    s = dup_left + 1;
  }

  OutputVec out;
  out.reserve(t);
  for (const auto b : bits) out.emplace_back(static_cast<int>(b));
  return out;
}

ReduceOutcome reduce_window_ed(const SymbolSeq& x, std::size_t offset, std::uint64_t n,
                               std::uint64_t m, EdSolver& solver, CostMeter& meter,
                               EdReduceStats* stats) {
  if (m < 1 || m >= n) throw std::invalid_argument("reduce_window_ed: need 1 <= m < n");
  if (offset + n + m - 1 > x.size())
    throw std::invalid_argument("reduce_window_ed: range exceeds the input");

  EdReducer reducer(solver, meter, 1);
  const SeqView root(x);
  const SeqView range(root, offset, n + m - 1);

  ReduceOutcome res;
  res.i_R = m;
  if (!reducer.probe_distinct(range, m - 1, n - m + 1)) {
    res.middle_duplicate = true;
    res.outputs.assign(m, Value(0));
    if (stats) *stats = reducer.stats();
    return res;
  }
  if (m == 1) {
    // the middle is the whole (single) window
    res.outputs.assign(1, Value(1));
    res.side.assign(1, Value(1));
    if (stats) *stats = reducer.stats();
    return res;
  }

  res.i_L = reducer.find_i_L(range, 0, n, m);
  res.i_R = reducer.find_i_R(range, 0, n, m);

  std::vector<std::uint8_t> side_bits(m, 0);
  const SeqView side(range, 0, m - 1, n, m - 1);
  reducer.solve(side, m - 1, m, nullptr, side_bits, 1);

  res.side.reserve(m);
  res.outputs.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const bool side_bit = side_bits[i - 1] != 0;
    res.side.emplace_back(side_bit ? 1 : 0);
    const bool bit = (i > res.i_L) && (i <= res.i_R) && side_bit;
    res.outputs.emplace_back(bit ? 1 : 0);
  }
  if (stats) *stats = reducer.stats();
  return res;
}

OutputVec ed_sliding_via_reduction(const SymbolSeq& x, std::uint64_t n, EdSolver& solver,
                                   CostMeter& meter, const EdReduceOptions* options,
                                   EdReduceStats* stats) {
  require_full_input(x, n, "ed_sliding_via_reduction");
  EdReducer reducer(solver, meter, probe_votes(n, options));
  const SeqView root(x);
  std::vector<std::uint8_t> bits(n, 0);
  reducer.solve(root, n, n, nullptr, bits, 0);
  if (stats) *stats = reducer.stats();

  OutputVec out;
  out.reserve(n);
  for (const auto b : bits) out.emplace_back(static_cast<int>(b));
  return out;
}

}  // namespace slidewin
