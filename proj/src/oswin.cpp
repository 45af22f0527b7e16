#include "slidewin/oswin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "slidewin/generate.hpp"

namespace slidewin {
namespace {

void require_full_input(const SymbolSeq& x, std::uint64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (x.size() != 2 * n - 1)
    throw std::invalid_argument(std::string(who) + ": input length " + std::to_string(x.size()) +
                                " != 2n - 1 = " + std::to_string(2 * n - 1));
}

// better(a, b): a strictly beats b (max: a > b, min: a < b). Strictness
// keeps the leftmost extreme on ties.
template <typename Better>
OutputVec sliding_extreme(const SymbolSeq& x, std::uint64_t n, CostMeter& meter, Better better,
                          OsStats* stats) {
  require_full_input(x, n, "sliding_max/min");
  const std::int64_t t = static_cast<std::int64_t>(n);
  const std::int64_t nn = static_cast<std::int64_t>(n);
  std::vector<Symbol> result(t, 0);
  ScopedAlloc bk(meter, 10, AllocKind::bookkeeping, "oswin.registers");
  OsStats local;

  std::int64_t a = 0, b = t - 1;
  while (a <= b) {
    ++local.levels;
    const std::int64_t pending = b - a + 1;
    const std::int64_t smid = a + (pending - 1) / 2;

    // naive scan of the middle pending window
    ++local.naive_scans;
    Symbol best = x.read(smid, meter);
    std::int64_t best_pos = smid;
    for (std::int64_t i = smid + 1; i < smid + nn; ++i) {
      const Symbol v = x.read(i, meter);
      meter.charge_cmp();
      if (better(v, best)) {
        best = v;
        best_pos = i;
      }
    }
    result[smid] = best;

    const std::int64_t half = (nn + 1) / 2;  // ceil(n/2)
    if (best_pos - smid < half) {
      // extreme in the left half: it stays inside every window starting in
      // [a, smid], so slide leftward and keep the right part for later
      Symbol cur = best;
      for (std::int64_t u = smid - 1; u >= a; --u) {
        const Symbol v = x.read(u, meter);
        meter.charge_cmp();
        if (better(v, cur)) cur = v;
        result[u] = cur;
      }
      a = smid + 1;
    } else {
      // mirror case: slide rightward, keep the left part
      Symbol cur = best;
      for (std::int64_t u = smid + 1; u <= b; ++u) {
        const Symbol v = x.read(u + nn - 1, meter);
        meter.charge_cmp();
        if (better(v, cur)) cur = v;
        result[u] = cur;
      }
      b = smid - 1;
    }
  }

  if (stats) *stats = local;
  OutputVec out;
  out.reserve(result.size());
  for (const Symbol v : result) out.emplace_back(v);
  return out;
}

}  // namespace

OutputVec sliding_max(const SymbolSeq& x, std::uint64_t n, CostMeter& meter, OsStats* stats) {
  return sliding_extreme(x, n, meter, [](Symbol p, Symbol q) { return p > q; }, stats);
}

OutputVec sliding_min(const SymbolSeq& x, std::uint64_t n, CostMeter& meter, OsStats* stats) {
  return sliding_extreme(x, n, meter, [](Symbol p, Symbol q) { return p < q; }, stats);
}

OutputVec sliding_order_baseline(const SymbolSeq& x, std::uint64_t n, std::uint64_t t_rank,
                                 CostMeter& meter) {
  if (n < 1) throw std::invalid_argument("sliding_order_baseline: n must be >= 1");
  if (x.size() < n)
    throw std::invalid_argument("sliding_order_baseline: input shorter than the window");
  if (t_rank < 1 || t_rank > n)
    throw std::invalid_argument("sliding_order_baseline: rank " + std::to_string(t_rank) +
                                " outside [1, " + std::to_string(n) + "]");
  const std::size_t t = x.size() - n + 1;
  ScopedAlloc scratch(meter, n, AllocKind::scratch, "oswin.baseline_buffer");
  std::vector<Symbol> buf(n);
  OutputVec out;
  out.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t e = 0; e < n; ++e) buf[e] = x.read(i + e, meter);
    std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(t_rank - 1), buf.end(),
                     CountingLess{&meter});
    out.emplace_back(buf[t_rank - 1]);
  }
  return out;
}

SortingReductionCheck verify_sorting_reduction(const std::vector<Symbol>& s, std::uint64_t n,
                                               std::uint64_t seed, CostMeter& meter) {
  GenSpec spec;
  spec.kind = GenKind::sorting_reduction;
  spec.n = n;
  spec.seed = seed;
  spec.payload = s;
  const SymbolSeq x = generate(spec);  // validates the payload
  const std::size_t t_rank = s.size();

  // only the first t_rank outputs are checked; run on the prefix that
  // produces exactly those windows
  const SymbolSeq head = x.prefix(n + t_rank - 1);
  const OutputVec got = sliding_order_baseline(head, n, t_rank, meter);

  std::vector<Symbol> expected(s);
  std::sort(expected.begin(), expected.end(), std::greater<Symbol>());

  SortingReductionCheck res;
  for (std::size_t i = 0; i < t_rank; ++i) {
    if (got[i] != expected[i]) {
      res.ok = false;
      res.first_mismatch = i;
      return res;
    }
  }
  return res;
}

}  // namespace slidewin
