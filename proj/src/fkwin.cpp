#include "slidewin/fkwin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slidewin {
namespace {

void require_full_input(const SymbolSeq& x, std::uint64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (x.size() != 2 * n - 1)
    throw std::invalid_argument(std::string(who) + ": input length " + std::to_string(x.size()) +
                                " != 2n - 1 = " + std::to_string(2 * n - 1));
}

std::uint64_t sizing_slots(const SymbolSeq&, std::uint64_t n, const SpaceBudget* budget,
                           CostMeter& meter, const char* who) {
  if (budget) {
    if (budget->slots() < kFkMinBudgetSlots)
      throw std::invalid_argument(std::string(who) + ": budget of " +
                                  std::to_string(budget->slots()) + " slots is below the minimum " +
                                  std::to_string(kFkMinBudgetSlots));
    meter.attach_budget(*budget);
    return budget->slots();
  }
  // unbudgeted: no enforcement, size the structures for a single group /
  // single pass
  meter.clear_budget();
  return kFkWordsPerGroupElement * std::max<std::uint64_t>(n, 1) + kFkMinBudgetSlots;
}

Value int_pow(std::uint64_t base, std::uint64_t exp) {
  Value r = 1;
  Value b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// marginal contribution of one more occurrence: (f + 1)^k - f^k
Value power_step(std::uint64_t f, std::uint64_t k) {
  return int_pow(f + 1, k) - int_pow(f, k);
}

}  // namespace

Value first_window_fk(const SymbolSeq& x, std::uint64_t n, std::uint64_t k,
                      const SpaceBudget* budget, CostMeter& meter, std::uint64_t* passes_out) {
  if (n < 1) throw std::invalid_argument("first_window_fk: n must be >= 1");
  if (x.size() < n)
    throw std::invalid_argument("first_window_fk: input shorter than window length");
  const std::uint64_t slots = sizing_slots(x, n, budget, meter, "first_window_fk");
  const std::uint64_t capacity = std::max<std::uint64_t>(1, (slots - 2) / 2);

  ScopedAlloc bk(meter, kFkBookkeepingWords, AllocKind::bookkeeping, "first_window_fk.registers");
  ScopedAlloc buf_charge(meter, 2 * capacity, AllocKind::charged, "first_window_fk.buffer");
  std::vector<Symbol> values;
  std::vector<std::uint64_t> freqs;
  values.reserve(capacity);
  freqs.reserve(capacity);

  Value acc = 0;
  Symbol boundary = 0;
  bool have_boundary = false;
  std::uint64_t passes = 0;

  for (;;) {
    ++passes;
    values.clear();
    freqs.clear();
    bool evicted = false;

    for (std::uint64_t pos = 0; pos < n; ++pos) {
      const Symbol v = x.read(pos, meter);
      if (have_boundary) {
        meter.charge_cmp();
        if (v <= boundary) continue;
      }
      auto it = std::lower_bound(values.begin(), values.end(), v, CountingLess{&meter});
      if (it != values.end()) {
        meter.charge_cmp();
        if (*it == v) {
          ++freqs[static_cast<std::size_t>(it - values.begin())];
          continue;
        }
      }
      const std::size_t idx = static_cast<std::size_t>(it - values.begin());
      if (values.size() == capacity) {
        evicted = true;
        if (idx == values.size()) continue;  // v is itself the largest: dropped
        values.pop_back();
        freqs.pop_back();
      }
      values.insert(values.begin() + static_cast<std::ptrdiff_t>(idx), v);
      freqs.insert(freqs.begin() + static_cast<std::ptrdiff_t>(idx), 1);
    }

    if (values.empty()) break;
    for (std::size_t i = 0; i < values.size(); ++i) acc += int_pow(freqs[i], k);
    boundary = values.back();
    have_boundary = true;
    if (!evicted) break;
  }

  if (passes_out) *passes_out = passes;
  return acc;
}

namespace detail {

GroupState build_group_state(const SymbolSeq& x, std::size_t start, std::size_t gsz,
                             std::size_t n, CostMeter& meter) {
  GroupState gs;
  gs.start = start;
  gs.gsz = gsz;
  const std::size_t two_g = 2 * gsz;

  // temporaries: the block symbols and a permutation to sort
  ScopedAlloc tmp_charge(meter, 2 * two_g, AllocKind::charged, "fkwin.group_build");
  std::vector<Symbol> block(two_g);
  for (std::size_t e = 0; e < gsz; ++e) block[e] = x.read(start + e, meter);
  for (std::size_t e = 0; e < gsz; ++e) block[gsz + e] = x.read(start + n + e, meter);

  std::vector<std::size_t> perm(two_g);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // order: symbol (charged comparison), then old before new, then index
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    meter.charge_cmp();
    if (block[a] != block[b]) return block[a] < block[b];
    return a < b;
  });

  std::size_t leaf_count = 0;
  for (std::size_t e = 0; e < two_g; ++e) {
    if (e == 0) {
      ++leaf_count;
      continue;
    }
    meter.charge_cmp();
    if (block[perm[e]] != block[perm[e - 1]]) ++leaf_count;
  }

  gs.charged_words = 6 * static_cast<std::uint64_t>(leaf_count) + 6 * gsz + 2;
  meter.alloc(gs.charged_words, AllocKind::charged, "fkwin.group_state");

  gs.leaves.reserve(leaf_count);
  gs.mid_count.assign(leaf_count, 0);
  gs.old_off.assign(leaf_count + 1, 0);
  gs.new_off.assign(leaf_count + 1, 0);
  gs.old_occ.reserve(gsz);
  gs.new_occ.reserve(gsz);
  gs.old_skip.assign(leaf_count, 0);
  gs.new_taken.assign(leaf_count, 0);
  gs.p_old.assign(gsz, 0);
  gs.p_new.assign(gsz, 0);
  gs.c_old.assign(gsz, 0);
  gs.c_new.assign(gsz, 0);

  // first pass over the sorted permutation: leaf table and segment sizes
  for (std::size_t e = 0; e < two_g; ++e) {
    const std::size_t entry = perm[e];
    if (e == 0 || block[entry] != gs.leaves.back()) gs.leaves.push_back(block[entry]);
    const std::size_t leaf = gs.leaves.size() - 1;
    if (entry < gsz) {
      gs.p_old[entry] = leaf;
      ++gs.old_off[leaf + 1];
    } else {
      gs.p_new[entry - gsz] = leaf;
      ++gs.new_off[leaf + 1];
    }
  }
  for (std::size_t l = 0; l < leaf_count; ++l) {
    gs.old_off[l + 1] += gs.old_off[l];
    gs.new_off[l + 1] += gs.new_off[l];
  }

  // second pass: occurrence segments (ascending indices because perm is
  // index-ordered within a symbol) and the duplicate counters
  gs.old_occ.assign(gsz, 0);
  gs.new_occ.assign(gsz, 0);
  std::vector<std::size_t> old_fill(leaf_count, 0), new_fill(leaf_count, 0);
  for (std::size_t e = 0; e < two_g; ++e) {
    const std::size_t entry = perm[e];
    if (entry < gsz) {
      const std::size_t leaf = gs.p_old[entry];
      const std::size_t pos = old_fill[leaf]++;
      gs.old_occ[gs.old_off[leaf] + pos] = start + entry;
    } else {
      const std::size_t local = entry - gsz;
      const std::size_t leaf = gs.p_new[local];
      const std::size_t pos = new_fill[leaf]++;
      gs.new_occ[gs.new_off[leaf] + pos] = start + n + local;
      gs.c_new[local] = pos;  // occurrences strictly to its left
    }
  }
  for (std::size_t e = 0; e < gsz; ++e) {
    const std::size_t leaf = gs.p_old[e];
    // position of this index within its segment, counted from the right
    // (occurrences strictly to its right)
    const std::size_t seg_len = gs.old_seg_len(leaf);
    const std::size_t* seg = gs.old_occ.data() + gs.old_off[leaf];
    const std::size_t pos =
        static_cast<std::size_t>(std::lower_bound(seg, seg + seg_len, start + e) - seg);
    gs.c_old[e] = seg_len - 1 - pos;
  }

  return gs;
}

void scan_middle(GroupState& gs, const SymbolSeq& x, std::size_t n, CostMeter& meter) {
  for (std::size_t pos = gs.start + gs.gsz; pos < gs.start + n; ++pos) {
    const Symbol v = x.read(pos, meter);
    auto it = std::lower_bound(gs.leaves.begin(), gs.leaves.end(), v, CountingLess{&meter});
    if (it == gs.leaves.end()) continue;
    meter.charge_cmp();
    if (*it == v) ++gs.mid_count[static_cast<std::size_t>(it - gs.leaves.begin())];
  }
}

namespace {

// occurrences of the leaf's symbol in the new block at positions <= bound
std::uint64_t new_prefix_count(GroupState& gs, std::size_t leaf, std::size_t bound,
                               std::uint64_t& moves) {
  const std::size_t seg_len = gs.new_seg_len(leaf);
  const std::size_t base = gs.new_off[leaf];
  std::size_t& taken = gs.new_taken[leaf];
  while (taken < seg_len && gs.new_occ[base + taken] <= bound) {
    ++taken;
    ++moves;
  }
  return taken;
}

// occurrences of the leaf's symbol in the old block at positions >= bound
std::uint64_t old_suffix_count(GroupState& gs, std::size_t leaf, std::size_t bound,
                               std::uint64_t& moves) {
  const std::size_t seg_len = gs.old_seg_len(leaf);
  const std::size_t base = gs.old_off[leaf];
  std::size_t& skip = gs.old_skip[leaf];
  while (skip < seg_len && gs.old_occ[base + skip] < bound) {
    ++skip;
    ++moves;
  }
  return seg_len - skip;
}

}  // namespace

}  // namespace detail

namespace {

OutputVec sliding_fk_impl(const SymbolSeq& x, std::uint64_t n, std::uint64_t k, bool mod2,
                          const SpaceBudget* budget, CostMeter& meter, FkStats* stats) {
  require_full_input(x, n, "sliding_fk");
  const std::uint64_t t = n;
  OutputVec out;
  out.reserve(t);

  if (k == 1 && !mod2) {
    // F_1 is the window length; no machinery needed
    out.assign(t, Value(n));
    return out;
  }

  const std::uint64_t slots = sizing_slots(x, n, budget, meter, "sliding_fk");
  const std::size_t group_cap =
      static_cast<std::size_t>(std::max<std::uint64_t>(1, slots / kFkWordsPerGroupElement));

  ScopedAlloc bk(meter, kFkBookkeepingWords, AllocKind::bookkeeping, "fkwin.registers");

  FkStats local;
  std::uint64_t passes = 0;
  Value y = first_window_fk(x, n, k, budget, meter, &passes);
  local.first_window_passes = passes;
  out.push_back(mod2 ? Value(y & 1) : y);

  std::size_t start = 0;
  while (out.size() < t) {
    const std::size_t gsz = std::min<std::size_t>(group_cap, t - out.size());
    detail::GroupState gs = detail::build_group_state(x, start, gsz, n, meter);
    detail::scan_middle(gs, x, n, meter);

    std::uint64_t moves_old = 0, moves_new = 0;
    for (std::size_t e = 0; e < gsz; ++e) {
      const std::size_t j = start + e;
      const std::size_t leaf_out = gs.p_old[e];
      const std::size_t leaf_in = gs.p_new[e];
      meter.charge_cmp();  // x_j vs x_{j+n}
      if (leaf_out != leaf_in) {
        const std::uint64_t f_out = gs.c_old[e] + gs.mid_count[leaf_out] +
                                    detail::new_prefix_count(gs, leaf_out, j + n - 1, moves_new);
        const std::uint64_t f_in = gs.c_new[e] + gs.mid_count[leaf_in] +
                                   detail::old_suffix_count(gs, leaf_in, j + 1, moves_old);
        if (k == 0) {
          if (f_out == 0) y -= 1;
          if (f_in == 0) y += 1;
        } else {
          y -= power_step(f_out, k);
          y += power_step(f_in, k);
        }
      }
      out.push_back(mod2 ? Value(y & 1) : y);
    }

    meter.release(gs.charged_words, AllocKind::charged);
    ++local.groups;
    local.max_group_size = std::max<std::uint64_t>(local.max_group_size, gsz);
    local.head_moves_old += moves_old;
    local.head_moves_new += moves_new;
    if (moves_old > gsz || moves_new > gsz) local.head_moves_bounded = false;
    start += gsz;
  }

  if (stats) *stats = local;
  return out;
}

}  // namespace

OutputVec sliding_fk(const SymbolSeq& x, std::uint64_t n, std::uint64_t k,
                     const SpaceBudget* budget, CostMeter& meter, FkStats* stats) {
  return sliding_fk_impl(x, n, k, false, budget, meter, stats);
}

OutputVec sliding_f0_mod2(const SymbolSeq& x, std::uint64_t n, const SpaceBudget* budget,
                          CostMeter& meter, FkStats* stats) {
  return sliding_fk_impl(x, n, 0, true, budget, meter, stats);
}

}  // namespace slidewin
