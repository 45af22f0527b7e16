#pragma once

#include <cstdint>

#include "slidewin/symbol_seq.hpp"
#include "slidewin/types.hpp"

namespace slidewin {

// Brute-force ground truth, deliberately simple and unbudgeted: every window
// is materialized and sorted. Exact integers throughout; the oracle must
// never be the thing that's wrong. All functions are pure and safe to call
// concurrently on shared inputs. t = |x| - n + 1 outputs.

/// values[i] = sum over distinct symbols of window i of frequency^k.
/// k = 0 counts distinct symbols; absent symbols contribute nothing.
OutputVec oracle_fk(const SymbolSeq& x, std::uint64_t n, std::uint64_t k);

/// values[i] = 1 iff window i has all-distinct symbols.
OutputVec oracle_ed(const SymbolSeq& x, std::uint64_t n);

/// values[i] = t_rank-th smallest symbol (with multiplicity) of window i.
OutputVec oracle_order(const SymbolSeq& x, std::uint64_t n, std::uint64_t t_rank);

/// oracle_fk(x, n, 0) reduced mod 2 elementwise.
OutputVec oracle_f0_mod2(const SymbolSeq& x, std::uint64_t n);

}  // namespace slidewin
