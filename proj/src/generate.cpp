#include "slidewin/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "slidewin/rng.hpp"

namespace slidewin {
namespace {

std::vector<Symbol> shuffled_identity(std::uint64_t count, SplitMix64& rng) {
  std::vector<Symbol> vals(count);
  std::iota(vals.begin(), vals.end(), Symbol{1});
  // Fisher-Yates with the project generator; std::shuffle is not
  // reproducible across standard libraries.
  for (std::uint64_t i = count; i > 1; --i) {
    const std::uint64_t j = rng.next_below(i);
    std::swap(vals[i - 1], vals[j]);
  }
  return vals;
}

}  // namespace

SymbolSeq generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  const std::uint64_t n = spec.n;
  const std::uint64_t len = 2 * n - 1;
  SplitMix64 rng(spec.seed);

  switch (spec.kind) {
    case GenKind::uniform: {
      std::vector<Symbol> data(len);
      for (auto& s : data) s = rng.next_symbol(n);
      return SymbolSeq(std::move(data), n);
    }
    case GenKind::all_equal: {
      if (spec.symbol < 1) throw std::invalid_argument("generate: all_equal symbol must be >= 1");
      const Symbol alphabet = std::max<Symbol>(n, spec.symbol);
      return SymbolSeq(std::vector<Symbol>(len, spec.symbol), alphabet);
    }
    case GenKind::all_distinct: {
      return SymbolSeq(shuffled_identity(len, rng), len);
    }
    case GenKind::planted_duplicate: {
      if (len < 2)
        throw std::invalid_argument("generate: planted_duplicate needs length >= 2 (n >= 2)");
      const std::size_t p1 = spec.dup_pos1, p2 = spec.dup_pos2;
      if (p1 < 1 || p1 > len || p2 < 1 || p2 > len || p1 == p2)
        throw std::invalid_argument("generate: planted_duplicate positions must be distinct and in [1, " +
                                    std::to_string(len) + "]");
      // One duplicate pair, everything else distinct via a permutation fill.
      std::vector<Symbol> vals = shuffled_identity(len - 1, rng);
      std::vector<Symbol> data(len);
      std::size_t next = 0;
      for (std::size_t i = 0; i < len; ++i) {
        if (i + 1 == p2) continue;
        data[i] = vals[next++];
      }
      data[p2 - 1] = data[p1 - 1];
      return SymbolSeq(std::move(data), len - 1);
    }
    case GenKind::sorting_reduction: {
      const std::size_t t_rank = spec.payload.size();
      if (t_rank < 1) throw std::invalid_argument("generate: sorting_reduction payload is empty");
      if (t_rank > n - 1)
        throw std::invalid_argument("generate: sorting_reduction payload size " +
                                    std::to_string(t_rank) + " exceeds n - 1");
      for (std::size_t i = 0; i < t_rank; ++i) {
        if (spec.payload[i] < 2 || spec.payload[i] > n - 1)
          throw std::invalid_argument("generate: sorting_reduction payload value " +
                                      std::to_string(spec.payload[i]) + " at index " +
                                      std::to_string(i) + " outside {2.." + std::to_string(n - 1) +
                                      "}");
      }
      std::vector<Symbol> data;
      data.reserve(len);
      data.insert(data.end(), n - t_rank, Symbol{n});
      data.insert(data.end(), spec.payload.begin(), spec.payload.end());
      data.insert(data.end(), n - 1, Symbol{1});
      return SymbolSeq(std::move(data), n);
    }
  }
  throw std::invalid_argument("generate: unknown kind");
}

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::uniform: return "uniform";
    case GenKind::all_equal: return "all_equal";
    case GenKind::all_distinct: return "all_distinct";
    case GenKind::planted_duplicate: return "planted_duplicate";
    case GenKind::sorting_reduction: return "sorting_reduction";
  }
  return "?";
}

GenKind gen_kind_from_name(std::string_view name) {
  std::string norm(name);
  std::replace(norm.begin(), norm.end(), '-', '_');
  if (norm == "uniform") return GenKind::uniform;
  if (norm == "all_equal") return GenKind::all_equal;
  if (norm == "all_distinct") return GenKind::all_distinct;
  if (norm == "planted_duplicate") return GenKind::planted_duplicate;
  if (norm == "sorting_reduction") return GenKind::sorting_reduction;
  throw std::invalid_argument("unknown generator kind: " + std::string(name));
}

}  // namespace slidewin
