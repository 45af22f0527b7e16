#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "slidewin/symbol_seq.hpp"

namespace slidewin {

enum class GenKind {
  uniform,            // i.i.d. from [n]
  all_equal,          // the chosen symbol repeated
  all_distinct,       // a seeded permutation fill, every symbol unique
  planted_duplicate,  // one duplicate pair at caller-given positions
  sorting_reduction,  // n^(n-t) payload 1^(n-1): embeds sorting into order stats
};

/// Input-generator description. Every kind produces a sequence of length
/// 2n - 1 and is a pure function of the spec (same seed, same sequence).
struct GenSpec {
  GenKind kind = GenKind::uniform;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  Symbol symbol = 1;                     // all_equal
  std::size_t dup_pos1 = 0, dup_pos2 = 0;  // planted_duplicate, 1-based
  std::vector<Symbol> payload;           // sorting_reduction, values in {2..n-1}
};

SymbolSeq generate(const GenSpec& spec);

const char* gen_kind_name(GenKind kind);

/// Accepts both snake_case and kebab-case spellings; throws
/// std::invalid_argument on anything else.
GenKind gen_kind_from_name(std::string_view name);

}  // namespace slidewin
