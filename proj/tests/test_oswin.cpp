#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "slidewin/generate.hpp"
#include "slidewin/oracle.hpp"
#include "slidewin/oswin.hpp"
#include "slidewin/rng.hpp"

using namespace slidewin;

namespace {

OutputVec vals(std::initializer_list<long> xs) {
  OutputVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

SymbolSeq random_input(SplitMix64& rng, std::uint64_t n) {
  GenSpec spec;
  spec.kind = GenKind::uniform;
  spec.n = n;
  spec.seed = rng.next();
  return generate(spec);
}

}  // namespace

TEST_CASE("sliding max examples") {
  CostMeter m;
  const SymbolSeq a({3, 1, 4, 1, 5}, 5);
  CHECK(sliding_max(a, 3, m) == vals({4, 4, 5}));

  const SymbolSeq b({5, 4, 3, 2, 1, 1, 1}, 5);
  CHECK(sliding_max(b, 4, m) == vals({5, 4, 3, 2}));

  GenSpec spec;
  spec.kind = GenKind::all_equal;
  spec.n = 7;
  spec.symbol = 6;
  const SymbolSeq eq = generate(spec);
  CHECK(sliding_min(eq, 7, m) == vals({6, 6, 6, 6, 6, 6, 6}));
}

TEST_CASE("max and min match the rank oracle everywhere") {
  SplitMix64 rng(90210);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(160);
    const SymbolSeq x = random_input(rng, n);
    CostMeter m1, m2;
    REQUIRE(sliding_max(x, n, m1) == oracle_order(x, n, n));
    REQUIRE(sliding_min(x, n, m2) == oracle_order(x, n, 1));
  }
  // duplicate-heavy adversarial shape
  for (std::uint64_t n : {std::uint64_t{5}, std::uint64_t{33}}) {
    GenSpec spec;
    spec.kind = GenKind::sorting_reduction;
    spec.n = n;
    spec.payload = {2, 2, Symbol(n - 1)};
    const SymbolSeq x = generate(spec);
    CostMeter m;
    REQUIRE(sliding_max(x, n, m) == oracle_order(x, n, n));
    REQUIRE(sliding_min(x, n, m) == oracle_order(x, n, 1));
  }
}

TEST_CASE("comparison and space ceilings") {
  SplitMix64 rng(555555);
  for (const std::uint64_t n : {std::uint64_t{1} << 8, std::uint64_t{1} << 10,
                                std::uint64_t{1} << 12}) {
    const double log_n = std::log2(static_cast<double>(n));
    for (int trial = 0; trial < 10; ++trial) {
      const SymbolSeq x = random_input(rng, n);
      CostMeter m;
      OsStats stats;
      sliding_max(x, n, m, &stats);
      REQUIRE(static_cast<double>(m.comparisons()) <= 8.0 * static_cast<double>(n) * log_n);
      REQUIRE(m.aux_words_peak() <= static_cast<std::uint64_t>(32.0 * log_n));
      REQUIRE(stats.levels <= std::bit_width(n) + 2);
    }
  }
}

TEST_CASE("baseline selection equals the oracle at every rank") {
  CostMeter m;
  const SymbolSeq a({3, 1, 4, 1, 5}, 5);
  CHECK(sliding_order_baseline(a, 3, 2, m) == vals({3, 1, 4}));
  CHECK(sliding_order_baseline(a, 3, 1, m) == sliding_min(a, 3, m));
  CHECK(sliding_order_baseline(a, 3, 3, m) == sliding_max(a, 3, m));

  SplitMix64 rng(1999);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng.next_below(64);
    const SymbolSeq x = random_input(rng, n);
    const std::uint64_t rank = 1 + rng.next_below(n);
    CostMeter meter;
    REQUIRE(sliding_order_baseline(x, n, rank, meter) == oracle_order(x, n, rank));
  }
  CHECK_THROWS_AS(sliding_order_baseline(a, 3, 4, m), std::invalid_argument);
  CHECK_THROWS_AS(sliding_order_baseline(a, 3, 0, m), std::invalid_argument);
}

TEST_CASE("sorting reduction verifier on fixed payloads") {
  CostMeter m;
  CHECK(verify_sorting_reduction({4, 2, 3}, 5, 0, m).ok);
  CHECK(verify_sorting_reduction({9, 7, 4, 2}, 64, 0, m).ok);  // already descending
  CHECK(verify_sorting_reduction({5}, 8, 0, m).ok);            // single output
  CHECK_THROWS_AS(verify_sorting_reduction({1, 2}, 5, 0, m), std::invalid_argument);
  CHECK_THROWS_AS(verify_sorting_reduction({}, 5, 0, m), std::invalid_argument);
}

TEST_CASE("sorting reduction verifier on random payloads") {
  SplitMix64 rng(123123);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t n = 4 + rng.next_below(125);
    // the embedding is sound for |s| <= (n + 1) / 2
    const std::uint64_t t_rank = 1 + rng.next_below((n + 1) / 2);
    std::vector<Symbol> payload(t_rank);
    for (auto& v : payload) v = 2 + rng.next_below(n - 2);
    CostMeter m;
    const auto res = verify_sorting_reduction(payload, n, rng.next(), m);
    REQUIRE(res.ok);
  }
}

TEST_CASE("verifier reports the first mismatch outside the embedding domain") {
  // n = 4, |s| = 3 > (n + 1) / 2: window 3's payload suffix is {3, 3}, so
  // its 3rd smallest is 3 while the full payload's 3rd largest is 2
  CostMeter m;
  const auto res = verify_sorting_reduction({2, 3, 3}, 4, 0, m);
  CHECK_FALSE(res.ok);
  CHECK(res.first_mismatch == 2);
}

TEST_CASE("length validation") {
  const SymbolSeq x({1, 2, 3, 4}, 4);
  CostMeter m;
  CHECK_THROWS_AS(sliding_max(x, 3, m), std::invalid_argument);
  CHECK_THROWS_AS(sliding_min(x, 2, m), std::invalid_argument);
}
