#include "slidewin/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidewin {
namespace {

void check_window_length(const SymbolSeq& x, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
  if (x.size() < n)
    throw std::invalid_argument("oracle: input length " + std::to_string(x.size()) +
                                " shorter than window length " + std::to_string(n));
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

}  // namespace

OutputVec oracle_fk(const SymbolSeq& x, std::uint64_t n, std::uint64_t k) {
  check_window_length(x, n);
  const std::size_t t = x.size() - n + 1;
  OutputVec out;
  out.reserve(t);
  std::vector<Symbol> window(n);
  for (std::size_t i = 0; i < t; ++i) {
    std::copy(x.data().begin() + i, x.data().begin() + i + n, window.begin());
    std::sort(window.begin(), window.end());
    Value sum = 0;
    std::size_t run = 0;
    while (run < window.size()) {
      std::size_t end = run + 1;
      while (end < window.size() && window[end] == window[run]) ++end;
      sum += int_pow(end - run, k);
      run = end;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

OutputVec oracle_ed(const SymbolSeq& x, std::uint64_t n) {
  check_window_length(x, n);
  const std::size_t t = x.size() - n + 1;
  OutputVec out;
  out.reserve(t);
  std::vector<Symbol> window(n);
  for (std::size_t i = 0; i < t; ++i) {
    std::copy(x.data().begin() + i, x.data().begin() + i + n, window.begin());
    std::sort(window.begin(), window.end());
    bool distinct = true;
    for (std::size_t j = 1; j < window.size(); ++j) {
      if (window[j] == window[j - 1]) {
        distinct = false;
        break;
      }
    }
    out.emplace_back(distinct ? 1 : 0);
  }
  return out;
}

OutputVec oracle_order(const SymbolSeq& x, std::uint64_t n, std::uint64_t t_rank) {
  check_window_length(x, n);
  if (t_rank < 1 || t_rank > n)
    throw std::invalid_argument("oracle_order: rank " + std::to_string(t_rank) +
                                " outside [1, " + std::to_string(n) + "]");
  const std::size_t t = x.size() - n + 1;
  OutputVec out;
  out.reserve(t);
  std::vector<Symbol> window(n);
  for (std::size_t i = 0; i < t; ++i) {
    std::copy(x.data().begin() + i, x.data().begin() + i + n, window.begin());
    std::sort(window.begin(), window.end());
    out.emplace_back(window[t_rank - 1]);
  }
  return out;
}

OutputVec oracle_f0_mod2(const SymbolSeq& x, std::uint64_t n) {
  OutputVec f0 = oracle_fk(x, n, 0);
  for (auto& v : f0) v &= 1;
  return f0;
}

}  // namespace slidewin
