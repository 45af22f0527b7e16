#include "slidewin.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <exception>
#include <limits>
#include <string>

#include "slidewin/edwin.hpp"
#include "slidewin/fkwin.hpp"
#include "slidewin/generate.hpp"
#include "slidewin/meter.hpp"
#include "slidewin/oracle.hpp"
#include "slidewin/oswin.hpp"
#include "slidewin/seq_file.hpp"
#include "slidewin/symbol_seq.hpp"

using namespace slidewin;

struct slidewin_seq {
  SymbolSeq seq;
};

struct slidewin_result {
  OutputVec outputs;
  std::uint64_t reads = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t peak_aux_words = 0;
  std::uint64_t wall_ns = 0;
  int verified = -1;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

slidewin_status fail(slidewin_status status, const std::string& msg) {
  set_error(msg);
  return status;
}

slidewin_status translate_exception() {
  try {
    throw;
  } catch (const BudgetViolation& e) {
    return fail(SLIDEWIN_ERR_BUDGET, e.what());
  } catch (const SeqParseError& e) {
    return fail(SLIDEWIN_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(SLIDEWIN_ERR_IO, e.what());
  } catch (const std::runtime_error& e) {
    // file-level failures surface as runtime_error from the save/load path
    const std::string what = e.what();
    if (what.find("save_seq") != std::string::npos || what.find("load_seq") != std::string::npos)
      return fail(SLIDEWIN_ERR_IO, what);
    return fail(SLIDEWIN_ERR_INTERNAL, what);
  } catch (const std::exception& e) {
    return fail(SLIDEWIN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SLIDEWIN_ERR_INTERNAL, "unknown error");
  }
}

std::string normalized(const char* s) {
  std::string out(s ? s : "");
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

}  // namespace

extern "C" {

const char* slidewin_version(void) { return "1.0.0"; }

const char* slidewin_status_name(slidewin_status status) {
  switch (status) {
    case SLIDEWIN_OK: return "ok";
    case SLIDEWIN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SLIDEWIN_ERR_IO: return "io_error";
    case SLIDEWIN_ERR_PARSE: return "parse_error";
    case SLIDEWIN_ERR_BUDGET: return "budget_violation";
    case SLIDEWIN_ERR_VERIFY: return "verification_failed";
    case SLIDEWIN_ERR_VALUE_OVERFLOW: return "value_overflow";
    case SLIDEWIN_ERR_INTERNAL: return "internal_error";
  }
  return "?";
}

const char* slidewin_last_error(void) { return g_last_error.c_str(); }

slidewin_status slidewin_generate(const slidewin_gen_spec* spec, slidewin_seq** out) {
  if (!spec || !out) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "null argument");
  try {
    GenSpec gs;
    gs.kind = gen_kind_from_name(spec->kind ? spec->kind : "");
    gs.n = spec->n;
    gs.seed = spec->seed;
    gs.symbol = spec->symbol == 0 ? 1 : spec->symbol;
    gs.dup_pos1 = spec->dup_pos1;
    gs.dup_pos2 = spec->dup_pos2;
    if (spec->payload && spec->payload_len > 0)
      gs.payload.assign(spec->payload, spec->payload + spec->payload_len);
    *out = new slidewin_seq{generate(gs)};
    return SLIDEWIN_OK;
  } catch (...) {
    return translate_exception();
  }
}

slidewin_status slidewin_seq_load(const char* path, slidewin_seq** out) {
  if (!path || !out) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "null argument");
  try {
    *out = new slidewin_seq{load_seq(path)};
    return SLIDEWIN_OK;
  } catch (...) {
    return translate_exception();
  }
}

slidewin_status slidewin_seq_save(const slidewin_seq* seq, const char* path) {
  if (!seq || !path) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "null argument");
  try {
    save_seq(seq->seq, path);
    return SLIDEWIN_OK;
  } catch (...) {
    return translate_exception();
  }
}

uint64_t slidewin_seq_length(const slidewin_seq* seq) { return seq ? seq->seq.size() : 0; }

uint64_t slidewin_seq_alphabet_size(const slidewin_seq* seq) {
  return seq ? seq->seq.alphabet_size() : 0;
}

slidewin_status slidewin_seq_symbol(const slidewin_seq* seq, uint64_t index, uint64_t* out) {
  if (!seq || !out) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= seq->seq.size()) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "index out of range");
  *out = seq->seq[index];
  return SLIDEWIN_OK;
}

void slidewin_seq_free(slidewin_seq* seq) { delete seq; }

slidewin_status slidewin_run(const slidewin_seq* seq, const slidewin_run_spec* spec,
                             slidewin_result** out) {
  if (!seq || !spec || !out) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "null argument");
  try {
    const SymbolSeq& x = seq->seq;
    const std::string algo = normalized(spec->algo);
    const std::uint64_t n = spec->n;
    const bool budgeted = spec->space_bits > 0;
    if (budgeted && algo != "fk" && algo != "f0mod2")
      throw std::invalid_argument("space budget only applies to fk / f0mod2, not " + algo);

    SpaceBudget budget;
    if (budgeted)
      budget = SpaceBudget::from_bits(spec->space_bits,
                                      SpaceBudget::word_bits_for(n, x.alphabet_size()));

    CostMeter meter;
    OutputVec result;
    const auto t0 = std::chrono::steady_clock::now();

    if (algo == "fk") {
      result = sliding_fk(x, n, spec->k, budgeted ? &budget : nullptr, meter);
    } else if (algo == "f0mod2") {
      result = sliding_f0_mod2(x, n, budgeted ? &budget : nullptr, meter);
    } else if (algo == "ed-avg") {
      result = avg_case_ed_sliding(x, n, meter);
    } else if (algo == "ed-reduce") {
      const std::string solver_name = spec->solver ? normalized(spec->solver) : "sort";
      std::unique_ptr<EdSolver> solver;
      if (solver_name == "sort") solver = make_sort_ed_solver();
      else if (solver_name == "hash") solver = make_hash_ed_solver();
      else throw std::invalid_argument("unknown ed solver: " + solver_name);
      EdReduceOptions opts;
      opts.randomized = spec->randomized != 0;
      result = ed_sliding_via_reduction(x, n, *solver, meter, &opts);
    } else if (algo == "max") {
      result = sliding_max(x, n, meter);
    } else if (algo == "min") {
      result = sliding_min(x, n, meter);
    } else if (algo == "order") {
      if (x.size() != 2 * n - 1)
        throw std::invalid_argument("order: input length " + std::to_string(x.size()) +
                                    " != 2n - 1 = " + std::to_string(2 * n - 1));
      result = sliding_order_baseline(x, n, spec->rank, meter);
    } else {
      throw std::invalid_argument("unknown algorithm: " + algo);
    }

    const auto t1 = std::chrono::steady_clock::now();
    meter.add_wall_ns(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));

    auto res = std::make_unique<slidewin_result>();
    res->reads = meter.input_reads();
    res->comparisons = meter.comparisons();
    res->peak_aux_words = meter.aux_words_peak();
    res->wall_ns = meter.wall_ns();

    if (spec->verify) {
      OutputVec expected;
      if (algo == "fk") expected = oracle_fk(x, n, spec->k);
      else if (algo == "f0mod2") expected = oracle_f0_mod2(x, n);
      else if (algo == "ed-avg" || algo == "ed-reduce") expected = oracle_ed(x, n);
      else if (algo == "max") expected = oracle_order(x, n, n);
      else if (algo == "min") expected = oracle_order(x, n, 1);
      else expected = oracle_order(x, n, spec->rank);
      res->verified = (result == expected) ? 1 : 0;
      if (res->verified == 0) set_error("output does not match the oracle");
    }

    res->outputs = std::move(result);
    *out = res.release();
    return SLIDEWIN_OK;
  } catch (...) {
    return translate_exception();
  }
}

uint64_t slidewin_result_reads(const slidewin_result* r) { return r ? r->reads : 0; }
uint64_t slidewin_result_comparisons(const slidewin_result* r) { return r ? r->comparisons : 0; }
uint64_t slidewin_result_peak_aux_words(const slidewin_result* r) {
  return r ? r->peak_aux_words : 0;
}
uint64_t slidewin_result_wall_ns(const slidewin_result* r) { return r ? r->wall_ns : 0; }
int slidewin_result_verified(const slidewin_result* r) { return r ? r->verified : -1; }
uint64_t slidewin_result_output_count(const slidewin_result* r) {
  return r ? r->outputs.size() : 0;
}

slidewin_status slidewin_result_output_u64(const slidewin_result* r, uint64_t index,
                                           uint64_t* out) {
  if (!r || !out) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= r->outputs.size()) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "index out of range");
  const Value& v = r->outputs[index];
  static const Value kMax = Value(std::numeric_limits<std::uint64_t>::max());
  if (v < 0 || v > kMax)
    return fail(SLIDEWIN_ERR_VALUE_OVERFLOW, "output does not fit in 64 bits");
  *out = v.convert_to<std::uint64_t>();
  return SLIDEWIN_OK;
}

slidewin_status slidewin_result_output_str(const slidewin_result* r, uint64_t index, char* buf,
                                           size_t buf_len, size_t* needed) {
  if (!r) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= r->outputs.size()) return fail(SLIDEWIN_ERR_INVALID_ARGUMENT, "index out of range");
  const std::string s = r->outputs[index].str();
  if (needed) *needed = s.size() + 1;
  if (buf && buf_len > 0) {
    const size_t copy = std::min(buf_len - 1, s.size());
    std::memcpy(buf, s.data(), copy);
    buf[copy] = '\0';
  }
  return SLIDEWIN_OK;
}

void slidewin_result_free(slidewin_result* r) { delete r; }

uint32_t slidewin_word_bits(uint64_t n, uint64_t alphabet_size) {
  return SpaceBudget::word_bits_for(n, alphabet_size);
}

}  // extern "C"
