// slidewin command-line harness: input generation, single instrumented runs,
// and grid sweeps producing CSV tradeoff data. Talks to the library strictly
// through the C API.
//
// Exit codes: 0 all trials verified (or nothing to verify), 1 verification
// failure or failed trial, 2 configuration error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slidewin.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- small parsing helpers -------------------------------------------------

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& s) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw ConfigError("not an unsigned integer: '" + s + "'");
  }
}

// "a,b,c" lists and "a..b" inclusive ranges
std::vector<std::uint64_t> parse_u64_list(const std::string& raw) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots != std::string::npos) {
      const std::uint64_t lo = parse_u64(trim(item.substr(0, dots)));
      const std::uint64_t hi = parse_u64(trim(item.substr(dots + 2)));
      if (hi < lo) throw ConfigError("empty range: '" + item + "'");
      for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_u64(item));
    }
  }
  return out;
}

std::vector<std::string> parse_name_list(const std::string& raw) {
  std::vector<std::string> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// ---- trial execution --------------------------------------------------------

struct GenParams {
  std::string kind = "uniform";
  std::uint64_t symbol = 0;
  std::uint64_t pos1 = 0, pos2 = 0;
  std::vector<std::uint64_t> payload;
};

struct TrialConfig {
  std::string algo;
  std::uint64_t k = 0;
  std::uint64_t rank = 1;
  std::uint64_t n = 0;
  std::uint64_t space_bits = 0;
  std::uint64_t seed = 0;
  GenParams gen;
  std::string solver = "sort";
  bool randomized = false;
  bool verify = false;
};

struct TrialRow {
  TrialConfig cfg;
  std::uint64_t reads = 0, comparisons = 0, peak_aux_words = 0, wall_ns = 0;
  int verified = -1;  // -1 not checked
  bool errored = false;
  std::string note;
};

bool algo_takes_budget(const std::string& algo) { return algo == "fk" || algo == "f0mod2"; }

slidewin_seq* make_sequence(const TrialConfig& cfg) {
  slidewin_gen_spec gs{};
  gs.kind = cfg.gen.kind.c_str();
  gs.n = cfg.n;
  gs.seed = cfg.seed;
  gs.symbol = cfg.gen.symbol;
  gs.dup_pos1 = cfg.gen.pos1;
  gs.dup_pos2 = cfg.gen.pos2;
  if (!cfg.gen.payload.empty()) {
    gs.payload = cfg.gen.payload.data();
    gs.payload_len = cfg.gen.payload.size();
  }
  slidewin_seq* seq = nullptr;
  if (slidewin_generate(&gs, &seq) != SLIDEWIN_OK)
    throw ConfigError("generator '" + cfg.gen.kind + "': " + slidewin_last_error());
  return seq;
}

TrialRow run_trial(const TrialConfig& cfg, slidewin_seq* seq) {
  TrialRow row;
  row.cfg = cfg;

  slidewin_run_spec rs{};
  rs.algo = cfg.algo.c_str();
  rs.n = cfg.n;
  rs.k = cfg.k;
  rs.rank = cfg.rank;
  rs.space_bits = cfg.space_bits;
  rs.solver = cfg.solver.c_str();
  rs.randomized = cfg.randomized ? 1 : 0;
  rs.verify = cfg.verify ? 1 : 0;

  slidewin_result* res = nullptr;
  const slidewin_status st = slidewin_run(seq, &rs, &res);
  if (st == SLIDEWIN_ERR_INVALID_ARGUMENT)
    throw ConfigError(std::string(slidewin_last_error()));
  if (st != SLIDEWIN_OK) {
    row.errored = true;
    row.verified = cfg.verify ? 0 : -1;
    row.note = std::string(slidewin_status_name(st)) + ": " + slidewin_last_error();
    return row;
  }
  row.reads = slidewin_result_reads(res);
  row.comparisons = slidewin_result_comparisons(res);
  row.peak_aux_words = slidewin_result_peak_aux_words(res);
  row.wall_ns = slidewin_result_wall_ns(res);
  row.verified = slidewin_result_verified(res);
  if (row.verified == 0) row.note = "output does not match the oracle";
  slidewin_result_free(res);
  return row;
}

// ---- CSV -------------------------------------------------------------------

const char* kCsvHeader =
    "algo,k,rank,n,space_bits,seed,gen,reads,comparisons,peak_aux_words,wall_ns,verified,note";

std::string verified_str(int verified) {
  if (verified < 0) return "na";
  return verified ? "true" : "false";
}

void write_csv_row(std::ostream& out, const TrialRow& r) {
  out << r.cfg.algo << ',' << (r.cfg.algo == "fk" ? std::to_string(r.cfg.k) : "") << ','
      << (r.cfg.algo == "order" ? std::to_string(r.cfg.rank) : "") << ',' << r.cfg.n << ','
      << (algo_takes_budget(r.cfg.algo) ? std::to_string(r.cfg.space_bits) : "") << ','
      << r.cfg.seed << ',' << r.cfg.gen.kind << ',' << r.reads << ',' << r.comparisons << ','
      << r.peak_aux_words << ',' << r.wall_ns << ',' << verified_str(r.verified) << ','
      << csv_escape(r.note) << '\n';
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    out_.open(path, std::ios::app);
    if (!out_) throw ConfigError("cannot open CSV output: " + path);
    if (fresh) out_ << kCsvHeader << '\n';
  }
  void add(const TrialRow& r) { write_csv_row(out_, r); }

 private:
  std::ofstream out_;
};

void print_row(const TrialRow& r) {
  std::cout << "algo=" << r.cfg.algo;
  if (r.cfg.algo == "fk") std::cout << " k=" << r.cfg.k;
  if (r.cfg.algo == "order") std::cout << " rank=" << r.cfg.rank;
  std::cout << " n=" << r.cfg.n;
  if (algo_takes_budget(r.cfg.algo) && r.cfg.space_bits > 0)
    std::cout << " space_bits=" << r.cfg.space_bits;
  std::cout << " seed=" << r.cfg.seed << " gen=" << r.cfg.gen.kind << " reads=" << r.reads
            << " comparisons=" << r.comparisons << " peak_aux_words=" << r.peak_aux_words
            << " wall_ns=" << r.wall_ns << " verified=" << verified_str(r.verified);
  if (!r.note.empty()) std::cout << " note=\"" << r.note << "\"";
  std::cout << '\n';
}

// ---- sweep ------------------------------------------------------------------

struct SweepConfig {
  std::vector<std::string> algos;
  std::vector<std::uint64_t> ks{0};
  std::vector<std::uint64_t> ranks{1};
  std::vector<std::uint64_t> ns;
  std::vector<std::uint64_t> space_bits;  // empty = unbudgeted
  std::vector<std::string> gens{"uniform"};
  std::vector<std::uint64_t> seeds{1};
  std::string solver = "sort";
  bool randomized = false;
  std::string verify = "auto";  // auto | on | off
  std::string csv_path;
};

SweepConfig parse_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  SweepConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "algo") cfg.algos = parse_name_list(value);
    else if (key == "k") cfg.ks = parse_u64_list(value);
    else if (key == "rank") cfg.ranks = parse_u64_list(value);
    else if (key == "n") cfg.ns = parse_u64_list(value);
    else if (key == "space_bits") cfg.space_bits = parse_u64_list(value);
    else if (key == "gen") cfg.gens = parse_name_list(value);
    else if (key == "seeds") cfg.seeds = parse_u64_list(value);
    else if (key == "solver") cfg.solver = value;
    else if (key == "randomized") cfg.randomized = (value == "true" || value == "1");
    else if (key == "verify") cfg.verify = value;
    else if (key == "csv") cfg.csv_path = value;
    else throw ConfigError("unknown config key: '" + key + "'");
  }
  if (cfg.verify != "auto" && cfg.verify != "on" && cfg.verify != "off")
    throw ConfigError("verify must be auto, on or off");
  if (cfg.algos.empty() || cfg.ns.empty() || cfg.gens.empty() || cfg.seeds.empty() ||
      cfg.ks.empty() || cfg.ranks.empty())
    throw ConfigError("empty sweep grid");
  if (cfg.csv_path.empty()) throw ConfigError("config must name a csv output path");
  return cfg;
}

// oracle verification is the default up to this size; above it the oracle
// dominates the run time
constexpr std::uint64_t kVerifyAutoLimit = 4096;

struct SweepSummaryKey {
  std::string algo;
  std::uint64_t k, rank, n;
  std::string gen;
  bool operator<(const SweepSummaryKey& o) const {
    return std::tie(algo, k, rank, n, gen) < std::tie(o.algo, o.k, o.rank, o.n, o.gen);
  }
};

int cmd_sweep(const std::string& config_path, bool allow_errors) {
  const SweepConfig cfg = parse_sweep_config(config_path);
  CsvWriter csv(cfg.csv_path);

  std::uint64_t trials = 0, verified = 0, failed = 0, errored = 0;
  // (summary key, space_bits) -> [sum cost, count]
  std::map<SweepSummaryKey, std::map<std::uint64_t, std::pair<double, std::uint64_t>>> cells;

  for (const std::string& algo : cfg.algos) {
    const std::vector<std::uint64_t> ks = algo == "fk" ? cfg.ks : std::vector<std::uint64_t>{0};
    const std::vector<std::uint64_t> ranks =
        algo == "order" ? cfg.ranks : std::vector<std::uint64_t>{1};
    std::vector<std::uint64_t> budgets{0};
    if (algo_takes_budget(algo) && !cfg.space_bits.empty()) budgets = cfg.space_bits;

    for (const std::uint64_t k : ks)
      for (const std::uint64_t rank : ranks)
        for (const std::uint64_t n : cfg.ns)
          for (const std::string& gen : cfg.gens)
            for (const std::uint64_t bits : budgets)
              for (const std::uint64_t seed : cfg.seeds) {
                TrialConfig tc;
                tc.algo = algo;
                tc.k = k;
                tc.rank = rank;
                tc.n = n;
                tc.space_bits = bits;
                tc.seed = seed;
                tc.gen.kind = gen;
                if (gen == "planted_duplicate" || gen == "planted-duplicate") {
                  tc.gen.pos1 = 1;
                  tc.gen.pos2 = n + 1;
                }
                if (gen == "sorting_reduction" || gen == "sorting-reduction")
                  throw ConfigError("sorting_reduction needs a per-instance payload; "
                                    "use the run command");
                tc.solver = cfg.solver;
                tc.randomized = cfg.randomized;
                tc.verify = cfg.verify == "on" || (cfg.verify == "auto" && n <= kVerifyAutoLimit);

                slidewin_seq* seq = make_sequence(tc);
                TrialRow row = run_trial(tc, seq);
                slidewin_seq_free(seq);
                csv.add(row);
                ++trials;
                if (row.errored) ++errored;
                else if (row.verified == 1) ++verified;
                else if (row.verified == 0) ++failed;

                if (!row.errored && algo_takes_budget(algo) && bits > 0) {
                  auto& cell = cells[{algo, k, rank, n, gen}][bits];
                  cell.first += static_cast<double>(row.reads + row.comparisons);
                  cell.second += 1;
                }
              }
  }

  std::cout << "sweep: " << trials << " trials, " << verified << " verified, " << failed
            << " mismatched, " << errored << " errored -> " << cfg.csv_path << '\n';

  for (const auto& [key, by_bits] : cells) {
    if (by_bits.size() < 2) continue;
    bool monotone = true;
    double prev = -1.0;
    double norm_min = 0.0, norm_max = 0.0;
    bool first = true;
    const double log_n = std::log2(static_cast<double>(key.n));
    const double denom =
        static_cast<double>(key.n) * static_cast<double>(key.n) * log_n * log_n;
    for (const auto& [bits, cell] : by_bits) {  // ascending space
      const double mean_cost = cell.first / static_cast<double>(cell.second);
      if (prev >= 0 && mean_cost > prev) monotone = false;
      prev = mean_cost;
      const double norm = mean_cost * static_cast<double>(bits) / denom;
      norm_min = first ? norm : std::min(norm_min, norm);
      norm_max = first ? norm : std::max(norm_max, norm);
      first = false;
    }
    std::cout << "  " << key.algo;
    if (key.algo == "fk") std::cout << " k=" << key.k;
    std::cout << " n=" << key.n << " gen=" << key.gen
              << ": cost nonincreasing in space: " << (monotone ? "yes" : "NO")
              << "; normalized cost*S/(n^2 log2^2 n): min " << norm_min << " max " << norm_max
              << " (ratio " << (norm_min > 0 ? norm_max / norm_min : 0.0) << ")\n";
  }

  if ((failed > 0 || errored > 0) && !allow_errors) return kExitVerifyFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sliding-window statistics under explicit space budgets"};
  app.set_version_flag("--version", slidewin_version());
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate an input sequence file");
  GenParams gen_params;
  std::uint64_t gen_n = 0, gen_seed = 0;
  std::string gen_out;
  std::vector<std::uint64_t> gen_positions;
  gen->add_option("--kind", gen_params.kind,
                  "uniform | all_equal | all_distinct | planted_duplicate | sorting_reduction")
      ->required();
  gen->add_option("--n", gen_n, "window length (sequence length is 2n-1)")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--symbol", gen_params.symbol, "all_equal: the repeated symbol");
  gen->add_option("--positions", gen_positions, "planted_duplicate: two 1-based positions")
      ->delimiter(',')
      ->expected(0, 2);
  gen->add_option("--payload", gen_params.payload, "sorting_reduction: values in {2..n-1}")
      ->delimiter(',');
  gen->add_option("--out", gen_out, "output path")->required();

  // ---- run ----
  auto* run = app.add_subcommand("run", "run one instrumented trial");
  TrialConfig rc;
  std::string run_in;
  std::string run_csv;
  std::vector<std::uint64_t> run_positions;
  bool run_verify = false;
  run->add_option("--algo", rc.algo, "fk | f0mod2 | ed-avg | ed-reduce | max | min | order")
      ->required();
  run->add_option("--k", rc.k, "fk: moment exponent");
  run->add_option("--rank", rc.rank, "order: rank in [1, n]");
  run->add_option("--n", rc.n, "window length")->required();
  run->add_option("--space-bits", rc.space_bits, "space budget in bits (fk/f0mod2)");
  run->add_option("--gen", rc.gen.kind, "input generator kind");
  run->add_option("--seed", rc.seed, "generator seed");
  run->add_option("--symbol", rc.gen.symbol, "all_equal symbol");
  run->add_option("--positions", run_positions, "planted_duplicate positions")
      ->delimiter(',')
      ->expected(0, 2);
  run->add_option("--payload", rc.gen.payload, "sorting_reduction payload")->delimiter(',');
  run->add_option("--in", run_in, "read the input from a sequence file instead of --gen");
  run->add_option("--solver", rc.solver, "ed-reduce: sort | hash");
  run->add_flag("--randomized", rc.randomized, "ed-reduce: majority-voted solver probes");
  run->add_flag("--verify", run_verify, "check the outputs against the brute-force oracle");
  run->add_option("--csv", run_csv, "append the trial record to this CSV file");

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "run a grid of trials from a config file");
  std::string sweep_config;
  bool allow_errors = false;
  sweep->add_option("--config", sweep_config, "flat key=value grid description")->required();
  sweep->add_flag("--allow-errors", allow_errors, "exit 0 even if trials fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (gen->parsed()) {
      if (gen_positions.size() == 2) {
        gen_params.pos1 = gen_positions[0];
        gen_params.pos2 = gen_positions[1];
      } else if (!gen_positions.empty()) {
        throw ConfigError("--positions takes exactly two values");
      }
      slidewin_gen_spec gs{};
      gs.kind = gen_params.kind.c_str();
      gs.n = gen_n;
      gs.seed = gen_seed;
      gs.symbol = gen_params.symbol;
      gs.dup_pos1 = gen_params.pos1;
      gs.dup_pos2 = gen_params.pos2;
      if (!gen_params.payload.empty()) {
        gs.payload = gen_params.payload.data();
        gs.payload_len = gen_params.payload.size();
      }
      slidewin_seq* seq = nullptr;
      if (slidewin_generate(&gs, &seq) != SLIDEWIN_OK)
        throw ConfigError(std::string(slidewin_last_error()));
      if (slidewin_seq_save(seq, gen_out.c_str()) != SLIDEWIN_OK) {
        slidewin_seq_free(seq);
        throw ConfigError(std::string(slidewin_last_error()));
      }
      std::cout << "wrote " << gen_out << ": kind=" << gen_params.kind << " n=" << gen_n
                << " length=" << slidewin_seq_length(seq)
                << " alphabet=" << slidewin_seq_alphabet_size(seq) << " seed=" << gen_seed << '\n';
      slidewin_seq_free(seq);
      return kExitOk;
    }

    if (run->parsed()) {
      if (run_positions.size() == 2) {
        rc.gen.pos1 = run_positions[0];
        rc.gen.pos2 = run_positions[1];
      } else if (!run_positions.empty()) {
        throw ConfigError("--positions takes exactly two values");
      }
      rc.verify = run_verify;
      if (!run_in.empty() && run->count("--gen") > 0)
        throw ConfigError("give either --in or --gen, not both");
      if (run_in.empty() && run->count("--gen") == 0)
        throw ConfigError("an input is required: --gen KIND or --in FILE");

      slidewin_seq* seq = nullptr;
      if (!run_in.empty()) {
        if (slidewin_seq_load(run_in.c_str(), &seq) != SLIDEWIN_OK)
          throw ConfigError(std::string(slidewin_last_error()));
      } else {
        seq = make_sequence(rc);
      }
      TrialRow row = run_trial(rc, seq);
      slidewin_seq_free(seq);
      print_row(row);
      if (!run_csv.empty()) {
        CsvWriter csv(run_csv);
        csv.add(row);
      }
      if (row.errored || row.verified == 0) return kExitVerifyFailure;
      return kExitOk;
    }

    if (sweep->parsed()) return cmd_sweep(sweep_config, allow_errors);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}
