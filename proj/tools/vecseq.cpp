#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vecseq/construction.hpp"
#include "vecseq/io.hpp"
#include "vecseq/search.hpp"
#include "vecseq/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitBudget = 4;

using namespace vecseq;

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "jsonl") return Format::Jsonl;
  throw std::invalid_argument("unknown format: " + s);
}

int env_threads() {
  if (const char* s = std::getenv("VECSEQ_THREADS")) return std::atoi(s);
  return 0;
}

struct GenerateArgs {
  int dim = 0;
  std::string from = "0";
  std::string count;
  std::string format = "csv";
  std::string output;
  bool allow_huge = false;
  std::uint64_t cell_budget = kDefaultCellBudget;
};

int run_generate(const GenerateArgs& a) {
  const ConstructionSpec spec = make_spec(a.dim);
  const Big from(a.from);
  const Big count(a.count);
  if (from < 0 || count < 0 || from + count > spec.length()) {
    std::cerr << "generate: range [" << from << ", " << from + count
              << ") out of bounds for length " << spec.length() << "\n";
    return kExitUsage;
  }
  if (count * a.dim > a.cell_budget && !a.allow_huge) {
    std::cerr << "generate: " << count * a.dim
              << " cells exceed the budget; pass --allow-huge to stream anyway\n";
    return kExitRefused;
  }
  const Format fmt = parse_format(a.format);
  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw std::invalid_argument("cannot open output: " + a.output);
  }
  std::ostream& os = a.output.empty() ? std::cout : file;
  stream(spec, from, count, [&](const Vec& v) { write_vector(os, v, fmt); });
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  int dim = 0;
  std::string mode = "full";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool cyclic = false;
  int threads = 0;
  std::uint64_t pair_budget = kDefaultPairBudget;
  std::uint64_t cell_budget = kDefaultCellBudget;
};

int report(const std::optional<Violation>& v, bool& failed) {
  if (v) {
    std::cout << v->str() << "\n";
    failed = true;
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  if (a.mode != "full" && a.mode != "sampled")
    throw std::invalid_argument("mode must be full or sampled");
  const int threads = a.threads > 0 ? a.threads : env_threads();
  bool failed = false;

  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw ParseError("cannot open file: " + a.file);
    const VecSeq seq = read_sequence(in);
    report(check_valid(seq), failed);
    if (a.cyclic) report(check_cyclic(seq), failed);
    if (a.mode == "full") {
      report(check_non_dominating_full(seq, a.pair_budget, threads), failed);
    } else {
      const auto rep = check_non_dominating_sampled(
          [&seq](const Big& k) { return seq[static_cast<std::size_t>(k)]; },
          Big(seq.length()), a.samples, a.seed);
      std::cout << "pairs_checked " << rep.pairs_checked << " seed " << rep.seed
                << "\n";
      for (const auto& v : rep.violations) {
        std::cout << v.str() << "\n";
        failed = true;
      }
    }
    return failed ? kExitViolation : kExitOk;
  }

  const ConstructionSpec spec = make_spec(a.dim);
  report(check_cyclic_streaming(spec), failed);
  if (a.mode == "full") {
    const VecSeq seq = materialize(spec, a.cell_budget);
    report(check_non_dominating_full(seq, a.pair_budget, threads), failed);
  } else {
    if (!a.seed_given)
      throw std::invalid_argument("sampled mode requires --seed");
    const auto rep = check_non_dominating_sampled(spec, a.samples, a.seed);
    std::cout << "pairs_checked " << rep.pairs_checked << " seed " << rep.seed
              << "\n";
    for (const auto& v : rep.violations) {
      std::cout << v.str() << "\n";
      failed = true;
    }
  }
  return failed ? kExitViolation : kExitOk;
}

struct SearchArgs {
  int dim = 0;
  bool cyclic = false;
  std::uint64_t length_budget = 10;
  std::uint64_t node_budget = 50'000'000;
  bool symmetry_break = false;
};

int run_search(const SearchArgs& a) {
  SearchOptions opts;
  opts.length_budget = a.length_budget;
  opts.node_budget = a.node_budget;
  opts.symmetry_break = a.symmetry_break;
  const SearchResult r =
      a.cyclic ? max_cyclic_length(a.dim, opts) : max_valid_length(a.dim, opts);
  std::cout << "max_length " << r.max_length << "\n"
            << "nodes_explored " << r.nodes_explored << "\n"
            << "cap_used " << r.cap_used << "\n"
            << "exact " << (r.exact ? "true" : "false") << "\n";
  for (const Vec& v : r.witness.vectors) write_vector(std::cout, v, Format::Csv);
  if (!r.exact) {
    std::cerr << "search: budget exhausted; max_length is a lower bound only\n";
    return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generator/verifier for non-dominating reset/increment vector sequences"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Stream vectors of construct(dim)");
  g->add_option("--dim", gen.dim, "Dimension (>= 2)")->required();
  g->add_option("--from", gen.from, "Start index (decimal)");
  g->add_option("--count", gen.count, "Number of vectors")->required();
  g->add_option("--format", gen.format, "csv or jsonl");
  g->add_option("--output", gen.output, "Output file (default stdout)");
  g->add_flag("--allow-huge", gen.allow_huge, "Stream past the cell budget");
  g->add_option("--cell-budget", gen.cell_budget, "Cell budget");

  struct {
    int dim = 0;
    std::string at;
    std::string format = "csv";
  } idx;
  auto* ix = app.add_subcommand("index", "Random access into construct(dim)");
  ix->add_option("--dim", idx.dim)->required();
  ix->add_option("--at", idx.at, "Index (decimal)")->required();
  ix->add_option("--format", idx.format, "csv or jsonl");

  struct {
    int dim = 0;
    int table = 0;
  } len;
  auto* ln = app.add_subcommand("length", "Exact length and closed-form bound");
  ln->add_option("--dim", len.dim);
  ln->add_option("--table", len.table, "Print one row per dimension 2..N");

  VerifyArgs ver;
  auto* vf = app.add_subcommand("verify", "Check a sequence file or construct(dim)");
  vf->add_option("--file", ver.file, "csv/jsonl sequence file");
  vf->add_option("--dim", ver.dim, "Verify construct(dim)");
  vf->add_option("--mode", ver.mode, "full or sampled");
  vf->add_option("--samples", ver.samples, "Sampled pairs");
  vf->add_option("--seed", ver.seed, "Sampling seed")
      ->each([&](const std::string&) { ver.seed_given = true; });
  vf->add_flag("--cyclic", ver.cyclic, "Also require cyclicity (file input)");
  vf->add_option("--threads", ver.threads, "Worker threads (0 = all cores)");
  vf->add_option("--pair-budget", ver.pair_budget, "Full-scan comparison budget");
  vf->add_option("--cell-budget", ver.cell_budget, "Materialization budget");

  SearchArgs sr;
  auto* sc = app.add_subcommand("search", "Exhaustive maximal-length search");
  sc->add_option("--dim", sr.dim, "Dimension (1..3)")->required();
  sc->add_flag("--cyclic", sr.cyclic, "Search cyclic sequences");
  sc->add_option("--budget", sr.length_budget, "Length budget");
  sc->add_option("--nodes", sr.node_budget, "Node budget");
  sc->add_flag("--symmetry-break", sr.symmetry_break,
               "Explore only sorted start vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (g->parsed()) return run_generate(gen);
    if (ix->parsed()) {
      const ConstructionSpec spec = make_spec(idx.dim);
      const Vec v = index_at(spec, Big(idx.at));
      write_vector(std::cout, v, parse_format(idx.format));
      return kExitOk;
    }
    if (ln->parsed()) {
      if (len.table >= 2) {
        for (int d = 2; d <= len.table; ++d)
          std::cout << d << " " << length_of(d) << " " << closed_form_bound(d)
                    << "\n";
        return kExitOk;
      }
      std::cout << length_of(len.dim) << " " << closed_form_bound(len.dim)
                << "\n";
      return kExitOk;
    }
    if (vf->parsed()) {
      if (ver.file.empty() == (ver.dim == 0))
        throw std::invalid_argument("verify needs exactly one of --file, --dim");
      return run_verify(ver);
    }
    if (sc->parsed()) return run_search(sr);
  } catch (const MaterializeRefused& e) {
    std::cerr << e.what() << "\n";
    return kExitRefused;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
