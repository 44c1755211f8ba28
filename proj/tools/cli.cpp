#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "laman/certificate.hpp"
#include "laman/corpus.hpp"
#include "laman/oracles.hpp"
#include "laman/pipeline.hpp"

namespace laman::cli {

namespace {

namespace fs = std::filesystem;

const char* verdict_name(Verdict v) { return v == Verdict::laman ? "Laman" : "NotLaman"; }

std::optional<unsigned> env_threads() {
  const char* env = std::getenv("LAMAN_THREADS");
  if (!env) return std::nullopt;
  unsigned value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return std::nullopt;
  return value;
}

template <typename Fn>
void parallel_for(std::size_t jobs, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs; i = next++) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

struct VerifyFlags {
  std::string path;
  bool dir = false;
  std::string certificate;
  std::string dot;
  bool trace = false;
  std::string oracle;
  std::uint64_t seed = 0;
};

struct Outcome {
  int code = kLaman;
  std::string out;
  std::string err;
};

Outcome verify_one(const std::string& path, const VerifyFlags& flags) {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  Graph g;
  try {
    g = read_graph_file(path);
  } catch (const std::exception& e) {
    o.code = kInputError;
    o.err = path + ": " + e.what() + "\n";
    return o;
  }
  if (flags.oracle == "brute" && g.vertex_count() > kBruteForceLimit) {
    o.code = kInputError;
    o.err = path + ": brute force oracle handles at most " + std::to_string(kBruteForceLimit) + " vertices\n";
    return o;
  }

  RunOptions options;
  options.build_hierarchy = !flags.certificate.empty() || !flags.dot.empty();
  RunReport report = run_pipeline(g, options);
  report.input_path = path;
  if (flags.trace) {
    if (report.schedule) write_trace(out, *report.schedule);
    if (report.stopped_at != Stage::complete) out << "stopped at " << stage_name(report.stopped_at) << '\n';
  }
  o.code = report.verdict == Verdict::laman ? kLaman : kNotLaman;
  out << path << ": " << verdict_name(report.verdict) << " n=" << report.n << " m=" << report.m
      << " deleted=" << report.deleted << " stage=" << stage_name(report.stopped_at);

  if (!flags.oracle.empty()) {
    Verdict expected = flags.oracle == "pebble" ? pebble_verify(g) : bruteforce_verify(g);
    out << " oracle=" << flags.oracle << ':' << verdict_name(expected);
    if (expected != report.verdict) {
      out << " DISAGREE";
      o.code = kDisagreement;
    }
  }
  out << '\n';

  if (report.hierarchy) {
    if (!report.validation->valid()) {
      o.code = kDisagreement;
      for (const RuleViolation& v : report.validation->violations) {
        err << path << ": certificate violates " << rule_name(v.rule) << " at node " << v.node << ": " << v.detail << '\n';
      }
    } else {
      try {
        if (!flags.certificate.empty()) {
          write_text(flags.certificate, emit_certificate(*report.hierarchy, *report.schedule, report.gstar), out);
        }
        if (!flags.dot.empty()) write_text(flags.dot, to_dot(*report.hierarchy), out);
      } catch (const std::exception& e) {
        o.code = kInputError;
        err << e.what() << '\n';
      }
    }
  }
  o.out = out.str();
  o.err += err.str();
  return o;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  if (!flags.dir) {
    if (fs::is_directory(flags.path)) {
      err << flags.path << " is a directory; pass --dir\n";
      return kInputError;
    }
    Outcome o = verify_one(flags.path, flags);
    out << o.out;
    err << o.err;
    return o.code;
  }
  if (flags.trace || !flags.certificate.empty() || !flags.dot.empty()) {
    err << "--trace, --certificate and --dot need a single graph file\n";
    return kInputError;
  }
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(flags.path, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path().string());
  }
  if (ec) {
    err << flags.path << ": " << ec.message() << '\n';
    return kInputError;
  }
  std::sort(files.begin(), files.end());
  std::vector<Outcome> outcomes(files.size());
  parallel_for(files.size(), worker_count(files.size()), [&](std::size_t i) { outcomes[i] = verify_one(files[i], flags); });

  std::array<std::size_t, 4> tally{};
  for (const Outcome& o : outcomes) {
    out << o.out;
    err << o.err;
    ++tally[static_cast<std::size_t>(o.code)];
  }
  out << "files=" << files.size() << " laman=" << tally[kLaman] << " not_laman=" << tally[kNotLaman]
      << " input_errors=" << tally[kInputError] << " disagreements=" << tally[kDisagreement] << '\n';
  if (tally[kDisagreement]) return kDisagreement;
  if (tally[kInputError]) return kInputError;
  if (tally[kNotLaman]) return kNotLaman;
  return kLaman;
}

int cmd_generate(VertexId n, std::uint64_t seed, double p2, const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    write_text(path, serialize_graph(generate_laman({n, seed, p2})), out);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return kLaman;
}

struct BenchRow {
  VertexId n = 0;
  std::uint64_t seed = 0;
  PhaseTimings best;
  bool ok = true;
};

int cmd_bench(const std::vector<VertexId>& sizes, std::uint64_t seeds, std::uint64_t base, double p2, int repeats,
              const std::string& path, std::ostream& out, std::ostream& err) {
  if (repeats < 1 || sizes.empty() || seeds == 0) {
    err << "bench needs at least one size, one seed and one repeat\n";
    return kInputError;
  }
  for (VertexId n : sizes) {
    if (n < 2) {
      err << "bench sizes must be at least 2\n";
      return kInputError;
    }
  }
  std::vector<BenchRow> rows;
  for (VertexId n : sizes) {
    for (std::uint64_t s = 0; s < seeds; ++s) rows.push_back({n, base + s, {}, true});
  }
  // Timings are cleanest on one thread; LAMAN_THREADS opts in to more.
  parallel_for(rows.size(), env_threads().value_or(1), [&](std::size_t i) {
    BenchRow& row = rows[i];
    Graph g = generate_laman({row.n, row.seed, p2});
    RunOptions options;
    options.build_hierarchy = true;
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    row.best = {kMax, kMax, kMax, kMax};
    for (int r = 0; r < repeats; ++r) {
      RunReport report = run_pipeline(g, options);
      if (report.verdict != Verdict::laman || !report.validation || !report.validation->valid()) row.ok = false;
      row.best.extract_ns = std::min(row.best.extract_ns, report.timings.extract_ns);
      row.best.decompose_ns = std::min(row.best.decompose_ns, report.timings.decompose_ns);
      row.best.reconstruct_ns = std::min(row.best.reconstruct_ns, report.timings.reconstruct_ns);
      row.best.validate_ns = std::min(row.best.validate_ns, report.timings.validate_ns);
    }
  });

  std::ostringstream csv;
  csv << "n,seed,t_extract,t_decompose,t_reconstruct,t_validate\n";
  int code = kLaman;
  for (const BenchRow& row : rows) {
    csv << row.n << ',' << row.seed << ',' << row.best.extract_ns << ',' << row.best.decompose_ns << ','
        << row.best.reconstruct_ns << ',' << row.best.validate_ns << '\n';
    if (!row.ok) {
      err << "n=" << row.n << " seed=" << row.seed << ": generated graph failed the pipeline\n";
      code = kDisagreement;
    }
  }
  try {
    write_text(path, csv.str(), out);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return code;
}

int cmd_check_cert(const std::string& cert_path, const std::string& graph_path, std::ostream& out, std::ostream& err) {
  Certificate cert;
  Graph g;
  try {
    cert = parse_certificate(read_text(cert_path));
    g = graph_path.empty() ? certificate_graph(cert) : read_graph_file(graph_path);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  if (g.vertex_count() != cert.n || g.edge_count() != cert.m) {
    out << cert_path << ": invalid (certificate is for n=" << cert.n << " m=" << cert.m << ")\n";
    return kNotLaman;
  }
  ValidationResult result = validate(cert.hierarchy, g);
  if (result.valid()) {
    out << cert_path << ": valid\n";
    return kLaman;
  }
  out << cert_path << ": invalid\n";
  for (const RuleViolation& v : result.violations) {
    out << "  " << rule_name(v.rule) << " at node " << v.node << ": " << v.detail << '\n';
  }
  return kNotLaman;
}

int cmd_corpus(const std::string& dir, const std::vector<VertexId>& sizes, std::uint64_t count, std::uint64_t seed,
               double p2, bool mutants, std::ostream& out, std::ostream& err) {
  try {
    fs::create_directories(dir);
    std::vector<ManifestRow> rows;
    std::uint64_t index = 0;
    for (VertexId n : sizes) {
      for (std::uint64_t i = 0; i < count; ++i, ++index) {
        const std::uint64_t item_seed = derive_seed(seed, index);
        Graph g = generate_laman({n, item_seed, p2});
        std::string name = "laman_n" + std::to_string(n) + "_" + std::to_string(i) + ".txt";
        write_text((fs::path(dir) / name).string(), serialize_graph(g), out);
        rows.push_back({item_seed, n, p2, name, true});
        if (!mutants || n < 6) continue;
        std::optional<Graph> bad = mutate_non_laman(g, item_seed);
        if (!bad) {
          err << name << ": no mutant found\n";
          continue;
        }
        name = "mutant_n" + std::to_string(n) + "_" + std::to_string(i) + ".txt";
        write_text((fs::path(dir) / name).string(), serialize_graph(*bad), out);
        rows.push_back({item_seed, n, p2, name, false});
      }
    }
    write_text((fs::path(dir) / "manifest.csv").string(), format_manifest(rows), out);
    out << "wrote " << rows.size() << " graphs to " << dir << '\n';
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return kLaman;
}

int cmd_mutate(const std::string& path, std::uint64_t seed, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  try {
    Graph g = read_graph_file(path);
    if (pebble_verify(g) != Verdict::laman) {
      err << path << ": input is not Laman\n";
      return kInputError;
    }
    std::optional<Graph> bad = mutate_non_laman(g, seed);
    if (!bad) {
      err << path << ": no mutant found for seed " << seed << "\n";
      return kNotLaman;
    }
    write_text(out_path, serialize_graph(*bad), out);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return kLaman;
}

}  // namespace

unsigned worker_count(std::size_t jobs) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (auto cap = env_threads()) workers = std::min(workers, *cap);
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, jobs)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laman graph recognition with red-black hierarchy certificates", "laman"};
  app.require_subcommand(1);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "decide whether a graph (or every .txt graph in a directory) is Laman");
  verify->add_option("path", vf.path, "graph file, or directory with --dir")->required();
  verify->add_flag("--dir", vf.dir, "verify every .txt file in the directory");
  verify->add_option("--certificate", vf.certificate, "write the certificate JSON here ('-' for stdout)");
  verify->add_option("--dot", vf.dot, "write the hierarchy as Graphviz DOT");
  verify->add_flag("--trace", vf.trace, "print one line per deletion step");
  verify->add_option("--oracle", vf.oracle, "cross-check against an independent decider")
      ->check(CLI::IsMember({"pebble", "brute"}));
  verify->add_option("--seed", vf.seed, "accepted for uniformity; verification is deterministic");

  VertexId gen_n = 0;
  std::uint64_t gen_seed = 0;
  double gen_p2 = 0.5;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "write a random Laman graph built by Henneberg steps");
  generate->add_option("--n", gen_n, "vertex count")->required();
  generate->add_option("--seed", gen_seed, "generator seed");
  generate->add_option("--p2", gen_p2, "probability of a type-II step");
  generate->add_option("--out", gen_out, "output file (default stdout)");

  std::vector<VertexId> bench_sizes{4096, 8192, 16384, 32768, 65536, 131072};
  std::uint64_t bench_seeds = 3;
  std::uint64_t bench_seed = 0;
  double bench_p2 = 0.5;
  int bench_repeats = 3;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "time each pipeline phase on generated graphs and write CSV");
  bench->add_option("--sizes", bench_sizes, "vertex counts")->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "graphs per size; seeds run from --seed upward");
  bench->add_option("--seed", bench_seed, "first generator seed");
  bench->add_option("--p2", bench_p2, "probability of a type-II step");
  bench->add_option("--repeats", bench_repeats, "runs per graph; the minimum is reported");
  bench->add_option("--out", bench_out, "CSV file (default stdout)");

  std::string cert_path;
  std::string cert_graph;
  std::uint64_t cert_seed = 0;
  auto* check = app.add_subcommand("check-cert", "parse a certificate and re-run validation");
  check->add_option("certificate", cert_path, "certificate JSON")->required();
  check->add_option("--graph", cert_graph, "validate against this graph instead of the certificate's own edges");
  check->add_option("--seed", cert_seed, "accepted for uniformity");

  std::string corpus_dir;
  std::vector<VertexId> corpus_sizes{10, 100, 1000};
  std::uint64_t corpus_count = 10;
  std::uint64_t corpus_seed = 0;
  double corpus_p2 = 0.5;
  bool corpus_mutants = false;
  auto* corpus = app.add_subcommand("corpus", "write a generated corpus and its manifest.csv");
  corpus->add_option("--out", corpus_dir, "output directory")->required();
  corpus->add_option("--sizes", corpus_sizes, "vertex counts")->delimiter(',');
  corpus->add_option("--count", corpus_count, "graphs per size");
  corpus->add_option("--seed", corpus_seed, "base seed");
  corpus->add_option("--p2", corpus_p2, "probability of a type-II step");
  corpus->add_flag("--mutants", corpus_mutants, "also write one non-Laman mutant per graph (n >= 6)");

  std::string mut_in;
  std::string mut_out;
  std::uint64_t mut_seed = 0;
  auto* mutate = app.add_subcommand("mutate", "turn a Laman graph into a non-Laman one with the same edge count");
  mutate->add_option("path", mut_in, "Laman graph file")->required();
  mutate->add_option("--seed", mut_seed, "mutation seed");
  mutate->add_option("--out", mut_out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kLaman;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kLaman;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  if (verify->parsed()) return cmd_verify(vf, out, err);
  if (generate->parsed()) return cmd_generate(gen_n, gen_seed, gen_p2, gen_out, out, err);
  if (bench->parsed()) return cmd_bench(bench_sizes, bench_seeds, bench_seed, bench_p2, bench_repeats, bench_out, out, err);
  if (check->parsed()) return cmd_check_cert(cert_path, cert_graph, out, err);
  if (corpus->parsed()) {
    return cmd_corpus(corpus_dir, corpus_sizes, corpus_count, corpus_seed, corpus_p2, corpus_mutants, out, err);
  }
  return cmd_mutate(mut_in, mut_seed, mut_out, out, err);
}

}  // namespace laman::cli
