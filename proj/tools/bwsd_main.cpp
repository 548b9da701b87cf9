// bwsd: pairwise Burrows-Wheeler similarity distances for a collection.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "bwsd/corpus.hpp"
#include "bwsd/engines.hpp"
#include "bwsd/matrix_io.hpp"
#include "bwsd/suffix.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliArgs {
  std::string input;
  std::string format = "auto";
  std::string algorithm = "bit-sd";
  std::string measure = "dm";
  unsigned threads = 1;
  std::optional<std::size_t> docs;
  std::string output;
  std::string output_format = "tsv";
  bool stats = false;
  bool dump_bwt = false;
  bool dump_da = false;
};

void write_output(const bwsd::DistanceMatrix& m, bwsd::MatrixFormat format,
                  const std::string& path) {
  if (path.empty()) {
    bwsd::write_matrix(m, format, std::cout);
    std::cout.flush();
    if (!std::cout) throw bwsd::IoError("failed to write standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bwsd::IoError("cannot open output file: " + path);
  bwsd::write_matrix(m, format, out);
  out.flush();
  if (!out) throw bwsd::IoError("failed to write output file: " + path);
}

int run(const CliArgs& args) {
  const auto engine = bwsd::parse_engine_name(args.algorithm);
  if (!engine) throw UsageError("unknown algorithm: " + args.algorithm);
  if (args.threads == 0) throw UsageError("--threads must be at least 1");
  if (args.docs && *args.docs == 0) throw UsageError("--docs must be at least 1");
  if (args.measure == "both" && args.output.empty()) {
    throw UsageError("--measure both writes <output>.dm and <output>.de; "
                     "--output is required");
  }

  const std::map<std::string, bwsd::InputFormat> formats = {
      {"auto", bwsd::InputFormat::automatic},
      {"fasta", bwsd::InputFormat::fasta},
      {"lines", bwsd::InputFormat::lines}};
  bwsd::TextCollection collection =
      bwsd::load_collection(args.input, formats.at(args.format));
  if (args.docs) {
    if (*args.docs > collection.size()) {
      throw UsageError("--docs " + std::to_string(*args.docs) +
                       " exceeds the collection size " +
                       std::to_string(collection.size()));
    }
    collection = collection.prefix(*args.docs);
  }
  collection.validate();

  if (args.dump_bwt || args.dump_da) {
    const bwsd::IntText text = bwsd::remap(collection);
    const bwsd::SuffixArray sa = bwsd::build_suffix_array(text);
    bwsd::dump_rows(std::cerr, text, bwsd::build_document_array(text, sa),
                    bwsd::build_bwt(text, sa));
  }

  const auto out_format = args.output_format == "phylip"
                              ? bwsd::MatrixFormat::phylip
                              : bwsd::MatrixFormat::tsv;
  std::vector<std::pair<bwsd::Measure, std::string>> jobs;
  if (args.measure == "dm" || args.measure == "both") {
    jobs.emplace_back(bwsd::Measure::expectation,
                      args.measure == "both" ? args.output + ".dm" : args.output);
  }
  if (args.measure == "de" || args.measure == "both") {
    jobs.emplace_back(bwsd::Measure::entropy,
                      args.measure == "both" ? args.output + ".de" : args.output);
  }

  for (const auto& [measure, path] : jobs) {
    bwsd::EngineConfig cfg;
    cfg.engine = *engine;
    cfg.measure = measure;
    cfg.threads = args.threads;
    const bwsd::EngineResult result = bwsd::run_engine(collection, cfg);
    if (args.stats) {
      std::cerr << "algorithm=" << bwsd::engine_name(*engine) << '\n'
                << "measure=" << (measure == bwsd::Measure::expectation ? "dm" : "de")
                << '\n'
                << "documents=" << collection.size() << '\n'
                << "threads=" << args.threads << '\n';
      bwsd::write_stats(result.stats, std::cerr);
    }
    write_output(result.matrix, out_format, path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise Burrows-Wheeler similarity distribution distances"};
  app.set_version_flag("--version", "bwsd 1.0");
  CliArgs args;
  app.add_option("-i,--input", args.input, "Input collection")
      ->required();
  app.add_option("-f,--format", args.format,
                 "fasta, lines, or auto (fasta when the file starts with '>')")
      ->check(CLI::IsMember({"auto", "fasta", "lines"}));
  app.add_option("-a,--algorithm", args.algorithm, "Engine")
      ->check(CLI::IsMember({"sf", "bit", "bit-sd", "wt", "rmq", "rmq-light"}));
  app.add_option("-m,--measure", args.measure,
                 "dm (expectation), de (entropy), or both")
      ->check(CLI::IsMember({"dm", "de", "both"}));
  app.add_option("-t,--threads", args.threads, "Worker threads");
  app.add_option("-d,--docs", args.docs, "Use only the first N documents");
  app.add_option("-o,--output", args.output,
                 "Output file (default: standard output)");
  app.add_option("--output-format", args.output_format, "tsv or phylip")
      ->check(CLI::IsMember({"tsv", "phylip"}));
  app.add_flag("--stats", args.stats, "Print engine counters and timings to stderr");
  app.add_flag("--dump-bwt", args.dump_bwt,
               "Print rows 'i DA[i] BWT[i]' of the whole collection to stderr");
  app.add_flag("--dump-da", args.dump_da, "Same row dump as --dump-bwt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return run(args);
  } catch (const UsageError& e) {
    std::cerr << "bwsd: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bwsd::IoError& e) {
    std::cerr << "bwsd: " << e.what() << '\n';
    return kExitIo;
  } catch (const bwsd::FormatError& e) {
    std::cerr << "bwsd: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "bwsd: " << e.what() << '\n';
    return kExitIo;
  }
}
