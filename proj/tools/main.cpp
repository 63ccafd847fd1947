// braidmono — enumerate, classify, verify and tabulate the generic monodromy
// representations of the genus-2 surface braid group B2(Sigma2) in symmetric
// groups, together with the invariants of the branched coverings of
// Sym^2(Sigma2) they correspond to.
//
// Record streams go to stdout (or --out); diagnostics and progress go to
// stderr. Exit codes: 0 success, 1 operation failure, 2 usage error,
// 3 checkpoint error, 4 incomplete (limit-truncated) run, 5 input parse error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidmono/classify.hpp"
#include "braidmono/enumerate.hpp"
#include "braidmono/records.hpp"

namespace fs = std::filesystem;
using namespace braidmono;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kCheckpoint = 3,
  kIncomplete = 4,
  kParse = 5,
};

int effective_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Data sink: --out wins, then $BRAIDMONO_OUT_DIR/<default name>, else stdout.
class OutputTarget {
 public:
  OutputTarget(const std::string& out_flag, const std::string& default_name) {
    fs::path path;
    if (!out_flag.empty()) {
      path = out_flag;
    } else if (const char* dir = std::getenv("BRAIDMONO_OUT_DIR"); dir && *dir) {
      path = fs::path(dir) / default_name;
    }
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path.string());
      where_ = path.string();
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  const std::string& where() const { return where_; }

 private:
  std::ofstream file_;
  std::string where_;  // empty = stdout
};

void write_summary(std::ostream& out, Format format, const nlohmann::json& fields) {
  if (format == Format::Jsonl) {
    nlohmann::json j = fields;
    j["summary"] = true;
    out << j.dump() << '\n';
  } else {
    out << "# summary";
    for (auto it = fields.begin(); it != fields.end(); ++it)
      out << ' ' << it.key() << '=' << it.value().dump();
    out << '\n';
  }
}

std::vector<MonodromyRep> reps_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<OutputRecord> records = read_records(in);
  std::vector<MonodromyRep> reps;
  reps.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      reps.push_back(to_rep(records[i]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(i + 1, std::string("record ") + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return reps;
}

struct EnumerateArgs {
  int degree = 0;
  bool fix_sigma = true;
  int threads = 0;
  std::string out;
  std::string format = "jsonl";
  std::uint64_t limit = 0;
  bool has_limit = false;
  std::string checkpoint;
  bool progress = false;
  bool sorted = false;
};

int cmd_enumerate(const EnumerateArgs& args) {
  const Format format = parse_format(args.format);
  SearchConfig config;
  config.degree = args.degree;
  config.fix_sigma = args.fix_sigma;
  config.worker_count = effective_threads(args.threads);
  if (args.has_limit) config.limit = args.limit;
  config.checkpoint_path = args.checkpoint;

  if (args.progress) {
    auto last = std::make_shared<std::chrono::steady_clock::time_point>();
    config.on_progress = [last](std::uint64_t done, std::uint64_t total, std::uint64_t sols) {
      auto now = std::chrono::steady_clock::now();
      if (done < total && now - *last < std::chrono::milliseconds(500)) return;
      *last = now;
      std::cerr << "progress: partitions " << done << "/" << total << ", solutions " << sols
                << '\n';
    };
  }

  EnumerationResult result;
  const bool resuming = !args.checkpoint.empty() && fs::exists(args.checkpoint);
  if (resuming) {
    CheckpointInfo info = checkpoint_info(args.checkpoint);
    if (info.degree != args.degree)
      throw CheckpointError("checkpoint degree " + std::to_string(info.degree) +
                            " does not match --degree " + std::to_string(args.degree));
    if (info.fix_sigma != args.fix_sigma)
      throw CheckpointError("checkpoint fix_sigma flag does not match the requested mode");
    std::cerr << "resuming checkpoint " << args.checkpoint << " (" << info.completed << "/"
              << info.partitions << " partitions done)\n";
    ResumeOptions options;
    options.worker_count = config.worker_count;
    options.checkpoint_interval = config.checkpoint_interval;
    options.limit = config.limit;
    options.on_progress = config.on_progress;
    result = resume(args.checkpoint, options);
  } else {
    result = enumerate(config);
  }

  if (args.sorted) std::sort(result.solutions.begin(), result.solutions.end());

  OutputTarget target(args.out, "enumerate-n" + std::to_string(args.degree) +
                                    (format == Format::Csv ? ".csv" : ".jsonl"));
  std::ostream& out = target.stream();
  if (format == Format::Csv) out << csv_header(false) << '\n';
  for (const MonodromyRep& rep : result.solutions)
    out << serialize_record(to_record(rep), format) << '\n';
  write_summary(out, format,
                {{"degree", result.degree},
                 {"fix_sigma", result.fix_sigma},
                 {"total_count", result.total_count},
                 {"fixed_sigma_count", result.fixed_sigma_count},
                 {"solutions_emitted", result.solutions.size()},
                 {"complete", result.complete},
                 {"elapsed_seconds", result.elapsed.count()}});
  out.flush();
  if (!target.where().empty())
    std::cerr << "wrote " << result.solutions.size() << " records to " << target.where() << '\n';
  return result.complete ? kOk : kIncomplete;
}

struct ClassifyArgs {
  std::string in;
  int degree = 0;
  int threads = 0;
  std::string out;
  std::string format = "jsonl";
  bool sorted = false;
  bool close = false;
  bool require_closed = false;
};

int cmd_classify(const ClassifyArgs& args) {
  const Format format = parse_format(args.format);
  std::vector<MonodromyRep> reps;
  if (!args.in.empty()) {
    reps = reps_from_file(args.in);
  } else {
    SearchConfig config;
    config.degree = args.degree;
    config.worker_count = effective_threads(args.threads);
    reps = enumerate(config).solutions;
  }

  ClassifyOptions options;
  if (args.close) options.policy = ClosurePolicy::Close;
  if (args.require_closed) options.policy = ClosurePolicy::RequireClosed;
  auto classes = classify(reps, options);

  OutputTarget target(args.out, "classify" + std::string(args.in.empty()
                                                             ? "-n" + std::to_string(args.degree)
                                                             : "") +
                                    (format == Format::Csv ? ".csv" : ".jsonl"));
  std::ostream& out = target.stream();
  if (format == Format::Csv) out << csv_header(true) << '\n';
  for (const ConjugacyClassRecord& cls : classes)
    out << serialize_record(to_record(cls, surface_report(cls)), format) << '\n';
  write_summary(out, format,
                {{"class_count", classes.size()}, {"input_records", reps.size()}});
  out.flush();
  return kOk;
}

int cmd_verify(const std::string& in_path) {
  std::vector<MonodromyRep> reps = reps_from_file(in_path);
  if (reps.empty()) {
    std::cerr << "warning: " << in_path << " contains no records\n";
    return kOk;
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    VerifyReport report = verify(reps[i]);
    if (!report.pass()) {
      ++failures;
      std::cerr << "FAIL record " << (i + 1) << " (" << rep_key(reps[i]) << "):";
      for (const std::string& name : report.failure_names()) std::cerr << ' ' << name;
      std::cerr << '\n';
    }
  }
  std::cerr << (reps.size() - failures) << "/" << reps.size() << " records verified\n";
  return failures == 0 ? kOk : kFailure;
}

int cmd_table(int max_degree, int threads) {
  auto rows = table_report(max_degree, effective_threads(threads));
  std::cout << "  n  total      factored      classes  K^2\n";
  for (const TableRow& row : rows) {
    const std::string factored = std::to_string(transposition_count(row.degree)) + "·" +
                                 std::to_string(row.fixed_sigma);
    char line[160];
    std::snprintf(line, sizeof line, "%3d  %-9llu  %-12s  %-7llu  %3d\n", row.degree,
                  static_cast<unsigned long long>(row.total), factored.c_str(),
                  static_cast<unsigned long long>(row.class_count), row.k_squared);
    std::cout << line;
  }
  return kOk;
}

int cmd_relations() {
  std::cout << "Bellingeri presentation of B2(Sigma2): generators a1, a2, b1, b2, s\n"
            << "(s winds once around the diagonal; words multiply left to right)\n\n";
  for (const Relation& rel : bellingeri_relations()) {
    std::cout << tag_name(rel.tag) << ":  " << word_text(rel.lhs) << " = " << word_text(rel.rhs);
    if (rel.tag == RelationTag::TR) std::cout << "   i.e. [a1, b1^-1] [a2, b2^-1] = s^2";
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic monodromy representations of B2(Sigma2) in symmetric groups"};
  app.require_subcommand(1);

  EnumerateArgs en;
  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "exhaustively enumerate representations of one degree");
  enumerate_cmd->add_option("--degree", en.degree, "degree n of the symmetric group")
      ->required()
      ->check(CLI::Range(1, 20));
  enumerate_cmd->add_flag("--fix-sigma,!--no-fix-sigma", en.fix_sigma,
                          "search only sigma=(1 2) and scale totals (default on)");
  enumerate_cmd->add_option("--threads", en.threads, "worker threads, 0 = all available");
  enumerate_cmd->add_option("--out", en.out, "output file (default stdout)");
  enumerate_cmd->add_option("--format", en.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  CLI::Option* limit_opt =
      enumerate_cmd->add_option("--limit", en.limit, "stop after roughly this many solutions");
  enumerate_cmd->add_option("--checkpoint", en.checkpoint,
                            "checkpoint file; created if absent, resumed if present");
  enumerate_cmd->add_flag("--progress", en.progress, "report progress on stderr");
  enumerate_cmd->add_flag("--sorted", en.sorted, "sort records into canonical order");

  ClassifyArgs cl;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "partition solutions into conjugacy classes");
  CLI::Option* cl_in = classify_cmd->add_option("--in", cl.in, "solution record file");
  classify_cmd->add_option("--degree", cl.degree, "enumerate this degree instead of reading a file")
      ->check(CLI::Range(1, 20))
      ->excludes(cl_in);
  classify_cmd->add_option("--threads", cl.threads, "worker threads, 0 = all available");
  classify_cmd->add_option("--out", cl.out, "output file (default stdout)");
  classify_cmd->add_option("--format", cl.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  classify_cmd->add_flag("--sorted", cl.sorted, "accepted for symmetry; classes are always sorted");
  classify_cmd->add_flag("--close", cl.close, "close the input under conjugation first");
  classify_cmd->add_flag("--require-closed", cl.require_closed,
                         "error if the input is not conjugation-closed");

  std::string verify_in;
  CLI::App* verify_cmd = app.add_subcommand("verify", "re-check records through the word evaluator");
  verify_cmd->add_option("--in", verify_in, "solution record file")->required();

  int table_max = 0, table_threads = 0;
  CLI::App* table_cmd = app.add_subcommand("table", "reproduce the count table per degree");
  table_cmd->add_option("--max-degree", table_max, "last degree to include (2..9 recommended)")
      ->required()
      ->check(CLI::Range(2, 20));
  table_cmd->add_option("--threads", table_threads, "worker threads, 0 = all available");

  app.add_subcommand("relations", "print the eleven defining relations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate_cmd->parsed()) {
      en.has_limit = limit_opt->count() > 0;
      return cmd_enumerate(en);
    }
    if (classify_cmd->parsed()) {
      if (cl.in.empty() && cl.degree == 0) {
        std::cerr << "classify: either --in or --degree is required\n";
        return kUsage;
      }
      if (cl.close && cl.require_closed) {
        std::cerr << "classify: --close and --require-closed are mutually exclusive\n";
        return kUsage;
      }
      return cmd_classify(cl);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_in);
    if (table_cmd->parsed()) return cmd_table(table_max, table_threads);
    return cmd_relations();
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kCheckpoint;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ClosureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
