#include "cfw/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "cfw/constructions.hpp"
#include "cfw/repetitions.hpp"
#include "cfw/streams.hpp"
#include "cfw/verify.hpp"
#include "cfw/word.hpp"

namespace cfw::cli {

namespace {

StreamPtr stream_for(const std::string& kind) {
  if (kind == "tm") return thue_morse_word();
  if (kind == "w") return w_stream();
  if (kind == "gw") return gw_stream();
  if (kind == "y") return y_stream();
  if (kind == "fy") return fy_stream();
  throw DomainError("unknown word kind: " + kind);
}

std::string trimmed(std::string line) {
  while (!line.empty() &&
         (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.pop_back();
  }
  return line;
}

Word read_word(const std::string& inline_word, const std::string& file,
               std::istream& in) {
  if (!inline_word.empty()) return Word::from_digits(inline_word);
  if (!file.empty()) {
    std::ifstream stream(file);
    if (!stream) throw DomainError("cannot open file: " + file);
    std::string line;
    std::getline(stream, line);
    return Word::from_digits(trimmed(line));
  }
  std::string line;
  std::getline(in, line);
  return Word::from_digits(trimmed(line));
}

ExponentThreshold parse_threshold(const std::string& text,
                                  const std::string& mode) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      num = std::stoll(text);
    } else {
      num = std::stoll(text.substr(0, slash));
      den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw DomainError("malformed exponent: " + text);
  }
  return ExponentThreshold(num, den,
                           mode == "gt" ? ExponentThreshold::Mode::exclude_gt
                                        : ExponentThreshold::Mode::exclude_ge);
}

int run_check(const std::string& property, const Word& w,
              const std::optional<ExponentThreshold>& threshold,
              std::ostream& out) {
  std::optional<Occurrence> witness;
  bool holds = false;
  if (property == "square") {
    holds = is_square(w);
  } else if (property == "cubefree") {
    witness = find_cube(w);
    holds = !witness;
  } else if (property == "squarefree") {
    witness = find_square(w);
    holds = !witness;
  } else if (property == "overlapfree") {
    witness = find_overlap(w);
    holds = !witness;
  } else {  // powerfree
    witness = find_power(w, *threshold);
    holds = !witness;
  }
  out << (holds ? "true" : "false") << "\n";
  if (!holds && witness) {
    out << "pos=" << witness->position << ", period=" << witness->period
        << ", len=" << witness->length << "\n";
  }
  return holds ? 0 : 1;
}

void print_census_table(const std::vector<CensusRecord>& records,
                        std::ostream& out) {
  out << std::left << std::setw(8) << "length" << std::setw(14)
      << "exact_count" << std::setw(14) << "family_bound"
      << "witness" << "\n";
  for (const CensusRecord& record : records) {
    out << std::left << std::setw(8) << record.length;
    out << std::setw(14)
        << (record.exact_count ? std::to_string(*record.exact_count) : "-");
    out << std::setw(14)
        << (record.family_lower_bound
                ? std::to_string(*record.family_lower_bound)
                : "-");
    out << (record.witnesses.empty() ? "-"
                                     : record.witnesses.begin()->to_digits())
        << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, std::istream& in) {
  CLI::App app{"cubefree binary squares, power-free infinite words, and "
               "desk-scale verification"};
  app.require_subcommand(1);

  auto* generate =
      app.add_subcommand("generate", "Print a prefix of an infinite word");
  std::string word_kind;
  std::uint64_t length = 0;
  generate->add_option("--word", word_kind, "one of tm, w, gw, y, fy")
      ->required()
      ->check(CLI::IsMember({"tm", "w", "gw", "y", "fy"}));
  generate->add_option("--length", length, "prefix length")->required();

  auto* square = app.add_subcommand(
      "square", "Print a cubefree binary square of length 2*half");
  std::uint64_t half = 0;
  square->add_option("--half", half, "half-length (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* check_cmd =
      app.add_subcommand("check", "Check a repetition property of a word");
  std::string property;
  std::string exponent_text;
  std::string mode_text = "ge";
  std::string file;
  std::string inline_word;
  check_cmd
      ->add_option("--property", property,
                   "square, cubefree, squarefree, overlapfree, or powerfree")
      ->required()
      ->check(CLI::IsMember(
          {"square", "cubefree", "squarefree", "overlapfree", "powerfree"}));
  check_cmd->add_option("--exponent", exponent_text,
                        "threshold p/q for powerfree");
  check_cmd->add_option("--mode", mode_text, "ge excludes exponents >= p/q, "
                                             "gt excludes > p/q (default ge)")
      ->check(CLI::IsMember({"ge", "gt"}));
  check_cmd->add_option("--file", file, "read the word from a file");
  check_cmd->add_option("word", inline_word, "the word as a digit string");

  auto* census_cmd = app.add_subcommand(
      "census", "Count cubefree binary squares per even length");
  std::uint64_t census_max = 0;
  std::uint64_t census_cap = 0;
  bool as_json = false;
  census_cmd->add_option("--max", census_max, "largest even length")
      ->required();
  census_cmd->add_option("--exhaustive-cap", census_cap,
                         "largest length counted exactly (<= 28; default "
                         "min(max, 28))");
  census_cmd->add_flag("--json", as_json, "one JSON object per line");

  auto* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::uint64_t limit = 0;
  bool oracle = false;
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--limit", limit,
                         "suite-specific size bound (0 = default)");
  verify_cmd->add_flag("--oracle", oracle,
                       "force the naive detectors end-to-end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*generate) {
      out << stream_for(word_kind)
                 ->prefix(static_cast<std::size_t>(length))
                 .to_digits()
          << "\n";
      return 0;
    }
    if (*square) {
      out << cubefree_square(static_cast<std::size_t>(half)).to_digits()
          << "\n";
      return 0;
    }
    if (*check_cmd) {
      std::optional<ExponentThreshold> threshold;
      if (property == "powerfree") {
        if (exponent_text.empty()) {
          err << "powerfree requires --exponent p/q\n";
          return 2;
        }
        threshold = parse_threshold(exponent_text, mode_text);
      }
      const Word w = read_word(inline_word, file, in);
      return run_check(property, w, threshold, out);
    }
    if (*census_cmd) {
      const std::size_t cap =
          census_cap != 0 ? static_cast<std::size_t>(census_cap)
                          : std::min<std::size_t>(census_max, 28);
      const auto records =
          census(static_cast<std::size_t>(census_max), cap);
      if (as_json) {
        for (const CensusRecord& record : records) {
          out << census_record_to_json(record) << "\n";
        }
      } else {
        print_census_table(records, out);
      }
      return 0;
    }
    if (*verify_cmd) {
      verify::Options options;
      options.limit = limit;
      options.engine = oracle ? Engine::naive : Engine::fast;
      const verify::Report report = verify::run_suite(suite, options);
      verify::print_report(report, out);
      return report.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cfw::cli
