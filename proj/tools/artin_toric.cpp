// artin-toric: validate, report, batch and random subcommands.
//
// Exit codes: 0 success, 1 input or schema error, 2 validity violations,
// 3 computational guardrail.

#include "artin/report.hpp"
#include "artin/sampling.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using artin::InputError;

namespace {

enum Exit { kOk = 0, kInput = 1, kInvalid = 2, kGuardrail = 3 };

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const artin::GuardrailError& e) {
    std::cerr << "guardrail: " << e.what() << '\n';
    return kGuardrail;
  } catch (const std::overflow_error& e) {
    std::cerr << "guardrail: " << e.what() << '\n';
    return kGuardrail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}

struct Entry {
  std::string source;
  std::string text;
};

// A directory yields its *.json files in name order; anything else is read
// as JSON lines, one scenario per non-blank line.
std::vector<Entry> batch_entries(const std::string& path) {
  std::vector<Entry> entries;
  if (path != "-" && fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) entries.push_back({f.filename().string(), read_all(f.string())});
    return entries;
  }
  std::istringstream in(read_all(path));
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    entries.push_back({"line " + std::to_string(n), line});
  }
  return entries;
}

struct Outcome {
  int code = kOk;
  std::string output;
  std::string diagnostic;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine semigroup, Hilbert basis and toric ideal reports for L-function order data"};
  app.require_subcommand(1);

  std::string path;
  bool json_out = false;
  artin::ReportOptions ropts;

  auto* validate = app.add_subcommand("validate", "Check the order constraints of a scenario");
  validate->add_option("path", path, "Scenario file, or - for stdin")->required();
  validate->add_flag("--json", json_out, "Emit JSON");

  auto* report = app.add_subcommand("report", "Full report for a scenario");
  report->add_option("path", path, "Scenario file, or - for stdin")->required();
  report->add_option("--max-n", ropts.max_n, "Largest degree for the Hilbert function")
      ->check(CLI::NonNegativeNumber);
  report->add_flag("--with-ideal", ropts.with_ideal, "Compute the toric Groebner basis");
  report->add_flag("--json", json_out, "Emit JSON");

  bool json_lines = false;
  auto* batch = app.add_subcommand("batch", "Reports for a directory or JSON-lines list");
  batch->add_option("path", path, "Directory of *.json files, JSON-lines file, or -")->required();
  batch->add_option("--max-n", ropts.max_n, "Largest degree for the Hilbert function")
      ->check(CLI::NonNegativeNumber);
  batch->add_flag("--with-ideal", ropts.with_ideal, "Compute the toric Groebner basis");
  batch->add_flag("--json-lines", json_lines, "Emit one JSON report per line");

  artin::SamplingOptions sopts;
  auto* random = app.add_subcommand("random", "Seeded random scenarios as JSON lines");
  random->add_option("--r", sopts.r, "Number of characters")->check(CLI::PositiveNumber);
  random->add_option("--max-order", sopts.max_order, "Largest |order|")->check(CLI::PositiveNumber);
  random->add_option("--count", sopts.count, "Number of scenarios");
  random->add_option("--seed", sopts.seed, "Seed for the 64-bit Mersenne Twister");
  random->add_flag("--valid-only", sopts.valid_only, "Reject scenarios failing validation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (*validate) {
    return guarded([&] {
      const auto s = artin::parse_scenario(read_all(path));
      const auto v = artin::validate(s);
      if (json_out) std::cout << artin::validity_to_json(s, v).dump(2) << '\n';
      else std::cout << artin::render_validity(s, v);
      return v.valid ? kOk : kInvalid;
    });
  }

  if (*report) {
    return guarded([&] {
      const auto s = artin::parse_scenario(read_all(path));
      const auto r = artin::build_report(s, ropts);
      if (json_out) std::cout << nlohmann::json(r).dump(2) << '\n';
      else std::cout << artin::render_text(r);
      return kOk;
    });
  }

  if (*batch) {
    std::vector<Entry> entries;
    if (int code = guarded([&] {
          entries = batch_entries(path);
          return kOk;
        });
        code != kOk)
      return code;

    std::vector<std::future<Outcome>> jobs;
    for (const auto& e : entries) {
      jobs.push_back(std::async(std::launch::async, [&e, &ropts, json_lines] {
        Outcome out;
        out.code = [&] {
          try {
            const auto s = artin::parse_scenario(e.text);
            const auto r = artin::build_report(s, ropts);
            out.output = json_lines ? nlohmann::json(r).dump() + "\n" : artin::render_text(r) + "\n";
            return int(kOk);
          } catch (const InputError& ex) {
            out.diagnostic = e.source + ": error: " + ex.what();
            return int(kInput);
          } catch (const artin::GuardrailError& ex) {
            out.diagnostic = e.source + ": guardrail: " + ex.what();
            return int(kGuardrail);
          } catch (const std::overflow_error& ex) {
            out.diagnostic = e.source + ": guardrail: " + ex.what();
            return int(kGuardrail);
          } catch (const std::exception& ex) {
            out.diagnostic = e.source + ": error: " + ex.what();
            return int(kInput);
          }
        }();
        return out;
      }));
    }
    int code = kOk;
    for (auto& job : jobs) {
      const Outcome o = job.get();
      std::cout << o.output;
      if (!o.diagnostic.empty()) std::cerr << o.diagnostic << '\n';
      if (o.code == kInput) code = kInput;
      else if (o.code == kGuardrail && code == kOk) code = kGuardrail;
    }
    return code;
  }

  if (*random) {
    return guarded([&] {
      for (const auto& s : artin::random_scenarios(sopts))
        std::cout << artin::scenario_to_json(s).dump() << '\n';
      return kOk;
    });
  }
  return kInput;
}
