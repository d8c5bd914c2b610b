#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "phq/catalog.hpp"
#include "phq/io.hpp"
#include "phq/reduction.hpp"

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2 };

struct Options {
  std::string format = "text";
  std::string fixtures_dir;
  std::string file;
};

std::filesystem::path resolve(const Options& o) {
  std::filesystem::path p(o.file);
  if (!o.fixtures_dir.empty() && p.is_relative()) return std::filesystem::path(o.fixtures_dir) / p;
  return p;
}

bool is_input_kind(phq::ErrorKind kind) {
  return kind == phq::ErrorKind::ParseError || kind == phq::ErrorKind::IndexOutOfRange ||
         kind == phq::ErrorKind::BadRational;
}

bool json_output(const Options& o) { return o.format == "json"; }

int run_check(const Options& o) {
  const phq::PHQAlgebra a = phq::read_algebra(resolve(o));
  const phq::Report report = phq::check_phq(a);
  if (json_output(o)) {
    std::cout << phq::to_json(report).dump(2) << "\n";
  } else {
    std::cout << report.to_text() << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kOk : kFailed;
}

int run_invariants(const Options& o) {
  const phq::Fingerprint f = phq::fingerprint(phq::read_algebra(resolve(o)));
  if (json_output(o)) std::cout << phq::to_json(f).dump(2) << "\n";
  else std::cout << f.table_row() << "\n";
  return kOk;
}

int run_classify(const Options& o) {
  const phq::Classification c = phq::classify(phq::read_algebra(resolve(o)));
  if (json_output(o)) std::cout << phq::to_json(c).dump(2) << "\n";
  else std::cout << phq::classification_text(c);
  return kOk;
}

int run_reduce(const Options& o) {
  const phq::Reduction r = phq::full_reduction(phq::read_algebra(resolve(o)));
  if (json_output(o)) std::cout << phq::to_json(r).dump(2) << "\n";
  else std::cout << phq::reduction_text(r);
  return kOk;
}

int run_construct(const Options& o) {
  std::cout << phq::serialize(phq::read_recipe(resolve(o)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for pseudo-Hermitian quadratic nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--fixtures-dir", options.fixtures_dir, "Directory that relative input paths are resolved against");

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"check", "Verify the pHQ axioms of an .alg file", run_check},
      {"invariants", "Print the fingerprint as a table row", run_invariants},
      {"classify", "Classify an algebra of dimension at most 8", run_classify},
      {"reduce", "Reduce to an abelian residue", run_reduce},
      {"construct", "Evaluate a .recipe file and print the algebra", run_construct},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("file", options.file, "Input file")->required();
    sub->callback([&selected, run = command.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    return selected(options);
  } catch (const phq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_kind(e.kind()) ? kBadInput : kFailed;
  }
}
