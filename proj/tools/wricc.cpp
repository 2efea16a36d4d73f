// wricc: decide, certify and cross-check icc for restricted wreath products.
//
//   wricc decide  -i FILE
//   wricc witness -i FILE [-g ELEM]
//   wricc class   -i FILE -g ELEM [--radius N] [--max-size N]
//   wricc verify  -i FILE [--seed N] [--samples N]
//
// Exit codes: 0 ok/PASS, 1 FAIL, 2 Unknown verdict, 3 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <wricc/wricc.hpp>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) wricc::fail(wricc::ErrorCode::InvalidInstance, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide and certify the icc property of restricted wreath products"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit one JSON record per command");

  std::string file;
  std::string element;
  std::size_t radius = wricc::kDefaultOracleRadius;
  std::size_t max_size = wricc::kDefaultOracleMaxSize;
  std::uint64_t seed = 42;
  std::size_t samples = 500;

  auto* decide = app.add_subcommand("decide", "Apply the icc criterion");
  decide->add_option("-i,--instance", file, "Instance file")->required();

  auto* witness = app.add_subcommand("witness", "Emit a certificate for the verdict");
  witness->add_option("-i,--instance", file, "Instance file")->required();
  auto* witness_elem = witness->add_option("-g,--element", element, "Element literal {y:d,...}@q");

  auto* cls = app.add_subcommand("class", "Bounded conjugacy-class enumeration");
  cls->add_option("-i,--instance", file, "Instance file")->required();
  cls->add_option("-g,--element", element, "Element literal {y:d,...}@q")->required();
  cls->add_option("--radius", radius, "Conjugation rounds")->check(CLI::PositiveNumber);
  cls->add_option("--max-size", max_size, "Class size cap")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the full cross-check");
  verify->add_option("-i,--instance", file, "Instance file")->required();
  auto* seed_opt = verify->add_option("--seed", seed, "Sampling seed");
  auto* samples_opt = verify->add_option("--samples", samples, "Sampled conjugators")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : wricc::kExitUsage;
  }

  try {
    const auto spec = wricc::parse_instance(slurp(file));
    wricc::CommandResult result;
    if (*decide) {
      result = wricc::cmd_decide(spec);
    } else if (*witness) {
      result = wricc::cmd_witness(spec, *witness_elem ? std::optional<std::string>(element) : std::nullopt);
    } else if (*cls) {
      result = wricc::cmd_class(spec, element, radius, max_size);
    } else {
      if (!*seed_opt) seed = spec.budgets.seed;
      if (!*samples_opt) samples = spec.budgets.samples;
      result = wricc::cmd_verify(spec, seed, samples);
    }
    if (json) {
      std::cout << result.record.dump() << "\n";
    } else {
      std::cout << wricc::render_human(result.record);
    }
    return result.exit_code;
  } catch (const wricc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == wricc::ErrorCode::UnknownVerdict ? wricc::kExitUnknown : wricc::kExitUsage;
  }
}
