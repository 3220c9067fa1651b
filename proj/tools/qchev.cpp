// qchev: Gromov width and Seshadri bounds for b2 = 1 homogeneous spaces G/P.
//
//   qchev analyze A3:2 [--scale 3] [--format json|table] [--decimal]
//   qchev atlas --max-rank 4 --out atlas.jsonl [--dedup] [--decimal]
//   qchev product A1:1:1 A3:2:1 any [--format json|table] [--decimal]
//
// Exit codes: 0 ok, 2 usage, 3 enumeration cap, 4 lemma violation, 5 io.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "qchev/atlas.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitLemma = 4;
constexpr int kExitIo = 5;

qchev::NormalizedFactor parse_factor(const std::string& token) {
  if (token == "any" || token.rfind("any:", 0) == 0) return qchev::NormalizedFactor{qchev::AnyClosedSymplectic{}, 1};
  // FAMILYrank:node[:scaling]
  const auto first = token.find(':');
  const auto second = first == std::string::npos ? std::string::npos : token.find(':', first + 1);
  const auto descriptor = qchev::parse_descriptor(token.substr(0, second));
  qchev::Rational scaling{1};
  if (second != std::string::npos) scaling = qchev::parse_rational(token.substr(second + 1));
  if (scaling == qchev::Rational(0)) throw qchev::ZeroScaling("zero scaling in '" + token + "'");
  return qchev::NormalizedFactor{qchev::make_space(descriptor), scaling};
}

int run_analyze(const std::string& descriptor, const std::string& scale, const std::string& format, bool decimal) {
  qchev::AnalyzeOptions options;
  options.cap = qchev::enumeration_cap_from_env();
  options.scale = qchev::parse_rational(scale);
  if (options.scale == qchev::Rational(0)) throw qchev::ZeroScaling("--scale must be nonzero");
  const auto record = qchev::analyze(qchev::parse_descriptor(descriptor), options);
  if (format == "table")
    qchev::print_record_table(std::cout, record);
  else
    std::cout << qchev::to_json(record, decimal, true).dump(2) << '\n';
  return 0;
}

int run_atlas(int max_rank, const std::string& out, bool dedup, bool decimal) {
  qchev::AtlasOptions options;
  options.max_rank = max_rank;
  options.out = out;
  options.dedup = dedup;
  options.decimal = decimal;
  options.cap = qchev::enumeration_cap_from_env();
  const auto result = qchev::run_atlas(options);
  qchev::print_summary_table(std::cout, result.records);
  std::cout << result.records.size() << " records (" << result.skipped << " skipped) -> " << result.jsonl_path.string()
            << ", " << result.csv_path.string() << '\n';
  return result.lemma_violations == 0 ? 0 : kExitLemma;
}

int run_product(const std::vector<std::string>& tokens, const std::string& format, bool decimal) {
  std::vector<qchev::NormalizedFactor> factors;
  for (const auto& t : tokens) factors.push_back(parse_factor(t));
  const auto report = qchev::product_bound(factors);
  if (format == "table")
    qchev::print_bound_table(std::cout, report);
  else
    std::cout << qchev::to_json(report, decimal).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gromov width and Seshadri constant bounds for homogeneous spaces with b2 = 1"};
  app.require_subcommand(1);

  std::string descriptor, scale = "1", format = "json";
  bool decimal = false;
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline on one space, e.g. A3:2");
  analyze->add_option("descriptor", descriptor, "FAMILYrank:node, Bourbaki numbering")->required();
  analyze->add_option("--scale", scale, "Rational scaling of the normalized form");
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  analyze->add_flag("--decimal", decimal, "Add floating point renderings");

  int max_rank = 1;
  std::string out;
  bool dedup = false;
  auto* atlas = app.add_subcommand("atlas", "Sweep every b2 = 1 space up to a rank");
  atlas->add_option("--max-rank", max_rank)->required()->check(CLI::PositiveNumber);
  atlas->add_option("--out", out, "JSON-lines output; CSV and timing files are written beside it")->required();
  atlas->add_flag("--dedup", dedup, "Keep only canonical representatives under diagram automorphisms");
  atlas->add_flag("--decimal", decimal);

  std::vector<std::string> factors;
  auto* product = app.add_subcommand("product", "Bound a product: A1:1:1 A3:2:-1/2 any");
  product->add_option("factors", factors, "descriptor[:scaling] or 'any'")->required();
  product->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  product->add_flag("--decimal", decimal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(descriptor, scale, format, decimal);
    if (*atlas) return run_atlas(max_rank, out, dedup, decimal);
    if (*product) return run_product(factors, format, decimal);
  } catch (const qchev::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const qchev::LemmaViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitLemma;
  } catch (const qchev::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qchev::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
