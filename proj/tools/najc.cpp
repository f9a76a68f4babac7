// Command-line front end: analyze, generate, sweep, albanese, verify, path.

#include "najc/errors.hpp"
#include "najc/io.hpp"
#include "najc/report.hpp"
#include "najc/strings.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace najc;

constexpr int exit_ok = 0;
constexpr int exit_schema = 1;
constexpr int exit_degenerate = 2;
constexpr int exit_check_failed = 3;

void emit(const Json& doc, const std::string& out) {
  if (out.empty())
    std::cout << dump(doc);
  else
    write_json_file(out, doc);
}

Vector parse_params(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    parts.push_back(item);
  return parse_vector(parts);
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty())
    return out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    out.push_back(item);
  return out;
}

int run_analyze(const std::string& in, const std::string& report, const AnalyzeOptions& options) {
  const AnalysisInput input = read_input_file(in);
  emit(build_report(input, options), report);
  return exit_ok;
}

struct GenerateArgs {
  std::string family;
  std::string params;
  std::string labels;
  int n = 2;
  std::size_t d = 0;
  std::size_t delta = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  AnalysisInput input = [&] {
    if (a.family == "power")
      return generate_power(parse_params(a.params), split_labels(a.labels));
    if (a.family == "ci-line")
      return generate_ci_line(parse_params(a.params), a.n, split_labels(a.labels));
    if (a.family == "random")
      return generate_random(a.d, a.delta, a.seed);
    throw SchemaError("unknown family '" + a.family + "' (power, ci-line, random)");
  }();
  emit(input_to_json(input), a.out);
  if (!a.out.empty())
    std::cerr << "wrote " << a.out << " (family " << input.metadata.family.value_or("?")
              << ", d = " << input.config().size() << ", delta = " << input.ext.delta() << ")\n";
  return exit_ok;
}

int run_verify(const std::string& in, bool inject) {
  const AnalysisInput input = read_input_file(in);
  bool failed = false;
  for (const auto& r : najc::run_verify(input, inject)) {
    switch (r.status) {
      case CheckStatus::pass: std::cout << "PASS " << r.name << "\n"; break;
      case CheckStatus::skipped: std::cout << "SKIP " << r.name << ": " << r.detail << "\n"; break;
      case CheckStatus::fail:
        std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        failed = true;
        break;
    }
  }
  return failed ? exit_check_failed : exit_ok;
}

int run_path(const std::string& in, const std::string& steps, std::size_t multiplier) {
  const AnalysisInput input = read_input_file(in);
  const HodgeData hodge = analyze_hodge(input);
  const auto& dec = hodge.decomposition;
  const Path path = Path::parse(steps, build_graph(dec.weight()));
  if (multiplier >= dec.h0().rank())
    throw SchemaError("multiplier index exceeds dim H^0");
  const Vector t = dec.h0().basis().row_vector(multiplier);
  Json doc;
  doc["path"] = steps;
  doc["length"] = path.length();
  doc["total_shift"] = path.total_shift();
  doc["multiplier"] = to_json(t);
  doc["operator"] = to_json(path_operator(dec, path, {t}));
  std::cout << dump(doc);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  najc::apply_thread_cap_from_env();

  CLI::App app{"Exact Hodge-like decompositions, Higgs relations and cycle maps of point configurations"};
  app.require_subcommand(1);

  std::string in, out, report, steps;
  bool cycle = false, inject = false;
  int digits = 0;
  std::size_t samples = 100, multiplier = 0, weight = 0;
  std::uint64_t seed = 1;
  std::int64_t box = 10;
  GenerateArgs gen;

  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline on an input file");
  analyze->add_option("input", in, "AnalysisInput JSON")->required();
  analyze->add_option("--report", report, "Write the report here instead of stdout");
  analyze->add_flag("--cycle", cycle, "Include the cycle map and Albanese fragments");
  auto* digits_opt = analyze->add_option("--digits", digits, "Render exp() coefficients")
                       ->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "Write a generated AnalysisInput");
  generate->add_option("family", gen.family, "power | ci-line | random")->required();
  generate->add_option("--params", gen.params, "Comma-separated distinct rationals");
  generate->add_option("--labels", gen.labels, "Comma-separated point labels");
  generate->add_option("--n", gen.n, "Codimension for ci-line");
  generate->add_option("--d", gen.d, "Point count for random");
  generate->add_option("--delta", gen.delta, "Extension dimension for random");
  generate->add_option("--seed", gen.seed, "Seed for random");
  generate->add_option("--out", gen.out, "Output path (stdout if omitted)");

  auto* sweep = app.add_subcommand("sweep", "Sample classes alpha and tabulate weights");
  sweep->add_option("input", in, "AnalysisInput JSON")->required();
  sweep->add_option("--samples", samples, "Number of draws")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Generator seed");
  sweep->add_option("--box", box, "Coefficient box half-width");
  sweep->add_option("--out", out, "Output path (stdout if omitted)");

  auto* albanese = app.add_subcommand("albanese", "Toric checks of the Albanese for a weight");
  albanese->add_option("--weight", weight, "Weight w >= 2")->required();

  auto* verify = app.add_subcommand("verify", "Run every invariant check on an input");
  verify->add_option("input", in, "AnalysisInput JSON")->required();
  verify->add_flag("--inject-fault", inject, "Perturb the adapted basis (negative control)");

  auto* path = app.add_subcommand("path", "Evaluate a path operator on the trivalent graph");
  path->add_option("input", in, "AnalysisInput JSON")->required();
  path->add_option("--steps", steps, "Steps i:{0|+|-}:{f|r}, comma separated")->required();
  path->add_option("--multiplier", multiplier, "Index of the H^0 basis vector to use");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      AnalyzeOptions options;
      options.cycle = cycle;
      if (digits_opt->count() > 0)
        options.digits = digits;
      return run_analyze(in, report, options);
    }
    if (*generate)
      return run_generate(gen);
    if (*sweep) {
      emit(to_json(najc::sweep(read_input_file(in), samples, seed, box)), out);
      return exit_ok;
    }
    if (*albanese) {
      std::cout << dump(albanese_fragment(weight));
      return exit_ok;
    }
    if (*verify)
      return run_verify(in, inject);
    if (*path)
      return run_path(in, steps, multiplier);
  } catch (const NotRegular& e) {
    std::cerr << "NotRegular: witness " << e.label() << " (index " << e.witness() << ")\n";
    return exit_degenerate;
  } catch (const NotPolarizing& e) {
    std::cerr << "NotPolarizing: level " << e.level() << "\n";
    return exit_degenerate;
  } catch (const najc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_schema;
  }
  return exit_ok;
}
