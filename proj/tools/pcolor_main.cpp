#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pcolor/families.hpp"
#include "pcolor/io.hpp"
#include "pcolor/report.hpp"

namespace {

using namespace pcolor;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  std::string digits = text;
  if (!digits.empty() && digits[0] == 'F') {
    digits = digits.substr(digits.size() > 1 && digits[1] == '_' ? 2 : 1);
  }
  std::uint64_t p = 0;
  if (digits.empty()) throw Error("expected Q or F<p>, got '" + text + "'");
  for (char c : digits) {
    if (c < '0' || c > '9' || p > (std::uint64_t(1) << 62)) {
      throw Error("expected Q or F<p>, got '" + text + "'");
    }
    p = p * 10 + (c - '0');
  }
  return FieldSpec::prime_field(p);
}

int run(int argc, char** argv) {
  CLI::App app{"exact analysis of graded Poisson color algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  std::string method = "criterion";
  std::string example_name;
  std::string field_flag = "Q";
  bool assume_hypotheses = false;
  bool serial = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "algebra definition file, or - for stdin")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--serial", serial, "use the serial reference kernels");
  };

  CLI::App* check = app.add_subcommand("check", "run the axiom checker");
  add_common(check);

  CLI::App* decompose =
      app.add_subcommand("decompose", "partition the support and compute the ideals");
  add_common(decompose);

  CLI::App* simple = app.add_subcommand("simple", "decide simplicity");
  add_common(simple);
  simple->add_option("--method", method, "verdict method")
      ->check(CLI::IsMember({"criterion", "oracle"}));
  simple->add_flag("--assume-hypotheses", assume_hypotheses,
                   "apply the criterion even when its hypotheses fail (labeled unverified)");

  CLI::App* example = app.add_subcommand("example", "print a built-in example algebra");
  example->add_option("name", example_name, "built-in name")->required();
  example->add_option("--field", field_flag, "scalar field, Q or F<p>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (example->parsed()) {
    std::cout << serialize_algebra(builtin_example(example_name, parse_field_flag(field_flag)));
    return 0;
  }

  const ColorAlgebra algebra = parse_algebra(read_input(file));

  ReportOptions options;
  options.assume_hypotheses = assume_hypotheses;
  options.exec = serial ? Execution::serial : Execution::parallel;
  if (check->parsed()) options.stage = ReportStage::check;
  if (decompose->parsed()) options.stage = ReportStage::decompose;
  if (simple->parsed()) {
    options.stage = ReportStage::simple;
    options.method = method == "oracle" ? SimpleMethod::oracle : SimpleMethod::criterion;
  }

  const Report report = run_report(algebra, options);
  std::cout << (format == "json" ? render_json(report) : render_text(report));

  if (simple->parsed()) {
    return !report.simplicity.empty() && report.simplicity.front().simple ? 0 : 1;
  }
  return report.axioms.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
