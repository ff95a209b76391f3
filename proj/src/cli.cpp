#include "vabs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "vabs/cost_benefit.hpp"
#include "vabs/exemplars.hpp"
#include "vabs/report.hpp"
#include "vabs/scenario.hpp"

namespace vabs {

namespace {

// Bad user input: reported with exit code 1.
struct InputError : Error {
  using Error::Error;
};

Scenario read_scenario(const std::string& file, std::istream& in) {
  if (file != "-") return load_scenario(file);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_scenario_text(text);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("--out: cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw InputError("--out: write to '" + path + "' failed");
}

ReportFormat format_of(const std::string& text) {
  // The CLI11 validator already restricts the choices.
  return parse_report_format(text).value_or(ReportFormat::Table);
}

std::string describe(const ValidationError& e) {
  std::string s = e.what();
  for (const auto& v : e.violations()) {
    if (s.find(v) == std::string::npos) s += "\n  " + v;
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information-theoretic analysis of visual abstraction scenarios", "vabs"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"table", "json", "csv"});

  std::string file;
  std::string out_path;
  std::string format = "table";
  std::string pipeline;
  std::string axis_id;
  std::string exemplar_name;
  std::string cond_a;
  std::string cond_b;

  auto* analyze_cmd = app.add_subcommand("analyze", "Cost-benefit, route, score and axis report for a scenario");
  analyze_cmd->add_option("file", file, "Scenario file, or - for standard input")->required();
  analyze_cmd->add_option("--pipeline", pipeline, "Only this pipeline and its routes");
  analyze_cmd->add_option("--format", format, "table, json or csv")->check(formats);
  analyze_cmd->add_option("--out", out_path, "Write the report here instead of standard output");

  auto* exemplar_cmd = app.add_subcommand("exemplar", "Print a built-in scenario");
  exemplar_cmd->add_option("name", exemplar_name, "barchart, integer-plot, random-plotter or figure-scores")
      ->required();
  exemplar_cmd->add_option("--out", out_path, "Write the scenario here instead of standard output");

  auto* score_cmd = app.add_subcommand("score", "Abstraction score from conditions A and B");
  score_cmd->add_option("--condition-a", cond_a, "yes or no")->required()->check(CLI::IsMember({"yes", "no"}));
  score_cmd->add_option("--condition-b", cond_b, "satisfied, na or negated")
      ->required()
      ->check(CLI::IsMember({"satisfied", "na", "negated"}));

  auto* axis_cmd = app.add_subcommand("axis", "Classify the transitions of abstraction axes");
  axis_cmd->add_option("file", file, "Scenario file, or - for standard input")->required();
  axis_cmd->add_option("--axis", axis_id, "Only this axis");
  axis_cmd->add_option("--format", format, "table, json or csv")->check(formats);

  auto* validate_cmd = app.add_subcommand("validate", "Load a scenario and report whether it is valid");
  validate_cmd->add_option("file", file, "Scenario file, or - for standard input")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (analyze_cmd->parsed()) {
      const auto scenario = read_scenario(file, in);
      AnalyzeOptions options;
      if (!pipeline.empty()) options.pipeline = pipeline;
      emit(render(analyze(scenario, options), format_of(format)), out_path, out);
    } else if (exemplar_cmd->parsed()) {
      emit(exemplar_document(exemplar_name).dump(2) + "\n", out_path, out);
    } else if (score_cmd->parsed()) {
      const auto b = parse_condition_b(cond_b);
      out << abstraction_score(cond_a == "yes", *b) << "\n";
    } else if (axis_cmd->parsed()) {
      const auto scenario = read_scenario(file, in);
      if (scenario.axes.empty()) throw ScenarioError("axes", "scenario declares no axes");
      Report report;
      report.title = scenario.meta.title;
      for (const auto& axis : scenario.axes) {
        if (!axis_id.empty() && axis.id() != axis_id) continue;
        report.axes.push_back(analyze_axis(axis));
      }
      if (report.axes.empty()) throw ScenarioError("--axis", "unknown axis '" + axis_id + "'");
      if (axis_id.empty()) report.forks = detect_fork(scenario.axes);
      out << render(report, format_of(format));
    } else if (validate_cmd->parsed()) {
      const auto s = read_scenario(file, in);
      out << "valid: " << s.alphabets.size() << " alphabets, " << s.channels.size() << " channels, "
          << s.stages.size() << " stages, " << s.pipelines.size() << " pipelines, " << s.direct_routes.size()
          << " direct routes, " << s.judgments.size() << " judgments, " << s.axes.size() << " axes\n";
    }
    return 0;
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << describe(e) << "\n";
    return 1;
  } catch (const UnknownExemplar& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vabs
