#include "vabs/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace vabs {

namespace {

Json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return x;
}

// Shortest representation that reads back to the same double.
std::string exact(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string fixed4(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string route_status(const RouteComparison& c) {
  return c.premises_satisfied ? "premises satisfied" : "premises not satisfied";
}

Json stage_json(const StageReport& s) {
  Json j = Json::object();
  j["id"] = s.stage;
  j["input"] = s.input;
  j["output"] = s.output;
  j["entropy_in"] = num(s.entropy_in);
  j["entropy_out"] = num(s.entropy_out);
  j["alphabet_compression"] = num(s.alphabet_compression);
  j["potential_distortion"] = num(s.potential_distortion);
  j["cost"] = num(s.cost);
  j["benefit"] = num(s.benefit);
  j["ratio"] = num(s.ratio);
  return j;
}

Json cost_benefit_json(const CostBenefitReport& r) {
  Json j = Json::object();
  j["id"] = r.id;
  Json h = Json::object();
  for (const auto& [alphabet, bits] : r.entropies) h[alphabet] = num(bits);
  j["entropy"] = std::move(h);
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back(stage_json(s));
  j["stages"] = std::move(stages);
  j["alphabet_compression"] = num(r.alphabet_compression());
  j["potential_distortion"] = num(r.potential_distortion());
  j["benefit"] = num(r.benefit);
  j["cost"] = num(r.cost);
  j["ratio"] = num(r.ratio);
  j["telescoping_residual"] = num(r.telescoping_residual);
  return j;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "table") return ReportFormat::Table;
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

AxisReport analyze_axis(const AbstractionAxis& axis) {
  AxisReport r;
  r.id = axis.id();
  r.purpose = axis.purpose();
  for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
    const auto& a = axis.nodes()[i];
    const auto& b = axis.nodes()[i + 1];
    r.transitions.push_back(TransitionReport{i, a.id, b.id, a.information, b.information, classify_transition(axis, i)});
  }
  r.monotone_decreasing = is_monotone_decreasing(axis);
  return r;
}

Report analyze(const Scenario& scenario, const AnalyzeOptions& options) {
  if (options.pipeline && !scenario.pipelines.contains(*options.pipeline)) {
    throw ScenarioError("--pipeline", "unknown pipeline '" + *options.pipeline + "'");
  }
  Report report;
  report.title = scenario.meta.title;

  for (const auto& id : scenario.pipelines.ids()) {
    if (options.pipeline && id != *options.pipeline) continue;
    report.pipelines.push_back(pipeline_cost_benefit(*scenario.pipelines.find(id)));
  }
  for (const auto& route : scenario.direct_routes) {
    if (options.pipeline && route.pipeline != *options.pipeline) continue;
    report.routes.push_back(RouteReport{route.id, route.pipeline, route.stage,
                                        compare_routes(*scenario.pipelines.find(route.pipeline),
                                                       *scenario.stages.find(route.stage))});
  }
  if (!options.pipeline) report.judgments = scenario.judgments;

  std::vector<AbstractionAxis> selected;
  for (const auto& axis : scenario.axes) {
    if (options.axis && axis.id() != *options.axis) continue;
    selected.push_back(axis);
  }
  if (options.axis && selected.empty()) throw ScenarioError("--axis", "unknown axis '" + *options.axis + "'");
  if (!options.pipeline || options.axis) {
    for (const auto& axis : selected) report.axes.push_back(analyze_axis(axis));
    if (!options.axis) report.forks = detect_fork(scenario.axes);
  }
  return report;
}

Json to_json(const Report& report) {
  Json j = Json::object();
  j["scenario"] = report.title;
  if (!report.pipelines.empty()) {
    Json arr = Json::array();
    for (const auto& p : report.pipelines) arr.push_back(cost_benefit_json(p));
    j["pipelines"] = std::move(arr);
  }
  if (!report.routes.empty()) {
    Json arr = Json::array();
    for (const auto& r : report.routes) {
      const auto& c = r.comparison;
      Json o = Json::object();
      o["id"] = r.id;
      o["pipeline"] = r.pipeline;
      o["direct"] = r.direct;
      o["ac_via_vis"] = num(c.ac_via_vis);
      o["ac_direct"] = num(c.ac_direct);
      o["ac_identity_residual"] = num(c.ac_identity_residual);
      o["ac_identity_holds"] = c.ac_identity_holds;
      o["cost_via_vis"] = num(c.via_vis.cost);
      o["cost_direct"] = num(c.direct.cost);
      o["pd_via_vis"] = num(c.via_vis.potential_distortion());
      o["pd_direct"] = num(c.direct.potential_distortion());
      o["cost_premise"] = c.cost_premise;
      o["distortion_premise"] = c.distortion_premise;
      o["premises_satisfied"] = c.premises_satisfied;
      o["ratio_via_vis"] = num(c.via_vis.ratio);
      o["ratio_direct"] = num(c.direct.ratio);
      o["via_vis_more_cost_beneficial"] = c.via_vis_more_cost_beneficial;
      o["status"] = route_status(c);
      arr.push_back(std::move(o));
    }
    j["route_comparisons"] = std::move(arr);
  }
  if (!report.judgments.empty()) {
    Json arr = Json::array();
    for (const auto& jd : report.judgments) {
      Json o = Json::object();
      o["id"] = jd.id;
      o["condition_a"] = jd.condition_a;
      o["condition_b"] = std::string(to_string(jd.condition_b));
      o["score"] = jd.score();
      arr.push_back(std::move(o));
    }
    j["judgments"] = std::move(arr);
  }
  if (!report.axes.empty()) {
    Json arr = Json::array();
    for (const auto& a : report.axes) {
      Json o = Json::object();
      o["id"] = a.id;
      o["purpose"] = a.purpose;
      o["monotone_decreasing"] = a.monotone_decreasing;
      Json ts = Json::array();
      for (const auto& t : a.transitions) {
        Json tj = Json::object();
        tj["index"] = t.index;
        tj["from"] = t.from;
        tj["to"] = t.to;
        tj["information_from"] = num(t.information_from);
        tj["information_to"] = num(t.information_to);
        tj["classification"] = std::string(to_string(t.kind));
        ts.push_back(std::move(tj));
      }
      o["transitions"] = std::move(ts);
      arr.push_back(std::move(o));
    }
    j["axes"] = std::move(arr);
  }
  if (!report.forks.empty()) {
    Json arr = Json::array();
    for (const auto& f : report.forks) {
      Json o = Json::object();
      o["axis_a"] = f.axis_a;
      o["axis_b"] = f.axis_b;
      o["shared_prefix"] = f.shared_prefix;
      o["next_a"] = f.next_a;
      o["next_b"] = f.next_b;
      arr.push_back(std::move(o));
    }
    j["forks"] = std::move(arr);
  }
  return j;
}

namespace {

std::string render_csv(const Report& report) {
  std::ostringstream os;
  os << "section,id,field,value\n";
  auto row = [&](std::string_view section, std::string_view id, std::string_view field, const std::string& value) {
    os << section << ',' << csv_field(id) << ',' << csv_field(field) << ',' << csv_field(value) << '\n';
  };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

  for (const auto& p : report.pipelines) {
    for (const auto& [alphabet, bits] : p.entropies) row("pipeline", p.id, "entropy." + alphabet, exact(bits));
    for (const auto& s : p.stages) {
      const std::string pre = "stage." + s.stage + ".";
      row("pipeline", p.id, pre + "alphabet_compression", exact(s.alphabet_compression));
      row("pipeline", p.id, pre + "potential_distortion", exact(s.potential_distortion));
      row("pipeline", p.id, pre + "cost", exact(s.cost));
      row("pipeline", p.id, pre + "ratio", exact(s.ratio));
    }
    row("pipeline", p.id, "alphabet_compression", exact(p.alphabet_compression()));
    row("pipeline", p.id, "potential_distortion", exact(p.potential_distortion()));
    row("pipeline", p.id, "benefit", exact(p.benefit));
    row("pipeline", p.id, "cost", exact(p.cost));
    row("pipeline", p.id, "ratio", exact(p.ratio));
    row("pipeline", p.id, "telescoping_residual", exact(p.telescoping_residual));
  }
  for (const auto& r : report.routes) {
    const auto& c = r.comparison;
    row("route", r.id, "ac_identity_residual", exact(c.ac_identity_residual));
    row("route", r.id, "ac_identity_holds", flag(c.ac_identity_holds));
    row("route", r.id, "cost_premise", flag(c.cost_premise));
    row("route", r.id, "distortion_premise", flag(c.distortion_premise));
    row("route", r.id, "premises_satisfied", flag(c.premises_satisfied));
    row("route", r.id, "ratio_via_vis", exact(c.via_vis.ratio));
    row("route", r.id, "ratio_direct", exact(c.direct.ratio));
    row("route", r.id, "via_vis_more_cost_beneficial", flag(c.via_vis_more_cost_beneficial));
  }
  for (const auto& jd : report.judgments) row("judgment", jd.id, "score", std::to_string(jd.score()));
  for (const auto& a : report.axes) {
    for (const auto& t : a.transitions) {
      row("axis", a.id, "transition." + std::to_string(t.index), std::string(to_string(t.kind)));
    }
    row("axis", a.id, "monotone_decreasing", flag(a.monotone_decreasing));
  }
  for (const auto& f : report.forks) {
    row("fork", f.axis_a + "|" + f.axis_b, "after", f.shared_prefix.back());
  }
  return os.str();
}

std::string render_table(const Report& report) {
  std::ostringstream os;
  char line[512];
  if (!report.title.empty()) os << "Scenario: " << report.title << "\n";

  for (const auto& p : report.pipelines) {
    os << "\nPipeline " << p.id << "\n";
    std::snprintf(line, sizeof line, "  %-16s %-14s %10s %10s %10s %10s %10s %10s\n", "stage", "route", "H(in)",
                  "H(out)", "AC", "PD", "cost", "ratio");
    os << line;
    for (const auto& s : p.stages) {
      const std::string route = s.input + " -> " + s.output;
      std::snprintf(line, sizeof line, "  %-16s %-14s %10s %10s %10s %10s %10s %10s\n", s.stage.c_str(),
                    route.c_str(), fixed4(s.entropy_in).c_str(), fixed4(s.entropy_out).c_str(),
                    fixed4(s.alphabet_compression).c_str(), fixed4(s.potential_distortion).c_str(),
                    fixed4(s.cost).c_str(), fixed4(s.ratio).c_str());
      os << line;
    }
    os << "  entropy:";
    for (const auto& [alphabet, bits] : p.entropies) os << " H(" << alphabet << ")=" << fixed4(bits);
    os << "\n  total: AC=" << fixed4(p.alphabet_compression()) << " PD=" << fixed4(p.potential_distortion())
       << " benefit=" << fixed4(p.benefit) << " cost=" << fixed4(p.cost) << " ratio=" << fixed4(p.ratio) << "\n";
  }

  for (const auto& r : report.routes) {
    const auto& c = r.comparison;
    os << "\nRoute " << r.id << ": pipeline " << r.pipeline << " vs direct stage " << r.direct << "\n"
       << "  AC identity: " << fixed4(c.ac_via_vis) << " vs " << fixed4(c.ac_direct)
       << (c.ac_identity_holds ? " (holds)" : " (does not hold)") << "\n"
       << "  cost premise (" << fixed4(c.direct.cost) << " > " << fixed4(c.via_vis.cost)
       << "): " << (c.cost_premise ? "yes" : "no") << "\n"
       << "  distortion premise (" << fixed4(c.direct.potential_distortion()) << " > "
       << fixed4(c.via_vis.potential_distortion()) << "): " << (c.distortion_premise ? "yes" : "no") << "\n"
       << "  ratio via visualization " << fixed4(c.via_vis.ratio) << ", direct " << fixed4(c.direct.ratio) << ": "
       << (c.via_vis_more_cost_beneficial ? "visualization route more cost-beneficial"
                                          : "visualization route not more cost-beneficial")
       << "\n  status: " << route_status(c) << "\n";
  }

  if (!report.judgments.empty()) {
    os << "\nJudgments\n";
    for (const auto& jd : report.judgments) {
      std::snprintf(line, sizeof line, "  %-16s A=%-4s B=%-10s score %d\n", jd.id.c_str(),
                    jd.condition_a ? "yes" : "no", std::string(to_string(jd.condition_b)).c_str(), jd.score());
      os << line;
    }
  }

  for (const auto& a : report.axes) {
    os << "\nAxis " << a.id;
    if (!a.purpose.empty()) os << " (" << a.purpose << ")";
    os << "\n";
    for (const auto& t : a.transitions) {
      const std::string step = t.from + " -> " + t.to;
      std::snprintf(line, sizeof line, "  %2zu  %-36s %10s -> %-10s %s\n", t.index, step.c_str(),
                    fixed4(t.information_from).c_str(), fixed4(t.information_to).c_str(),
                    std::string(to_string(t.kind)).c_str());
      os << line;
    }
    os << "  monotone decreasing: " << (a.monotone_decreasing ? "yes" : "no") << "\n";
  }

  if (!report.forks.empty()) {
    os << "\nForks\n";
    for (const auto& f : report.forks) {
      os << "  " << f.axis_a << " / " << f.axis_b << " fork after '" << f.shared_prefix.back() << "' ("
         << f.next_a << " | " << f.next_b << ")\n";
    }
  }
  return os.str();
}

}  // namespace

std::string render(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return to_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Table: return render_table(report);
  }
  return {};
}

}  // namespace vabs
