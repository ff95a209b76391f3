#include "vabs/exemplars.hpp"

#include <array>
#include <string>

namespace vabs {

namespace {

constexpr std::array<std::string_view, 4> kNames{"barchart", "integer-plot", "random-plotter", "figure-scores"};

std::string joined_names() {
  std::string s;
  for (const auto n : kNames) s += (s.empty() ? "" : ", ") + std::string(n);
  return s;
}

Json grid(double min, double max, double step) { return Json{{"min", min}, {"max", max}, {"step", step}}; }

Json bars_alphabet() { return Json{{"id", "V"}, {"uniform_count", 1001}}; }

// A value in [0, 10000] at two decimals plotted as one bar on a 1000-pixel
// canvas, followed by a binary decision read off the bar height.
Json barchart() {
  Json threshold = Json::object();
  for (int h = 0; h <= 1000; ++h) threshold[std::to_string(h)] = h < 500 ? "below-500" : "at-or-above-500";

  Json doc = Json::object();
  doc["meta"] = Json{{"title", "single-value bar chart on a 1000-pixel canvas"},
                     {"point_of_view", Json{{"action", "query"}, {"target", "attributes"},
                                            {"refinement", "is the bar at least half the canvas?"}}}};
  doc["alphabets"] = Json::array({
      Json{{"id", "D"}, {"uniform_range", grid(0.0, 10000.0, 0.01)}},
      bars_alphabet(),
      Json{{"id", "T"}, {"letters", Json::array({Json{{"id", "below-500"}}, Json{{"id", "at-or-above-500"}}})}},
  });
  doc["channels"] = Json::array({
      Json{{"id", "plot"}, {"from", "D"}, {"to", "V"}, {"deterministic", Json{{"quantizer", Json{{"pixels", 1000}}}}}},
      Json{{"id", "threshold"}, {"from", "V"}, {"to", "T"}, {"deterministic", Json{{"map", threshold}}}},
  });
  doc["stages"] = Json::array({
      Json{{"id", "plot"}, {"forward", "plot"}, {"recon", "bayes"}, {"cost", 1.0}},
      Json{{"id", "decide"}, {"forward", "threshold"}, {"recon", "bayes"}, {"cost", 1.0}},
  });
  doc["pipelines"] = Json::array({Json{{"id", "d-v-t"}, {"stages", Json::array({"plot", "decide"})}, {"prior", "D"}}});
  return doc;
}

// Integers 0..100 on the same canvas: every value keeps its own bar height.
Json integer_plot() {
  Json doc = Json::object();
  doc["meta"] = Json{{"title", "integers 0..100 on a 1000-pixel canvas"}};
  doc["alphabets"] = Json::array({Json{{"id", "D"}, {"uniform_range", grid(0.0, 100.0, 1.0)}}, bars_alphabet()});
  doc["channels"] = Json::array(
      {Json{{"id", "plot"}, {"from", "D"}, {"to", "V"}, {"deterministic", Json{{"quantizer", Json{{"pixels", 1000}}}}}}});
  doc["stages"] = Json::array({Json{{"id", "plot"}, {"forward", "plot"}, {"recon", "bayes"}, {"cost", 1.0}}});
  doc["pipelines"] = Json::array({Json{{"id", "d-v"}, {"stages", Json::array({"plot"})}, {"prior", "D"}}});
  return doc;
}

// The same integers, but the plotter draws a bar of uniformly random height.
Json random_plotter() {
  Json rows = Json::object();
  for (int v = 0; v <= 100; ++v) rows[std::to_string(v)] = "uniform";

  Json doc = Json::object();
  doc["meta"] = Json{{"title", "integers 0..100 drawn as bars of random height"}};
  doc["alphabets"] = Json::array({Json{{"id", "D"}, {"uniform_range", grid(0.0, 100.0, 1.0)}}, bars_alphabet()});
  doc["channels"] =
      Json::array({Json{{"id", "plot"}, {"from", "D"}, {"to", "V"}, {"stochastic", Json{{"rows", rows}}}}});
  doc["stages"] = Json::array({Json{{"id", "plot"}, {"forward", "plot"}, {"recon", "bayes"}, {"cost", 1.0}}});
  doc["pipelines"] = Json::array({Json{{"id", "d-v"}, {"stages", Json::array({"plot"})}, {"prior", "D"}}});
  return doc;
}

// Condition A / B judgments for the eight example images and the
// spreadsheet baseline.
Json figure_scores() {
  struct Entry {
    const char* id;
    bool a;
    const char* b;
    const char* note;
  };
  constexpr Entry entries[] = {
      {"a", true, "satisfied", "metro map"},
      {"b", true, "satisfied", "pen-and-ink rendering"},
      {"c", true, "satisfied", "photo-realism reduced, counterpart easy to imagine"},
      {"d", true, "satisfied", "glyph-based depiction"},
      {"e", true, "na", "no photo-realistic counterpart to imagine"},
      {"f", true, "na", "no photo-realistic counterpart to imagine"},
      {"g", true, "negated", "more photo-realistic than its input"},
      {"h", true, "negated", "volume rendering, more photo-realistic than its input"},
      {"spreadsheet", false, "na", "reading the numbers or a statistical summary"},
  };
  Json judgments = Json::array();
  for (const auto& e : entries) {
    judgments.push_back(Json{{"id", e.id}, {"condition_a", e.a}, {"condition_b", e.b}, {"note", e.note}});
  }
  Json doc = Json::object();
  doc["meta"] = Json{{"title", "abstraction scores of eight example images"}};
  doc["judgments"] = std::move(judgments);
  return doc;
}

}  // namespace

UnknownExemplar::UnknownExemplar(std::string_view name)
    : Error("unknown exemplar '" + std::string(name) + "'; valid names: " + joined_names()) {}

std::span<const std::string_view> exemplar_names() { return kNames; }

Json exemplar_document(std::string_view name) {
  if (name == "barchart") return barchart();
  if (name == "integer-plot") return integer_plot();
  if (name == "random-plotter") return random_plotter();
  if (name == "figure-scores") return figure_scores();
  throw UnknownExemplar(name);
}

}  // namespace vabs
