#include "vabs/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace vabs {

ScenarioError::ScenarioError(std::string path, const std::string& message)
    : Error(path + ": " + message), path_(std::move(path)) {}

namespace {

constexpr std::size_t kMaxUniformCount = std::size_t{1} << 24;
constexpr double kInformationTolerance = 1e-9;

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw ScenarioError(path, message); }

// Runs f, re-raising library errors as ScenarioErrors located at `path`.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
// The document root is "$"; its members are named without a prefix.
std::string field(const std::string& path, std::string_view key) {
  return path == "$" ? std::string(key) : path + "." + std::string(key);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const auto a : allowed) known = known || key == a;
    if (!known) fail(field(path, key), "unknown key");
  }
}

const Json* optional_field(const Json& obj, std::string_view key) {
  const auto it = obj.find(std::string(key));
  return it == obj.end() ? nullptr : &*it;
}

const Json& required_field(const Json& obj, std::string_view key, const std::string& path) {
  const Json* j = optional_field(obj, key);
  if (!j) fail(field(path, key), "missing");
  return *j;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

// Ids may be written as text or as non-negative integers.
std::string as_id(const Json& j, const std::string& path) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.empty()) fail(path, "id must not be empty");
    return s;
  }
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    return std::to_string(j.get<std::uint64_t>());
  }
  fail(path, "expected a string or non-negative integer id");
}

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

const Json& section(const Json& doc, std::string_view key) {
  static const Json empty = Json::array();
  const Json* j = optional_field(doc, key);
  if (!j) return empty;
  return as_array(*j, std::string(key));
}

std::string unique_id(const Json& obj, const std::string& path, std::set<std::string>& seen) {
  auto id = as_id(required_field(obj, "id", path), field(path, "id"));
  if (!seen.insert(id).second) fail(field(path, "id"), "duplicate id '" + id + "'");
  return id;
}

template <class T>
const T& resolve(const Table<T>& table, const Json& ref, const std::string& path, std::string_view what) {
  const auto id = as_id(ref, path);
  const T* found = table.find(id);
  if (!found) fail(path, "unknown " + std::string(what) + " '" + id + "'");
  return *found;
}

std::string violations_text(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

PointOfView parse_point_of_view(const Json& j, const std::string& path, Json& canon) {
  require_object(j, path);
  check_keys(j, path, {"action", "target", "refinement"});
  const auto action_text = as_string(required_field(j, "action", path), field(path, "action"));
  const auto target_text = as_string(required_field(j, "target", path), field(path, "target"));
  const auto action = parse_action(action_text);
  if (!action) fail(field(path, "action"), "expected analyze, search or query");
  const auto target = parse_target(target_text);
  if (!target) fail(field(path, "target"), "expected data, attributes, networks or spatial");
  PointOfView pov{*action, *target, {}};
  canon = Json::object();
  canon["action"] = action_text;
  canon["target"] = target_text;
  if (const Json* r = optional_field(j, "refinement")) {
    pov.refinement = as_string(*r, field(path, "refinement"));
    canon["refinement"] = pov.refinement;
  }
  return pov;
}

// ---------------------------------------------------------------------------

Alphabet parse_alphabet(const Json& j, const std::string& path, std::set<std::string>& seen, Json& canon) {
  require_object(j, path);
  check_keys(j, path, {"id", "letters", "uniform_count", "uniform_range"});
  const auto id = unique_id(j, path, seen);
  canon = Json::object();
  canon["id"] = id;

  const Json* letters = optional_field(j, "letters");
  const Json* count = optional_field(j, "uniform_count");
  const Json* range = optional_field(j, "uniform_range");
  if ((letters != nullptr) + (count != nullptr) + (range != nullptr) != 1) {
    fail(path, "declare exactly one of letters, uniform_count, uniform_range");
  }

  if (count) {
    const auto p = field(path, "uniform_count");
    if (!count->is_number_integer() || count->get<std::int64_t>() < 1) fail(p, "expected a positive integer");
    const auto n = count->get<std::uint64_t>();
    if (n > kMaxUniformCount) fail(p, "at most " + std::to_string(kMaxUniformCount) + " letters");
    std::vector<Letter> ls(n);
    for (std::size_t i = 0; i < n; ++i) ls[i].id = std::to_string(i);
    canon["uniform_count"] = n;
    return at_path(p, [&] { return make_uniform(std::move(ls), id); });
  }

  if (range) {
    const auto p = field(path, "uniform_range");
    require_object(*range, p);
    check_keys(*range, p, {"min", "max", "step"});
    const double min = as_number(required_field(*range, "min", p), field(p, "min"));
    const double max = as_number(required_field(*range, "max", p), field(p, "max"));
    const double step = as_number(required_field(*range, "step", p), field(p, "step"));
    canon["uniform_range"] = Json{{"min", min}, {"max", max}, {"step", step}};
    return at_path(p, [&] { return make_quantized_range(min, max, step, id); });
  }

  const auto p = field(path, "letters");
  as_array(*letters, p);
  if (letters->empty()) fail(p, "letter list is empty");
  std::vector<Letter> ls;
  std::map<std::string, double> mass;
  std::size_t with_p = 0;
  Json canon_letters = Json::array();
  for (std::size_t i = 0; i < letters->size(); ++i) {
    const Json& l = (*letters)[i];
    const auto lp = item(p, i);
    require_object(l, lp);
    check_keys(l, lp, {"id", "p", "label"});
    Letter letter{as_id(required_field(l, "id", lp), field(lp, "id")), std::nullopt};
    Json cl = Json::object();
    cl["id"] = letter.id;
    if (const Json* pj = optional_field(l, "p")) {
      const double v = as_number(*pj, field(lp, "p"));
      mass[letter.id] = v;
      cl["p"] = v;
      ++with_p;
    }
    if (const Json* lab = optional_field(l, "label")) {
      letter.label = as_string(*lab, field(lp, "label"));
      cl["label"] = *letter.label;
    }
    canon_letters.push_back(std::move(cl));
    ls.push_back(std::move(letter));
  }
  if (with_p != 0 && with_p != ls.size()) fail(p, "give p for every letter or for none");
  canon["letters"] = std::move(canon_letters);

  auto set = at_path(p, [&] { return LetterSet::make(std::move(ls)); });
  Pmf pmf = with_p == 0 ? Pmf::uniform(set) : Pmf::from_map(set, mass);
  Alphabet a(id, set, std::move(pmf));
  if (auto v = validate(a); !v.empty()) fail(p, violations_text(v));
  return a;
}

Channel parse_channel(const Json& j, const std::string& path, const Table<Alphabet>& alphabets,
                      std::set<std::string>& seen, Json& canon) {
  require_object(j, path);
  check_keys(j, path, {"id", "from", "to", "deterministic", "stochastic"});
  const auto id = unique_id(j, path, seen);
  const Alphabet& from = resolve(alphabets, required_field(j, "from", path), field(path, "from"), "alphabet");
  const Alphabet& to = resolve(alphabets, required_field(j, "to", path), field(path, "to"), "alphabet");
  canon = Json{{"id", id}, {"from", from.id()}, {"to", to.id()}};

  const Json* det = optional_field(j, "deterministic");
  const Json* sto = optional_field(j, "stochastic");
  if ((det != nullptr) == (sto != nullptr)) fail(path, "declare exactly one of deterministic, stochastic");

  if (det) {
    const auto p = field(path, "deterministic");
    require_object(*det, p);
    check_keys(*det, p, {"map", "quantizer"});
    const Json* map = optional_field(*det, "map");
    const Json* quant = optional_field(*det, "quantizer");
    if ((map != nullptr) == (quant != nullptr)) fail(p, "declare exactly one of map, quantizer");
    if (quant) {
      const auto qp = field(p, "quantizer");
      require_object(*quant, qp);
      check_keys(*quant, qp, {"pixels"});
      const Json& px = required_field(*quant, "pixels", qp);
      if (!px.is_number_integer() || px.get<std::int64_t>() < 1 || px.get<std::int64_t>() > (1 << 22)) {
        fail(field(qp, "pixels"), "expected a positive integer");
      }
      const auto pixels = px.get<std::uint32_t>();
      canon["deterministic"] = Json{{"quantizer", Json{{"pixels", pixels}}}};
      return at_path(p, [&] { return Channel::quantizer(id, from, to, pixels); });
    }
    const auto mp = field(p, "map");
    require_object(*map, mp);
    if (from.size() > kMaxDeterministicLetters) fail(mp, "input alphabet too large for a deterministic channel");
    std::vector<std::int64_t> image(from.size(), -1);
    for (const auto& [key, value] : map->items()) {
      const auto in = from.letters()->find(key);
      if (!in) fail(field(mp, key), "unknown letter of alphabet '" + from.id() + "'");
      const auto out_id = as_id(value, field(mp, key));
      const auto out = to.letters()->find(out_id);
      if (!out) fail(field(mp, key), "unknown letter '" + out_id + "' of alphabet '" + to.id() + "'");
      image[*in] = static_cast<std::int64_t>(*out);
    }
    std::vector<std::uint32_t> img(from.size());
    Json canon_map = Json::object();
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] < 0) fail(mp, "input letter '" + from.letters()->id(i) + "' has no image");
      img[i] = static_cast<std::uint32_t>(image[i]);
      canon_map[from.letters()->id(i)] = to.letters()->id(img[i]);
    }
    canon["deterministic"] = Json{{"map", std::move(canon_map)}};
    return at_path(p, [&] { return Channel::deterministic(id, from, to, std::move(img)); });
  }

  const auto p = field(path, "stochastic");
  require_object(*sto, p);
  check_keys(*sto, p, {"rows"});
  const auto rp = field(p, "rows");
  const Json& rows = required_field(*sto, "rows", p);
  require_object(rows, rp);
  if (from.size() > kMaxStochasticLetters || to.size() > kMaxStochasticLetters) {
    fail(p, "stochastic channels are limited to " + std::to_string(kMaxStochasticLetters) + " letters per alphabet");
  }
  std::vector<std::optional<std::vector<Outcome>>> parsed(from.size());
  std::vector<const Json*> raw(from.size(), nullptr);
  for (const auto& [key, value] : rows.items()) {
    const auto kp = field(rp, key);
    const auto in = from.letters()->find(key);
    if (!in) fail(kp, "unknown letter of alphabet '" + from.id() + "'");
    std::vector<Outcome> row;
    if (value.is_string()) {
      if (value.get<std::string>() != "uniform") fail(kp, "expected \"uniform\", an array, or an object");
      for (std::size_t k = 0; k < to.size(); ++k) {
        row.push_back(Outcome{static_cast<std::uint32_t>(k), 1.0 / static_cast<double>(to.size())});
      }
    } else if (value.is_array()) {
      if (value.size() != to.size()) {
        fail(kp, "dense row needs " + std::to_string(to.size()) + " entries, got " + std::to_string(value.size()));
      }
      for (std::size_t k = 0; k < value.size(); ++k) {
        row.push_back(Outcome{static_cast<std::uint32_t>(k), as_number(value[k], item(kp, k))});
      }
    } else if (value.is_object()) {
      for (const auto& [out_id, pv] : value.items()) {
        const auto out = to.letters()->find(out_id);
        if (!out) fail(field(kp, out_id), "unknown letter of alphabet '" + to.id() + "'");
        row.push_back(Outcome{static_cast<std::uint32_t>(*out), as_number(pv, field(kp, out_id))});
      }
    } else {
      fail(kp, "expected \"uniform\", an array, or an object");
    }
    parsed[*in] = std::move(row);
    raw[*in] = &value;
  }
  std::vector<std::vector<Outcome>> sparse(from.size());
  Json canon_rows = Json::object();
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (!parsed[i]) fail(rp, "input letter '" + from.letters()->id(i) + "' has no row");
    sparse[i] = std::move(*parsed[i]);
    canon_rows[from.letters()->id(i)] = *raw[i];
  }
  canon["stochastic"] = Json{{"rows", std::move(canon_rows)}};
  return at_path(p, [&] { return Channel::stochastic(id, from, to, std::move(sparse)); });
}

Stage parse_stage(const Json& j, const std::string& path, const Scenario& s, std::set<std::string>& seen,
                  Json& canon) {
  require_object(j, path);
  check_keys(j, path, {"id", "forward", "recon", "cost"});
  const auto id = unique_id(j, path, seen);
  const Channel& forward = resolve(s.channels, required_field(j, "forward", path), field(path, "forward"), "channel");
  const double cost = as_number(required_field(j, "cost", path), field(path, "cost"));
  if (cost < 0) fail(field(path, "cost"), "cost must be non-negative");
  canon = Json{{"id", id}, {"forward", forward.id()}};

  const auto rp = field(path, "recon");
  const Json& recon = required_field(j, "recon", path);
  Reconstruction r = BayesReconstruction{};
  if (recon.is_string() && recon.get<std::string>() == "bayes") {
    canon["recon"] = "bayes";
  } else if (recon.is_object()) {
    check_keys(recon, rp, {"pmf"});
    const Alphabet& q = resolve(s.alphabets, required_field(recon, "pmf", rp), field(rp, "pmf"), "alphabet");
    if (!same_letters(q.letters(), forward.from())) {
      fail(field(rp, "pmf"), "alphabet '" + q.id() + "' does not share the letters of '" + forward.from_id() + "'");
    }
    r = SuppliedReconstruction{Pmf(forward.from(), std::vector<double>(q.pmf().mass().begin(), q.pmf().mass().end()))};
    canon["recon"] = Json{{"pmf", q.id()}};
  } else {
    const Channel& rc = resolve(s.channels, recon, rp, "channel");
    r = ReconstructionChannel(rc);
    canon["recon"] = rc.id();
  }
  canon["cost"] = cost;
  return at_path(path, [&] { return Stage(id, forward, std::move(r), cost); });
}

Pipeline parse_pipeline(const Json& j, const std::string& path, const Scenario& s, std::set<std::string>& seen,
                        Json& canon) {
  require_object(j, path);
  check_keys(j, path, {"id", "stages", "prior"});
  const auto id = unique_id(j, path, seen);
  const auto sp = field(path, "stages");
  const Json& ids = as_array(required_field(j, "stages", path), sp);
  if (ids.empty()) fail(sp, "a pipeline needs at least one stage");
  std::vector<Stage> stages;
  Json canon_stages = Json::array();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Stage& st = resolve(s.stages, ids[i], item(sp, i), "stage");
    stages.push_back(st);
    canon_stages.push_back(st.id());
  }
  const Channel& first = stages.front().forward();
  const Alphabet* prior_alphabet = s.alphabets.find(first.from_id());
  if (const Json* pj = optional_field(j, "prior")) {
    prior_alphabet = &resolve(s.alphabets, *pj, field(path, "prior"), "alphabet");
    if (!same_letters(prior_alphabet->letters(), first.from())) {
      fail(field(path, "prior"), "alphabet '" + prior_alphabet->id() + "' does not share the letters of '" +
                                     first.from_id() + "'");
    }
  }
  canon = Json{{"id", id}, {"stages", std::move(canon_stages)}, {"prior", prior_alphabet->id()}};
  const auto& m = prior_alphabet->pmf().mass();
  Pmf prior(first.from(), std::vector<double>(m.begin(), m.end()));
  return at_path(path, [&] { return Pipeline(id, std::move(stages), std::move(prior)); });
}

AbstractionAxis parse_axis(const Json& j, const std::string& path, const Scenario& s, std::set<std::string>& seen,
                           Json& canon) {
  require_object(j, path);
  check_keys(j, path, {"id", "purpose", "nodes"});
  const auto id = unique_id(j, path, seen);
  std::string purpose;
  if (const Json* pj = optional_field(j, "purpose")) purpose = as_string(*pj, field(path, "purpose"));
  const auto np = field(path, "nodes");
  const Json& nodes = as_array(required_field(j, "nodes", path), np);

  std::vector<RepresentationNode> out;
  Json canon_nodes = Json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Json& n = nodes[i];
    const auto p = item(np, i);
    require_object(n, p);
    check_keys(n, p, {"id", "kind", "alphabet", "information", "attributes"});
    RepresentationNode node;
    node.id = as_id(required_field(n, "id", p), field(p, "id"));
    Json cn = Json{{"id", node.id}};
    std::string kind_text = "visual";
    if (const Json* k = optional_field(n, "kind")) kind_text = as_string(*k, field(p, "kind"));
    const auto kind = parse_representation_kind(kind_text);
    if (!kind) fail(field(p, "kind"), "expected data or visual");
    node.kind = *kind;
    cn["kind"] = kind_text;

    const Json* info = optional_field(n, "information");
    if (const Json* aj = optional_field(n, "alphabet")) {
      const Alphabet& a = resolve(s.alphabets, *aj, field(p, "alphabet"), "alphabet");
      node.alphabet = a.id();
      node.information = entropy(a);
      if (info && std::abs(as_number(*info, field(p, "information")) - node.information) > kInformationTolerance) {
        fail(field(p, "information"), "does not match the entropy of alphabet '" + a.id() + "'");
      }
      cn["alphabet"] = a.id();
    } else {
      if (!info) fail(field(p, "information"), "missing (no alphabet given)");
      node.information = as_number(*info, field(p, "information"));
      cn["information"] = node.information;
    }
    Json tags = Json::array();
    if (const Json* attrs = optional_field(n, "attributes")) {
      as_array(*attrs, field(p, "attributes"));
      for (std::size_t k = 0; k < attrs->size(); ++k) {
        node.attributes.insert(as_string((*attrs)[k], item(field(p, "attributes"), k)));
      }
    }
    for (const auto& t : node.attributes) tags.push_back(t);
    cn["attributes"] = std::move(tags);
    canon_nodes.push_back(std::move(cn));
    out.push_back(std::move(node));
  }
  canon = Json{{"id", id}, {"purpose", purpose}, {"nodes", std::move(canon_nodes)}};
  return at_path(path, [&] { return build_axis(id, std::move(out), purpose); });
}

}  // namespace

Scenario parse_scenario(const Json& doc) {
  require_object(doc, "$");
  check_keys(doc, "$",
             {"alphabets", "channels", "stages", "pipelines", "direct_routes", "judgments", "axes", "meta"});

  Scenario s;
  Json canon = Json::object();

  if (const Json* meta = optional_field(doc, "meta")) {
    require_object(*meta, "meta");
    check_keys(*meta, "meta", {"title", "point_of_view", "intent"});
    Json cm = Json::object();
    if (const Json* t = optional_field(*meta, "title")) cm["title"] = s.meta.title = as_string(*t, "meta.title");
    if (const Json* pov = optional_field(*meta, "point_of_view")) {
      Json cp;
      s.meta.point_of_view = parse_point_of_view(*pov, "meta.point_of_view", cp);
      cm["point_of_view"] = std::move(cp);
    }
    if (const Json* in = optional_field(*meta, "intent")) cm["intent"] = s.meta.intent = as_string(*in, "meta.intent");
    canon["meta"] = std::move(cm);
  }

  auto each = [&](std::string_view key, auto&& parse_one) {
    const Json& arr = section(doc, key);
    Json out = Json::array();
    std::set<std::string> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Json c;
      parse_one(arr[i], item(std::string(key), i), seen, c);
      out.push_back(std::move(c));
    }
    canon[std::string(key)] = std::move(out);
  };

  each("alphabets", [&](const Json& j, const std::string& p, std::set<std::string>& seen, Json& c) {
    Alphabet a = parse_alphabet(j, p, seen, c);
    const std::string id = a.id();
    s.alphabets.add(id, std::move(a));
  });
  each("channels", [&](const Json& j, const std::string& p, std::set<std::string>& seen, Json& c) {
    Channel ch = parse_channel(j, p, s.alphabets, seen, c);
    const std::string id = ch.id();
    s.channels.add(id, std::move(ch));
  });
  each("stages", [&](const Json& j, const std::string& p, std::set<std::string>& seen, Json& c) {
    Stage st = parse_stage(j, p, s, seen, c);
    const std::string id = st.id();
    s.stages.add(id, std::move(st));
  });
  each("pipelines", [&](const Json& j, const std::string& p, std::set<std::string>& seen, Json& c) {
    Pipeline pl = parse_pipeline(j, p, s, seen, c);
    const std::string id = pl.id();
    s.pipelines.add(id, std::move(pl));
  });
  each("direct_routes", [&](const Json& j, const std::string& p, std::set<std::string>& seen, Json& c) {
    require_object(j, p);
    check_keys(j, p, {"id", "stage", "pipeline"});
    DirectRoute r;
    r.id = unique_id(j, p, seen);
    const Stage& st = resolve(s.stages, required_field(j, "stage", p), field(p, "stage"), "stage");
    const Pipeline& pl = resolve(s.pipelines, required_field(j, "pipeline", p), field(p, "pipeline"), "pipeline");
    r.stage = st.id();
    r.pipeline = pl.id();
    if (!same_letters(st.forward().from(), pl.stages().front().forward().from()) ||
        !same_letters(st.forward().to(), pl.stages().back().forward().to())) {
      fail(p, "stage '" + st.id() + "' and pipeline '" + pl.id() + "' do not share endpoint alphabets");
    }
    c = Json{{"id", r.id}, {"stage", r.stage}, {"pipeline", r.pipeline}};
    s.direct_routes.push_back(std::move(r));
  });
  each("judgments", [&](const Json& j, const std::string& p, std::set<std::string>& seen, Json& c) {
    require_object(j, p);
    check_keys(j, p, {"id", "condition_a", "condition_b", "point_of_view", "note"});
    AbstractionJudgment jd;
    jd.id = unique_id(j, p, seen);
    jd.condition_a = as_bool(required_field(j, "condition_a", p), field(p, "condition_a"));
    const auto b = as_string(required_field(j, "condition_b", p), field(p, "condition_b"));
    const auto cb = parse_condition_b(b);
    if (!cb) fail(field(p, "condition_b"), "expected satisfied, na or negated");
    jd.condition_b = *cb;
    c = Json{{"id", jd.id}, {"condition_a", jd.condition_a}, {"condition_b", std::string(to_string(*cb))}};
    if (const Json* pov = optional_field(j, "point_of_view")) {
      Json cp;
      jd.point_of_view = parse_point_of_view(*pov, field(p, "point_of_view"), cp);
      c["point_of_view"] = std::move(cp);
    }
    if (const Json* note = optional_field(j, "note")) c["note"] = jd.note = as_string(*note, field(p, "note"));
    s.judgments.push_back(std::move(jd));
  });
  each("axes", [&](const Json& j, const std::string& p, std::set<std::string>& seen, Json& c) {
    s.axes.push_back(parse_axis(j, p, s, seen, c));
  });

  s.document = std::move(canon);
  return s;
}

Scenario parse_scenario_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail("$", std::string("parse error: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("$", "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

const Json& serialize(const Scenario& scenario) { return scenario.document; }

}  // namespace vabs
