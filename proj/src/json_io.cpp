#include "qnb/json_io.hpp"

#include <algorithm>

#include "qnb/error.hpp"

namespace qnb {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + path + "': " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) field_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

template <typename T>
T as(const Json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    field_error(path, "has the wrong type");
  }
}

Json space_to_json(const CellSpace& space) {
  Json out = Json::array();
  for (Site s = 0; s < space.size(); ++s) out.push_back(Json::array({space.id(s), space.alphabet_size(s)}));
  return out;
}

SpacePtr space_from_json(const Json& j, bool ring, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected a list of [id, size] pairs");
  std::vector<SiteSpec> specs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) field_error(p, "expected [id, size]");
    const auto size = as<long long>(j[i][1], p + "[1]");
    if (size < 1 || size > UINT32_MAX) field_error(p + "[1]", "alphabet size out of range");
    specs.push_back({as<std::string>(j[i][0], p + "[0]"), static_cast<std::uint32_t>(size)});
  }
  if (!ring) return CellSpace::make(std::move(specs));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].id != std::to_string(i) || specs[i].alphabet_size != specs[0].alphabet_size) {
      field_error(path, "ring cells must be labelled 0..n-1 with one alphabet size");
    }
  }
  if (specs.empty()) field_error(path, "ring needs at least one cell");
  return CellSpace::ring(specs.size(), specs[0].alphabet_size);
}

Json poly_to_json(const LocalPoly& poly) {
  Json out = Json::array();
  for (const auto& term : poly) {
    Json t = Json::array();
    for (const auto& v : term) t.push_back(Json::array({v.offset, v.bit}));
    out.push_back(std::move(t));
  }
  return out;
}

LocalRule rule_from_json(const Json& j, unsigned layers, const std::string& path) {
  if (!j.is_array() || j.size() != layers) field_error(path, "expected one polynomial per layer bit");
  LocalRule rule{layers, {}};
  for (std::size_t b = 0; b < j.size(); ++b) {
    const auto pb = path + "[" + std::to_string(b) + "]";
    if (!j[b].is_array()) field_error(pb, "expected a list of monomials");
    LocalPoly poly;
    for (std::size_t m = 0; m < j[b].size(); ++m) {
      const auto pm = pb + "[" + std::to_string(m) + "]";
      if (!j[b][m].is_array()) field_error(pm, "expected a list of [offset, bit]");
      LocalTerm term;
      for (std::size_t v = 0; v < j[b][m].size(); ++v) {
        const auto pv = pm + "[" + std::to_string(v) + "]";
        const auto& var = j[b][m][v];
        if (!var.is_array() || var.size() != 2) field_error(pv, "expected [offset, bit]");
        const auto bit = as<long>(var[1], pv + "[1]");
        if (bit < 0 || bit >= static_cast<long>(layers)) field_error(pv + "[1]", "bit out of range");
        term.push_back({as<int>(var[0], pv + "[0]"), static_cast<unsigned>(bit)});
      }
      poly.push_back(std::move(term));
    }
    rule.outputs.push_back(std::move(poly));
  }
  return rule;
}

std::optional<Interval> relative_arc(const SiteSet& s, Site origin) {
  if (!s.space()->is_ring() || origin >= s.space()->size()) return std::nullopt;
  return s.arc_relative_to(origin);
}

Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

}  // namespace

Json descriptor_to_json(const MapDescriptor& d) {
  Json params = Json::object();
  for (const auto& [k, v] : d.params) params[k] = v;
  return Json{{"family", d.family}, {"params", params}, {"detail", d.detail}};
}

MapDescriptor descriptor_from_json(const Json& j) {
  MapDescriptor d;
  d.family = as<std::string>(field(j, "family", "descriptor"), "descriptor.family");
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) field_error("descriptor.params", "expected an object");
    for (const auto& [k, v] : it->items()) d.params[k] = as<long>(v, "descriptor.params." + k);
  }
  if (auto it = j.find("detail"); it != j.end()) d.detail = as<std::string>(*it, "descriptor.detail");
  return d;
}

Json map_to_json(const BlockMap& f) { return map_to_json(f, MapFormat::rule); }

Json map_to_json(const BlockMap& f, MapFormat format, std::uint64_t max_words) {
  const auto dim = f.domain()->total_dim();
  bool table = f.is_explicit() || format == MapFormat::explicit_table ||
               (format == MapFormat::automatic && dim && *dim <= max_words);
  Json out{{"domain", space_to_json(*f.domain())},
           {"codomain", space_to_json(*f.codomain())},
           {"ring", f.domain()->is_ring()},
           {"descriptor", descriptor_to_json(f.descriptor())}};
  if (table) {
    out["kind"] = "explicit";
    out["table"] = tabulate(f).table();
    return out;
  }
  const auto& form = f.ring();
  Json rule{{"layers", form.layers}};
  Json outputs = Json::array();
  for (const auto& poly : form.local_rule().outputs) outputs.push_back(poly_to_json(poly));
  rule["outputs"] = std::move(outputs);
  if (form.inverse) {
    Json inverse = Json::array();
    for (const auto& poly : form.local_rule(true).outputs) inverse.push_back(poly_to_json(poly));
    rule["inverse"] = std::move(inverse);
  }
  out["kind"] = "rule";
  out["rule"] = std::move(rule);
  return out;
}

BlockMap map_from_json(const Json& j) {
  if (!j.is_object()) field_error("", "a map file must hold a JSON object");
  bool ring = false;
  if (auto it = j.find("ring"); it != j.end()) ring = as<bool>(*it, "ring");
  const auto kind = as<std::string>(field(j, "kind", ""), "kind");
  MapDescriptor descriptor{"explicit", {}, {}};
  if (auto it = j.find("descriptor"); it != j.end()) descriptor = descriptor_from_json(*it);

  const auto domain = space_from_json(field(j, "domain", ""), ring, "domain");
  auto codomain = space_from_json(field(j, "codomain", ""), ring, "codomain");
  if (same_space(domain, codomain)) codomain = domain;

  if (kind == "explicit") {
    const auto& t = field(j, "table", "");
    if (!t.is_array()) field_error("table", "expected a list of codomain indices");
    std::vector<std::uint64_t> table;
    table.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      table.push_back(as<std::uint64_t>(t[i], "table[" + std::to_string(i) + "]"));
    }
    return make_explicit_map(domain, codomain, std::move(table), std::move(descriptor));
  }
  if (kind != "rule") field_error("kind", "must be \"explicit\" or \"rule\"");
  if (!ring || !same_space(domain, codomain)) field_error("ring", "rule maps act on one ring");
  const auto& r = field(j, "rule", "");
  const auto layers = as<unsigned>(field(r, "layers", "rule"), "rule.layers");
  if (domain->alphabet_size(0) != (std::uint64_t{1} << layers)) {
    field_error("rule.layers", "does not match the ring's alphabet size");
  }
  const auto rule = rule_from_json(field(r, "outputs", "rule"), layers, "rule.outputs");
  std::optional<LocalRule> inverse;
  if (auto it = r.find("inverse"); it != r.end()) inverse = rule_from_json(*it, layers, "rule.inverse");
  return make_ring_map(domain->size(), rule, inverse, std::move(descriptor));
}

BlockMap parse_map(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The message carries the line and column of the failure.
    throw Error(ErrorKind::ParseError, e.what());
  }
  return map_from_json(j);
}

Json site_set_to_json(const SiteSet& s) {
  Json members = Json::array();
  for (Site x : s.members()) members.push_back(s.space()->id(x));
  Json out{{"members", members}};
  if (auto arc = s.arc()) out["interval"] = interval_json(*arc);
  return out;
}

Json scheme_to_json(const NbhdScheme& n) {
  Json sites = Json::array();
  const bool rings = n.source()->is_ring() && n.target()->is_ring() &&
                     n.source()->size() == n.target()->size();
  for (Site s = 0; s < n.source()->size(); ++s) {
    Json entry = site_set_to_json(n.at(s));
    entry["site"] = n.source()->id(s);
    if (rings) {
      if (auto rel = relative_arc(n.at(s), s)) entry["offset_interval"] = interval_json(*rel);
    }
    sites.push_back(std::move(entry));
  }
  return Json{{"source_slice", n.source_slice()}, {"target_slice", n.target_slice()}, {"sites", sites}};
}

Json bound_report_to_json(const BoundReport& r) {
  return Json{{"lower", scheme_to_json(r.lower)},
              {"computed", scheme_to_json(r.computed)},
              {"upper", scheme_to_json(r.upper)},
              {"lower_holds", r.lower_holds},
              {"upper_holds", r.upper_holds},
              {"all_hold", r.all_hold()}};
}

Json signal_report_to_json(const SignalReport& r) {
  Json out{{"automaton", descriptor_to_json(r.automaton)},
           {"cells", r.cells},
           {"alice_site", r.alice},
           {"bob_site", r.bob},
           {"steps", r.steps},
           {"alice_letter", r.alice_letter},
           {"overlap", r.overlap},
           {"factorized", r.factorized},
           {"local_overlap", r.local_overlap},
           {"classical_possible", r.classical_possible},
           {"signaled", r.signaled()}};
  out["distance"] = r.distance ? Json(*r.distance) : Json(nullptr);
  return out;
}

Json witness_to_json(const QuantumLocalityWitness& w) {
  Json cex = Json::array();
  for (const auto& c : w.counterexamples) {
    Json words = Json::array();
    for (const auto& word : c.words) words.push_back(word.letters());
    cex.push_back(Json{{"condition", c.condition}, {"words", words}});
  }
  return Json{{"B", site_set_to_json(w.B)}, {"A", site_set_to_json(w.A)},
              {"cond1", w.cond1},           {"cond2", w.cond2},
              {"cond3", w.cond3},           {"localized", w.localized()},
              {"counterexamples", cex}};
}

std::string describe(const SiteSet& s) {
  if (auto arc = s.arc()) return format_interval(*arc);
  std::string out = "{";
  bool first = true;
  for (Site x : s.members()) {
    if (!first) out += ",";
    out += s.space()->id(x);
    first = false;
  }
  return out + "}";
}

std::string describe_relative(const SiteSet& s, Site origin) {
  if (auto arc = relative_arc(s, origin)) return format_interval(*arc);
  if (!s.space()->is_ring()) return describe(s);
  const long n = static_cast<long>(s.space()->size());
  std::vector<long> offsets;
  for (Site x : s.members()) {
    long p = (static_cast<long>(x) - static_cast<long>(origin) + n) % n;
    if (p > n / 2) p -= n;
    offsets.push_back(p);
  }
  std::sort(offsets.begin(), offsets.end());
  std::string out = "{";
  for (std::size_t i = 0; i < offsets.size(); ++i) out += (i ? "," : "") + std::to_string(offsets[i]);
  return out + "}";
}

}  // namespace qnb
