#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qnb/error.hpp"
#include "qnb/json_io.hpp"
#include "qnb/nbhd.hpp"
#include "qnb/qnbhd.hpp"
#include "qnb/qsim.hpp"
#include "qnb/verify.hpp"
#include "qnb/zoo.hpp"

using namespace qnb;

namespace {

struct Options {
  bool pretty = false;
  std::string out;
  std::string method = "auto";
  std::uint64_t cap = 0;
};

// A false verdict in the report, as opposed to an error.
constexpr int kVerdictFailed = 1;
constexpr int kError = 2;

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "enumerate") return Method::enumerate;
  if (name == "algebraic") return Method::algebraic;
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + name + "'");
}

BlockMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_map(buffer.str());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    std::string what = e.what();
    const std::string prefix = std::string(to_string(ErrorKind::ParseError)) + ": ";
    if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
    throw Error(ErrorKind::ParseError, path + ": " + what);
  }
}

void emit(const Options& o, const Json& report, const std::string& text) {
  const std::string body = o.pretty ? text : report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + o.out + "'");
  file << body;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// One row per source site; ring schemes also show the set relative to the site.
std::string scheme_table(const std::string& title, const NbhdScheme& n) {
  std::ostringstream out;
  out << title << " (slice " << n.source_slice() << " -> " << n.target_slice() << ")\n";
  const bool rings = n.source()->is_ring() && n.target()->is_ring();
  for (Site s = 0; s < n.source()->size(); ++s) {
    out << "  " << pad(n.source()->id(s), 6) << pad(describe(n.at(s)), 24);
    if (rings) out << "relative " << describe_relative(n.at(s), s);
    out << "\n";
  }
  return out.str();
}

std::string header(const BlockMap& f) {
  std::ostringstream out;
  out << "map " << f.descriptor().label() << " on " << f.domain()->size() << " sites";
  if (f.domain()->is_ring()) out << " (ring)";
  out << "\n";
  return out.str();
}

int run_analyze(const Options& o, const std::string& path) {
  const auto f = load_map(path);
  const auto method = parse_method(o.method);
  const auto inv = invert(f);
  const auto in = in_scheme(f, 0, 1);
  const auto out = out_scheme(f, 0, 1);
  const auto inv_in = in_scheme(inv, 1, 0);
  const auto inv_out = out_scheme(inv, 1, 0);
  const auto q = quantum_in_scheme(f, 0, 1, method);
  Json report{{"map", descriptor_to_json(f.descriptor())},
              {"sites", f.domain()->size()},
              {"in", scheme_to_json(in)},
              {"out", scheme_to_json(out)},
              {"inverse_in", scheme_to_json(inv_in)},
              {"inverse_out", scheme_to_json(inv_out)},
              {"quantum_in", scheme_to_json(q)}};
  const std::string text = header(f) + scheme_table("in-neighbourhoods", in) +
                           scheme_table("out-neighbourhoods", out) +
                           scheme_table("inverse in-neighbourhoods", inv_in) +
                           scheme_table("inverse out-neighbourhoods", inv_out) +
                           scheme_table("quantum in-neighbourhoods", q);
  emit(o, report, text);
  return 0;
}

int run_bounds(const Options& o, const std::string& path) {
  const auto f = load_map(path);
  const auto r = simple_bound(f, parse_method(o.method));
  std::ostringstream text;
  text << header(f);
  text << "  " << pad("site", 6) << pad("lower", 18) << pad("quantum", 18) << pad("upper", 18) << "verdict\n";
  for (Site y = 0; y < f.codomain()->size(); ++y) {
    const bool ok = r.lower_holds[y] && r.upper_holds[y];
    text << "  " << pad(f.codomain()->id(y), 6) << pad(describe(r.lower.at(y)), 18)
         << pad(describe(r.computed.at(y)), 18) << pad(describe(r.upper.at(y)), 18) << (ok ? "ok" : "VIOLATED")
         << "\n";
  }
  text << (r.all_hold() ? "all bounds hold\n" : "bounds violated\n");
  Json report = bound_report_to_json(r);
  report["map"] = descriptor_to_json(f.descriptor());
  emit(o, report, text.str());
  return r.all_hold() ? 0 : kVerdictFailed;
}

int run_compose(const Options& o, const std::vector<std::string>& paths) {
  std::vector<BlockMap> chain;
  for (const auto& p : paths) chain.push_back(load_map(p));
  const auto method = parse_method(o.method);
  BlockMap composite = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) composite = compose(chain[i], composite);
  const int last = static_cast<int>(chain.size()) + 1;
  const auto q = quantum_in_scheme(composite, 1, last, method);
  const auto bound = composition_bound(chain, method);
  std::vector<bool> holds;
  bool all = true;
  std::ostringstream text;
  text << "composite of " << chain.size() << " maps: " << composite.descriptor().label() << "\n";
  text << "  " << pad("site", 6) << pad("quantum", 24) << pad("bound", 24) << "verdict\n";
  for (Site y = 0; y < composite.codomain()->size(); ++y) {
    holds.push_back(q.at(y).subset_of(bound.at(y)));
    all = all && holds.back();
    text << "  " << pad(composite.codomain()->id(y), 6) << pad(describe(q.at(y)), 24)
         << pad(describe(bound.at(y)), 24) << (holds.back() ? "ok" : "VIOLATED") << "\n";
  }
  text << (all ? "composite within the bound\n" : "bound violated\n");
  Json maps = Json::array();
  for (const auto& f : chain) maps.push_back(descriptor_to_json(f.descriptor()));
  Json report{{"maps", maps},
              {"quantum_in", scheme_to_json(q)},
              {"bound", scheme_to_json(bound)},
              {"holds", holds},
              {"all_hold", all}};
  emit(o, report, text.str());
  return all ? 0 : kVerdictFailed;
}

int run_duality(const Options& o, const std::string& path) {
  const auto f = load_map(path);
  const auto method = parse_method(o.method);
  const auto forward = scheme_transpose(quantum_in_scheme(f, 0, 1, method));
  const auto backward = quantum_in_scheme(invert(f), 1, 0, method);
  const bool dual = forward == backward;
  Json report{{"map", descriptor_to_json(f.descriptor())},
              {"transposed_quantum_in", scheme_to_json(forward)},
              {"inverse_quantum_in", scheme_to_json(backward)},
              {"dual", dual}};
  std::string text = header(f) + scheme_table("transposed quantum in-neighbourhoods", forward) +
                     scheme_table("quantum in-neighbourhoods of the inverse", backward) +
                     (dual ? "the two schemes coincide\n" : "the two schemes DIFFER\n");
  emit(o, report, text);
  return dual ? 0 : kVerdictFailed;
}

struct ZooArgs {
  std::string family;
  long k = 2;
  long l = 1;
  long n = 2;
  std::size_t ring = 0;
  std::string format = "auto";
};

int run_zoo(const Options& o, const ZooArgs& z) {
  MapDescriptor d{z.family, {}, {}};
  const auto k = static_cast<unsigned>(z.k);
  const auto l = static_cast<unsigned>(z.l);
  const auto n = static_cast<unsigned>(z.n);
  std::size_t ring = z.ring;
  if (z.family == "jk") {
    d.params = {{"k", z.k}};
    if (!ring) ring = default_ring_jk(k);
  } else if (z.family == "toffoli") {
    if (!ring) ring = default_ring_toffoli();
  } else if (z.family == "tk") {
    d.params = {{"k", z.k}};
    if (!ring) ring = default_ring_tk(k);
  } else if (z.family == "jt") {
    d.params = {{"k", z.k}, {"l", z.l}};
    if (!ring) ring = default_ring_jt(k, l);
  } else if (z.family == "jt-iterated") {
    d.params = {{"k", z.k}, {"l", z.l}, {"n", z.n}};
    if (!ring) ring = default_ring_jt_iterated(k, l, n);
  }
  const auto f = make_zoo(d, ring);
  MapFormat format = MapFormat::automatic;
  if (z.format == "explicit") {
    format = MapFormat::explicit_table;
  } else if (z.format == "rule") {
    format = MapFormat::rule;
  } else if (z.format != "auto") {
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + z.format + "'");
  }
  // Map files are always JSON; --pretty does not apply.
  Options plain = o;
  plain.pretty = false;
  emit(plain, map_to_json(f, format), {});
  return 0;
}

struct SignalArgs {
  std::string path;
  Site alice = 0;
  Site bob = 0;
  unsigned steps = 1;
  std::vector<Letter> v;
  std::vector<Letter> w;
};

int run_signal(const Options& o, const SignalArgs& s) {
  const auto f = load_map(s.path);
  const auto X = f.domain();
  std::optional<std::pair<Word, Word>> pair;
  if (!s.v.empty() || !s.w.empty()) {
    pair.emplace(Word(X, s.v), Word(X, s.w));
  } else {
    pair = find_signaling_pair(f, s.alice, s.bob, s.steps);
  }
  if (!pair) {
    const Json report{{"map", descriptor_to_json(f.descriptor())},
                      {"alice_site", s.alice},
                      {"bob_site", s.bob},
                      {"steps", s.steps},
                      {"pair_found", false},
                      {"signaled", false},
                      {"classical_possible", in_nbhd(power(f, s.steps), s.bob).contains(s.alice)}};
    emit(o, report,
         "no pair of words differing at site " + X->id(s.alice) + " reaches site " + X->id(s.bob) +
             " alone after " + std::to_string(s.steps) + " step(s); no signal can be sent this way\n");
    return kVerdictFailed;
  }
  const auto r = signaling_demo(f, pair->first, pair->second, s.alice, s.bob, s.steps);
  Json report = signal_report_to_json(r);
  report["v"] = pair->first.letters();
  report["w"] = pair->second.letters();
  std::ostringstream text;
  text << "Alice at site " << X->id(r.alice) << " and Bob at site " << X->id(r.bob);
  if (r.distance) text << ", distance " << *r.distance;
  text << ", " << r.steps << " step(s) of " << r.automaton.label() << ".\n";
  text << "Alice flips the sign of the branch carrying letter " << r.alice_letter << ".\n";
  text << "Overlap of the two final states: " << r.overlap << "\n";
  if (r.factorized) {
    text << "Both final states factor at Bob's site; local overlap " << r.local_overlap << ".\n";
  } else {
    text << "The final states do not factor at Bob's site.\n";
  }
  text << (r.signaled() ? "Bob reads Alice's bit with certainty using local operations.\n"
                        : "Bob cannot read Alice's bit locally.\n");
  text << (r.classical_possible ? "Classically, the same flow is possible in this many steps.\n"
                                : "Classically, Alice's site cannot influence Bob's in this many steps.\n");
  emit(o, report, text.str());
  return r.signaled() ? 0 : kVerdictFailed;
}

int run_verify(const Options& o, std::uint64_t seed) {
  Json criteria = Json::array();
  std::size_t passed = 0;
  std::size_t checks = 0;
  std::ostringstream text;
  text << "acceptance battery, seed " << seed << "\n";
  run_acceptance(seed, [&](const CriterionResult& r) {
    passed += r.passed;
    checks += r.checks;
    criteria.push_back(Json{{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"details", r.details},
                            {"seconds", r.seconds}});
    text << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.checks << " checks, "
         << r.failures << " failures\n";
    if (!r.passed) {
      for (const auto& d : r.details) text << "    " << d << "\n";
    }
  });
  const std::size_t total = criteria.size();
  text << passed << " of " << total << " criteria passed (" << checks << " checks)\n";
  Json report{{"seed", seed},
              {"criteria", criteria},
              {"passed", passed},
              {"failed", total - passed},
              {"checks", checks}};
  emit(o, report, text.str());
  return passed == total ? 0 : kVerdictFailed;
}

std::vector<Letter> parse_letters(const std::string& text) {
  std::vector<Letter> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(static_cast<Letter>(std::stoul(item)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad letter '" + item + "' in word list");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and quantum neighbourhoods of reversible maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Plain-text rendering instead of JSON");
  app.add_option("--out", o.out, "Write the report to this file");
  app.add_option("--method", o.method, "Decision route: auto, enumerate or algebraic")
      ->check(CLI::IsMember({"auto", "enumerate", "algebraic"}));
  app.add_option("--enumeration-cap", o.cap, "Largest word count enumerated")->check(CLI::PositiveNumber);

  std::string map_path;
  auto* analyze = app.add_subcommand("analyze", "Classical and quantum neighbourhood schemes of a map");
  analyze->add_option("map", map_path, "Map file")->required()->check(CLI::ExistingFile);

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the quantum neighbourhoods");
  bounds->add_option("map", map_path, "Map file")->required()->check(CLI::ExistingFile);

  std::vector<std::string> chain;
  auto* comp = app.add_subcommand("compose", "Quantum neighbourhoods of a chain against the composition bound");
  comp->add_option("maps", chain, "Map files, first applied first")->required()->check(CLI::ExistingFile);

  auto* dual = app.add_subcommand("duality", "Compare the quantum scheme with that of the inverse");
  dual->add_option("map", map_path, "Map file")->required()->check(CLI::ExistingFile);

  ZooArgs z;
  auto* zoo = app.add_subcommand("zoo", "Emit a ring automaton as a map file");
  zoo->add_option("family", z.family, "jk, toffoli, tk, jt or jt-iterated")
      ->required()
      ->check(CLI::IsMember({"jk", "toffoli", "tk", "jt", "jt-iterated"}));
  zoo->add_option("--k", z.k, "Layer count (jk, jt) or copy count (tk)")->check(CLI::PositiveNumber);
  zoo->add_option("--l", z.l, "Toffoli copies inside JT")->check(CLI::PositiveNumber);
  zoo->add_option("--n", z.n, "Iterations of J_k inside iterated JT")->check(CLI::PositiveNumber);
  zoo->add_option("--ring", z.ring, "Ring size (default: large enough for the neighbourhoods)");
  zoo->add_option("--format", z.format, "auto, explicit or rule")
      ->check(CLI::IsMember({"auto", "explicit", "rule"}));

  SignalArgs s;
  std::string v_text, w_text;
  auto* signal = app.add_subcommand("signal", "Run the two-branch signaling protocol");
  signal->add_option("map", s.path, "Map file")->required()->check(CLI::ExistingFile);
  signal->add_option("--alice", s.alice, "Alice's site index")->required();
  signal->add_option("--bob", s.bob, "Bob's site index")->required();
  signal->add_option("--steps", s.steps, "Applications of the map")->check(CLI::PositiveNumber);
  auto* v_opt = signal->add_option("--v", v_text, "First word, comma-separated letters");
  signal->add_option("--w", w_text, "Second word, comma-separated letters")->needs(v_opt);
  v_opt->needs(signal->get_option("--w"));

  std::uint64_t seed = 7;
  auto* verify = app.add_subcommand("verify-suite", "Run the acceptance battery");
  verify->add_option("--seed", seed, "Seed for the randomized corpora");

  CLI11_PARSE(app, argc, argv);

  try {
    if (o.cap) set_enumeration_cap(o.cap);
    if (*analyze) return run_analyze(o, map_path);
    if (*bounds) return run_bounds(o, map_path);
    if (*comp) return run_compose(o, chain);
    if (*dual) return run_duality(o, map_path);
    if (*zoo) return run_zoo(o, z);
    if (*signal) {
      if (!v_text.empty()) {
        s.v = parse_letters(v_text);
        s.w = parse_letters(w_text);
      }
      return run_signal(o, s);
    }
    if (*verify) return run_verify(o, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
