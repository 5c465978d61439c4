#include "qnb/zoo.hpp"

#include <algorithm>

#include "qnb/error.hpp"

namespace qnb {

namespace {

constexpr std::size_t kToffoliProbeRing = 6;

void require_ring(std::size_t ring, std::size_t minimum, const std::string& what) {
  if (ring < minimum) {
    throw Error(ErrorKind::RingTooSmall, what + " needs a ring of at least " + std::to_string(minimum) +
                                             " cells, got " + std::to_string(ring));
  }
}

void require_positive(unsigned value, const char* name) {
  if (value == 0) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be positive");
}

// Same polynomials with offsets multiplied by `scale`, shifted by `shift`,
// and bit b renamed to bits[b].
LocalPoly remap(const LocalPoly& poly, int scale, int shift, const std::vector<unsigned>& bits) {
  LocalPoly out;
  for (const auto& term : poly) {
    LocalTerm t;
    for (const auto& v : term) t.push_back({v.offset * scale + shift, bits.at(v.bit)});
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<unsigned> bit_block(unsigned first, unsigned count) {
  std::vector<unsigned> out(count);
  for (unsigned i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

// Inverse of the Toffoli rule, found once by inverting the permutation it
// induces on a small ring.
const LocalRule& toffoli_inverse_rule() {
  static const LocalRule rule = derive_inverse_rule(toffoli_rule(), kToffoliProbeRing);
  return rule;
}

LocalRule tk_inverse_rule(unsigned k) {
  LocalRule out{2 * k, {}};
  const auto& inv = toffoli_inverse_rule();
  for (unsigned q = 1; q <= k; ++q) {
    const auto bits = bit_block(2 * (q - 1), 2);
    for (unsigned b = 0; b < 2; ++b) out.outputs.push_back(remap(inv.outputs[b], static_cast<int>(q), 0, bits));
  }
  return out;
}

// Identity on every layer except layer k, where `rule` (on 2l bits) acts.
LocalRule on_last_layer(const LocalRule& rule, unsigned k) {
  const unsigned w = rule.layers;
  LocalRule out{k * w, {}};
  for (unsigned b = 0; b < (k - 1) * w; ++b) out.outputs.push_back({{{0, b}}});
  for (unsigned b = 0; b < w; ++b) out.outputs.push_back(remap(rule.outputs[b], 1, 0, bit_block((k - 1) * w, w)));
  return out;
}

std::size_t twice_plus_one(std::size_t length) { return 2 * length + 1; }

std::size_t min_ring_jt(unsigned k, unsigned l, unsigned n) {
  const std::size_t kn = static_cast<std::size_t>(k) * n;
  return std::max(kn + 3 * l + 2, 2 * (kn + l) + 1);
}

}  // namespace

LocalRule jk_rule(unsigned k, unsigned width) {
  require_positive(k, "k");
  require_positive(width, "width");
  LocalRule out{k * width, {}};
  for (unsigned i = 1; i <= k; ++i) {
    for (unsigned p = 0; p < width; ++p) {
      if (i < k) {
        out.outputs.push_back({{{0, (i - 1) * width + p}}, {{1, i * width + p}}});
      } else {
        out.outputs.push_back({{{1, p}}});
      }
    }
  }
  return out;
}

LocalRule kk_rule(unsigned k, unsigned width) {
  require_positive(k, "k");
  require_positive(width, "width");
  LocalRule out{k * width, {}};
  const int ki = static_cast<int>(k);
  for (int i = 1; i <= ki; ++i) {
    for (unsigned p = 0; p < width; ++p) {
      LocalPoly poly{{{-i, (k - 1) * width + p}}};
      for (int j = 1; j < i; ++j) poly.push_back({{j - i, static_cast<unsigned>(j - 1) * width + p}});
      out.outputs.push_back(std::move(poly));
    }
  }
  return out;
}

LocalRule toffoli_rule() {
  return LocalRule{2, {{{{0, 1}}, {{0, 0}, {1, 0}}}, {{{1, 0}}}}};
}

LocalRule tk_rule(unsigned k) {
  require_positive(k, "k");
  LocalRule out{2 * k, {}};
  const auto base = toffoli_rule();
  for (unsigned q = 1; q <= k; ++q) {
    const auto bits = bit_block(2 * (q - 1), 2);
    for (unsigned b = 0; b < 2; ++b) out.outputs.push_back(remap(base.outputs[b], static_cast<int>(q), 0, bits));
  }
  return out;
}

std::size_t default_ring_jk(unsigned k) { return twice_plus_one(k + 1); }
std::size_t default_ring_toffoli() { return twice_plus_one(4); }
std::size_t default_ring_tk(unsigned k) { return twice_plus_one(3 * k + 1); }
std::size_t default_ring_jt(unsigned k, unsigned l) { return twice_plus_one(k + 3 * l + 1); }
std::size_t default_ring_jt_iterated(unsigned k, unsigned l, unsigned n) {
  return twice_plus_one(static_cast<std::size_t>(k) * n + 3 * l + 1);
}

BlockMap make_jk(unsigned k, std::size_t ring) {
  require_positive(k, "k");
  require_ring(ring, 2 * k + 2, "J_" + std::to_string(k));
  return make_ring_map(ring, jk_rule(k), kk_rule(k), {"jk", {{"k", k}}, {}});
}

BlockMap make_toffoli(std::size_t ring) {
  require_ring(ring, 6, "the Toffoli automaton");
  return make_ring_map(ring, toffoli_rule(), toffoli_inverse_rule(), {"toffoli", {}, {}});
}

BlockMap make_tk(unsigned k, std::size_t ring) {
  require_positive(k, "k");
  require_ring(ring, 4 * k + 2, "T_" + std::to_string(k));
  return make_ring_map(ring, tk_rule(k), tk_inverse_rule(k), {"tk", {{"k", k}}, {}});
}

BlockMap make_jt(unsigned k, unsigned l, std::size_t ring) {
  require_positive(k, "k");
  require_positive(l, "l");
  require_ring(ring, min_ring_jt(k, l, 1), "JT_{" + std::to_string(k) + "," + std::to_string(l) + "}");
  const unsigned w = 2 * l;
  const auto t = tk_rule(l);
  const auto t_inv = tk_inverse_rule(l);

  LocalRule rule{k * w, {}};
  for (unsigned i = 1; i < k; ++i) {
    for (unsigned p = 0; p < w; ++p) rule.outputs.push_back({{{0, (i - 1) * w + p}}, {{1, i * w + p}}});
  }
  for (unsigned p = 0; p < w; ++p) rule.outputs.push_back(remap(t.outputs[p], 1, 1, bit_block(0, w)));

  LocalRule inverse{k * w, {}};
  const int ki = static_cast<int>(k);
  for (int i = 1; i <= ki; ++i) {
    for (unsigned p = 0; p < w; ++p) {
      auto poly = remap(t_inv.outputs[p], 1, -i, bit_block((k - 1) * w, w));
      for (int j = 1; j < i; ++j) poly.push_back({{j - i, static_cast<unsigned>(j - 1) * w + p}});
      inverse.outputs.push_back(std::move(poly));
    }
  }
  return make_ring_map(ring, rule, inverse, {"jt", {{"k", k}, {"l", l}}, {}});
}

BlockMap make_jt_iterated(unsigned k, unsigned l, unsigned n, std::size_t ring) {
  require_positive(k, "k");
  require_positive(l, "l");
  require_positive(n, "n");
  require_ring(ring, min_ring_jt(k, l, n),
               "iterated JT_{" + std::to_string(k) + "," + std::to_string(l) + "}");
  const unsigned w = 2 * l;
  const auto j = make_ring_map(ring, jk_rule(k, w), kk_rule(k, w), {"jk", {{"k", k}}, {}});
  const auto t = make_ring_map(ring, on_last_layer(tk_rule(l), k), on_last_layer(tk_inverse_rule(l), k),
                               {"tk-on-last-layer", {{"l", l}}, {}});
  const auto f = compose(t, power(j, n));
  return make_ring_map(ring, f.ring().local_rule(), f.ring().local_rule(true),
                       {"jt-iterated", {{"k", k}, {"l", l}, {"n", n}}, {}});
}

BlockMap make_zoo(const MapDescriptor& d, std::size_t ring) {
  auto param = [&](const char* name) -> unsigned {
    auto it = d.params.find(name);
    if (it == d.params.end() || it->second <= 0) {
      throw Error(ErrorKind::InvalidArgument, d.family + " needs a positive parameter " + name);
    }
    return static_cast<unsigned>(it->second);
  };
  if (d.family == "jk") return make_jk(param("k"), ring);
  if (d.family == "toffoli") return make_toffoli(ring);
  if (d.family == "tk") return make_tk(param("k"), ring);
  if (d.family == "jt") return make_jt(param("k"), param("l"), ring);
  if (d.family == "jt-iterated") return make_jt_iterated(param("k"), param("l"), param("n"), ring);
  throw Error(ErrorKind::InvalidArgument, "unknown automaton family '" + d.family + "'");
}

}  // namespace qnb
