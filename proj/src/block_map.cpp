#include "qnb/block_map.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "qnb/error.hpp"

namespace qnb {

struct BlockMap::Impl {
  SpacePtr domain;
  SpacePtr codomain;
  MapDescriptor descriptor;
  std::vector<std::uint64_t> table;
  std::vector<std::uint64_t> inverse_table;
  std::optional<RingForm> ring;
};

namespace {

constexpr unsigned kMaxLayers = 16;

// Monomials as bit masks, for evaluating ring maps on word indices of rings
// with at most 64 bits.
struct MaskPoly {
  std::vector<std::uint64_t> masks;

  explicit MaskPoly(const Anf& f) {
    for (const auto& m : f.terms()) {
      std::uint64_t mask = 0;
      for (Var v : m) mask |= std::uint64_t{1} << v;
      masks.push_back(mask);
    }
  }
  bool operator()(std::uint64_t x) const {
    bool value = false;
    for (auto m : masks) value ^= (x & m) == m;
    return value;
  }
};

std::vector<std::uint64_t> tabulate_polys(const std::vector<Anf>& polys, std::size_t bits) {
  if (bits > 63) {
    throw Error(ErrorKind::DimensionCapExceeded, "ring too large to tabulate");
  }
  const std::uint64_t dim = std::uint64_t{1} << bits;
  if (dim > enumeration_cap()) {
    throw Error(ErrorKind::DimensionCapExceeded,
                "tabulating 2^" + std::to_string(bits) + " words exceeds the enumeration cap");
  }
  std::vector<MaskPoly> compiled;
  compiled.reserve(polys.size());
  for (const auto& p : polys) compiled.emplace_back(p);
  std::vector<std::uint64_t> table(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    std::uint64_t y = 0;
    for (std::size_t b = 0; b < compiled.size(); ++b) {
      if (compiled[b](x)) y |= std::uint64_t{1} << b;
    }
    table[x] = y;
  }
  return table;
}

std::vector<std::uint64_t> invert_table(const std::vector<std::uint64_t>& table,
                                        std::uint64_t codomain_dim) {
  if (table.size() != codomain_dim) {
    throw Error(ErrorKind::NotInjective, "domain and codomain sizes differ");
  }
  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> inverse(codomain_dim, kUnset);
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    const auto j = table[i];
    if (j >= codomain_dim) {
      throw Error(ErrorKind::ArityMismatch, "table entry " + std::to_string(j) + " is not a codomain word");
    }
    if (inverse[j] != kUnset) {
      throw Error(ErrorKind::NotInjective, "words " + std::to_string(inverse[j]) + " and " +
                                               std::to_string(i) + " both map to " + std::to_string(j));
    }
    inverse[j] = i;
  }
  return inverse;
}

bool is_identity(const std::vector<Anf>& polys) {
  for (std::size_t b = 0; b < polys.size(); ++b) {
    if (!(polys[b] == Anf::var(static_cast<Var>(b)))) return false;
  }
  return true;
}

std::vector<Anf> substitute_all(const std::vector<Anf>& outer, const std::vector<Anf>& inner) {
  std::vector<Anf> out;
  out.reserve(outer.size());
  for (const auto& p : outer) out.push_back(p.substitute(std::span<const Anf>(inner)));
  return out;
}

// Inverse polynomials of a ring form by tabulation. Only the cell-0 outputs
// are transformed; the rest follow by translation, and the result is checked.
std::vector<Anf> derive_inverse_polys(const RingForm& form) {
  const auto table = tabulate_polys(form.forward, form.bits());
  const auto inverse = invert_table(table, table.size());
  std::vector<Var> vars(form.bits());
  for (std::size_t v = 0; v < vars.size(); ++v) vars[v] = static_cast<Var>(v);
  RingForm probe = form;
  probe.inverse = std::vector<Anf>(form.bits());
  std::vector<std::uint8_t> truth(inverse.size());
  for (unsigned b = 0; b < form.layers; ++b) {
    for (std::uint64_t u = 0; u < inverse.size(); ++u) truth[u] = (inverse[u] >> b) & 1U;
    (*probe.inverse)[b] = Anf::from_truth_table(truth, vars);
  }
  auto polys = instantiate(probe.local_rule(true), form.cells);
  if (!is_identity(substitute_all(polys, form.forward))) {
    throw Error(ErrorKind::InvalidArgument, "rule is not translation invariant");
  }
  return polys;
}

SpacePtr ring_space(std::size_t cells, unsigned layers) {
  return CellSpace::ring(cells, std::uint32_t{1} << layers);
}

BlockMap from_impl(BlockMap::Impl impl) {
  return BlockMap(std::make_shared<const BlockMap::Impl>(std::move(impl)));
}

BlockMap ring_from_form(RingForm form, MapDescriptor descriptor) {
  BlockMap::Impl impl;
  impl.domain = ring_space(form.cells, form.layers);
  impl.codomain = impl.domain;
  impl.descriptor = std::move(descriptor);
  impl.ring = std::move(form);
  return from_impl(std::move(impl));
}

std::optional<unsigned> layers_of(const CellSpace& space) {
  if (!space.is_ring() || space.size() == 0) return std::nullopt;
  const auto a = space.alphabet_size(0);
  if (!std::has_single_bit(a)) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(a));
}

}  // namespace

// ---------------------------------------------------------------------------

Interval LocalRule::window() const {
  Interval iv{std::numeric_limits<long>::max(), std::numeric_limits<long>::min()};
  for (const auto& poly : outputs) {
    for (const auto& term : poly) {
      for (const auto& v : term) {
        iv.lo = std::min<long>(iv.lo, v.offset);
        iv.hi = std::max<long>(iv.hi, v.offset);
      }
    }
  }
  if (iv.lo > iv.hi) return {0, 0};
  return iv;
}

std::vector<Anf> instantiate(const LocalRule& rule, std::size_t cells) {
  if (rule.outputs.size() != rule.layers) {
    throw Error(ErrorKind::ArityMismatch, "rule must give one polynomial per layer");
  }
  const long n = static_cast<long>(cells);
  std::vector<Anf> polys;
  polys.reserve(cells * rule.layers);
  for (long cell = 0; cell < n; ++cell) {
    for (unsigned b = 0; b < rule.layers; ++b) {
      std::vector<Monomial> terms;
      for (const auto& term : rule.outputs[b]) {
        Monomial m;
        for (const auto& v : term) {
          if (v.bit >= rule.layers) throw Error(ErrorKind::ArityMismatch, "rule reads a missing layer");
          const long c = ((cell + v.offset) % n + n) % n;
          m.push_back(static_cast<Var>(c * rule.layers + v.bit));
        }
        terms.push_back(std::move(m));
      }
      polys.push_back(Anf::from_terms(std::move(terms)));
    }
  }
  return polys;
}

LocalRule RingForm::local_rule(bool of_inverse) const {
  const auto& polys = of_inverse ? inverse.value() : forward;
  const long n = static_cast<long>(cells);
  LocalRule rule{layers, {}};
  for (unsigned b = 0; b < layers; ++b) {
    LocalPoly poly;
    for (const auto& m : polys[b].terms()) {
      LocalTerm term;
      for (Var v : m) {
        const long c = static_cast<long>(v / layers);
        term.push_back({static_cast<int>(c <= n / 2 ? c : c - n), v % layers});
      }
      std::sort(term.begin(), term.end());
      poly.push_back(std::move(term));
    }
    rule.outputs.push_back(std::move(poly));
  }
  const auto w = rule.window();
  if (w.hi - w.lo >= (n + 1) / 2 && n > 1) {
    throw Error(ErrorKind::RingTooSmall,
                "rule window " + format_interval(w) + " is too wide for a ring of " +
                    std::to_string(cells) + " cells to fix its local form");
  }
  return rule;
}

std::string MapDescriptor::label() const {
  if (!detail.empty()) return detail;
  std::string out = family;
  if (!params.empty()) {
    out += "(";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) out += ",";
      out += k + "=" + std::to_string(v);
      first = false;
    }
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

const SpacePtr& BlockMap::domain() const { return impl_->domain; }
const SpacePtr& BlockMap::codomain() const { return impl_->codomain; }
const MapDescriptor& BlockMap::descriptor() const { return impl_->descriptor; }
bool BlockMap::is_explicit() const { return !impl_->ring.has_value(); }

const std::vector<std::uint64_t>& BlockMap::table() const {
  if (!is_explicit()) throw Error(ErrorKind::InvalidArgument, "ring map has no explicit table");
  return impl_->table;
}

const std::vector<std::uint64_t>& BlockMap::inverse_table() const {
  if (!is_explicit()) throw Error(ErrorKind::InvalidArgument, "ring map has no explicit table");
  return impl_->inverse_table;
}

const RingForm& BlockMap::ring() const {
  if (is_explicit()) throw Error(ErrorKind::InvalidArgument, "explicit map has no ring form");
  return *impl_->ring;
}

bool BlockMap::has_inverse() const { return is_explicit() || impl_->ring->inverse.has_value(); }

std::optional<BlockMap> BlockMap::inverse_hint() const {
  if (!has_inverse()) return std::nullopt;
  return invert(*this);
}

std::vector<std::uint64_t> letters_to_bits(std::span<const Letter> letters, unsigned layers) {
  std::vector<std::uint64_t> bits((letters.size() * layers + 63) / 64, 0);
  for (std::size_t c = 0; c < letters.size(); ++c) {
    for (unsigned b = 0; b < layers; ++b) {
      if ((letters[c] >> b) & 1U) set_bit(bits, static_cast<Var>(c * layers + b), true);
    }
  }
  return bits;
}

std::vector<Letter> bits_to_letters(std::span<const std::uint64_t> bits, std::size_t cells,
                                    unsigned layers) {
  std::vector<Letter> letters(cells, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    for (unsigned b = 0; b < layers; ++b) {
      if (bit_of(bits, static_cast<Var>(c * layers + b))) letters[c] |= Letter{1} << b;
    }
  }
  return letters;
}

std::vector<Letter> BlockMap::apply(std::span<const Letter> letters) const {
  if (letters.size() != domain()->size()) {
    throw Error(ErrorKind::ArityMismatch, "word arity does not match the map's domain");
  }
  if (is_explicit()) return codomain()->decode(impl_->table[domain()->encode(letters)]);
  const auto& form = *impl_->ring;
  const auto in = letters_to_bits(letters, form.layers);
  std::vector<std::uint64_t> out(in.size(), 0);
  for (std::size_t v = 0; v < form.forward.size(); ++v) {
    if (form.forward[v].evaluate(in)) set_bit(out, static_cast<Var>(v), true);
  }
  return bits_to_letters(out, form.cells, form.layers);
}

Word BlockMap::apply(const Word& word) const {
  require_same_space(word.space(), domain(), "word is not on the map's domain");
  return Word(codomain(), apply(std::span<const Letter>(word.letters())));
}

std::vector<Letter> BlockMap::apply_at(std::span<const Letter> letters,
                                       std::span<const Site> outputs) const {
  std::vector<Letter> out;
  out.reserve(outputs.size());
  if (is_explicit()) {
    const auto image = impl_->table[domain()->encode(letters)];
    for (Site y : outputs) out.push_back(codomain()->digit(image, y));
    return out;
  }
  const auto& form = *impl_->ring;
  const auto in = letters_to_bits(letters, form.layers);
  for (Site y : outputs) {
    Letter a = 0;
    for (unsigned b = 0; b < form.layers; ++b) {
      if (form.forward[y * form.layers + b].evaluate(in)) a |= Letter{1} << b;
    }
    out.push_back(a);
  }
  return out;
}

std::vector<Letter> BlockMap::apply_inverse(std::span<const Letter> letters) const {
  if (is_explicit()) return domain()->decode(impl_->inverse_table[codomain()->encode(letters)]);
  const auto& form = *impl_->ring;
  if (!form.inverse) throw Error(ErrorKind::DimensionCapExceeded, "ring map has no known inverse");
  const auto in = letters_to_bits(letters, form.layers);
  std::vector<std::uint64_t> out(in.size(), 0);
  for (std::size_t v = 0; v < form.inverse->size(); ++v) {
    if ((*form.inverse)[v].evaluate(in)) set_bit(out, static_cast<Var>(v), true);
  }
  return bits_to_letters(out, form.cells, form.layers);
}

// ---------------------------------------------------------------------------

BlockMap make_explicit_map(SpacePtr domain, SpacePtr codomain, std::vector<std::uint64_t> table,
                           MapDescriptor descriptor) {
  const auto dim = domain->require_enumerable("explicit map");
  const auto cod_dim = codomain->require_enumerable("explicit map");
  if (table.size() != dim) {
    throw Error(ErrorKind::ArityMismatch, "table has " + std::to_string(table.size()) +
                                              " entries for " + std::to_string(dim) + " domain words");
  }
  BlockMap::Impl impl;
  impl.inverse_table = invert_table(table, cod_dim);
  impl.domain = std::move(domain);
  impl.codomain = std::move(codomain);
  impl.table = std::move(table);
  impl.descriptor = std::move(descriptor);
  return from_impl(std::move(impl));
}

BlockMap make_ring_map(std::size_t cells, const LocalRule& rule,
                       const std::optional<LocalRule>& inverse, MapDescriptor descriptor) {
  if (rule.layers == 0 || rule.layers > kMaxLayers) {
    throw Error(ErrorKind::InvalidAlphabet, "ring rules need 1.." + std::to_string(kMaxLayers) + " layers");
  }
  if (cells == 0) throw Error(ErrorKind::RingTooSmall, "ring needs at least one cell");
  RingForm form{cells, rule.layers, instantiate(rule, cells), std::nullopt, {}};
  if (inverse) {
    if (inverse->layers != rule.layers) {
      throw Error(ErrorKind::ArityMismatch, "inverse rule has a different layer count");
    }
    auto inv = instantiate(*inverse, cells);
    if (!is_identity(substitute_all(inv, form.forward))) {
      throw Error(ErrorKind::NotInjective, "declared inverse rule does not undo the rule");
    }
    form.inverse = std::move(inv);
  } else if (form.bits() < 64 && (std::uint64_t{1} << form.bits()) <= enumeration_cap()) {
    form.inverse = derive_inverse_polys(form);
  }
  return ring_from_form(std::move(form), std::move(descriptor));
}

BlockMap identity_map(SpacePtr space) {
  if (auto layers = layers_of(*space)) {
    RingForm form{space->size(), *layers, {}, std::nullopt, {}};
    for (std::size_t v = 0; v < form.bits(); ++v) form.forward.push_back(Anf::var(static_cast<Var>(v)));
    form.inverse = form.forward;
    return ring_from_form(std::move(form), {"identity", {}, {}});
  }
  const auto dim = space->require_enumerable("identity map");
  std::vector<std::uint64_t> table(dim);
  for (std::uint64_t i = 0; i < dim; ++i) table[i] = i;
  return make_explicit_map(space, space, std::move(table), {"identity", {}, {}});
}

namespace {

std::vector<std::shared_ptr<const RingForm>> factors_of(const RingForm& form) {
  if (!form.factors.empty()) return form.factors;
  auto single = std::make_shared<RingForm>(form);
  single->factors.clear();
  return {std::move(single)};
}

}  // namespace

BlockMap compose(const BlockMap& g, const BlockMap& f) {
  require_same_space(f.codomain(), g.domain(), "compose: codomain of f differs from domain of g");
  MapDescriptor desc{"composite", {}, g.descriptor().label() + " o " + f.descriptor().label()};
  if (g.is_ring() && f.is_ring()) {
    const auto& gf = g.ring();
    const auto& ff = f.ring();
    RingForm form{ff.cells, ff.layers, substitute_all(gf.forward, ff.forward), std::nullopt, {}};
    if (ff.inverse && gf.inverse) {
      form.inverse = substitute_all(*ff.inverse, *gf.inverse);
      form.factors = factors_of(ff);
      const auto rest = factors_of(gf);
      form.factors.insert(form.factors.end(), rest.begin(), rest.end());
    }
    return ring_from_form(std::move(form), std::move(desc));
  }
  const auto tf = tabulate(f);
  const auto tg = tabulate(g);
  std::vector<std::uint64_t> table(tf.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = tg.table()[tf.table()[i]];
  return make_explicit_map(f.domain(), g.codomain(), std::move(table), std::move(desc));
}

BlockMap invert(const BlockMap& f) {
  MapDescriptor desc = f.descriptor();
  desc.detail = "inverse of " + f.descriptor().label();
  if (f.is_explicit()) {
    BlockMap::Impl impl;
    impl.domain = f.codomain();
    impl.codomain = f.domain();
    impl.table = f.inverse_table();
    impl.inverse_table = f.table();
    impl.descriptor = std::move(desc);
    return from_impl(std::move(impl));
  }
  RingForm form = f.ring();
  if (!form.inverse) form.inverse = derive_inverse_polys(form);
  std::swap(form.forward, *form.inverse);
  std::reverse(form.factors.begin(), form.factors.end());
  for (auto& factor : form.factors) {
    auto swapped = std::make_shared<RingForm>(*factor);
    std::swap(swapped->forward, *swapped->inverse);
    factor = std::move(swapped);
  }
  return ring_from_form(std::move(form), std::move(desc));
}

BlockMap power(const BlockMap& f, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "power needs n >= 1");
  BlockMap out = f;
  for (unsigned i = 1; i < n; ++i) out = compose(f, out);
  if (n > 1) {
    MapDescriptor desc = f.descriptor();
    desc.detail = f.descriptor().label() + "^" + std::to_string(n);
    auto impl = BlockMap::Impl{};
    if (out.is_explicit()) {
      impl.table = out.table();
      impl.inverse_table = out.inverse_table();
    } else {
      impl.ring = out.ring();
    }
    impl.domain = out.domain();
    impl.codomain = out.codomain();
    impl.descriptor = std::move(desc);
    return from_impl(std::move(impl));
  }
  return out;
}

BlockMap tabulate(const BlockMap& f) {
  if (f.is_explicit()) return f;
  const auto& form = f.ring();
  f.domain()->require_enumerable("tabulating a ring map");
  auto table = tabulate_polys(form.forward, form.bits());
  BlockMap::Impl impl;
  impl.inverse_table = form.inverse ? tabulate_polys(*form.inverse, form.bits())
                                    : invert_table(table, table.size());
  impl.table = std::move(table);
  impl.domain = f.domain();
  impl.codomain = f.codomain();
  impl.descriptor = f.descriptor();
  return from_impl(std::move(impl));
}

bool same_function(const BlockMap& a, const BlockMap& b) {
  if (!same_space(a.domain(), b.domain()) || !same_space(a.codomain(), b.codomain())) return false;
  if (a.is_ring() && b.is_ring()) return a.ring().forward == b.ring().forward;
  return tabulate(a).table() == tabulate(b).table();
}

LocalRule derive_inverse_rule(const LocalRule& rule, std::size_t probe_cells) {
  RingForm form{probe_cells, rule.layers, instantiate(rule, probe_cells), std::nullopt, {}};
  form.inverse = derive_inverse_polys(form);
  return form.local_rule(true);
}

}  // namespace qnb
