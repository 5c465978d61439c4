#include "qnb/nbhd.hpp"

#include <algorithm>

#include "projection.hpp"
#include "qnb/error.hpp"

namespace qnb {

namespace {

void require_oriented(const SpacePtr& a, int slice_a, const SpacePtr& b, int slice_b,
                      const char* what) {
  if (slice_a != slice_b || !same_space(a, b)) {
    throw Error(ErrorKind::SpaceMismatch,
                std::string(what) + ": slice " + std::to_string(slice_a) + " meets slice " +
                    std::to_string(slice_b));
  }
}

void require_same_orientation(const NbhdScheme& a, const NbhdScheme& b, const char* what) {
  require_oriented(a.source(), a.source_slice(), b.source(), b.source_slice(), what);
  require_oriented(a.target(), a.target_slice(), b.target(), b.target_slice(), what);
}


// Cells whose bits occur in the polynomials of cell y's output bits.
SiteSet ring_inputs(const SpacePtr& space, const std::vector<Anf>& polys, unsigned layers, Site y) {
  SiteSet out(space);
  for (unsigned b = 0; b < layers; ++b) {
    for (const auto& m : polys[y * layers + b].terms()) {
      for (Var v : m) out.insert(v / layers);
    }
  }
  return out;
}

SiteSet explicit_inputs(const BlockMap& f, Site y) {
  const auto& dom = *f.domain();
  const auto& cod = *f.codomain();
  const auto& table = f.table();
  SiteSet out(f.domain());
  for (Site x = 0; x < dom.size(); ++x) {
    const auto stride = dom.stride(x);
    for (std::uint64_t i = 0; i < table.size(); ++i) {
      const auto base = i - dom.digit(i, x) * stride;
      if (base != i && cod.digit(table[i], y) != cod.digit(table[base], y)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

Word ring_word(const SpacePtr& space, unsigned layers, const Monomial& ones) {
  std::vector<std::uint64_t> bits((space->size() * layers + 63) / 64, 0);
  for (Var v : ones) set_bit(bits, v, true);
  return Word(space, bits_to_letters(bits, space->size(), layers));
}

}  // namespace

// ---------------------------------------------------------------------------

NbhdScheme::NbhdScheme(SpacePtr source, SpacePtr target, int source_slice, int target_slice)
    : source_(std::move(source)),
      target_(std::move(target)),
      source_slice_(source_slice),
      target_slice_(target_slice),
      sets_(source_->size(), SiteSet(target_)) {}

NbhdScheme NbhdScheme::identity(SpacePtr space, int slice) {
  NbhdScheme out(space, space, slice, slice);
  for (Site s = 0; s < space->size(); ++s) out.sets_[s] = SiteSet::single(space, s);
  return out;
}

void NbhdScheme::set(Site s, SiteSet value) {
  require_same_space(value.space(), target_, "scheme value lives on the wrong space");
  sets_.at(s) = std::move(value);
}

SiteSet NbhdScheme::image(const SiteSet& sites) const {
  require_same_space(sites.space(), source_, "scheme applied to sites of another space");
  SiteSet out(target_);
  for (Site s : sites.members()) out |= sets_[s];
  return out;
}

bool NbhdScheme::contained_in(const NbhdScheme& other) const {
  require_same_orientation(*this, other, "scheme inclusion");
  for (Site s = 0; s < sets_.size(); ++s) {
    if (!sets_[s].subset_of(other.sets_[s])) return false;
  }
  return true;
}

bool NbhdScheme::operator==(const NbhdScheme& other) const {
  return source_slice_ == other.source_slice_ && target_slice_ == other.target_slice_ &&
         same_space(source_, other.source_) && same_space(target_, other.target_) &&
         sets_ == other.sets_;
}

NbhdScheme scheme_union(const NbhdScheme& n1, const NbhdScheme& n2) {
  require_same_orientation(n1, n2, "scheme union");
  NbhdScheme out = n1;
  for (Site s = 0; s < n1.source()->size(); ++s) out.set(s, n1.at(s) | n2.at(s));
  return out;
}

NbhdScheme scheme_intersect(const NbhdScheme& n1, const NbhdScheme& n2) {
  require_same_orientation(n1, n2, "scheme intersection");
  NbhdScheme out = n1;
  for (Site s = 0; s < n1.source()->size(); ++s) out.set(s, n1.at(s) & n2.at(s));
  return out;
}

NbhdScheme scheme_compose(const NbhdScheme& n2, const NbhdScheme& n1) {
  require_oriented(n1.target(), n1.target_slice(), n2.source(), n2.source_slice(),
                   "scheme composition");
  NbhdScheme out(n1.source(), n2.target(), n1.source_slice(), n2.target_slice());
  for (Site s = 0; s < n1.source()->size(); ++s) out.set(s, n2.image(n1.at(s)));
  return out;
}

NbhdScheme scheme_transpose(const NbhdScheme& n) {
  NbhdScheme out(n.target(), n.source(), n.target_slice(), n.source_slice());
  std::vector<SiteSet> sets(n.target()->size(), SiteSet(n.source()));
  for (Site s = 0; s < n.source()->size(); ++s) {
    for (Site t : n.at(s).members()) sets[t].insert(s);
  }
  for (Site t = 0; t < sets.size(); ++t) out.set(t, std::move(sets[t]));
  return out;
}

// ---------------------------------------------------------------------------

DependencyGraph::DependencyGraph(SpacePtr domain, SpacePtr codomain, std::vector<SiteSet> inputs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), inputs_(std::move(inputs)) {
  if (inputs_.size() != codomain_->size()) {
    throw Error(ErrorKind::ArityMismatch, "dependency graph needs one input set per output site");
  }
}

SiteSet DependencyGraph::outputs(Site x) const {
  SiteSet out(codomain_);
  for (Site y = 0; y < inputs_.size(); ++y) {
    if (inputs_[y].contains(x)) out.insert(y);
  }
  return out;
}

std::vector<std::pair<Site, Site>> DependencyGraph::edges() const {
  std::vector<std::pair<Site, Site>> out;
  for (Site x = 0; x < domain_->size(); ++x) {
    for (Site y = 0; y < inputs_.size(); ++y) {
      if (inputs_[y].contains(x)) out.emplace_back(x, y);
    }
  }
  return out;
}

NbhdScheme DependencyGraph::in_scheme(int dom_slice, int cod_slice) const {
  NbhdScheme out(codomain_, domain_, cod_slice, dom_slice);
  for (Site y = 0; y < inputs_.size(); ++y) out.set(y, inputs_[y]);
  return out;
}

NbhdScheme DependencyGraph::out_scheme(int dom_slice, int cod_slice) const {
  return scheme_transpose(in_scheme(dom_slice, cod_slice));
}

DependencyGraph dependency_graph(const BlockMap& f) {
  std::vector<SiteSet> inputs;
  const auto& cod = *f.codomain();
  if (f.is_ring()) {
    const auto& form = f.ring();
    for (Site y = 0; y < cod.size(); ++y) {
      inputs.push_back(ring_inputs(f.domain(), form.forward, form.layers, y));
    }
    return DependencyGraph(f.domain(), f.codomain(), std::move(inputs));
  }
  const auto& dom = *f.domain();
  const auto& table = f.table();
  inputs.assign(cod.size(), SiteSet(f.domain()));
  for (Site x = 0; x < dom.size(); ++x) {
    const auto stride = dom.stride(x);
    for (std::uint64_t i = 0; i < table.size(); ++i) {
      const auto base = i - dom.digit(i, x) * stride;
      if (base == i || table[i] == table[base]) continue;
      for (Site y = 0; y < cod.size(); ++y) {
        if (cod.digit(table[i], y) != cod.digit(table[base], y)) inputs[y].insert(x);
      }
    }
  }
  return DependencyGraph(f.domain(), f.codomain(), std::move(inputs));
}

SiteSet in_nbhd(const BlockMap& f, Site y) {
  if (y >= f.codomain()->size()) throw Error(ErrorKind::ArityMismatch, "output site out of range");
  if (f.is_ring()) return ring_inputs(f.domain(), f.ring().forward, f.ring().layers, y);
  return explicit_inputs(f, y);
}

SiteSet out_nbhd(const BlockMap& f, Site x) {
  if (x >= f.domain()->size()) throw Error(ErrorKind::ArityMismatch, "input site out of range");
  return dependency_graph(f).outputs(x);
}

NbhdScheme in_scheme(const BlockMap& f, int dom_slice, int cod_slice) {
  return dependency_graph(f).in_scheme(dom_slice, cod_slice);
}

NbhdScheme out_scheme(const BlockMap& f, int dom_slice, int cod_slice) {
  return dependency_graph(f).out_scheme(dom_slice, cod_slice);
}

std::optional<std::pair<Word, Word>> find_locality_violation(const BlockMap& f, const SiteSet& B,
                                                             const SiteSet& A) {
  require_same_space(B.space(), f.codomain(), "output set is not on the map's codomain");
  require_same_space(A.space(), f.domain(), "input set is not on the map's domain");
  if (f.is_ring()) {
    const auto& form = f.ring();
    for (Site y : B.members()) {
      for (unsigned c = 0; c < form.layers; ++c) {
        const auto& poly = form.forward[y * form.layers + c];
        for (Var b : poly.variables()) {
          if (A.contains(b / form.layers)) continue;
          // The derivative is nonzero, so it has a satisfying assignment; at
          // that word, flipping b flips output bit c.
          auto ones = poly.derivative(b).satisfying_assignment().value();
          Word v = ring_word(f.domain(), form.layers, ones);
          ones.push_back(b);
          std::sort(ones.begin(), ones.end());
          Word w = ring_word(f.domain(), form.layers, ones);
          return std::pair{std::move(v), std::move(w)};
        }
      }
    }
    return std::nullopt;
  }
  const auto& table = f.table();
  detail::Projection on_a(*f.domain(), A);
  detail::Projection on_b(*f.codomain(), B);
  constexpr auto kUnseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> first(on_a.size(), kUnseen);
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    auto& rep = first[on_a(i)];
    if (rep == kUnseen) {
      rep = i;
    } else if (on_b(table[rep]) != on_b(table[i])) {
      return std::pair{Word::from_index(f.domain(), rep), Word::from_index(f.domain(), i)};
    }
  }
  return std::nullopt;
}

bool check_locality(const BlockMap& f, const SiteSet& B, const SiteSet& A) {
  return !find_locality_violation(f, B, A).has_value();
}

}  // namespace qnb
