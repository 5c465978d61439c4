#include "qnb/qnbhd.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "projection.hpp"
#include "qnb/error.hpp"

namespace qnb {

namespace {

// Ring maps scan condition 3 only over windows up to this many words; beyond
// it the commutant test is far cheaper.
constexpr std::uint64_t kRingScanBudget = std::uint64_t{1} << 16;

struct LettersHash {
  std::size_t operator()(const std::vector<Letter>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto a : v) h = (h ^ a) * 0x100000001b3ULL;
    return h;
  }
};

// Number of words on `sites`, or nullopt once it exceeds `limit`.
std::optional<std::uint64_t> count_words(const CellSpace& space, const std::vector<Site>& sites,
                                         std::uint64_t limit) {
  std::uint64_t n = 1;
  for (Site s : sites) {
    const auto a = space.alphabet_size(s);
    if (n > limit / a) return std::nullopt;
    n *= a;
  }
  return n;
}

// Sets the letters at `sites` to the mixed-radix digits of `index`.
void set_letters(std::vector<Letter>& letters, const CellSpace& space,
                 const std::vector<Site>& sites, std::uint64_t index) {
  for (Site s : sites) {
    const auto a = space.alphabet_size(s);
    letters[s] = static_cast<Letter>(index % a);
    index /= a;
  }
}

bool agree_on(const Word& a, const Word& b, const SiteSet& sites) {
  for (Site s : sites.members()) {
    if (a[s] != b[s]) return false;
  }
  return true;
}

Var shift_var(Var v, long cells, std::size_t n, unsigned layers) {
  const long cell = (static_cast<long>(v / layers) + cells) % static_cast<long>(n);
  return static_cast<Var>(cell * layers + v % layers);
}

// Commutant test failure: flipping input bit `b` moves output bit `d`
// (outside B) by an amount that reads output bit `c` (inside B).
struct CommutantFailure {
  Var b;
  Var d;
  Var c;
};

class Analysis {
 public:
  explicit Analysis(BlockMap f) : f_(std::move(f)) {}

  const BlockMap& map() const { return f_; }

  const BlockMap& inverse() {
    if (!inverse_) inverse_ = invert(f_);
    return *inverse_;
  }

  // In- and out-sets of f (forward) and of its inverse (backward).
  const std::vector<SiteSet>& fwd_in() { return graphs().fwd_in; }
  const std::vector<SiteSet>& fwd_out() { return graphs().fwd_out; }
  const std::vector<SiteSet>& bwd_in() { return graphs().bwd_in; }
  const std::vector<SiteSet>& bwd_out() { return graphs().bwd_out; }

  QuantumLocalityWitness localized(const SiteSet& B, const SiteSet& A, Method method);
  SiteSet quantum_in(Site y, Method method);
  SiteSet upper(Site y);

 private:
  struct Graphs {
    std::vector<SiteSet> fwd_in, fwd_out, bwd_in, bwd_out;
  };
  struct ScanPlan {
    SiteSet D;
    std::vector<Site> a_sites;
    std::vector<Site> c_sites;
    std::vector<Site> d_sites;
    bool feasible = false;
    bool cheap = false;  // within the scan budget for maps that also have the commutant test
  };

  Graphs& graphs();
  static std::vector<SiteSet> sets_of(const NbhdScheme& s);
  static SiteSet image(const std::vector<SiteSet>& sets, const SiteSet& sites, const SpacePtr& to);

  ScanPlan plan(const SiteSet& B, const SiteSet& A);
  std::vector<Letter> outputs_at(const std::vector<Letter>& letters, const std::vector<Site>& sites);
  std::optional<Counterexample> scan_condition3(const ScanPlan& plan);

  bool classical_member(Site x, const SiteSet& B);
  std::optional<CommutantFailure> commutant_failure(Site x, const SiteSet& B);
  Counterexample commutant_counterexample(const CommutantFailure& fail);
  const std::vector<std::vector<std::pair<Var, std::vector<Var>>>>& transported();
  std::map<Var, Anf> commutant_polys(Var b);

  BlockMap f_;
  std::optional<BlockMap> inverse_;
  std::optional<Graphs> graphs_;
  // Per input bit of cell 0: (output bit d, variables of (d_b f_d) o f^-1).
  std::optional<std::vector<std::vector<std::pair<Var, std::vector<Var>>>>> transported_;
};

std::vector<SiteSet> Analysis::sets_of(const NbhdScheme& s) {
  std::vector<SiteSet> out;
  for (Site i = 0; i < s.source()->size(); ++i) out.push_back(s.at(i));
  return out;
}

SiteSet Analysis::image(const std::vector<SiteSet>& sets, const SiteSet& sites, const SpacePtr& to) {
  SiteSet out(to);
  for (Site s : sites.members()) out |= sets[s];
  return out;
}

Analysis::Graphs& Analysis::graphs() {
  if (!graphs_) {
    const auto fwd = dependency_graph(f_);
    const auto bwd = dependency_graph(inverse());
    graphs_ = Graphs{sets_of(fwd.in_scheme()), sets_of(fwd.out_scheme()), sets_of(bwd.in_scheme()),
                     sets_of(bwd.out_scheme())};
  }
  return *graphs_;
}

SiteSet Analysis::upper(Site y) {
  const auto& X = f_.domain();
  const auto& Y = f_.codomain();
  const auto at_y = SiteSet::single(Y, y);
  // in_f o out_f o out_{f^-1}
  const auto a = image(bwd_out(), at_y, X);
  const auto b = image(fwd_out(), a, Y);
  const auto first = image(fwd_in(), b, X);
  // out_{f^-1} o in_{f^-1} o in_f
  const auto c = image(fwd_in(), at_y, X);
  const auto d = image(bwd_in(), c, Y);
  const auto second = image(bwd_out(), d, X);
  return first & second;
}

Analysis::ScanPlan Analysis::plan(const SiteSet& B, const SiteSet& A) {
  ScanPlan p{SiteSet(f_.codomain()), {}, {}, {}, false};
  // Words agreeing off A have images agreeing off N->(A), so only the output
  // letters on D decide the predicate, and those read only N<-(D).
  p.D = image(fwd_out(), A, f_.codomain()) - B;
  const auto W = image(fwd_in(), p.D, f_.domain()) | A;
  p.a_sites = A.members();
  p.c_sites = (W - A).members();
  p.d_sites = p.D.members();
  p.feasible = count_words(*f_.domain(), W.members(), enumeration_cap()).has_value();
  p.cheap = count_words(*f_.domain(), W.members(), std::min(enumeration_cap(), kRingScanBudget)).has_value();
  return p;
}

std::vector<Letter> Analysis::outputs_at(const std::vector<Letter>& letters,
                                         const std::vector<Site>& sites) {
  if (f_.is_ring()) return f_.apply_at(letters, sites);
  const auto image = f_.table()[f_.domain()->encode(letters)];
  std::vector<Letter> out;
  out.reserve(sites.size());
  for (Site s : sites) out.push_back(f_.codomain()->digit(image, s));
  return out;
}

std::optional<Counterexample> Analysis::scan_condition3(const ScanPlan& p) {
  if (p.d_sites.empty()) return std::nullopt;
  const auto& X = *f_.domain();
  const auto n_a = *count_words(X, p.a_sites, UINT64_MAX);
  const auto n_c = *count_words(X, p.c_sites, UINT64_MAX);
  std::vector<Letter> letters(X.size(), 0);
  std::vector<std::uint32_t> reference(n_a), labels(n_a);
  std::unordered_map<std::vector<Letter>, std::uint32_t, LettersHash> seen;

  for (std::uint64_t c = 0; c < n_c; ++c) {
    set_letters(letters, X, p.c_sites, c);
    seen.clear();
    auto& out = c == 0 ? reference : labels;
    for (std::uint64_t a = 0; a < n_a; ++a) {
      set_letters(letters, X, p.a_sites, a);
      auto [it, fresh] = seen.try_emplace(outputs_at(letters, p.d_sites), static_cast<std::uint32_t>(a));
      out[a] = it->second;
    }
    if (c == 0) continue;
    for (std::uint64_t a = 0; a < n_a; ++a) {
      if (labels[a] == reference[a]) continue;
      // a is grouped with an earlier index under one context but not the
      // other; that earlier index and a make the counterexample pair.
      const std::uint64_t p_idx = std::min(labels[a], reference[a]);
      auto word = [&](std::uint64_t a_idx, std::uint64_t c_idx) {
        std::vector<Letter> w(X.size(), 0);
        set_letters(w, X, p.c_sites, c_idx);
        set_letters(w, X, p.a_sites, a_idx);
        return Word(f_.domain(), std::move(w));
      };
      return Counterexample{3, {word(p_idx, 0), word(a, 0), word(p_idx, c), word(a, c)}};
    }
  }
  return std::nullopt;
}

bool Analysis::classical_member(Site x, const SiteSet& B) {
  for (Site y : B.members()) {
    if (fwd_in()[y].contains(x)) return true;
  }
  return !(bwd_in()[x] & B).empty();
}

// Nonzero components of f o t_b o f^-1 + id, where t_b flips input bit b:
// output bit d maps to (d_b f_d) o f^-1. A composite is conjugated one factor
// at a time, which keeps every substitution down to single-step polynomials.
std::map<Var, Anf> Analysis::commutant_polys(Var b) {
  const auto& form = f_.ring();
  std::vector<std::shared_ptr<const RingForm>> factors = form.factors;
  if (factors.empty()) {
    auto self = std::make_shared<RingForm>(form);
    if (!self->inverse) self->inverse = inverse().ring().forward;
    factors.push_back(std::move(self));
  }
  std::map<Var, Anf> moved{{b, Anf::one()}};
  for (const auto& h : factors) {
    std::vector<Anf> shifted;
    std::vector<const Anf*> images(h->bits(), nullptr);
    shifted.reserve(moved.size());
    for (const auto& [j, r] : moved) {
      shifted.push_back(Anf::var(j) + r);
      images[j] = &shifted.back();
    }
    std::map<Var, Anf> next;
    for (Var d = 0; d < h->bits(); ++d) {
      const auto& hd = h->forward[d];
      bool touched = false;
      for (const auto& [j, r] : moved) touched = touched || hd.depends_on(j);
      if (!touched) continue;
      auto diff = hd.substitute(std::span<const Anf* const>(images)) + hd;
      if (diff.is_zero()) continue;
      next.emplace(d, diff.substitute(std::span<const Anf>(*h->inverse)));
    }
    moved = std::move(next);
  }
  return moved;
}

const std::vector<std::vector<std::pair<Var, std::vector<Var>>>>& Analysis::transported() {
  if (transported_) return *transported_;
  const auto& form = f_.ring();
  std::vector<std::vector<std::pair<Var, std::vector<Var>>>> out(form.layers);
  for (Var b = 0; b < form.layers; ++b) {
    for (const auto& [d, poly] : commutant_polys(b)) out[b].emplace_back(d, poly.variables());
  }
  transported_ = std::move(out);
  return *transported_;
}

std::optional<CommutantFailure> Analysis::commutant_failure(Site x, const SiteSet& B) {
  const auto& form = f_.ring();
  const auto L = form.layers;
  const auto n = form.cells;
  const auto shift = static_cast<long>(x);
  for (Var b0 = 0; b0 < L; ++b0) {
    for (const auto& [d0, vars] : transported()[b0]) {
      const auto d = shift_var(d0, shift, n, L);
      if (B.contains(d / L)) continue;
      for (Var c0 : vars) {
        const auto c = shift_var(c0, shift, n, L);
        if (B.contains(c / L)) return CommutantFailure{shift_var(b0, shift, n, L), d, c};
      }
    }
  }
  return std::nullopt;
}

Counterexample Analysis::commutant_counterexample(const CommutantFailure& fail) {
  const auto& form = f_.ring();
  const auto& inv = inverse();
  const auto moved = commutant_polys(fail.b).at(fail.d);
  auto ones = moved.derivative(fail.c).satisfying_assignment().value();
  std::vector<std::uint64_t> u((form.bits() + 63) / 64, 0);
  for (Var v : ones) set_bit(u, v, true);
  auto u2 = u;
  set_bit(u2, fail.c, true);
  const auto letters_u = bits_to_letters(u, form.cells, form.layers);
  const auto letters_u2 = bits_to_letters(u2, form.cells, form.layers);
  auto v = inv.apply(letters_u);
  auto w = inv.apply(letters_u2);
  auto flip = [&](std::vector<Letter> letters) {
    letters[fail.b / form.layers] ^= Letter{1} << (fail.b % form.layers);
    return Word(f_.domain(), std::move(letters));
  };
  return Counterexample{3, {Word(f_.domain(), v), Word(f_.domain(), w), flip(v), flip(w)}};
}

QuantumLocalityWitness Analysis::localized(const SiteSet& B, const SiteSet& A, Method method) {
  require_same_space(B.space(), f_.codomain(), "output region is not on the map's codomain");
  require_same_space(A.space(), f_.domain(), "input region is not on the map's domain");
  QuantumLocalityWitness wit{B, A, true, true, true, {}};

  if (auto cex = find_locality_violation(f_, B, A)) {
    wit.cond1 = false;
    wit.counterexamples.push_back({1, {cex->first, cex->second}});
  }
  // No observable outside A may be turned into one reaching B: by duality on
  // the inverse, outputs agreeing off B must have preimages agreeing off A.
  if (auto cex = find_locality_violation(inverse(), A.complement(), B.complement())) {
    wit.cond2 = false;
    wit.counterexamples.push_back(
        {2, {inverse().apply(cex->first), inverse().apply(cex->second)}});
  }

  const bool algebraic_ready = f_.is_ring() && wit.cond1 && wit.cond2;
  const auto p = plan(B, A);
  const bool prefer_algebra = method == Method::algebraic || (method == Method::automatic && !p.cheap);
  if (prefer_algebra && algebraic_ready) {
    // fall through to the commutant test below
  } else if (p.feasible) {
    if (auto cex = scan_condition3(p)) {
      wit.cond3 = false;
      wit.counterexamples.push_back(std::move(*cex));
    }
    return wit;
  } else if (!algebraic_ready) {
    throw Error(ErrorKind::DimensionCapExceeded,
                "condition 3 needs a window of more than " + std::to_string(enumeration_cap()) +
                    " words");
  }
  // With conditions 1 and 2 in place, localization (and so condition 3)
  // holds iff conjugating the algebra of each cell outside A lands off B.
  for (Site x : A.complement().members()) {
    if (auto fail = commutant_failure(x, B)) {
      wit.cond3 = false;
      wit.counterexamples.push_back(commutant_counterexample(*fail));
      break;
    }
  }
  return wit;
}

SiteSet Analysis::quantum_in(Site y, Method method) {
  const auto& X = f_.domain();
  const auto at_y = SiteSet::single(f_.codomain(), y);
  SiteSet found(X);
  const bool ring = f_.is_ring();
  const auto candidates = ring && method == Method::automatic ? upper(y) : SiteSet::all(X);
  for (Site x : candidates.members()) {
    auto rest = SiteSet::all(X);
    rest.erase(x);
    bool member;
    if (!ring || (method == Method::automatic && plan(at_y, rest).cheap)) {
      member = !localized(at_y, rest, method).localized();
    } else {
      member = classical_member(x, at_y) || commutant_failure(x, at_y).has_value();
    }
    if (member) found.insert(x);
  }
  const auto check = localized(at_y, found, method);
  if (!check.localized()) {
    throw Error(ErrorKind::MinimalityViolation,
                "union of single-site failures for output " + X->id(y) +
                    " is not itself a localization region (conditions " +
                    std::to_string(check.cond1) + std::to_string(check.cond2) +
                    std::to_string(check.cond3) + ")");
  }
  return found;
}

Analysis make_analysis(const BlockMap& f, Method method) {
  if (method == Method::enumerate) return Analysis(tabulate(f));
  return Analysis(f);
}

}  // namespace

// ---------------------------------------------------------------------------

int q_oracle(const BlockMap& f, const Word& v, const Word& v2, const PartialWord& w,
             const PartialWord& w2) {
  require_same_space(v.space(), f.domain(), "q_oracle: v is not a domain word");
  require_same_space(v2.space(), f.domain(), "q_oracle: v' is not a domain word");
  require_same_space(w.domain.space(), f.codomain(), "q_oracle: w is not on the codomain");
  if (!(w.domain == w2.domain)) {
    throw Error(ErrorKind::SpaceMismatch, "q_oracle: w and w' live on different regions");
  }
  const Word fv = f.apply(v);
  const Word fv2 = f.apply(v2);
  const auto& B = w.domain;
  if (!(fv.restrict_to(B) == w) || !(fv2.restrict_to(B) == w2)) return 0;
  return agree_on(fv, fv2, B.complement()) ? 1 : 0;
}

QuantumLocalityWitness quantum_localized(const BlockMap& f, const SiteSet& B, const SiteSet& A,
                                         Method method) {
  auto analysis = make_analysis(f, method);
  return analysis.localized(B, A, method);
}

bool replays(const BlockMap& f, const SiteSet& B, const SiteSet& A, const Counterexample& c) {
  const auto not_a = A.complement();
  const auto not_b = B.complement();
  auto images_agree_off_b = [&](const Word& a, const Word& b) {
    return agree_on(f.apply(a), f.apply(b), not_b);
  };
  switch (c.condition) {
    case 1:
      return c.words.size() == 2 && agree_on(c.words[0], c.words[1], A) &&
             !agree_on(f.apply(c.words[0]), f.apply(c.words[1]), B);
    case 2:
      return c.words.size() == 2 && !agree_on(c.words[0], c.words[1], not_a) &&
             images_agree_off_b(c.words[0], c.words[1]);
    case 3: {
      if (c.words.size() != 4) return false;
      const auto& [v, w, v2, w2] = std::tie(c.words[0], c.words[1], c.words[2], c.words[3]);
      return agree_on(v, w, not_a) && agree_on(v2, w2, not_a) && agree_on(v, v2, A) &&
             agree_on(w, w2, A) && images_agree_off_b(v, w) != images_agree_off_b(v2, w2);
    }
    default:
      return false;
  }
}

bool localized_by_matrix_elements(const BlockMap& f, const SiteSet& B, const SiteSet& A) {
  const auto g = tabulate(f);
  const auto& X = g.domain();
  const auto& Y = g.codomain();
  const auto dim = X->require_enumerable("matrix-element scan");
  const auto& table = g.table();
  detail::Projection on_a(*X, A), off_a(*X, A.complement());
  detail::Projection on_b(*Y, B), off_b(*Y, B.complement());
  const auto nb = on_b.size();
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint8_t>> signatures;
  std::vector<std::uint8_t> sig(nb * nb);
  for (std::uint64_t v = 0; v < dim; ++v) {
    for (std::uint64_t v2 = 0; v2 < dim; ++v2) {
      for (std::uint64_t w = 0; w < nb; ++w) {
        for (std::uint64_t w2 = 0; w2 < nb; ++w2) {
          const bool q = on_b(table[v]) == w && on_b(table[v2]) == w2 &&
                         off_b(table[v]) == off_b(table[v2]);
          sig[w * nb + w2] = q ? 1 : 0;
        }
      }
      if (off_a(v) != off_a(v2)) {
        if (std::find(sig.begin(), sig.end(), 1) != sig.end()) return false;
        continue;
      }
      auto [it, fresh] = signatures.try_emplace({on_a(v), on_a(v2)}, sig);
      if (!fresh && it->second != sig) return false;
    }
  }
  return true;
}

SiteSet quantum_in_nbhd(const BlockMap& f, Site y, Method method) {
  if (y >= f.codomain()->size()) throw Error(ErrorKind::ArityMismatch, "output site out of range");
  auto analysis = make_analysis(f, method);
  auto found = analysis.quantum_in(y, method);
  return SiteSet(f.domain(), found.members());
}

NbhdScheme quantum_in_scheme(const BlockMap& f, int dom_slice, int cod_slice, Method method) {
  auto analysis = make_analysis(f, method);
  NbhdScheme out(f.codomain(), f.domain(), cod_slice, dom_slice);
  for (Site y = 0; y < f.codomain()->size(); ++y) {
    out.set(y, SiteSet(f.domain(), analysis.quantum_in(y, method).members()));
  }
  return out;
}

bool BoundReport::all_hold() const {
  return std::all_of(lower_holds.begin(), lower_holds.end(), [](bool b) { return b; }) &&
         std::all_of(upper_holds.begin(), upper_holds.end(), [](bool b) { return b; });
}

BoundReport simple_bound(const BlockMap& f, Method method) {
  const auto inv = invert(f);
  const auto in_f = in_scheme(f, 0, 1);
  const auto out_f = out_scheme(f, 0, 1);
  const auto in_inv = in_scheme(inv, 1, 0);
  const auto out_inv = out_scheme(inv, 1, 0);
  BoundReport report{
      scheme_union(in_f, out_inv),
      quantum_in_scheme(f, 0, 1, method),
      scheme_intersect(scheme_compose(in_f, scheme_compose(out_f, out_inv)),
                       scheme_compose(out_inv, scheme_compose(in_inv, in_f))),
      {},
      {}};
  for (Site y = 0; y < f.codomain()->size(); ++y) {
    report.lower_holds.push_back(report.lower.at(y).subset_of(report.computed.at(y)));
    report.upper_holds.push_back(report.computed.at(y).subset_of(report.upper.at(y)));
  }
  return report;
}

NbhdScheme composition_bound(std::span<const BlockMap> fs, Method method) {
  if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "composition bound of an empty chain");
  for (std::size_t i = 1; i < fs.size(); ++i) {
    require_same_space(fs[i - 1].codomain(), fs[i].domain(), "chain is not composable");
  }
  const int n = static_cast<int>(fs.size());
  // prefix[i] = f_i o .. o f_1 (1-based), suffix[i] = f_n o .. o f_i.
  std::vector<std::optional<BlockMap>> prefix(n + 2), suffix(n + 2);
  for (int i = 1; i <= n; ++i) prefix[i] = i == 1 ? fs[0] : compose(fs[i - 1], *prefix[i - 1]);
  for (int i = n; i >= 1; --i) suffix[i] = i == n ? fs[n - 1] : compose(*suffix[i + 1], fs[i - 1]);

  std::optional<NbhdScheme> bound;
  for (int k = 1; k <= n; ++k) {
    const auto& fk = fs[k - 1];
    const auto left = k > 1 ? in_scheme(*prefix[k - 1], 1, k) : NbhdScheme::identity(fk.domain(), k);
    const auto middle = quantum_in_scheme(fk, k, k + 1, method);
    const auto right = k < n ? out_scheme(invert(*suffix[k + 1]), n + 1, k + 1)
                             : NbhdScheme::identity(fk.codomain(), n + 1);
    const auto term = scheme_compose(left, scheme_compose(middle, right));
    bound = bound ? scheme_union(*bound, term) : term;
  }
  return *bound;
}

bool duality_check(const BlockMap& f, Method method) {
  const auto forward = quantum_in_scheme(f, 0, 1, method);
  const auto backward = quantum_in_scheme(invert(f), 1, 0, method);
  return scheme_transpose(forward) == backward;
}

IterationBound iterate_bound(long alpha, long beta, long gamma, long delta, unsigned k) {
  if (alpha < 0 || beta < 0 || gamma < 0 || delta < 0) {
    throw Error(ErrorKind::InvalidArgument, "iteration radii must be nonnegative");
  }
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "iteration count must be positive");
  const long m = static_cast<long>(k) + 1;
  const Interval iv{-m * std::max(alpha, delta) - std::min(beta, gamma),
                    m * std::max(beta, gamma) + std::min(alpha, delta)};
  return {alpha, beta, gamma, delta, k, iv};
}

namespace {

// Signed hull of a ring site set around cell 0.
Interval signed_hull(const SiteSet& s) {
  const long n = static_cast<long>(s.space()->size());
  Interval iv{n, -n};
  for (Site x : s.members()) {
    long p = static_cast<long>(x);
    if (p > n / 2) p -= n;
    iv.lo = std::min(iv.lo, p);
    iv.hi = std::max(iv.hi, p);
  }
  if (iv.lo > iv.hi) return {0, 0};
  return iv;
}

}  // namespace

IterationBound ring_radii(const BlockMap& f, unsigned k) {
  if (!f.is_ring()) throw Error(ErrorKind::InvalidArgument, "radii need a ring map");
  const auto fwd = signed_hull(in_nbhd(f, 0));
  const auto bwd = signed_hull(in_nbhd(invert(f), 0));
  return iterate_bound(std::max(0L, -fwd.lo), std::max(0L, fwd.hi), std::max(0L, -bwd.lo),
                       std::max(0L, bwd.hi), k);
}

}  // namespace qnb
