#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qnb/block_map.hpp"
#include "qnb/cellspace.hpp"

namespace qnb {

// A map from the sites of `source` to site sets of `target`.
//
// Each side also carries an integer slice label naming which stage of a chain
// of spaces it refers to. A map X -> Y and its inverse share cell spaces when
// X and Y coincide, so the labels are what catches a scheme composed the
// wrong way round.
class NbhdScheme {
 public:
  NbhdScheme(SpacePtr source, SpacePtr target, int source_slice, int target_slice);
  static NbhdScheme identity(SpacePtr space, int slice);

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  int source_slice() const { return source_slice_; }
  int target_slice() const { return target_slice_; }

  const SiteSet& at(Site s) const { return sets_.at(s); }
  void set(Site s, SiteSet value);
  // Union of at(s) over s in `sites`.
  SiteSet image(const SiteSet& sites) const;

  // Sitewise inclusion; throws on orientation mismatch.
  bool contained_in(const NbhdScheme& other) const;
  bool operator==(const NbhdScheme& other) const;

 private:
  SpacePtr source_;
  SpacePtr target_;
  int source_slice_;
  int target_slice_;
  std::vector<SiteSet> sets_;
};

NbhdScheme scheme_union(const NbhdScheme& n1, const NbhdScheme& n2);
NbhdScheme scheme_intersect(const NbhdScheme& n1, const NbhdScheme& n2);
// (n2 o n1)(x) = union of n2(y) over y in n1(x). n1's target must be n2's source.
NbhdScheme scheme_compose(const NbhdScheme& n2, const NbhdScheme& n1);
NbhdScheme scheme_transpose(const NbhdScheme& n);

// Edges (x, y) of a map X -> Y such that changing the letter at x alone can
// change the output letter at y.
class DependencyGraph {
 public:
  DependencyGraph(SpacePtr domain, SpacePtr codomain, std::vector<SiteSet> inputs);

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  bool has_edge(Site x, Site y) const { return inputs_.at(y).contains(x); }
  const SiteSet& inputs(Site y) const { return inputs_.at(y); }
  SiteSet outputs(Site x) const;
  std::vector<std::pair<Site, Site>> edges() const;

  // y -> inputs(y), oriented codomain -> domain.
  NbhdScheme in_scheme(int dom_slice = 0, int cod_slice = 1) const;
  // x -> outputs(x), oriented domain -> codomain.
  NbhdScheme out_scheme(int dom_slice = 0, int cod_slice = 1) const;

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<SiteSet> inputs_;
};

DependencyGraph dependency_graph(const BlockMap& f);

SiteSet in_nbhd(const BlockMap& f, Site y);
SiteSet out_nbhd(const BlockMap& f, Site x);
NbhdScheme in_scheme(const BlockMap& f, int dom_slice = 0, int cod_slice = 1);
NbhdScheme out_scheme(const BlockMap& f, int dom_slice = 0, int cod_slice = 1);

// Two domain words agreeing on A whose images differ somewhere on B, if any.
std::optional<std::pair<Word, Word>> find_locality_violation(const BlockMap& f, const SiteSet& B,
                                                             const SiteSet& A);
// True iff the letters of f(v) on B are determined by the letters of v on A.
bool check_locality(const BlockMap& f, const SiteSet& B, const SiteSet& A);

}  // namespace qnb
