#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qnb/block_map.hpp"
#include "qnb/nbhd.hpp"
#include "qnb/qnbhd.hpp"
#include "qnb/qsim.hpp"

namespace qnb {

using Json = nlohmann::json;

// Map files:
//   {"domain": [[id, size], ...], "codomain": [...], "ring": bool,
//    "kind": "explicit", "table": [codomain index per domain index]}
//   {"domain": ..., "codomain": ..., "ring": true, "kind": "rule",
//    "rule": {"layers": m, "outputs": [poly per bit], "inverse": [...]}}
// A polynomial is a list of monomials, a monomial a list of [offset, bit].
// Both kinds carry "descriptor": {"family", "params", "detail"}.
Json map_to_json(const BlockMap& f);
BlockMap map_from_json(const Json& j);
// Parses text, reporting syntax errors with their line and column.
BlockMap parse_map(std::string_view text);

// Explicit table form when the map has at most `max_words` words, rule form otherwise.
enum class MapFormat { automatic, explicit_table, rule };
Json map_to_json(const BlockMap& f, MapFormat format, std::uint64_t max_words = 1U << 16);

Json site_set_to_json(const SiteSet& s);
Json scheme_to_json(const NbhdScheme& n);
Json bound_report_to_json(const BoundReport& r);
Json signal_report_to_json(const SignalReport& r);
Json witness_to_json(const QuantumLocalityWitness& w);

Json descriptor_to_json(const MapDescriptor& d);
MapDescriptor descriptor_from_json(const Json& j);

// Member list, or the arc [lo,hi] for contiguous ring sets.
std::string describe(const SiteSet& s);
// Same, translated so that `origin` sits at 0.
std::string describe_relative(const SiteSet& s, Site origin);

}  // namespace qnb
