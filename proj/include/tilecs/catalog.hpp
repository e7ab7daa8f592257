#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilecs/periodic_graph.hpp"

namespace tilecs {

// One vertex orbit of a catalog tiling. All classes of the orbit carry the
// same label in the spec and share one coordination sequence.
struct BaseChoice {
  std::string label;
  VertexId base;                      // first class of the orbit, cell (0,0)
  std::vector<int> orbit;             // class indices
  std::string oeis;
  std::vector<std::int64_t> pinned;   // a(0..7)
};

struct CatalogEntry {
  std::string key;
  std::string title;                  // vertex-figure style name, e.g. "3.4.6.4"
  PeriodicGraphSpec spec;
  std::vector<BaseChoice> bases;

  const BaseChoice& base(const std::string& label) const;  // UnknownKeyError
  PeriodicGraph graph() const { return PeriodicGraph(spec); }
};

struct CatalogListing {
  std::string key;
  std::string title;
  std::vector<std::string> labels;
  std::vector<std::string> oeis_refs;
};

namespace catalog {

inline constexpr int kPinnedTerms = 8;

// Keys in their fixed listing order.
const std::vector<std::string>& keys();

// Validated built-in entry; throws UnknownKeyError for unknown keys.
const CatalogEntry& get(const std::string& key);

// Builds and validates an entry for a known key from an external spec
// (for instance a file from a data directory). Throws Error when the spec
// fails validation or its prefixes disagree with the pinned values.
CatalogEntry from_spec(const std::string& key, PeriodicGraphSpec spec);

std::vector<CatalogListing> list_entries();

}  // namespace catalog
}  // namespace tilecs
