#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilecs/periodic_graph.hpp"

namespace tilecs {

struct CoordSeq {
  std::string tiling_key;
  std::string base_label;
  std::vector<std::int64_t> terms;

  friend bool operator==(const CoordSeq&, const CoordSeq&) = default;
};

// Breadth-first walk over distance shells, keeping only the previous and the
// current shell. Shells come out sorted by VertexId.
class ShellWalker {
public:
  ShellWalker(const PeriodicGraph& g, const VertexId& base);

  int distance() const { return dist_; }
  const std::vector<VertexId>& current() const { return cur_; }
  // Advances to the next shell and returns it.
  const std::vector<VertexId>& advance();

private:
  const PeriodicGraph* g_;
  std::vector<VertexId> prev_;
  std::vector<VertexId> cur_;
  std::vector<VertexId> scratch_;
  int dist_ = 0;
};

std::vector<std::int64_t> cs_terms(const PeriodicGraph& g, const VertexId& base, int n_max);
CoordSeq coordination_sequence(const PeriodicGraph& g, const VertexId& base, int n_max);

// Vertices at distance exactly n, sorted.
std::vector<VertexId> shell(const PeriodicGraph& g, const VertexId& base, int n);

// Exact distance if it is at most bound, otherwise nullopt.
std::optional<int> distance(const PeriodicGraph& g, const VertexId& base, const VertexId& target, int bound);

// CSV: optional "# tiling: k" / "# base: b" lines, a "n,a(n)" header, then rows.
std::string to_csv(const CoordSeq& cs);
CoordSeq coordseq_from_csv(std::string_view text);

// JSON: {"tiling": ..., "base": ..., "terms": [...]}
std::string to_json(const CoordSeq& cs);
CoordSeq coordseq_from_json(std::string_view text);

}  // namespace tilecs
