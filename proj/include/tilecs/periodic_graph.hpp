#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tilecs/quad_ext.hpp"

namespace tilecs {

struct VertexClass {
  std::string label;
  Vec2 position;          // inside the fundamental cell, rendering only
  int expected_degree = 3;
};

// Edge from class_a in cell c to class_b in cell c + offset.
struct EdgeTemplate {
  int class_a = 0;
  int class_b = 0;
  std::array<int, 2> offset{0, 0};

  EdgeTemplate reversed() const { return {class_b, class_a, {-offset[0], -offset[1]}}; }
  friend bool operator==(const EdgeTemplate&, const EdgeTemplate&) = default;
};

struct PeriodicGraphSpec {
  std::string name;
  std::array<Vec2, 2> basis;
  std::vector<VertexClass> classes;
  std::vector<EdgeTemplate> templates;
  std::string notes;
};

// Cells must stay within +-kSafeCell; anything beyond is reported as overflow.
inline constexpr std::int32_t kSafeCell = std::int32_t{1} << 30;

struct VertexId {
  int cls = 0;
  std::int32_t i = 0;
  std::int32_t j = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& v);

struct VertexIdHash {
  std::size_t operator()(const VertexId& v) const noexcept {
    std::uint64_t x = static_cast<std::uint32_t>(v.i);
    x = (x << 32) | static_cast<std::uint32_t>(v.j);
    x ^= static_cast<std::uint64_t>(v.cls) * 0x9e3779b97f4a7c15ULL;
    x ^= x >> 31;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

struct ValidationReport {
  bool structure_ok = true;     // indices in range, sane offsets
  bool simple_ok = true;        // no parallel edges, no self-loops
  bool degrees_ok = true;       // derived degree == expected_degree, >= 3
  bool connected_ok = true;     // ball certificate, see validate_spec
  std::vector<int> degrees;     // derived degree per class
  std::vector<std::string> issues;

  bool ok() const { return structure_ok && simple_ok && degrees_ok && connected_ok; }
};

inline constexpr int kConnectivityRadius = 10;
inline constexpr int kMaxCatalogOffset = 3;

// Runs every check and collects failures; never throws.
// Connectivity is certified on the ball of radius 10 around class 0 at cell
// (0,0): every class must occur in it, and so must the four lattice
// translates of the base vertex (otherwise the cover could split into
// parallel components that the ball alone cannot see).
ValidationReport validate_spec(const PeriodicGraphSpec& spec);

// One neighbor step: class and cell offset relative to the source cell.
struct Step {
  int cls;
  int di;
  int dj;
  int template_index;
  bool forward;
};

// Precomputed adjacency of the infinite cover. Neighbor order is canonical:
// by template index, forward direction before backward.
class PeriodicGraph {
public:
  // Throws InvalidArgument if a template references a missing class.
  explicit PeriodicGraph(PeriodicGraphSpec spec);

  const PeriodicGraphSpec& spec() const { return spec_; }
  int num_classes() const { return static_cast<int>(spec_.classes.size()); }
  int degree(int cls) const { return static_cast<int>(steps_.at(static_cast<std::size_t>(cls)).size()); }
  int max_degree() const;
  const std::vector<Step>& steps(int cls) const { return steps_.at(static_cast<std::size_t>(cls)); }

  std::vector<VertexId> neighbors(const VertexId& v) const;

  template <typename F>
  void for_each_neighbor(const VertexId& v, F&& f) const {
    for (const Step& s : steps_[static_cast<std::size_t>(v.cls)])
      f(VertexId{s.cls, shifted(v.i, s.di), shifted(v.j, s.dj)});
  }

  // Throws InvalidArgument for a bad class, OverflowError for an unsafe cell.
  void check_vertex(const VertexId& v) const;

  // Cartesian position, exact.
  Vec2 position(const VertexId& v) const;

private:
  static std::int32_t shifted(std::int32_t c, int d);

  PeriodicGraphSpec spec_;
  std::vector<std::vector<Step>> steps_;
};

std::vector<VertexId> neighbors(const PeriodicGraph& g, const VertexId& v);

// Every vertex at distance <= radius, sorted by (distance, vertex).
std::vector<std::pair<VertexId, int>> ball(const PeriodicGraph& g, const VertexId& base, int radius);

}  // namespace tilecs

template <>
struct std::hash<tilecs::VertexId> : tilecs::VertexIdHash {};
