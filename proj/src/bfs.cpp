#include "tilecs/bfs.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "tilecs/error.hpp"

namespace tilecs {

ShellWalker::ShellWalker(const PeriodicGraph& g, const VertexId& base) : g_(&g) {
  g.check_vertex(base);
  cur_.push_back(base);
}

const std::vector<VertexId>& ShellWalker::advance() {
  scratch_.clear();
  for (const VertexId& v : cur_)
    g_->for_each_neighbor(v, [&](const VertexId& w) { scratch_.push_back(w); });
  std::sort(scratch_.begin(), scratch_.end());
  scratch_.erase(std::unique(scratch_.begin(), scratch_.end()), scratch_.end());

  std::vector<VertexId> next;
  next.reserve(scratch_.size());
  for (const VertexId& w : scratch_)
    if (!std::binary_search(cur_.begin(), cur_.end(), w) && !std::binary_search(prev_.begin(), prev_.end(), w))
      next.push_back(w);
  prev_ = std::move(cur_);
  cur_ = std::move(next);
  ++dist_;
  return cur_;
}

std::vector<std::int64_t> cs_terms(const PeriodicGraph& g, const VertexId& base, int n_max) {
  if (n_max < 0)
    throw InvalidArgument("n_max must be non-negative");
  ShellWalker walk(g, base);
  std::vector<std::int64_t> terms{1};
  terms.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n)
    terms.push_back(static_cast<std::int64_t>(walk.advance().size()));
  return terms;
}

CoordSeq coordination_sequence(const PeriodicGraph& g, const VertexId& base, int n_max) {
  return {g.spec().name, "", cs_terms(g, base, n_max)};
}

std::vector<VertexId> shell(const PeriodicGraph& g, const VertexId& base, int n) {
  if (n < 0)
    throw InvalidArgument("shell index must be non-negative");
  ShellWalker walk(g, base);
  while (walk.distance() < n)
    walk.advance();
  return walk.current();
}

std::optional<int> distance(const PeriodicGraph& g, const VertexId& base, const VertexId& target, int bound) {
  g.check_vertex(target);
  ShellWalker walk(g, base);
  for (;;) {
    const auto& s = walk.current();
    if (std::binary_search(s.begin(), s.end(), target))
      return walk.distance();
    if (walk.distance() >= bound)
      return std::nullopt;
    walk.advance();
  }
}

std::string to_csv(const CoordSeq& cs) {
  std::ostringstream out;
  if (!cs.tiling_key.empty())
    out << "# tiling: " << cs.tiling_key << "\n";
  if (!cs.base_label.empty())
    out << "# base: " << cs.base_label << "\n";
  out << "n,a(n)\n";
  for (std::size_t n = 0; n < cs.terms.size(); ++n)
    out << n << "," << cs.terms[n] << "\n";
  return out.str();
}

CoordSeq coordseq_from_csv(std::string_view text) {
  CoordSeq cs;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  auto to_int = [](std::string_view s, const std::string& line) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      fail_parse("csv: bad number in line '" + line + "'");
    return v;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    if (line.rfind("# tiling: ", 0) == 0) {
      cs.tiling_key = line.substr(10);
      continue;
    }
    if (line.rfind("# base: ", 0) == 0) {
      cs.base_label = line.substr(8);
      continue;
    }
    if (line[0] == '#')
      continue;
    if (!header) {
      if (line != "n,a(n)")
        fail_parse("csv: expected header 'n,a(n)'");
      header = true;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos)
      fail_parse("csv: expected 'n,a(n)' row, got '" + line + "'");
    std::string_view sv(line);
    std::int64_t n = to_int(sv.substr(0, comma), line);
    if (n != static_cast<std::int64_t>(cs.terms.size()))
      fail_parse("csv: rows must be consecutive from n=0");
    cs.terms.push_back(to_int(sv.substr(comma + 1), line));
  }
  if (!header)
    fail_parse("csv: missing header");
  return cs;
}

std::string to_json(const CoordSeq& cs) {
  nlohmann::ordered_json j;
  j["tiling"] = cs.tiling_key;
  j["base"] = cs.base_label;
  j["terms"] = cs.terms;
  return j.dump();
}

CoordSeq coordseq_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_parse(std::string("coordination sequence json: ") + e.what());
  }
  if (!j.is_object() || j.size() != 3 || !j.contains("tiling") || !j.contains("base") || !j.contains("terms"))
    fail_parse("coordination sequence json: expected exactly tiling, base, terms");
  try {
    return {j["tiling"].get<std::string>(), j["base"].get<std::string>(), j["terms"].get<std::vector<std::int64_t>>()};
  } catch (const nlohmann::json::exception& e) {
    fail_parse(std::string("coordination sequence json: ") + e.what());
  }
}

}  // namespace tilecs
