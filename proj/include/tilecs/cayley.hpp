#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilecs/bfs.hpp"
#include "tilecs/isometry.hpp"

namespace tilecs {

struct Letter {
  int gen;    // index into GroupPresentation::generators
  int power;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over the generators.
using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_text;  // source text, one per relator

  int generator_index(std::string_view name) const;  // -1 if absent
  bool is_involution(int gen) const;                  // some relator is exactly X^2
  // Generators and inverses, one letter per involution.
  std::vector<Letter> growth_generators() const;
  std::string word_to_string(const Word& w) const;
};

// Parses one relation line: relators separated by top-level commas, each an
// equation chain "u = v = ..." or a bare word meaning "word = 1".
//   word   := factor*
//   factor := atom [digits | "^" ["-"] digits]
//   atom   := generator letter | "1" | "(" word ")" | "[" word "," word "]"
// [A,B] is the commutator A^-1 B^-1 A B.
void add_relations(GroupPresentation& pres, std::string_view line);
Word parse_word(const GroupPresentation& pres, std::string_view text);
Word reduce(Word w);
Word invert(const Word& w);

using Realization = std::map<std::string, ExactIsometry>;

// Parses "[flip] rot <degrees> [+ (x, y)]" or "shift (x, y)".
ExactIsometry parse_isometry(std::string_view text);

// A group description file: presentation, the tiling it labels, and optionally
// a realization by isometries of that tiling.
struct GroupFile {
  std::string key;
  std::string tiling;
  GroupPresentation presentation;
  Realization realization;
};

GroupFile parse_group_file(std::string_view text, const std::string& key = "");
// Shipped group files, keyed like catalog tilings.
std::vector<std::string> group_keys();
GroupFile load_group(const std::string& key);  // UnknownKeyError

ExactIsometry evaluate(const GroupPresentation& pres, const Realization& real, const Word& w);

struct RelationCheck {
  std::string relator;
  bool pass;
};

struct RelationReport {
  bool all_pass = true;
  std::vector<RelationCheck> checks;
};

RelationReport check_relations(const GroupPresentation& pres, const Realization& real);

inline constexpr int kMaxGrowthLength = 64;

// Number of distinct group elements of each word length 0..n_max over
// growth_generators(). n_max must not exceed kMaxGrowthLength.
std::vector<std::int64_t> growth_sequence(const GroupPresentation& pres, const Realization& real, int n_max);

}  // namespace tilecs
