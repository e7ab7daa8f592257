#include "tilecs/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

#include "tilecs/embedded.hpp"
#include "tilecs/error.hpp"

namespace tilecs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits at `sep` outside brackets and parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

Word power(const Word& w, long e) {
  Word base = e < 0 ? invert(w) : w;
  Word out;
  for (long k = 0; k < (e < 0 ? -e : e); ++k)
    out.insert(out.end(), base.begin(), base.end());
  return out;
}

class WordParser {
public:
  WordParser(const GroupPresentation& pres, std::string_view text) : pres_(pres), s_(text) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != s_.size())
      error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return reduce(std::move(w));
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail_parse("word '" + std::string(s_) + "': " + msg);
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      error(std::string("expected '") + c + "'");
    ++pos_;
  }

  long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      error("expected an exponent");
    long v = 0;
    std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (v > 1000)
      error("exponent too large");
    return v;
  }

  Word word() {
    Word w;
    for (;;) {
      skip();
      if (pos_ == s_.size() || s_[pos_] == ')' || s_[pos_] == ']' || s_[pos_] == ',')
        return w;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
  }

  Word factor() {
    Word a = atom();
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return power(a, number());
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      bool neg = peek('-');
      if (neg)
        ++pos_;
      long e = number();
      return power(a, neg ? -e : e);
    }
    return a;
  }

  Word atom() {
    skip();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      Word w = invert(a);
      Word bi = invert(b);
      w.insert(w.end(), bi.begin(), bi.end());
      w.insert(w.end(), a.begin(), a.end());
      w.insert(w.end(), b.begin(), b.end());
      return w;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      int g = pres_.generator_index(std::string_view(&s_[pos_], 1));
      if (g < 0)
        error("undeclared generator '" + std::string(1, c) + "'");
      ++pos_;
      return {Letter{g, 1}};
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const GroupPresentation& pres_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

Vec2 parse_vec(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    fail_parse("expected a vector '(x, y)', got '" + std::string(text) + "'");
  auto parts = split_top(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 2)
    fail_parse("expected two coordinates in '" + std::string(text) + "'");
  return {QuadExt::parse(parts[0]), QuadExt::parse(parts[1])};
}

bool starts_with_word(std::string_view s, std::string_view w) {
  return s.substr(0, w.size()) == w && (s.size() == w.size() || std::isspace(static_cast<unsigned char>(s[w.size()])));
}

}  // namespace

int GroupPresentation::generator_index(std::string_view name) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k] == name)
      return static_cast<int>(k);
  return -1;
}

bool GroupPresentation::is_involution(int gen) const {
  Word sq{{gen, 1}, {gen, 1}};
  Word sqi{{gen, -1}, {gen, -1}};
  return std::any_of(relators.begin(), relators.end(), [&](const Word& w) { return w == sq || w == sqi; });
}

std::vector<Letter> GroupPresentation::growth_generators() const {
  std::vector<Letter> out;
  for (int g = 0; g < static_cast<int>(generators.size()); ++g) {
    out.push_back({g, 1});
    if (!is_involution(g))
      out.push_back({g, -1});
  }
  return out;
}

std::string GroupPresentation::word_to_string(const Word& w) const {
  if (w.empty())
    return "1";
  std::string s;
  for (const Letter& l : w) {
    s += generators.at(static_cast<std::size_t>(l.gen));
    if (l.power < 0)
      s += "^-1";
  }
  return s;
}

Word reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().power == -l.power)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out)
    l.power = -l.power;
  return out;
}

Word parse_word(const GroupPresentation& pres, std::string_view text) { return WordParser(pres, text).parse(); }

void add_relations(GroupPresentation& pres, std::string_view line) {
  for (std::string_view rel : split_top(line, ',')) {
    rel = trim(rel);
    if (rel.empty())
      fail_parse("empty relation in '" + std::string(line) + "'");
    auto sides = split_top(rel, '=');
    std::vector<Word> words;
    std::vector<std::string> texts;
    bool has_identity = false;
    for (auto side : sides) {
      side = trim(side);
      if (side.empty())
        fail_parse("empty side in relation '" + std::string(rel) + "'");
      if (side == "1") {
        has_identity = true;
        continue;
      }
      words.push_back(parse_word(pres, side));
      texts.emplace_back(side);
    }
    std::vector<std::pair<Word, std::string>> found;
    if (has_identity || words.size() == 1) {
      for (std::size_t k = 0; k < words.size(); ++k)
        found.emplace_back(words[k], texts[k]);
    } else {
      for (std::size_t k = 0; k + 1 < words.size(); ++k) {
        Word w = words[k];
        Word r = invert(words[k + 1]);
        w.insert(w.end(), r.begin(), r.end());
        found.emplace_back(reduce(std::move(w)), texts[k] + " = " + texts[k + 1]);
      }
    }
    for (auto& [w, t] : found) {
      if (w.empty())
        fail_parse("relator '" + t + "' reduces to the empty word");
      pres.relators.push_back(std::move(w));
      pres.relator_text.push_back(std::move(t));
    }
  }
}

ExactIsometry parse_isometry(std::string_view text) {
  std::string_view s = trim(text);
  if (starts_with_word(s, "shift"))
    return ExactIsometry::translation(parse_vec(s.substr(5)));
  bool flipped = false;
  if (starts_with_word(s, "flip")) {
    flipped = true;
    s = trim(s.substr(4));
  }
  if (!starts_with_word(s, "rot"))
    fail_parse("isometry '" + std::string(text) + "': expected 'rot', 'flip rot' or 'shift'");
  s = trim(s.substr(3));
  std::size_t end = 0;
  while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || (end == 0 && s[end] == '-')))
    ++end;
  int degrees = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + end, degrees);
  if (ec != std::errc() || p != s.data() + end || degrees % 30 != 0)
    fail_parse("isometry '" + std::string(text) + "': angle must be a multiple of 30 degrees");
  s = trim(s.substr(end));
  Vec2 t{0, 0};
  if (!s.empty()) {
    if (s.front() != '+')
      fail_parse("isometry '" + std::string(text) + "': expected '+ (x, y)'");
    t = parse_vec(s.substr(1));
  }
  return ExactIsometry::make(degrees / 30, flipped, t);
}

GroupFile parse_group_file(std::string_view text, const std::string& key) {
  GroupFile gf;
  gf.key = key;
  bool have_gens = false;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    try {
      if (line.rfind("tiling:", 0) == 0) {
        gf.tiling = std::string(trim(line.substr(7)));
      } else if (line.rfind("generators:", 0) == 0) {
        std::string_view rest = trim(line.substr(11));
        while (!rest.empty()) {
          std::size_t sp = rest.find_first_of(" \t");
          std::string_view name = rest.substr(0, sp);
          if (name.size() != 1 || !std::isalpha(static_cast<unsigned char>(name[0])) || name == "1")
            fail_parse("generator names are single letters, got '" + std::string(name) + "'");
          if (gf.presentation.generator_index(name) >= 0)
            fail_parse("duplicate generator '" + std::string(name) + "'");
          gf.presentation.generators.emplace_back(name);
          rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
        }
        have_gens = true;
      } else if (auto def = line.find(":="); def != std::string_view::npos) {
        std::string name(trim(line.substr(0, def)));
        if (gf.presentation.generator_index(name) < 0)
          fail_parse("realization for undeclared generator '" + name + "'");
        gf.realization.insert_or_assign(name, parse_isometry(line.substr(def + 2)));
      } else {
        if (!have_gens)
          fail_parse("relations must follow the generators line");
        add_relations(gf.presentation, line);
      }
    } catch (const ParseError& e) {
      fail_parse("group file" + (key.empty() ? std::string() : " '" + key + "'") + ", line " +
                 std::to_string(lineno) + ": " + e.what());
    }
  }
  if (gf.presentation.generators.empty())
    fail_parse("group file has no generators line");
  if (gf.presentation.relators.empty())
    fail_parse("group file has no relators");
  return gf;
}

std::vector<std::string> group_keys() {
  std::vector<std::string> keys;
  for (const auto& f : embedded_groups())
    keys.emplace_back(f.name);
  return keys;
}

GroupFile load_group(const std::string& key) {
  auto text = find_embedded(embedded_groups(), key);
  if (!text)
    throw UnknownKeyError("no shipped group '" + key + "'");
  return parse_group_file(*text, key);
}

ExactIsometry evaluate(const GroupPresentation& pres, const Realization& real, const Word& w) {
  ExactIsometry acc;
  for (const Letter& l : w) {
    const std::string& name = pres.generators.at(static_cast<std::size_t>(l.gen));
    auto it = real.find(name);
    if (it == real.end())
      throw InvalidArgument("realization misses generator '" + name + "'");
    acc = compose(acc, l.power > 0 ? it->second : it->second.inverse());
  }
  return acc;
}

RelationReport check_relations(const GroupPresentation& pres, const Realization& real) {
  RelationReport r;
  for (std::size_t k = 0; k < pres.relators.size(); ++k) {
    bool ok = evaluate(pres, real, pres.relators[k]) == ExactIsometry::identity();
    r.checks.push_back({pres.relator_text[k], ok});
    r.all_pass = r.all_pass && ok;
  }
  return r;
}

std::vector<std::int64_t> growth_sequence(const GroupPresentation& pres, const Realization& real, int n_max) {
  if (n_max < 0 || n_max > kMaxGrowthLength)
    throw InvalidArgument("word length bound must be in 0.." + std::to_string(kMaxGrowthLength));
  std::vector<ExactIsometry> steps;
  for (const Letter& l : pres.growth_generators()) {
    ExactIsometry x = evaluate(pres, real, {l});
    if (std::find(steps.begin(), steps.end(), x) == steps.end())
      steps.push_back(x);
  }
  using Set = std::unordered_set<ExactIsometry>;
  Set prev, cur{ExactIsometry::identity()};
  std::vector<ExactIsometry> cur_list{ExactIsometry::identity()};
  std::vector<std::int64_t> terms{1};
  for (int n = 1; n <= n_max; ++n) {
    Set next;
    std::vector<ExactIsometry> next_list;
    for (const auto& g : cur_list)
      for (const auto& x : steps) {
        ExactIsometry h = compose(g, x);
        if (prev.count(h) || cur.count(h))
          continue;
        if (next.insert(h).second)
          next_list.push_back(h);
      }
    terms.push_back(static_cast<std::int64_t>(next_list.size()));
    prev = std::move(cur);
    cur = std::move(next);
    cur_list = std::move(next_list);
  }
  return terms;
}

}  // namespace tilecs
