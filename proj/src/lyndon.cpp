#include "rho/lyndon.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <mutex>

namespace rho {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  // strictly smaller than every proper suffix
  for (size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return true;
}

std::vector<Word> lyndon_words(int num_generators, int max_weight) {
  if (num_generators < 1 || max_weight < 1)
    throw Error("lyndon_words: need at least one generator and weight 1");
  std::vector<Word> out;
  Word w = {0};
  while (true) {
    if (int(w.size()) <= max_weight) out.push_back(w);
    // extend periodically to full length, then increment the last letter
    Word t;
    for (int i = 0; i < max_weight; ++i) t.push_back(w[i % w.size()]);
    while (!t.empty() && t.back() == num_generators - 1) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = std::move(t);
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw Error("standard_factorization: word too short");
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end())) best = i;
  return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

const std::vector<Word>& HallBasis::weight(int i) const {
  if (i < 1 || i > class_bound) throw Error(fmt::format("weight {} outside 1..{}", i, class_bound));
  return by_weight[size_t(i) - 1];
}

const HallBasis& hall_basis(int num_generators, int class_bound) {
  static std::map<std::pair<int, int>, HallBasis> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(num_generators, class_bound);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  HallBasis basis;
  basis.num_generators = num_generators;
  basis.class_bound = class_bound;
  basis.by_weight.resize(class_bound);
  for (auto& w : lyndon_words(num_generators, class_bound))
    basis.by_weight[w.size() - 1].push_back(w);
  return cache.emplace(key, std::move(basis)).first->second;
}

std::vector<std::string> default_names(int num_generators) {
  std::vector<std::string> names;
  for (int i = 1; i <= num_generators; ++i) names.push_back(fmt::format("x{}", i));
  return names;
}

std::string render_hall_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) throw Error("render_hall_word: empty word");
  if (w.size() == 1) {
    if (w[0] < 0 || w[0] >= int(names.size()))
      throw Error(fmt::format("generator index {} out of range", w[0]));
    return names[w[0]];
  }
  auto [u, v] = standard_factorization(w);
  return fmt::format("[{},{}]", render_hall_word(u, names), render_hall_word(v, names));
}

int BracketTree::weight() const {
  if (children.empty()) return 1;
  return children[0].weight() + children[1].weight();
}

BracketTree hall_word_tree(const Word& w) {
  BracketTree t;
  if (w.size() == 1) {
    t.leaf = w[0];
    return t;
  }
  auto [u, v] = standard_factorization(w);
  t.children.push_back(hall_word_tree(u));
  t.children.push_back(hall_word_tree(v));
  return t;
}

namespace {

struct TreeParser {
  const std::string& text;
  const std::vector<std::string>& names;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  BracketTree parse() {
    skip_ws();
    if (pos >= text.size()) throw Error("bracket expression: unexpected end of input");
    if (text[pos] == '[') {
      ++pos;
      BracketTree t;
      t.children.push_back(parse());
      skip_ws();
      if (pos >= text.size() || text[pos] != ',')
        throw Error(fmt::format("bracket expression: expected ',' at position {}", pos));
      ++pos;
      t.children.push_back(parse());
      skip_ws();
      if (pos >= text.size() || text[pos] != ']')
        throw Error(fmt::format("bracket expression: expected ']' at position {}", pos));
      ++pos;
      return t;
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos)
      throw Error(fmt::format("bracket expression: expected a name at position {}", pos));
    std::string name = text.substr(start, pos - start);
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) {
        BracketTree t;
        t.leaf = int(i);
        return t;
      }
    throw Error(fmt::format("unknown generator '{}'", name));
  }
};

}  // namespace

BracketTree parse_bracket_tree(const std::string& text, const std::vector<std::string>& names) {
  TreeParser p{text, names};
  BracketTree t = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw Error(fmt::format("bracket expression: trailing input at position {}", p.pos));
  return t;
}

}  // namespace rho
