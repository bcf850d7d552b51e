#include "rho/lie.hpp"

#include <fmt/format.h>

#include <mutex>

#include "rho/linalg.hpp"

namespace rho {

namespace {

void check_compatible(const LieElement& a, const LieElement& b) {
  if (a.class_bound != b.class_bound)
    throw Error(fmt::format("LieElement: class bounds differ ({} vs {})", a.class_bound,
                            b.class_bound));
  if (a.num_generators != b.num_generators)
    throw Error(fmt::format("LieElement: generator counts differ ({} vs {})", a.num_generators,
                            b.num_generators));
}

void add_coeff(LieElement& e, const Word& w, const Rational& c) {
  if (c == 0) return;
  Rational& slot = e.coeffs[w];
  slot += c;
  if (slot == 0) e.coeffs.erase(w);
}

// [b(u), b(v)] for Lyndon words u, v as a combination of Lyndon words of
// weight |u|+|v|. Cached across all elements.
const std::map<Word, Rational>& bracket_of_words(const Word& u, const Word& v) {
  static std::map<std::pair<Word, Word>, std::map<Word, Rational>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(u, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  int weight = int(u.size() + v.size());
  AssocSeries pu = hall_word_expansion(u, 0, weight);
  AssocSeries pv = hall_word_expansion(v, 0, weight);
  pu.num_symbols = pv.num_symbols = 0;  // symbol count is irrelevant here
  AssocSeries comm = sub(mul(pu, pv), mul(pv, pu));

  // triangular strip-off: the least word of the residue must be Lyndon and its
  // expansion starts with itself with coefficient 1
  std::map<Word, Rational> result;
  std::map<Word, Rational> residue = std::move(comm.coeffs);
  while (!residue.empty()) {
    auto first = residue.begin();
    Word w = first->first;
    Rational c = first->second;
    if (!is_lyndon(w))
      throw Error("bracket_of_words: residue is not a Lie element (internal error)");
    result[w] = c;
    for (const auto& [x, cx] : hall_word_expansion_terms(w)) {
      Rational& slot = residue[x];
      slot -= c * cx;
      if (slot == 0) residue.erase(x);
    }
  }
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

LieElement lie_zero(int num_generators, int class_bound) {
  if (num_generators < 1 || class_bound < 1)
    throw Error("LieElement: need at least one generator and class bound 1");
  return LieElement{num_generators, class_bound, {}};
}

LieElement lie_generator(int num_generators, int class_bound, int index) {
  if (index < 0 || index >= num_generators)
    throw Error(fmt::format("lie_generator: index {} out of range", index));
  LieElement e = lie_zero(num_generators, class_bound);
  e.coeffs[{index}] = 1;
  return e;
}

LieElement lie_term(int num_generators, int class_bound, const Word& w, const Rational& c) {
  LieElement e = lie_zero(num_generators, class_bound);
  if (!is_lyndon(w)) throw Error("lie_term: word is not Lyndon");
  if (int(w.size()) > class_bound) return e;
  for (int x : w)
    if (x < 0 || x >= num_generators) throw Error("lie_term: letter out of range");
  if (c != 0) e.coeffs[w] = c;
  return e;
}

LieElement add(const LieElement& a, const LieElement& b) {
  check_compatible(a, b);
  LieElement out = a;
  for (const auto& [w, c] : b.coeffs) add_coeff(out, w, c);
  return out;
}

LieElement sub(const LieElement& a, const LieElement& b) { return add(a, neg(b)); }

LieElement scale(const LieElement& a, const Rational& c) {
  LieElement out = lie_zero(a.num_generators, a.class_bound);
  if (c == 0) return out;
  for (const auto& [w, x] : a.coeffs) out.coeffs[w] = x * c;
  return out;
}

LieElement neg(const LieElement& a) { return scale(a, -1); }

LieElement bracket(const LieElement& a, const LieElement& b) {
  check_compatible(a, b);
  LieElement out = lie_zero(a.num_generators, a.class_bound);
  for (const auto& [u, cu] : a.coeffs) {
    for (const auto& [v, cv] : b.coeffs) {
      if (int(u.size() + v.size()) > a.class_bound) continue;
      if (u == v) continue;
      Rational c = cu * cv;
      const Word* x = &u;
      const Word* y = &v;
      if (v < u) {
        std::swap(x, y);
        c = -c;
      }
      for (const auto& [w, cw] : bracket_of_words(*x, *y)) add_coeff(out, w, c * cw);
    }
  }
  return out;
}

LieElement weight_component(const LieElement& a, int i) {
  if (i < 1 || i > a.class_bound)
    throw Error(fmt::format("weight_component: weight {} outside 1..{}", i, a.class_bound));
  LieElement out = lie_zero(a.num_generators, a.class_bound);
  for (const auto& [w, c] : a.coeffs)
    if (int(w.size()) == i) out.coeffs[w] = c;
  return out;
}

int lowest_weight(const LieElement& a) {
  if (a.coeffs.empty()) return 0;
  return int(a.coeffs.begin()->first.size());
}

LieElement truncate_class(const LieElement& a, int new_bound) {
  if (new_bound < 1 || new_bound > a.class_bound)
    throw Error("truncate_class: new bound outside 1..class_bound");
  LieElement out = lie_zero(a.num_generators, new_bound);
  for (const auto& [w, c] : a.coeffs)
    if (int(w.size()) <= new_bound) out.coeffs[w] = c;
  return out;
}

AssocSeries assoc_from_lie(const LieElement& a, int degree_bound) {
  AssocSeries out = assoc_zero(a.num_generators, degree_bound);
  for (const auto& [w, c] : a.coeffs) {
    if (int(w.size()) > degree_bound) continue;
    for (const auto& [x, cx] : hall_word_expansion_terms(w)) {
      Rational& slot = out.coeffs[x];
      slot += c * cx;
      if (slot == 0) out.coeffs.erase(x);
    }
  }
  return out;
}

LieElement lie_from_assoc_triangular(const AssocSeries& s, int num_generators, int class_bound) {
  if (s.constant_term() != 0)
    throw Error("lie_from_assoc_triangular: nonzero constant term, not a Lie element");
  LieElement out = lie_zero(num_generators, class_bound);
  for (int i = 1; i <= class_bound; ++i) {
    std::map<Word, Rational> residue = weight_terms(s, i);
    while (!residue.empty()) {
      auto first = residue.begin();
      Word w = first->first;
      Rational c = first->second;
      if (!is_lyndon(w))
        throw Error(fmt::format("lie_from_assoc_triangular: weight-{} part is not primitive", i));
      out.coeffs[w] = c;
      for (const auto& [x, cx] : hall_word_expansion_terms(w)) {
        Rational& slot = residue[x];
        slot -= c * cx;
        if (slot == 0) residue.erase(x);
      }
    }
  }
  return out;
}

LieElement lie_from_assoc_solve(const AssocSeries& s, int num_generators, int class_bound) {
  if (s.constant_term() != 0)
    throw Error("lie_from_assoc_solve: nonzero constant term, not a Lie element");
  LieElement out = lie_zero(num_generators, class_bound);
  const HallBasis& basis = hall_basis(num_generators, class_bound);
  for (int i = 1; i <= class_bound; ++i) {
    std::map<Word, Rational> target = weight_terms(s, i);
    const auto& hall = basis.weight(i);
    // enumerate all weight-i words to index the rows
    std::map<Word, int> row_index;
    {
      Word w(i, 0);
      while (true) {
        row_index.emplace(w, int(row_index.size()));
        int p = i - 1;
        while (p >= 0 && w[p] == num_generators - 1) w[p--] = 0;
        if (p < 0) break;
        ++w[p];
      }
    }
    RationalMatrix m(int(row_index.size()), int(hall.size()));
    for (size_t j = 0; j < hall.size(); ++j)
      for (const auto& [x, cx] : hall_word_expansion_terms(hall[j]))
        m.at(row_index.at(x), int(j)) = cx;
    RationalVector b(row_index.size());
    for (const auto& [x, cx] : target) {
      auto it = row_index.find(x);
      if (it == row_index.end()) throw Error("lie_from_assoc_solve: stray symbol in series");
      b[it->second] = cx;
    }
    auto x = solve(m, b);
    if (!x)
      throw Error(fmt::format("lie_from_assoc_solve: weight-{} part lies outside the Hall span",
                              i));
    for (size_t j = 0; j < hall.size(); ++j)
      if ((*x)[j] != 0) out.coeffs[hall[j]] = (*x)[j];
  }
  return out;
}

LieElement from_tree(int num_generators, int class_bound, const BracketTree& t) {
  if (t.children.empty()) return lie_generator(num_generators, class_bound, t.leaf);
  return bracket(from_tree(num_generators, class_bound, t.children[0]),
                 from_tree(num_generators, class_bound, t.children[1]));
}

std::string render(const LieElement& a, const std::vector<std::string>& names) {
  if (a.coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.coeffs) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string word = render_hall_word(w, names);
    if (abs == 1)
      out += word;
    else
      out += fmt::format("{}*{}", to_string(abs), word);
  }
  return out;
}

namespace {

struct ElementParser {
  const std::string& text;
  const std::vector<std::string>& names;
  int num_generators;
  int class_bound;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_rational() {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  Rational parse_rational_token() {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    return parse_rational(text.substr(start, pos - start));
  }

  BracketTree parse_tree() {
    // reuse the bracket-tree grammar on the remaining input
    size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char ch = text[pos];
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && pos > start) break;
      ++pos;
    }
    return parse_bracket_tree(text.substr(start, pos - start), names);
  }

  LieElement parse() {
    LieElement acc = lie_zero(num_generators, class_bound);
    bool expect_term = true;
    Rational sign = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    while (true) {
      skip_ws();
      if (pos >= text.size()) {
        if (expect_term) throw Error("lie element: dangling sign");
        break;
      }
      if (!expect_term) {
        char ch = text[pos];
        if (ch == '+')
          sign = 1;
        else if (ch == '-')
          sign = -1;
        else
          throw Error(fmt::format("lie element: expected '+' or '-' at position {}", pos));
        ++pos;
        expect_term = true;
        continue;
      }
      Rational coeff = sign;
      if (at_rational()) {
        coeff *= parse_rational_token();
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
        }
      }
      BracketTree t = parse_tree();
      acc = add(acc, scale(from_tree(num_generators, class_bound, t), coeff));
      expect_term = false;
    }
    return acc;
  }
};

}  // namespace

LieElement parse_lie_element(int num_generators, int class_bound, const std::string& text,
                             const std::vector<std::string>& names) {
  ElementParser p{text, names, num_generators, class_bound};
  return p.parse();
}

}  // namespace rho
