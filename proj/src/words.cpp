#include "rho/words.hpp"

#include <fmt/format.h>

#include <cctype>
#include <sstream>

namespace rho {

namespace {

void push_reduced(std::vector<std::pair<int, int>>& letters, int gen, int sign) {
  if (!letters.empty() && letters.back().first == gen && letters.back().second == -sign)
    letters.pop_back();
  else
    letters.emplace_back(gen, sign);
}

}  // namespace

FreeGroupWord parse_word(const std::string& text) {
  FreeGroupWord w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    size_t caret = token.find('^');
    std::string name = token.substr(0, caret);
    long exponent = 1;
    if (caret != std::string::npos) {
      std::string e = token.substr(caret + 1);
      try {
        size_t used = 0;
        exponent = std::stol(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw Error(fmt::format("malformed exponent in '{}'", token));
      }
    }
    if (name.size() < 2 || name[0] != 'x')
      throw Error(fmt::format("malformed generator '{}' (expected x1, x2, ...)", name));
    for (size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw Error(fmt::format("malformed generator '{}'", name));
    int gen = std::stoi(name.substr(1)) - 1;
    if (gen < 0) throw Error(fmt::format("generator index must be >= 1 in '{}'", name));
    int sign = exponent >= 0 ? 1 : -1;
    for (long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
      push_reduced(w.letters, gen, sign);
  }
  return w;
}

std::string render_word(const FreeGroupWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    long run = long(j - i) * w.letters[i].second;
    if (!out.empty()) out += ' ';
    if (run == 1)
      out += fmt::format("x{}", w.letters[i].first + 1);
    else
      out += fmt::format("x{}^{}", w.letters[i].first + 1, run);
    i = j;
  }
  return out;
}

FreeGroupWord concat(const FreeGroupWord& u, const FreeGroupWord& v) {
  FreeGroupWord w = u;
  for (auto [gen, sign] : v.letters) push_reduced(w.letters, gen, sign);
  return w;
}

FreeGroupWord inverse(const FreeGroupWord& w) {
  FreeGroupWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.emplace_back(it->first, -it->second);
  return out;
}

int min_generators(const FreeGroupWord& w) {
  int k = 1;
  for (auto [gen, sign] : w.letters) k = std::max(k, gen + 1);
  return k;
}

TruncatedSeries magnus(const FreeGroupWord& w, int num_generators, int n) {
  if (n < 1) throw Error("magnus: precision must be >= 1");
  if (min_generators(w) > num_generators) throw Error("magnus: word uses unknown generators");
  AssocSeries result = assoc_constant(num_generators, n, 1);
  for (auto [gen, sign] : w.letters) {
    AssocSeries x = assoc_symbol(num_generators, n, gen);
    AssocSeries factor = assoc_constant(num_generators, n, 1);
    if (sign > 0) {
      factor = add(factor, x);
    } else {
      // geometric series for (1 + X)^{-1}
      AssocSeries power = assoc_constant(num_generators, n, 1);
      for (int i = 1; i <= n; ++i) {
        power = mul(power, x);
        if (power.is_zero()) break;
        factor = add(factor, scale(power, i % 2 == 1 ? -1 : 1));
      }
    }
    result = mul(result, factor);
  }
  return result;
}

MalcevElement log_coordinates(const FreeGroupWord& w, int num_generators, int n) {
  if (n < 1) throw Error("log_coordinates: precision must be >= 1");
  if (min_generators(w) > num_generators)
    throw Error("log_coordinates: word uses unknown generators");
  AssocSeries image = assoc_constant(num_generators, n, 1);
  for (auto [gen, sign] : w.letters) {
    AssocSeries x = scale(assoc_symbol(num_generators, n, gen), sign);
    image = mul(image, exp_series(x));
  }
  return MalcevElement{lie_from_assoc_solve(log_series(image), num_generators, n)};
}

std::optional<int> lcs_weight(const FreeGroupWord& w, int num_generators, int n) {
  int weight = lowest_weight(log_coordinates(w, num_generators, n).value);
  if (weight == 0) return std::nullopt;
  return weight;
}

MalcevElement completion_mul(const MalcevElement& a, const MalcevElement& b) { return mul(a, b); }

}  // namespace rho
