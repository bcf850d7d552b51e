#include "rho/assoc.hpp"

#include <fmt/format.h>

#include <mutex>

namespace rho {

namespace {

void check_compatible(const AssocSeries& a, const AssocSeries& b) {
  if (a.num_symbols != b.num_symbols || a.degree_bound != b.degree_bound)
    throw Error("AssocSeries: operands have different symbol counts or bounds");
}

void set_coeff(AssocSeries& s, const Word& w, const Rational& c) {
  if (c == 0)
    s.coeffs.erase(w);
  else
    s.coeffs[w] = c;
}

}  // namespace

Rational AssocSeries::constant_term() const {
  auto it = coeffs.find(Word{});
  return it == coeffs.end() ? Rational(0) : it->second;
}

AssocSeries assoc_zero(int num_symbols, int degree_bound) {
  return AssocSeries{num_symbols, degree_bound, {}};
}

AssocSeries assoc_constant(int num_symbols, int degree_bound, const Rational& c) {
  AssocSeries s = assoc_zero(num_symbols, degree_bound);
  set_coeff(s, {}, c);
  return s;
}

AssocSeries assoc_symbol(int num_symbols, int degree_bound, int index) {
  if (index < 0 || index >= num_symbols)
    throw Error(fmt::format("assoc_symbol: index {} out of range", index));
  AssocSeries s = assoc_zero(num_symbols, degree_bound);
  if (degree_bound >= 1) set_coeff(s, {index}, 1);
  return s;
}

AssocSeries add(const AssocSeries& a, const AssocSeries& b) {
  check_compatible(a, b);
  AssocSeries out = a;
  for (const auto& [w, c] : b.coeffs) {
    auto it = out.coeffs.find(w);
    Rational sum = (it == out.coeffs.end() ? Rational(0) : it->second) + c;
    set_coeff(out, w, sum);
  }
  return out;
}

AssocSeries sub(const AssocSeries& a, const AssocSeries& b) { return add(a, scale(b, -1)); }

AssocSeries scale(const AssocSeries& a, const Rational& c) {
  AssocSeries out = assoc_zero(a.num_symbols, a.degree_bound);
  if (c == 0) return out;
  for (const auto& [w, x] : a.coeffs) out.coeffs[w] = x * c;
  return out;
}

AssocSeries mul(const AssocSeries& a, const AssocSeries& b) {
  check_compatible(a, b);
  AssocSeries out = assoc_zero(a.num_symbols, a.degree_bound);
  for (const auto& [u, cu] : a.coeffs) {
    for (const auto& [v, cv] : b.coeffs) {
      if (int(u.size() + v.size()) > a.degree_bound) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto it = out.coeffs.find(w);
      Rational sum = (it == out.coeffs.end() ? Rational(0) : it->second) + cu * cv;
      set_coeff(out, w, sum);
    }
  }
  return out;
}

AssocSeries exp_series(const AssocSeries& a) {
  if (a.constant_term() != 0) throw Error("exp_series: nonzero constant term");
  AssocSeries result = assoc_constant(a.num_symbols, a.degree_bound, 1);
  AssocSeries power = assoc_constant(a.num_symbols, a.degree_bound, 1);
  Rational factorial = 1;
  for (int k = 1; k <= a.degree_bound; ++k) {
    power = mul(power, a);
    if (power.is_zero()) break;
    factorial *= k;
    result = add(result, scale(power, Rational(1) / factorial));
  }
  return result;
}

AssocSeries log_series(const AssocSeries& a) {
  if (a.constant_term() != 1) throw Error("log_series: constant term is not 1");
  AssocSeries u = sub(a, assoc_constant(a.num_symbols, a.degree_bound, 1));
  AssocSeries result = assoc_zero(a.num_symbols, a.degree_bound);
  AssocSeries power = assoc_constant(a.num_symbols, a.degree_bound, 1);
  for (int k = 1; k <= a.degree_bound; ++k) {
    power = mul(power, u);
    if (power.is_zero()) break;
    Rational sign = (k % 2 == 1) ? 1 : -1;
    result = add(result, scale(power, sign / k));
  }
  return result;
}

namespace {

// recursion happens under a single lock held by the public entry point
const std::map<Word, Rational>& expansion_terms_unlocked(
    const Word& w, std::map<Word, std::map<Word, Rational>>& cache) {
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  std::map<Word, Rational> terms;
  if (w.size() == 1) {
    terms[w] = 1;
  } else {
    auto [u, v] = standard_factorization(w);
    const auto& eu = expansion_terms_unlocked(u, cache);
    const auto& ev = expansion_terms_unlocked(v, cache);
    auto accumulate = [&terms](const std::map<Word, Rational>& x, const std::map<Word, Rational>& y,
                               int sign) {
      for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
          Word ab = a;
          ab.insert(ab.end(), b.begin(), b.end());
          Rational& slot = terms[ab];
          slot += sign * ca * cb;
          if (slot == 0) terms.erase(ab);
        }
    };
    accumulate(eu, ev, 1);
    accumulate(ev, eu, -1);
  }
  return cache.emplace(w, std::move(terms)).first->second;
}

}  // namespace

const std::map<Word, Rational>& hall_word_expansion_terms(const Word& w) {
  static std::map<Word, std::map<Word, Rational>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  return expansion_terms_unlocked(w, cache);
}

AssocSeries hall_word_expansion(const Word& w, int num_symbols, int degree_bound) {
  AssocSeries s = assoc_zero(num_symbols, degree_bound);
  if (int(w.size()) > degree_bound) return s;
  s.coeffs = hall_word_expansion_terms(w);
  return s;
}

std::map<Word, Rational> weight_terms(const AssocSeries& a, int i) {
  std::map<Word, Rational> out;
  for (const auto& [w, c] : a.coeffs)
    if (int(w.size()) == i) out[w] = c;
  return out;
}

}  // namespace rho
