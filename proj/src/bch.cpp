#include "rho/bch.hpp"

#include <fmt/format.h>

#include <map>
#include <mutex>

namespace rho {

const BchTable& bch_table(int class_bound) {
  static std::map<int, BchTable> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto it = cache.find(class_bound);
  if (it != cache.end()) return it->second;
  if (class_bound < 1) throw Error("bch_table: class bound must be >= 1");

  AssocSeries a = assoc_symbol(2, class_bound, 0);
  AssocSeries b = assoc_symbol(2, class_bound, 1);
  AssocSeries z = log_series(mul(exp_series(a), exp_series(b)));
  BchTable table{class_bound, lie_from_assoc_solve(z, 2, class_bound)};
  return cache.emplace(class_bound, std::move(table)).first->second;
}

LieElement eval_lie_poly(const LieElement& poly, const std::vector<LieElement>& args) {
  if (args.empty()) throw Error("eval_lie_poly: no arguments");
  const LieElement& model = args[0];
  for (const auto& arg : args)
    if (arg.num_generators != model.num_generators || arg.class_bound != model.class_bound)
      throw Error("eval_lie_poly: arguments disagree on generators or class bound");

  // memoized evaluation of standard bracketings
  std::map<Word, LieElement> eval_cache;
  auto eval_word = [&](auto&& self, const Word& w) -> const LieElement& {
    auto it = eval_cache.find(w);
    if (it != eval_cache.end()) return it->second;
    LieElement value = lie_zero(model.num_generators, model.class_bound);
    if (w.size() == 1) {
      if (w[0] < 0 || w[0] >= int(args.size()))
        throw Error("eval_lie_poly: polynomial symbol has no argument");
      value = args[w[0]];
    } else {
      auto [u, v] = standard_factorization(w);
      value = bracket(self(self, u), self(self, v));
    }
    return eval_cache.emplace(w, std::move(value)).first->second;
  };

  LieElement out = lie_zero(model.num_generators, model.class_bound);
  for (const auto& [w, c] : poly.coeffs) out = add(out, scale(eval_word(eval_word, w), c));
  return out;
}

MalcevElement malcev(const LieElement& value) { return MalcevElement{value}; }

MalcevElement malcev_zero(int num_generators, int class_bound) {
  return MalcevElement{lie_zero(num_generators, class_bound)};
}

MalcevElement mul(const MalcevElement& g, const MalcevElement& h) {
  if (g.value.class_bound != h.value.class_bound)
    throw Error(fmt::format("mul: class bounds differ ({} vs {})", g.value.class_bound,
                            h.value.class_bound));
  const BchTable& table = bch_table(g.value.class_bound);
  return MalcevElement{eval_lie_poly(table.poly, {g.value, h.value})};
}

MalcevElement inv(const MalcevElement& g) { return MalcevElement{neg(g.value)}; }

MalcevElement rational_power(const MalcevElement& g, const Rational& q) {
  return MalcevElement{scale(g.value, q)};
}

std::vector<int> associated_graded_dims(int class_bound, int num_generators) {
  const HallBasis& basis = hall_basis(num_generators, class_bound);
  std::vector<int> dims;
  for (int i = 1; i <= class_bound; ++i) dims.push_back(basis.dim(i));
  return dims;
}

}  // namespace rho
