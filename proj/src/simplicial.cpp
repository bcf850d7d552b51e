#include "rho/simplicial.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <map>

namespace rho {

int FiniteSimplicialSet::nondegenerate_count(int dim) const {
  int n = 0;
  for (const auto& s : simplices[size_t(dim)])
    if (!s.degenerate) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// validation

namespace {

std::optional<Violation> structural_check(const FiniteSimplicialSet& X) {
  if (X.dimension_bound < 0) return Violation{"dimension_bound >= 0", 0, 0, "negative bound"};
  if (int(X.simplices.size()) != X.dimension_bound + 1)
    return Violation{"table rows = bound + 1", 0, 0,
                     fmt::format("{} rows for bound {}", X.simplices.size(), X.dimension_bound)};
  if (X.simplices[0].empty()) return Violation{"nonempty", 0, 0, "no vertices"};
  for (int k = 0; k <= X.dimension_bound; ++k) {
    for (int id = 0; id < X.count(k); ++id) {
      const Simplex& s = X.at(k, id);
      if (k == 0 && !s.faces.empty())
        return Violation{"vertices have no faces", k, id, ""};
      if (k > 0 && int(s.faces.size()) != k + 1)
        return Violation{"face table size = dim + 1", k, id,
                         fmt::format("got {}", s.faces.size())};
      for (int f : s.faces)
        if (f < 0 || f >= X.count(k - 1))
          return Violation{"face ids in range", k, id, fmt::format("id {}", f)};
      if (k < X.dimension_bound) {
        if (int(s.degeneracies.size()) != k + 1)
          return Violation{"degeneracy table size = dim + 1", k, id,
                           fmt::format("got {}", s.degeneracies.size())};
        for (int d : s.degeneracies)
          if (d < 0 || d >= X.count(k + 1))
            return Violation{"degeneracy ids in range", k, id, fmt::format("id {}", d)};
      } else if (!s.degeneracies.empty()) {
        return Violation{"top dimension has no degeneracy tables", k, id, ""};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate(const FiniteSimplicialSet& X) {
  if (auto v = structural_check(X)) return v;
  const int bound = X.dimension_bound;

  auto face = [&X](int dim, int id, int i) { return X.at(dim, id).faces[i]; };
  auto degen = [&X](int dim, int id, int j) { return X.at(dim, id).degeneracies[j]; };

  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= bound; ++k)
    for (int id = 0; id < X.count(k); ++id)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (face(k - 1, face(k, id, j), i) != face(k - 1, face(k, id, i), j - 1))
            return Violation{"d_i d_j = d_{j-1} d_i", k, id, fmt::format("i={} j={}", i, j)};

  // s_i s_j = s_{j+1} s_i for i <= j
  for (int k = 0; k + 2 <= bound; ++k)
    for (int id = 0; id < X.count(k); ++id)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i)
          if (degen(k + 1, degen(k, id, j), i) != degen(k + 1, degen(k, id, i), j + 1))
            return Violation{"s_i s_j = s_{j+1} s_i", k, id, fmt::format("i={} j={}", i, j)};

  // mixed identities on s_j(x) for x of dimension k
  for (int k = 0; k + 1 <= bound; ++k)
    for (int id = 0; id < X.count(k); ++id)
      for (int j = 0; j <= k; ++j) {
        int sj = degen(k, id, j);
        for (int i = 0; i <= k + 1; ++i) {
          if (i == j || i == j + 1) {
            if (face(k + 1, sj, i) != id)
              return Violation{"d_j s_j = id = d_{j+1} s_j", k, id, fmt::format("i={} j={}", i, j)};
          } else if (i < j) {
            if (face(k + 1, sj, i) != degen(k - 1, face(k, id, i), j - 1))
              return Violation{"d_i s_j = s_{j-1} d_i (i<j)", k, id,
                               fmt::format("i={} j={}", i, j)};
          } else {  // i > j + 1
            if (face(k + 1, sj, i) != degen(k - 1, face(k, id, i - 1), j))
              return Violation{"d_i s_j = s_j d_{i-1} (i>j+1)", k, id,
                               fmt::format("i={} j={}", i, j)};
          }
        }
      }

  // degenerate flags match the degeneracy images
  for (int k = 1; k <= bound; ++k) {
    std::vector<bool> hit(X.count(k), false);
    for (int id = 0; id < X.count(k - 1); ++id)
      for (int d : X.at(k - 1, id).degeneracies) hit[d] = true;
    for (int id = 0; id < X.count(k); ++id) {
      if (hit[id] && !X.at(k, id).degenerate)
        return Violation{"degeneracy images are flagged degenerate", k, id, ""};
      if (!hit[id] && X.at(k, id).degenerate)
        return Violation{"degenerate simplices appear as some s_j", k, id, ""};
    }
  }
  for (int id = 0; id < X.count(0); ++id)
    if (X.at(0, id).degenerate) return Violation{"vertices are nondegenerate", 0, id, ""};

  return std::nullopt;
}

// ---------------------------------------------------------------------------
// chains and homology

std::vector<RationalMatrix> chain_complex(const FiniteSimplicialSet& X) {
  const int bound = X.dimension_bound;
  // column index per nondegenerate simplex
  std::vector<std::map<int, int>> index(bound + 1);
  for (int k = 0; k <= bound; ++k)
    for (int id = 0; id < X.count(k); ++id)
      if (!X.at(k, id).degenerate) index[k].emplace(id, int(index[k].size()));

  std::vector<RationalMatrix> boundaries;
  for (int k = 1; k <= bound; ++k) {
    RationalMatrix d(int(index[k - 1].size()), int(index[k].size()));
    for (const auto& [id, col] : index[k]) {
      const Simplex& s = X.at(k, id);
      for (int i = 0; i <= k; ++i) {
        int f = s.faces[i];
        auto it = index[k - 1].find(f);
        if (it == index[k - 1].end()) continue;  // degenerate face: zero in normalized chains
        d.at(it->second, col) += (i % 2 == 0) ? 1 : -1;
      }
    }
    boundaries.push_back(std::move(d));
  }
  return boundaries;
}

BettiTable homology(const FiniteSimplicialSet& X) {
  auto boundaries = chain_complex(X);
  const int bound = X.dimension_bound;
  std::vector<int> ranks(bound + 2, 0);  // ranks[k] = rank of d_k, k = 1..bound
  for (int k = 1; k <= bound; ++k) ranks[k] = rank(boundaries[k - 1]);
  BettiTable betti;
  for (int k = 0; k <= bound; ++k) {
    int dim_ck = X.nondegenerate_count(k);
    betti.dims.push_back(dim_ck - ranks[k] - ranks[k + 1]);
  }
  return betti;
}

BettiTable cohomology(const FiniteSimplicialSet& X) { return homology(X); }

// ---------------------------------------------------------------------------
// normal forms

std::vector<std::vector<NormalForm>> normal_forms(const FiniteSimplicialSet& X) {
  const int bound = X.dimension_bound;
  std::vector<std::vector<NormalForm>> nf(bound + 1);
  std::vector<std::vector<bool>> assigned(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    nf[k].resize(X.count(k));
    assigned[k].assign(X.count(k), false);
    for (int id = 0; id < X.count(k); ++id) {
      if (X.at(k, id).degenerate) continue;
      std::vector<int> identity(k + 1);
      for (int i = 0; i <= k; ++i) identity[i] = i;
      nf[k][id] = NormalForm{k, id, std::move(identity)};
      assigned[k][id] = true;
    }
  }
  for (int k = 0; k < bound; ++k) {
    for (int id = 0; id < X.count(k); ++id) {
      if (!assigned[k][id])
        throw Error(fmt::format("normal_forms: unassigned simplex (dim {}, id {})", k, id));
      const NormalForm& base = nf[k][id];
      for (int j = 0; j <= k; ++j) {
        int target = X.at(k, id).degeneracies[j];
        if (assigned[k + 1][target]) continue;
        // compose with sigma_j: [k+1] ->> [k]
        std::vector<int> surj(k + 2);
        for (int i = 0; i <= k + 1; ++i) surj[i] = base.surj[i <= j ? i : i - 1];
        nf[k + 1][target] = NormalForm{base.core_dim, base.core_id, std::move(surj)};
        assigned[k + 1][target] = true;
      }
    }
  }
  for (int id = 0; id < X.count(bound); ++id)
    if (!assigned[bound][id])
      throw Error(fmt::format("normal_forms: unassigned simplex (dim {}, id {})", bound, id));
  return nf;
}

// ---------------------------------------------------------------------------
// monotone map helpers

void monotone_factor(const std::vector<int>& f, std::vector<int>& surj, std::vector<int>& inj) {
  inj.clear();
  for (int v : f)
    if (inj.empty() || inj.back() != v) inj.push_back(v);
  surj.resize(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    surj[i] = int(std::lower_bound(inj.begin(), inj.end(), f[i]) - inj.begin());
}

std::vector<int> surjection_collapses(std::vector<int> surj) {
  std::vector<int> collected;
  while (true) {
    size_t dup = surj.size();
    for (size_t i = 0; i + 1 < surj.size(); ++i)
      if (surj[i] == surj[i + 1]) {
        dup = i;
        break;
      }
    if (dup == surj.size()) break;
    collected.push_back(int(dup));
    surj.erase(surj.begin() + long(dup) + 1);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

// ---------------------------------------------------------------------------
// seeds and materialization

namespace {

struct SeedCell {
  std::vector<NormalForm> faces;  // dim+1 entries pointing at lower seed cells
};

struct SeedComplex {
  std::vector<std::vector<SeedCell>> cells;  // by dimension

  int top_dim() const { return int(cells.size()) - 1; }
};

NormalForm seed_eval(const SeedComplex& seed, const NormalForm& nf, const std::vector<int>& g);

// Iterated faces of a nondegenerate seed cell along an injection [q] -> [m].
NormalForm seed_face_composite(const SeedComplex& seed, int dim, int id,
                               const std::vector<int>& inj) {
  if (int(inj.size()) == dim + 1) {
    std::vector<int> identity(dim + 1);
    for (int i = 0; i <= dim; ++i) identity[i] = i;
    return NormalForm{dim, id, std::move(identity)};
  }
  // largest missing value j: x . inj = (x . d_j) . inj' with values > j shifted
  int j = dim;
  {
    std::vector<bool> present(dim + 1, false);
    for (int v : inj) present[v] = true;
    while (present[j]) --j;
  }
  std::vector<int> shifted;
  shifted.reserve(inj.size());
  for (int v : inj) shifted.push_back(v > j ? v - 1 : v);
  return seed_eval(seed, seed.cells[dim][id].faces[j], shifted);
}

// (core, alpha) . g for any monotone g.
NormalForm seed_eval(const SeedComplex& seed, const NormalForm& nf, const std::vector<int>& g) {
  std::vector<int> composite(g.size());
  for (size_t i = 0; i < g.size(); ++i) composite[i] = nf.surj[g[i]];
  std::vector<int> surj, inj;
  monotone_factor(composite, surj, inj);
  NormalForm base = seed_face_composite(seed, nf.core_dim, nf.core_id, inj);
  std::vector<int> total(surj.size());
  for (size_t i = 0; i < surj.size(); ++i) total[i] = base.surj[surj[i]];
  return NormalForm{base.core_dim, base.core_id, std::move(total)};
}

void enumerate_surjections(int from, int onto, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  if (int(prefix.size()) == from + 1) {
    if (prefix.back() == onto) out.push_back(prefix);
    return;
  }
  int last = prefix.empty() ? 0 : prefix.back();
  int remaining = from + 1 - int(prefix.size());
  for (int v = last; v <= std::min(last + 1, onto); ++v) {
    if (onto - v >= remaining) continue;  // cannot reach onto any more
    prefix.push_back(v);
    enumerate_surjections(from, onto, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> monotone_surjections(int from, int onto) {
  std::vector<std::vector<int>> out;
  if (onto > from) return out;
  std::vector<int> prefix = {0};
  enumerate_surjections(from, onto, prefix, out);
  return out;
}

FiniteSimplicialSet materialize(const SeedComplex& seed, int bound) {
  if (seed.top_dim() > bound)
    throw Error(fmt::format("materialize: seed has cells of dimension {} above bound {}",
                            seed.top_dim(), bound));
  struct Key {
    int core_dim, core_id;
    std::vector<int> surj;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<std::map<Key, int>> index(bound + 1);
  std::vector<std::vector<Key>> keys(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    for (int d = 0; d <= std::min(k, seed.top_dim()); ++d)
      for (int id = 0; id < int(seed.cells[d].size()); ++id)
        for (auto& surj : monotone_surjections(k, d)) {
          Key key{d, id, surj};
          index[k].emplace(key, int(keys[k].size()));
          keys[k].push_back(std::move(key));
        }
  }

  FiniteSimplicialSet X;
  X.dimension_bound = bound;
  X.simplices.resize(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    for (const Key& key : keys[k]) {
      Simplex s;
      s.degenerate = key.core_dim < k;
      NormalForm nf{key.core_dim, key.core_id, key.surj};
      if (k >= 1) {
        for (int i = 0; i <= k; ++i) {
          std::vector<int> delta;
          for (int v = 0; v <= k; ++v)
            if (v != i) delta.push_back(v);
          NormalForm f = seed_eval(seed, nf, delta);
          s.faces.push_back(index[k - 1].at(Key{f.core_dim, f.core_id, f.surj}));
        }
      }
      if (k < bound) {
        for (int j = 0; j <= k; ++j) {
          std::vector<int> surj(k + 2);
          for (int i = 0; i <= k + 1; ++i) surj[i] = key.surj[i <= j ? i : i - 1];
          s.degeneracies.push_back(index[k + 1].at(Key{key.core_dim, key.core_id, surj}));
        }
      }
      X.simplices[k].push_back(std::move(s));
    }
  }
  return X;
}

NormalForm identity_form(int dim, int id) {
  std::vector<int> identity(dim + 1);
  for (int i = 0; i <= dim; ++i) identity[i] = i;
  return NormalForm{dim, id, std::move(identity)};
}

}  // namespace

// ---------------------------------------------------------------------------
// builders

FiniteSimplicialSet simplex_set(int n, int bound) {
  if (n < 0 || bound < n) throw Error("simplex_set: need 0 <= n <= bound");
  SeedComplex seed;
  seed.cells.resize(n + 1);
  // cells of dimension d: (d+1)-subsets of {0..n} in lex order
  std::vector<std::map<std::vector<int>, int>> subset_index(n + 1);
  std::vector<std::vector<std::vector<int>>> subsets(n + 1);
  for (int d = 0; d <= n; ++d) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
      if (int(cur.size()) == d + 1) {
        subset_index[d].emplace(cur, int(subsets[d].size()));
        subsets[d].push_back(cur);
        return;
      }
      for (int v = next; v <= n; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  for (int d = 0; d <= n; ++d) {
    for (const auto& s : subsets[d]) {
      SeedCell cell;
      for (int i = 0; i <= d && d > 0; ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + i);
        cell.faces.push_back(identity_form(d - 1, subset_index[d - 1].at(f)));
      }
      seed.cells[d].push_back(std::move(cell));
    }
  }
  return materialize(seed, bound);
}

FiniteSimplicialSet sphere(int n, int bound) {
  if (n < 1 || bound < n) throw Error("sphere: need 1 <= n <= bound");
  SeedComplex seed;
  seed.cells.resize(n + 1);
  seed.cells[0].push_back(SeedCell{});
  SeedCell top;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> collapse(n, 0);  // [n-1] ->> [0]
    top.faces.push_back(NormalForm{0, 0, collapse});
  }
  seed.cells[n].push_back(std::move(top));
  return materialize(seed, bound);
}

FiniteSimplicialSet torus(int bound) {
  if (bound < 2) throw Error("torus: bound must be >= 2");
  SeedComplex seed;
  seed.cells.resize(3);
  seed.cells[0].push_back(SeedCell{});
  for (int e = 0; e < 3; ++e) {
    SeedCell edge;
    edge.faces.push_back(identity_form(0, 0));
    edge.faces.push_back(identity_form(0, 0));
    seed.cells[1].push_back(std::move(edge));
  }
  // edges: a = 0, b = 1, c = 2 (diagonal); triangles of the split square
  SeedCell t1;  // faces (d0, d1, d2) = (b, c, a)
  t1.faces = {identity_form(1, 1), identity_form(1, 2), identity_form(1, 0)};
  SeedCell t2;  // faces (d0, d1, d2) = (a, c, b)
  t2.faces = {identity_form(1, 0), identity_form(1, 2), identity_form(1, 1)};
  seed.cells[2].push_back(std::move(t1));
  seed.cells[2].push_back(std::move(t2));
  return materialize(seed, bound);
}

FiniteSimplicialSet wedge(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y) {
  if (X.dimension_bound != Y.dimension_bound)
    throw Error("wedge: operands must share the dimension bound");
  const int bound = X.dimension_bound;

  // basepoint towers s_0^k(vertex 0) on both sides
  std::vector<int> tower_x(bound + 1), tower_y(bound + 1);
  tower_x[0] = tower_y[0] = 0;
  for (int k = 0; k < bound; ++k) {
    tower_x[k + 1] = X.at(k, tower_x[k]).degeneracies[0];
    tower_y[k + 1] = Y.at(k, tower_y[k]).degeneracies[0];
  }

  // id remapping: X ids stay, Y ids append except the tower which folds onto X's
  std::vector<std::vector<int>> remap_y(bound + 1);
  FiniteSimplicialSet W;
  W.dimension_bound = bound;
  W.simplices.resize(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    W.simplices[k] = X.simplices[k];
    remap_y[k].resize(Y.count(k));
    for (int id = 0; id < Y.count(k); ++id) {
      if (id == tower_y[k]) {
        remap_y[k][id] = tower_x[k];
      } else {
        remap_y[k][id] = int(W.simplices[k].size());
        W.simplices[k].push_back(Y.at(k, id));
      }
    }
  }
  // rewrite the copied Y tables
  for (int k = 0; k <= bound; ++k) {
    for (int id = X.count(k); id < int(W.simplices[k].size()); ++id) {
      Simplex& s = W.simplices[k][id];
      for (int& f : s.faces) f = remap_y[k - 1][f];
      for (int& d : s.degeneracies) d = remap_y[k + 1][d];
    }
  }
  return W;
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const FiniteSimplicialSet& X) {
  nlohmann::ordered_json j;
  j["dimension_bound"] = X.dimension_bound;
  auto& list = j["simplices"] = nlohmann::ordered_json::array();
  for (int k = 0; k <= X.dimension_bound; ++k)
    for (int id = 0; id < X.count(k); ++id) {
      const Simplex& s = X.at(k, id);
      nlohmann::ordered_json item;
      item["dim"] = k;
      item["id"] = id;
      item["faces"] = s.faces;
      item["degeneracies"] = s.degeneracies;
      item["degenerate"] = s.degenerate;
      list.push_back(std::move(item));
    }
  return j.dump(2) + "\n";
}

FiniteSimplicialSet simplicial_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(fmt::format("simplicial JSON: {}", e.what()));
  }
  FiniteSimplicialSet X;
  try {
    X.dimension_bound = j.at("dimension_bound").get<int>();
    if (X.dimension_bound < 0) throw Error("simplicial JSON: negative dimension_bound");
    X.simplices.resize(X.dimension_bound + 1);
    std::vector<std::map<int, Simplex>> staging(X.dimension_bound + 1);
    for (const auto& item : j.at("simplices")) {
      int dim = item.at("dim").get<int>();
      int id = item.at("id").get<int>();
      if (dim < 0 || dim > X.dimension_bound)
        throw Error(fmt::format("simplicial JSON: dim {} outside 0..{}", dim, X.dimension_bound));
      Simplex s;
      s.faces = item.value("faces", std::vector<int>{});
      s.degeneracies = item.value("degeneracies", std::vector<int>{});
      s.degenerate = item.at("degenerate").get<bool>();
      if (!staging[dim].emplace(id, std::move(s)).second)
        throw Error(fmt::format("simplicial JSON: duplicate simplex (dim {}, id {})", dim, id));
    }
    for (int k = 0; k <= X.dimension_bound; ++k) {
      int expect = 0;
      for (auto& [id, s] : staging[k]) {
        if (id != expect++)
          throw Error(fmt::format("simplicial JSON: ids in dimension {} are not 0..{}", k,
                                  int(staging[k].size()) - 1));
        X.simplices[k].push_back(std::move(s));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(fmt::format("simplicial JSON: {}", e.what()));
  }
  return X;
}

}  // namespace rho
