#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rho/linalg.hpp"

namespace rho {

// Finite simplicial set given by explicit tables. Simplices are stored up to
// dimension_bound with all degeneracies materialized below the bound; the top
// row has no degeneracy tables.
struct Simplex {
  std::vector<int> faces;         // k+1 ids into dimension k-1 (empty at k=0)
  std::vector<int> degeneracies;  // k+1 ids into dimension k+1 (empty at the top)
  bool degenerate = false;
};

struct FiniteSimplicialSet {
  int dimension_bound = 0;
  std::vector<std::vector<Simplex>> simplices;  // [dim][id]

  const Simplex& at(int dim, int id) const { return simplices[dim][id]; }
  int count(int dim) const { return int(simplices[size_t(dim)].size()); }
  int nondegenerate_count(int dim) const;
};

struct Violation {
  std::string identity;  // e.g. "d_i d_j = d_{j-1} d_i"
  int dim = 0;
  int id = 0;
  std::string detail;
};

/// Exhaustive check of the simplicial identities and degeneracy bookkeeping;
/// returns the first violation, or nullopt when the tables are consistent.
std::optional<Violation> validate(const FiniteSimplicialSet& X);

/// Boundary operators on normalized chains (free Q-modules on nondegenerate
/// simplices): result[k-1] is the matrix of d_k : C_k -> C_{k-1}.
std::vector<RationalMatrix> chain_complex(const FiniteSimplicialSet& X);

struct BettiTable {
  std::vector<int> dims;  // per degree 0..dimension_bound

  bool operator==(const BettiTable&) const = default;
};

BettiTable homology(const FiniteSimplicialSet& X);

/// Over Q universal coefficients gives H^n = H_n; one rank computation.
BettiTable cohomology(const FiniteSimplicialSet& X);

// -- Eilenberg-Zilber normal forms -------------------------------------------

// Every simplex is s_{j_1}...s_{j_r} of a unique nondegenerate core; the
// surjection records the composite collapse [dim] ->> [core_dim].
struct NormalForm {
  int core_dim = 0;
  int core_id = 0;
  std::vector<int> surj;  // size dim+1, monotone onto 0..core_dim
};

/// Normal form of every simplex, indexed [dim][id]. Nondegenerate simplices
/// get the identity surjection.
std::vector<std::vector<NormalForm>> normal_forms(const FiniteSimplicialSet& X);

// -- monotone map helpers (shared with the PL de Rham module) ----------------

/// Factor a monotone map as injection-after-surjection: f = delta . sigma.
void monotone_factor(const std::vector<int>& f, std::vector<int>& surj, std::vector<int>& inj);

/// Elementary decomposition of a monotone surjection: the list of j's such
/// that surj = sigma_{j_1} after ... after sigma_{j_r} acts by collapsing; the
/// composite pullback applies degeneracy pullbacks in list order.
std::vector<int> surjection_collapses(std::vector<int> surj);

// -- builders -----------------------------------------------------------------

/// The standard n-simplex, materialized up to the given dimension bound.
FiniteSimplicialSet simplex_set(int n, int bound);

/// One vertex and one nondegenerate n-cell with all faces at the basepoint.
FiniteSimplicialSet sphere(int n, int bound);

/// One vertex, three edges, two triangles (the usual diagonal square).
FiniteSimplicialSet torus(int bound);

/// One-point union at vertex 0 of each operand; bounds must agree.
FiniteSimplicialSet wedge(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y);

// -- JSON ----------------------------------------------------------------------

std::string to_json(const FiniteSimplicialSet& X);
FiniteSimplicialSet simplicial_from_json(const std::string& text);

}  // namespace rho
