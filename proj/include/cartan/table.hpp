#ifndef CARTAN_TABLE_HPP
#define CARTAN_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cartan/linalg.hpp"
#include "cartan/superfield.hpp"

namespace cartan {

using Weight = std::vector<Rational>;

/// Coordinate sum of a weight tuple (diagnostic).
inline Rational weight_coordinate_sum(const Weight& w) {
  Rational s(0);
  for (const auto& c : w) s += c;
  return s;
}

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonClosureError : TableError {
  NonClosureError(int a_, int b_)
      : TableError("bracket of basis pair (" + std::to_string(a_) + "," +
                   std::to_string(b_) + ") escapes the span of the basis"),
        a(a_), b(b_) {}
  int a, b;
};
struct DependentBasisError : TableError {
  explicit DependentBasisError(int index_)
      : TableError("basis element " + std::to_string(index_) +
                   " depends on earlier ones"),
        index(index_) {}
  int index;
};
struct NonDiagonalCartanError : TableError {
  NonDiagonalCartanError(int h_, int k_)
      : TableError("Cartan element " + std::to_string(h_) +
                   " does not act diagonally on basis element " + std::to_string(k_)),
        h(h_), k(k_) {}
  int h, k;
};

/// Finite-dimensional Lie superalgebra presented by a basis of super vector
/// fields together with structure constants, parities, integer degrees and
/// Cartan weights. Immutable after construction; the structure constants are
/// the single source of truth for every solver.
struct AlgebraTable {
  std::string family;
  int n = 0;
  int dim = 0;
  bool theorem_scope = true;          // inside the simple range for its family
  std::optional<int> grading_modulus; // degrees live mod n when set

  std::vector<SuperVectorField> basis; // empty for imported tables
  std::vector<int> parity;             // 0 or 1 per basis element
  std::vector<int> zdegree;            // representative in [-1, modulus-2] when modular
  std::vector<Weight> weights;         // dim x rank eigentuples for the Cartan basis
  std::vector<int> cartan;             // indices of the Cartan basis elements
  int top_degree = 0;

  /// sparse structure constants: entry (a*dim+b) lists (k, c) with
  /// [e_a, e_b] = sum_k c * e_k.
  std::vector<std::vector<std::pair<int, Rational>>> sc;

  /// Width of the weight tuples (= Cartan basis size at construction).
  int rank() const { return weights.empty() ? 0 : int(weights.front().size()); }
  const std::vector<std::pair<int, Rational>>& bracket(int a, int b) const {
    return sc[std::size_t(a) * dim + b];
  }

  /// Bracket of two coordinate vectors through the structure constants.
  QVec bracket_coords(const QVec& u, const QVec& v) const;

  /// Normalize a degree into the representative window when modular.
  int norm_degree(long long d) const {
    if (!grading_modulus) return int(d);
    int m = *grading_modulus;
    long long r = ((d + 1) % m + m) % m; // window [-1, m-2]
    return int(r - 1);
  }
};

/// Expresses vector fields in coordinates of a fixed independent family.
/// Used to coordinatize brackets during table construction.
class CoordinateSolver {
 public:
  explicit CoordinateSolver(const std::vector<SuperVectorField>& basis);

  /// Coordinates of v in the basis span; nullopt if v is outside it.
  std::optional<QVec> solve(const SuperVectorField& v) const;

  static QVec ambient_coords(const SuperVectorField& v);
  int ambient_dim() const { return ambient_; }

 private:
  int n_ = 0, dim_ = 0, ambient_ = 0;
  RationalField q_;
  mutable Eliminator<RationalField> elim_;
};

struct TableMeta {
  std::string family;
  int n = 0;
  std::optional<int> grading_modulus;
  bool theorem_scope = true;
};

/// Builds the table from a basis of homogeneous fields: coordinatizes all
/// brackets, computes weights as eigenvalues of the Cartan ad-action, and
/// verifies closure, parity/degree/weight additivity and super-skew-symmetry.
AlgebraTable build_table(const TableMeta& meta,
                         std::vector<SuperVectorField> basis,
                         std::vector<int> cartan_indices);

struct JacobiReport {
  bool pass = true;
  // first failing triple when pass is false
  int a = -1, b = -1, c = -1;
};

/// Exhaustive super-Jacobi residual check over all basis triples.
JacobiReport check_super_jacobi(const AlgebraTable& t);

/// Structural invariants that do not need the vector-field realization:
/// super-skew-symmetry and parity/degree/weight additivity of the constants.
/// Returns human-readable violations (empty means all hold).
std::vector<std::string> verify_table_invariants(const AlgebraTable& t);

/// Restriction to a bracket-closed subset of basis elements (e.g. the
/// degree-0 part). Throws NonClosureError if the subset is not closed.
AlgebraTable subalgebra(const AlgebraTable& t, const std::vector<int>& indices,
                        const std::string& family_tag);

}  // namespace cartan

#endif
