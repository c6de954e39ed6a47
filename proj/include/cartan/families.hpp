#ifndef CARTAN_FAMILIES_HPP
#define CARTAN_FAMILIES_HPP

#include <set>
#include <string>
#include <vector>

#include "cartan/table.hpp"

namespace cartan {

enum class Family { W, S, Stilde, H };

Family parse_family(const std::string& s);
std::string family_name(Family f);

/// Index involution i <-> i +- r with r = floor(n/2); fixes i = n when n is odd.
int prime_index(int i, int n);

/// sum_i partial(i, f_i); its kernel inside the Witt algebra is the special
/// subalgebra.
GrassmannPoly divergence(const SuperVectorField& d);

/// Hamiltonian field (-1)^{|f|} sum_i partial(i,f) d_{i'} of a homogeneous f,
/// extended linearly over parity parts.
SuperVectorField hamiltonian_field(const GrassmannPoly& f);

/// The grading element sum_i x_i d_i; ad of it multiplies a homogeneous
/// field by its degree.
SuperVectorField euler_field(int n);

AlgebraTable build_W(int n);
AlgebraTable build_S(int n);
AlgebraTable build_S_tilde(int n); // n must be even
AlgebraTable build_H(int n);       // n >= 4; simple range is n > 4
AlgebraTable build_H_tilde(int n);

AlgebraTable build_family(Family f, int n);

/// Extension of the algebra that carries its full superderivation algebra:
/// the algebra itself for W and the twisted special family, the special
/// family plus the grading element, and the extended Hamiltonian family plus
/// the grading element. `embedding[a]` is the index of basis element a
/// inside the extension.
struct ExtendedAlgebra {
  AlgebraTable t;
  std::vector<int> embedding;
};

ExtendedAlgebra build_extension(const AlgebraTable& l);

/// Weight (root) comparison against the family's closed-form description,
/// with the zero weight excluded on both sides by convention.
struct RootsReport {
  bool matches = false;            // computed nonzero weights = expected set
  bool extension_matches = false;  // same nonzero weights for the extension
  std::size_t count = 0;
  std::vector<Weight> computed;    // sorted, deduplicated
};

std::set<Weight> computed_roots(const AlgebraTable& t);
std::set<Weight> expected_roots(const AlgebraTable& t);
RootsReport check_roots(const AlgebraTable& l, const AlgebraTable& extension);

/// Dimensions per normalized degree, ascending.
std::vector<std::pair<int, int>> degree_census(const AlgebraTable& t);

}  // namespace cartan

#endif
