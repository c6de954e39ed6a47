#ifndef CARTAN_STRUCTCHECKS_HPP
#define CARTAN_STRUCTCHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cartan/families.hpp"

namespace cartan {

/// Outcome of one structural check; a failure always carries a witness that
/// re-verifies by direct table evaluation.
struct CheckReport {
  std::string id;
  bool pass = false;
  std::string method;   // "exact" or "sampled"
  std::string witness;  // counterexample description when failing
  std::string note;
};

/// [L_{-1}, L_i] = L_{i-1} for every occupied degree, as an exact image rank
/// computation (degrees wrap for a modular grading).
CheckReport check_bracket_onto(const AlgebraTable& t);

/// Bracket closure of the local part L_{-1} + L_0 + L_1 reaches the whole
/// algebra.
CheckReport check_generated(const AlgebraTable& t);

/// No element of nonnegative degree in the extension annihilates all of
/// L_{-1}.
CheckReport check_transitive(const AlgebraTable& t, const ExtendedAlgebra& ext);

/// Irreducibility proxy for the L_0-module L_{-1}: the commutant of the
/// action is one-dimensional and sampled vectors generate everything.
/// Labeled a proxy: commutant dimension one is decisive only together with
/// complete reducibility, which is not re-proved here.
CheckReport check_irreducible(const AlgebraTable& t, std::uint64_t seed);

/// For matching degrees k + l = top: x in L_k with [x, L_l] = 0 forces
/// x = 0 (Hamiltonian family only).
CheckReport check_H_pairing(const AlgebraTable& t);

/// Sampled simplicity smoke test: ad-invariant subspaces generated by basis
/// vectors and seeded random vectors are everything.
CheckReport check_simplicity_sample(const AlgebraTable& t, std::uint64_t seed);

/// All structural checks applicable to the family, in a fixed order.
std::vector<CheckReport> run_struct_checks(const AlgebraTable& t, const ExtendedAlgebra& ext,
                                           std::uint64_t seed);

/// Deterministic small-integer test vectors (coordinates in [-3, 3]).
std::vector<QVec> seeded_vectors(int dim, int count, std::uint64_t seed);

}  // namespace cartan

#endif
