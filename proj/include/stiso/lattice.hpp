#pragma once

#include <cstddef>
#include <vector>

#include "stiso/numeric.hpp"

namespace stiso {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// A central diagonalizable subgroup C of the split torus Gm^r, described by
/// the one-parameter subgroups generating its connected part and by torsion
/// elements (zeta_m^{e_1}, ..., zeta_m^{e_r}). Empty generator lists are
/// legal and describe the trivial subgroup.
struct CentralSubgroupSpec {
  struct TorsionGenerator {
    Int modulus;       // m >= 2
    IntVec exponents;  // length rank, stored reduced mod m
  };

  std::size_t rank = 0;
  IntMat cocharacter_generators;
  std::vector<TorsionGenerator> torsion_generators;

  /// Throws usage_error on dimension mismatches or bad moduli; reduces
  /// torsion exponents into [0, m).
  void validate_and_normalize();
};

/// The sublattice of Z^rank of all characters vanishing on a central
/// subgroup, held by a Hermite-canonical basis (rows).
struct CharacterLattice {
  std::size_t rank = 0;
  IntMat basis;  // d <= rank independent rows
};

/// The finite image of a character lattice in prod_s Z/n_s. Elements are
/// listed in production order: breadth first from the generators with a
/// lexicographic tie break, so the listing is deterministic.
struct ResidueGroup {
  IntVec moduli;
  std::vector<IntVec> elements;
  std::vector<IntVec> generators;  // reduced images of the lattice basis

  bool contains(const IntVec& tuple) const;
};

/// U * A * V = diag(d_1, ..., d_k) with d_1 | d_2 | ... , d_i >= 0 and
/// U, V unimodular.
struct SmithNormalForm {
  IntVec diagonal;  // length min(rows, cols)
  IntMat row_ops;   // U, rows x rows
  IntMat col_ops;   // V, cols x cols
};

SmithNormalForm smith_normal_form(const IntMat& matrix);

/// Row-style Hermite canonicalization of a generating set: returns the
/// nonzero rows, a basis of the row lattice. Pivots are positive and
/// entries above each pivot are reduced into [0, pivot).
IntMat hermite_basis(IntMat rows);

/// Basis of {x in Z^cols : A x = 0}, as rows.
IntMat integer_kernel(const IntMat& matrix, std::size_t cols);

/// True iff v lies in the row lattice spanned by basis.
bool lattice_contains(const IntMat& basis, const IntVec& v);

/// The lattice of all characters k with <k, lambda> = 0 for every
/// cocharacter generator lambda and sum_i k_i e_i = 0 mod m for every
/// torsion generator (m, e). Congruences are absorbed by one auxiliary
/// integer unknown per torsion generator, so a single kernel computation
/// covers everything.
CharacterLattice character_lattice_of(CentralSubgroupSpec spec);

/// Additive closure of the reduced basis images in prod_s Z/n_s. Throws
/// resource_error when the closure would exceed the enumeration cap; a
/// truncated group would silently corrupt every downstream quantifier.
ResidueGroup residue_image(const CharacterLattice& lattice, const IntVec& moduli,
                           std::size_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace stiso
