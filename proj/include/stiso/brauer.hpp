#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stiso/lattice.hpp"
#include "stiso/numeric.hpp"

namespace stiso {

/// Degrees (n_1, ..., n_r) of a generic tuple of division algebras.
/// Entries of 1 are legal and contribute trivially.
struct ModuliVector {
  IntVec degrees;

  std::size_t size() const { return degrees.size(); }
  void validate() const;  // every degree >= 1
};

/// An element sum_j k_j [A_j] of the free model (+)_j Z/n_j, with the
/// coefficients stored reduced into [0, n_j).
struct GenericBrauerClass {
  ModuliVector moduli;
  IntVec coefficients;

  GenericBrauerClass(ModuliVector m, IntVec k);
  bool is_zero() const;
};

/// prod_j n_j / gcd(n_j, k_j); equals 1 exactly for the zero class.
Int index(const GenericBrauerClass& cls);

/// The additive order lcm_j n_j / gcd(n_j, k_j); always divides index().
Int exponent(const GenericBrauerClass& cls);

/// gcd over all residue tuples k of
///   n_j/gcd(1 + k_j, n_j) * prod_{s != j} n_s/gcd(k_s, n_s),
/// the generic index of [A_j] after splitting the classes of the residue
/// group. j is 0-based.
Int index_reduction(const ModuliVector& moduli, const ResidueGroup& residues,
                    std::size_t j);

/// One summand of the gcd above, for a single residue tuple.
Int reduced_index_term(const IntVec& degrees, const IntVec& tuple, std::size_t j);

/// Invariant data of a torsor of SL_n(D)/mu_d: the algebra A it induces,
/// known through ind(A), together with ind(D) and the quotient parameter.
struct TypeATorsorData {
  Int n;
  Int ind_d;
  Int ind_a;
  Int d;

  void validate() const;  // ind_a | n * ind_d and d | n * ind_d
};

/// ind(A) = gcd(ind(A), ind(D)) * n, i.e. A carries no proper flag of
/// ideals. For split D this says A is a division algebra.
bool torsor_a_is_anisotropic(const TypeATorsorData& data);

/// Whether the adjoint-level torsor lifts through the mu_d quotient:
/// d * ([A] - [D]) = 0 in the class model.
bool torsor_a_lifts(const Int& d, const GenericBrauerClass& class_a,
                    const GenericBrauerClass& class_d);

std::vector<std::pair<Int, int>> primary_decomposition(const Int& n);

}  // namespace stiso
