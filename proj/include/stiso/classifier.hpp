#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stiso/brauer.hpp"
#include "stiso/lattice.hpp"
#include "stiso/numeric.hpp"
#include "stiso/qform.hpp"

namespace stiso {

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

/// SL_m(D)/mu_d with deg(D) = ind_d, so the group sits inside algebras of
/// degree m * ind_d. Requires d | m * ind_d.
struct TypeAInner {
  Int m = 1;
  Int ind_d = 1;
  Int d = 1;
};

/// Outer type A (special unitary groups); carries no further data because
/// the verdict does not depend on it.
struct TypeAOuter {};

/// Type C_n: symplectic groups of a degree-2n algebra with involution.
struct TypeC {
  Int n = 1;
  bool algebra_split = true;
  bool adjoint = false;
};

/// Type D_5 in its simply connected guise Spin(q); the invariant flags are
/// meaningful only when simply_connected holds.
struct TypeD5 {
  bool simply_connected = true;
  bool disc_trivial = false;
  bool clifford_split = false;
};

/// Any other Dynkin family (B_n, D_{n != 5}, E_6, E_7, E_8, F_4, G_2).
struct OtherType {
  std::string dynkin_label;
};

using SimpleGroupDescriptor =
    std::variant<TypeAInner, TypeAOuter, TypeC, TypeD5, OtherType>;

/// Product of simply connected covers divided by a central subgroup Z of
/// prod_i mu_{m_i}, with Z given by exponent-tuple generators against the
/// per-factor center moduli m_i.
struct SemisimpleDescriptor {
  std::vector<SimpleGroupDescriptor> factors;
  IntMat center_generators;  // each tuple has one exponent per factor

  void validate_and_normalize();  // reduces exponents mod m_i
};

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

struct TypeAWitness {
  std::size_t j = 0;  // 0-based factor index
  IntVec k;           // residue tuple, reduced
  Int value;          // the reduced index term, not divisible by n_j
};

/// Evidence attached to a lattice-criterion verdict: enough to audit the
/// run without repeating the enumeration.
struct TypeAEvidence {
  IntMat lattice_basis;
  std::size_t residue_count = 0;
  IntVec reduction_values;  // per-factor generic indices; filled on negatives
};

struct Verdict {
  bool strongly_isotropic = false;
  std::string rule;    // which decision rule fired
  std::string reason;  // human readable justification

  std::optional<Int> witness_prime;            // simple type A positives
  std::optional<std::size_t> witness_factor;   // semisimple positives, 0-based
  std::optional<TypeAWitness> witness_typea;   // lattice-criterion positives
  std::optional<TypeAEvidence> typea_evidence;
};

// ---------------------------------------------------------------------------
// Decision procedures
// ---------------------------------------------------------------------------

/// Simple classification. Strongly isotropic groups are exactly: split
/// simply connected type C; simply connected type D5 with trivial
/// discriminant and split Clifford invariant; inner type A quotients
/// SL_m(D)/mu_d with m > 1 and some prime divisor of m not dividing d.
Verdict classify_simple(const SimpleGroupDescriptor& desc);

/// Center modulus m_i of the simply connected cover of a factor.
Int center_modulus(const SimpleGroupDescriptor& desc);

/// Order of the central quotient already present in the factor's own
/// presentation (d for inner type A, 2 for adjoint C, ...).
Int own_quotient_order(const SimpleGroupDescriptor& desc);

/// Order c_i of the projection p_i(Z) into mu_{m_i}.
Int projected_center(const SemisimpleDescriptor& desc, std::size_t i);

/// Semisimple classification via the canonical simple quotients
/// G_i / p_i(Z). With trivial Z the group is a direct product and the
/// verdict is the disjunction of the factor verdicts; with nontrivial Z
/// every inner type A factor must have squarefree degree, else the
/// procedure raises hypothesis_error instead of guessing.
Verdict classify_semisimple(const SemisimpleDescriptor& desc);

/// Split type A lattice criterion: decides strong isotropy of
/// (SL_{n_1} x ... x SL_{n_r})/C from the character lattice of C. Searches
/// residue classes in production order for a tuple k and factor j with
/// n_j not dividing the reduced index term; the first hit is the witness.
Verdict typea_engine(const ModuliVector& moduli, const CentralSubgroupSpec& spec,
                     std::size_t enumeration_cap = kDefaultEnumerationCap);

/// Checked product law (test utility): on trivial-center descriptors the
/// concatenated verdict must equal the disjunction of the two verdicts.
bool product_consistency(const SemisimpleDescriptor& a, const SemisimpleDescriptor& b);

}  // namespace stiso
