#include "stiso/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "stiso/errors.hpp"

namespace stiso {

namespace {

std::string vec_str(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

Verdict positive(std::string rule, std::string reason) {
  Verdict v;
  v.strongly_isotropic = true;
  v.rule = std::move(rule);
  v.reason = std::move(reason);
  return v;
}

Verdict negative(std::string rule, std::string reason) {
  Verdict v;
  v.strongly_isotropic = false;
  v.rule = std::move(rule);
  v.reason = std::move(reason);
  return v;
}

Verdict classify_type_a_inner(const TypeAInner& g) {
  if (g.m < 1 || g.ind_d < 1 || g.d < 1)
    throw usage_error("inner type A: parameters must be positive");
  if ((g.m * g.ind_d) % g.d != 0)
    throw usage_error("inner type A: d = " + g.d.str() + " does not divide m*ind(D) = " +
                      Int(g.m * g.ind_d).str());
  if (g.m == 1)
    return negative("inner type A",
                    "SL_1(D)/mu_d requires m > 1 to be strongly isotropic");
  for (const auto& [p, e] : factorize(g.m)) {
    if (g.d % p != 0) {
      Verdict v = positive("inner type A",
                           "prime " + p.str() + " divides m = " + g.m.str() +
                               " and does not divide d = " + g.d.str());
      v.witness_prime = p;
      return v;
    }
  }
  return negative("inner type A", "every prime divisor of m = " + g.m.str() +
                                      " divides d = " + g.d.str());
}

}  // namespace

Verdict classify_simple(const SimpleGroupDescriptor& desc) {
  return std::visit(
      [](const auto& g) -> Verdict {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TypeAInner>) {
          return classify_type_a_inner(g);
        } else if constexpr (std::is_same_v<T, TypeAOuter>) {
          return negative("outer type A", "outer type A groups admit anisotropic "
                                          "unitary torsors over some extension");
        } else if constexpr (std::is_same_v<T, TypeC>) {
          if (g.n < 1) throw usage_error("type C: n must be positive");
          if (!g.algebra_split)
            return negative("type C", "symplectic groups of a non-split algebra admit "
                                      "anisotropic symplectic involutions");
          if (g.adjoint)
            return negative("type C", "adjoint type C groups are not strongly isotropic");
          return positive("type C", "split simply connected symplectic group Sp_2n");
        } else if constexpr (std::is_same_v<T, TypeD5>) {
          if (!g.simply_connected)
            return negative("type D5", "non simply connected type D5 groups are not "
                                       "strongly isotropic");
          if (!g.disc_trivial)
            return negative("type D5", "Spin(q) requires trivial signed discriminant");
          if (!g.clifford_split)
            return negative("type D5", "Spin(q) requires a split Clifford invariant");
          return positive("type D5", "Spin(q) with trivial discriminant and split "
                                     "Clifford invariant");
        } else {
          static_assert(std::is_same_v<T, OtherType>);
          return negative("type whitelist", "groups of type " + g.dynkin_label +
                                                " lie outside the strongly isotropic "
                                                "families A, C and D5");
        }
      },
      desc);
}

Int center_modulus(const SimpleGroupDescriptor& desc) {
  return std::visit(
      [](const auto& g) -> Int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TypeAInner>) {
          return g.m * g.ind_d;
        } else if constexpr (std::is_same_v<T, TypeC>) {
          return 2;
        } else if constexpr (std::is_same_v<T, TypeD5>) {
          return 4;
        } else {
          return 1;  // outer A / other: no usable center data
        }
      },
      desc);
}

Int own_quotient_order(const SimpleGroupDescriptor& desc) {
  return std::visit(
      [](const auto& g) -> Int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TypeAInner>) {
          return g.d;
        } else if constexpr (std::is_same_v<T, TypeC>) {
          return g.adjoint ? 2 : 1;
        } else if constexpr (std::is_same_v<T, TypeD5>) {
          return g.simply_connected ? 1 : 2;
        } else {
          return 1;
        }
      },
      desc);
}

void SemisimpleDescriptor::validate_and_normalize() {
  if (factors.empty())
    throw usage_error("semisimple descriptor: factor list must be nonempty");
  for (auto& tuple : center_generators) {
    if (tuple.size() != factors.size())
      throw usage_error("semisimple descriptor: center generator length " +
                        std::to_string(tuple.size()) + " != factor count " +
                        std::to_string(factors.size()));
    for (std::size_t i = 0; i < tuple.size(); ++i)
      tuple[i] = mod_floor(tuple[i], center_modulus(factors[i]));
  }
}

Int projected_center(const SemisimpleDescriptor& desc, std::size_t i) {
  if (i >= desc.factors.size())
    throw usage_error("projected_center: factor index out of range");
  Int m = center_modulus(desc.factors[i]);
  Int g = m;
  for (const auto& tuple : desc.center_generators) {
    if (tuple.size() != desc.factors.size())
      throw usage_error("projected_center: center generator length mismatch");
    g = gcd(g, tuple[i]);
  }
  return m / g;
}

namespace {

// The canonical simple quotient of factor i: the factor's own central
// quotient enlarged by the projection of Z.
SimpleGroupDescriptor quotient_descriptor(const SimpleGroupDescriptor& factor,
                                          const Int& projected) {
  SimpleGroupDescriptor out = factor;
  const Int combined = lcm(own_quotient_order(factor), projected);
  if (auto* a = std::get_if<TypeAInner>(&out)) {
    a->d = combined;
  } else if (auto* c = std::get_if<TypeC>(&out)) {
    c->adjoint = combined > 1;
  } else if (auto* d5 = std::get_if<TypeD5>(&out)) {
    d5->simply_connected = d5->simply_connected && combined == 1;
  }
  return out;
}

std::string describe_factor(const SimpleGroupDescriptor& desc) {
  if (const auto* a = std::get_if<TypeAInner>(&desc)) {
    return "SL_" + a->m.str() + "(D), ind(D)=" + a->ind_d.str() + ", d=" + a->d.str();
  }
  if (std::holds_alternative<TypeAOuter>(desc)) return "outer type A";
  if (const auto* c = std::get_if<TypeC>(&desc)) {
    return std::string("type C") + (c->algebra_split ? ", split" : ", non-split") +
           (c->adjoint ? ", adjoint" : ", simply connected");
  }
  if (const auto* d = std::get_if<TypeD5>(&desc)) {
    return std::string("type D5") +
           (d->simply_connected ? ", simply connected" : ", not simply connected");
  }
  return "type " + std::get<OtherType>(desc).dynkin_label;
}

}  // namespace

Verdict classify_semisimple(const SemisimpleDescriptor& input) {
  SemisimpleDescriptor desc = input;
  desc.validate_and_normalize();
  const std::size_t r = desc.factors.size();

  std::vector<Int> projections(r);
  bool z_trivial = true;
  for (std::size_t i = 0; i < r; ++i) {
    projections[i] = projected_center(desc, i);
    if (projections[i] != 1) z_trivial = false;
  }

  // With nontrivial Z the canonical-quotient criterion requires squarefree
  // degrees on inner type A factors. Trivial Z makes the group a direct
  // product, where the factorwise disjunction needs no such restriction.
  if (!z_trivial) {
    for (std::size_t i = 0; i < r; ++i) {
      if (const auto* a = std::get_if<TypeAInner>(&desc.factors[i])) {
        Int degree = a->m * a->ind_d;
        if (!is_squarefree(degree))
          throw hypothesis_error(
              "semisimple classification: factor " + std::to_string(i + 1) +
              " has inner type A degree " + degree.str() +
              ", which is not squarefree; the canonical-quotient criterion does not "
              "apply (for split factors, use the lattice criterion instead)");
      }
    }
  }

  std::string detail;
  for (std::size_t i = 0; i < r; ++i) {
    SimpleGroupDescriptor quotient = quotient_descriptor(desc.factors[i], projections[i]);
    Verdict sub = classify_simple(quotient);
    if (sub.strongly_isotropic) {
      Verdict v = positive(z_trivial ? "product of simple groups" : "canonical quotient",
                           "factor " + std::to_string(i + 1) + " (" +
                               describe_factor(quotient) + "): " + sub.reason);
      v.witness_factor = i;
      v.witness_prime = sub.witness_prime;
      return v;
    }
    if (!detail.empty()) detail += "; ";
    detail += "factor " + std::to_string(i + 1) + ": " + sub.reason;
  }
  return negative(z_trivial ? "product of simple groups" : "canonical quotient",
                  "no canonical simple quotient is strongly isotropic (" + detail + ")");
}

Verdict typea_engine(const ModuliVector& moduli, const CentralSubgroupSpec& spec,
                     std::size_t enumeration_cap) {
  moduli.validate();
  if (spec.rank != moduli.size())
    throw usage_error("lattice criterion: subgroup rank " + std::to_string(spec.rank) +
                      " != number of moduli " + std::to_string(moduli.size()));
  const std::size_t r = moduli.size();
  CharacterLattice lattice = character_lattice_of(spec);
  ResidueGroup residues = residue_image(lattice, moduli.degrees, enumeration_cap);

  TypeAEvidence evidence;
  evidence.lattice_basis = lattice.basis;
  evidence.residue_count = residues.elements.size();

  for (const auto& tuple : residues.elements) {
    for (std::size_t j = 0; j < r; ++j) {
      Int value = reduced_index_term(moduli.degrees, tuple, j);
      if (value % moduli.degrees[j] != 0) {
        Verdict v = positive("lattice criterion",
                             "residue class k = " + vec_str(tuple) +
                                 " drops the generic index of factor " +
                                 std::to_string(j + 1) + " to " + value.str() +
                                 ", not divisible by n_" + std::to_string(j + 1) + " = " +
                                 moduli.degrees[j].str());
        v.witness_typea = TypeAWitness{j, tuple, value};
        v.typea_evidence = std::move(evidence);
        return v;
      }
    }
  }

  evidence.reduction_values.resize(r);
  std::string values;
  for (std::size_t j = 0; j < r; ++j) {
    evidence.reduction_values[j] = index_reduction(moduli, residues, j);
    if (j) values += ",";
    values += evidence.reduction_values[j].str();
  }
  Verdict v = negative("lattice criterion",
                       "every residue class keeps every generic index divisible by its "
                       "modulus; per-factor reduced indices (" + values + ")");
  v.typea_evidence = std::move(evidence);
  return v;
}

bool product_consistency(const SemisimpleDescriptor& a, const SemisimpleDescriptor& b) {
  for (const auto* d : {&a, &b}) {
    SemisimpleDescriptor copy = *d;
    copy.validate_and_normalize();
    for (std::size_t i = 0; i < copy.factors.size(); ++i) {
      if (projected_center(copy, i) != 1)
        throw hypothesis_error("product_consistency: descriptors must have trivial "
                               "center subgroup");
    }
  }
  SemisimpleDescriptor combined;
  combined.factors = a.factors;
  combined.factors.insert(combined.factors.end(), b.factors.begin(), b.factors.end());
  const bool combined_verdict = classify_semisimple(combined).strongly_isotropic;
  const bool expected = classify_semisimple(a).strongly_isotropic ||
                        classify_semisimple(b).strongly_isotropic;
  return combined_verdict == expected;
}

}  // namespace stiso
