#include "stiso/brauer.hpp"

#include <string>

#include "stiso/errors.hpp"

namespace stiso {

void ModuliVector::validate() const {
  for (const auto& n : degrees) {
    if (n < 1) throw usage_error("moduli vector: degrees must be >= 1");
  }
}

GenericBrauerClass::GenericBrauerClass(ModuliVector m, IntVec k)
    : moduli(std::move(m)), coefficients(std::move(k)) {
  moduli.validate();
  if (coefficients.size() != moduli.size())
    throw usage_error("brauer class: coefficient count != moduli count");
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    coefficients[j] = mod_floor(coefficients[j], moduli.degrees[j]);
}

bool GenericBrauerClass::is_zero() const {
  for (const auto& k : coefficients) {
    if (k != 0) return false;
  }
  return true;
}

Int index(const GenericBrauerClass& cls) {
  Int result = 1;
  for (std::size_t j = 0; j < cls.moduli.size(); ++j)
    result *= cls.moduli.degrees[j] / gcd(cls.moduli.degrees[j], cls.coefficients[j]);
  return result;
}

Int exponent(const GenericBrauerClass& cls) {
  Int result = 1;
  for (std::size_t j = 0; j < cls.moduli.size(); ++j)
    result = lcm(result, cls.moduli.degrees[j] /
                             gcd(cls.moduli.degrees[j], cls.coefficients[j]));
  return result;
}

Int reduced_index_term(const IntVec& degrees, const IntVec& tuple, std::size_t j) {
  Int value = degrees[j] / gcd(tuple[j] + 1, degrees[j]);
  for (std::size_t s = 0; s < degrees.size(); ++s) {
    if (s == j) continue;
    value *= degrees[s] / gcd(tuple[s], degrees[s]);
  }
  return value;
}

Int index_reduction(const ModuliVector& moduli, const ResidueGroup& residues,
                    std::size_t j) {
  moduli.validate();
  if (residues.moduli != moduli.degrees)
    throw usage_error("index_reduction: residue group moduli mismatch");
  if (j >= moduli.size()) throw usage_error("index_reduction: factor index out of range");
  Int g = 0;
  for (const auto& tuple : residues.elements) {
    g = gcd(g, reduced_index_term(moduli.degrees, tuple, j));
    if (g == 1) break;
  }
  return g;
}

void TypeATorsorData::validate() const {
  if (n < 1 || ind_d < 1 || ind_a < 1 || d < 1)
    throw usage_error("type A torsor: parameters must be positive");
  if ((n * ind_d) % ind_a != 0)
    throw usage_error("type A torsor: ind(A) = " + ind_a.str() +
                      " does not divide n * ind(D) = " + Int(n * ind_d).str());
  if ((n * ind_d) % d != 0)
    throw usage_error("type A torsor: d = " + d.str() +
                      " does not divide n * ind(D) = " + Int(n * ind_d).str());
}

bool torsor_a_is_anisotropic(const TypeATorsorData& data) {
  data.validate();
  return data.ind_a == gcd(data.ind_a, data.ind_d) * data.n;
}

bool torsor_a_lifts(const Int& d, const GenericBrauerClass& class_a,
                    const GenericBrauerClass& class_d) {
  if (class_a.moduli.degrees != class_d.moduli.degrees)
    throw usage_error("torsor_a_lifts: classes live over different moduli");
  for (std::size_t j = 0; j < class_a.moduli.size(); ++j) {
    Int diff = d * (class_a.coefficients[j] - class_d.coefficients[j]);
    if (mod_floor(diff, class_a.moduli.degrees[j]) != 0) return false;
  }
  return true;
}

std::vector<std::pair<Int, int>> primary_decomposition(const Int& n) {
  if (n < 1) throw usage_error("primary_decomposition: argument must be >= 1");
  return factorize(n);
}

}  // namespace stiso
