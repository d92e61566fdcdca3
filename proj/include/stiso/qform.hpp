#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stiso/numeric.hpp"

namespace stiso {

/// A place of Q: the real place or a prime. Ordering lists finite primes
/// ascending with the real place last, which fixes the serialization of
/// ramification sets.
class Place {
 public:
  static Place real();
  static Place prime(Int p);  // validates primality by trial division

  bool is_real() const { return real_; }
  const Int& prime_value() const { return p_; }
  std::string str() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.real_ == b.real_ && a.p_ == b.p_;
  }
  friend bool operator<(const Place& a, const Place& b) {
    if (a.real_ != b.real_) return !a.real_;
    return a.p_ < b.p_;
  }

 private:
  Place() = default;
  bool real_ = false;
  Int p_ = 0;
};

/// A 2-torsion Brauer class of Q, represented by its finite (even) set of
/// ramified places. The group law is symmetric difference.
struct TwoTorsionBrauerClass {
  std::set<Place> ramified;

  bool trivial() const { return ramified.empty(); }
  TwoTorsionBrauerClass operator+(const TwoTorsionBrauerClass& other) const;
  bool operator==(const TwoTorsionBrauerClass& other) const = default;
};

/// A square class of Q*, canonically a squarefree integer with sign.
struct SquareClass {
  Int representative = 1;

  bool trivial() const { return representative == 1; }
  bool operator==(const SquareClass& other) const = default;
};

/// Diagonal form <a_1, ..., a_n> with nonzero rational entries.
struct RationalQuadraticForm {
  std::vector<Rat> coefficients;

  explicit RationalQuadraticForm(std::vector<Rat> coeffs);
  std::size_t dimension() const { return coefficients.size(); }

  /// Parses comma separated rational literals, e.g. "1,-1,2/3".
  static RationalQuadraticForm parse(std::string_view text);
  std::string str() const;
};

/// Local Hilbert symbol (a, b)_v in {+1, -1}. Bimultiplicative, symmetric,
/// and depends only on the square classes of a and b.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// The class of the quaternion algebra (a, b): ramified exactly where the
/// symbol is -1. Only the finitely many candidate places (real, 2, odd
/// primes dividing the squarefree parts) are examined.
TwoTorsionBrauerClass quaternion_class(const Rat& a, const Rat& b);

/// d_pm(q) = (-1)^{n(n-1)/2} * prod a_i as a square class.
SquareClass signed_discriminant(const RationalQuadraticForm& q);

/// sum_{i<j} (a_i, a_j), the Hasse invariant as a ramification set.
TwoTorsionBrauerClass hasse_invariant(const RationalQuadraticForm& q);

/// Hasse invariant of q at a single place, as +-1.
int hasse_invariant_at(const RationalQuadraticForm& q, const Place& v);

/// The Witt invariant c(q): the Brauer class of the Clifford algebra (its
/// even part in odd dimension), computed from the Hasse invariant by the
/// dimension mod 8 correction in (-1,-1) and (-1, d_pm).
TwoTorsionBrauerClass witt_invariant(const RationalQuadraticForm& q);

bool is_locally_isotropic(const RationalQuadraticForm& q, const Place& v);

/// Hasse-Minkowski over Q: local checks at the real place, 2 and the odd
/// primes dividing some coefficient's squarefree part.
bool is_isotropic(const RationalQuadraticForm& q);

/// The places is_isotropic examines, in canonical order.
std::vector<Place> candidate_places(const RationalQuadraticForm& q);

/// Isotropy of the SO(q_base)-torsor given by q_twist. Requires q_base
/// isotropic and q_twist of the same dimension and signed discriminant;
/// violations raise hypothesis_error (invalid torsor datum).
bool torsor_d5_isotropic(const RationalQuadraticForm& q_base,
                         const RationalQuadraticForm& q_twist);

struct SpinDescriptor {
  std::size_t dimension = 0;
  bool disc_trivial = false;
  bool clifford_split = false;
};

/// The invariant triple the classifier consumes for Spin(q).
SpinDescriptor spin_descriptor_of(const RationalQuadraticForm& q);

/// Whether x is a square in the completion at v.
bool is_local_square(const Rat& x, const Place& v);

}  // namespace stiso
