#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace stiso {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major

/// gcd normalized so that gcd(0, n) = |n|; hence n / gcd(0, n) = 1, which is
/// the convention the generic index formulas rely on at k = 0.
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Least nonnegative representative of a mod m (m > 0).
Int mod_floor(const Int& a, const Int& m);

/// Floor division (needed for Hermite reduction of entries above a pivot).
Int div_floor(const Int& a, const Int& b);

/// Deterministic trial division; inputs in this engine are desk scale.
bool is_prime(const Int& n);

/// Prime factorization of n >= 1 by trial division, primes ascending.
std::vector<std::pair<Int, int>> factorize(const Int& n);

/// Sign-preserving squarefree part: the canonical representative of the
/// square class of n. squarefree_part(0) = 0, squarefree_part(-18) = -2.
Int squarefree_part(const Int& n);

/// Square class of a nonzero rational, as a squarefree integer. Uses
/// num * den, which differs from the rational by the square den^2.
Int squarefree_part(const Rat& q);

bool is_squarefree(const Int& n);

/// p-adic valuation ord_p(n) for n != 0.
int ord_p(const Int& n, const Int& p);

}  // namespace stiso
