#include "stiso/numeric.hpp"

#include <stdexcept>

namespace stiso {

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += boost::multiprecision::abs(m);
  return r;
}

Int div_floor(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::vector<std::pair<Int, int>> out;
  Int m = n;
  auto strip = [&](const Int& p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  for (Int d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) return 0;
  Int rep = n < 0 ? Int(-1) : Int(1);
  for (const auto& [p, e] : factorize(abs(n))) {
    if (e % 2 != 0) rep *= p;
  }
  return rep;
}

Int squarefree_part(const Rat& q) {
  return squarefree_part(Int(boost::multiprecision::numerator(q) *
                             boost::multiprecision::denominator(q)));
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(abs(n))) {
    if (e > 1) return false;
  }
  return true;
}

int ord_p(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("ord_p: argument must be nonzero");
  int v = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace stiso
