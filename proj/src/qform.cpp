#include "stiso/qform.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "stiso/errors.hpp"

namespace stiso {

namespace {

// Legendre symbol (u | p) for p odd, p not dividing u.
int legendre(const Int& u, const Int& p) {
  Int e = boost::multiprecision::powm(mod_floor(u, p), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int mod2(const Int& x) { return static_cast<int>(mod_floor(x, 2)); }

// (x - 1)/2 mod 2 for odd x.
int eps2(const Int& x) { return mod2((x - 1) / 2); }

// (x^2 - 1)/8 mod 2 for odd x.
int omega2(const Int& x) { return mod2((x * x - 1) / 8); }

}  // namespace

Place Place::real() {
  Place v;
  v.real_ = true;
  return v;
}

Place Place::prime(Int p) {
  if (!is_prime(p)) throw usage_error("place: " + p.str() + " is not prime");
  Place v;
  v.p_ = std::move(p);
  return v;
}

std::string Place::str() const { return real_ ? "real" : p_.str(); }

TwoTorsionBrauerClass TwoTorsionBrauerClass::operator+(
    const TwoTorsionBrauerClass& other) const {
  TwoTorsionBrauerClass out;
  std::set_symmetric_difference(ramified.begin(), ramified.end(),
                                other.ramified.begin(), other.ramified.end(),
                                std::inserter(out.ramified, out.ramified.end()));
  return out;
}

RationalQuadraticForm::RationalQuadraticForm(std::vector<Rat> coeffs)
    : coefficients(std::move(coeffs)) {
  if (coefficients.empty())
    throw usage_error("quadratic form: at least one diagonal entry required");
  for (const auto& a : coefficients) {
    if (a == 0) throw usage_error("quadratic form: zero diagonal entry");
  }
}

RationalQuadraticForm RationalQuadraticForm::parse(std::string_view text) {
  std::vector<Rat> coeffs;
  std::string token;
  auto flush = [&] {
    // trim
    std::size_t b = token.find_first_not_of(" \t");
    std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw usage_error("quadratic form: empty coefficient in \"" + std::string(text) + "\"");
    std::string lit = token.substr(b, e - b + 1);
    try {
      coeffs.emplace_back(Rat(lit));
    } catch (const std::exception&) {
      throw usage_error("quadratic form: cannot parse coefficient \"" + lit + "\"");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return RationalQuadraticForm(std::move(coeffs));
}

std::string RationalQuadraticForm::str() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ",";
    out += coefficients[i].str();
  }
  return out;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw usage_error("hilbert symbol: arguments must be nonzero");
  const Int A = squarefree_part(a);
  const Int B = squarefree_part(b);
  if (v.is_real()) return (A < 0 && B < 0) ? -1 : 1;
  const Int& p = v.prime_value();
  const int alpha = ord_p(A, p);  // 0 or 1, A squarefree
  const int beta = ord_p(B, p);
  Int u = alpha ? A / p : A;
  Int w = beta ? B / p : B;
  if (p == 2) {
    int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if (alpha && beta && legendre(Int(-1), p) == -1) s = -s;
  if (beta && legendre(u, p) == -1) s = -s;
  if (alpha && legendre(w, p) == -1) s = -s;
  return s;
}

namespace {

void add_odd_prime_places(const Int& squarefree, std::set<Place>& places) {
  Int m = abs(squarefree);
  for (const auto& [prime, unused] : factorize(m)) {
    if (prime != 2) places.insert(Place::prime(prime));
  }
}

std::set<Place> symbol_candidate_places(const Int& A, const Int& B) {
  std::set<Place> places{Place::real(), Place::prime(2)};
  add_odd_prime_places(A, places);
  add_odd_prime_places(B, places);
  return places;
}

}  // namespace

TwoTorsionBrauerClass quaternion_class(const Rat& a, const Rat& b) {
  const Int A = squarefree_part(a);
  const Int B = squarefree_part(b);
  TwoTorsionBrauerClass cls;
  for (const auto& v : symbol_candidate_places(A, B)) {
    if (hilbert_symbol(Rat(A), Rat(B), v) == -1) cls.ramified.insert(v);
  }
  if (cls.ramified.size() % 2 != 0)
    throw std::logic_error("quaternion class: reciprocity violated");  // unreachable
  return cls;
}

SquareClass signed_discriminant(const RationalQuadraticForm& q) {
  const std::size_t n = q.dimension();
  Rat det = 1;
  for (const auto& a : q.coefficients) det *= a;
  Int sign_exp = Int(n) * Int(n - 1) / 2;
  if (sign_exp % 2 != 0) det = -det;
  return SquareClass{squarefree_part(det)};
}

TwoTorsionBrauerClass hasse_invariant(const RationalQuadraticForm& q) {
  TwoTorsionBrauerClass s;
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    for (std::size_t j = i + 1; j < q.dimension(); ++j)
      s = s + quaternion_class(q.coefficients[i], q.coefficients[j]);
  }
  return s;
}

int hasse_invariant_at(const RationalQuadraticForm& q, const Place& v) {
  int s = 1;
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    for (std::size_t j = i + 1; j < q.dimension(); ++j)
      s *= hilbert_symbol(q.coefficients[i], q.coefficients[j], v);
  }
  return s;
}

TwoTorsionBrauerClass witt_invariant(const RationalQuadraticForm& q) {
  TwoTorsionBrauerClass c = hasse_invariant(q);
  const Rat d{signed_discriminant(q).representative};
  switch (q.dimension() % 8) {
    case 1:
    case 2:
      break;
    case 3:
      c = c + quaternion_class(Rat(-1), d);
      break;
    case 4:
      c = c + quaternion_class(Rat(-1), -d);
      break;
    case 5:
    case 6:
      c = c + quaternion_class(Rat(-1), Rat(-1));
      break;
    case 7:
      c = c + quaternion_class(Rat(-1), -d);
      break;
    case 0:
      c = c + quaternion_class(Rat(-1), d);
      break;
  }
  return c;
}

bool is_local_square(const Rat& x, const Place& v) {
  if (x == 0) throw usage_error("is_local_square: argument must be nonzero");
  const Int s = squarefree_part(x);
  if (v.is_real()) return s > 0;
  if (s == 1) return true;
  const Int& p = v.prime_value();
  if (mod_floor(s, p) == 0) return false;  // odd valuation
  if (p == 2) return mod_floor(s, 8) == 1;
  return legendre(s, p) == 1;
}

bool is_locally_isotropic(const RationalQuadraticForm& q, const Place& v) {
  const std::size_t n = q.dimension();
  if (v.is_real()) {
    bool pos = false, neg = false;
    for (const auto& a : q.coefficients) (a > 0 ? pos : neg) = true;
    return pos && neg;
  }
  if (n == 1) return false;
  if (n >= 5) return true;  // u-invariant of a p-adic field is 4
  Rat det = 1;
  for (const auto& a : q.coefficients) det *= a;
  if (n == 2) return is_local_square(-det, v);  // -a1*a2 a square
  if (n == 3) return hasse_invariant_at(q, v) == hilbert_symbol(Rat(-1), -det, v);
  // n == 4
  if (!is_local_square(det, v)) return true;
  return hasse_invariant_at(q, v) == hilbert_symbol(Rat(-1), Rat(-1), v);
}

std::vector<Place> candidate_places(const RationalQuadraticForm& q) {
  std::set<Place> places{Place::real(), Place::prime(2)};
  for (const auto& a : q.coefficients) add_odd_prime_places(squarefree_part(a), places);
  return {places.begin(), places.end()};
}

bool is_isotropic(const RationalQuadraticForm& q) {
  const std::size_t n = q.dimension();
  if (n == 1) return false;
  if (n == 2) return squarefree_part(Rat(-q.coefficients[0] * q.coefficients[1])) == 1;
  // At every odd prime away from the coefficients the form has unit
  // diagonal of rank >= 3 and is isotropic, so the candidate list suffices.
  for (const auto& v : candidate_places(q)) {
    if (!is_locally_isotropic(q, v)) return false;
  }
  return true;
}

bool torsor_d5_isotropic(const RationalQuadraticForm& q_base,
                         const RationalQuadraticForm& q_twist) {
  if (q_base.dimension() != q_twist.dimension())
    throw hypothesis_error("d5 torsor: twist dimension " +
                           std::to_string(q_twist.dimension()) +
                           " != base dimension " + std::to_string(q_base.dimension()) +
                           "; not a torsor datum");
  if (!(signed_discriminant(q_base) == signed_discriminant(q_twist)))
    throw hypothesis_error("d5 torsor: signed discriminants differ; not a torsor datum");
  if (!is_isotropic(q_base))
    throw hypothesis_error("d5 torsor: base form is anisotropic; the criterion requires "
                           "an isotropic base");
  return is_isotropic(q_twist);
}

SpinDescriptor spin_descriptor_of(const RationalQuadraticForm& q) {
  return SpinDescriptor{q.dimension(), signed_discriminant(q).trivial(),
                        witt_invariant(q).trivial()};
}

}  // namespace stiso
