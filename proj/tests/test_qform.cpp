#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stiso/errors.hpp"
#include "stiso/qform.hpp"

using namespace stiso;
using namespace stiso::testing;

namespace {

RationalQuadraticForm form(std::initializer_list<int> entries) {
  std::vector<Rat> coeffs;
  for (int e : entries) coeffs.emplace_back(e);
  return RationalQuadraticForm(std::move(coeffs));
}

RationalQuadraticForm hyperbolic_planes(int count) {
  std::vector<Rat> coeffs;
  for (int i = 0; i < count; ++i) {
    coeffs.emplace_back(1);
    coeffs.emplace_back(-1);
  }
  return RationalQuadraticForm(std::move(coeffs));
}

TwoTorsionBrauerClass make_class(std::initializer_list<int> primes, bool with_real) {
  TwoTorsionBrauerClass cls;
  for (int p : primes) cls.ramified.insert(Place::prime(p));
  if (with_real) cls.ramified.insert(Place::real());
  return cls;
}

Rat random_nonzero(std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<int> dist(-height, height);
  int v = 0;
  while (v == 0) v = dist(rng);
  return Rat(v);
}

}  // namespace

TEST_CASE("form parsing") {
  RationalQuadraticForm q = RationalQuadraticForm::parse("1,-1, 2/3");
  CHECK(q.dimension() == 3);
  CHECK(q.coefficients[2] == Rat(2, 3));
  CHECK(q.str() == "1,-1,2/3");
  CHECK_THROWS_AS(RationalQuadraticForm::parse("1,0,2"), usage_error);
  CHECK_THROWS_AS(RationalQuadraticForm::parse(""), usage_error);
  CHECK_THROWS_AS(RationalQuadraticForm::parse("1,,2"), usage_error);
  CHECK_THROWS_AS(RationalQuadraticForm::parse("1,x"), usage_error);
}

TEST_CASE("hilbert symbol pinned values") {
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::real()) == -1);
  // mod 32 search finds no primitive zero of z^2 + x^2 + y^2
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Place::prime(2)) == -1);
  CHECK_FALSE(oracle_locally_isotropic({Int(-1), Int(-1), Int(-1)}, Place::prime(2)));
  // 2 = 3^2 mod 7 is a quadratic residue
  CHECK(hilbert_symbol(Rat(2), Rat(7), Place::prime(7)) == 1);
}

TEST_CASE("hilbert symbol agrees with the conic oracle") {
  // (a,b)_p = 1 iff z^2 = a x^2 + b y^2 has a nontrivial local zero,
  // i.e. iff <a, b, -1> is isotropic at p.
  std::mt19937_64 rng(31337);
  std::vector<Place> places{Place::prime(2), Place::prime(3), Place::prime(5),
                            Place::prime(7), Place::prime(11), Place::real()};
  for (int trial = 0; trial < 300; ++trial) {
    Rat a = random_nonzero(rng, 20);
    Rat b = random_nonzero(rng, 20);
    const Place& v = places[trial % places.size()];
    bool soluble = oracle_locally_isotropic(
        {squarefree_part(a), squarefree_part(b), Int(-1)}, v);
    CHECK(hilbert_symbol(a, b, v) == (soluble ? 1 : -1));
  }
}

TEST_CASE("hilbert symbol laws") {
  std::mt19937_64 rng(8);
  std::vector<Place> places{Place::prime(2), Place::prime(3), Place::prime(5),
                            Place::prime(13), Place::real()};
  for (int trial = 0; trial < 400; ++trial) {
    Rat a = random_nonzero(rng, 30);
    Rat b = random_nonzero(rng, 30);
    Rat c = random_nonzero(rng, 30);
    const Place& v = places[trial % places.size()];
    CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
    CHECK(hilbert_symbol(a, b * c, v) ==
          hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
    CHECK(hilbert_symbol(a, -a, v) == 1);
    CHECK(hilbert_symbol(a * c * c, b, v) == hilbert_symbol(a, b, v));  // square classes
  }
}

TEST_CASE("quaternion classes") {
  CHECK(quaternion_class(Rat(-1), Rat(-1)) == make_class({2}, true));
  CHECK(quaternion_class(Rat(1), Rat(77)).trivial());
  CHECK(quaternion_class(Rat(2), Rat(5)) == make_class({2, 5}, false));
  // reciprocity on random pairs
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    Rat a = random_nonzero(rng, 40);
    Rat b = random_nonzero(rng, 40);
    CHECK(quaternion_class(a, b).ramified.size() % 2 == 0);
  }
}

TEST_CASE("signed discriminant") {
  RationalQuadraticForm ten_ones = form({1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(signed_discriminant(ten_ones).representative == -1);
  CHECK(signed_discriminant(hyperbolic_planes(5)).representative == 1);
  CHECK(signed_discriminant(form({12})).representative == 3);
  CHECK(signed_discriminant(form({-18})).representative == -2);
}

TEST_CASE("hasse invariant pinned values") {
  CHECK(hasse_invariant(form({1, 1})).trivial());
  CHECK(hasse_invariant(form({-1, -1})) == make_class({2}, true));
  CHECK(hasse_invariant(form({2, 5})) == make_class({2, 5}, false));
}

TEST_CASE("witt invariant of quaternion norm-type forms") {
  // c(<1,-a,-b,ab>) = (a,b)
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = random_nonzero(rng, 30);
    Rat b = random_nonzero(rng, 30);
    RationalQuadraticForm q({Rat(1), -a, -b, a * b});
    CHECK(witt_invariant(q) == quaternion_class(a, b));
  }
  RationalQuadraticForm minus_ones({Rat(1), Rat(1), Rat(1), Rat(1)});
  CHECK(witt_invariant(minus_ones) == make_class({2}, true));
}

TEST_CASE("witt invariant of hyperbolic forms is trivial") {
  for (int m = 1; m <= 6; ++m) CHECK(witt_invariant(hyperbolic_planes(m)).trivial());
}

TEST_CASE("witt invariant matches the Clifford algebra structure in low dimension") {
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = random_nonzero(rng, 25);
    Rat b = random_nonzero(rng, 25);
    Rat c = random_nonzero(rng, 25);
    // dim 1: the even Clifford algebra is the base field
    CHECK(witt_invariant(RationalQuadraticForm({a})).trivial());
    // dim 2: the Clifford algebra is the quaternion algebra (a, b)
    CHECK(witt_invariant(RationalQuadraticForm({a, b})) == quaternion_class(a, b));
    // dim 3: the even Clifford algebra is (-ab, -bc)
    CHECK(witt_invariant(RationalQuadraticForm({a, b, c})) ==
          quaternion_class(Rat(-a * b), Rat(-b * c)));
  }
  // dim 6 spot value: C(<1>^6) is Brauer equivalent to (-1,-1)
  CHECK(witt_invariant(form({1, 1, 1, 1, 1, 1})) ==
        quaternion_class(Rat(-1), Rat(-1)));
}

TEST_CASE("odd-dimensional witt invariant reduces to the even Clifford algebra") {
  // C_0(<a_1,...,a_n>) and C(<-a_1 a_n, ..., -a_{n-1} a_n>) are isomorphic;
  // the odd-dimensional invariant must equal the even-dimensional one of the
  // reduced form.
  std::mt19937_64 rng(16180);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t dim = 3 + 2 * (trial % 3);  // 3, 5, 7
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < dim; ++i) coeffs.push_back(random_nonzero(rng, 20));
    std::vector<Rat> reduced;
    for (std::size_t i = 0; i + 1 < dim; ++i)
      reduced.push_back(Rat(-coeffs[i] * coeffs[dim - 1]));
    CHECK(witt_invariant(RationalQuadraticForm(coeffs)) ==
          witt_invariant(RationalQuadraticForm(reduced)));
  }
}

TEST_CASE("hasse ramification set matches the per-place products") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t dim = 2 + trial % 4;
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < dim; ++i) coeffs.push_back(random_nonzero(rng, 20));
    RationalQuadraticForm q(coeffs);
    TwoTorsionBrauerClass cls = hasse_invariant(q);
    for (const auto& v : candidate_places(q)) {
      CHECK((hasse_invariant_at(q, v) == -1) == (cls.ramified.count(v) > 0));
    }
  }
}

TEST_CASE("witt invariant odd-dimensional scaling invariance") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t dim = 1 + 2 * (trial % 3);  // 1, 3, 5
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < dim; ++i) coeffs.push_back(random_nonzero(rng, 30));
    RationalQuadraticForm q(coeffs);
    Rat a = random_nonzero(rng, 30);
    std::vector<Rat> scaled;
    for (const auto& c : coeffs) scaled.push_back(a * c);
    CHECK(witt_invariant(RationalQuadraticForm(scaled)) == witt_invariant(q));
  }
}

TEST_CASE("witt invariant conformance identities") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> even_dim(1, 3);  // halves
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Rat> c1, c2;
    std::size_t d1 = 2 * even_dim(rng), d2 = 2 * even_dim(rng);
    for (std::size_t i = 0; i < d1; ++i) c1.push_back(random_nonzero(rng, 30));
    for (std::size_t i = 0; i < d2; ++i) c2.push_back(random_nonzero(rng, 30));
    RationalQuadraticForm q1(c1), q2(c2);

    // (1) even orthogonal sums
    std::vector<Rat> sum = c1;
    sum.insert(sum.end(), c2.begin(), c2.end());
    TwoTorsionBrauerClass expected =
        witt_invariant(q1) + witt_invariant(q2) +
        quaternion_class(Rat(signed_discriminant(q1).representative),
                         Rat(signed_discriminant(q2).representative));
    CHECK(witt_invariant(RationalQuadraticForm(sum)) == expected);

    // (4) even-dimensional scaling
    Rat a = random_nonzero(rng, 30);
    std::vector<Rat> scaled;
    for (const auto& c : c1) scaled.push_back(a * c);
    CHECK(witt_invariant(RationalQuadraticForm(scaled)) ==
          witt_invariant(q1) +
              quaternion_class(a, Rat(signed_discriminant(q1).representative)));
  }
}

TEST_CASE("local isotropy pinned values") {
  CHECK_FALSE(is_locally_isotropic(form({1, 1, 1}), Place::real()));
  CHECK(is_locally_isotropic(form({1, 1, 1, 1, 1}), Place::prime(2)));
  CHECK(oracle_locally_isotropic({Int(1), Int(1), Int(1), Int(1), Int(1)},
                                 Place::prime(2)));
  CHECK_FALSE(is_locally_isotropic(form({1, 1}), Place::prime(7)));
}

TEST_CASE("local isotropy agrees with the lifting oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t dim = 1 + trial % 4;
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < dim; ++i) coeffs.push_back(random_nonzero(rng, 20));
    RationalQuadraticForm q(coeffs);
    for (const auto& v : candidate_places(q)) {
      CHECK(is_locally_isotropic(q, v) == oracle_locally_isotropic(integer_model(q), v));
    }
  }
}

TEST_CASE("global isotropy pinned values") {
  CHECK(is_isotropic(form({1, -1})));
  CHECK_FALSE(is_isotropic(form({1, 1, 1})));
  RationalQuadraticForm q = form({1, 1, 1, 1, -7});
  CHECK(is_isotropic(q));
  // explicit witness 1 + 1 + 1 + 4 = 7
  Rat value = 0;
  IntVec witness{1, 1, 1, 2, 1};
  for (std::size_t i = 0; i < 5; ++i)
    value += q.coefficients[i] * Rat(witness[i]) * Rat(witness[i]);
  CHECK(value == 0);
}

TEST_CASE("dimension-two isotropy is the square test") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Rat a = random_nonzero(rng, 30);
    Rat b = random_nonzero(rng, 30);
    RationalQuadraticForm q({a, b});
    CHECK(is_isotropic(q) == (squarefree_part(Rat(-a * b)) == 1));
  }
}

TEST_CASE("dimension-three isotropy agrees with the bounded Legendre oracle") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 300; ++trial) {
    Int a = squarefree_part(Int(random_nonzero(rng, 30)));
    Int b = squarefree_part(Int(random_nonzero(rng, 30)));
    Int c = squarefree_part(Int(random_nonzero(rng, 30)));
    RationalQuadraticForm q({Rat(a), Rat(b), Rat(c)});
    CHECK(is_isotropic(q) == oracle_ternary_isotropic(a, b, c));
  }
}

TEST_CASE("a found vector forces a positive global verdict") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t dim = 3 + trial % 2;
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < dim; ++i) coeffs.push_back(random_nonzero(rng, 15));
    RationalQuadraticForm q(coeffs);
    if (bounded_vector_search(integer_model(q), 8)) CHECK(is_isotropic(q));
  }
}

TEST_CASE("d5 torsor criterion") {
  RationalQuadraticForm split = hyperbolic_planes(5);
  CHECK(torsor_d5_isotropic(split, split));
  RationalQuadraticForm indefinite = form({1, 1, 1, 1, 1, 1, 1, 1, 1, -1});
  CHECK(signed_discriminant(indefinite) == signed_discriminant(split));
  CHECK(torsor_d5_isotropic(split, indefinite));
  // anisotropic base: hypothesis fails
  CHECK_THROWS_AS(torsor_d5_isotropic(form({1, 1, 1}), form({1, 1, 1})), hypothesis_error);
  // mismatched invariants: not a torsor datum
  CHECK_THROWS_AS(torsor_d5_isotropic(split, form({1, -1})), hypothesis_error);
  CHECK_THROWS_AS(
      torsor_d5_isotropic(split, form({2, 1, 1, 1, 1, 1, 1, 1, 1, -1})),
      hypothesis_error);
}

TEST_CASE("spin descriptors") {
  SpinDescriptor split = spin_descriptor_of(hyperbolic_planes(5));
  CHECK(split.dimension == 10);
  CHECK(split.disc_trivial);
  CHECK(split.clifford_split);

  SpinDescriptor definite = spin_descriptor_of(form({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(definite.disc_trivial);

  SpinDescriptor plane = spin_descriptor_of(form({1, -1}));
  CHECK(plane.dimension == 2);
  CHECK(plane.disc_trivial);
  CHECK(plane.clifford_split);
}

TEST_CASE("local squares") {
  CHECK(is_local_square(Rat(4), Place::prime(2)));
  CHECK_FALSE(is_local_square(Rat(2), Place::prime(2)));
  CHECK(is_local_square(Rat(17), Place::prime(2)));  // 17 = 1 mod 8
  CHECK(is_local_square(Rat(2), Place::prime(7)));
  CHECK_FALSE(is_local_square(Rat(3), Place::prime(7)));
  CHECK_FALSE(is_local_square(Rat(-4), Place::real()));
  CHECK(is_local_square(Rat(7), Place::prime(3)));  // 7 = 1 mod 3
}

TEST_CASE("place validation") {
  CHECK_THROWS_AS(Place::prime(6), usage_error);
  CHECK_THROWS_AS(Place::prime(1), usage_error);
  CHECK(Place::prime(2).str() == "2");
  CHECK(Place::real().str() == "real");
}
