#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stiso/brauer.hpp"
#include "stiso/errors.hpp"

using namespace stiso;
using namespace stiso::testing;

TEST_CASE("index of generic classes") {
  CHECK(index(GenericBrauerClass({{2, 4}}, {1, 2})) == 4);
  CHECK(index(GenericBrauerClass({{2, 4}}, {0, 0})) == 1);
  CHECK(index(GenericBrauerClass({{6, 10}}, {1, 1})) == 60);
  CHECK(index(GenericBrauerClass({{7}}, {0})) == 1);
}

TEST_CASE("exponent is the brute-force additive order") {
  CHECK(exponent(GenericBrauerClass({{2, 4}}, {1, 2})) == 2);
  CHECK(additive_order({2, 4}, {1, 2}) == 2);
  CHECK(exponent(GenericBrauerClass({{5, 9}}, {0, 0})) == 1);
  CHECK(exponent(GenericBrauerClass({{6, 10}}, {1, 1})) == 30);
  CHECK(additive_order({6, 10}, {1, 1}) == 30);

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> mod_dist(1, 12);
  std::uniform_int_distribution<int> coeff(-12, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + trial % 3;
    IntVec moduli(r), k(r);
    for (auto& n : moduli) n = mod_dist(rng);
    for (auto& x : k) x = coeff(rng);
    GenericBrauerClass cls({moduli}, k);
    CHECK(exponent(cls) == additive_order(moduli, cls.coefficients));
    CHECK(index(cls) % exponent(cls) == 0);
  }
}

TEST_CASE("index is 1 exactly at zero and is negation invariant") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> mod_dist(1, 9);
  std::uniform_int_distribution<int> coeff(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + trial % 3;
    IntVec moduli(r), k(r), neg(r);
    for (std::size_t i = 0; i < r; ++i) {
      moduli[i] = mod_dist(rng);
      k[i] = coeff(rng);
      neg[i] = -k[i];
    }
    GenericBrauerClass cls({moduli}, k);
    GenericBrauerClass negated({moduli}, neg);
    CHECK((index(cls) == 1) == cls.is_zero());
    CHECK(index(cls) == index(negated));
  }
}

TEST_CASE("index_reduction over the diagonal residue group mod (2,4)") {
  CharacterLattice lattice{2, {{1, -1}}};
  ModuliVector moduli{{2, 4}};
  ResidueGroup residues = residue_image(lattice, moduli.degrees);
  // Enumerating the four residue tuples by hand gives the gcd arguments
  // {2,4,4,4} for j=0 and {4,2,4,4} for j=1.
  CHECK(index_reduction(moduli, residues, 0) == 2);
  CHECK(index_reduction(moduli, residues, 1) == 2);
}

TEST_CASE("index_reduction over the trivial residue group returns n_j") {
  CharacterLattice zero{3, {}};
  ModuliVector moduli{{5, 8, 9}};
  ResidueGroup residues = residue_image(zero, moduli.degrees);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(index_reduction(moduli, residues, j) == moduli.degrees[j]);
}

TEST_CASE("index_reduction divides the ambient degree product") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> mod_dist(1, 8);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + trial % 3;
    IntVec degrees(r);
    for (auto& n : degrees) n = mod_dist(rng);
    CharacterLattice lattice;
    lattice.rank = r;
    if (trial % 4 != 0) {
      IntVec row(r);
      for (auto& x : row) x = entry(rng);
      lattice.basis.push_back(row);
    }
    ModuliVector moduli{degrees};
    ResidueGroup residues = residue_image(lattice, degrees);
    for (std::size_t j = 0; j < r; ++j) {
      Int bound = 1;
      for (const auto& n : degrees) bound *= n;
      Int reduced = index_reduction(moduli, residues, j);
      CHECK(reduced >= 1);
      CHECK(bound % reduced == 0);
    }
  }
}

TEST_CASE("index_reduction never grows when the residue group grows") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> mod_dist(1, 8);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t r = 2 + trial % 2;
    IntVec degrees(r);
    for (auto& n : degrees) n = mod_dist(rng);
    ModuliVector moduli{degrees};
    CharacterLattice small;
    small.rank = r;
    IntVec row(r);
    for (auto& x : row) x = entry(rng);
    small.basis.push_back(row);
    CharacterLattice large = small;
    IntVec extra(r);
    for (auto& x : extra) x = entry(rng);
    large.basis.push_back(extra);
    ResidueGroup rg_small = residue_image(small, degrees);
    ResidueGroup rg_large = residue_image(large, degrees);
    for (std::size_t j = 0; j < r; ++j) {
      Int v_small = index_reduction(moduli, rg_small, j);
      Int v_large = index_reduction(moduli, rg_large, j);
      CHECK(v_small % v_large == 0);  // enlargement refines the gcd
    }
  }
}

TEST_CASE("invalid brauer class inputs") {
  CHECK_THROWS_AS(GenericBrauerClass({{0, 4}}, {0, 0}), usage_error);
  CHECK_THROWS_AS(GenericBrauerClass({{2, 4}}, {0}), usage_error);
  ModuliVector moduli{{2, 4}};
  CharacterLattice lattice{2, {}};
  ResidueGroup residues = residue_image(lattice, {2, 3});  // mismatched moduli
  CHECK_THROWS_AS(index_reduction(moduli, residues, 0), usage_error);
}

TEST_CASE("type A torsor anisotropy criterion") {
  // split D: anisotropic exactly for division algebras
  CHECK(torsor_a_is_anisotropic({5, 1, 5, 1}));
  CHECK_FALSE(torsor_a_is_anisotropic({2, 1, 1, 1}));
  // ind(D) = 2, n = 2, ind(A) = 4: gcd(4,2)*2 = 4
  CHECK(torsor_a_is_anisotropic({2, 2, 4, 2}));
  CHECK_FALSE(torsor_a_is_anisotropic({2, 2, 2, 2}));
  CHECK_THROWS_AS(torsor_a_is_anisotropic({2, 1, 3, 1}), usage_error);  // 3 does not divide 2
  CHECK_THROWS_AS(torsor_a_is_anisotropic({2, 1, 2, 3}), usage_error);  // d does not divide 2
}

TEST_CASE("type A torsor lifting criterion") {
  ModuliVector m4{{4}};
  GenericBrauerClass a1(m4, {1}), a2(m4, {2}), zero(m4, {0});
  CHECK(torsor_a_lifts(Int(3), a1, a1));             // zero difference
  CHECK_FALSE(torsor_a_lifts(Int(2), a1, zero));     // 2*1 != 0 mod 4
  CHECK(torsor_a_lifts(Int(2), a2, zero));           // 2*2 == 0 mod 4
  GenericBrauerClass other({{6}}, {1});
  CHECK_THROWS_AS(torsor_a_lifts(Int(2), a1, other), usage_error);
}

TEST_CASE("index arithmetic stays exact far beyond machine width") {
  Int big = Int(1) << 100;
  GenericBrauerClass cls({{big, big}}, {Int(1) << 50, 1});
  // first coordinate contributes 2^100 / 2^50, the second all of 2^100
  CHECK(index(cls) == (Int(1) << 50) * big);
  CHECK(exponent(cls) == big);
  CHECK(index(cls) % exponent(cls) == 0);
}

TEST_CASE("primary decomposition") {
  using PD = std::vector<std::pair<Int, int>>;
  CHECK(primary_decomposition(12) == PD{{2, 2}, {3, 1}});
  CHECK(primary_decomposition(1) == PD{});
  CHECK(primary_decomposition(97) == PD{{97, 1}});
  CHECK_THROWS_AS(primary_decomposition(0), usage_error);
}
