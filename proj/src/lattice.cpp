#include "stiso/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "stiso/errors.hpp"

namespace stiso {

namespace {

// Working state for the Smith reduction: row operations mirror into u,
// column operations into v, so u * original = current * v^-1 stays exact.
struct SnfState {
  std::size_t m, n;
  IntMat a, u, v;

  explicit SnfState(const IntMat& input) {
    m = input.size();
    n = m == 0 ? 0 : input[0].size();
    a = input;
    u.assign(m, IntVec(m, 0));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
    v.assign(n, IntVec(n, 0));
    for (std::size_t j = 0; j < n; ++j) v[j][j] = 1;
  }

  void row_swap(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  // row_i -= q * row_j
  void row_sub(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t t = 0; t < n; ++t) a[i][t] -= q * a[j][t];
    for (std::size_t t = 0; t < m; ++t) u[i][t] -= q * u[j][t];
  }
  void row_neg(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < m; ++t) std::swap(a[t][i], a[t][j]);
    for (std::size_t t = 0; t < n; ++t) std::swap(v[t][i], v[t][j]);
  }
  // col_i -= q * col_j
  void col_sub(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t t = 0; t < m; ++t) a[t][i] -= q * a[t][j];
    for (std::size_t t = 0; t < n; ++t) v[t][i] -= q * v[t][j];
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Int mag = abs(a[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  // Clears row t and column t against the pivot at (t, t), shrinking the
  // pivot through remainders until it divides everything it meets.
  void clear_position(std::size_t t) {
    for (;;) {
      bool restart = false;
      for (std::size_t i = t + 1; i < m && !restart; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        row_sub(i, t, q);
        if (a[i][t] != 0) {
          row_swap(i, t);  // strictly smaller pivot
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < n && !restart; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        col_sub(j, t, q);
        if (a[t][j] != 0) {
          col_swap(j, t);
          restart = true;
        }
      }
      if (!restart) return;
    }
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMat& matrix) {
  if (matrix.empty()) return {};
  for (const auto& row : matrix) {
    if (row.size() != matrix[0].size())
      throw usage_error("smith_normal_form: ragged matrix");
  }
  SnfState s(matrix);
  std::size_t k = std::min(s.m, s.n);
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!s.find_pivot(t, pi, pj)) break;  // remaining block is zero
    if (pi != t) s.row_swap(pi, t);
    if (pj != t) s.col_swap(pj, t);
    for (;;) {
      s.clear_position(t);
      // The pivot must divide the remaining block for the divisibility
      // chain; pull any offending row in and reclear.
      bool fixed = true;
      for (std::size_t i = t + 1; i < s.m && fixed; ++i) {
        for (std::size_t j = t + 1; j < s.n && fixed; ++j) {
          if (s.a[i][j] % s.a[t][t] != 0) {
            s.row_sub(t, i, Int(-1));  // row_t += row_i
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    if (s.a[t][t] < 0) s.row_neg(t);
  }
  SmithNormalForm out;
  out.diagonal.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.diagonal[t] = s.a[t][t];
  out.row_ops = std::move(s.u);
  out.col_ops = std::move(s.v);
  return out;
}

IntMat hermite_basis(IntMat rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != n) throw usage_error("hermite_basis: ragged matrix");
  }
  std::size_t pivot_row = 0;
  auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t t = 0; t < n; ++t) rows[i][t] -= q * rows[j][t];
  };
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    // Euclid over the entries of this column at or below pivot_row.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;  // column clear
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        row_sub(i, pivot_row, rows[i][col] / rows[pivot_row][col]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) {
        if (rows[pivot_row][col] < 0)
          for (auto& x : rows[pivot_row]) x = -x;
        for (std::size_t i = 0; i < pivot_row; ++i)
          row_sub(i, pivot_row, div_floor(rows[i][col], rows[pivot_row][col]));
        ++pivot_row;
        break;
      }
    }
  }
  rows.resize(pivot_row);
  return rows;
}

IntMat integer_kernel(const IntMat& matrix, std::size_t cols) {
  if (matrix.empty()) {
    IntMat id(cols, IntVec(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) id[i][i] = 1;
    return id;
  }
  for (const auto& row : matrix) {
    if (row.size() != cols) throw usage_error("integer_kernel: ragged matrix");
  }
  SmithNormalForm snf = smith_normal_form(matrix);
  IntMat kernel;
  for (std::size_t j = 0; j < cols; ++j) {
    bool zero_column = j >= snf.diagonal.size() || snf.diagonal[j] == 0;
    if (!zero_column) continue;
    IntVec basis_vector(cols);
    for (std::size_t t = 0; t < cols; ++t) basis_vector[t] = snf.col_ops[t][j];
    kernel.push_back(std::move(basis_vector));
  }
  return kernel;
}

bool lattice_contains(const IntMat& basis, const IntVec& v) {
  // Stack v on the basis: membership iff the Hermite bases coincide.
  IntMat extended = basis;
  extended.push_back(v);
  return hermite_basis(std::move(extended)) == hermite_basis(basis);
}

void CentralSubgroupSpec::validate_and_normalize() {
  if (rank == 0) throw usage_error("central subgroup: rank must be positive");
  for (const auto& lambda : cocharacter_generators) {
    if (lambda.size() != rank)
      throw usage_error("central subgroup: cocharacter length " +
                        std::to_string(lambda.size()) + " != rank " + std::to_string(rank));
  }
  for (auto& tg : torsion_generators) {
    if (tg.modulus < 2) throw usage_error("central subgroup: torsion modulus must be >= 2");
    if (tg.exponents.size() != rank)
      throw usage_error("central subgroup: torsion exponent length " +
                        std::to_string(tg.exponents.size()) + " != rank " +
                        std::to_string(rank));
    for (auto& e : tg.exponents) e = mod_floor(e, tg.modulus);
  }
}

CharacterLattice character_lattice_of(CentralSubgroupSpec spec) {
  spec.validate_and_normalize();
  const std::size_t r = spec.rank;
  const std::size_t aux = spec.torsion_generators.size();
  IntMat constraints;
  for (const auto& lambda : spec.cocharacter_generators) {
    IntVec row(r + aux, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = lambda[i];
    constraints.push_back(std::move(row));
  }
  for (std::size_t t = 0; t < aux; ++t) {
    IntVec row(r + aux, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = spec.torsion_generators[t].exponents[i];
    row[r + t] = spec.torsion_generators[t].modulus;
    constraints.push_back(std::move(row));
  }
  IntMat kernel = integer_kernel(constraints, r + aux);
  IntMat projected;
  projected.reserve(kernel.size());
  for (auto& vec : kernel) projected.emplace_back(vec.begin(), vec.begin() + r);
  CharacterLattice lattice;
  lattice.rank = r;
  lattice.basis = hermite_basis(std::move(projected));
  return lattice;
}

bool ResidueGroup::contains(const IntVec& tuple) const {
  return std::find(elements.begin(), elements.end(), tuple) != elements.end();
}

ResidueGroup residue_image(const CharacterLattice& lattice, const IntVec& moduli,
                           std::size_t enumeration_cap) {
  if (moduli.size() != lattice.rank)
    throw usage_error("residue_image: moduli length != lattice rank");
  for (const auto& n : moduli) {
    if (n < 1) throw usage_error("residue_image: moduli entries must be >= 1");
  }
  const std::size_t r = moduli.size();

  ResidueGroup group;
  group.moduli = moduli;
  for (const auto& row : lattice.basis) {
    IntVec reduced(r);
    for (std::size_t i = 0; i < r; ++i) reduced[i] = mod_floor(row[i], moduli[i]);
    group.generators.push_back(std::move(reduced));
  }

  IntVec zero(r, 0);
  std::set<IntVec> seen{zero};
  group.elements.push_back(zero);
  std::vector<IntVec> frontier{zero};
  while (!frontier.empty()) {
    std::set<IntVec> next;  // lexicographic tie break within the level
    for (const auto& x : frontier) {
      for (const auto& g : group.generators) {
        IntVec y(r);
        for (std::size_t i = 0; i < r; ++i) y[i] = mod_floor(x[i] + g[i], moduli[i]);
        if (!seen.count(y)) next.insert(std::move(y));
      }
    }
    frontier.assign(next.begin(), next.end());
    for (const auto& y : frontier) {
      if (group.elements.size() >= enumeration_cap)
        throw resource_error("residue_image: enumeration cap of " +
                             std::to_string(enumeration_cap) + " elements exceeded");
      seen.insert(y);
      group.elements.push_back(y);
    }
  }
  return group;
}

}  // namespace stiso
