#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "modlie/modlie.hpp"

namespace modlie::testing {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) {
    return Scalar(f, static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, f.characteristic() - 1)(rng)));
  }
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 4);
  return f.from_int(num(rng)) / f.from_int(den(rng));
}

inline Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

/// Matrices with many repeated eigenvalues, so Jordan tests see nonzero nilpotent parts.
inline Matrix random_structured_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix upper(f, n, n);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    upper(i, i) = f.from_int(coin(rng));
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = random_scalar(f, rng);
  }
  // Conjugate by a random unipotent lower-triangular matrix and its inverse.
  Matrix lower = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = random_scalar(f, rng);
  return lower * upper * *inverse(lower);
}

inline std::vector<Field> sample_fields() {
  return {Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()};
}

/// Determinant by the Leibniz permutation sum; independent of the library's elimination.
inline Scalar leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = m.field().zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det(λI - m) by the Leibniz sum with polynomial entries.
inline Polynomial leibniz_char_poly(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total(f);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Polynomial term = Polynomial::constant(f.one());
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial entry = Polynomial::constant(-m(i, perm[i]));
      if (perm[i] == i) entry = entry + Polynomial::monomial(f, 1);
      term = term * entry;
    }
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Number of k-dimensional subspaces of F_q^n from the product formula, in machine integers.
inline std::uint64_t gaussian_count(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t e = 0; e < n - i; ++e) a *= q;
    for (std::uint64_t e = 0; e < i + 1; ++e) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Every vector of F_p^n, in lexicographic order of residues.
inline std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    Vec v;
    for (auto d : digits) v.push_back(Scalar(f, d));
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Module is a sum of irreducible submodules: the minimal nonzero invariant subspaces span everything.
inline bool sum_of_irreducibles(const Representation& rep) {
  const auto inv = invariant_subspaces(rep);
  Subspace total = Subspace::zero(rep.field(), rep.module_dim());
  for (const auto& s : inv) {
    if (s.is_zero()) continue;
    bool minimal = true;
    for (const auto& t : inv) {
      if (!t.is_zero() && t.dim() < s.dim() && s.contains(t)) minimal = false;
    }
    if (minimal) total = total + s;
  }
  return total.is_full();
}

/// The same algebra in a random basis w_a = Σ P[a][k] b_k, with constants recomputed by solving in that basis.
inline LieAlgebra random_rebase(const LieAlgebra& L, std::mt19937_64& rng) {
  const Field& f = L.field();
  const std::size_t n = L.dim();
  Matrix P(f, n, n);
  do {
    P = random_matrix(f, n, n, rng);
  } while (rank(P) != n);
  const Matrix cols = P.transpose();
  std::vector<Scalar> c(n * n * n, f.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec coords = *solve_linear(cols, bracket(L, P.row(a), P.row(b)));
      for (std::size_t k = 0; k < n; ++k) c[(a * n + b) * n + k] = coords[k];
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back("w" + std::to_string(a));
  return LieAlgebra::from_structure_constants(f, labels, c);
}

inline std::vector<LieAlgebra> catalog(const Field& f) {
  std::vector<LieAlgebra> out{builtin_gl(f, 2).algebra, builtin_sl(f, 2).algebra, builtin_heisenberg(f).algebra,
                              builtin_aff2(f).algebra};
  if (f.is_prime() && f.characteristic() == 2) {
    out.push_back(builtin_fsl2(f));
  } else {
    out.push_back(builtin_sl2(f).algebra);
  }
  return out;
}

}  // namespace modlie::testing
