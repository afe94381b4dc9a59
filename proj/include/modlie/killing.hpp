#pragma once

#include <string>
#include <vector>

#include "modlie/repr.hpp"

namespace modlie {

/// A symmetric bilinear form on a Lie algebra, given by its Gram matrix in the
/// algebra's basis.
struct BilinearForm {
  Matrix gram;
  LieAlgebra algebra;
  std::string label;

  Scalar operator()(const Vec& x, const Vec& y) const {
    const Vec gy = gram * y;
    Scalar s = algebra.field().zero();
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
    return s;
  }
};

/// κ(x, y) = tr(ad x ∘ ad y)
inline BilinearForm killing_form(const LieAlgebra& L) { return {killing_gram(L), L, "killing"}; }

/// gram[i][j] = tr(ρ(b_i) ρ(b_j))
inline BilinearForm trace_form(const Representation& rep) {
  const std::size_t n = rep.algebra().dim();
  Matrix g(rep.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = (rep.mats()[i] * rep.mats()[j]).trace();
  return {g, rep.algebra(), "trace"};
}

inline Subspace killing_radical(const BilinearForm& bf) { return kernel(bf.gram); }

inline bool is_nondegenerate(const BilinearForm& bf) { return rank(bf.gram) == bf.gram.rows(); }

/// κ([b_i, b_j], b_k) = κ(b_i, [b_j, b_k]) on every basis triple.
inline bool associativity_check(const BilinearForm& bf) {
  const LieAlgebra& L = bf.algebra;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!(bf(L.bracket_basis(i, j), L.basis_vector(k)) == bf(L.basis_vector(i), L.bracket_basis(j, k)))) {
          return false;
        }
      }
    }
  }
  return true;
}

struct CartanReport {
  bool stmt1;  // tr(ρ(a)ρ(b)) = 0 for a ∈ L, b ∈ [L, L]
  bool stmt2;  // tr(ρ(a)^2) = 0 for a ∈ [L, L]
  bool solvable;
  bool consistent;  // the three agree
};

/// Evaluates the three statements of Cartan's solvability criterion for ρ.
///
/// Statement 2 is tested on a basis of [L, L] and on every pairwise sum of
/// basis vectors. The quadratic form q(a) = tr(ρ(a)^2) is fixed by those
/// values in every characteristic (in characteristic 2, q is additive).
inline CartanReport cartan_statements(const LieAlgebra& L, const Representation& rep) {
  if (!(rep.algebra() == L)) throw Error(ErrorKind::InvalidRepresentation, "representation of another algebra");
  const auto derived = derived_algebra(L).basis_vectors();
  bool stmt1 = true;
  for (std::size_t i = 0; i < L.dim() && stmt1; ++i) {
    const Matrix& a = rep.mats()[i];
    for (const auto& b : derived) {
      if (!(a * rep.action(b)).trace().is_zero()) {
        stmt1 = false;
        break;
      }
    }
  }
  auto q = [&](const Vec& a) {
    const Matrix m = rep.action(a);
    return (m * m).trace();
  };
  bool stmt2 = true;
  for (std::size_t i = 0; i < derived.size() && stmt2; ++i) {
    if (!q(derived[i]).is_zero()) stmt2 = false;
    for (std::size_t j = i + 1; j < derived.size() && stmt2; ++j) {
      if (!q(derived[i] + derived[j]).is_zero()) stmt2 = false;
    }
  }
  const bool solvable = is_solvable(L);
  return {stmt1, stmt2, solvable, stmt1 == stmt2 && stmt2 == solvable};
}

struct SemisimplicityReport {
  bool semisimple;
  bool nondegenerate;
  bool equivalent;
};

/// Both sides of "L semisimple ⇔ κ non-degenerate".
inline SemisimplicityReport cartan_semisimplicity(const LieAlgebra& L, std::uint64_t cap = kDefaultEnumerationCap) {
  const bool semisimple = is_semisimple(L, cap);
  const bool nondegenerate = is_nondegenerate(killing_form(L));
  return {semisimple, nondegenerate, semisimple == nondegenerate};
}

}  // namespace modlie
