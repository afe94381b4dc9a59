#pragma once

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "modlie/liealg.hpp"

namespace modlie {

/// A representation ρ of L on F^m: one m×m matrix per basis element of L,
/// with ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)] checked on construction.
class Representation {
 public:
  Representation(LieAlgebra algebra, std::vector<Matrix> mats) : algebra_(std::move(algebra)), mats_(std::move(mats)) {
    validate();
  }

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Matrix>& mats() const noexcept { return mats_; }
  std::size_t module_dim() const noexcept { return mats_.front().rows(); }
  const Field& field() const noexcept { return algebra_.field(); }

  /// ρ(v) = Σ v_k ρ(b_k)
  Matrix action(const Vec& v) const {
    if (v.size() != algebra_.dim()) throw Error(ErrorKind::DimensionMismatch, "element length");
    return linear_combination(field(), mats_, v, module_dim());
  }

 private:
  void validate() const {
    const std::size_t n = algebra_.dim();
    if (mats_.size() != n || n == 0) {
      throw Error(ErrorKind::DimensionMismatch,
                  "expected " + std::to_string(n) + " matrices, got " + std::to_string(mats_.size()));
    }
    const std::size_t m = mats_.front().rows();
    for (const auto& a : mats_) {
      a.require_square("representation");
      if (a.rows() != m) throw Error(ErrorKind::DimensionMismatch, "representation matrices differ in size");
      if (!(a.field() == algebra_.field())) throw Error(ErrorKind::MixedFields, "matrix over another field");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Matrix diff = action(algebra_.bracket_basis(i, j)) - commutator(mats_[i], mats_[j]);
        if (!diff.is_zero()) {
          throw Error(ErrorKind::HomomorphismViolation,
                      "rho([" + algebra_.labels()[i] + "," + algebra_.labels()[j] +
                          "]) - [rho, rho] = " + diff.to_string(),
                      {i, j});
        }
      }
    }
  }

  LieAlgebra algebra_;
  std::vector<Matrix> mats_;
};

inline Representation check_representation(const LieAlgebra& L, std::vector<Matrix> mats) {
  return Representation(L, std::move(mats));
}

inline Representation adjoint_rep(const LieAlgebra& L) {
  std::vector<Matrix> mats;
  for (std::size_t j = 0; j < L.dim(); ++j) mats.push_back(ad_basis(L, j));
  return Representation(L, std::move(mats));
}

inline Representation trivial_rep(const LieAlgebra& L, std::size_t module_dim) {
  return Representation(L, std::vector<Matrix>(L.dim(), Matrix(L.field(), module_dim, module_dim)));
}

inline bool is_invariant(const Representation& rep, const Subspace& s) {
  for (const auto& m : rep.mats()) {
    for (const auto& v : s.basis_vectors()) {
      if (!s.contains(m * v)) return false;
    }
  }
  return true;
}

/// Smallest invariant subspace containing `vectors`.
inline Subspace submodule_generated(const Representation& rep, const std::vector<Vec>& vectors) {
  const std::size_t m = rep.module_dim();
  Subspace span = Subspace::zero(rep.field(), m);
  std::deque<Vec> pending;
  auto push = [&](const Vec& v) {
    if (v.size() != m) throw Error(ErrorKind::DimensionMismatch, "generator length");
    if (span.contains(v)) return;
    span = span + Subspace::span(rep.field(), m, {v});
    pending.push_back(v);
  };
  for (const auto& v : vectors) push(v);
  while (!pending.empty()) {
    const Vec v = std::move(pending.front());
    pending.pop_front();
    for (const auto& a : rep.mats()) push(a * v);
  }
  return span;
}

inline std::vector<Subspace> invariant_subspaces(const Representation& rep, std::uint64_t cap = kDefaultEnumerationCap) {
  return filter_subspaces(rep.field(), rep.module_dim(), [&](const Subspace& s) { return is_invariant(rep, s); }, cap);
}

/// First invariant w (enumeration order) with u ⊕ w the whole module.
inline std::optional<Subspace> find_complement(const Representation& rep, const Subspace& u,
                                               std::uint64_t cap = kDefaultEnumerationCap) {
  if (!is_invariant(rep, u)) throw Error(ErrorKind::NotInvariant, "subspace is not invariant");
  const std::size_t m = rep.module_dim();
  SubspaceEnumerator it(rep.field(), m, m - u.dim(), cap);
  while (auto w = it.next()) {
    if (u.intersect(*w).is_zero() && is_invariant(rep, *w)) return w;
  }
  return std::nullopt;
}

/// Every invariant subspace has an invariant complement.
inline bool is_completely_reducible(const Representation& rep, std::uint64_t cap = kDefaultEnumerationCap) {
  const auto invariant = invariant_subspaces(rep, cap);
  const std::size_t m = rep.module_dim();
  for (const auto& u : invariant) {
    bool found = false;
    for (const auto& w : invariant) {
      if (u.dim() + w.dim() == m && u.intersect(w).is_zero()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Sym^n of a 2-dimensional module on the monomials (x^n, x^(n-1) y, ..., y^n).
/// Each matrix acts as a derivation: A(x^a y^b) = a x^(a-1) y^b A(x) + b x^a y^(b-1) A(y).
inline Representation sym_power(const Representation& rep, std::size_t n) {
  if (rep.module_dim() != 2) throw Error(ErrorKind::BadDimension, "sym_power needs a 2-dimensional module");
  if (n < 1) throw Error(ErrorKind::BadDimension, "sym_power needs n >= 1");
  const Field& field = rep.field();
  std::vector<Matrix> mats;
  for (const auto& a : rep.mats()) {
    Matrix s(field, n + 1, n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      // Column k is the image of x^(n-k) y^k; A(x) = a00 x + a10 y, A(y) = a01 x + a11 y.
      const Scalar xs = field.from_int(static_cast<long long>(n - k));
      const Scalar ys = field.from_int(static_cast<long long>(k));
      s(k, k) += xs * a(0, 0) + ys * a(1, 1);
      if (k + 1 <= n) s(k + 1, k) += xs * a(1, 0);
      if (k >= 1) s(k - 1, k) += ys * a(0, 1);
    }
    mats.push_back(std::move(s));
  }
  return Representation(rep.algebra(), std::move(mats));
}

/// Eigenvalues of ρ(h) in the base field with their eigenspaces, weights ascending.
struct WeightDecomposition {
  std::vector<Scalar> weights;
  std::vector<Subspace> spaces;
};

/// Raised when ρ(h) has eigenvalues outside the base field; `found` holds the in-field part.
class IncompleteSplitError : public Error {
 public:
  IncompleteSplitError(const std::string& message, WeightDecomposition found)
      : Error(ErrorKind::IncompleteSplit, message), found_(std::move(found)) {}
  const WeightDecomposition& found() const noexcept { return found_; }

 private:
  WeightDecomposition found_;
};

inline WeightDecomposition weight_decomposition(const Representation& rep, const Vec& h) {
  const Matrix action = rep.action(h);
  WeightDecomposition out;
  Polynomial rest = char_poly(action);
  for (const auto& lam : eigenvalues_in_field(action)) {
    out.weights.push_back(lam);
    out.spaces.push_back(eigenspace(action, lam));
    const Polynomial factor = Polynomial::linear(lam);
    while (rest.degree() > 0 && (rest % factor).is_zero()) rest = rest / factor;
  }
  if (rest.degree() > 0) {
    throw IncompleteSplitError("characteristic polynomial keeps the factor " + rest.to_string(), std::move(out));
  }
  return out;
}

/// Over Q: in Sym^n of the standard sl2 module with v = x^n,
/// e f^k v = k(n-k+1) f^(k-1) v for 1 <= k <= n, f^(n+1) v = 0, and e, f move
/// h-weights by +2 and -2.
inline bool ladder_check(std::size_t n) {
  const Field q = Field::rationals();
  const MatrixLieAlgebra sl2 = builtin_sl2(q);
  const Representation sym = sym_power(Representation(sl2.algebra, sl2.embedding), n);
  const Matrix& e = sym.mats()[0];
  const Matrix& f = sym.mats()[1];
  const Matrix& h = sym.mats()[2];
  const Vec v = unit_vector(q, n + 1, 0);
  std::vector<Vec> ladder{v};
  for (std::size_t k = 1; k <= n + 1; ++k) ladder.push_back(f * ladder.back());
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<long long>(k);
    const Scalar coeff = q.from_int(kk * (static_cast<long long>(n) - kk + 1));
    if (!(e * ladder[k] == coeff * ladder[k - 1])) return false;
  }
  if (!is_zero(ladder[n + 1])) return false;
  for (std::size_t k = 0; k <= n; ++k) {
    const Vec w = unit_vector(q, n + 1, k);
    const Scalar alpha = q.from_int(static_cast<long long>(n) - 2 * static_cast<long long>(k));
    if (!(h * w == alpha * w)) return false;
    const Scalar two = q.from_int(2);
    if (!(h * (e * w) == (alpha + two) * (e * w))) return false;
    if (!(h * (f * w) == (alpha - two) * (f * w))) return false;
  }
  return true;
}

namespace detail {
inline void check_same_size(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw Error(ErrorKind::BadParameters, "empty matrix list");
  for (const auto& m : mats) {
    m.require_square("common eigenvector");
    if (m.rows() != mats.front().rows()) throw Error(ErrorKind::DimensionMismatch, "matrices differ in size");
  }
}

inline std::optional<std::pair<Vec, std::vector<Scalar>>> common_eigenvector_in(const std::vector<Matrix>& mats,
                                                                              std::size_t index,
                                                                              const Subspace& within,
                                                                              std::vector<Scalar>& eigenvalues) {
  if (within.is_zero()) return std::nullopt;
  if (index == mats.size()) return std::make_pair(within.basis().row(0), eigenvalues);
  for (const auto& lam : eigenvalues_in_field(mats[index])) {
    const Subspace next = within.intersect(eigenspace(mats[index], lam));
    if (next.is_zero()) continue;
    eigenvalues.push_back(lam);
    if (auto found = common_eigenvector_in(mats, index + 1, next, eigenvalues)) return found;
    eigenvalues.pop_back();
  }
  return std::nullopt;
}
}  // namespace detail

/// Some v != 0 with mats[j] v = λ_j v for every j, searching eigenvalues in
/// the base field only.
inline std::optional<std::pair<Vec, std::vector<Scalar>>> common_eigenvector(const std::vector<Matrix>& mats) {
  detail::check_same_size(mats);
  std::vector<Scalar> eigenvalues;
  return detail::common_eigenvector_in(mats, 0, Subspace::full(mats.front().field(), mats.front().rows()),
                                       eigenvalues);
}

/// Invertible P with P^-1 m P upper triangular for every m, built from a flag
/// of common eigenvectors of the successive quotient actions.
inline std::optional<Matrix> triangularize(const std::vector<Matrix>& mats) {
  detail::check_same_size(mats);
  const Field field = mats.front().field();
  const std::size_t n = mats.front().rows();
  std::vector<Vec> flag;
  Subspace current = Subspace::zero(field, n);
  while (flag.size() < n) {
    // Complement of `current`: unit vectors at its non-pivot coordinates.
    std::vector<bool> pivot(n, false);
    for (std::size_t p : current.pivots()) pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < n; ++k)
      if (!pivot[k]) free.push_back(k);
    std::vector<Matrix> induced;
    for (const auto& m : mats) {
      Matrix q(field, free.size(), free.size());
      for (std::size_t b = 0; b < free.size(); ++b) {
        const Vec image = current.reduce(m * unit_vector(field, n, free[b]));
        for (std::size_t a = 0; a < free.size(); ++a) q(a, b) = image[free[a]];
      }
      induced.push_back(std::move(q));
    }
    const auto found = common_eigenvector(induced);
    if (!found) return std::nullopt;
    Vec lifted = zero_vector(field, n);
    for (std::size_t a = 0; a < free.size(); ++a) lifted[free[a]] = found->first[a];
    flag.push_back(lifted);
    current = current + Subspace::span(field, n, {lifted});
  }
  return Matrix::from_columns(field, n, flag);
}

}  // namespace modlie
