#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "modlie/subspaces.hpp"

namespace modlie {

/// One entry of a bracket table: [b_i, b_j] = value.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vec value;
};

/// A finite-dimensional Lie algebra given by structure constants
/// [b_i, b_j] = Σ_k c(i, j, k) b_k. Antisymmetry and the Jacobi identity are
/// checked on construction, so every instance is a valid Lie algebra.
class LieAlgebra {
 public:
  /// Builds the full tensor from a table of brackets; unlisted pairs are zero.
  static LieAlgebra from_table(const Field& field, std::vector<std::string> labels,
                               const std::vector<BracketEntry>& table) {
    const std::size_t n = labels.size();
    std::vector<Scalar> c(n * n * n, field.zero());
    std::vector<bool> set(n * n, false);
    for (const auto& e : table) {
      if (e.i >= n || e.j >= n || e.value.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "bracket entry out of range");
      }
      if (e.i == e.j) {
        if (!is_zero(e.value)) {
          throw Error(ErrorKind::AntisymmetryViolation, "[" + labels[e.i] + "," + labels[e.i] + "] must be 0",
                      {e.i, e.j});
        }
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = e.value[k];
        if (set[e.i * n + e.j] && !(c[(e.i * n + e.j) * n + k] == v)) {
          throw Error(ErrorKind::AntisymmetryViolation,
                      "conflicting values for [" + labels[e.i] + "," + labels[e.j] + "]", {e.i, e.j});
        }
        c[(e.i * n + e.j) * n + k] = v;
        c[(e.j * n + e.i) * n + k] = -v;
      }
      set[e.i * n + e.j] = set[e.j * n + e.i] = true;
    }
    return LieAlgebra(field, std::move(labels), std::move(c));
  }

  /// `constants` is indexed (i * dim + j) * dim + k.
  static LieAlgebra from_structure_constants(const Field& field, std::vector<std::string> labels,
                                             std::vector<Scalar> constants) {
    const std::size_t n = labels.size();
    if (constants.size() != n * n * n) throw Error(ErrorKind::DimensionMismatch, "structure tensor size");
    return LieAlgebra(field, std::move(labels), std::move(constants));
  }

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Scalar>& structure_constants() const noexcept { return c_; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }

  Vec bracket_basis(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    return Vec(c_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
               c_.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
  }

  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return i;
    }
    return std::nullopt;
  }

  Vec basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }
  Vec zero() const { return zero_vector(field_, dim()); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.c_ == b.c_;
  }

 private:
  LieAlgebra(Field field, std::vector<std::string> labels, std::vector<Scalar> c)
      : field_(field), labels_(std::move(labels)), c_(std::move(c)) {
    validate();
  }

  void validate() const {
    const std::size_t n = dim();
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen.insert(labels_[i]).second) {
        throw Error(ErrorKind::DuplicateLabel, "label '" + labels_[i] + "' repeated", {i});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!(constant(i, j, k) == -constant(j, i, k))) {
            throw Error(ErrorKind::AntisymmetryViolation,
                        "[" + labels_[i] + "," + labels_[j] + "] != -[" + labels_[j] + "," + labels_[i] + "]",
                        {i, j});
          }
        }
      }
    }
    // [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0 for i < j < k
    // suffices once antisymmetry holds; triples with a repeat vanish identically.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          for (std::size_t m = 0; m < n; ++m) {
            Scalar sum = field_.zero();
            for (std::size_t l = 0; l < n; ++l) {
              sum += constant(i, j, l) * constant(l, k, m) + constant(j, k, l) * constant(l, i, m) +
                     constant(k, i, l) * constant(l, j, m);
            }
            if (!sum.is_zero()) {
              throw Error(ErrorKind::JacobiViolation,
                          "Jacobi identity fails on (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")",
                          {i, j, k});
            }
          }
        }
      }
    }
  }

  Field field_;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
};

inline LieAlgebra new_lie_algebra(const Field& field, std::vector<std::string> labels,
                                  const std::vector<BracketEntry>& table) {
  return LieAlgebra::from_table(field, std::move(labels), table);
}

inline Vec bracket(const LieAlgebra& L, const Vec& u, const Vec& v) {
  const std::size_t n = L.dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket operands");
  Vec r = L.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || i == j) continue;
      const Scalar w = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) r[k] += w * L.constant(i, j, k);
    }
  }
  return r;
}

/// Matrix of a ↦ [x, a]; column j is [x, b_j].
inline Matrix ad(const LieAlgebra& L, const Vec& x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "ad operand");
  Matrix m(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) += x[i] * L.constant(i, j, k);
  }
  return m;
}

inline Matrix ad_basis(const LieAlgebra& L, std::size_t i) { return ad(L, L.basis_vector(i)); }

inline bool is_abelian(const LieAlgebra& L) { return is_zero(L.structure_constants()); }

/// A Lie algebra spanned by explicit matrices, with the matrices kept as the embedding.
struct MatrixLieAlgebra {
  LieAlgebra algebra;
  std::vector<Matrix> embedding;

  /// Σ v_k embedding[k]
  Matrix matrix_of(const Vec& v) const {
    return linear_combination(algebra.field(), embedding, v, embedding.front().rows());
  }
};

/// Structure constants of span(mats) under XY - YX, expressed in the given basis.
inline MatrixLieAlgebra commutator_algebra_of_matrices(const std::vector<Matrix>& mats,
                                                       std::vector<std::string> labels) {
  if (mats.empty()) throw Error(ErrorKind::BadParameters, "empty matrix list");
  if (labels.size() != mats.size()) throw Error(ErrorKind::DimensionMismatch, "one label per matrix required");
  const Field field = mats.front().field();
  const std::size_t size = mats.front().rows();
  std::vector<Vec> flat;
  for (const auto& m : mats) {
    m.require_square("commutator algebra");
    if (m.rows() != size) throw Error(ErrorKind::DimensionMismatch, "matrices differ in size");
    flat.push_back(m.entries());
  }
  const Matrix span = Matrix::from_columns(field, size * size, flat);
  if (rank(span) != mats.size()) throw Error(ErrorKind::NotIndependent, "matrices are linearly dependent");
  const std::size_t n = mats.size();
  std::vector<Scalar> c(n * n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto coords = solve_linear(span, commutator(mats[i], mats[j]).entries());
      if (!coords) {
        throw Error(ErrorKind::NotClosed, "[" + labels[i] + "," + labels[j] + "] leaves the span", {i, j});
      }
      for (std::size_t k = 0; k < n; ++k) {
        c[(i * n + j) * n + k] = (*coords)[k];
        c[(j * n + i) * n + k] = -(*coords)[k];
      }
    }
  }
  return {LieAlgebra::from_structure_constants(field, std::move(labels), std::move(c)), mats};
}

/// span{[u, v] : u ∈ a, v ∈ b}
inline Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> products;
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  for (const auto& u : av)
    for (const auto& v : bv) products.push_back(bracket(L, u, v));
  return Subspace::span(L.field(), L.dim(), products);
}

namespace detail {
// Appends terms until the series reaches 0 or repeats; a nonzero repeat is
// kept once so the stable term is visible.
template <class Step>
std::vector<Subspace> stabilising_series(const Subspace& start, Step step) {
  std::vector<Subspace> series{start};
  while (!series.back().is_zero()) {
    Subspace next = step(series.back());
    const bool repeat = next == series.back();
    series.push_back(std::move(next));
    if (repeat) break;
  }
  return series;
}
}  // namespace detail

inline std::vector<Subspace> derived_series(const LieAlgebra& L) {
  return detail::stabilising_series(Subspace::full(L.field(), L.dim()),
                                    [&](const Subspace& s) { return bracket_span(L, s, s); });
}

inline Subspace derived_algebra(const LieAlgebra& L) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  return bracket_span(L, full, full);
}

inline std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  return detail::stabilising_series(full, [&](const Subspace& s) { return bracket_span(L, full, s); });
}

inline bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }
inline bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().is_zero(); }

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& s) { return s.contains(bracket_span(L, s, s)); }

inline bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (const auto& v : s.basis_vectors()) {
      if (!s.contains(bracket(L, L.basis_vector(i), v))) return false;
    }
  }
  return true;
}

inline std::vector<Subspace> ideals(const LieAlgebra& L, std::uint64_t cap = kDefaultEnumerationCap) {
  return filter_subspaces(L.field(), L.dim(), [&](const Subspace& s) { return is_ideal(L, s); }, cap);
}

/// A subalgebra together with its induced structure constants, expressed in
/// the RREF basis of the carrier.
struct SubalgebraView {
  Subspace carrier;
  LieAlgebra induced;
};

inline SubalgebraView restrict_to(const LieAlgebra& L, const Subspace& s) {
  if (!is_subalgebra(L, s)) throw Error(ErrorKind::NotClosed, "subspace is not closed under the bracket");
  const std::size_t d = s.dim();
  const auto basis = s.basis_vectors();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < d; ++a) {
    // Rows equal to a parent basis vector keep its label.
    std::size_t nonzero = 0;
    for (const auto& x : basis[a]) nonzero += x.is_zero() ? 0 : 1;
    const std::size_t pivot = s.pivots()[a];
    labels.push_back(nonzero == 1 ? L.labels()[pivot] : "u" + std::to_string(a + 1));
  }
  std::vector<Scalar> c(d * d * d, L.field().zero());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const Vec coords = s.coordinates(bracket(L, basis[a], basis[b]));
      for (std::size_t k = 0; k < d; ++k) c[(a * d + b) * d + k] = coords[k];
    }
  }
  return {s, LieAlgebra::from_structure_constants(L.field(), std::move(labels), std::move(c))};
}

/// L / I on the cosets of the basis vectors at the non-pivot coordinates of I.
inline LieAlgebra quotient(const LieAlgebra& L, const Subspace& ideal) {
  if (!is_ideal(L, ideal)) throw Error(ErrorKind::NotAnIdeal, "quotient by a non-ideal");
  std::vector<bool> pivot(L.dim(), false);
  for (std::size_t p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> reps;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < L.dim(); ++k) {
    if (pivot[k]) continue;
    reps.push_back(k);
    labels.push_back(L.labels()[k]);
  }
  const std::size_t d = reps.size();
  std::vector<Scalar> c(d * d * d, L.field().zero());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const Vec reduced = ideal.reduce(L.bracket_basis(reps[a], reps[b]));
      for (std::size_t k = 0; k < d; ++k) c[(a * d + b) * d + k] = reduced[reps[k]];
    }
  }
  return LieAlgebra::from_structure_constants(L.field(), std::move(labels), std::move(c));
}

/// ∩_i ker ad(b_i)
inline Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix stacked(L.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    // x ∈ center ⇔ [b_i, x] = 0 for all i ⇔ ad(b_i) x = 0.
    const Matrix a = ad_basis(L, i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
  }
  return kernel(stacked);
}

inline bool is_solvable_subspace(const LieAlgebra& L, const Subspace& s) {
  return detail::stabilising_series(s, [&](const Subspace& t) { return bracket_span(L, t, t); }).back().is_zero();
}

// Killing gram, needed by the characteristic-0 radical.
inline Matrix killing_gram(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(L, i));
  Matrix g(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = (ads[i] * ads[j]).trace();
  return g;
}

/// Maximal solvable ideal.
///
/// Over F_p: the largest solvable ideal found by exhaustive enumeration,
/// checked to contain every other solvable ideal. Over Q: the Killing-orthogonal
/// complement of [L, L], the classical characteristic-0 description.
inline Subspace radical(const LieAlgebra& L, std::uint64_t cap = kDefaultEnumerationCap) {
  if (!L.field().is_prime()) {
    const Matrix d = derived_algebra(L).basis();
    if (d.rows() == 0) return Subspace::full(L.field(), L.dim());
    return kernel(d * killing_gram(L));
  }
  std::vector<Subspace> solvable;
  for (auto& s : ideals(L, cap)) {
    if (is_solvable_subspace(L, s)) solvable.push_back(std::move(s));
  }
  const Subspace* best = &solvable.front();
  for (const auto& s : solvable) {
    if (s.dim() > best->dim()) best = &s;
  }
  for (const auto& s : solvable) {
    if (!best->contains(s)) throw Error(ErrorKind::Internal, "largest solvable ideal misses another solvable ideal");
  }
  return *best;
}

inline bool is_semisimple(const LieAlgebra& L, std::uint64_t cap = kDefaultEnumerationCap) {
  return radical(L, cap).is_zero();
}

/// Non-abelian with no ideals besides 0 and L. Needs a finite field.
inline bool is_simple(const LieAlgebra& L, std::uint64_t cap = kDefaultEnumerationCap) {
  if (is_abelian(L)) return false;
  if (!L.field().is_prime()) throw Error(ErrorKind::UnsupportedField, "ideal enumeration needs a finite field");
  return ideals(L, cap).size() == 2;
}

// ---------------------------------------------------------------------------
// Catalog

/// Standard basis e_ij of gl(n), row-major.
inline MatrixLieAlgebra builtin_gl(const Field& field, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "gl needs n >= 1");
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mats.push_back(Matrix::unit(field, n, i, j));
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return commutator_algebra_of_matrices(mats, std::move(labels));
}

/// Off-diagonal e_ij (row-major) followed by h_i = e_ii - e_{i+1,i+1}.
inline MatrixLieAlgebra builtin_sl(const Field& field, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::BadParameters, "sl needs n >= 2");
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      mats.push_back(Matrix::unit(field, n, i, j));
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    mats.push_back(Matrix::unit(field, n, i, i) - Matrix::unit(field, n, i + 1, i + 1));
    labels.push_back("h" + std::to_string(i + 1));
  }
  return commutator_algebra_of_matrices(mats, std::move(labels));
}

/// sl(2) with e = e12, f = e21, h = e11 - e22.
inline MatrixLieAlgebra builtin_sl2(const Field& field) {
  return commutator_algebra_of_matrices(
      {Matrix::unit(field, 2, 0, 1), Matrix::unit(field, 2, 1, 0),
       Matrix::unit(field, 2, 0, 0) - Matrix::unit(field, 2, 1, 1)},
      {"e", "f", "h"});
}

/// x = e12, y = e23, z = e13 in gl(3): [x, y] = z.
inline MatrixLieAlgebra builtin_heisenberg(const Field& field) {
  return commutator_algebra_of_matrices(
      {Matrix::unit(field, 3, 0, 1), Matrix::unit(field, 3, 1, 2), Matrix::unit(field, 3, 0, 2)}, {"x", "y", "z"});
}

/// h = e11, x = e12: [h, x] = x.
inline MatrixLieAlgebra builtin_aff2(const Field& field) {
  return commutator_algebra_of_matrices({Matrix::unit(field, 2, 0, 0), Matrix::unit(field, 2, 0, 1)}, {"h", "x"});
}

/// [h, e] = e, [h, f] = -f, [e, f] = h; characteristic 2 only.
inline LieAlgebra builtin_fsl2(const Field& field) {
  if (field.characteristic() != 2) throw Error(ErrorKind::BadParameters, "fsl2 exists only in characteristic 2");
  const Scalar one = field.one();
  const Scalar zero = field.zero();
  return LieAlgebra::from_table(field, {"e", "f", "h"},
                                {{2, 0, {one, zero, zero}}, {2, 1, {zero, -one, zero}}, {0, 1, {zero, zero, one}}});
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"gl", "sl", "sl2", "fsl2", "heisenberg", "aff2"};
  return names;
}

inline LieAlgebra builtin(std::string_view name, const Field& field, std::size_t n = 2) {
  if (name == "gl") return builtin_gl(field, n).algebra;
  if (name == "sl") return builtin_sl(field, n).algebra;
  if (name == "sl2") return builtin_sl2(field).algebra;
  if (name == "fsl2") return builtin_fsl2(field);
  if (name == "heisenberg") return builtin_heisenberg(field).algebra;
  if (name == "aff2") return builtin_aff2(field).algebra;
  throw Error(ErrorKind::BadParameters, "unknown catalog algebra '" + std::string(name) + "'");
}

}  // namespace modlie
