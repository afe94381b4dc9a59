#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "modlie/killing.hpp"

namespace modlie {

namespace detail {
inline void require_prime(const Field& field, std::string_view what) {
  if (!field.is_prime()) throw Error(ErrorKind::UnsupportedField, std::string(what) + " needs a prime field");
}

inline Vec random_vector(const Field& field, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar(field, dist(rng)));
  return v;
}
}  // namespace detail

/// Checks (ad x)^m(y) = Σ_i (-1)^(m-i) C(m,i) x^i y x^(m-i) for every ordered
/// pair drawn from `mats`, comparing iterated commutators with the expansion
/// of (L_x - R_x)^m.
inline bool ad_power_identity_check(const std::vector<Matrix>& mats, std::size_t m) {
  for (const auto& x : mats) {
    for (const auto& y : mats) {
      if (!x.is_square() || x.rows() != y.rows() || !y.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "matrices must be square and of equal size");
      }
      Matrix iterated = y;
      for (std::size_t k = 0; k < m; ++k) iterated = commutator(x, iterated);
      Matrix expanded(x.field(), x.rows(), x.cols());
      Integer binom = 1;
      for (std::size_t i = 0; i <= m; ++i) {
        const Scalar coeff = x.field().from_integer((m - i) % 2 ? Integer(-binom) : binom);
        expanded += coeff * (x.pow(i) * y * x.pow(m - i));
        binom = binom * (m - i) / (i + 1);
      }
      if (!(iterated == expanded)) return false;
    }
  }
  return true;
}

/// s_1(a, b), ..., s_{p-1}(a, b): i·s_i is the X^(i-1) coefficient of
/// (ad(a⊗X + b⊗1))^(p-1)(a⊗1) in L ⊗ F[X].
struct SiTable {
  Vec a;
  Vec b;
  std::vector<Vec> entries;  // entries[i - 1] = s_i

  Vec sum() const {
    Vec total = zero_vector(a.front().field(), a.size());
    for (const auto& s : entries) total = total + s;
    return total;
  }
};

inline SiTable jacobson_si(const LieAlgebra& L, const Vec& a, const Vec& b) {
  detail::require_prime(L.field(), "jacobson_si");
  if (a.size() != L.dim() || b.size() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "jacobson_si operands");
  const std::size_t p = L.field().characteristic();
  // poly[d] is the coefficient of X^d.
  std::vector<Vec> poly{a};
  for (std::size_t step = 0; step + 1 < p; ++step) {
    std::vector<Vec> next(poly.size() + 1, L.zero());
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] = next[d + 1] + bracket(L, a, poly[d]);
      next[d] = next[d] + bracket(L, b, poly[d]);
    }
    poly = std::move(next);
  }
  SiTable table{a, b, {}};
  for (std::size_t i = 1; i < p; ++i) {
    const Vec& coeff = i - 1 < poly.size() ? poly[i - 1] : L.zero();
    table.entries.push_back(L.field().from_int(static_cast<long long>(i)).inv() * coeff);
  }
  return table;
}

/// A p-mapping given by the images of the basis; arbitrary elements are
/// evaluated with the semilinearity and Jacobson sum rules.
struct PMapping {
  LieAlgebra algebra;
  std::vector<Vec> basis_images;
};

struct PMappingSearch {
  std::optional<PMapping> mapping;
  /// When no p-mapping exists: the basis index whose system is inconsistent
  /// and the matrix (ad b_j)^p that no ad(y) matches.
  std::optional<std::size_t> failing_basis;
  std::optional<Matrix> unmatched;
};

namespace detail {
/// Columns are ad(b_k) flattened, so A y = flatten(ad y).
inline Matrix ad_system(const LieAlgebra& L) {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < L.dim(); ++k) cols.push_back(ad_basis(L, k).entries());
  return Matrix::from_columns(L.field(), L.dim() * L.dim(), cols);
}
}  // namespace detail

/// Solves ad(y) = (ad b_j)^p for every basis element; free coordinates are 0.
inline PMappingSearch find_p_mapping(const LieAlgebra& L) {
  detail::require_prime(L.field(), "find_p_mapping");
  const std::size_t p = L.field().characteristic();
  const Matrix system = detail::ad_system(L);
  std::vector<Vec> images;
  for (std::size_t j = 0; j < L.dim(); ++j) {
    const Matrix target = ad_basis(L, j).pow(p);
    auto y = solve_linear(system, target.entries());
    if (!y) return {std::nullopt, j, target};
    images.push_back(std::move(*y));
  }
  return {PMapping{L, std::move(images)}, std::nullopt, std::nullopt};
}

/// Folds (a + b)^[p] = a^[p] + b^[p] + Σ s_i(a, b) over the terms α_j b_j of v
/// in the given index order, using (α b_j)^[p] = α^p b_j^[p].
inline Vec evaluate_p_mapping_in_order(const PMapping& pm, const Vec& v, const std::vector<std::size_t>& order) {
  const LieAlgebra& L = pm.algebra;
  detail::require_prime(L.field(), "evaluate_p_mapping");
  if (v.size() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "element length");
  const std::uint64_t p = L.field().characteristic();
  Vec acc = L.zero();
  Vec acc_image = L.zero();
  for (std::size_t j : order) {
    if (v[j].is_zero()) continue;
    const Vec term = v[j] * L.basis_vector(j);
    const Vec term_image = v[j].pow(p) * pm.basis_images[j];
    acc_image = acc_image + term_image + jacobson_si(L, acc, term).sum();
    acc = acc + term;
  }
  return acc_image;
}

inline Vec evaluate_p_mapping(const PMapping& pm, const Vec& v) {
  std::vector<std::size_t> order(pm.algebra.dim());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return evaluate_p_mapping_in_order(pm, v, order);
}

struct PMappingReport {
  bool axiom1 = true;  // ad(a^[p]) = (ad a)^p
  bool axiom2 = true;  // (αa)^[p] = α^p a^[p]
  bool axiom3 = true;  // Jacobson sum rule
  std::string first_violation;

  bool ok() const { return axiom1 && axiom2 && axiom3; }
};

/// Axiom 1 on the basis and on sampled elements, axiom 2 on every basis
/// element against every scalar, axiom 3 on all ordered basis pairs and on
/// sampled pairs. Sampling is seeded, so reports are reproducible.
inline PMappingReport verify_p_mapping(const PMapping& pm, std::size_t samples = 100, std::uint64_t seed = 1) {
  const LieAlgebra& L = pm.algebra;
  detail::require_prime(L.field(), "verify_p_mapping");
  const Field& field = L.field();
  const std::uint64_t p = field.characteristic();
  const std::size_t n = L.dim();
  PMappingReport report;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (report.first_violation.empty()) report.first_violation = what;
  };

  for (std::size_t j = 0; j < n && report.axiom1; ++j) {
    if (!(ad(L, pm.basis_images[j]) == ad_basis(L, j).pow(p))) fail(report.axiom1, "axiom 1 at " + L.labels()[j]);
  }

  for (std::size_t j = 0; j < n && report.axiom2; ++j) {
    for (std::uint32_t a = 0; a < p; ++a) {
      const Scalar alpha(field, a);
      const Vec image = evaluate_p_mapping(pm, alpha * L.basis_vector(j));
      if (!(image == alpha.pow(p) * pm.basis_images[j])) {
        fail(report.axiom2, "axiom 2 at " + alpha.to_string() + "*" + L.labels()[j]);
        break;
      }
    }
  }

  auto check_sum = [&](const Vec& a, const Vec& b, const std::string& where) {
    const Vec lhs = evaluate_p_mapping(pm, a + b);
    const Vec rhs = evaluate_p_mapping(pm, a) + evaluate_p_mapping(pm, b) + jacobson_si(L, a, b).sum();
    if (!(lhs == rhs)) fail(report.axiom3, "axiom 3 at " + where);
  };
  for (std::size_t i = 0; i < n && report.axiom3; ++i)
    for (std::size_t j = 0; j < n && report.axiom3; ++j)
      check_sum(L.basis_vector(i), L.basis_vector(j), "(" + L.labels()[i] + "," + L.labels()[j] + ")");

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec a = detail::random_vector(field, n, rng);
    const Vec b = detail::random_vector(field, n, rng);
    if (report.axiom3) check_sum(a, b, to_string(a) + "+" + to_string(b));
    if (report.axiom1 && !(ad(L, evaluate_p_mapping(pm, a)) == ad(L, a).pow(p))) {
      fail(report.axiom1, "axiom 1 at " + to_string(a));
    }
  }
  return report;
}

enum class ClosurePredicate { Gl, Sl };

inline ClosurePredicate parse_closure_predicate(std::string_view name) {
  if (name == "gl") return ClosurePredicate::Gl;
  if (name == "sl") return ClosurePredicate::Sl;
  throw Error(ErrorKind::BadPredicate, "unknown predicate '" + std::string(name) + "'");
}

/// Whether m ↦ m^p keeps each input inside gl (always) or sl (tr(m^p) = 0).
inline bool pth_power_closure_check(const std::vector<Matrix>& mats, ClosurePredicate predicate) {
  for (const auto& m : mats) {
    m.require_square("pth_power_closure_check");
    detail::require_prime(m.field(), "pth_power_closure_check");
    if (predicate == ClosurePredicate::Gl) continue;
    if (!m.trace().is_zero()) throw Error(ErrorKind::BadParameters, "input " + m.to_string() + " is not in sl");
    if (!m.pow(m.field().characteristic()).trace().is_zero()) return false;
  }
  return true;
}

inline bool pth_power_closure_check(const std::vector<Matrix>& mats, std::string_view predicate) {
  return pth_power_closure_check(mats, parse_closure_predicate(predicate));
}

struct SolutionSpaceReport {
  std::size_t center_dim;
  bool unique;
  bool killing_nondegenerate;
  /// False only if a non-degenerate Killing form coexists with a non-unique
  /// p-mapping, which would contradict the uniqueness theorem.
  bool consistent;
};

/// Each system ad(y) = (ad b_j)^p has solution set y_0 + center(L), so the
/// p-mapping is unique exactly when the center is zero.
inline SolutionSpaceReport p_mapping_solution_space(const LieAlgebra& L) {
  if (!find_p_mapping(L).mapping) throw Error(ErrorKind::BadParameters, "algebra has no p-mapping");
  const std::size_t center_dim = kernel(detail::ad_system(L)).dim();
  const bool unique = center_dim == 0;
  const bool nondegenerate = is_nondegenerate(killing_form(L));
  return {center_dim, unique, nondegenerate, !nondegenerate || unique};
}

/// f(a + b) = f(a) + f(b) on sampled pairs and f(αa) = α^p f(a) for every
/// scalar α and basis element a.
inline bool is_p_semilinear(const LieAlgebra& L, const std::function<Vec(const Vec&)>& f, std::size_t samples = 100,
                            std::uint64_t seed = 1) {
  detail::require_prime(L.field(), "is_p_semilinear");
  const Field& field = L.field();
  const std::uint64_t p = field.characteristic();
  for (std::size_t j = 0; j < L.dim(); ++j) {
    const Vec b = L.basis_vector(j);
    const Vec fb = f(b);
    for (std::uint32_t a = 0; a < p; ++a) {
      const Scalar alpha(field, a);
      if (!(f(alpha * b) == alpha.pow(p) * fb)) return false;
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec a = detail::random_vector(field, L.dim(), rng);
    const Vec b = detail::random_vector(field, L.dim(), rng);
    if (!(f(a + b) == f(a) + f(b))) return false;
  }
  return true;
}

/// Table form: the map is the additive extension of the basis images.
inline bool is_p_semilinear(const LieAlgebra& L, const std::vector<Vec>& basis_images, std::size_t samples = 100,
                            std::uint64_t seed = 1) {
  if (basis_images.size() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "one image per basis element");
  auto f = [&](const Vec& v) {
    Vec out = L.zero();
    for (std::size_t j = 0; j < L.dim(); ++j) out = out + v[j] * basis_images[j];
    return out;
  };
  return is_p_semilinear(L, f, samples, seed);
}

}  // namespace modlie
