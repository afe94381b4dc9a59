#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modlie/polynomial.hpp"

namespace modlie {

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss–Jordan elimination.
inline RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    }
    const Scalar inv = m(r, c).inv();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// A subspace of F^n held as the RREF of a basis (no zero rows). Two
/// subspaces are equal exactly when their RREF bases are identical.
class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t ambient) {
    return Subspace(Matrix(field, 0, ambient), {});
  }
  static Subspace full(const Field& field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix::identity(field, ambient), std::move(piv));
  }
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vec>& vectors) {
    return from_rows(Matrix::from_rows(field, ambient, vectors));
  }
  /// Row space of m.
  static Subspace from_rows(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix basis(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = r.reduced(i, j);
    return Subspace(std::move(basis), std::move(r.pivots));
  }

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vec> basis_vectors() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// v minus its projection along the pivot coordinates; zero iff v is in the subspace.
  Vec reduce(const Vec& v) const {
    check_same_length(v, Vec(ambient_dim(), field().zero()));
    Vec r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar c = r[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_dim(); ++j) r[j] -= c * basis_(i, j);
    }
    return r;
  }
  bool contains(const Vec& v) const { return modlie::is_zero(reduce(v)); }
  bool contains(const Subspace& s) const {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (!contains(s.basis_.row(i))) return false;
    }
    return true;
  }
  /// Coordinates of a member vector in the RREF basis: its pivot entries.
  Vec coordinates(const Vec& v) const {
    if (!contains(v)) throw Error(ErrorKind::DimensionMismatch, "vector is not in the subspace");
    Vec c;
    for (std::size_t p : pivots_) c.push_back(v[p]);
    return c;
  }

  Subspace operator+(const Subspace& o) const {
    std::vector<Vec> rows = basis_vectors();
    for (auto& v : o.basis_vectors()) rows.push_back(std::move(v));
    return span(field(), ambient_dim(), rows);
  }
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  std::string to_string() const { return basis_.to_string(); }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  const Field& field = m.field();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vector(field, n, free);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(field, n, basis);
}

inline Subspace Subspace::intersect(const Subspace& o) const {
  // v = Σ a_i u_i = Σ b_j w_j  ⇔  (a, -b) in the kernel of [U^T | W^T].
  const std::size_t n = ambient_dim();
  Matrix stacked(field(), n, dim() + o.dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) stacked(k, i) = basis_(i, k);
  for (std::size_t j = 0; j < o.dim(); ++j)
    for (std::size_t k = 0; k < n; ++k) stacked(k, dim() + j) = o.basis_(j, k);
  std::vector<Vec> vectors;
  for (const Vec& coeffs : kernel(stacked).basis_vectors()) {
    Vec v = zero_vector(field(), n);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k < n; ++k) v[k] += coeffs[i] * basis_(i, k);
    vectors.push_back(std::move(v));
  }
  return span(field(), n, vectors);
}

/// Some x with a x = b, free variables pinned to 0; nullopt when inconsistent.
inline std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "system has " + std::to_string(a.rows()) + " rows but rhs length " + std::to_string(b.size()));
  }
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  m.require_square("inverse");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

/// det(λI - m) by Berkowitz's division-free recurrence, so it is valid in
/// every characteristic.
inline Polynomial char_poly(const Matrix& m) {
  m.require_square("char_poly");
  const Field& field = m.field();
  const std::size_t n = m.rows();
  // Coefficients highest degree first while iterating.
  Vec poly{field.one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading principal block A (size r), column C = m[0..r, r], row R = m[r, 0..r].
    // Toeplitz column: 1, -m(r,r), -R C, -R A C, ..., -R A^(r-1) C.
    Vec toeplitz{field.one(), -m(r, r)};
    Vec vec(r, field.zero());
    for (std::size_t i = 0; i < r; ++i) vec[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar dot = field.zero();
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * vec[i];
      toeplitz.push_back(-dot);
      Vec next(r, field.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * vec[j];
      vec = std::move(next);
    }
    // toeplitz has r + 2 entries; p_{r+1} = T p_r where T is (r+2)x(r+1) lower Toeplitz.
    Vec next(r + 2, field.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return Polynomial(field, std::move(poly));
}

/// Smallest-degree monic p with p(m) = 0, from the first linear dependency
/// among I, m, m^2, ...
inline Polynomial min_poly(const Matrix& m) {
  m.require_square("min_poly");
  const Field& field = m.field();
  const std::size_t n = m.rows();
  std::vector<Vec> powers{Matrix::identity(field, n).entries()};
  Matrix current = Matrix::identity(field, n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    const Matrix span = Matrix::from_columns(field, n * n, powers);
    if (auto c = solve_linear(span, current.entries())) {
      Vec coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(field.one());
      return Polynomial(field, std::move(coeffs));
    }
    powers.push_back(current.entries());
  }
  throw Error(ErrorKind::Internal, "no dependency among powers up to dimension");
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline Integer lcm(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

/// Rational roots of f by the rational-root theorem after clearing denominators.
inline std::vector<Scalar> rational_roots(const Polynomial& f) {
  const Field& field = f.field();
  std::vector<Scalar> roots;
  Polynomial g = f;
  // Pull out the root 0 so the constant term is nonzero.
  if (g.coeff(0).is_zero()) {
    roots.push_back(field.zero());
    while (!g.is_zero() && g.coeff(0).is_zero()) g = g / Polynomial::monomial(field, 1);
  }
  if (g.degree() < 1) return roots;
  Integer denom = 1;
  for (const auto& c : g.coefficients()) denom = lcm(denom, boost::multiprecision::denominator(c.rational()));
  const Integer lead = boost::multiprecision::numerator(g.leading().rational() * Rational(denom));
  const Integer cst = boost::multiprecision::numerator(g.coeff(0).rational() * Rational(denom));
  std::set<Rational> found;
  for (const Integer& num : positive_divisors(cst)) {
    for (const Integer& den : positive_divisors(lead)) {
      for (int sign : {1, -1}) {
        const Rational cand = Rational(num * sign, den);
        if (found.count(cand)) continue;
        if (g(field.from_rational(cand)).is_zero()) found.insert(cand);
      }
    }
  }
  for (const auto& q : found) roots.push_back(field.from_rational(q));
  return roots;
}

}  // namespace detail

/// Roots of the characteristic polynomial that lie in the base field, sorted
/// ascending. Roots in extension fields are not reported.
inline std::vector<Scalar> eigenvalues_in_field(const Matrix& m) {
  m.require_square("eigenvalues_in_field");
  const Polynomial chi = char_poly(m);
  const Field& field = m.field();
  std::vector<Scalar> roots;
  if (field.is_prime()) {
    for (std::uint32_t a = 0; a < field.characteristic(); ++a) {
      const Scalar x(field, a);
      if (chi(x).is_zero()) roots.push_back(x);
    }
  } else {
    roots = detail::rational_roots(chi);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline Subspace eigenspace(const Matrix& m, const Scalar& lambda) {
  m.require_square("eigenspace");
  return kernel(m - lambda * Matrix::identity(m.field(), m.rows()));
}

}  // namespace modlie
