#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modlie/matrix.hpp"

namespace modlie {

/// Univariate polynomial in λ, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, Vec coeffs) : field_(field), coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial from_ints(const Field& field, const std::vector<long long>& coeffs) {
    Vec c;
    for (long long v : coeffs) c.push_back(field.from_int(v));
    return Polynomial(field, std::move(c));
  }
  static Polynomial constant(const Scalar& c) { return Polynomial(c.field(), Vec{c}); }
  /// λ^k
  static Polynomial monomial(const Field& field, std::size_t k) {
    Vec c = zero_vector(field, k + 1);
    c[k] = field.one();
    return Polynomial(field, std::move(c));
  }
  /// λ - root
  static Polynomial linear(const Scalar& root) {
    return Polynomial(root.field(), Vec{-root, root.field().one()});
  }

  const Field& field() const noexcept { return field_; }
  const Vec& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }
  Scalar leading() const { return is_zero() ? field_.zero() : coeffs_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Scalar inv = leading().inv();
    Vec c = coeffs_;
    for (auto& x : c) x *= inv;
    return Polynomial(field_, std::move(c));
  }

  Polynomial operator+(const Polynomial& o) const {
    Vec c = zero_vector(field_, std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return Polynomial(field_, std::move(c));
  }
  Polynomial operator-(const Polynomial& o) const {
    Vec c = zero_vector(field_, std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return Polynomial(field_, std::move(c));
  }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    Vec c = zero_vector(field_, coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(field_, std::move(c));
  }
  Polynomial operator*(const Scalar& s) const {
    Vec c = coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(field_, std::move(c));
  }

  /// (quotient, remainder) with deg remainder < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    Vec rem = coeffs_;
    const std::size_t dn = d.coeffs_.size();
    if (rem.size() < dn) return {Polynomial(field_), *this};
    Vec quot = zero_vector(field_, rem.size() - dn + 1);
    const Scalar lead_inv = d.leading().inv();
    for (std::size_t k = rem.size(); k-- >= dn;) {
      const Scalar q = rem[k] * lead_inv;
      quot[k - dn + 1] = q;
      if (q.is_zero()) continue;
      for (std::size_t j = 0; j < dn; ++j) rem[k - dn + 1 + j] -= q * d.coeffs_[j];
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dn - 1), rem.end());
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
  }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(field_);
    Vec c;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c.push_back(field_.from_int(static_cast<long long>(k)) * coeffs_[k]);
    return Polynomial(field_, std::move(c));
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = field_.zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  Matrix operator()(const Matrix& m) const {
    m.require_square("polynomial evaluation");
    Matrix acc(field_, m.rows(), m.cols());
    const Matrix id = Matrix::identity(field_, m.rows());
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * m + coeffs_[k] * id;
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (k == 0 || !coeffs_[k].is_one()) out += coeffs_[k].to_string();
      if (k > 0) {
        if (!coeffs_[k].is_one()) out += "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Field field_;
  Vec coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ExtendedGcd {
  Polynomial g;  // monic
  Polynomial u;
  Polynomial v;  // u*a + v*b = g
};

inline ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(f.one()), s1(f);
  Polynomial t0(f), t1 = Polynomial::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = r0.leading().inv();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Monic polynomial with the same roots as f, each once. Over F_p a
/// polynomial with zero derivative is h(λ^p) = h(λ)^p, since the Frobenius
/// fixes every coefficient, so the radical is that of h.
inline Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of 0");
  const Field& field = f.field();
  if (f.degree() == 0) return Polynomial::constant(field.one());
  const Polynomial df = f.derivative();
  if (df.is_zero()) {
    const std::size_t p = field.characteristic();
    Vec h;
    for (std::size_t k = 0; k < f.coefficients().size(); k += p) h.push_back(f.coefficients()[k]);
    return squarefree_part(Polynomial(field, std::move(h)));
  }
  const Polynomial c = gcd(f, df);
  const Polynomial w = (f / c).monic();
  if (c.degree() == 0 || !field.is_prime()) return w;
  // Factors whose multiplicity is divisible by p are missing from w.
  const Polynomial rc = squarefree_part(c);
  return (w * rc / gcd(w, rc)).monic();
}

}  // namespace modlie
