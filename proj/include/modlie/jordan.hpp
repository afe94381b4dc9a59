#pragma once

#include "modlie/linalg.hpp"

namespace modlie {

/// source = s + n with s semisimple, n nilpotent and sn = ns.
struct JordanPair {
  Matrix s;
  Matrix n;
  Matrix source;
};

/// Semisimple: the minimal polynomial is squarefree.
inline bool is_semisimple_matrix(const Matrix& a) {
  a.require_square("is_semisimple_matrix");
  const Polynomial mu = min_poly(a);
  return gcd(mu, mu.derivative()).degree() == 0;
}

/// Minimal polynomial splits into distinct linear factors over the base field.
inline bool is_diagonalisable_over_base(const Matrix& a) {
  a.require_square("is_diagonalisable_over_base");
  Polynomial rest = min_poly(a);
  for (const auto& lam : eigenvalues_in_field(a)) {
    const auto [q, r] = rest.divmod(Polynomial::linear(lam));
    if (!r.is_zero()) continue;
    rest = q;
    // A repeated root means the minimal polynomial is not squarefree.
    if ((rest % Polynomial::linear(lam)).is_zero()) return false;
  }
  return rest.degree() == 0;
}

/// Jordan–Chevalley decomposition over a perfect field.
///
/// With g the squarefree part of the minimal polynomial, gcd(g, g') = 1, so
/// v g' ≡ 1 (mod g). Newton's iteration s ← s - g(s) v(s) from s = a keeps s a
/// polynomial in a, squares the nilpotency of g(s) each step, and stops when
/// g(s) = 0.
inline JordanPair chevalley_decompose(const Matrix& a) {
  a.require_square("chevalley_decompose");
  const Polynomial g = squarefree_part(min_poly(a));
  const ExtendedGcd eg = extended_gcd(g, g.derivative());
  if (eg.g.degree() != 0) {
    throw Error(ErrorKind::Internal, "squarefree part is not separable; field is not perfect");
  }
  const Polynomial& v = eg.v;
  Matrix s = a;
  // ⌈log2 dim⌉ + 1 steps always suffice; the bound guards against bugs.
  for (std::size_t step = 0; step <= 2 * a.rows() + 2; ++step) {
    const Matrix gs = g(s);
    if (gs.is_zero()) return {s, a - s, a};
    s = s - gs * v(s);
  }
  throw Error(ErrorKind::Internal, "Newton iteration did not converge");
}

}  // namespace modlie
