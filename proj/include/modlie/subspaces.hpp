#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "modlie/linalg.hpp"

namespace modlie {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Gaussian binomial [n choose k]_q: the number of k-dimensional subspaces of F_q^n.
inline Integer gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  Integer num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(Integer(q), static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(Integer(q), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

inline Integer subspace_count(std::uint64_t n, std::uint64_t q, std::optional<std::size_t> dim = std::nullopt) {
  if (dim) return gaussian_binomial(n, *dim, q);
  Integer total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

/// Streams every subspace of F_p^n exactly once, each as its RREF basis.
/// Order: by dimension, then pivot columns (lexicographic), then the free
/// entries read row by row as base-p digits, most significant first.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const Field& field, std::size_t ambient, std::optional<std::size_t> dim = std::nullopt,
                     std::uint64_t cap = kDefaultEnumerationCap)
      : field_(field), n_(ambient) {
    if (!field.is_prime()) {
      throw Error(ErrorKind::UnsupportedField, "subspace enumeration needs a finite field");
    }
    if (dim && *dim > ambient) throw Error(ErrorKind::BadParameters, "dimension exceeds ambient dimension");
    const Integer count = subspace_count(ambient, field.characteristic(), dim);
    if (count > cap) {
      throw Error(ErrorKind::CapExceeded,
                  count.str() + " subspaces of " + field.name() + "^" + std::to_string(ambient) +
                      " exceed the cap of " + std::to_string(cap));
    }
    dim_ = dim ? *dim : 0;
    last_dim_ = dim ? *dim : ambient;
    start_dimension();
  }

  std::optional<Subspace> next() {
    if (done_) return std::nullopt;
    Subspace out = current();
    advance();
    return out;
  }

 private:
  void start_dimension() {
    pivots_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) pivots_[i] = i;
    start_pattern();
  }

  void start_pattern() {
    free_.clear();
    for (std::size_t r = 0; r < dim_; ++r) {
      std::size_t next_pivot = 0;
      for (std::size_t c = pivots_[r] + 1; c < n_; ++c) {
        while (next_pivot < dim_ && pivots_[next_pivot] < c) ++next_pivot;
        if (next_pivot < dim_ && pivots_[next_pivot] == c) continue;
        free_.push_back({r, c});
      }
    }
    digits_.assign(free_.size(), 0);
  }

  Subspace current() const {
    Matrix basis(field_, dim_, n_);
    for (std::size_t r = 0; r < dim_; ++r) basis(r, pivots_[r]) = field_.one();
    for (std::size_t k = 0; k < free_.size(); ++k) basis(free_[k].first, free_[k].second) = Scalar(field_, digits_[k]);
    return Subspace::from_rows(basis);
  }

  bool next_digits() {
    const std::uint32_t p = field_.characteristic();
    for (std::size_t k = free_.size(); k-- > 0;) {
      if (++digits_[k] < p) return true;
      digits_[k] = 0;
    }
    return false;
  }

  bool next_pattern() {
    // Next k-combination of {0..n-1} in lexicographic order.
    for (std::size_t i = dim_; i-- > 0;) {
      if (pivots_[i] < n_ - dim_ + i) {
        ++pivots_[i];
        for (std::size_t j = i + 1; j < dim_; ++j) pivots_[j] = pivots_[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  void advance() {
    if (next_digits()) return;
    if (next_pattern()) {
      start_pattern();
      return;
    }
    if (dim_ < last_dim_) {
      ++dim_;
      start_dimension();
      return;
    }
    done_ = true;
  }

  Field field_;
  std::size_t n_;
  std::size_t dim_ = 0;
  std::size_t last_dim_ = 0;
  bool done_ = false;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
  std::vector<std::uint32_t> digits_;
};

inline std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t ambient,
                                                 std::optional<std::size_t> dim = std::nullopt,
                                                 std::uint64_t cap = kDefaultEnumerationCap) {
  SubspaceEnumerator it(field, ambient, dim, cap);
  std::vector<Subspace> out;
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

/// Subspaces satisfying `keep`, in enumeration order.
inline std::vector<Subspace> filter_subspaces(const Field& field, std::size_t ambient,
                                              const std::function<bool(const Subspace&)>& keep,
                                              std::uint64_t cap = kDefaultEnumerationCap) {
  SubspaceEnumerator it(field, ambient, std::nullopt, cap);
  std::vector<Subspace> out;
  while (auto s = it.next()) {
    if (keep(*s)) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace modlie
