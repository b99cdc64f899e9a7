#pragma once
// Exact truncated power series over Q and the generating-function solvers:
// Mobius function, Newton power sums of inverse roots, graded Witt
// decomposition (free graded Lie algebra dimensions) and PBW Hilbert series.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "rh4/errors.hpp"
#include "rh4/rational.hpp"

namespace rh4 {

// ---------------------------------------------------------------------------
// TruncatedSeries: coefficients 0..N of a power series, exact rationals.
// Truncation order is explicit state, never ambient.
// ---------------------------------------------------------------------------
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) {
    if (order < 0) throw domain_error("series order must be >= 0");
    coeffs_.resize(static_cast<size_t>(order) + 1);
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  static TruncatedSeries from_coeffs(std::vector<mpq_class> coeffs) {
    if (coeffs.empty()) throw domain_error("series needs at least one coefficient");
    TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const mpq_class& coeff(int k) const {
    if (k < 0 || k > order())
      throw domain_error("series coefficient index out of range");
    return coeffs_[static_cast<size_t>(k)];
  }

  // 0 beyond the stored range; used when a series is read as a polynomial.
  mpq_class coeff_or_zero(int k) const {
    if (k < 0 || k > order()) return mpq_class(0);
    return coeffs_[static_cast<size_t>(k)];
  }

  void set_coeff(int k, const mpq_class& v) {
    if (k < 0 || k > order())
      throw domain_error("series coefficient index out of range");
    coeffs_[static_cast<size_t>(k)] = v;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k)
      r.coeffs_[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k)
      r.coeffs_[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a.coeff(i) == 0) continue;
      for (int j = 0; i + j <= r.order(); ++j) {
        if (b.coeff(j) == 0) continue;
        r.coeffs_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
      }
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Multiplicative inverse up to the truncation order; needs coeff(0) != 0.
  TruncatedSeries invert() const {
    if (coeff(0) == 0)
      throw domain_error("series inversion requires nonzero constant term");
    TruncatedSeries r(order());
    mpq_class c0inv = 1 / coeff(0);
    r.coeffs_[0] = c0inv;
    for (int k = 1; k <= order(); ++k) {
      mpq_class acc = 0;
      for (int i = 1; i <= k; ++i) acc += coeff(i) * r.coeffs_[static_cast<size_t>(k - i)];
      r.coeffs_[static_cast<size_t>(k)] = -c0inv * acc;
    }
    return r;
  }

 private:
  std::vector<mpq_class> coeffs_;
};

// ---------------------------------------------------------------------------
// GradedDims: dimensions of a graded vector space split by degree parity.
// Houses dim L_k of a graded Lie algebra and the V of a free Lie algebra.
// ---------------------------------------------------------------------------
struct GradedDims {
  std::map<int, long> odd;
  std::map<int, long> even;
  int truncation_order = 0;

  explicit GradedDims(int order = 0) : truncation_order(order) {}

  void add(int degree, long count) {
    if (degree < 1) throw domain_error("graded dimension in degree < 1");
    if (count < 0) throw domain_error("negative graded dimension");
    if (count == 0) return;
    if (degree % 2 == 1)
      odd[degree] += count;
    else
      even[degree] += count;
  }

  long dim(int degree) const {
    const auto& bucket = (degree % 2 == 1) ? odd : even;
    auto it = bucket.find(degree);
    return it == bucket.end() ? 0 : it->second;
  }

  bool empty() const { return odd.empty() && even.empty(); }

  // Degrees >= 1, parity of each key matching its bucket, counts >= 0.
  void validate() const {
    for (const auto& [k, c] : odd)
      if (k < 1 || k % 2 != 1 || c < 0)
        throw domain_error("invalid odd graded dimension at degree " + std::to_string(k));
    for (const auto& [k, c] : even)
      if (k < 1 || k % 2 != 0 || c < 0)
        throw domain_error("invalid even graded dimension at degree " + std::to_string(k));
  }

  // Sum of t^k dim_k, truncated at `order`.
  TruncatedSeries poincare(int order) const {
    TruncatedSeries p(order);
    for (const auto& [k, c] : odd)
      if (k <= order) p.set_coeff(k, p.coeff(k) + c);
    for (const auto& [k, c] : even)
      if (k <= order) p.set_coeff(k, p.coeff(k) + c);
    return p;
  }
};

// ---------------------------------------------------------------------------
// Mobius function.
// ---------------------------------------------------------------------------
inline int mobius(long n) {
  if (n < 1) throw domain_error("mobius needs n >= 1");
  int factors = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // squared prime factor
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Newton power sums. Q is read as a polynomial with Q(0) = 1 whose
// factorization is Q(t) = prod_i (1 - r_i t); S_d = sum_i r_i^d, the d-th
// power sum of the inverse roots. Computed from the coefficients by
// Newton's identities; no root extraction.
// ---------------------------------------------------------------------------
inline std::vector<mpq_class> power_sums(const TruncatedSeries& q, int d_max) {
  if (d_max < 1) throw domain_error("power_sums needs d_max >= 1");
  if (q.coeff(0) != 1)
    throw domain_error("power_sums requires constant coefficient 1; normalize first");
  std::vector<mpq_class> s(static_cast<size_t>(d_max) + 1);  // s[0] unused
  for (int d = 1; d <= d_max; ++d) {
    mpq_class acc = -d * q.coeff_or_zero(d);
    for (int i = 1; i < d; ++i) acc -= q.coeff_or_zero(i) * s[static_cast<size_t>(d - i)];
    s[static_cast<size_t>(d)] = acc;
  }
  return std::vector<mpq_class>(s.begin() + 1, s.end());
}

namespace detail {

// (1 + t^k)^L truncated at order N, via binomial coefficients.
inline TruncatedSeries pow_one_plus(int k, long L, int N) {
  TruncatedSeries s(N);
  mpz_class binom;
  for (int j = 0; j * k <= N; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(L),
                 static_cast<unsigned long>(j));
    s.set_coeff(j * k, mpq_class(binom));
    if (j >= L) break;
  }
  return s;
}

// (1 - t^k)^{-L} truncated at order N: coefficients C(L+j-1, j).
inline TruncatedSeries pow_inv_one_minus(int k, long L, int N) {
  TruncatedSeries s(N);
  mpz_class binom;
  for (int j = 0; j * k <= N; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(L + j - 1),
                 static_cast<unsigned long>(j));
    s.set_coeff(j * k, mpq_class(binom));
  }
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// PBW Hilbert series of the universal enveloping algebra of a graded Lie
// algebra with the given dimensions:
//   prod_{k odd} (1+t^k)^{L_k} / prod_{k even} (1-t^k)^{L_k},  truncated at N.
// ---------------------------------------------------------------------------
inline TruncatedSeries pbw_hilbert(const GradedDims& lie, int N) {
  lie.validate();
  TruncatedSeries acc = TruncatedSeries::one(N);
  for (const auto& [k, c] : lie.odd) {
    if (k > N) break;
    acc = acc * detail::pow_one_plus(k, c, N);
  }
  for (const auto& [k, c] : lie.even) {
    if (k > N) break;
    acc = acc * detail::pow_inv_one_minus(k, c, N);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Graded Witt decomposition: dimensions of the free graded Lie algebra on
// generators V, solved degree by degree from the PBW identity
//   prod_{k odd}(1+t^k)^{L_k} prod_{k even}(1-t^k)^{-L_k} = 1/(1 - P_V(t)).
// ---------------------------------------------------------------------------
inline GradedDims witt_decompose(const GradedDims& generators, int N) {
  if (N < 0) throw domain_error("witt_decompose needs N >= 0");
  generators.validate();
  TruncatedSeries target =
      (TruncatedSeries::one(N) - generators.poincare(N)).invert();
  TruncatedSeries partial = TruncatedSeries::one(N);
  GradedDims out(N);
  for (int k = 1; k <= N; ++k) {
    mpq_class delta = target.coeff(k) - partial.coeff(k);
    long lk = integer_value(delta, "witt_decompose dimension");
    if (lk < 0)
      throw internal_error("witt_decompose produced a negative dimension at degree " +
                           std::to_string(k));
    if (lk == 0) continue;
    out.add(k, lk);
    partial = partial * ((k % 2 == 1) ? detail::pow_one_plus(k, lk, N)
                                      : detail::pow_inv_one_minus(k, lk, N));
  }
  return out;
}

}  // namespace rh4
