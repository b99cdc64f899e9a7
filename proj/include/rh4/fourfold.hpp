#pragma once
// Rational homotopy of simply connected four-manifolds from the
// diagonalized intersection form: the adjunction-space Lie model, homotopy
// ranks by Lie-model homology / the closed Mobius-sum formula / the
// low-degree closed formulas, the suspension rank formula, and the
// loop-space Hilbert series.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rh4/errors.hpp"
#include "rh4/freelie.hpp"
#include "rh4/series.hpp"

namespace rh4 {

// Diagonalized intersection form: b2_plus entries +1, b2_minus entries -1.
struct IntersectionForm {
  int b2_plus = 0;
  int b2_minus = 0;

  int b2() const { return b2_plus + b2_minus; }
  int signature() const { return b2_plus - b2_minus; }

  void validate() const {
    if (b2_plus < 0 || b2_minus < 0)
      throw domain_error("intersection form needs b2+ >= 0 and b2- >= 0");
  }
};

enum class RankMethod { lie_model, closed, low_degree };

inline const char* method_name(RankMethod m) {
  switch (m) {
    case RankMethod::lie_model: return "lie-model";
    case RankMethod::closed: return "closed";
    case RankMethod::low_degree: return "low-degree";
  }
  return "?";
}

// rk pi_k (x) Q for 2 <= k <= max_degree.
struct RankTable {
  std::map<int, long> ranks;
  int max_degree = 0;
  RankMethod method = RankMethod::lie_model;

  long rank(int k) const {
    auto it = ranks.find(k);
    return it == ranks.end() ? 0 : it->second;
  }
};

// Computation limits for the Lie-model route; tensor-word counts grow like
// b2^n, so both knobs default to the supported envelope.
struct Budget {
  int max_b2 = 4;
  int max_homology_degree = 8;
  std::size_t max_words = kDefaultMaxWords;
};

// ---------------------------------------------------------------------------
// The model: generators v_1..v_{b2} in degree 1 and w in degree 3 with
// dv_i = 0, dw = z, where z is the attaching cycle below.
// ---------------------------------------------------------------------------

// z = sum_{i<=b2+} [v_i,v_i] - sum_{j>b2+} [v_j,v_j], a degree-2 cycle.
// Unit coefficients; homology ranks are invariant under rescaling the
// diagonal entries, and the signature-independence suite certifies this.
inline LieElement attaching_cycle(const IntersectionForm& form) {
  form.validate();
  LieElement z;
  z.degree = 2;
  for (int i = 0; i < form.b2(); ++i) {
    Word vv(2, static_cast<char>(i));
    z.add_term(vv, i < form.b2_plus ? 2 : -2);  // [v_i,v_i] = 2 v_i(x)v_i
  }
  return z;
}

inline LieModel fourfold_model(const IntersectionForm& form) {
  form.validate();
  std::vector<Generator> gens;
  for (int i = 0; i < form.b2(); ++i)
    gens.push_back({"v" + std::to_string(i + 1), 1});
  gens.push_back({"w", 3});
  LieModel model(std::move(gens));
  LieElement z = attaching_cycle(form);
  if (!z.is_zero()) model.set_differential("w", z);
  return model;
}

// ---------------------------------------------------------------------------
// Route 1: Lie-model homology. rk pi_k(M) = dim H_{k-1}(L_{V+W}, d).
// ---------------------------------------------------------------------------
inline RankTable ranks_lie(const IntersectionForm& form, int max_k,
                           const Budget& budget = {}) {
  form.validate();
  if (max_k < 2) throw domain_error("ranks_lie needs max_k >= 2");
  if (form.b2() > budget.max_b2)
    throw budget_error("b2 = " + std::to_string(form.b2()) +
                       " exceeds the Lie-model budget (max b2 " +
                       std::to_string(budget.max_b2) + ")");
  if (max_k - 1 > budget.max_homology_degree)
    throw budget_error("homology degree " + std::to_string(max_k - 1) +
                       " exceeds the Lie-model budget (max degree " +
                       std::to_string(budget.max_homology_degree) + ")");
  Workspace ws(fourfold_model(form), budget.max_words);
  RankTable t;
  t.method = RankMethod::lie_model;
  t.max_degree = max_k;
  for (int k = 2; k <= max_k; ++k) t.ranks[k] = ws.homology_dim(k - 1);
  return t;
}

// ---------------------------------------------------------------------------
// Route 2: the closed Mobius-sum formula, valid for b2 >= 2:
//   rk pi_{n+1} = sum_{d|n} (-1)^{n+n/d} (mu(d)/d)
//                 sum_{a+2b=n/d} (-1)^b C(a+b,b) b2^a/(a+b).
// ---------------------------------------------------------------------------
inline long ranks_closed(long b2, int n) {
  if (b2 < 2)
    throw domain_error("closed rank formula requires b2 >= 2; use ranks_lie "
                       "for the elliptic cases b2 <= 1");
  if (n < 1) throw domain_error("ranks_closed needs n >= 1");
  mpq_class total = 0;
  mpz_class binom, power;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    int q = n / d;
    mpq_class inner = 0;
    for (int b = 0; 2 * b <= q; ++b) {
      int a = q - 2 * b;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a + b),
                   static_cast<unsigned long>(b));
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(b2),
                    static_cast<unsigned long>(a));
      mpz_class num = binom * power;
      mpq_class term(num, mpz_class(a + b));
      term.canonicalize();
      inner += (b % 2 == 0) ? term : -term;
    }
    mpq_class outer(mu, d);
    outer.canonicalize();
    total += ((n + q) % 2 == 0 ? 1 : -1) * outer * inner;
  }
  long value = integer_value(total, "closed rank formula");
  if (value < 0)
    throw internal_error("closed rank formula produced a negative value");
  return value;
}

// ---------------------------------------------------------------------------
// Route 3: the printed low-degree formulas (b2 >= 2):
//   rk pi_2 = b2, rk pi_3 = b2(b2+1)/2 - 1, rk pi_4 = b2(b2^2-4)/3.
// ---------------------------------------------------------------------------
inline std::array<long, 3> ranks_low_degree(long b2) {
  if (b2 < 2)
    throw domain_error("low-degree formulas require b2 >= 2 (rk pi_4 would "
                       "be negative at b2 = 1); use ranks_lie");
  mpz_class b(b2);
  mpz_class pi3 = b * (b + 1) / 2 - 1;
  mpz_class pi4 = b * (b * b - 4) / 3;
  if (!pi3.fits_slong_p() || !pi4.fits_slong_p())
    throw domain_error("b2 too large for 64-bit rank values");
  return {b2, pi3.get_si(), pi4.get_si()};
}

// ---------------------------------------------------------------------------
// Suspension ranks: for a finite complex X with Poincare polynomial P,
//   rk pi_{j+1}(Sigma X) = ((-1)^j / j) sum_{d|j} (-1)^d mu(j/d) S_d(2 - P),
// with S_d the power sums of the inverse roots of 2 - P. The index and
// inverse conventions are the ones certified by the Witt oracle.
// ---------------------------------------------------------------------------
inline std::map<int, long> ranks_suspension_babenko(const TruncatedSeries& p,
                                                    int max_j) {
  if (max_j < 1) throw domain_error("ranks_suspension_babenko needs max_j >= 1");
  if (p.coeff(0) != 1)
    throw domain_error("Poincare polynomial must have constant term 1");
  for (int k = 0; k <= p.order(); ++k) {
    const mpq_class& c = p.coeff(k);
    if (!is_integer(c) || c < 0)
      throw domain_error("Poincare polynomial needs non-negative integer "
                         "coefficients");
  }
  TruncatedSeries q(p.order());
  q.set_coeff(0, 1);
  for (int k = 1; k <= p.order(); ++k) q.set_coeff(k, -p.coeff(k));
  std::vector<mpq_class> s = power_sums(q, max_j);
  std::map<int, long> out;
  for (int j = 1; j <= max_j; ++j) {
    mpq_class acc = 0;
    for (int d = 1; d <= j; ++d) {
      if (j % d != 0) continue;
      int mu = mobius(j / d);
      if (mu == 0) continue;
      mpq_class term = mu * s[static_cast<std::size_t>(d - 1)];
      acc += (d % 2 == 0) ? term : -term;
    }
    mpq_class r = acc / j;
    if (j % 2 == 1) r = -r;
    long value = integer_value(r, "suspension rank formula");
    if (value < 0)
      throw internal_error("suspension rank formula produced a negative value");
    out[j] = value;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Loop-space homology Hilbert series of M: PBW applied to the rank table,
// dim L_k = rk pi_{k+1}(M) with the parity of k.
// ---------------------------------------------------------------------------
inline TruncatedSeries loop_hilbert(const IntersectionForm& form, int n,
                                    const Budget& budget = {}) {
  if (n < 0) throw domain_error("loop_hilbert needs N >= 0");
  if (n == 0) return TruncatedSeries::one(0);
  RankTable t = ranks_lie(form, n + 1, budget);
  GradedDims dims(n);
  for (int k = 1; k <= n; ++k) dims.add(k, t.rank(k + 1));
  return pbw_hilbert(dims, n);
}

}  // namespace rh4
