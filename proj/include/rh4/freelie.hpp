#pragma once
// Free graded Lie algebra over Q inside the tensor algebra: graded
// commutator brackets, derivation differentials, degreewise bases by exact
// Gaussian elimination, and Lie-algebra homology ranks. Every basis
// computation is certified against the Witt dimension from series.hpp.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rh4/errors.hpp"
#include "rh4/rational.hpp"
#include "rh4/series.hpp"

namespace rh4 {

inline constexpr std::size_t kDefaultMaxWords = 2'000'000;

struct Generator {
  std::string name;
  int degree = 0;
};

// A tensor word: bytes are generator indices. Lexicographic string order is
// the column order used by the elimination.
using Word = std::string;

// ---------------------------------------------------------------------------
// LieElement: exact homogeneous linear combination of tensor words.
// ---------------------------------------------------------------------------
struct LieElement {
  int degree = 0;
  std::map<Word, mpq_class> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.terms == b.terms && (a.terms.empty() || a.degree == b.degree);
  }
};

inline LieElement operator+(const LieElement& a, const LieElement& b) {
  if (!a.is_zero() && !b.is_zero() && a.degree != b.degree)
    throw domain_error("sum of inhomogeneous Lie elements");
  LieElement r = a;
  if (r.is_zero()) r.degree = b.degree;
  for (const auto& [w, c] : b.terms) r.add_term(w, c);
  return r;
}

inline LieElement operator*(const mpq_class& c, const LieElement& x) {
  LieElement r;
  r.degree = x.degree;
  if (c == 0) return r;
  for (const auto& [w, v] : x.terms) r.terms.emplace(w, c * v);
  return r;
}

inline LieElement operator-(const LieElement& a, const LieElement& b) {
  return a + mpq_class(-1) * b;
}

// Graded commutator x (x) y - (-1)^{|x||y|} y (x) x, expanded in the tensor
// algebra and canonicalized.
inline LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement r;
  r.degree = x.degree + y.degree;
  if (x.is_zero() || y.is_zero()) return r;
  const bool koszul_minus = (x.degree % 2) && (y.degree % 2);
  const mpq_class swap_sign = koszul_minus ? 1 : -1;  // -(-1)^{|x||y|}
  for (const auto& [u, cu] : x.terms)
    for (const auto& [v, cv] : y.terms) {
      r.add_term(u + v, cu * cv);
      r.add_term(v + u, swap_sign * cu * cv);
    }
  return r;
}

// ---------------------------------------------------------------------------
// LieModel: generators plus a differential assignment on generators.
// Immutable after validate(); the differential extends to all of the free
// Lie algebra as a degree -1 derivation.
// ---------------------------------------------------------------------------
class LieModel {
 public:
  explicit LieModel(std::vector<Generator> gens) : gens_(std::move(gens)) {
    if (gens_.size() > 120)
      throw domain_error("too many generators for byte-indexed words");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].degree < 1)
        throw domain_error("generator degree must be >= 1: " + gens_[i].name);
      if (!index_.emplace(gens_[i].name, static_cast<int>(i)).second)
        throw domain_error("duplicate generator name: " + gens_[i].name);
    }
    diffs_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      diffs_[i].degree = gens_[i].degree - 1;
  }

  int generator_count() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return gens_[static_cast<std::size_t>(i)].degree; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw domain_error("unknown generator: " + name);
    return it->second;
  }

  const LieElement& differential_of(int i) const {
    return diffs_[static_cast<std::size_t>(i)];
  }

  void set_differential(const std::string& name, LieElement dg) {
    int i = index_of(name);
    if (!dg.is_zero()) {
      if (degree(i) == 1)
        throw domain_error("degree-1 generator must have zero differential: " + name);
      if (dg.degree != degree(i) - 1)
        throw domain_error("differential must lower degree by exactly 1: " + name);
      check_words(dg);
    }
    dg.degree = degree(i) - 1;
    diffs_[static_cast<std::size_t>(i)] = std::move(dg);
  }

  int word_degree(const Word& w) const {
    int d = 0;
    for (unsigned char ch : w) {
      if (ch >= gens_.size())
        throw domain_error("word contains unknown generator");
      d += gens_[ch].degree;
    }
    return d;
  }

  LieElement generator_element(int i) const {
    LieElement x;
    x.degree = degree(i);
    x.terms.emplace(Word(1, static_cast<char>(i)), mpq_class(1));
    return x;
  }

  std::string word_str(const Word& w) const {
    std::string s;
    for (unsigned char ch : w) {
      if (!s.empty()) s += '.';
      s += gens_[ch].name;
    }
    return s;
  }

  // d lowers degree by exactly one and squares to zero on every generator.
  void validate() const;

 private:
  void check_words(const LieElement& x) const {
    for (const auto& [w, c] : x.terms) {
      if (w.empty()) throw domain_error("empty tensor word in Lie element");
      if (word_degree(w) != x.degree)
        throw domain_error("inhomogeneous Lie element");
    }
  }

  std::vector<Generator> gens_;
  std::vector<LieElement> diffs_;
  std::unordered_map<std::string, int> index_;
};

// Derivation extension of the generator differential by the graded Leibniz
// rule d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db.
inline LieElement differential(const LieModel& model, const LieElement& x) {
  LieElement r;
  r.degree = x.degree - 1;
  for (const auto& [w, c] : x.terms) {
    if (model.word_degree(w) != x.degree)
      throw domain_error("inhomogeneous Lie element");
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int gi = static_cast<unsigned char>(w[i]);
      const LieElement& dg = model.differential_of(gi);
      if (!dg.is_zero()) {
        mpq_class sign = (prefix_degree % 2 == 0) ? 1 : -1;
        for (const auto& [dw, dc] : dg.terms)
          r.add_term(w.substr(0, i) + dw + w.substr(i + 1), sign * c * dc);
      }
      prefix_degree += model.degree(gi);
    }
  }
  return r;
}

inline void LieModel::validate() const {
  for (int i = 0; i < generator_count(); ++i) {
    const LieElement& dg = differential_of(i);
    if (dg.is_zero()) continue;
    LieElement dd = differential(*this, dg);
    if (!dd.is_zero())
      throw domain_error("differential does not square to zero on generator " +
                         generator(i).name);
  }
}

// ---------------------------------------------------------------------------
// Sparse primitive-integer rows and exact insertion elimination. A row is a
// sorted sparse vector over word-column ids with integer entries of content
// one and positive leading entry; int64 storage with an exact mpz fallback.
// ---------------------------------------------------------------------------
namespace lin {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 abs128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

inline u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct SparseRow {
  bool big = false;
  std::vector<std::pair<int32_t, long long>> small;
  std::vector<std::pair<int32_t, mpz_class>> wide;

  bool empty() const { return big ? wide.empty() : small.empty(); }
  int32_t lead() const { return big ? wide.front().first : small.front().first; }
};

inline void promote(SparseRow& r) {
  if (r.big) return;
  r.wide.reserve(r.small.size());
  for (const auto& [c, v] : r.small) r.wide.emplace_back(c, mpz_class(static_cast<long>(v)));
  r.small.clear();
  r.small.shrink_to_fit();
  r.big = true;
}

inline void try_demote(SparseRow& r) {
  if (!r.big) return;
  for (const auto& [c, v] : r.wide)
    if (!v.fits_slong_p() || v.get_si() == INT64_MIN) return;
  r.small.reserve(r.wide.size());
  for (const auto& [c, v] : r.wide) r.small.emplace_back(c, v.get_si());
  r.wide.clear();
  r.wide.shrink_to_fit();
  r.big = false;
}

// Divide by the gcd of the entries and make the leading entry positive.
inline void make_primitive(SparseRow& r) {
  if (r.empty()) return;
  if (!r.big) {
    u128 g = 0;
    for (const auto& [c, v] : r.small) {
      g = gcd128(g, abs128(v));
      if (g == 1) break;
    }
    bool neg = r.small.front().second < 0;
    if (g > 1 || neg) {
      long long gg = static_cast<long long>(g);
      for (auto& [c, v] : r.small) {
        v /= gg;
        if (neg) v = -v;
      }
    }
  } else {
    mpz_class g = 0;
    for (const auto& [c, v] : r.wide) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    bool neg = r.wide.front().second < 0;
    if (neg) g = -g;
    if (g != 1)
      for (auto& [c, v] : r.wide) v /= g;
    try_demote(r);
  }
}

// Builds a primitive row from sorted, deduplicated (col, value) pairs.
// Magnitudes are capped at INT64_MAX (not INT64_MIN) so negation and the
// content gcd always stay inside long long.
inline SparseRow row_from_i128(std::vector<std::pair<int32_t, i128>>& acc) {
  SparseRow r;
  bool fits = true;
  for (const auto& [c, v] : acc)
    if (v > i128(INT64_MAX) || v < -i128(INT64_MAX)) {
      fits = false;
      break;
    }
  if (fits) {
    r.small.reserve(acc.size());
    for (const auto& [c, v] : acc)
      if (v != 0) r.small.emplace_back(c, static_cast<long long>(v));
  } else {
    r.big = true;
    r.wide.reserve(acc.size());
    for (const auto& [c, v] : acc) {
      if (v == 0) continue;
      u128 a = abs128(v);
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(u128), 0, 0, &a);
      if (v < 0) z = -z;
      r.wide.emplace_back(c, z);
    }
  }
  make_primitive(r);
  return r;
}

// r <- (a*r - b*p) / content, where a = lead(p)/g, b = lead(r)/g. Both rows
// are primitive with equal leading columns; the lead cancels exactly.
inline void reduce_step(SparseRow& r, const SparseRow& p) {
  if (r.big || p.big) {
    promote(r);
    SparseRow pc = p;
    promote(pc);
    mpz_class g, a, b;
    mpz_gcd(g.get_mpz_t(), pc.wide.front().second.get_mpz_t(),
            r.wide.front().second.get_mpz_t());
    a = pc.wide.front().second / g;
    b = r.wide.front().second / g;
    std::vector<std::pair<int32_t, mpz_class>> out;
    out.reserve(r.wide.size() + pc.wide.size());
    std::size_t i = 0, j = 0;
    mpz_class v;
    while (i < r.wide.size() || j < pc.wide.size()) {
      if (j == pc.wide.size() ||
          (i < r.wide.size() && r.wide[i].first < pc.wide[j].first)) {
        out.emplace_back(r.wide[i].first, a * r.wide[i].second);
        ++i;
      } else if (i == r.wide.size() || pc.wide[j].first < r.wide[i].first) {
        out.emplace_back(pc.wide[j].first, -b * pc.wide[j].second);
        ++j;
      } else {
        v = a * r.wide[i].second - b * pc.wide[j].second;
        if (v != 0) out.emplace_back(r.wide[i].first, v);
        ++i;
        ++j;
      }
    }
    r.wide = std::move(out);
    make_primitive(r);
    return;
  }

  long long pl = p.small.front().second, rl = r.small.front().second;
  long long g = std::gcd(pl, rl);
  long long a = pl / g, b = rl / g;
  // a > 0 because leads of primitive rows are positive.
  static thread_local std::vector<std::pair<int32_t, i128>> acc;
  acc.clear();
  acc.reserve(r.small.size() + p.small.size());
  std::size_t i = 0, j = 0;
  while (i < r.small.size() || j < p.small.size()) {
    if (j == p.small.size() ||
        (i < r.small.size() && r.small[i].first < p.small[j].first)) {
      acc.emplace_back(r.small[i].first, i128(a) * r.small[i].second);
      ++i;
    } else if (i == r.small.size() || p.small[j].first < r.small[i].first) {
      acc.emplace_back(p.small[j].first, -i128(b) * p.small[j].second);
      ++j;
    } else {
      i128 v = i128(a) * r.small[i].second - i128(b) * p.small[j].second;
      if (v != 0) acc.emplace_back(r.small[i].first, v);
      ++i;
      ++j;
    }
  }
  r = row_from_i128(acc);
}

// Row echelon by insertion: one pivot row per leading column.
class Echelon {
 public:
  // Reduces r against the stored pivots; a surviving remainder becomes a new
  // pivot. Returns whether the row increased the rank.
  bool insert(SparseRow r) {
    while (!r.empty()) {
      auto it = pivot_of_col_.find(r.lead());
      if (it == pivot_of_col_.end()) {
        pivot_of_col_.emplace(r.lead(), rows_.size());
        rows_.push_back(std::move(r));
        return true;
      }
      reduce_step(r, rows_[static_cast<std::size_t>(it->second)]);
    }
    return false;
  }

  long rank() const { return static_cast<long>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  std::vector<SparseRow> take_rows() { return std::move(rows_); }

 private:
  std::unordered_map<int32_t, int> pivot_of_col_;
  std::vector<SparseRow> rows_;
};

}  // namespace lin

// ---------------------------------------------------------------------------
// Workspace: per-model computation state. Holds the word dictionaries, the
// Witt certification table, and the computed bases and image ranks, degree
// by degree. Models are immutable once a workspace is built.
// ---------------------------------------------------------------------------
class Workspace {
 public:
  explicit Workspace(LieModel model, std::size_t max_words = kDefaultMaxWords)
      : model_(std::move(model)), max_words_(max_words) {
    model_.validate();
    for (int i = 0; i < model_.generator_count(); ++i)
      gen_dims_.add(model_.degree(i), 1);
  }

  const LieModel& model() const { return model_; }

  // Number of tensor words of degree n, from the recurrence
  // c(n) = sum_g c(n - deg g); exact, no materialization.
  const mpz_class& tv_dim(int n) {
    if (n < 0) throw domain_error("tv_dim needs n >= 0");
    while (static_cast<int>(tv_dims_.size()) <= n) {
      int m = static_cast<int>(tv_dims_.size());
      if (m == 0) {
        tv_dims_.emplace_back(1);
        continue;
      }
      mpz_class c = 0;
      for (int i = 0; i < model_.generator_count(); ++i)
        if (m - model_.degree(i) >= 0)
          c += tv_dims_[static_cast<std::size_t>(m - model_.degree(i))];
      tv_dims_.push_back(c);
    }
    return tv_dims_[static_cast<std::size_t>(n)];
  }

  long witt_dim(int n) {
    if (n < 1) throw domain_error("witt_dim needs n >= 1");
    if (n > witt_order_) {
      witt_ = witt_decompose(gen_dims_, n);
      witt_order_ = n;
    }
    return witt_.dim(n);
  }

  // Dimension of L_n; computes (and certifies) the basis.
  long lie_dim(int n) { return static_cast<long>(basis_rows(n).size()); }

  // Row-reduced basis of L_n in tensor-word coordinates. Certified against
  // the Witt dimension on every call path.
  const std::vector<lin::SparseRow>& basis_rows(int n) {
    if (n < 1) throw domain_error("lie_basis needs degree >= 1");
    if (auto it = basis_.find(n); it != basis_.end()) return it->second;
    ensure_budget(n);

    lin::Echelon ech;
    for (int g = 0; g < model_.generator_count(); ++g)
      if (model_.degree(g) == n) ech.insert(generator_row(n, g));
    for (int g = 0; g < model_.generator_count(); ++g) {
      int m = n - model_.degree(g);
      if (m < 1) continue;
      const std::vector<lin::SparseRow>& lower = basis_rows(m);
      for (const lin::SparseRow& y : lower) ech.insert(bracket_row(g, m, y));
    }

    long predicted = witt_dim(n);
    if (ech.rank() != predicted)
      throw internal_error(
          "lie_basis dimension mismatch at degree " + std::to_string(n) +
          ": elimination rank " + std::to_string(ech.rank()) +
          ", Witt prediction " + std::to_string(predicted));
    return basis_.emplace(n, ech.take_rows()).first->second;
  }

  std::vector<LieElement> lie_basis(int n) {
    std::vector<LieElement> out;
    for (const lin::SparseRow& r : basis_rows(n))
      out.push_back(element_from_row(n, r));
    return out;
  }

  // Rank of d : L_n -> (degree n-1 words).
  long image_rank(int n) {
    if (n < 1) throw domain_error("image_rank needs degree >= 1");
    if (auto it = image_rank_.find(n); it != image_rank_.end()) return it->second;
    lin::Echelon ech;
    for (const lin::SparseRow& r : basis_rows(n))
      ech.insert(differential_row(n, r));
    return image_rank_.emplace(n, ech.rank()).first->second;
  }

  // dim ker(d: L_n -> L_{n-1}) - dim im(d: L_{n+1} -> L_n).
  long homology_dim(int n) {
    if (n < 1) throw domain_error("homology_dim needs degree >= 1");
    long kernel = lie_dim(n) - image_rank(n);
    return kernel - image_rank(n + 1);
  }

  // d of a degree-n coordinate row, as a degree n-1 coordinate row.
  lin::SparseRow differential_row(int n, const lin::SparseRow& r) {
    if (n == 1 || r.empty()) return {};
    ensure_budget(n);
    ensure_budget(n - 1);
    std::map<int32_t, mpq_class> acc;
    auto expand = [&](const Word& w, const mpq_class& coef) {
      int prefix_degree = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        int gi = static_cast<unsigned char>(w[i]);
        const LieElement& dg = model_.differential_of(gi);
        if (!dg.is_zero()) {
          mpq_class sign = (prefix_degree % 2 == 0) ? coef : -coef;
          for (const auto& [dw, dc] : dg.terms) {
            mpq_class v = sign * dc;
            int32_t col = col_id(n - 1, w.substr(0, i) + dw + w.substr(i + 1));
            auto [it, fresh] = acc.emplace(col, v);
            if (!fresh) it->second += v;
          }
        }
        prefix_degree += model_.degree(gi);
      }
    };
    if (!r.big)
      for (const auto& [c, v] : r.small)
        expand(words_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)],
               mpq_class(static_cast<long>(v)));
    else
      for (const auto& [c, v] : r.wide)
        expand(words_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)],
               mpq_class(v));
    return row_from_rationals(acc);
  }

  bool d2_vanishes_on_basis(int n) {
    for (const lin::SparseRow& r : basis_rows(n)) {
      lin::SparseRow dr = differential_row(n, r);
      if (dr.empty()) continue;
      if (!differential_row(n - 1, dr).empty()) return false;
    }
    return true;
  }

  LieElement element_from_row(int n, const lin::SparseRow& r) const {
    LieElement x;
    x.degree = n;
    const std::vector<Word>& table = words_.at(static_cast<std::size_t>(n));
    if (!r.big)
      for (const auto& [c, v] : r.small)
        x.terms.emplace(table[static_cast<std::size_t>(c)], mpq_class(static_cast<long>(v)));
    else
      for (const auto& [c, v] : r.wide)
        x.terms.emplace(table[static_cast<std::size_t>(c)], mpq_class(v));
    return x;
  }

  lin::SparseRow row_from_element(const LieElement& x) {
    if (x.is_zero()) return {};
    ensure_budget(x.degree);
    std::map<int32_t, mpq_class> acc;
    for (const auto& [w, c] : x.terms) {
      if (model_.word_degree(w) != x.degree)
        throw domain_error("inhomogeneous Lie element");
      acc.emplace(col_id(x.degree, w), c);
    }
    return row_from_rationals(acc);
  }

 private:
  void ensure_budget(int degree) {
    if (tv_dim(degree) > static_cast<long>(max_words_))
      throw budget_error("tensor-word budget exceeded at degree " +
                         std::to_string(degree) + ": " + tv_dim(degree).get_str() +
                         " words, limit " + std::to_string(max_words_));
    if (static_cast<std::size_t>(degree) >= words_.size()) {
      words_.resize(static_cast<std::size_t>(degree) + 1);
      ids_.resize(static_cast<std::size_t>(degree) + 1);
    }
  }

  int32_t col_id(int degree, const Word& w) {
    auto& ids = ids_[static_cast<std::size_t>(degree)];
    auto [it, fresh] = ids.emplace(w, static_cast<int32_t>(ids.size()));
    if (fresh) words_[static_cast<std::size_t>(degree)].push_back(w);
    return it->second;
  }

  lin::SparseRow generator_row(int n, int g) {
    std::vector<std::pair<int32_t, lin::i128>> acc{
        {col_id(n, Word(1, static_cast<char>(g))), lin::i128(1)}};
    return lin::row_from_i128(acc);
  }

  // Row of [g, y] for a generator g and a row y of degree m (so n = deg g + m):
  // g(x)w with coefficient v and w(x)g with coefficient -(-1)^{deg g * m} v.
  lin::SparseRow bracket_row(int g, int m, const lin::SparseRow& y) {
    const int dg = model_.degree(g);
    const int n = dg + m;
    const bool plus = (dg % 2) && (m % 2);  // -(-1)^{dg*m} = +1
    const Word gw(1, static_cast<char>(g));
    const std::vector<Word>& table = words_[static_cast<std::size_t>(m)];

    if (!y.big) {
      std::vector<std::pair<int32_t, lin::i128>> acc;
      acc.reserve(2 * y.small.size());
      for (const auto& [c, v] : y.small) {
        const Word& w = table[static_cast<std::size_t>(c)];
        acc.emplace_back(col_id(n, gw + w), lin::i128(v));
        acc.emplace_back(col_id(n, w + gw), plus ? lin::i128(v) : -lin::i128(v));
      }
      std::sort(acc.begin(), acc.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<std::pair<int32_t, lin::i128>> merged;
      merged.reserve(acc.size());
      for (const auto& [c, v] : acc) {
        if (!merged.empty() && merged.back().first == c)
          merged.back().second += v;
        else
          merged.emplace_back(c, v);
      }
      std::erase_if(merged, [](const auto& p) { return p.second == 0; });
      return lin::row_from_i128(merged);
    }

    std::map<int32_t, mpq_class> acc;
    for (const auto& [c, v] : y.wide) {
      const Word& w = table[static_cast<std::size_t>(c)];
      mpq_class qv(v);
      auto put = [&](int32_t col, const mpq_class& val) {
        auto [it, fresh] = acc.emplace(col, val);
        if (!fresh) it->second += val;
      };
      put(col_id(n, gw + w), qv);
      put(col_id(n, w + gw), plus ? qv : mpq_class(-qv));
    }
    return row_from_rationals(acc);
  }

  // Clears denominators and contents: the primitive integer representative.
  lin::SparseRow row_from_rationals(const std::map<int32_t, mpq_class>& acc) {
    mpz_class l = 1;
    for (const auto& [c, v] : acc)
      if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    lin::SparseRow r;
    r.big = true;
    for (const auto& [c, v] : acc) {
      if (v == 0) continue;
      mpz_class z = v.get_num() * (l / v.get_den());
      r.wide.emplace_back(c, std::move(z));
    }
    lin::make_primitive(r);
    return r;
  }

  LieModel model_;
  std::size_t max_words_;
  GradedDims gen_dims_;
  GradedDims witt_{0};
  int witt_order_ = 0;
  std::vector<mpz_class> tv_dims_;
  std::vector<std::vector<Word>> words_;
  std::vector<std::unordered_map<Word, int32_t>> ids_;
  std::map<int, std::vector<lin::SparseRow>> basis_;
  std::map<int, long> image_rank_;
};

// Convenience wrappers; a Workspace is the efficient path for repeated
// queries against one model.
inline std::vector<LieElement> lie_basis(const LieModel& model, int n,
                                         std::size_t max_words = kDefaultMaxWords) {
  Workspace ws(model, max_words);
  return ws.lie_basis(n);
}

inline long homology_dim(const LieModel& model, int n,
                         std::size_t max_words = kDefaultMaxWords) {
  Workspace ws(model, max_words);
  return ws.homology_dim(n);
}

}  // namespace rh4
