#pragma once
// Test-only brute-force oracle: free graded Lie algebra dimensions computed
// from scratch with dense exact linear algebra over all left-normed bracket
// sequences. Deliberately independent of the library's elimination engine;
// only <gmpxx.h> is shared.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace brute {

// A tensor element: word -> coefficient, words over letters 'a', 'b', ...
using Elem = std::map<std::string, mpq_class>;

inline void add_to(Elem& e, const std::string& w, const mpq_class& c) {
  auto [it, fresh] = e.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

inline Elem bracket(const Elem& x, int degx, const Elem& y, int degy) {
  Elem r;
  mpq_class sign = (degx % 2 && degy % 2) ? 1 : -1;  // -(-1)^{|x||y|}
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      add_to(r, u + v, cu * cv);
      add_to(r, v + u, sign * cu * cv);
    }
  return r;
}

// All sequences of generator indices with the given total degree.
inline void sequences(const std::vector<int>& degrees, int total,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (std::size_t g = 0; g < degrees.size(); ++g) {
    if (degrees[g] > total) continue;
    cur.push_back(static_cast<int>(g));
    sequences(degrees, total - degrees[g], cur, out);
    cur.pop_back();
  }
}

// Rank of a family of tensor elements by dense Gaussian elimination keyed
// on the lexicographically smallest word.
inline long rank_of(const std::vector<Elem>& elems) {
  std::map<std::string, Elem> pivots;  // lead word -> reduced vector
  long rank = 0;
  for (const Elem& e : elems) {
    Elem v = e;
    while (!v.empty()) {
      const std::string& lead = v.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        mpq_class inv = 1 / v.begin()->second;
        for (auto& [w, c] : v) c *= inv;
        pivots.emplace(lead, std::move(v));
        ++rank;
        break;
      }
      mpq_class f = v.begin()->second;
      for (const auto& [w, c] : it->second) add_to(v, w, -f * c);
    }
  }
  return rank;
}

// Left-normed brackets of every generator sequence of total degree n; spans
// the degree-n component of the free graded Lie algebra.
inline std::vector<Elem> lie_span(const std::vector<int>& degrees, int n) {
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  sequences(degrees, n, cur, seqs);
  std::vector<Elem> out;
  for (const std::vector<int>& s : seqs) {
    // right-fold: [g_1, [g_2, [... g_k]]]
    Elem v;
    int degv = degrees[static_cast<std::size_t>(s.back())];
    v.emplace(std::string(1, static_cast<char>('a' + s.back())), 1);
    for (int i = static_cast<int>(s.size()) - 2; i >= 0; --i) {
      Elem g;
      int degg = degrees[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
      g.emplace(std::string(1, static_cast<char>('a' + s[static_cast<std::size_t>(i)])), 1);
      v = bracket(g, degg, v, degv);
      degv += degg;
    }
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

inline long lie_dim(const std::vector<int>& degrees, int n) {
  return rank_of(lie_span(degrees, n));
}

// Leibniz extension of a generator differential (letter index -> element).
inline Elem differential(const std::vector<int>& degrees,
                         const std::map<char, Elem>& diffs, const Elem& x) {
  Elem r;
  for (const auto& [w, c] : x) {
    int prefix = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = diffs.find(w[i]);
      if (it != diffs.end()) {
        mpq_class sign = (prefix % 2 == 0) ? c : -c;
        for (const auto& [dw, dc] : it->second)
          add_to(r, w.substr(0, i) + dw + w.substr(i + 1), sign * dc);
      }
      prefix += degrees[static_cast<std::size_t>(w[i] - 'a')];
    }
  }
  return r;
}

// dim H_n(L, d) = (dim L_n - rank d L_n) - rank d L_{n+1}, everything from
// spanning sets.
inline long homology_dim(const std::vector<int>& degrees,
                         const std::map<char, Elem>& diffs, int n) {
  std::vector<Elem> span_n = lie_span(degrees, n);
  std::vector<Elem> span_up = lie_span(degrees, n + 1);
  std::vector<Elem> d_n, d_up;
  for (const Elem& e : span_n) d_n.push_back(differential(degrees, diffs, e));
  for (const Elem& e : span_up) d_up.push_back(differential(degrees, diffs, e));
  return rank_of(span_n) - rank_of(d_n) - rank_of(d_up);
}

}  // namespace brute
