// Acceptance suite: one pass/fail line per criterion, exact equality
// throughout. Stated runtime budgets are enforced. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rh4/fourfold.hpp"
#include "rh4/gauge.hpp"
#include "rh4/series.hpp"

using namespace rh4;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class A, class B>
void expect_eq(const A& a, const B& b, const std::string& what) {
  if (!(a == b)) {
    std::ostringstream s;
    s << what << ": got " << a << ", expected " << b;
    throw Failure(s.str());
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// Workspaces are shared across criteria so the heavy degree-8 bases are
// computed once per intersection form.
std::map<std::pair<int, int>, std::unique_ptr<Workspace>> g_ws;

Workspace& workspace(int bp, int bm) {
  auto key = std::make_pair(bp, bm);
  auto it = g_ws.find(key);
  if (it == g_ws.end())
    it = g_ws.emplace(key, std::make_unique<Workspace>(
                               fourfold_model({bp, bm}))).first;
  return *it->second;
}

std::vector<IntersectionForm> splits(int b2) {
  std::vector<IntersectionForm> out;
  for (int bp = b2; bp >= 0; --bp) out.push_back({bp, b2 - bp});
  return out;
}

std::map<int, long> rank_table_via(Workspace& ws, int max_k) {
  std::map<int, long> t;
  for (int k = 2; k <= max_k; ++k) t[k] = ws.homology_dim(k - 1);
  return t;
}

// --- criteria -------------------------------------------------------------

void criterion1_low_degree_agreement() {
  for (int b2 = 2; b2 <= 4; ++b2) {
    std::array<long, 3> low = ranks_low_degree(b2);
    for (const IntersectionForm& f : splits(b2)) {
      std::map<int, long> t = rank_table_via(workspace(f.b2_plus, f.b2_minus), 4);
      std::string tag = "b2=" + std::to_string(b2) + " split (" +
                        std::to_string(f.b2_plus) + "," +
                        std::to_string(f.b2_minus) + ")";
      expect_eq(t[2], low[0], tag + " pi_2");
      expect_eq(t[3], low[1], tag + " pi_3");
      expect_eq(t[4], low[2], tag + " pi_4");
    }
  }
}

void criterion2_closed_vs_model() {
  for (int b2 : {2, 3}) {
    std::map<int, long> t = rank_table_via(workspace(b2, 0), 8);
    for (int n = 1; n <= 7; ++n)
      expect_eq(ranks_closed(b2, n), t[n + 1],
                "b2=" + std::to_string(b2) + " n=" + std::to_string(n));
  }
}

void criterion3_symbolic_range() {
  for (long b2 = 2; b2 <= 50; ++b2) {
    expect_eq(ranks_closed(b2, 1), b2, "pi_2 at b2=" + std::to_string(b2));
    expect_eq(ranks_closed(b2, 2), b2 * (b2 + 1) / 2 - 1,
              "pi_3 at b2=" + std::to_string(b2));
    expect_eq(ranks_closed(b2, 3), b2 * (b2 * b2 - 4) / 3,
              "pi_4 at b2=" + std::to_string(b2));
  }
}

void criterion4_signature_independence() {
  // tables through pi_9, covering homology degrees 1..8
  std::map<int, long> ref = rank_table_via(workspace(3, 0), 9);
  for (const IntersectionForm& f : splits(3)) {
    std::map<int, long> t = rank_table_via(workspace(f.b2_plus, f.b2_minus), 9);
    expect(t == ref, "rank table for split (" + std::to_string(f.b2_plus) +
                         "," + std::to_string(f.b2_minus) +
                         ") differs from (3,0)");
  }
}

void criterion5_witt_certification() {
  for (int b2 = 0; b2 <= 4; ++b2) {
    Workspace& ws = workspace(b2, 0);
    GradedDims gens;
    if (b2 > 0) gens.add(1, b2);
    gens.add(3, 1);
    GradedDims witt = witt_decompose(gens, 8);
    for (int n = 1; n <= 8; ++n)
      expect_eq(ws.lie_dim(n), witt.dim(n),
                "b2=" + std::to_string(b2) + " degree " + std::to_string(n));
  }
  // pure-generator models L(w) and L(v)
  Workspace lw(LieModel({{"w", 3}}));
  Workspace lv(LieModel({{"v", 1}}));
  GradedDims w3, v1;
  w3.add(3, 1);
  v1.add(1, 1);
  GradedDims witt_w = witt_decompose(w3, 8), witt_v = witt_decompose(v1, 8);
  for (int n = 1; n <= 8; ++n) {
    expect_eq(lw.lie_dim(n), witt_w.dim(n), "L(w) degree " + std::to_string(n));
    expect_eq(lv.lie_dim(n), witt_v.dim(n), "L(v) degree " + std::to_string(n));
  }
}

void criterion6_babenko_pinning() {
  for (long m = 1; m <= 3; ++m) {
    std::map<int, long> ranks = ranks_suspension_babenko(
        TruncatedSeries::from_coeffs({1, mpq_class(m)}), 12);
    GradedDims v;
    v.add(1, m);
    GradedDims witt = witt_decompose(v, 12);
    for (int j = 1; j <= 12; ++j)
      expect_eq(ranks[j], witt.dim(j),
                "m=" + std::to_string(m) + " j=" + std::to_string(j));
  }
}

void criterion7_elliptic_cases() {
  std::map<int, long> s4 = rank_table_via(workspace(0, 0), 8);
  for (int k = 2; k <= 8; ++k)
    expect_eq(s4[k], (k == 4 || k == 7) ? 1L : 0L,
              "S^4 pi_" + std::to_string(k));
  std::map<int, long> cp2 = rank_table_via(workspace(1, 0), 6);
  for (int k = 2; k <= 6; ++k)
    expect_eq(cp2[k], (k == 2 || k == 5) ? 1L : 0L,
              "CP^2 pi_" + std::to_string(k));
}

void criterion8_su3_rings() {
  for (long b2 : {1L, 2L, 3L, 5L}) {
    BundleContext ctx{{Family::SU, 3}, b2};
    RingPresentation bt = loop_presentation(ctx, Space::loop_btilde, 8);
    std::map<int, long> bt_expect{{1, b2 + 1}, {3, b2}};
    expect(bt.generators == bt_expect,
           "loop-btilde ring at b2=" + std::to_string(b2));
    RingPresentation bs = loop_presentation(ctx, Space::loop_bstar, 8);
    std::map<int, long> bs_expect{{1, b2 + 1}, {3, b2 + 1}, {5, 1}};
    expect(bs.generators == bs_expect,
           "loop-bstar ring at b2=" + std::to_string(b2));
  }
}

void criterion9_su2_branches() {
  for (long b2 : {1L, 2L, 3L, 5L}) {
    BundleContext odd{{Family::SU, 2}, b2, Parity::odd, Parity::unspecified};
    RingPresentation bt = loop_presentation(odd, Space::loop_btilde, 6);
    std::map<int, long> bt_expect{{1, b2}};
    expect(bt.generators == bt_expect,
           "form-odd loop-btilde at b2=" + std::to_string(b2));
    RingPresentation bs = loop_presentation(odd, Space::loop_bstar, 6);
    std::map<int, long> bs_expect{{1, b2}, {3, 1}};
    expect(bs.generators == bs_expect,
           "form-odd loop-bstar at b2=" + std::to_string(b2));

    BundleContext eo{{Family::SU, 2}, b2, Parity::even, Parity::odd};
    expect(loop_presentation(eo, Space::loop_bstar, 6).generators == bs_expect,
           "form-even/c2-odd loop-bstar at b2=" + std::to_string(b2));

    BundleContext ee{{Family::SU, 2}, b2, Parity::even, Parity::even};
    bool refused = false;
    try {
      loop_presentation(ee, Space::loop_bstar, 6);
    } catch (const not_simply_connected_error& e) {
      refused = true;
      expect(e.pi1 == "Z2", "refusal must carry the pi_1 = Z2 diagnosis");
    }
    expect(refused, "form-even/c2-even must refuse loop-bstar");
  }
}

void criterion10_generator_totals() {
  std::vector<SimpleGroup> groups;
  for (int n = 2; n <= 9; ++n) groups.push_back({Family::SU, n});
  for (int n = 1; n <= 8; ++n) groups.push_back({Family::Sp, n});
  for (int n = 5; n <= 17; ++n) groups.push_back({Family::Spin, n});
  groups.push_back({Family::G2, 0});
  groups.push_back({Family::F4, 0});
  groups.push_back({Family::E6, 0});
  groups.push_back({Family::E7, 0});
  groups.push_back({Family::E8, 0});
  for (const SimpleGroup& g : groups) {
    long rk = g.rank();
    expect(rk <= 8, "group enumeration overshot rank 8: " + g.name());
    int bound = full_degree_bound(g);
    for (long b2 = 0; b2 <= 10; ++b2) {
      BundleContext ctx{g, b2};
      if (g.family == Family::SU && g.n == 2) ctx.form_parity = Parity::odd;
      std::string tag = g.name() + " b2=" + std::to_string(b2);
      expect_eq(cohomology_presentation(ctx, Space::gauge_group, bound).total(),
                (b2 + 2) * rk - 1, tag + " gauge-group total");
      expect_eq(cohomology_presentation(ctx, Space::btilde, bound).total(),
                (b2 + 1) * rk - 1, tag + " btilde total");
      expect_eq(cohomology_presentation(ctx, Space::bstar, bound).total(),
                (b2 + 2) * rk - 1, tag + " bstar total");
      expect_eq(loop_presentation(ctx, Space::loop_btilde, bound).total(),
                (b2 + 1) * rk - 1, tag + " loop-btilde total");
      expect_eq(loop_presentation(ctx, Space::loop_bstar, bound).total(),
                (b2 + 2) * rk - 1, tag + " loop-bstar total");
    }
  }
}

void criterion11_d_squared() {
  for (int b2 = 0; b2 <= 4; ++b2)
    for (const IntersectionForm& f : splits(b2)) {
      Workspace& ws = workspace(f.b2_plus, f.b2_minus);
      for (int n = 1; n <= 8; ++n)
        expect(ws.d2_vanishes_on_basis(n),
               "d^2 != 0 on a basis element: split (" +
                   std::to_string(f.b2_plus) + "," +
                   std::to_string(f.b2_minus) + ") degree " + std::to_string(n));
    }
}

void criterion12_discrepancy_detection() {
  ConsistencyReport rep = consistency_report({{Family::SU, 3}, 2}, 8);
  expect(rep.btilde.mismatches.empty(), "btilde must have no mismatches");
  expect(rep.bstar.mismatches == std::vector<int>{3, 7},
         "bstar mismatches must be exactly loop-degrees 3 and 7");
}

void criterion13_milnor_moore_series() {
  expect(loop_hilbert({1, 1}, 3) == TruncatedSeries::from_coeffs({1, 2, 3, 4}),
         "series for (1,1) through t^3");
  expect(loop_hilbert({1, 0}, 5) ==
             TruncatedSeries::from_coeffs({1, 1, 0, 0, 1, 1}),
         "series for (1,0) through t^5");
  expect(loop_hilbert({0, 0}, 6) ==
             TruncatedSeries::from_coeffs({1, 0, 0, 1, 0, 0, 1}),
         "series for (0,0) through t^6");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = unbounded
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "low-degree formula agreement for b2 in {2,3,4}, all splits", 60,
       criterion1_low_degree_agreement},
      {2, "closed-vs-model agreement for b2 in {2,3}, n <= 7", 120,
       criterion2_closed_vs_model},
      {3, "closed formula matches the printed polynomials for b2 in 2..50", 1,
       criterion3_symbolic_range},
      {4, "signature independence at b2 = 3 through homology degree 8", 0,
       criterion4_signature_independence},
      {5, "Witt certification of every basis, b2 <= 4, degrees <= 8", 0,
       criterion5_witt_certification},
      {6, "Babenko convention pinned by the Witt oracle, j <= 12", 0,
       criterion6_babenko_pinning},
      {7, "elliptic cases: the (0,0) and (1,0) rank tables", 0,
       criterion7_elliptic_cases},
      {8, "SU(3) loop rings at b2 in {1,2,3,5}", 0, criterion8_su3_rings},
      {9, "SU(2) branches including the pi_1 = Z2 refusal", 0,
       criterion9_su2_branches},
      {10, "generator totals for rk G <= 8, b2 <= 10", 5,
       criterion10_generator_totals},
      {11, "d^2 = 0 on every basis element, b2 <= 4, degrees <= 8", 0,
       criterion11_d_squared},
      {12, "bstar discrepancy detected at loop-degrees 3 and 7 only", 0,
       criterion12_discrepancy_detection},
      {13, "Milnor-Moore loop homology series", 0, criterion13_milnor_moore_series},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = true;
    try {
      c.run();
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      why = "exceeded the " + std::to_string(c.budget_seconds) + "s budget";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.name, secs, why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed;
}
