#pragma once
// Homotopy ranks of compact simple simply connected Lie groups from their
// exponents, and the ring presentations for the gauge group, the spaces of
// connections modulo gauge, and their based loop spaces, over a simply
// connected four-manifold. Includes the SU(2) connectivity case analysis.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rh4/errors.hpp"

namespace rh4 {

enum class Family { SU, Spin, Sp, G2, F4, E6, E7, E8 };

struct SimpleGroup {
  Family family = Family::SU;
  int n = 0;  // parameter for SU/Spin/Sp; ignored for exceptional families

  void validate() const {
    switch (family) {
      case Family::SU:
        if (n < 2) throw domain_error("SU(n) requires n >= 2");
        break;
      case Family::Spin:
        if (n < 5) throw domain_error("Spin(n) requires n >= 5");
        break;
      case Family::Sp:
        if (n < 1) throw domain_error("Sp(n) requires n >= 1");
        break;
      default:
        break;
    }
  }

  int rank() const {
    validate();
    switch (family) {
      case Family::SU: return n - 1;
      case Family::Spin: return n / 2;
      case Family::Sp: return n;
      case Family::G2: return 2;
      case Family::F4: return 4;
      case Family::E6: return 6;
      case Family::E7: return 7;
      case Family::E8: return 8;
    }
    return 0;
  }

  // Exponent multiset (sorted); rational homotopy sits in degrees 2m+1.
  std::vector<int> exponents() const {
    validate();
    std::vector<int> e;
    switch (family) {
      case Family::SU:
        for (int m = 1; m <= n - 1; ++m) e.push_back(m);
        break;
      case Family::Sp:
        for (int m = 1; m <= 2 * n - 1; m += 2) e.push_back(m);
        break;
      case Family::Spin:
        if (n % 2 == 1) {
          for (int m = 1; m <= n - 2; m += 2) e.push_back(m);
        } else {
          for (int m = 1; m <= n - 3; m += 2) e.push_back(m);
          e.push_back(n / 2 - 1);
        }
        break;
      case Family::G2: e = {1, 5}; break;
      case Family::F4: e = {1, 5, 7, 11}; break;
      case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
      case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
      case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
    }
    std::sort(e.begin(), e.end());
    return e;
  }

  int max_exponent() const { return exponents().back(); }

  std::string name() const {
    switch (family) {
      case Family::SU: return "SU" + std::to_string(n);
      case Family::Spin: return "Spin" + std::to_string(n);
      case Family::Sp: return "Sp" + std::to_string(n);
      case Family::G2: return "G2";
      case Family::F4: return "F4";
      case Family::E6: return "E6";
      case Family::E7: return "E7";
      case Family::E8: return "E8";
    }
    return "?";
  }

  // Accepts SU<n>, Spin<n>, Sp<n>, G2, F4, E6, E7, E8.
  static SimpleGroup parse(const std::string& s);
};

namespace detail {

inline int parse_group_param(const std::string& s, std::size_t prefix) {
  if (s.size() == prefix) throw domain_error("group " + s + " needs a parameter");
  int value = 0;
  for (std::size_t i = prefix; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw domain_error("unknown group name: " + s);
    value = value * 10 + (s[i] - '0');
    if (value > 1000) throw domain_error("group parameter out of range: " + s);
  }
  return value;
}

void exponent_tables_selfcheck();

}  // namespace detail

inline SimpleGroup SimpleGroup::parse(const std::string& s) {
  SimpleGroup g;
  if (s == "G2") g.family = Family::G2;
  else if (s == "F4") g.family = Family::F4;
  else if (s == "E6") g.family = Family::E6;
  else if (s == "E7") g.family = Family::E7;
  else if (s == "E8") g.family = Family::E8;
  else if (s.rfind("Spin", 0) == 0) {
    g.family = Family::Spin;
    g.n = detail::parse_group_param(s, 4);
  } else if (s.rfind("SU", 0) == 0) {
    g.family = Family::SU;
    g.n = detail::parse_group_param(s, 2);
  } else if (s.rfind("Sp", 0) == 0) {
    g.family = Family::Sp;
    g.n = detail::parse_group_param(s, 2);
  } else {
    throw domain_error("unknown group name: " + s);
  }
  g.validate();
  return g;
}

// rk pi_j(G) (x) Q: the multiplicity of (j-1)/2 in the exponent multiset for
// odd j >= 3, zero otherwise. Spin(4k) has a repeated exponent, so the value
// can be 2.
inline int pi_rank(const SimpleGroup& g, int j) {
  detail::exponent_tables_selfcheck();
  g.validate();
  if (j <= 2 || j % 2 == 0) return 0;
  int m = (j - 1) / 2;
  int count = 0;
  for (int e : g.exponents())
    if (e == m) ++count;
  return count;
}

namespace detail {

// The tables are embedded static data; verify them once against the SU(3)
// and SU(2) rational ranks before first use.
inline void exponent_tables_selfcheck() {
  static const bool ok = [] {
    SimpleGroup su3{Family::SU, 3};
    SimpleGroup su2{Family::SU, 2};
    auto rk = [](const SimpleGroup& g, int j) {
      int m = (j - 1) / 2;
      int c = 0;
      for (int e : g.exponents())
        if (e == m) ++c;
      return (j > 2 && j % 2 == 1) ? c : 0;
    };
    if (rk(su3, 3) != 1 || rk(su3, 5) != 1 || rk(su3, 7) != 0)
      throw internal_error("exponent table self-check failed for SU(3)");
    if (rk(su2, 3) != 1 || rk(su2, 4) != 0 || rk(su2, 5) != 0)
      throw internal_error("exponent table self-check failed for SU(2)");
    return true;
  }();
  (void)ok;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spaces and bundle context.
// ---------------------------------------------------------------------------
enum class Space { gauge_group, btilde, bstar, loop_btilde, loop_bstar };

inline const char* space_name(Space s) {
  switch (s) {
    case Space::gauge_group: return "gauge-group";
    case Space::btilde: return "btilde";
    case Space::bstar: return "bstar";
    case Space::loop_btilde: return "loop-btilde";
    case Space::loop_bstar: return "loop-bstar";
  }
  return "?";
}

enum class Parity { odd, even, unspecified };

struct BundleContext {
  SimpleGroup group;
  long b2 = 0;
  Parity form_parity = Parity::unspecified;  // consulted only for SU(2)
  Parity c2_parity = Parity::unspecified;    // consulted only for SU(2)

  void validate() const {
    group.validate();
    if (b2 < 0) throw domain_error("b2 must be >= 0");
  }
};

// Free graded-commutative presentation: generator counts per degree.
struct RingPresentation {
  enum class Kind { exterior, polynomial };
  Kind kind = Kind::exterior;
  std::map<int, long> generators;
  std::string label;

  long total() const {
    long t = 0;
    for (const auto& [deg, c] : generators) t += c;
    return t;
  }
};

// Degree beyond which no generator count formula is nonzero for this group.
inline int full_degree_bound(const SimpleGroup& g) {
  return 2 * g.max_exponent() + 4;
}

// ---------------------------------------------------------------------------
// Cohomology presentations (gauge group identity component and the orbit
// spaces), generator counts per degree exactly as printed:
//   gauge group:  degree j odd,  b2*rk pi_{j+2} + rk pi_j + rk pi_{j+4}
//   btilde:       degree j even, b2*rk pi_{j+1} + rk pi_{j+3}
//   bstar:        degree j even, b2*rk pi_{j+1} + rk pi_{j-3} + rk pi_{j+3}
// Indices below the range contribute zero.
// ---------------------------------------------------------------------------
inline RingPresentation cohomology_presentation(const BundleContext& ctx,
                                                Space space, int max_degree) {
  ctx.validate();
  if (max_degree < 0) throw domain_error("max_degree must be >= 0");
  const SimpleGroup& g = ctx.group;
  const long b2 = ctx.b2;
  RingPresentation p;
  p.label = space_name(space);
  switch (space) {
    case Space::gauge_group:
      p.kind = RingPresentation::Kind::exterior;
      for (int j = 1; j <= max_degree; j += 2) {
        long c = b2 * pi_rank(g, j + 2) + pi_rank(g, j) + pi_rank(g, j + 4);
        if (c > 0) p.generators[j] = c;
      }
      break;
    case Space::btilde:
      p.kind = RingPresentation::Kind::polynomial;
      for (int j = 2; j <= max_degree; j += 2) {
        long c = b2 * pi_rank(g, j + 1) + pi_rank(g, j + 3);
        if (c > 0) p.generators[j] = c;
      }
      break;
    case Space::bstar:
      p.kind = RingPresentation::Kind::polynomial;
      for (int j = 2; j <= max_degree; j += 2) {
        long c = b2 * pi_rank(g, j + 1) + (j >= 3 ? pi_rank(g, j - 3) : 0) +
                 pi_rank(g, j + 3);
        if (c > 0) p.generators[j] = c;
      }
      break;
    default:
      throw domain_error("cohomology_presentation handles gauge-group, "
                         "btilde and bstar; use loop_presentation");
  }
  return p;
}

// ---------------------------------------------------------------------------
// Connectivity / simple-connectedness report. Cases beyond the ones the
// theory pins down stay "unknown"; nothing is guessed.
// ---------------------------------------------------------------------------
enum class Tri { yes, no, unknown };
enum class Pi1 { zero, z2, unknown };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

inline const char* pi1_name(Pi1 p) {
  switch (p) {
    case Pi1::zero: return "0";
    case Pi1::z2: return "Z2";
    case Pi1::unknown: return "unknown";
  }
  return "?";
}

struct ConnectivityReport {
  Tri gauge_group_connected = Tri::unknown;
  Pi1 pi1_btilde = Pi1::unknown;
  Pi1 pi1_bstar = Pi1::unknown;
  std::string note;
};

inline ConnectivityReport simply_connected_status(const BundleContext& ctx) {
  ctx.validate();
  ConnectivityReport r;
  const SimpleGroup& g = ctx.group;
  const bool su_big = (g.family == Family::SU && g.n >= 3);
  const bool spin_big = (g.family == Family::Spin && g.n >= 6);
  if (su_big || spin_big) {
    // pi_2(G) = pi_4(G) = 0 makes the gauge group connected.
    r.gauge_group_connected = Tri::yes;
    r.pi1_btilde = Pi1::zero;
    r.pi1_bstar = Pi1::zero;
    return r;
  }
  if (g.family == Family::SU && g.n == 2) {
    switch (ctx.form_parity) {
      case Parity::odd:
        r.gauge_group_connected = Tri::yes;
        r.pi1_btilde = Pi1::zero;
        r.pi1_bstar = Pi1::zero;
        break;
      case Parity::even:
        r.gauge_group_connected = Tri::no;
        r.pi1_btilde = Pi1::z2;
        switch (ctx.c2_parity) {
          case Parity::odd: r.pi1_bstar = Pi1::zero; break;
          case Parity::even: r.pi1_bstar = Pi1::z2; break;
          case Parity::unspecified:
            r.pi1_bstar = Pi1::unknown;
            r.note = "SU(2) with even intersection form: pi_1(B*) depends on "
                     "the parity of c_2(P); specify it";
            break;
        }
        break;
      case Parity::unspecified:
        r.note = "SU(2): connectivity depends on the parity of the "
                 "intersection form; specify it";
        break;
    }
    return r;
  }
  r.note = "connectivity of the gauge group for " + g.name() +
           " is not covered by the implemented case analysis";
  return r;
}

// ---------------------------------------------------------------------------
// Loop-space Pontrjagin ring presentations (Milnor-Moore route):
//   loop btilde: degree j odd, b2*rk pi_{j+2} + rk pi_{j+4}
//   loop bstar:  degree j odd, b2*rk pi_{j+2} + rk pi_j + rk pi_{j+4}
// The base must not be known non-simply-connected; the explicit
// assume_simply_connected flag overrides the check.
// ---------------------------------------------------------------------------
inline RingPresentation loop_presentation(const BundleContext& ctx, Space space,
                                          int max_degree,
                                          bool assume_simply_connected = false) {
  ctx.validate();
  if (max_degree < 0) throw domain_error("max_degree must be >= 0");
  if (space != Space::loop_btilde && space != Space::loop_bstar)
    throw domain_error("loop_presentation handles loop-btilde and loop-bstar; "
                       "use cohomology_presentation");
  if (!assume_simply_connected) {
    ConnectivityReport st = simply_connected_status(ctx);
    Pi1 pi1 = (space == Space::loop_btilde) ? st.pi1_btilde : st.pi1_bstar;
    if (pi1 == Pi1::z2) {
      const char* base = (space == Space::loop_btilde) ? "btilde" : "bstar";
      throw not_simply_connected_error(
          std::string("refusing ") + space_name(space) + ": pi_1(" + base +
              ") = Z2, so the Milnor-Moore hypothesis fails",
          "Z2");
    }
    if (pi1 == Pi1::unknown && ctx.group.family == Family::SU && ctx.group.n == 2)
      throw domain_error("SU(2) loop-space query needs the intersection-form "
                         "parity (and the c_2 parity for loop-bstar when the "
                         "form is even)");
  }
  const SimpleGroup& g = ctx.group;
  const long b2 = ctx.b2;
  RingPresentation p;
  p.kind = RingPresentation::Kind::exterior;
  p.label = space_name(space);
  for (int j = 1; j <= max_degree; j += 2) {
    long c = b2 * pi_rank(g, j + 2) + pi_rank(g, j + 4);
    if (space == Space::loop_bstar) c += pi_rank(g, j);
    if (c > 0) p.generators[j] = c;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Consistency report: loop-space counts come out of two printed formulas,
// the loop-ring theorem and the degree -1 shift of the cohomology counts.
// For btilde the two agree identically; for bstar they do not, and the
// disagreement is reported as data.
// ---------------------------------------------------------------------------
struct ConsistencyEntry {
  int loop_degree = 0;
  long loop_count = 0;
  long shifted_count = 0;
  bool agree() const { return loop_count == shifted_count; }
};

struct SpaceConsistency {
  std::vector<ConsistencyEntry> entries;
  std::vector<int> mismatches;
};

struct ConsistencyReport {
  SpaceConsistency btilde;
  SpaceConsistency bstar;
};

inline ConsistencyReport consistency_report(const BundleContext& ctx,
                                            int max_degree) {
  ctx.validate();
  ConsistencyReport out;
  for (Space cohom : {Space::btilde, Space::bstar}) {
    Space loop = (cohom == Space::btilde) ? Space::loop_btilde : Space::loop_bstar;
    RingPresentation lp = loop_presentation(ctx, loop, max_degree, true);
    RingPresentation cp = cohomology_presentation(ctx, cohom, max_degree + 1);
    SpaceConsistency& sc = (cohom == Space::btilde) ? out.btilde : out.bstar;
    for (int j = 1; j <= max_degree; j += 2) {
      ConsistencyEntry e;
      e.loop_degree = j;
      if (auto it = lp.generators.find(j); it != lp.generators.end())
        e.loop_count = it->second;
      if (auto it = cp.generators.find(j + 1); it != cp.generators.end())
        e.shifted_count = it->second;
      if (e.loop_count == 0 && e.shifted_count == 0) continue;
      sc.entries.push_back(e);
      if (!e.agree()) sc.mismatches.push_back(j);
    }
  }
  return out;
}

}  // namespace rh4
