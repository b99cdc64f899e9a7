#pragma once
// Command-line front end. run() parses a query, dispatches to the
// computation modules and emits a deterministic table or canonical JSON
// (top-level keys: query, result, warnings). Exit codes: 0 success,
// 2 domain error, 3 resource-budget refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rh4/errors.hpp"
#include "rh4/fourfold.hpp"
#include "rh4/gauge.hpp"

namespace rh4::cli {

using nlohmann::json;

namespace detail {

struct Document {
  json query = json::object();
  json result = json::object();
  std::vector<std::string> warnings;
  std::string table;  // human-readable rendering
};

inline void emit(const Document& doc, bool json_mode, std::ostream& out) {
  if (json_mode) {
    json j;
    j["query"] = doc.query;
    j["result"] = doc.result;
    j["warnings"] = doc.warnings;
    out << j.dump() << "\n";
  } else {
    out << doc.table;
    for (const std::string& w : doc.warnings) out << "warning: " << w << "\n";
  }
}

inline json rank_table_json(const RankTable& t) {
  json arr = json::array();
  for (int k = 2; k <= t.max_degree; ++k)
    arr.push_back(json{{"k", k}, {"rank", t.rank(k)}});
  return arr;
}

inline json presentation_json(const RingPresentation& p) {
  const char* kind =
      p.kind == RingPresentation::Kind::exterior ? "exterior" : "polynomial";
  json arr = json::array();
  for (const auto& [deg, count] : p.generators)
    arr.push_back(json{{"count", count}, {"degree", deg}, {"kind", kind}});
  return arr;
}

inline IntersectionForm form_from(long b2, std::optional<long> sig) {
  if (b2 < 0) throw domain_error("b2 must be >= 0");
  long s = sig.value_or(b2);  // maximally positive split by default
  if (s > b2 || s < -b2 || (b2 + s) % 2 != 0)
    throw domain_error("signature must satisfy |sig| <= b2 and sig == b2 mod 2");
  if (b2 > 1'000'000) throw domain_error("b2 out of range for model construction");
  IntersectionForm f;
  f.b2_plus = static_cast<int>((b2 + s) / 2);
  f.b2_minus = static_cast<int>(b2) - f.b2_plus;
  return f;
}

inline Parity parse_parity(const std::string& s) {
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  if (s.empty() || s == "unspecified") return Parity::unspecified;
  throw domain_error("parity must be odd or even: " + s);
}

inline const char* parity_name(Parity p) {
  switch (p) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    case Parity::unspecified: return "unspecified";
  }
  return "?";
}

inline Space parse_space(const std::string& s) {
  if (s == "gauge-group") return Space::gauge_group;
  if (s == "btilde") return Space::btilde;
  if (s == "bstar") return Space::bstar;
  if (s == "loop-btilde") return Space::loop_btilde;
  if (s == "loop-bstar") return Space::loop_bstar;
  throw domain_error("unknown space: " + s +
                     " (expected gauge-group|btilde|bstar|loop-btilde|loop-bstar)");
}

// ---------------------------------------------------------------------------
// ranks: homotopy ranks by one or all methods, with cross-method agreement.
// ---------------------------------------------------------------------------
inline Document cmd_ranks(long b2, std::optional<long> sig, int max_k,
                          const std::string& method, bool check_mode) {
  if (max_k < 2) throw domain_error("--max must be >= 2");
  IntersectionForm form = form_from(b2, sig);
  Document doc;
  doc.query["command"] = check_mode ? "check" : "ranks";
  doc.query["b2"] = b2;
  doc.query["sig"] = form.signature();
  doc.query["max"] = max_k;
  if (!check_mode) doc.query["method"] = method;

  std::optional<RankTable> lie, closed, low;
  if (method == "lie" || method == "all") lie = ranks_lie(form, max_k);
  if (method == "closed" || (method == "all" && b2 >= 2)) {
    RankTable t;
    t.method = RankMethod::closed;
    t.max_degree = max_k;
    for (int k = 2; k <= max_k; ++k) t.ranks[k] = ranks_closed(b2, k - 1);
    closed = t;
  } else if (method == "all") {
    doc.warnings.push_back("closed formulas are gated to b2 >= 2; "
                           "reporting the lie-model ranks only");
  }
  if (method == "all" && b2 >= 2) {
    RankTable t;
    t.method = RankMethod::low_degree;
    t.max_degree = std::min(max_k, 4);
    std::array<long, 3> v = ranks_low_degree(b2);
    for (int k = 2; k <= t.max_degree; ++k) t.ranks[k] = v[static_cast<std::size_t>(k - 2)];
    low = t;
  }

  bool agreement = true;
  for (int k = 2; k <= max_k; ++k) {
    std::optional<long> ref;
    for (const std::optional<RankTable>* t : {&lie, &closed, &low}) {
      if (!*t || k > (*t)->max_degree) continue;
      long v = (*t)->rank(k);
      if (!ref) ref = v;
      else if (*ref != v) agreement = false;
    }
  }
  if (!agreement)
    throw internal_error("rank methods disagree; this is a bug");

  const RankTable& primary = lie ? *lie : *closed;
  std::vector<std::string> methods;
  if (lie) methods.push_back(method_name(RankMethod::lie_model));
  if (closed) methods.push_back(method_name(RankMethod::closed));
  if (low) methods.push_back(method_name(RankMethod::low_degree));

  doc.result["table"] = rank_table_json(primary);
  doc.result["methods"] = methods;
  doc.result["agreement"] = agreement;
  if (check_mode) {
    json by = json::object();
    if (lie) by[method_name(RankMethod::lie_model)] = rank_table_json(*lie);
    if (closed) by[method_name(RankMethod::closed)] = rank_table_json(*closed);
    if (low) by[method_name(RankMethod::low_degree)] = rank_table_json(*low);
    doc.result["by_method"] = by;
  }
  doc.warnings.push_back("ranks depend only on b2; every signature split "
                         "yields the same table");

  std::ostringstream t;
  if (methods.size() > 1) {
    t << std::left << std::setw(4) << "k";
    for (const std::string& m : methods) t << std::setw(12) << m;
    t << "agree\n";
    for (int k = 2; k <= max_k; ++k) {
      t << std::setw(4) << k;
      for (const std::optional<RankTable>* tab : {&lie, &closed, &low}) {
        if (!*tab) continue;
        if (k > (*tab)->max_degree)
          t << std::setw(12) << ".";
        else
          t << std::setw(12) << (*tab)->rank(k);
      }
      t << "yes\n";
    }
    t << "agreement: yes\n";
  } else {
    t << std::left << std::setw(4) << "k" << "rank\n";
    for (int k = 2; k <= max_k; ++k)
      t << std::setw(4) << k << primary.rank(k) << "\n";
    t << "method: " << method_name(primary.method) << "\n";
  }
  doc.table = t.str();
  return doc;
}

// ---------------------------------------------------------------------------
// loops: loop-space homology Hilbert series of the four-manifold.
// ---------------------------------------------------------------------------
inline Document cmd_loops(long b2, std::optional<long> sig, int max_n) {
  if (max_n < 0) throw domain_error("--max must be >= 0");
  IntersectionForm form = form_from(b2, sig);
  TruncatedSeries h = loop_hilbert(form, max_n);
  Document doc;
  doc.query["command"] = "loops";
  doc.query["b2"] = b2;
  doc.query["sig"] = form.signature();
  doc.query["max"] = max_n;
  json arr = json::array();
  std::ostringstream t;
  t << std::left << std::setw(4) << "k" << "dim\n";
  for (int k = 0; k <= max_n; ++k) {
    long dim = integer_value(h.coeff(k), "loop homology dimension");
    arr.push_back(json{{"dim", dim}, {"k", k}});
    t << std::setw(4) << k << dim << "\n";
  }
  doc.result["series"] = arr;
  doc.result["method"] = "lie-model homology + PBW";
  doc.table = t.str();
  return doc;
}

// ---------------------------------------------------------------------------
// gauge: ring presentations for the five spaces.
// ---------------------------------------------------------------------------
inline Document cmd_gauge(const std::string& group_str, long b2,
                          const std::string& form_str, const std::string& c2_str,
                          const std::string& space_str, std::optional<int> max_deg) {
  BundleContext ctx;
  ctx.group = SimpleGroup::parse(group_str);
  ctx.b2 = b2;
  ctx.form_parity = parse_parity(form_str);
  ctx.c2_parity = parse_parity(c2_str);
  Space space = parse_space(space_str);
  int bound = max_deg.value_or(full_degree_bound(ctx.group));
  if (bound < 0) throw domain_error("--max must be >= 0");

  Document doc;
  doc.query["command"] = "gauge";
  doc.query["group"] = ctx.group.name();
  doc.query["b2"] = b2;
  doc.query["form"] = parity_name(ctx.form_parity);
  doc.query["c2"] = parity_name(ctx.c2_parity);
  doc.query["space"] = space_str;
  doc.query["max"] = bound;

  RingPresentation p;
  if (space == Space::loop_btilde || space == Space::loop_bstar) {
    p = loop_presentation(ctx, space, bound);
    ConnectivityReport st = simply_connected_status(ctx);
    Pi1 pi1 = (space == Space::loop_btilde) ? st.pi1_btilde : st.pi1_bstar;
    if (pi1 == Pi1::unknown)
      doc.warnings.push_back("pi_1 of the base is not pinned down for " +
                             ctx.group.name() +
                             "; the Milnor-Moore hypothesis is assumed");
  } else {
    p = cohomology_presentation(ctx, space, bound);
  }

  const char* kind =
      p.kind == RingPresentation::Kind::exterior ? "exterior" : "polynomial";
  doc.result["space"] = space_str;
  doc.result["kind"] = kind;
  doc.result["presentation"] = presentation_json(p);
  doc.result["total"] = p.total();

  std::ostringstream t;
  t << "space: " << space_str << "\n";
  t << "kind: " << kind << "\n";
  t << std::left << std::setw(8) << "degree" << "count\n";
  for (const auto& [deg, count] : p.generators)
    t << std::setw(8) << deg << count << "\n";
  t << "total: " << p.total() << "\n";
  doc.table = t.str();
  return doc;
}

// ---------------------------------------------------------------------------
// check --group: the loop-ring theorem against the shifted cohomology counts.
// ---------------------------------------------------------------------------
inline Document cmd_check_group(const std::string& group_str, long b2,
                                const std::string& form_str,
                                const std::string& c2_str, int max_deg) {
  if (max_deg < 1) throw domain_error("--max must be >= 1");
  BundleContext ctx;
  ctx.group = SimpleGroup::parse(group_str);
  ctx.b2 = b2;
  ctx.form_parity = parse_parity(form_str);
  ctx.c2_parity = parse_parity(c2_str);
  ConsistencyReport rep = consistency_report(ctx, max_deg);

  Document doc;
  doc.query["command"] = "check";
  doc.query["group"] = ctx.group.name();
  doc.query["b2"] = b2;
  doc.query["max"] = max_deg;

  auto space_json = [](const SpaceConsistency& sc) {
    json entries = json::array();
    for (const ConsistencyEntry& e : sc.entries)
      entries.push_back(json{{"agree", e.agree()},
                             {"loop_count", e.loop_count},
                             {"loop_degree", e.loop_degree},
                             {"shifted_count", e.shifted_count}});
    return json{{"entries", entries}, {"mismatches", sc.mismatches}};
  };
  doc.result["btilde"] = space_json(rep.btilde);
  doc.result["bstar"] = space_json(rep.bstar);

  std::ostringstream t;
  for (const auto* pair : {&rep.btilde, &rep.bstar}) {
    const char* name = (pair == &rep.btilde) ? "btilde" : "bstar";
    t << "space: " << name << "\n";
    t << std::left << std::setw(13) << "loop-degree" << std::setw(11)
      << "loop-ring" << std::setw(20) << "shifted-cohomology" << "agree\n";
    for (const ConsistencyEntry& e : pair->entries)
      t << std::setw(13) << e.loop_degree << std::setw(11) << e.loop_count
        << std::setw(20) << e.shifted_count << (e.agree() ? "yes" : "NO") << "\n";
    t << "mismatches:";
    if (pair->mismatches.empty()) t << " none";
    for (int j : pair->mismatches) t << " " << j;
    t << "\n";
    for (int j : pair->mismatches) {
      std::ostringstream w;
      w << name << ": loop-ring theorem disagrees with the shifted cohomology "
        << "count at loop-degree " << j;
      doc.warnings.push_back(w.str());
    }
  }
  doc.table = t.str();
  return doc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// run: parse argv (without the program name) and execute.
// ---------------------------------------------------------------------------
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact rational homotopy of simply connected four-manifolds, "
               "their gauge groups and spaces of connections",
               "rh4"};
  app.require_subcommand(1);

  long b2 = 0;
  std::optional<long> sig;
  int max_ranks = 6;
  std::string method = "all";
  std::string format = "table";
  int max_loops = 0;
  std::string group_str, form_str, c2_str, space_str;
  std::optional<int> max_gauge;
  int max_check = 8;

  CLI::App* ranks = app.add_subcommand("ranks", "homotopy ranks of a four-manifold");
  ranks->add_option("--b2", b2, "second Betti number")->required();
  ranks->add_option("--sig", sig, "signature (default: maximally positive)");
  ranks->add_option("--max", max_ranks, "highest homotopy degree k (default 6)");
  ranks->add_option("--method", method, "lie|closed|all (default all)")
      ->check(CLI::IsMember({"lie", "closed", "all"}));
  ranks->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* loops = app.add_subcommand("loops", "loop-space homology series of a four-manifold");
  loops->add_option("--b2", b2, "second Betti number")->required();
  loops->add_option("--sig", sig, "signature (default: maximally positive)");
  loops->add_option("--max", max_loops, "truncation order")->required();
  loops->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* gauge = app.add_subcommand("gauge", "ring presentations for gauge groups and connection spaces");
  gauge->add_option("--group", group_str, "SU<n>|Spin<n>|Sp<n>|G2|F4|E6|E7|E8")->required();
  gauge->add_option("--b2", b2, "second Betti number of the base")->required();
  gauge->add_option("--form", form_str, "intersection form parity (odd|even), SU(2) only")
      ->check(CLI::IsMember({"odd", "even"}));
  gauge->add_option("--c2", c2_str, "second Chern number parity (odd|even), SU(2) only")
      ->check(CLI::IsMember({"odd", "even"}));
  gauge->add_option("--space", space_str,
                    "gauge-group|btilde|bstar|loop-btilde|loop-bstar")->required();
  gauge->add_option("--max", max_gauge, "highest degree (default: all generators)");
  gauge->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* check = app.add_subcommand("check", "cross-method and cross-formula consistency");
  check->add_option("--group", group_str, "run the loop-vs-cohomology comparison for this group");
  check->add_option("--b2", b2, "second Betti number")->required();
  check->add_option("--form", form_str, "intersection form parity (odd|even)")
      ->check(CLI::IsMember({"odd", "even"}));
  check->add_option("--c2", c2_str, "second Chern number parity (odd|even)")
      ->check(CLI::IsMember({"odd", "even"}));
  check->add_option("--max", max_check, "degree bound")->required();
  check->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    detail::Document doc;
    if (app.got_subcommand(ranks)) {
      doc = detail::cmd_ranks(b2, sig, max_ranks, method, false);
    } else if (app.got_subcommand(loops)) {
      doc = detail::cmd_loops(b2, sig, max_loops);
    } else if (app.got_subcommand(gauge)) {
      doc = detail::cmd_gauge(group_str, b2, form_str, c2_str, space_str, max_gauge);
    } else {
      if (group_str.empty()) {
        if (b2 < 2)
          throw domain_error("cross-method rank agreement needs b2 >= 2; the "
                             "closed formulas are gated below that");
        doc = detail::cmd_ranks(b2, std::nullopt, max_check, "all", true);
      } else {
        doc = detail::cmd_check_group(group_str, b2, form_str, c2_str, max_check);
      }
    }
    doc.query["format"] = format;
    detail::emit(doc, format == "json", out);
    return 0;
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rh4::cli
