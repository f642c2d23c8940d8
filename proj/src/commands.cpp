#include "ddseq/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "ddseq/analytics.hpp"
#include "ddseq/cache.hpp"
#include "ddseq/ptfamily.hpp"
#include "ddseq/scan.hpp"

namespace ddseq {

namespace {

using nlohmann::json;

enum class Format { Text, Csv, Json };

struct Options {
  std::string poly;
  std::int64_t n = 0;
  std::vector<std::string> groups;
  std::uint64_t p = 0;
  std::int64_t max_order = 0;
  double eps = 1.0;
  double theta = 0.5;
  int refine = 0;
  std::string param;
  std::string check = "eighth-power";
  bool all = false;
  bool json = false;
  bool csv = false;
  std::string cache;
  int threads = 0;
  std::uint64_t max_elements = Limits{}.max_elements;
};

std::string fixed(double v, int digits) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Doubles that went through JSON may come back as null (NaN) or integers.
double num(const json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string r;
  for (std::size_t i = 0; i < cells.size(); ++i) r += (i ? "," : "") + csv_field(cells[i]);
  return r + "\n";
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
    }
    os << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string s = csv_row(header);
  for (const auto& r : rows) s += csv_row(r);
  return s;
}

// Short factored head for large values: small primes only.
std::string factored_head(const Int& w) {
  if (w == 0) return "0";
  auto fp = FactoredProduct::factor(abs(w), 1000);
  std::ostringstream os;
  int shown = 0;
  for (const auto& [p, e] : fp.factors) {
    if (shown == 4) break;
    os << (shown ? " * " : "") << p.get_str();
    if (e > 1) os << "^" << e;
    ++shown;
  }
  if (shown < static_cast<int>(fp.factors.size()) || fp.remainder != 1) os << (shown ? " * ..." : "...");
  if (shown == 0 && fp.remainder == 1) os << "1";
  return os.str();
}

FiniteSubgroup group_from(const Options& o, int arity, std::size_t which = 0) {
  if (o.groups.size() > which) {
    auto g = FiniteSubgroup::parse(o.groups[which]);
    if (g.arity() != arity) throw ParseError("group arity differs from the polynomial's");
    return g;
  }
  if (which == 0 && o.n >= 1) return FiniteSubgroup::full(arity, o.n);
  throw ParseError("a group is required: pass --n or --group");
}

std::vector<ExpVec> parse_param(const std::string& text, int arity) {
  std::vector<ExpVec> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    ExpVec r;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoll(cell, &used));
        if (cell.find_first_not_of(" ", used) != std::string::npos) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad --param entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  if (static_cast<int>(rows.size()) != arity) throw ParseError("--param needs one row per variable");
  return rows;
}

// One subcommand: how to compute its payload and how to print it.
struct Command {
  std::function<std::string(const Options&)> key;  // cache key, empty when not cacheable
  std::function<json(const Options&, const Limits&)> compute;
  std::function<std::string(const json&, Format)> render;
};

json fp_json(const Int& v) { return FactoredProduct::factor(v).to_json(); }

// ---- w ----------------------------------------------------------------------

json compute_w(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  auto g = group_from(o, f.arity());
  Int w = W(f, g, lim);
  return {{"command", "w"}, {"poly", f.str()}, {"group", g.serialize()}, {"value", w.get_str()}, {"factored", fp_json(w)}};
}

std::string render_w(const json& j, Format fmt) {
  const Int w(j["value"].get<std::string>());
  const auto fp = FactoredProduct::from_json(j["factored"]);
  if (fmt == Format::Csv) return csv_row({"value", "abs_factored"}) + csv_row({w.get_str(), fp.render()});
  const std::string a = Int(abs(w)).get_str(), r = fp.render();
  std::string s = a == r ? a + "\n" : a + " = " + r + "\n";
  if (w < 0) s += "sign: -1\n";
  if (!fp.certified) s += "note: some factors are probable primes\n";
  return s;
}

// ---- factor -----------------------------------------------------------------

json compute_factor(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  auto g = group_from(o, f.arity());
  json rows = json::array();
  for (const auto& r : factor_W(f, g, lim))
    rows.push_back({{"order", r.subgroup.order()}, {"subgroup", r.subgroup.serialize()}, {"rep", r.rep.str()},
                    {"c", r.c.get_str()}, {"s_size", r.s_size}, {"vanishing", r.vanishing}});
  return {{"command", "factor"}, {"poly", f.str()}, {"group", g.serialize()}, {"rows", rows},
          {"w", W(f, g, lim).get_str()}};
}

std::string render_factor(const json& j, Format fmt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j["rows"])
    rows.push_back({std::to_string(r["order"].get<std::uint64_t>()), r["subgroup"].get<std::string>(),
                    r["rep"].get<std::string>(), r["vanishing"].get<bool>() ? "0" : r["c"].get<std::string>(),
                    std::to_string(r["s_size"].get<std::uint64_t>()), r["vanishing"].get<bool>() ? "yes" : "no"});
  const std::vector<std::string> head{"order", "subgroup", "rep", "C", "S", "vanishing"};
  if (fmt == Format::Csv) return render_csv(head, rows);
  return table(head, rows) + "W = " + j["w"].get<std::string>() + " = prod C^S over non-vanishing rows\n";
}

// ---- ra -----------------------------------------------------------------------

json compute_ra(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  if (o.p == 0) throw ParseError("ra needs --p");
  if (o.max_order < 1) throw ParseError("ra needs --max-order");
  RaOptions ro;
  ro.include_noncyclic = o.all;
  ro.limits = lim;
  json rows = json::array();
  for (const auto& r : ra_scan(f, o.p, o.max_order, ro))
    rows.push_back({{"p", r.p}, {"order", r.order}, {"subgroup", r.group.serialize()}});
  return {{"command", "ra"}, {"poly", f.str()}, {"records", rows}};
}

std::string render_ra(const json& j, Format fmt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j["records"])
    rows.push_back({std::to_string(r["p"].get<std::uint64_t>()), std::to_string(r["order"].get<std::uint64_t>()),
                    r["subgroup"].get<std::string>()});
  const std::vector<std::string> head{"p", "order", "subgroup"};
  if (fmt == Format::Csv) return render_csv(head, rows);
  if (rows.empty()) return "no ranks of apparition\n";
  return table(head, rows);
}

// ---- zsig ---------------------------------------------------------------------

json compute_zsig(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  if (o.max_order < 1) throw ParseError("zsig needs --max-order");
  json rows = json::array();
  for (const auto& r : zsig_scan(f, o.max_order, lim))
    rows.push_back({{"order", r.group.order()}, {"subgroup", r.group.serialize()}, {"generator", r.generator.str()},
                    {"w", r.w.get_str()}, {"primitive_part", r.primitive_part.to_json()},
                    {"in_zsigmondy_set", r.in_zsigmondy_set}});
  return {{"command", "zsig"}, {"poly", f.str()}, {"records", rows}};
}

std::string render_zsig(const json& j, Format fmt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j["records"])
    rows.push_back({std::to_string(r["order"].get<std::uint64_t>()), r["subgroup"].get<std::string>(),
                    r["w"].get<std::string>(), FactoredProduct::from_json(r["primitive_part"]).render(),
                    r["in_zsigmondy_set"].get<bool>() ? "yes" : "no"});
  const std::vector<std::string> head{"order", "subgroup", "W", "primitive_part", "zsigmondy"};
  return fmt == Format::Csv ? render_csv(head, rows) : table(head, rows);
}

// ---- growth -------------------------------------------------------------------

json compute_growth(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  std::vector<std::int64_t> ns;
  if (o.n >= 1) ns.push_back(o.n);
  else
    for (std::int64_t n = 1; n <= (o.max_order ? o.max_order : 10); ++n) ns.push_back(n);
  auto t = growth_experiment(f, ns, o.refine, lim);
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"n", r.n}, {"w", r.w.get_str()}, {"sign", sgn(r.w)},
                    {"bits", mpz_sizeinbase(r.w.get_mpz_t(), 2)}, {"head", factored_head(r.w)},
                    {"log_ratio", r.log_ratio}, {"root", r.root}});
  return {{"command", "growth"}, {"poly", f.str()}, {"reference_log_mahler", t.reference_log_mahler}, {"rows", rows}};
}

std::string render_growth(const json& j, Format fmt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j["rows"]) {
    const bool zero = r["w"].get<std::string>() == "0";
    rows.push_back({std::to_string(r["n"].get<std::int64_t>()), std::to_string(r["sign"].get<int>()),
                    zero ? "0" : std::to_string(r["bits"].get<std::size_t>()), r["head"].get<std::string>(),
                    fixed(num(r["log_ratio"]), 6), fixed(num(r["root"]), 6), zero ? "W_n = 0" : ""});
  }
  const std::vector<std::string> head{"n", "sign", "bits", "factored_head", "log_ratio", "root", "flag"};
  const double ref = num(j["reference_log_mahler"]);
  if (fmt == Format::Csv) return render_csv(head, rows);
  return table(head, rows) + "reference log M(f) = " + fixed(ref, 6) + ", M(f) = " + fixed(std::exp(ref), 6) + "\n";
}

// ---- mahler -------------------------------------------------------------------

json compute_mahler(const Options& o, const Limits&) {
  auto f = LaurentPoly::parse(o.poly);
  MahlerEstimate e = o.param.empty() ? mahler(f, o.refine) : mahler_on_subgroup(f, parse_param(o.param, f.arity()), o.refine);
  json j{{"command", "mahler"}, {"poly", f.str()}, {"value", e.value}, {"nodes", e.nodes},
         {"error_indicator", e.error_indicator}, {"converged", e.converged}, {"shifted_nodes", e.shifted_nodes}};
  if (e.root_formula) j["root_formula"] = *e.root_formula;
  return j;
}

std::string render_mahler(const json& j, Format fmt) {
  if (fmt == Format::Csv) {
    return csv_row({"value", "nodes", "error_indicator", "converged", "root_formula"}) +
           csv_row({fixed(num(j["value"]), 10), std::to_string(j["nodes"].get<std::uint64_t>()),
                    fixed(num(j["error_indicator"]), 10), j["converged"].get<bool>() ? "true" : "false",
                    j.contains("root_formula") ? fixed(num(j["root_formula"]), 10) : ""});
  }
  std::string s = fixed(num(j["value"]), 4) + "\n";
  if (!j["converged"].get<bool>()) s += "warning: not converged (error indicator " + fixed(num(j["error_indicator"]), 6) + ")\n";
  return s;
}

// ---- ptfamily -----------------------------------------------------------------

json compute_pt(const Options& o, const Limits&) {
  if (o.n < 1) throw ParseError("ptfamily needs --n");
  const auto n = o.n;
  json j{{"command", "ptfamily"}, {"n", n}, {"check", o.check}};
  if (o.check == "w") {
    j["w"] = poly_str(pt_W(n), "T");
  } else if (o.check == "orbits") {
    auto c = pt_orbit_count(n);
    j["free_points"] = c.free_points;
    j["free_orbits"] = c.free_orbits;
    j["formula"] = c.formula;
  } else if (o.check == "eighth-power") {
    auto e = pt_eighth_power(n);
    j["deg_b"] = degree(e.b);
    j["expected_deg_b"] = e.expected_deg_b;
    j["b8_divides"] = e.b8_divides;
    j["b"] = poly_str(e.b, "T");
  } else if (o.check == "gcd") {
    auto g = pt_gcd_check(n);
    j["degree"] = g.degree;
    j["bound"] = g.bound;
    j["gcd"] = poly_str(g.gcd, "T");
  } else if (o.check == "identity") {
    j["difference"] = pt_identity_difference().str();
  } else if (o.check == "fourth-power") {
    auto r = pt_fourth_power_check(n);
    j["status"] = to_string(r.status);
    if (r.status == FourthPowerStatus::FourthPower) j["root"] = poly_str(r.root, "T");
  } else {
    throw ParseError("unknown --check '" + o.check + "' (w, orbits, eighth-power, gcd, identity, fourth-power)");
  }
  return j;
}

std::string render_pt(const json& j, Format fmt) {
  const auto n = std::to_string(j["n"].get<std::int64_t>());
  const auto check = j["check"].get<std::string>();
  std::vector<std::pair<std::string, std::string>> kv;
  std::string text;
  auto tf = [](bool b) { return std::string(b ? "true" : "false"); };
  if (check == "w") {
    text = "W_" + n + "(P_T) = " + j["w"].get<std::string>();
    kv = {{"n", n}, {"w", j["w"].get<std::string>()}};
  } else if (check == "orbits") {
    const auto k = j["free_points"].get<std::int64_t>(), fo = j["formula"].get<std::int64_t>();
    text = "k(" + n + ") = " + std::to_string(k) + " free points in " + std::to_string(j["free_orbits"].get<std::int64_t>()) +
           " orbits, formula " + std::to_string(fo) + ": " + tf(k == fo);
    kv = {{"n", n}, {"free_points", std::to_string(k)}, {"formula", std::to_string(fo)}};
  } else if (check == "eighth-power") {
    const auto d = j["deg_b"].get<int>();
    text = "deg B_" + n + " = " + std::to_string(d) + ", B^8 | W: " + tf(j["b8_divides"].get<bool>());
    kv = {{"n", n}, {"deg_b", std::to_string(d)}, {"expected_deg_b", std::to_string(j["expected_deg_b"].get<int>())},
          {"b8_divides", tf(j["b8_divides"].get<bool>())}, {"b", j["b"].get<std::string>()}};
  } else if (check == "gcd") {
    const auto d = j["degree"].get<int>(), b = j["bound"].get<int>();
    text = "deg gcd(W_" + n + "(P_T), W_" + n + "(P_2T+4)) = " + std::to_string(d) + " >= " + std::to_string(b) + ": " + tf(d >= b);
    kv = {{"n", n}, {"degree", std::to_string(d)}, {"bound", std::to_string(b)}};
  } else if (check == "identity") {
    text = "P_2T+4(Z,Z) - 2 P_T(1,Z) = " + j["difference"].get<std::string>();
    kv = {{"difference", j["difference"].get<std::string>()}};
  } else {
    text = "A_" + n + " / W_" + (std::stoll(n) % 2 ? "1" : "2") + ": " + j["status"].get<std::string>();
    kv = {{"n", n}, {"status", j["status"].get<std::string>()}};
  }
  if (fmt == Format::Csv) {
    std::vector<std::string> h, r;
    for (auto& [k, v] : kv) h.push_back(k), r.push_back(v);
    return csv_row(h) + csv_row(r);
  }
  return text + "\n";
}

// ---- romanoff / density ---------------------------------------------------------

json compute_romanoff(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  if (o.max_order < 1) throw ParseError("romanoff needs --max-order (x)");
  auto r = romanoff_audit(f, o.max_order, o.eps, o.p ? o.p : 50, lim);
  return {{"command", "romanoff"}, {"poly", f.str()}, {"l1_norm", r.l1_norm.get_str()},
          {"sup_log_bound", r.sup_log_bound}, {"x", r.x}, {"subgroup_count", r.subgroup_count},
          {"weight", r.weight.get_str()}, {"log_abs_A", r.log_abs_A}, {"log_rhs", r.log_rhs},
          {"inequality_holds", r.inequality_holds}, {"epsilon", r.epsilon}, {"p_bound", r.p_bound},
          {"romanoff_partial_sum", r.romanoff_partial_sum}, {"main_term", r.main_term},
          {"empirical_constant", r.empirical_constant}, {"d_with_multiplicity", r.d_with_multiplicity},
          {"d_distinct_primes", r.d_distinct_primes}, {"record_count", r.record_count}};
}

std::string render_kv(const json& j, Format fmt) {
  std::vector<std::string> h, r;
  for (const auto& [k, v] : j.items()) {
    if (k == "command" || v.is_array()) continue;
    h.push_back(k);
    if (v.is_string()) r.push_back(v.get<std::string>());
    else if (v.is_boolean()) r.push_back(v.get<bool>() ? "true" : "false");
    else if (v.is_number_float() || v.is_null()) r.push_back(fixed(num(v), 6));
    else r.push_back(v.dump());
  }
  if (fmt == Format::Csv) return csv_row(h) + csv_row(r);
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) s += h[i] + ": " + r[i] + "\n";
  return s;
}

json compute_density(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  const std::uint64_t pb = o.p ? o.p : 50;
  auto r = density_report(f, o.theta, pb, o.max_order ? o.max_order : static_cast<std::int64_t>(pb), lim);
  json primes = json::array();
  for (auto p : r.primes) primes.push_back(p);
  return {{"command", "density"}, {"poly", f.str()}, {"theta", r.theta}, {"p_bound", r.p_bound},
          {"count", r.primes.size()}, {"reciprocal_sum", r.reciprocal_sum},
          {"all_primes_reciprocal_sum", r.all_primes_reciprocal_sum}, {"ratio", r.ratio}, {"bound", r.bound},
          {"primes", primes}};
}

std::string render_density(const json& j, Format fmt) {
  std::string s = render_kv(j, fmt);
  if (fmt == Format::Text) {
    std::string list;
    for (const auto& p : j["primes"]) list += (list.empty() ? "" : " ") + std::to_string(p.get<std::uint64_t>());
    s += "primes: " + list + "\n";
  }
  return s;
}

// ---- strongdiv / canon ----------------------------------------------------------

json compute_strongdiv(const Options& o, const Limits& lim) {
  auto f = LaurentPoly::parse(o.poly);
  if (o.groups.size() != 2) throw ParseError("strongdiv needs --group twice");
  auto a = group_from(o, f.arity(), 0), b = group_from(o, f.arity(), 1);
  auto r = strong_div_check(f, a, b, lim);
  return {{"command", "strongdiv"}, {"poly", f.str()}, {"holds", r.holds}, {"gcd", r.gcd.to_json()},
          {"meet", r.meet.serialize()}, {"w_meet", r.w_meet.to_json()}};
}

std::string render_strongdiv(const json& j, Format fmt) {
  const auto g = FactoredProduct::from_json(j["gcd"]).render();
  const auto m = FactoredProduct::from_json(j["w_meet"]).render();
  const std::string holds = j["holds"].get<bool>() ? "true" : "false";
  if (fmt == Format::Csv) return csv_row({"holds", "gcd", "meet", "w_meet"}) + csv_row({holds, g, j["meet"], m});
  return "gcd = " + g + "\nW(meet) = " + m + "  [meet " + j["meet"].get<std::string>() + "]\nstrong divisibility: " + holds + "\n";
}

json compute_canon(const Options& o, const Limits&) {
  return {{"command", "canon"}, {"poly", LaurentPoly::parse(o.poly).str()}};
}

std::string render_canon(const json& j, Format fmt) {
  if (fmt == Format::Csv) return csv_row({"poly"}) + csv_row({j["poly"].get<std::string>()});
  return j["poly"].get<std::string>() + "\n";
}

std::string group_tag(const Options& o) {
  std::string s;
  for (const auto& g : o.groups) s += (s.empty() ? "" : "&") + FiniteSubgroup::parse(g).serialize();
  if (s.empty() && o.n >= 1) s = "n=" + std::to_string(o.n);
  return s.empty() ? "-" : s;
}

std::string poly_tag(const Options& o) { return o.poly.empty() ? "-" : poly_hash(LaurentPoly::parse(o.poly)); }

std::string num_tag(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor divisibility sequences of integer Laurent polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_flag("--csv", o.csv, "CSV output");
  app.add_option("--cache", o.cache, "Directory of the result cache");
  app.add_option("--threads", o.threads, "OpenMP worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  app.add_option("--max-elements", o.max_elements, "Cap on enumerated group elements");

  std::map<CLI::App*, Command> commands;
  auto poly_arg = [&](CLI::App* s) { s->add_option("poly", o.poly, "Laurent polynomial, e.g. \"X1 - X2 - 4\"")->required(); };
  auto group_args = [&](CLI::App* s) {
    s->add_option("--n", o.n, "Use the full group mu_n^N");
    s->add_option("--group", o.groups, "Subgroup literal \"N=..;m=..;gens=(..)(..)\"");
  };

  auto* w = app.add_subcommand("w", "W_f of a finite subgroup, exact and factored.\nCSV columns: value, abs_factored");
  poly_arg(w);
  group_args(w);
  commands[w] = {[&](const Options& x) { return cache_key(poly_tag(x), group_tag(x), "w"); }, compute_w, render_w};

  auto* fa = app.add_subcommand("factor", "C-factor table: one row per cyclic subgroup.\nCSV columns: order, subgroup, rep, C, S, vanishing");
  poly_arg(fa);
  group_args(fa);
  commands[fa] = {[&](const Options& x) { return cache_key(poly_tag(x), group_tag(x), "factor"); }, compute_factor,
                  render_factor};

  auto* ra = app.add_subcommand("ra", "Ranks of apparition of a prime.\nCSV columns: p, order, subgroup");
  poly_arg(ra);
  ra->add_option("--p", o.p, "Prime")->required();
  ra->add_option("--max-order", o.max_order, "Largest subgroup order")->required();
  ra->add_flag("--all", o.all, "Also test non-cyclic subgroups");
  commands[ra] = {[&](const Options& x) {
                    return cache_key(poly_tag(x), "-", "ra:p=" + std::to_string(x.p) + ":max=" + std::to_string(x.max_order) +
                                                           (x.all ? ":all" : ""));
                  },
                  compute_ra, render_ra};

  auto* zs = app.add_subcommand("zsig", "Zsigmondy scan over cyclic subgroups.\nCSV columns: order, subgroup, W, primitive_part, zsigmondy");
  poly_arg(zs);
  zs->add_option("--max-order", o.max_order, "Largest subgroup order")->required();
  commands[zs] = {[&](const Options& x) { return cache_key(poly_tag(x), "-", "zsig:max=" + std::to_string(x.max_order)); },
                  compute_zsig, render_zsig};

  auto* gr = app.add_subcommand("growth", "Growth of |W_n|^(1/n^N) against M(f).\nCSV columns: n, sign, bits, factored_head, log_ratio, root, flag");
  poly_arg(gr);
  gr->add_option("--n", o.n, "Single n");
  gr->add_option("--max-order", o.max_order, "Rows n = 1..max (default 10)");
  gr->add_option("--refine", o.refine, "Quadrature refinement level for M(f)");
  commands[gr] = {[&](const Options& x) {
                    return cache_key(poly_tag(x), "-", "growth:n=" + std::to_string(x.n) + ":max=" + std::to_string(x.max_order) +
                                                           ":refine=" + std::to_string(x.refine));
                  },
                  compute_growth, render_growth};

  auto* ma = app.add_subcommand("mahler", "Mahler measure by quadrature.\nCSV columns: value, nodes, error_indicator, converged, root_formula");
  poly_arg(ma);
  ma->add_option("--refine", o.refine, "Refinement level (doubles nodes per dimension)");
  ma->add_option("--param", o.param, "Subtorus parametrization, rows per variable: \"1,0;1,0\"");
  commands[ma] = {[&](const Options& x) {
                    return cache_key(poly_tag(x), "-", "mahler:refine=" + std::to_string(x.refine) + ":param=" + x.param);
                  },
                  compute_mahler, render_mahler};

  auto* pt = app.add_subcommand("ptfamily", "Checks on P_T = X + 1/X + Y + 1/Y + T.\nCSV columns depend on --check");
  pt->add_option("--n", o.n, "n")->required();
  pt->add_option("--check", o.check, "w | orbits | eighth-power | gcd | identity | fourth-power");
  commands[pt] = {[&](const Options& x) { return cache_key("-", "n=" + std::to_string(x.n), "ptfamily:" + x.check); },
                  compute_pt, render_pt};

  auto* ro = app.add_subcommand("romanoff", "Audit of the Romanoff-sum inequalities.\nCSV columns: the report fields");
  poly_arg(ro);
  ro->add_option("--max-order", o.max_order, "x: largest subgroup order")->required();
  ro->add_option("--eps", o.eps, "epsilon");
  ro->add_option("--p", o.p, "Prime bound of the partial sum (default 50)");
  commands[ro] = {[&](const Options& x) {
                    return cache_key(poly_tag(x), "-", "romanoff:x=" + std::to_string(x.max_order) + ":eps=" + num_tag(x.eps) +
                                                           ":p=" + std::to_string(x.p));
                  },
                  compute_romanoff, render_kv};

  auto* de = app.add_subcommand("density", "Primes with a small rank of apparition.\nCSV columns: the report fields");
  poly_arg(de);
  de->add_option("--theta", o.theta, "theta");
  de->add_option("--p", o.p, "Prime bound (default 50)");
  de->add_option("--max-order", o.max_order, "Order cap (default: the prime bound)");
  commands[de] = {[&](const Options& x) {
                    return cache_key(poly_tag(x), "-", "density:theta=" + num_tag(x.theta) + ":p=" + std::to_string(x.p) +
                                                           ":max=" + std::to_string(x.max_order));
                  },
                  compute_density, render_density};

  auto* sd = app.add_subcommand("strongdiv", "gcd(W(A), W(B)) against W(A meet B); pass --group twice.\nCSV columns: holds, gcd, meet, w_meet");
  poly_arg(sd);
  sd->add_option("--group", o.groups, "Subgroup literal")->expected(2);
  commands[sd] = {[&](const Options& x) { return cache_key(poly_tag(x), group_tag(x), "strongdiv"); }, compute_strongdiv,
                  render_strongdiv};

  auto* ca = app.add_subcommand("canon", "Canonical text of a polynomial.\nCSV columns: poly");
  poly_arg(ca);
  commands[ca] = {nullptr, compute_canon, render_canon};

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (o.json && o.csv) throw ParseError("--json and --csv are exclusive");
    if (o.threads > 0) omp_set_num_threads(o.threads);
    const Format fmt = o.json ? Format::Json : o.csv ? Format::Csv : Format::Text;
    Limits lim;
    lim.max_elements = o.max_elements;
    const Command& cmd = commands.at(app.get_subcommands().front());

    std::optional<ResultCache> cache;
    std::string key;
    std::optional<json> payload;
    if (!o.cache.empty() && cmd.key) {
      cache.emplace(o.cache);
      key = cmd.key(o) + ":max-elements=" + std::to_string(o.max_elements);
      payload = cache->lookup(key);
    }
    if (!payload) {
      // Round-trip through text so fresh and cached payloads render identically.
      payload = json::parse(cmd.compute(o, lim).dump());
      if (cache) cache->store(key, *payload);
    }
    out << (fmt == Format::Json ? payload->dump(2) + "\n" : cmd.render(*payload, fmt));
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceCapError& e) {
    err << "error: resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvariantError& e) {
    err << "error: invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace ddseq
