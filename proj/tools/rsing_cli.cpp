#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <iostream>
#include <sstream>
#include <string>

#include "rsing/ag_diagram.hpp"
#include "rsing/alexlink.hpp"
#include "rsing/errors.hpp"
#include "rsing/json_io.hpp"
#include "rsing/morsifier.hpp"
#include "rsing/sing_model.hpp"
#include "rsing/tracer.hpp"

using namespace rsing;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kInvalid = 2, kNumeric = 3;

std::string real(double v) { return format_real(v); }

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(what + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

/// "1+0.5i", "-2i", "0.3"
std::complex<double> parse_complex(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw ValidationError("empty complex number");
  double re = 0, im = 0;
  if (s.back() != 'i') {
    re = std::stod(s);
  } else {
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    std::string ipart = split == std::string::npos ? s : s.substr(split);
    if (split != std::string::npos) re = std::stod(s.substr(0, split));
    if (ipart.empty() || ipart == "+") ipart = "1";
    if (ipart == "-") ipart = "-1";
    im = std::stod(ipart);
  }
  return {re, im};
}

std::complex<double> complex_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ValidationError(where + ": expected a number, [re, im] or \"a+bi\"");
}

double number(const json& j, const std::string& key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ValidationError(where + "/" + key + ": expected a number");
  return j[key].get<double>();
}

int integer(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw ValidationError(where + "/" + key + ": expected an integer");
  return j[key].get<int>();
}

const json& array(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_array()) throw ValidationError(where + "/" + key + ": expected an array");
  return j[key];
}

std::vector<double> numbers(const json& j, const std::string& where) {
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number()) throw ValidationError(where + "/" + std::to_string(k) + ": expected a number");
    out.push_back(j[k].get<double>());
  }
  return out;
}

FamilySpec family_from_json(const json& j, const std::string& where);

FamilySpec smooth_from_json(const json& j, const std::string& where) {
  std::vector<SmoothBranchData> branches;
  const auto& bs = array(j, "branches", where);
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const std::string at = where + "/branches/" + std::to_string(k);
    if (!bs[k].is_object()) throw ValidationError(at + ": expected an object keyed by exponent");
    SmoothBranchData b;
    for (auto it = bs[k].begin(); it != bs[k].end(); ++it) {
      const int n = parse_int_list(it.key(), at)[0];
      b.coeffs[n] = complex_from_json(it.value(), at + "/" + it.key());
    }
    branches.push_back(std::move(b));
  }
  return family_smooth_conjugate(branches, number(j, "alpha", 0, where), number(j, "beta", 1, where));
}

FamilySpec semiquasi_from_json(const json& j, const std::string& where) {
  std::vector<LinearForm> lines;
  std::vector<QuadraticForm> quadrics;
  if (j.contains("lines")) {
    const auto& ls = array(j, "lines", where);
    for (std::size_t k = 0; k < ls.size(); ++k) {
      const auto v = numbers(ls[k], where + "/lines/" + std::to_string(k));
      if (v.size() != 2) throw ValidationError(where + "/lines/" + std::to_string(k) + ": expected [a, b]");
      lines.push_back({v[0], v[1]});
    }
  }
  if (j.contains("quadrics")) {
    const auto& qs = array(j, "quadrics", where);
    for (std::size_t k = 0; k < qs.size(); ++k) {
      const auto v = numbers(qs[k], where + "/quadrics/" + std::to_string(k));
      if (v.size() != 3) throw ValidationError(where + "/quadrics/" + std::to_string(k) + ": expected [A, B, C]");
      quadrics.push_back({v[0], v[1], v[2]});
    }
  }
  std::vector<double> b, shifts;
  if (j.contains("b")) b = numbers(array(j, "b", where), where + "/b");
  if (j.contains("shifts")) shifts = numbers(array(j, "shifts", where), where + "/shifts");
  return family_semiquasi_pp(lines, quadrics, b, shifts);
}

FamilySpec poly_from_json(const json& j, const std::string& where) {
  RealPoly2 p;
  const auto& terms = array(j, "terms", where);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string at = where + "/terms/" + std::to_string(k);
    if (!terms[k].is_array() || terms[k].size() != 3 || !terms[k][0].is_number_integer() ||
        !terms[k][1].is_number_integer() || !terms[k][2].is_number())
      throw ValidationError(at + ": expected [i, j, coefficient] for coefficient * x^i y^j");
    const int a = terms[k][0].get<int>(), b = terms[k][1].get<int>();
    if (a < 0 || b < 0) throw ValidationError(at + ": negative exponent");
    p.set(a, b, p.coeff(a, b) + terms[k][2].get<double>());
  }
  return family_from_polynomial(p, number(j, "half_width", 1, where));
}

FamilySpec compose_from_json(const json& j, const std::string& where) {
  std::vector<FamilySpec> parts;
  const auto& ps = array(j, "parts", where);
  for (std::size_t k = 0; k < ps.size(); ++k) parts.push_back(family_from_json(ps[k], where + "/parts/" + std::to_string(k)));
  std::vector<double> gamma(parts.size(), 1.0);
  if (j.contains("gamma")) gamma = numbers(array(j, "gamma", where), where + "/gamma");
  return family_ellipse_composition(parts, gamma);
}

FamilySpec family_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError(where + "/kind: expected one of one-pair, smooth-conj, semiquasi, compose, l16, poly");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "one-pair")
    return family_one_puiseux_pair(integer(j, "p", where), integer(j, "q", where),
                                   complex_from_json(j.value("a", json(1.0)), where + "/a"), number(j, "alpha", 0, where),
                                   number(j, "beta", 1, where));
  if (kind == "smooth-conj") return smooth_from_json(j, where);
  if (kind == "semiquasi") return semiquasi_from_json(j, where);
  if (kind == "compose") return compose_from_json(j, where);
  if (kind == "l16") return family_demo_l16(integer(j, "n", where));
  if (kind == "poly") return poly_from_json(j, where);
  throw ValidationError(where + "/kind: unknown family '" + kind + "'");
}

json node_json(const TracedNode& n) {
  return {{"x", real(n.x)}, {"y", real(n.y)}, {"residual", real(n.residual)}, {"angle", real(n.crossing_angle)}};
}

// ---- commands ----

int cmd_invariants(const std::string& path, bool as_json) {
  const auto s = singularity_from_json(read_json_file(path));
  if (s.slot_count() == 0) throw ValidationError(path + ": no branches");
  const json r = {{"mt", multiplicity(s)},
                  {"delta", delta_total(s)},
                  {"mu", milnor_number(s)},
                  {"re_br", s.re_br()},
                  {"im_br", s.im_br()},
                  {"nodes", expected_node_count(s)},
                  {"inner_regions", expected_inner_regions(s)}};
  if (as_json) {
    std::cout << r.dump(2) << "\n";
  } else {
    for (const char* k : {"mt", "delta", "mu", "re_br", "im_br", "nodes", "inner_regions"})
      std::cout << k << " " << r[k].get<std::int64_t>() << "\n";
  }
  return kOk;
}

struct MorsifyArgs {
  std::string family;
  int p = 2, q = 3, n = 3;
  std::string a = "1";
  double alpha = 0, beta = 1;
  std::string spec;
  std::string out;
  TraceOptions trace;
};

int cmd_morsify(const MorsifyArgs& m) {
  FamilySpec f;
  if (m.family == "one-pair") {
    f = family_one_puiseux_pair(m.p, m.q, parse_complex(m.a), m.alpha, m.beta);
  } else if (m.family == "l16") {
    f = family_demo_l16(m.n);
  } else {
    if (m.spec.empty()) throw ValidationError("morsify " + m.family + ": --spec is required");
    json j = read_json_file(m.spec);
    if (j.is_object() && !j.contains("kind")) j["kind"] = m.family;
    if (j.value("kind", m.family) != m.family)
      throw ValidationError(m.spec + "/kind: file describes '" + j["kind"].get<std::string>() + "', not '" + m.family + "'");
    f = family_from_json(j, m.spec);
  }
  if (m.trace.grid < 64) throw ValidationError("--grid must be at least 64");
  if (m.trace.retries < 0) throw ValidationError("--retries must be nonnegative");
  const auto td = trace_with_retries(f, m.trace);
  if (!m.out.empty()) {
    write_text_file(m.out + ".divide.json", divide_to_json(td.divide).dump(2) + "\n");
    write_text_file(m.out + ".svg", export_svg(td));
    write_text_file(m.out + ".csv", export_csv(td));
  }
  json report = {{"family", f.provenance},
                 {"t", real(td.t)},
                 {"window", real(td.window)},
                 {"grid", td.grid},
                 {"attempts", td.attempts},
                 {"nodes", td.nodes.size()},
                 {"inner_regions", td.divide.inner_faces().size()},
                 {"boundary_points", td.divide.boundary().size()},
                 {"branches", td.divide.branches().size()}};
  if (td.expected_nodes) report["expected_nodes"] = *td.expected_nodes;
  if (td.expected_boundary) report["expected_boundary_points"] = *td.expected_boundary;
  json nodes = json::array();
  for (const auto& n : td.nodes) nodes.push_back(node_json(n));
  report["node_list"] = nodes;
  const auto problems = validate(td.divide);
  report["problems"] = problems;
  report["count_ok"] = td.count_ok();
  std::cout << report.dump(2) << "\n";
  return td.count_ok() && problems.empty() ? kOk : kCheckFailed;
}

std::vector<SlotRef> assignment_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of slot references");
  std::vector<SlotRef> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    if (!j[k].is_object() || !j[k].contains("kind") || !j[k]["kind"].is_string())
      throw ValidationError(at + "/kind: expected \"real\" or \"pair\"");
    const auto kind = j[k]["kind"].get<std::string>();
    if (kind != "real" && kind != "pair") throw ValidationError(at + "/kind: expected \"real\" or \"pair\"");
    out.push_back({kind == "real" ? SlotRef::Kind::Real : SlotRef::Kind::Pair, integer(j[k], "index", at)});
  }
  return out;
}

int cmd_divide_check(const std::string& path, const std::string& type_path, const std::string& assign_path) {
  const Divide d = divide_from_json(read_json_file(path));
  const auto problems = validate(d);
  json r;
  r["crossings"] = d.crossing_count();
  r["branches"] = d.branches().size();
  r["boundary_points"] = d.boundary().size();
  r["problems"] = problems;
  bool ok = problems.empty();
  if (ok) {
    const auto col = two_coloring(d);
    int plus = 0, minus = 0;
    for (int f : d.inner_faces()) (col.color[f] > 0 ? plus : minus) += 1;
    r["inner_regions"] = {{"total", plus + minus}, {"positive", plus}, {"negative", minus}};
    const auto b = body(d);
    r["body"] = {{"vertices", b.vertices},
                 {"edges", b.edges},
                 {"faces", b.faces},
                 {"euler_characteristic", b.euler_characteristic},
                 {"empty", b.empty},
                 {"connected", b.connected},
                 {"simply_connected", b.simply_connected},
                 {"hyperbolic_node", b.hyperbolic_node}};
    r["crossing_matrix"] = crossing_matrix(d);
    r["boundary_order"] = cyclic_boundary_order(d);
    r["euler_excess"] = euler_excess(d);
    r["partition"] = is_partition(d);
  }
  if (!type_path.empty()) {
    const auto s = singularity_from_json(read_json_file(type_path));
    std::vector<SlotRef> assign;
    if (!assign_path.empty()) {
      assign = assignment_from_json(read_json_file(assign_path), assign_path);
    } else {
      // branches in order: real branches first, then conjugate pairs
      int real_left = s.re_br(), pair = 0, reals = 0;
      for (const auto& br : d.branches()) {
        if (!br.closed && real_left-- > 0) {
          assign.push_back({SlotRef::Kind::Real, reals++});
        } else {
          assign.push_back({SlotRef::Kind::Pair, pair++});
        }
      }
    }
    const auto report = check_against_type(d, s, assign);
    json items = json::array();
    for (const auto& it : report.items)
      items.push_back({{"name", it.name}, {"expected", it.expected}, {"actual", it.actual}, {"pass", it.pass}});
    r["type_check"] = items;
    ok = ok && report.pass();
  }
  std::cout << r.dump(2) << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_ag(const std::string& path, const std::string& dot_path) {
  const Divide d = divide_from_json(read_json_file(path));
  const auto problems = validate(d);
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << "invalid divide: " << p << "\n";
    return kCheckFailed;
  }
  const auto g = build_ag_diagram(d, two_coloring(d));
  if (!dot_path.empty()) write_text_file(dot_path, export_dot(g));
  json r = ag_to_json(g);
  json chains = json::array();
  for (const auto& c : detect_chains(g))
    chains.push_back({{"sign", c.sign}, {"vertices", c.vertices}, {"double_edge", c.double_edge}});
  r["chains"] = chains;
  r["partition"] = is_partition(d);
  if (d.branches().size() == 1)
    r["branch_kind"] = classify_branch_diagram(g) == BranchKind::RealBranch ? "real" : "conjugate-pair";
  std::cout << r.dump(2) << "\n";
  return kOk;
}

ConjPairType pair_from_args(const std::string& path, int i, const std::string& m, const std::string& n) {
  if (!path.empty()) return conj_pair_from_json(read_json_file(path));
  if (m.empty() || n.empty()) throw ValidationError("give --type or both --m and --n");
  ConjPairType t;
  t.m = parse_int_list(m, "--m");
  t.n = parse_int_list(n, "--n");
  t.s = static_cast<int>(t.m.size());
  t.i = i;
  return t;
}

int cmd_encode(const ConjPairType& t, bool expand_it, std::int64_t cap) {
  validate(t);
  const auto f = alexander_encode(t);
  const auto v = to_cyclotomic(f);
  json r = {{"type", conj_pair_to_json(t)},
            {"factors", factor_form_to_json(f)},
            {"cyclotomic", cyclo_to_json(v)},
            {"degree", degree(v)},
            {"branch_exponents", branch_type(t).char_exponents},
            {"conjugate_intersection", conjugate_intersection(t)}};
  if (expand_it) r["coefficients"] = expand(v, cap);
  std::cout << r.dump(2) << "\n";
  return kOk;
}

CycloVector cyclo_from_args(const std::string& path, const std::string& text) {
  if (!path.empty()) return cyclo_from_json(read_json_file(path));
  if (text.empty()) throw ValidationError("give a cyclotomic vector file or --vector d:k,...");
  CycloVector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("--vector: '" + item + "' is not d:k");
    const auto d = parse_int_list(item.substr(0, colon), "--vector");
    const auto k = parse_int_list(item.substr(colon + 1), "--vector");
    if (d.size() != 1 || k.size() != 1 || d[0] < 1) throw ValidationError("--vector: bad entry '" + item + "'");
    v.add(d[0], k[0]);
  }
  return v;
}

int cmd_decode(const CycloVector& v, const SearchBounds& bounds) {
  try {
    const auto r = alexander_decode(v, bounds);
    json out = {{"kind", r.kind == DecodeResult::Kind::Node ? "node" : "pair"},
                {"type", conj_pair_to_json(r.type)},
                {"via_search", r.via_search}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  } catch (const NotInImageError& e) {
    std::cout << json{{"kind", "not-in-image"}, {"reason", e.what()}}.dump(2) << "\n";
    return kCheckFailed;
  } catch (const UniquenessError& e) {
    std::cout << json{{"kind", "ambiguous"}, {"reason", e.what()}}.dump(2) << "\n";
    return kCheckFailed;
  }
}

int cmd_roundtrip(const SearchBounds& bounds, const std::string& inject) {
  if (bounds.max_s < 1 || bounds.max_n < 1 || bounds.max_m < 1)
    throw ValidationError("search bounds must be positive");
  const auto types = enumerate_conj_pair_types(bounds);
  int pass = 0, fail = 0, ambiguous = 0, searched = 0;
  for (const auto& t : types) {
    try {
      const auto r = alexander_decode(to_cyclotomic(alexander_encode(t)), bounds);
      searched += r.via_search;
      if (r.type == t) {
        ++pass;
      } else {
        ++fail;
        std::cout << "mismatch " << conj_pair_to_json(t).dump() << " -> " << conj_pair_to_json(r.type).dump() << "\n";
      }
    } catch (const UniquenessError& e) {
      ++ambiguous;
      std::cout << "ambiguous " << conj_pair_to_json(t).dump() << ": " << e.what() << "\n";
    } catch (const NotInImageError& e) {
      ++fail;
      std::cout << "lost " << conj_pair_to_json(t).dump() << ": " << e.what() << "\n";
    }
  }
  int injected_bad = 0;
  if (!inject.empty()) {
    const auto v = cyclo_from_args("", inject);
    try {
      const auto r = alexander_decode(v, bounds);
      std::cout << "injected " << cyclo_to_json(v).dump() << " decodes to " << conj_pair_to_json(r.type).dump() << "\n";
    } catch (const NotInImageError& e) {
      std::cout << "injected " << cyclo_to_json(v).dump() << " not-in-image: " << e.what() << "\n";
      injected_bad = 1;
    } catch (const UniquenessError& e) {
      std::cout << "injected " << cyclo_to_json(v).dump() << " ambiguous: " << e.what() << "\n";
      injected_bad = 1;
    }
  }
  std::cout << "types " << types.size() << "\npass " << pass << "\nfail " << fail << "\nambiguous " << ambiguous
            << "\nvia_search " << searched << "\n";
  return fail == 0 && ambiguous == 0 && injected_bad == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real morsifications of plane curve singularities: invariants, divides, A'Campo-Gusein-Zade "
               "diagrams and Alexander polynomials of conjugate branch pairs."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for all subcommands");

  std::string in_path, type_path, assign_path, dot_path, vector_text, inject;
  bool as_json = false, expand_it = false;
  std::int64_t cap = 512;
  int pair_i = 0;
  std::string m_text, n_text;
  SearchBounds bounds;

  auto* inv = app.add_subcommand("invariants", "Numerical invariants of a singularity type (JSON file)");
  inv->add_option("file", in_path, "Singularity JSON")->required();
  inv->add_flag("--json", as_json, "Print the report as JSON");

  MorsifyArgs margs;
  auto* mors = app.add_subcommand("morsify", "Build a morsification family, trace its divide and write artifacts");
  mors->add_option("family", margs.family, "one-pair | smooth-conj | semiquasi | compose | l16 | poly")
      ->required()
      ->check(CLI::IsMember({"one-pair", "smooth-conj", "semiquasi", "compose", "l16", "poly"}));
  mors->add_option("--p", margs.p, "one-pair: p");
  mors->add_option("--q", margs.q, "one-pair: q");
  mors->add_option("--a", margs.a, "one-pair: coefficient a, e.g. 1+0i");
  mors->add_option("--alpha", margs.alpha, "one-pair: tangent real part");
  mors->add_option("--beta", margs.beta, "one-pair: tangent imaginary part");
  mors->add_option("--n", margs.n, "l16: number of nodes");
  mors->add_option("--spec", margs.spec, "Family JSON for smooth-conj, semiquasi, compose, poly");
  mors->add_option("--out", margs.out, "Artifact prefix: writes PREFIX.divide.json, PREFIX.svg, PREFIX.csv");
  mors->add_option("--t", margs.trace.t, "Deformation parameter (default: family's choice)");
  mors->add_option("--grid", margs.trace.grid, "Grid cells per side (>= 64)")->capture_default_str();
  mors->add_option("--window", margs.trace.window, "Window scale relative to the family frame (default: family's)");
  mors->add_option("--retries", margs.trace.retries, "Retries halving t and doubling the grid")->capture_default_str();

  auto* dchk = app.add_subcommand("divide-check", "Validate a divide and report its invariants");
  dchk->add_option("file", in_path, "Divide JSON")->required();
  dchk->add_option("--type", type_path, "Singularity JSON to check the divide against");
  dchk->add_option("--assign", assign_path, "Branch-to-slot assignment JSON: [{\"kind\":\"real\",\"index\":0}, ...]");

  auto* ag = app.add_subcommand("ag", "A'Campo-Gusein-Zade diagram of a divide");
  ag->add_option("file", in_path, "Divide JSON")->required();
  ag->add_option("--dot", dot_path, "Write the diagram in DOT format");

  auto* enc = app.add_subcommand("alexander-encode", "Alexander polynomial of a conjugate branch pair");
  enc->add_option("--type", type_path, "Pair JSON {\"s\",\"i\",\"m\",\"n\"}");
  enc->add_option("--i", pair_i, "Index of the last real Puiseux pair");
  enc->add_option("--m", m_text, "m_1,...,m_s");
  enc->add_option("--n", n_text, "n_1,...,n_s");
  enc->add_flag("--expand", expand_it, "Also print the integer coefficients");
  enc->add_option("--degree-cap", cap, "Largest degree expanded")->capture_default_str();

  auto* dec = app.add_subcommand("alexander-decode", "Recover the pair type from cyclotomic exponents");
  dec->add_option("file", in_path, "Cyclotomic JSON {\"d\": k, ...}");
  dec->add_option("--vector", vector_text, "Inline exponents d:k,d:k,...");

  auto* rt = app.add_subcommand("roundtrip", "Encode and decode every valid pair type within bounds");
  rt->add_option("--inject", inject, "Also decode this exponent vector d:k,...");

  for (auto* sub : {dec, rt}) {
    sub->add_option("--max-s", bounds.max_s, "Search bound on s")->capture_default_str();
    sub->add_option("--max-n", bounds.max_n, "Search bound on n_j")->capture_default_str();
    sub->add_option("--max-m", bounds.max_m, "Search bound on m_j")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*inv) return cmd_invariants(in_path, as_json);
    if (*mors) return cmd_morsify(margs);
    if (*dchk) return cmd_divide_check(in_path, type_path, assign_path);
    if (*ag) return cmd_ag(in_path, dot_path);
    if (*enc) return cmd_encode(pair_from_args(type_path, pair_i, m_text, n_text), expand_it, cap);
    if (*dec) return cmd_decode(cyclo_from_args(in_path, vector_text), bounds);
    if (*rt) return cmd_roundtrip(bounds, inject);
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const StructuralError& e) {
    std::cerr << "malformed divide: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
