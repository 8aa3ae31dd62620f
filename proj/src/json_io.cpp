#include "rsing/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rsing/errors.hpp"

namespace rsing {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ValidationError("schema: " + where + ": " + what);
}

const json& field(const json& j, const std::string& where, const char* name) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) schema_error(where + "/" + name, "missing");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], where + "/" + std::to_string(k)));
  return out;
}

std::vector<BranchType> branch_list(const json& j, const std::string& where) {
  std::vector<BranchType> out;
  if (!j.is_array()) schema_error(where, "expected an array");
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string w = where + "/" + std::to_string(k);
    BranchType b{int_list(field(j[k], w, "char_exponents"), w + "/char_exponents")};
    try {
      validate(b);
    } catch (const ValidationError& e) {
      schema_error(w + "/char_exponents", e.what());
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::map<std::int64_t, std::int64_t> int_map(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object keyed by integers");
  std::map<std::int64_t, std::int64_t> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t used = 0;
    std::int64_t key = 0;
    try {
      key = std::stoll(it.key(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it.key().size() || key < 1) schema_error(where + "/" + it.key(), "key must be a positive integer");
    if (!it->is_number_integer()) schema_error(where + "/" + it.key(), "expected an integer");
    out[key] = it->get<std::int64_t>();
  }
  return out;
}

json int_map_to_json(const std::map<std::int64_t, std::int64_t>& m) {
  json j = json::object();
  for (auto [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

SingularityType singularity_from_json(const json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  std::vector<BranchType> real, pairs;
  if (j.contains("real_branches")) real = branch_list(j["real_branches"], "/real_branches");
  if (j.contains("conj_pairs")) pairs = branch_list(j["conj_pairs"], "/conj_pairs");
  const int R = static_cast<int>(real.size());
  const int n = R + 2 * static_cast<int>(pairs.size());
  if (n == 0) schema_error("/", "no branches");
  auto conj = [&](int slot) { return slot < R ? slot : R + ((slot - R) ^ 1); };

  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  auto put = [&](int a, int b, int v, const std::string& where) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}, std::pair{conj(a), conj(b)}, std::pair{conj(b), conj(a)}}) {
      if (table[x][y] >= 0 && table[x][y] != v)
        schema_error(where, "conflicts with the value " + std::to_string(table[x][y]) + " implied for slots " +
                                std::to_string(x) + "," + std::to_string(y));
      table[x][y] = v;
    }
  };
  if (j.contains("intersections")) {
    const auto& inter = j["intersections"];
    if (!inter.is_object()) schema_error("/intersections", "expected an object");
    for (auto it = inter.begin(); it != inter.end(); ++it) {
      const std::string where = "/intersections/" + it.key();
      int a = -1, b = -1;
      char tail = 0;
      if (std::sscanf(it.key().c_str(), "%d,%d%c", &a, &b, &tail) != 2) schema_error(where, "key must be \"i,j\"");
      if (a < 0 || b < 0 || a >= n || b >= n) schema_error(where, "slot out of range");
      if (a == b) schema_error(where, "diagonal entries are not intersection numbers");
      put(a, b, as_int(*it, where), where);
    }
  }
  for (int a = 0; a < n; ++a) {
    table[a][a] = 0;
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0)
        schema_error("/intersections", "missing entry \"" + std::to_string(a) + "," + std::to_string(b) + "\"");
  }
  return SingularityType(std::move(real), std::move(pairs), std::move(table));
}

json singularity_to_json(const SingularityType& s) {
  json j;
  j["real_branches"] = json::array();
  for (const auto& b : s.real_branches()) j["real_branches"].push_back({{"char_exponents", b.char_exponents}});
  j["conj_pairs"] = json::array();
  for (const auto& b : s.conj_pairs()) j["conj_pairs"].push_back({{"char_exponents", b.char_exponents}});
  j["intersections"] = json::object();
  for (int a = 0; a < s.slot_count(); ++a)
    for (int b = a + 1; b < s.slot_count(); ++b)
      j["intersections"][std::to_string(a) + "," + std::to_string(b)] = s.intersection(a, b);
  return j;
}

Divide divide_from_json(const json& j) {
  const int crossings = as_int(field(j, "", "crossings"), "/crossings");
  std::vector<int> boundary;
  if (j.contains("boundary")) boundary = int_list(j["boundary"], "/boundary");
  std::vector<DivideBranch> branches;
  const auto& jb = field(j, "", "branches");
  if (!jb.is_array()) schema_error("/branches", "expected an array");
  for (std::size_t k = 0; k < jb.size(); ++k) {
    const std::string w = "/branches/" + std::to_string(k);
    const auto& closed = field(jb[k], w, "closed");
    if (!closed.is_boolean()) schema_error(w + "/closed", "expected a boolean");
    branches.push_back({closed.get<bool>(), int_list(field(jb[k], w, "walk"), w + "/walk")});
  }
  std::map<int, std::vector<int>> rotations;
  if (j.contains("rotations")) {
    const auto& jr = j["rotations"];
    if (!jr.is_object()) schema_error("/rotations", "expected an object");
    for (auto it = jr.begin(); it != jr.end(); ++it) {
      const std::string w = "/rotations/" + it.key();
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(it.key(), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != it.key().size()) schema_error(w, "vertex key must be an integer");
      rotations[v] = int_list(*it, w);
    }
  }
  std::optional<int> outer;
  if (j.contains("outer") && !j["outer"].is_null()) outer = as_int(j["outer"], "/outer");
  return Divide(crossings, std::move(boundary), std::move(branches), std::move(rotations), outer);
}

json divide_to_json(const Divide& d) {
  json j;
  j["crossings"] = d.crossing_count();
  j["boundary"] = d.boundary();
  j["branches"] = json::array();
  for (const auto& b : d.branches()) j["branches"].push_back({{"closed", b.closed}, {"walk", b.walk}});
  j["rotations"] = json::object();
  for (const auto& [v, r] : d.rotations()) j["rotations"][std::to_string(v)] = r;
  if (d.outer()) j["outer"] = *d.outer();
  return j;
}

ConjPairType conj_pair_from_json(const json& j) {
  ConjPairType t;
  t.s = as_int(field(j, "", "s"), "/s");
  t.i = as_int(field(j, "", "i"), "/i");
  t.m = int_list(field(j, "", "m"), "/m");
  t.n = int_list(field(j, "", "n"), "/n");
  return t;
}

json conj_pair_to_json(const ConjPairType& t) { return {{"s", t.s}, {"i", t.i}, {"m", t.m}, {"n", t.n}}; }

json factor_form_to_json(const FactorForm& f) { return int_map_to_json(f.factors); }

FactorForm factor_form_from_json(const json& j) {
  FactorForm f;
  for (auto [k, v] : int_map(j, "")) f.add(k, v);
  return f;
}

json cyclo_to_json(const CycloVector& v) { return int_map_to_json(v.exps); }

CycloVector cyclo_from_json(const json& j) {
  CycloVector v;
  for (auto [k, e] : int_map(j, "")) v.add(k, e);
  return v;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace rsing
