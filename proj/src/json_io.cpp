#include "flowtype/json_io.hpp"

#include <algorithm>

#include "flowtype/errors.hpp"

namespace flowtype::io {

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw ParseError("expected a rational as \"p/q\" string");
}

json rat_to_json(const Rat& r) { return format_rational(r); }

void expect(bool cond, const std::string& what) {
  if (!cond) throw ParseError(what);
}

} // namespace

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Group group_from_json(const json& j) {
  expect(j.is_object() && j.contains("kind"), "group JSON needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") {
    expect(j.contains("table"), "finite group needs a table");
    return Group::finite(j.at("table").get<std::vector<std::vector<int>>>());
  }
  if (kind == "free") {
    expect(j.contains("rank"), "free group needs a rank");
    return Group::free_group(j.at("rank").get<int>());
  }
  if (kind == "lattice") {
    expect(j.contains("d"), "lattice group needs d");
    return Group::lattice(j.at("d").get<int>());
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

json group_to_json(const Group& g) {
  json j;
  switch (g.kind()) {
    case GroupKind::Finite: {
      j["kind"] = "finite";
      std::vector<std::vector<int>> table;
      for (const auto& a : g.elements()) {
        std::vector<int> row;
        for (const auto& b : g.elements()) row.push_back(g.mul(a, b).index());
        table.push_back(std::move(row));
      }
      j["table"] = table;
      break;
    }
    case GroupKind::Free:
      j["kind"] = "free";
      j["rank"] = g.rank();
      break;
    default:
      j["kind"] = "lattice";
      j["d"] = g.dimension();
  }
  return j;
}

Element element_from_json(const Group& g, const json& j) {
  switch (g.kind()) {
    case GroupKind::Finite:
      if (j.is_number_integer()) {
        Element e = Element::finite(j.get<int>());
        g.require_valid(e);
        return e;
      }
      if (j.is_string()) return g.element_from_string(j.get<std::string>());
      throw ParseError("finite group element must be an index");
    case GroupKind::Free:
      expect(j.is_string(), "free group element must be a word string");
      return g.element_from_string(j.get<std::string>());
    default:
      if (j.is_array()) {
        Element e = Element::vec(j.get<std::vector<long long>>());
        g.require_valid(e);
        return e;
      }
      if (j.is_number_integer() && g.dimension() == 1)
        return Element::vec({j.get<long long>()});
      if (j.is_string()) return g.element_from_string(j.get<std::string>());
      throw ParseError("lattice element must be an integer array");
  }
}

json element_to_json(const Group& g, const Element& e) {
  switch (g.kind()) {
    case GroupKind::Finite:
      return e.index();
    case GroupKind::Free:
      return g.element_to_string(e);
    default:
      if (g.dimension() == 1) return e.coords()[0];
      return json(e.coords());
  }
}

SymSet symset_from_json(const Group& g, const json& j) {
  expect(j.is_array(), "symmetric set must be a JSON array");
  std::vector<Element> elems;
  for (const auto& item : j) elems.push_back(element_from_json(g, item));
  return SymSet(g, std::move(elems));
}

SymSet symset_from_text(const Group& g, const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) return symset_from_json(g, parse_text(text));
  std::vector<Element> elems;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) elems.push_back(g.element_from_string(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return SymSet(g, std::move(elems));
}

json symset_to_json(const Group& g, const SymSet& s) {
  json arr = json::array();
  for (const auto& e : s.elements()) arr.push_back(element_to_json(g, e));
  return arr;
}

Seminorm seminorm_from_json(const Group& g, const json& j) {
  expect(j.is_object() && j.contains("kind"), "seminorm JSON needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "generated") {
    expect(j.contains("pairs"), "generated seminorm needs pairs");
    std::vector<std::pair<Element, Rat>> pairs;
    for (const auto& item : j.at("pairs")) {
      expect(item.is_array() && item.size() == 2, "each pair is [element, cost]");
      pairs.emplace_back(element_from_json(g, item[0]), rat_from_json(item[1]));
    }
    const Rat def = j.contains("default") ? rat_from_json(j.at("default")) : Rat(1);
    return Seminorm::generated(g, WeightedPairSet(g, pairs, def));
  }
  if (kind == "chain") {
    expect(j.contains("levels"), "chain seminorm needs levels");
    std::vector<SymSet> levels;
    for (const auto& level : j.at("levels")) levels.push_back(symset_from_json(g, level));
    std::vector<Rat> costs;
    if (j.contains("costs"))
      for (const auto& c : j.at("costs")) costs.push_back(rat_from_json(c));
    return Seminorm::chain(g, NestedChain(g, std::move(levels), std::move(costs)));
  }
  if (kind == "table") {
    expect(j.contains("values"), "table seminorm needs values");
    std::vector<Rat> values;
    for (const auto& v : j.at("values")) values.push_back(rat_from_json(v));
    return Seminorm::table(g, std::move(values));
  }
  throw ParseError("unknown seminorm kind '" + kind + "'");
}

json seminorm_to_json(const Seminorm& s) {
  const Group& g = s.group();
  json j;
  switch (s.kind()) {
    case SeminormKind::Table: {
      j["kind"] = "table";
      json vals = json::array();
      for (const auto& v : s.table_values()) vals.push_back(rat_to_json(v));
      j["values"] = vals;
      break;
    }
    case SeminormKind::Chain: {
      j["kind"] = "chain";
      json levels = json::array();
      for (const auto& lv : s.chain_data().levels) levels.push_back(symset_to_json(g, lv));
      j["levels"] = levels;
      json costs = json::array();
      for (const auto& c : s.chain_data().costs) costs.push_back(rat_to_json(c));
      j["costs"] = costs;
      break;
    }
    default: {
      j["kind"] = "generated";
      json pairs = json::array();
      // Emission carries the symmetrized costs, which evaluate identically.
      for (const auto& [e, c] : s.pair_data().costs())
        pairs.push_back(json::array({element_to_json(g, e), rat_to_json(c)}));
      j["pairs"] = pairs;
      j["default"] = rat_to_json(s.pair_data().default_cost());
    }
  }
  return j;
}

FiniteMetricSpace metric_from_json(const json& j) {
  expect(j.is_object() && j.contains("rho"), "metric JSON needs rho");
  std::vector<std::vector<Rat>> rho;
  for (const auto& row : j.at("rho")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    rho.push_back(std::move(r));
  }
  return FiniteMetricSpace(std::move(rho));
}

Flow flow_from_json(const json& j) {
  expect(j.is_object() && j.contains("kind"), "flow JSON needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "sft") {
    expect(j.contains("alphabet"), "subshift needs an alphabet size");
    std::vector<std::string> forbidden;
    if (j.contains("forbidden"))
      forbidden = j.at("forbidden").get<std::vector<std::string>>();
    return ZSubshift(j.at("alphabet").get<int>(), std::move(forbidden));
  }
  if (kind == "finite_flow") {
    expect(j.contains("group") && j.contains("size") && j.contains("action"),
           "finite flow needs group, size, action");
    const Group g = group_from_json(j.at("group"));
    std::map<Element, std::vector<int>> action;
    for (const auto& [key, perm] : j.at("action").items())
      action[g.element_from_string(key)] = perm.get<std::vector<int>>();
    return FiniteFlow(g, j.at("size").get<int>(), std::move(action));
  }
  throw ParseError("unknown flow kind '" + kind + "'");
}

json flow_to_json(const Flow& f) {
  json j;
  if (const auto* x = std::get_if<ZSubshift>(&f)) {
    j["kind"] = "sft";
    j["alphabet"] = x->alphabet();
    j["forbidden"] = x->forbidden();
    return j;
  }
  const auto& fin = std::get<FiniteFlow>(f);
  j["kind"] = "finite_flow";
  j["group"] = group_to_json(fin.group());
  j["size"] = fin.size();
  json action = json::object();
  for (const auto& [g, perm] : fin.given_action())
    action[fin.group().element_to_string(g)] = perm;
  j["action"] = action;
  return j;
}

ClopenSet clopen_from_json(const json& j) {
  expect(j.is_object() && j.contains("lo") && j.contains("hi") && j.contains("allowed"),
         "clopen JSON needs lo, hi, allowed");
  ClopenSet c;
  c.lo = j.at("lo").get<long long>();
  c.hi = j.at("hi").get<long long>();
  expect(c.lo <= c.hi, "clopen window needs lo <= hi");
  for (const auto& w : j.at("allowed")) {
    const std::string word = w.get<std::string>();
    expect(static_cast<long long>(word.size()) == c.length(),
           "allowed word length must equal the window length");
    c.allowed.insert(word);
  }
  return c;
}

json clopen_to_json(const ClopenSet& c) {
  json j;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  j["allowed"] = std::vector<std::string>(c.allowed.begin(), c.allowed.end());
  return j;
}

FlowSet flowset_from_json(const Flow& f, const json& j) {
  if (std::holds_alternative<ZSubshift>(f)) return clopen_from_json(j);
  const auto& fin = std::get<FiniteFlow>(f);
  expect(j.is_array(), "finite flow subset must be an array of point indices");
  std::uint64_t mask = 0;
  for (const auto& p : j) {
    const int point = p.get<int>();
    expect(point >= 0 && point < fin.size(), "point index out of range");
    mask |= 1ull << point;
  }
  return mask;
}

json flowset_to_json(const Flow& f, const FlowSet& s) {
  if (const auto* c = std::get_if<ClopenSet>(&s)) return clopen_to_json(*c);
  const std::uint64_t mask = std::get<std::uint64_t>(s);
  json arr = json::array();
  for (int i = 0; i < 64; ++i)
    if (mask & (1ull << i)) arr.push_back(i);
  return arr;
}

LStructure structure_from_json(const Group& g, const json& j) {
  expect(j.is_object() && j.contains("n") && j.contains("F"), "structure JSON needs n and F");
  LStructure m;
  m.n = j.at("n").get<int>();
  std::vector<Element> f_elems;
  for (const auto& s : j.at("F")) f_elems.push_back(element_from_json(g, s));
  m.f_elems = SymSet(g, f_elems).elements();
  auto g_index = [&](const Element& e) {
    const auto it = std::lower_bound(m.f_elems.begin(), m.f_elems.end(), e);
    expect(it != m.f_elems.end() && *it == e, "E relation symbol is not in F");
    return static_cast<int>(it - m.f_elems.begin());
  };
  if (j.contains("E"))
    for (const auto& triple : j.at("E")) {
      expect(triple.is_array() && triple.size() == 3, "E relation is [g, k, l]");
      ERel r;
      r.g = g_index(triple[0].is_string() ? g.element_from_string(triple[0].get<std::string>())
                                          : element_from_json(g, triple[0]));
      r.k = triple[1].get<int>();
      r.l = triple[2].get<int>();
      m.e_rels.insert(r);
    }
  if (j.contains("C"))
    for (const auto& subset : j.at("C")) {
      expect(subset.is_array(), "C relation is an array of vertex indices");
      std::uint32_t mask = 0;
      for (const auto& v : subset) {
        const int idx = v.get<int>();
        expect(idx >= 0 && idx < m.n, "C relation vertex out of range");
        mask |= 1u << idx;
      }
      expect(mask != 0, "C relation must be nonempty");
      m.c_rels.insert(mask);
    }
  m.validate();
  return m;
}

json structure_to_json(const Group& g, const LStructure& m) {
  json j;
  j["n"] = m.n;
  json f = json::array();
  for (const auto& e : m.f_elems) f.push_back(g.element_to_string(e));
  j["F"] = f;
  json e_arr = json::array();
  for (const auto& r : m.e_rels)
    e_arr.push_back(json::array({g.element_to_string(m.f_elems[r.g]), r.k, r.l}));
  j["E"] = e_arr;
  json c_arr = json::array();
  for (std::uint32_t mask : m.c_rels) {
    json subset = json::array();
    for (int i = 0; i < m.n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    c_arr.push_back(subset);
  }
  j["C"] = c_arr;
  return j;
}

WeakType weaktype_from_json(const Group& g, const json& j) {
  expect(j.is_object() && j.contains("F") && j.contains("n") && j.contains("structures"),
         "weak type JSON needs F, n, structures");
  WeakType t;
  std::vector<Element> f_elems;
  for (const auto& s : j.at("F")) f_elems.push_back(element_from_json(g, s));
  t.f_elems = SymSet(g, f_elems).elements();
  t.n = j.at("n").get<int>();
  if (j.contains("w") && !j.at("w").is_null()) t.w = j.at("w").get<int>();
  if (j.contains("flow")) t.flow_id = j.at("flow").get<std::string>();
  for (const auto& sj : j.at("structures")) {
    LStructure m = structure_from_json(g, sj);
    if (m.f_elems != t.f_elems) throw ParseError("structure F differs from the type's F");
    t.structures.emplace(std::make_pair(m.n, m.key()), std::move(m));
  }
  return t;
}

json weaktype_to_json(const Group& g, const WeakType& t) {
  json j;
  json f = json::array();
  for (const auto& e : t.f_elems) f.push_back(g.element_to_string(e));
  j["F"] = f;
  j["n"] = t.n;
  if (t.w) j["w"] = *t.w;
  j["flow"] = t.flow_id;
  json arr = json::array();
  for (const auto& [key, m] : t.structures) arr.push_back(structure_to_json(g, m));
  j["structures"] = arr;
  j["count"] = t.structures.size();
  return j;
}

json point_witness_to_json(const PointWitness& w) {
  json j;
  j["left_cycle"] = w.left_cycle;
  j["center"] = w.center;
  j["right_cycle"] = w.right_cycle;
  j["center_start"] = w.center_start;
  return j;
}

json bk_report_to_json(const Group& g, const BkReport& r) {
  json j;
  j["precondition"] = r.precondition_ok ? "ok" : "failed";
  if (!r.precondition_ok) {
    j["precondition_level"] = r.precondition_level;
    j["precondition_witness"] = element_to_json(g, *r.precondition_witness);
  }
  json v = json::array();
  for (const auto& viol : r.violations) {
    json item;
    item["n"] = viol.level;
    item["h"] = element_to_json(g, viol.witness);
    item["sigma"] = format_rational(viol.value);
    item["lower"] = format_rational(viol.lower);
    item["upper"] = format_rational(viol.upper);
    v.push_back(item);
  }
  j["violations"] = v;
  j["tested"] = r.tested;
  return j;
}

json fubini_witness_to_json(const Group& g, const FubiniWitness& w) {
  json j;
  j["F"] = symset_to_json(g, w.f_set);
  j["eps"] = format_rational(w.eps);
  j["verified"] = w.verified;
  if (w.failure) j["failure"] = element_to_json(g, *w.failure);
  return j;
}

json containment_to_json(const Group& g, const ContainmentResult& r) {
  json j;
  switch (r.verdict) {
    case ContainVerdict::Contained:
      j["verdict"] = "Contained";
      break;
    case ContainVerdict::NotContainedCertified:
      j["verdict"] = "NotContainedCertified";
      break;
    default:
      j["verdict"] = "NotContainedAtResolution";
  }
  j["n"] = r.n;
  if (r.wx) j["wX"] = *r.wx;
  if (r.wy) j["wY"] = *r.wy;
  j["exact"] = r.exact;
  if (r.witness) j["witness_structure"] = structure_to_json(g, *r.witness);
  return j;
}

json factor_to_json(const std::optional<FactorMap>& f) {
  json j;
  if (f)
    j["factor"] = f->assignment;
  else
    j["factor"] = nullptr;
  return j;
}

json theorem_report_to_json(const TheoremReport& r) {
  json j;
  json arr = json::array();
  for (const auto& inst : r.instances) {
    json item;
    item["factor"] = inst.factor;
    item["type_contained"] = inst.type_contained;
    item["agree"] = inst.agree;
    arr.push_back(item);
  }
  j["instances"] = arr;
  j["summary"] = {{"total", r.total}, {"agree", r.agreeing}, {"disagree", r.total - r.agreeing}};
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace flowtype::io
