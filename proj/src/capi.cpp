#include "flowtype/flowtype_c.h"

#include <cstring>
#include <string>

#include "flowtype/errors.hpp"
#include "flowtype/json_io.hpp"

using namespace flowtype;

struct ft_group {
  Group value;
};
struct ft_seminorm {
  Seminorm value;
};
struct ft_flow {
  Flow value;
};
struct ft_clopen {
  ClopenSet value;
};
struct ft_structure {
  Group group;
  LStructure value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ft_status guard(Fn&& fn) {
  try {
    fn();
    return FT_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return FT_ERROR_PARSE;
  } catch (const PrecondError& e) {
    g_last_error = e.what();
    return FT_ERROR_PRECONDITION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FT_ERROR_INTERNAL;
  }
}

Element element_from_text(const Group& g, const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == '"' || text[0] == '{'))
    return io::element_from_json(g, io::parse_text(text));
  return g.element_from_string(text);
}

std::vector<Element> element_list_from_json(const Group& g, const std::string& text) {
  const auto j = io::parse_text(text);
  if (!j.is_array()) throw ParseError("expected a JSON array of elements");
  std::vector<Element> out;
  for (const auto& item : j) out.push_back(io::element_from_json(g, item));
  return out;
}

} // namespace

extern "C" {

const char* ft_last_error(void) { return g_last_error.c_str(); }

void ft_string_free(char* s) { std::free(s); }

ft_status ft_group_parse(const char* json, ft_group** out) {
  return guard([&] { *out = new ft_group{io::group_from_json(io::parse_text(json))}; });
}

void ft_group_free(ft_group* g) { delete g; }

ft_status ft_group_to_json(const ft_group* g, char** out) {
  return guard([&] { *out = dup_string(io::dump(io::group_to_json(g->value))); });
}

ft_status ft_group_mul(const ft_group* g, const char* a, const char* b, char** out) {
  return guard([&] {
    const Element r =
        g->value.mul(element_from_text(g->value, a), element_from_text(g->value, b));
    *out = dup_string(io::dump(io::json{{"result", io::element_to_json(g->value, r)}}));
  });
}

ft_status ft_group_inv(const ft_group* g, const char* a, char** out) {
  return guard([&] {
    const Element r = g->value.inv(element_from_text(g->value, a));
    *out = dup_string(io::dump(io::json{{"result", io::element_to_json(g->value, r)}}));
  });
}

ft_status ft_group_ball(const ft_group* g, const char* gens, int radius, char** out) {
  return guard([&] {
    const SymSet s = io::symset_from_text(g->value, gens);
    const auto elems = ball(g->value, s, radius);
    io::json arr = io::json::array();
    for (const auto& e : elems) arr.push_back(io::element_to_json(g->value, e));
    *out = dup_string(io::dump(io::json{{"elements", arr}, {"size", elems.size()}}));
  });
}

ft_status ft_seminorm_parse(const ft_group* g, const char* json, ft_seminorm** out) {
  return guard([&] {
    *out = new ft_seminorm{io::seminorm_from_json(g->value, io::parse_text(json))};
  });
}

void ft_seminorm_free(ft_seminorm* s) { delete s; }

ft_status ft_seminorm_to_json(const ft_seminorm* s, char** out) {
  return guard([&] { *out = dup_string(io::dump(io::seminorm_to_json(s->value))); });
}

ft_status ft_seminorm_eval(const ft_seminorm* s, const char* elem, char** out_value) {
  return guard([&] {
    const Rat v = s->value.eval(element_from_text(s->value.group(), elem));
    *out_value = dup_string(io::dump(io::json{{"value", format_rational(v)}}));
  });
}

ft_status ft_seminorm_ball(const ft_seminorm* s, const char* c, const char* domain, char** out) {
  return guard([&] {
    const Rat cv = parse_rational(c);
    const auto dom = element_list_from_json(s->value.group(), domain);
    const auto elems = seminorm_ball(s->value, cv, dom);
    io::json arr = io::json::array();
    for (const auto& e : elems) arr.push_back(io::element_to_json(s->value.group(), e));
    *out = dup_string(io::dump(io::json{{"elements", arr}, {"size", elems.size()}}));
  });
}

ft_status ft_phi_eval(const ft_seminorm* sigma, const ft_seminorm* sigma_prime, const char* f_set,
                      const char* eps, const char* elem, const char* support, char** out_value) {
  return guard([&] {
    const Group& g = sigma->value.group();
    if (!g.same_group(sigma_prime->value.group()))
      throw PrecondError("phi seminorms must share a group");
    const SymSet f = io::symset_from_text(g, f_set);
    const auto dom = element_list_from_json(g, support);
    const Seminorm phi =
        phi_seminorm(g, sigma->value, sigma_prime->value, f, parse_rational(eps), dom);
    const Rat v = phi.eval(element_from_text(g, elem));
    *out_value = dup_string(io::dump(io::json{{"value", format_rational(v)}}));
  });
}

ft_status ft_bk_check(const ft_seminorm* chain, char** out_report) {
  return guard([&] {
    const BkReport r = bk_verify(chain->value.group(), chain->value.chain_data());
    *out_report = dup_string(io::dump(io::bk_report_to_json(chain->value.group(), r)));
  });
}

ft_status ft_fubini_witness(const ft_seminorm* sigma0, const ft_seminorm* sigma2,
                            const char* delta, char** out) {
  return guard([&] {
    const Group& g = sigma0->value.group();
    if (!g.same_group(sigma2->value.group()))
      throw PrecondError("fubini seminorms must share a group");
    const FubiniWitness w = fubini_witness(g, sigma0->value, sigma2->value, parse_rational(delta));
    *out = dup_string(io::dump(io::fubini_witness_to_json(g, w)));
  });
}

ft_status ft_lipschitz_correct(const char* space, const char* f, const char* delta, char** out) {
  return guard([&] {
    const FiniteMetricSpace m = io::metric_from_json(io::parse_text(space));
    std::vector<Rat> fv;
    for (const auto& v : io::parse_text(f)) fv.push_back(parse_rational(v.get<std::string>()));
    const auto corrected = lipschitz_correct(m, fv, parse_rational(delta));
    io::json arr = io::json::array();
    for (const auto& v : corrected) arr.push_back(format_rational(v));
    *out = dup_string(io::dump(io::json{{"f_prime", arr}}));
  });
}

ft_status ft_flow_parse(const char* json, ft_flow** out) {
  return guard([&] { *out = new ft_flow{io::flow_from_json(io::parse_text(json))}; });
}

void ft_flow_free(ft_flow* x) { delete x; }

ft_status ft_flow_to_json(const ft_flow* x, char** out) {
  return guard([&] { *out = dup_string(io::dump(io::flow_to_json(x->value))); });
}

ft_status ft_flow_group(const ft_flow* x, ft_group** out) {
  return guard([&] { *out = new ft_group{flow_group(x->value)}; });
}

ft_status ft_clopen_parse(const char* json, ft_clopen** out) {
  return guard([&] { *out = new ft_clopen{io::clopen_from_json(io::parse_text(json))}; });
}

void ft_clopen_free(ft_clopen* c) { delete c; }

ft_status ft_clopen_to_json(const ft_clopen* c, char** out) {
  return guard([&] { *out = dup_string(io::dump(io::clopen_to_json(c->value))); });
}

ft_status ft_clopen_translate(const ft_clopen* c, long long n, ft_clopen** out) {
  return guard([&] { *out = new ft_clopen{translate(c->value, n)}; });
}

ft_status ft_clopen_boolean(const char* op, int alphabet, const ft_clopen* a, const ft_clopen* b,
                            ft_clopen** out) {
  return guard([&] {
    const std::string name = op;
    if (name == "complement") {
      *out = new ft_clopen{clopen_complement(alphabet, a->value)};
      return;
    }
    if (!b) throw ParseError("binary clopen operation needs two operands");
    if (name == "union")
      *out = new ft_clopen{clopen_union(alphabet, a->value, b->value)};
    else if (name == "intersect")
      *out = new ft_clopen{clopen_intersect(alphabet, a->value, b->value)};
    else if (name == "minus")
      *out = new ft_clopen{clopen_minus(alphabet, a->value, b->value)};
    else
      throw ParseError("unknown clopen operation '" + name + "'");
  });
}

ft_status ft_flow_is_empty(const ft_flow* x, const char* set_json, char** out) {
  return guard([&] {
    const FlowSet s = io::flowset_from_json(x->value, io::parse_text(set_json));
    io::json j;
    if (const auto* sft = std::get_if<ZSubshift>(&x->value)) {
      const EmptinessResult r = is_empty(*sft, std::get<ClopenSet>(s));
      j["empty"] = r.empty;
      if (r.witness) j["witness"] = io::point_witness_to_json(*r.witness);
    } else {
      const bool empty = std::get<std::uint64_t>(s) == 0;
      j["empty"] = empty;
      if (!empty) {
        const std::uint64_t mask = std::get<std::uint64_t>(s);
        for (int i = 0; i < 64; ++i)
          if (mask & (1ull << i)) {
            j["witness"] = io::json{{"point", i}};
            break;
          }
      }
    }
    *out = dup_string(io::dump(j));
  });
}

ft_status ft_flow_is_cover(const ft_flow* x, const char* family_json, char** out) {
  return guard([&] {
    const auto fam_json = io::parse_text(family_json);
    if (!fam_json.is_array()) throw ParseError("family must be a JSON array");
    io::json j;
    if (const auto* sft = std::get_if<ZSubshift>(&x->value)) {
      std::vector<ClopenSet> fam;
      for (const auto& item : fam_json) fam.push_back(io::clopen_from_json(item));
      const EmptinessResult r = is_cover(*sft, fam);
      j["cover"] = r.empty;
      if (r.witness) j["witness"] = io::point_witness_to_json(*r.witness);
    } else {
      const auto& fin = std::get<FiniteFlow>(x->value);
      std::vector<std::uint64_t> fam;
      for (const auto& item : fam_json)
        fam.push_back(std::get<std::uint64_t>(io::flowset_from_json(x->value, item)));
      const MaskCoverResult r = flow_is_cover(fin, fam);
      j["cover"] = r.covered;
      if (r.uncovered_point) j["witness"] = io::json{{"point", *r.uncovered_point}};
    }
    *out = dup_string(io::dump(j));
  });
}

ft_status ft_flow_r_u_disjoint(const ft_flow* x, const char* a, const char* b, const char* u_set,
                               char** out) {
  return guard([&] {
    const FlowSet sa = io::flowset_from_json(x->value, io::parse_text(a));
    const FlowSet sb = io::flowset_from_json(x->value, io::parse_text(b));
    const SymSet u = io::symset_from_text(flow_group(x->value), u_set);
    const bool disjoint = r_u_disjoint(x->value, sa, sb, u);
    *out = dup_string(io::dump(io::json{{"disjoint", disjoint}}));
  });
}

ft_status ft_flow_transitive(const ft_flow* x, char** out) {
  return guard([&] {
    *out = dup_string(io::dump(io::json{{"transitive", flow_transitive(x->value)}}));
  });
}

ft_status ft_flow_partial_sigma(const ft_flow* x, const ft_seminorm* s, int px, int py,
                                char** out_value) {
  return guard([&] {
    const auto* fin = std::get_if<FiniteFlow>(&x->value);
    if (!fin) throw PrecondError("partial_sigma needs a finite flow");
    const Rat v = partial_sigma(*fin, s->value, px, py);
    *out_value = dup_string(io::dump(io::json{{"value", format_rational(v)}}));
  });
}

ft_status ft_structure_parse(const ft_group* g, const char* json, ft_structure** out) {
  return guard([&] {
    *out = new ft_structure{g->value, io::structure_from_json(g->value, io::parse_text(json))};
  });
}

void ft_structure_free(ft_structure* m) { delete m; }

ft_status ft_structure_to_json(const ft_structure* m, char** out) {
  return guard([&] { *out = dup_string(io::dump(io::structure_to_json(m->group, m->value))); });
}

ft_status ft_structure_canonicalize(const ft_structure* m, int force, ft_structure** out) {
  return guard([&] {
    *out = new ft_structure{m->group, canonicalize(m->value, force != 0)};
  });
}

ft_status ft_full_structure(const ft_flow* x, const char* family_json, const char* f_set,
                            char** out) {
  return guard([&] {
    const auto fam_json = io::parse_text(family_json);
    if (!fam_json.is_array()) throw ParseError("family must be a JSON array");
    std::vector<FlowSet> fam;
    for (const auto& item : fam_json) fam.push_back(io::flowset_from_json(x->value, item));
    const Group& g = flow_group(x->value);
    const SymSet f = io::symset_from_text(g, f_set);
    const LStructure m = full_structure(x->value, fam, f);
    *out = dup_string(io::dump(io::structure_to_json(g, m)));
  });
}

ft_status ft_realizes(const ft_flow* x, const ft_structure* m, int w, char** out) {
  return guard([&] {
    const auto witness = realizes(x->value, m->value, w);
    io::json j;
    j["realized"] = witness.has_value();
    if (witness) {
      io::json arr = io::json::array();
      for (const auto& s : *witness) arr.push_back(io::flowset_to_json(x->value, s));
      j["witness"] = arr;
    }
    *out = dup_string(io::dump(j));
  });
}

ft_status ft_enumerate_type(const ft_flow* x, const char* f_set, int n, int w,
                            const char* flow_id, int force, char** out) {
  return guard([&] {
    const Group& g = flow_group(x->value);
    const SymSet f = io::symset_from_text(g, f_set);
    const WeakType t = enumerate_type(x->value, f, n, w, flow_id ? flow_id : "", force != 0);
    *out = dup_string(io::dump(io::weaktype_to_json(g, t)));
  });
}

ft_status ft_check_containment(const ft_flow* x, const ft_flow* y, const char* f_set, int n,
                               int wx, int wy, int force, char** out) {
  return guard([&] {
    const Group& g = flow_group(x->value);
    const SymSet f = io::symset_from_text(g, f_set);
    const ContainmentResult r = check_containment(x->value, y->value, f, n, wx, wy, force != 0);
    *out = dup_string(io::dump(io::containment_to_json(g, r)));
  });
}

ft_status ft_type_meet(const ft_group* g, const char* types, char** out) {
  return guard([&] {
    const auto arr = io::parse_text(types);
    if (!arr.is_array()) throw ParseError("type_meet expects a JSON array of weak types");
    std::vector<WeakType> ts;
    for (const auto& item : arr) ts.push_back(io::weaktype_from_json(g->value, item));
    const WeakType m = type_meet(ts);
    *out = dup_string(io::dump(io::weaktype_to_json(g->value, m)));
  });
}

ft_status ft_brute_type(const ft_flow* x, const char* f_set, int nmax, const char* flow_id,
                        int force, char** out) {
  return guard([&] {
    const auto* fin = std::get_if<FiniteFlow>(&x->value);
    if (!fin) throw PrecondError("brute_type needs a finite flow");
    const SymSet f = io::symset_from_text(fin->group(), f_set);
    const WeakType t = brute_type(*fin, f, nmax, flow_id ? flow_id : "", force != 0);
    *out = dup_string(io::dump(io::weaktype_to_json(fin->group(), t)));
  });
}

ft_status ft_factor_exists(const ft_flow* source, const ft_flow* target, char** out) {
  return guard([&] {
    const auto* fy = std::get_if<FiniteFlow>(&source->value);
    const auto* fx = std::get_if<FiniteFlow>(&target->value);
    if (!fy || !fx) throw PrecondError("factor search needs finite flows");
    *out = dup_string(io::dump(io::factor_to_json(factor_exists(*fy, *fx))));
  });
}

ft_status ft_verify_containment_theorem(const char* pairs, const char* f_set, char** out) {
  return guard([&] {
    const auto arr = io::parse_text(pairs);
    if (!arr.is_array()) throw ParseError("expected a JSON array of flow pairs");
    std::vector<std::pair<FiniteFlow, FiniteFlow>> ps;
    for (const auto& item : arr) {
      if (!item.is_array() || item.size() != 2)
        throw ParseError("each instance is a pair [X, Y]");
      Flow x = io::flow_from_json(item[0]);
      Flow y = io::flow_from_json(item[1]);
      const auto* fx = std::get_if<FiniteFlow>(&x);
      const auto* fy = std::get_if<FiniteFlow>(&y);
      if (!fx || !fy) throw ParseError("theorem instances must be finite flows");
      ps.emplace_back(*fx, *fy);
    }
    if (ps.empty()) throw ParseError("no instances given");
    const SymSet f = io::symset_from_text(ps.front().first.group(), f_set);
    const TheoremReport r = verify_containment_theorem(ps, f);
    *out = dup_string(io::dump(io::theorem_report_to_json(r)));
  });
}

} // extern "C"
