// flowtype: JSON-in/JSON-out command line over the flowtype C API.
//
// Exit codes: 0 success (verdicts live inside the JSON result), 2 malformed
// input, 3 violated precondition or search guard, 1 internal error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowtype/flowtype_c.h"

namespace {

int g_exit = 0;

// Arguments may be inline JSON or a path to a JSON file.
std::string load_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[' || arg[0] == '"')) return arg;
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "error: cannot open '" << arg << "'\n";
    std::exit(2);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void fail(ft_status st) {
  std::cerr << "error: " << ft_last_error() << "\n";
  std::exit(st == FT_ERROR_PARSE ? 2 : st == FT_ERROR_PRECONDITION ? 3 : 1);
}

void check(ft_status st) {
  if (st != FT_OK) fail(st);
}

void emit(char* doc) {
  std::cout << doc;
  ft_string_free(doc);
}

struct GroupHandle {
  ft_group* ptr = nullptr;
  explicit GroupHandle(const std::string& arg) { check(ft_group_parse(load_arg(arg).c_str(), &ptr)); }
  ~GroupHandle() { ft_group_free(ptr); }
};

struct FlowHandle {
  ft_flow* ptr = nullptr;
  explicit FlowHandle(const std::string& arg) { check(ft_flow_parse(load_arg(arg).c_str(), &ptr)); }
  ~FlowHandle() { ft_flow_free(ptr); }
};

struct SeminormHandle {
  ft_seminorm* ptr = nullptr;
  SeminormHandle(const ft_group* g, const std::string& arg) {
    check(ft_seminorm_parse(g, load_arg(arg).c_str(), &ptr));
  }
  ~SeminormHandle() { ft_seminorm_free(ptr); }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"seminorm calculus, subshift clopen engine and weak-type machinery"};
  app.require_subcommand(1);

  // --- group arithmetic ---
  std::string group_arg, a_arg, b_arg, gens_arg, elem_arg;
  int radius = 0;
  auto* mul = app.add_subcommand("mul", "multiply two group elements");
  mul->add_option("--group", group_arg)->required();
  mul->add_option("--a", a_arg)->required();
  mul->add_option("--b", b_arg)->required();
  mul->callback([&] {
    GroupHandle g(group_arg);
    char* out = nullptr;
    check(ft_group_mul(g.ptr, a_arg.c_str(), b_arg.c_str(), &out));
    emit(out);
  });

  auto* inv = app.add_subcommand("inv", "invert a group element");
  inv->add_option("--group", group_arg)->required();
  inv->add_option("--a", a_arg)->required();
  inv->callback([&] {
    GroupHandle g(group_arg);
    char* out = nullptr;
    check(ft_group_inv(g.ptr, a_arg.c_str(), &out));
    emit(out);
  });

  auto* ball_cmd = app.add_subcommand("ball", "product ball of a symmetric generating set");
  ball_cmd->add_option("--group", group_arg)->required();
  ball_cmd->add_option("--gens", gens_arg)->required();
  ball_cmd->add_option("--radius", radius)->required();
  ball_cmd->callback([&] {
    GroupHandle g(group_arg);
    char* out = nullptr;
    check(ft_group_ball(g.ptr, gens_arg.c_str(), radius, &out));
    emit(out);
  });

  // --- seminorms ---
  std::string sigma_arg, sigma2_arg, f_set_arg, eps_arg, delta_arg, c_arg, domain_arg = "[]";
  std::string support_arg = "[]";
  auto* seval = app.add_subcommand("seminorm-eval", "evaluate a seminorm at an element");
  seval->add_option("--group", group_arg)->required();
  seval->add_option("--sigma", sigma_arg)->required();
  seval->add_option("--g", elem_arg)->required();
  seval->callback([&] {
    GroupHandle g(group_arg);
    SeminormHandle s(g.ptr, sigma_arg);
    char* out = nullptr;
    check(ft_seminorm_eval(s.ptr, elem_arg.c_str(), &out));
    emit(out);
  });

  auto* phi = app.add_subcommand("phi", "evaluate the discounted-extension seminorm");
  phi->add_option("--group", group_arg)->required();
  phi->add_option("--sigma", sigma_arg)->required();
  phi->add_option("--sigma-prime", sigma2_arg)->required();
  phi->add_option("--F", f_set_arg)->required();
  phi->add_option("--eps", eps_arg)->required();
  phi->add_option("--g", elem_arg)->required();
  phi->add_option("--support", support_arg, "JSON array; empty = whole finite group");
  phi->callback([&] {
    GroupHandle g(group_arg);
    SeminormHandle s(g.ptr, sigma_arg);
    SeminormHandle sp(g.ptr, sigma2_arg);
    char* out = nullptr;
    check(ft_phi_eval(s.ptr, sp.ptr, f_set_arg.c_str(), eps_arg.c_str(), elem_arg.c_str(),
                      load_arg(support_arg).c_str(), &out));
    emit(out);
  });

  auto* bk = app.add_subcommand("bk-check", "verify the dyadic chain bounds");
  bk->add_option("--group", group_arg)->required();
  bk->add_option("--chain", sigma_arg)->required();
  bk->callback([&] {
    GroupHandle g(group_arg);
    SeminormHandle s(g.ptr, sigma_arg);
    char* out = nullptr;
    check(ft_bk_check(s.ptr, &out));
    const bool bad_precondition =
        nlohmann::json::parse(out).value("precondition", "ok") != std::string("ok");
    emit(out);
    if (bad_precondition) {
      std::cerr << "error: chain fails the U_{n+1}^3 nesting precondition\n";
      g_exit = 3;
    }
  });

  auto* fubini = app.add_subcommand("fubini-witness", "witness for the finite-group Phi bound");
  fubini->add_option("--group", group_arg)->required();
  fubini->add_option("--sigma0", sigma_arg)->required();
  fubini->add_option("--sigma2", sigma2_arg)->required();
  fubini->add_option("--delta", delta_arg)->required();
  fubini->callback([&] {
    GroupHandle g(group_arg);
    SeminormHandle s0(g.ptr, sigma_arg);
    SeminormHandle s2(g.ptr, sigma2_arg);
    char* out = nullptr;
    check(ft_fubini_witness(s0.ptr, s2.ptr, delta_arg.c_str(), &out));
    emit(out);
  });

  std::string space_arg, f_vec_arg;
  auto* lip = app.add_subcommand("lipschitz-correct", "round a near-Lipschitz function");
  lip->add_option("--space", space_arg)->required();
  lip->add_option("--f", f_vec_arg)->required();
  lip->add_option("--delta", delta_arg)->required();
  lip->callback([&] {
    char* out = nullptr;
    check(ft_lipschitz_correct(load_arg(space_arg).c_str(), load_arg(f_vec_arg).c_str(),
                               delta_arg.c_str(), &out));
    emit(out);
  });

  auto* sball = app.add_subcommand("seminorm-ball", "strict sublevel set over a domain");
  sball->add_option("--group", group_arg)->required();
  sball->add_option("--sigma", sigma_arg)->required();
  sball->add_option("--c", c_arg)->required();
  sball->add_option("--domain", domain_arg)->required();
  sball->callback([&] {
    GroupHandle g(group_arg);
    SeminormHandle s(g.ptr, sigma_arg);
    char* out = nullptr;
    check(ft_seminorm_ball(s.ptr, c_arg.c_str(), load_arg(domain_arg).c_str(), &out));
    emit(out);
  });

  // --- flows ---
  std::string flow_arg, set_arg, family_arg, u_arg, y_flow_arg;
  long long shift_n = 0;
  int px = 0, py = 0;
  auto* empty_cmd = app.add_subcommand("sft-empty", "is a clopen set empty in the flow?");
  empty_cmd->add_option("--flow", flow_arg)->required();
  empty_cmd->add_option("--set", set_arg)->required();
  empty_cmd->callback([&] {
    FlowHandle x(flow_arg);
    char* out = nullptr;
    check(ft_flow_is_empty(x.ptr, load_arg(set_arg).c_str(), &out));
    emit(out);
  });

  auto* cover_cmd = app.add_subcommand("sft-cover", "does a family cover the flow?");
  cover_cmd->add_option("--flow", flow_arg)->required();
  cover_cmd->add_option("--family", family_arg)->required();
  cover_cmd->callback([&] {
    FlowHandle x(flow_arg);
    char* out = nullptr;
    check(ft_flow_is_cover(x.ptr, load_arg(family_arg).c_str(), &out));
    emit(out);
  });

  auto* trans_cmd = app.add_subcommand("translate", "shift a clopen window");
  trans_cmd->add_option("--set", set_arg)->required();
  trans_cmd->add_option("--n", shift_n)->required();
  trans_cmd->callback([&] {
    ft_clopen* c = nullptr;
    check(ft_clopen_parse(load_arg(set_arg).c_str(), &c));
    ft_clopen* moved = nullptr;
    check(ft_clopen_translate(c, shift_n, &moved));
    char* out = nullptr;
    check(ft_clopen_to_json(moved, &out));
    emit(out);
    ft_clopen_free(moved);
    ft_clopen_free(c);
  });

  auto* ru = app.add_subcommand("r-u-disjoint", "is (A x B) disjoint from the U-relation?");
  ru->add_option("--flow", flow_arg)->required();
  ru->add_option("--A", set_arg)->required();
  ru->add_option("--B", family_arg)->required();
  ru->add_option("--U", u_arg)->required();
  ru->callback([&] {
    FlowHandle x(flow_arg);
    char* out = nullptr;
    check(ft_flow_r_u_disjoint(x.ptr, load_arg(set_arg).c_str(), load_arg(family_arg).c_str(),
                               u_arg.c_str(), &out));
    emit(out);
  });

  auto* tt = app.add_subcommand("transitive", "topological transitivity");
  tt->add_option("--flow", flow_arg)->required();
  tt->callback([&] {
    FlowHandle x(flow_arg);
    char* out = nullptr;
    check(ft_flow_transitive(x.ptr, &out));
    emit(out);
  });

  auto* psig = app.add_subcommand("partial-sigma", "orbit seminorm distance on a finite flow");
  psig->add_option("--flow", flow_arg)->required();
  psig->add_option("--sigma", sigma_arg)->required();
  psig->add_option("--x", px)->required();
  psig->add_option("--y", py)->required();
  psig->callback([&] {
    FlowHandle x(flow_arg);
    ft_group* g = nullptr;
    check(ft_flow_group(x.ptr, &g));
    SeminormHandle s(g, sigma_arg);
    char* out = nullptr;
    check(ft_flow_partial_sigma(x.ptr, s.ptr, px, py, &out));
    emit(out);
    ft_group_free(g);
  });

  // --- weak types ---
  std::string structure_arg, types_arg;
  int n_arg = 1, w_arg = 0, wx_arg = 0, wy_arg = 0, nmax_arg = 1;
  bool force = false;
  auto* fs = app.add_subcommand("full-structure", "full structure of an ordered family");
  fs->add_option("--flow", flow_arg)->required();
  fs->add_option("--family", family_arg)->required();
  fs->add_option("--F", f_set_arg)->required();
  fs->callback([&] {
    FlowHandle x(flow_arg);
    char* out = nullptr;
    check(ft_full_structure(x.ptr, load_arg(family_arg).c_str(), f_set_arg.c_str(), &out));
    emit(out);
  });

  auto* rz = app.add_subcommand("realizes", "search a realization at bounded window");
  rz->add_option("--flow", flow_arg)->required();
  rz->add_option("--structure", structure_arg)->required();
  rz->add_option("--w", w_arg);
  rz->callback([&] {
    FlowHandle x(flow_arg);
    ft_group* g = nullptr;
    check(ft_flow_group(x.ptr, &g));
    ft_structure* m = nullptr;
    check(ft_structure_parse(g, load_arg(structure_arg).c_str(), &m));
    char* out = nullptr;
    check(ft_realizes(x.ptr, m, w_arg, &out));
    emit(out);
    ft_structure_free(m);
    ft_group_free(g);
  });

  auto* type_cmd = app.add_subcommand("type", "enumerate the weak type at a resolution");
  type_cmd->add_option("--flow", flow_arg)->required();
  type_cmd->add_option("--F", f_set_arg)->required();
  type_cmd->add_option("--n", n_arg)->required();
  type_cmd->add_option("--w", w_arg);
  type_cmd->add_flag("--force", force, "override search guards");
  type_cmd->callback([&] {
    FlowHandle x(flow_arg);
    char* out = nullptr;
    check(ft_enumerate_type(x.ptr, f_set_arg.c_str(), n_arg, w_arg, flow_arg.c_str(),
                            force ? 1 : 0, &out));
    emit(out);
  });

  auto* contain = app.add_subcommand("contain", "weak-type containment verdict");
  contain->add_option("--X", flow_arg)->required();
  contain->add_option("--Y", y_flow_arg)->required();
  contain->add_option("--F", f_set_arg)->required();
  contain->add_option("--n", n_arg)->required();
  contain->add_option("--wX", wx_arg);
  contain->add_option("--wY", wy_arg);
  contain->add_flag("--force", force, "override search guards");
  contain->callback([&] {
    FlowHandle x(flow_arg);
    FlowHandle y(y_flow_arg);
    char* out = nullptr;
    check(ft_check_containment(x.ptr, y.ptr, f_set_arg.c_str(), n_arg, wx_arg, wy_arg,
                               force ? 1 : 0, &out));
    emit(out);
  });

  auto* meet = app.add_subcommand("type-meet", "intersection of weak types");
  meet->add_option("--group", group_arg)->required();
  meet->add_option("--types", types_arg)->required();
  meet->callback([&] {
    GroupHandle g(group_arg);
    char* out = nullptr;
    check(ft_type_meet(g.ptr, load_arg(types_arg).c_str(), &out));
    emit(out);
  });

  auto* brute = app.add_subcommand("brute-type", "exact weak type of a finite flow");
  brute->add_option("--flow", flow_arg)->required();
  brute->add_option("--F", f_set_arg)->required();
  brute->add_option("--nmax", nmax_arg)->required();
  brute->add_flag("--force", force, "override search guards");
  brute->callback([&] {
    FlowHandle x(flow_arg);
    char* out = nullptr;
    check(ft_brute_type(x.ptr, f_set_arg.c_str(), nmax_arg, flow_arg.c_str(), force ? 1 : 0,
                        &out));
    emit(out);
  });

  auto* factor = app.add_subcommand("factor", "equivariant surjection search");
  factor->add_option("--from", flow_arg)->required();
  factor->add_option("--to", y_flow_arg)->required();
  factor->callback([&] {
    FlowHandle src(flow_arg);
    FlowHandle dst(y_flow_arg);
    char* out = nullptr;
    check(ft_factor_exists(src.ptr, dst.ptr, &out));
    emit(out);
  });

  auto* thm = app.add_subcommand("verify-theorem", "factor search vs type containment");
  thm->add_option("--pairs", family_arg)->required();
  thm->add_option("--F", f_set_arg)->required();
  thm->callback([&] {
    char* out = nullptr;
    check(ft_verify_containment_theorem(load_arg(family_arg).c_str(), f_set_arg.c_str(), &out));
    emit(out);
  });

  CLI11_PARSE(app, argc, argv);
  return g_exit;
}
