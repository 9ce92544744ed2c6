// Command-line front end: generate fixture posets, verify labelings and chain
// actions, compute flag vectors / quasisymmetric data, and run the
// supersolvability checks.  Exit codes: 0 = affirmative verdict or successful
// construction, 1 = negative verdict (witness printed), 2 = ill-formed input.
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snell/generators.hpp"
#include "snell/hecke.hpp"
#include "snell/io.hpp"
#include "snell/labeling.hpp"
#include "snell/perm.hpp"
#include "snell/poset.hpp"
#include "snell/qsym.hpp"
#include "snell/supersolvable.hpp"

using nlohmann::json;

namespace {

using namespace snell;

bool g_json = false;

std::string word_str(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string chain_str(const Poset& p, const Chain& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += " < ";
    s += p.name(c[i]);
  }
  return s;
}

json chain_json(const Poset& p, const Chain& c) {
  json a = json::array();
  for (int v : c) a.push_back(p.name(v));
  return a;
}

void emit_report(const json& report) {
  json wrapped = report;
  wrapped["format"] = 1;
  write_json("-", wrapped);
}

// Loads a poset document and requires it to be graded.
struct GradedInput {
  PosetDocument doc;
  GradingCertificate cert;
};

GradedInput load_graded(const std::string& path) {
  PosetDocument doc = poset_from_json(read_json(path));
  for (const auto& w : doc.poset.warnings()) std::cerr << "warning: " << w << "\n";
  GradingCertificate cert = grade(doc.poset);
  return {std::move(doc), std::move(cert)};
}

EdgeLabeling require_labels(const PosetDocument& doc) {
  if (!doc.labeling || !doc.labeling->total())
    fail(ErrorKind::UnlabeledEdge, "this command needs a fully labeled poset ('labels' field)");
  return *doc.labeling;
}

int run_gen(const std::string& family, int n, const std::string& out) {
  if (family != "bn" && n < 2)
    fail(ErrorKind::IndexOutOfRange, "partition families need n >= 2");
  if (family != "bn" && n > 7)
    fail(ErrorKind::IndexOutOfRange, "partition families are capped at n = 7");
  LabeledPoset lp = family == "bn"    ? gen_boolean(n)
                    : family == "pin" ? gen_partition_lattice(n)
                                      : gen_noncrossing(n);
  json doc = poset_to_json(lp.poset, &lp.labeling);
  if (g_json) {
    json report{{"command", "gen"}, {"family", family}, {"n", n}, {"ok", true}, {"poset", doc}};
    emit_report(report);
    if (out != "-") write_json(out, doc);
  } else {
    write_json(out, doc);
  }
  return 0;
}

int run_fixture(const std::string& name, const std::string& out) {
  json doc;
  if (name == "bowtie-action") {
    ActionFixture f = fixture_bowtie_action();
    doc = action_to_json(f.action);
  } else {
    LabeledPoset lp = fixture_b4_minus_edge();
    doc = poset_to_json(lp.poset, &lp.labeling);
  }
  if (g_json) {
    json report{{"command", "fixture"}, {"name", name}, {"ok", true}, {"document", doc}};
    emit_report(report);
    if (out != "-") write_json(out, doc);
  } else {
    write_json(out, doc);
  }
  return 0;
}

int run_check_graded(const std::string& in) {
  GradedInput g = load_graded(in);  // throws NotBounded / NotGraded with witness
  const Poset& p = g.doc.poset;
  std::vector<int> layer(g.cert.n + 1, 0);
  for (int v = 0; v < p.size(); ++v) ++layer[g.cert.rank[v]];
  if (g_json) {
    json ranks = json::object();
    for (int v = 0; v < p.size(); ++v) ranks[p.name(v)] = g.cert.rank[v];
    emit_report({{"command", "check-graded"},
                 {"ok", true},
                 {"n", g.cert.n},
                 {"bottom", p.name(g.cert.bottom)},
                 {"top", p.name(g.cert.top)},
                 {"rank", ranks}});
  } else {
    std::cout << "graded: yes\n";
    std::cout << "rank: " << g.cert.n << "\n";
    std::cout << "bottom: " << p.name(g.cert.bottom) << "  top: " << p.name(g.cert.top) << "\n";
    std::cout << "elements per rank:";
    for (int c : layer) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "property: unique bottom and top, every maximal chain has length " << g.cert.n
              << "\n";
  }
  return 0;
}

int run_check_lattice(const std::string& in) {
  GradedInput g = load_graded(in);
  const Poset& p = g.doc.poset;
  LatticeCheck lc = lattice_ops(p);
  if (lc.ok()) {
    if (g_json) {
      emit_report({{"command", "check-lattice"}, {"ok", true}, {"elements", p.size()}});
    } else {
      std::cout << "lattice: yes\n";
      std::cout << "property: every pair of elements has a unique meet and a unique join\n";
    }
    return 0;
  }
  const LatticeFailure& f = *lc.failure;
  json bounds = json::array();
  std::string bounds_str;
  for (size_t i = 0; i < f.extremal_bounds.size(); ++i) {
    bounds.push_back(p.name(f.extremal_bounds[i]));
    if (i) bounds_str += ", ";
    bounds_str += p.name(f.extremal_bounds[i]);
  }
  if (g_json) {
    emit_report({{"command", "check-lattice"},
                 {"ok", false},
                 {"on", f.on_join ? "join" : "meet"},
                 {"pair", json::array({p.name(f.a), p.name(f.b)})},
                 {"extremal_bounds", bounds}});
  } else {
    std::cout << "lattice: no\n";
    std::cout << "pair " << p.name(f.a) << ", " << p.name(f.b) << " has no "
              << (f.on_join ? "join" : "meet") << "; "
              << (f.on_join ? "minimal upper" : "maximal lower") << " bounds: " << bounds_str
              << "\n";
  }
  return 1;
}

int run_check_bowtie(const std::string& in) {
  PosetDocument doc = poset_from_json(read_json(in));
  BowtieCheck bc = is_bowtie_free(doc.poset);
  if (bc.bowtie_free) {
    if (g_json)
      emit_report({{"command", "check-bowtie"}, {"ok", true}});
    else {
      std::cout << "bowtie-free: yes\n";
      std::cout << "property: no two elements cover the same two elements\n";
    }
    return 0;
  }
  auto [a, b, c, d] = *bc.witness;
  if (g_json) {
    emit_report({{"command", "check-bowtie"},
                 {"ok", false},
                 {"witness", json::array({doc.poset.name(a), doc.poset.name(b), doc.poset.name(c),
                                          doc.poset.name(d)})}});
  } else {
    std::cout << "bowtie-free: no\n";
    std::cout << "witness: " << doc.poset.name(a) << " and " << doc.poset.name(b)
              << " both cover " << doc.poset.name(c) << " and " << doc.poset.name(d) << "\n";
  }
  return 1;
}

json verdict_json(const Poset& p, const LabelVerdict& v) {
  json j{{"ok", v.ok}};
  if (!v.ok) {
    j["reason"] = v.reason;
    j["lower"] = p.name(v.lower);
    j["upper"] = p.name(v.upper);
    j["chain_a"] = chain_json(p, v.chain_a);
    if (!v.chain_b.empty()) j["chain_b"] = chain_json(p, v.chain_b);
  }
  return j;
}

void print_verdict(const Poset& p, const EdgeLabeling& lab, const LabelVerdict& v) {
  std::cout << "reason: " << v.reason << "\n";
  std::cout << "interval " << p.name(v.lower) << ".." << p.name(v.upper) << ": chains "
            << word_str(chain_word(p, lab, v.chain_a));
  if (!v.chain_b.empty()) std::cout << ", " << word_str(chain_word(p, lab, v.chain_b));
  std::cout << "\n";
}

int run_verify_el(const std::string& in, bool snelling_mode) {
  GradedInput g = load_graded(in);
  EdgeLabeling lab = require_labels(g.doc);
  LabelVerdict v = snelling_mode ? verify_snelling(g.doc.poset, g.cert, lab)
                                 : verify_el(g.doc.poset, g.cert, lab);
  const char* what = snelling_mode ? "snelling" : "EL-labeling";
  if (g_json) {
    json j = verdict_json(g.doc.poset, v);
    j["command"] = snelling_mode ? "verify-snelling" : "verify-el";
    emit_report(j);
  } else {
    std::cout << what << ": " << (v.ok ? "yes" : "no") << "\n";
    if (!v.ok) print_verdict(g.doc.poset, lab, v);
    std::cout << "property: every interval has exactly one increasing maximal chain, and its "
                 "word is lexicographically least\n";
    if (snelling_mode)
      std::cout << "property: every maximal chain's word is a permutation of {1.."
                << g.cert.n << "}\n";
  }
  return v.ok ? 0 : 1;
}

int run_find_snelling(const std::string& in, const std::string& out) {
  GradedInput g = load_graded(in);
  auto found = find_snelling(g.doc.poset, g.cert);
  if (!found) {
    if (g_json)
      emit_report({{"command", "find-snelling"}, {"ok", false}, {"reason", "not snellable"}});
    else
      std::cout << "snelling: none exists\n";
    return 1;
  }
  json doc = poset_to_json(g.doc.poset, &*found);
  if (g_json) {
    emit_report({{"command", "find-snelling"}, {"ok", true}, {"poset", doc}});
    if (out != "-") write_json(out, doc);
  } else {
    write_json(out, doc);
  }
  return 0;
}

int run_build_action(const std::string& in, const std::string& out) {
  GradedInput g = load_graded(in);
  EdgeLabeling lab = require_labels(g.doc);
  ChainAction a = action_from_snelling(g.doc.poset, g.cert, lab);
  json doc = action_to_json(a);
  if (g_json) {
    emit_report({{"command", "build-action"}, {"ok", true}, {"action", doc}});
    if (out != "-") write_json(out, doc);
  } else {
    write_json(out, doc);
  }
  return 0;
}

int run_verify_hecke(const std::string& in) {
  ChainAction a = action_from_json(read_json(in));
  HeckeVerdict v = verify_hecke(a);
  if (g_json) {
    json j{{"command", "verify-hecke"}, {"ok", v.ok}, {"chains", a.num_chains()}, {"n", a.n()}};
    if (!v.ok) {
      j["relation"] = v.witness->relation;
      j["chain"] = chain_json(a.poset(), a.chain(v.witness->chain));
      j["i"] = v.witness->i;
      j["j"] = v.witness->j;
    }
    emit_report(j);
  } else {
    std::cout << "relations: " << (v.ok ? "ok" : "violated") << "\n";
    if (!v.ok) {
      std::cout << v.witness->relation << " fails at chain "
                << chain_str(a.poset(), a.chain(v.witness->chain)) << " (i=" << v.witness->i;
      if (v.witness->j >= 0) std::cout << ", j=" << v.witness->j;
      std::cout << ")\n";
    }
    std::cout << "property: locality, idempotency, far commutation, braid\n";
  }
  return v.ok ? 0 : 1;
}

int run_verify_good(const std::string& in) {
  ChainAction a = action_from_json(read_json(in));
  HeckeVerdict hv = verify_hecke(a);
  if (!hv.ok) {
    if (g_json)
      emit_report({{"command", "verify-good"},
                   {"ok", false},
                   {"reason", "operator relations violated"},
                   {"relation", hv.witness->relation}});
    else
      std::cout << "good action: no (operator relations violated: " << hv.witness->relation
                << ")\n";
    return 1;
  }
  GoodVerdict v = verify_good(a);
  QSymL ch = ch_of_action(a);
  if (g_json) {
    json j{{"command", "verify-good"}, {"ok", v.ok}};
    json coeffs = json::object();
    for (uint32_t s = 0; s < ch.coeffs.size(); ++s)
      coeffs[subset_to_string(s, ch.n)] = ch.coeffs[s];
    j["ch"] = coeffs;
    if (!v.ok) {
      j["failing_set"] = subset_to_string(v.failing_mask, a.n());
      j["alpha"] = v.alpha;
      j["chains_with_descents_inside"] = v.chain_count;
    }
    emit_report(j);
  } else {
    std::cout << "good action: " << (v.ok ? "yes" : "no") << "\n";
    if (!v.ok) {
      std::cout << "first failing S=" << subset_to_string(v.failing_mask, a.n())
                << ": alpha=" << v.alpha << ", chains with descent set inside S=" << v.chain_count
                << "\n";
    }
    for (uint32_t s = 0; s < ch.coeffs.size(); ++s)
      if (ch.coeffs[s] != 0)
        std::cout << "ch S=" << subset_to_string(s, ch.n) << ": " << ch.coeffs[s] << "\n";
    std::cout << "property: for every S, the rank-selected chain count equals the number of "
                 "chains with descent set inside S\n";
  }
  return v.ok ? 0 : 1;
}

int run_reconstruct(const std::string& in, const std::string& out) {
  ChainAction a = action_from_json(read_json(in));
  EdgeLabeling lab = reconstruct_labeling(a);  // throws with witness on failure
  json doc = poset_to_json(a.poset(), &lab);
  if (g_json) {
    emit_report({{"command", "reconstruct"}, {"ok", true}, {"poset", doc}});
    if (out != "-") write_json(out, doc);
  } else {
    write_json(out, doc);
  }
  return 0;
}

int run_flag_vectors(const std::string& in) {
  GradedInput g = load_graded(in);
  auto alpha = flag_f(g.doc.poset, g.cert);
  auto beta = flag_h(alpha);
  if (g_json) {
    json ja = json::object(), jb = json::object();
    for (uint32_t s = 0; s < alpha.size(); ++s) {
      ja[subset_to_string(s, g.cert.n)] = alpha[s];
      jb[subset_to_string(s, g.cert.n)] = beta[s];
    }
    emit_report(
        {{"command", "flag-vectors"}, {"ok", true}, {"n", g.cert.n}, {"alpha", ja}, {"beta", jb}});
  } else {
    std::cout << "n: " << g.cert.n << "\n";
    for (uint32_t s = 0; s < alpha.size(); ++s)
      std::cout << "S=" << subset_to_string(s, g.cert.n) << ": alpha=" << alpha[s]
                << " beta=" << beta[s] << "\n";
  }
  return 0;
}

std::string monomial_str(const std::vector<int>& exps) {
  std::string s;
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(j + 1);
    if (exps[j] > 1) s += "^" + std::to_string(exps[j]);
  }
  return s.empty() ? "1" : s;
}

int run_fp(const std::string& in, bool apply_omega, int m_vars) {
  GradedInput g = load_graded(in);
  QSymL f = f_p(g.doc.poset, g.cert);
  if (apply_omega) f = omega_involution(f);
  if (g_json) {
    json coeffs = json::object();
    for (uint32_t s = 0; s < f.coeffs.size(); ++s)
      coeffs[subset_to_string(s, f.n)] = f.coeffs[s];
    json j{{"command", "fp"}, {"ok", true}, {"n", f.n}, {"omega", apply_omega}, {"coeffs", coeffs}};
    if (m_vars > 0) {
      Polynomial poly = evaluate(f, m_vars);
      json terms = json::object();
      for (const auto& [e, c] : poly.terms) terms[monomial_str(e)] = c;
      j["expansion"] = terms;
      j["variables"] = m_vars;
    }
    emit_report(j);
  } else {
    std::cout << (apply_omega ? "omega F_P" : "F_P") << " in the fundamental basis, degree "
              << f.n << ":\n";
    for (uint32_t s = 0; s < f.coeffs.size(); ++s)
      if (f.coeffs[s] != 0)
        std::cout << "S=" << subset_to_string(s, f.n) << ": " << f.coeffs[s] << "\n";
    if (m_vars > 0) {
      Polynomial poly = evaluate(f, m_vars);
      std::cout << "expansion in " << m_vars << " variables:\n";
      for (const auto& [e, c] : poly.terms) std::cout << monomial_str(e) << ": " << c << "\n";
    }
  }
  return 0;
}

int run_supersolvable(const std::string& in, const std::string& method) {
  GradedInput g = load_graded(in);
  const Poset& p = g.doc.poset;

  std::optional<SupersolvableCheck> direct;
  std::optional<bool> snelling;
  if (method == "direct" || method == "both") direct = is_supersolvable_direct(p, g.cert);
  if (method == "snelling" || method == "both")
    snelling = is_supersolvable_via_snelling(p, g.cert);

  bool verdict = direct ? direct->supersolvable : *snelling;
  bool agree = !(direct && snelling) || direct->supersolvable == *snelling;

  if (g_json) {
    json j{{"command", "supersolvable"}, {"method", method}, {"ok", verdict && agree}};
    if (direct) {
      j["direct"] = direct->supersolvable;
      if (direct->supersolvable) j["m_chain"] = chain_json(p, direct->m_chain);
      j["checked_chains"] = direct->checked_chains;
    }
    if (snelling) j["snelling"] = *snelling;
    if (!agree) j["disagreement"] = true;
    emit_report(j);
  } else {
    std::cout << "supersolvable: " << (verdict ? "yes" : "no") << "\n";
    if (direct && direct->supersolvable)
      std::cout << "M-chain: " << chain_str(p, direct->m_chain) << "\n";
    if (direct && !direct->supersolvable && direct->witness) {
      std::cout << "first candidate fails with chain " << chain_str(p, direct->witness->other_chain)
                << ": non-distributive triple " << p.name(direct->witness->triple[0]) << ", "
                << p.name(direct->witness->triple[1]) << ", " << p.name(direct->witness->triple[2])
                << "\n";
    }
    if (direct && snelling)
      std::cout << "methods agree: " << (agree ? "yes" : "NO — internal inconsistency") << "\n";
    std::cout << "property: some maximal chain generates a distributive sublattice together "
                 "with every other maximal chain\n";
    if (snelling)
      std::cout << "property: such a chain exists exactly when a labeling with permutation "
                   "chain words exists\n";
  }
  if (!agree) return 1;
  return verdict ? 0 : 1;
}

int run_qm(const std::string& in, const std::vector<std::string>& chain_names, int chain_index) {
  GradedInput g = load_graded(in);
  const Poset& p = g.doc.poset;
  EdgeLabeling lab = require_labels(g.doc);
  LatticeCheck lc = lattice_ops(p);
  if (!lc.ok())
    fail(ErrorKind::NotALattice, "the closure analysis needs a lattice");
  ChainAction a = action_from_snelling(p, g.cert, lab);

  int idx = chain_index;
  if (!chain_names.empty()) {
    Chain c;
    for (const auto& name : chain_names) {
      auto v = p.index_of(name);
      if (!v) fail(ErrorKind::UnknownElement, "chain references '" + name + "'");
      c.push_back(*v);
    }
    idx = a.chain_index(c);
  }
  if (idx < 0 || idx >= a.num_chains())
    fail(ErrorKind::UnknownChain, "chain index " + std::to_string(idx) + " out of range");

  UClosure c = u_closure(a, lab, idx);
  Perm w = omega_of_chain(a, idx);
  IsoVerdict iso = verify_closure_isomorphism(c, w);
  IsoVerdict sub = verify_sublattice_equality(p, *lc.table, a, lab, idx);
  bool ok = iso.ok && sub.ok;

  if (g_json) {
    json chains = json::array();
    for (int ci : c.chain_indices)
      chains.push_back({{"chain", chain_json(p, a.chain(ci))},
                        {"word", chain_word(p, lab, a.chain(ci))}});
    json elems = json::object();
    for (int v : c.elements) elems[p.name(v)] = subset_to_string(c.label_sets.at(v), g.cert.n + 1);
    json j{{"command", "qm"},       {"ok", ok},
           {"omega", w.to_string()}, {"orbit", chains},
           {"elements", elems},      {"ideal_lattice_isomorphism", iso.ok},
           {"sublattice_equality", sub.ok}};
    if (!iso.ok) j["isomorphism_detail"] = iso.detail;
    if (!sub.ok) j["sublattice_detail"] = sub.detail;
    emit_report(j);
  } else {
    std::cout << "chain: " << chain_str(p, a.chain(idx)) << "\n";
    std::cout << "omega: " << w.to_string() << "\n";
    std::cout << "orbit chains (" << c.chain_indices.size() << "):\n";
    for (int ci : c.chain_indices)
      std::cout << "  " << chain_str(p, a.chain(ci)) << "  word "
                << word_str(chain_word(p, lab, a.chain(ci))) << "\n";
    std::cout << "closure elements (" << c.elements.size() << "), with label sets:\n";
    for (int v : c.elements)
      std::cout << "  " << p.name(v) << ": " << subset_to_string(c.label_sets.at(v), g.cert.n + 1)
                << "\n";
    std::cout << "isomorphic to the ideal lattice of the inversion-complement order: "
              << (iso.ok ? "yes" : "no") << "\n";
    if (!iso.ok) std::cout << "  " << iso.detail << "\n";
    std::cout << "equals the sublattice generated with the sink chain: "
              << (sub.ok ? "yes" : "no") << "\n";
    if (!sub.ok) std::cout << "  " << sub.detail << "\n";
    std::cout << "property: the closure of a chain under the operators is, via its label sets, "
                 "the ideal lattice of the complement of its inversion order\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded-poset labelings, chain operators, and flag invariants"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "emit a machine-readable report");

  int rc = 0;

  // gen <family> <n> [-o out]
  std::string gen_family;
  int gen_n = 3;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "generate a labeled fixture family member");
  gen->add_option("family", gen_family, "bn | pin | nc")
      ->required()
      ->check(CLI::IsMember({"bn", "pin", "nc"}));
  gen->add_option("n", gen_n, "index of the family member")->required()->check(CLI::Range(1, 8));
  gen->add_option("-o,--output", gen_out, "output file ('-' = stdout)");
  gen->fallthrough();
  gen->callback([&] { rc = run_gen(gen_family, gen_n, gen_out); });

  // fixture <name> [-o out]
  std::string fix_name, fix_out = "-";
  auto* fix = app.add_subcommand("fixture", "emit one of the sporadic fixtures");
  fix->add_option("name", fix_name, "bowtie-action | b4-minus-edge")
      ->required()
      ->check(CLI::IsMember({"bowtie-action", "b4-minus-edge"}));
  fix->add_option("-o,--output", fix_out, "output file ('-' = stdout)");
  fix->fallthrough();
  fix->callback([&] { rc = run_fixture(fix_name, fix_out); });

  auto add_input = [](CLI::App* cmd, std::string& var) {
    cmd->add_option("input", var, "poset file ('-' = stdin)");
    cmd->fallthrough();
  };

  std::string in_graded = "-";
  auto* cg = app.add_subcommand("check-graded", "bounded + graded check with rank report");
  add_input(cg, in_graded);
  cg->callback([&] { rc = run_check_graded(in_graded); });

  std::string in_lattice = "-";
  auto* cl = app.add_subcommand("check-lattice", "meet/join existence for every pair");
  add_input(cl, in_lattice);
  cl->callback([&] { rc = run_check_lattice(in_lattice); });

  std::string in_bowtie = "-";
  auto* cb = app.add_subcommand("check-bowtie", "search for two elements covering the same two");
  add_input(cb, in_bowtie);
  cb->callback([&] { rc = run_check_bowtie(in_bowtie); });

  std::string in_el = "-";
  auto* vel = app.add_subcommand("verify-el", "check the labeling is an EL-labeling");
  add_input(vel, in_el);
  vel->callback([&] { rc = run_verify_el(in_el, false); });

  std::string in_sn = "-";
  auto* vsn = app.add_subcommand("verify-snelling",
                                 "check the labeling is an EL-labeling with permutation words");
  add_input(vsn, in_sn);
  vsn->callback([&] { rc = run_verify_el(in_sn, true); });

  std::string in_find = "-", out_find = "-";
  auto* fs = app.add_subcommand("find-snelling", "search for a permutation-word EL-labeling");
  add_input(fs, in_find);
  fs->add_option("-o,--output", out_find, "output file ('-' = stdout)");
  fs->callback([&] { rc = run_find_snelling(in_find, out_find); });

  std::string in_ba = "-", out_ba = "-";
  auto* ba = app.add_subcommand("build-action", "derive the chain operators from a labeling");
  add_input(ba, in_ba);
  ba->add_option("-o,--output", out_ba, "output file ('-' = stdout)");
  ba->callback([&] { rc = run_build_action(in_ba, out_ba); });

  std::string in_vh = "-";
  auto* vh = app.add_subcommand("verify-hecke", "check the four operator relations");
  add_input(vh, in_vh);
  vh->callback([&] { rc = run_verify_hecke(in_vh); });

  std::string in_vg = "-";
  auto* vg = app.add_subcommand("verify-good",
                                "compare rank-selected chain counts with descent statistics");
  add_input(vg, in_vg);
  vg->callback([&] { rc = run_verify_good(in_vg); });

  std::string in_rc = "-", out_rc = "-";
  auto* rec = app.add_subcommand("reconstruct", "recover an edge labeling from a good action");
  add_input(rec, in_rc);
  rec->add_option("-o,--output", out_rc, "output file ('-' = stdout)");
  rec->callback([&] { rc = run_reconstruct(in_rc, out_rc); });

  std::string in_fv = "-";
  auto* fv = app.add_subcommand("flag-vectors", "rank-selected chain counts and their transform");
  add_input(fv, in_fv);
  fv->callback([&] { rc = run_flag_vectors(in_fv); });

  std::string in_fp = "-";
  bool fp_omega = false;
  int fp_m = 0;
  auto* fp = app.add_subcommand("fp", "flag quasisymmetric function in the fundamental basis");
  add_input(fp, in_fp);
  fp->add_flag("--omega", fp_omega, "apply the complementation involution first");
  fp->add_option("-m,--variables", fp_m, "also expand in this many variables")
      ->check(CLI::Range(1, 6));
  fp->callback([&] { rc = run_fp(in_fp, fp_omega, fp_m); });

  std::string in_ss = "-", ss_method = "direct";
  auto* ss = app.add_subcommand("supersolvable", "M-chain search / labeling-based equivalent");
  add_input(ss, in_ss);
  ss->add_option("--method", ss_method, "direct | snelling | both")
      ->check(CLI::IsMember({"direct", "snelling", "both"}));
  ss->callback([&] { rc = run_supersolvable(in_ss, ss_method); });

  std::string in_qm = "-";
  std::vector<std::string> qm_chain;
  int qm_index = -1;
  auto* qm = app.add_subcommand("qm", "closure of a chain under the operators, with label sets");
  add_input(qm, in_qm);
  qm->add_option("--chain", qm_chain, "the chain, bottom to top, as element names");
  qm->add_option("--chain-index", qm_index, "index into the lexicographic chain list");
  qm->callback([&] {
    if (qm_chain.empty() && qm_index < 0)
      fail(ErrorKind::UnknownChain, "pass --chain or --chain-index");
    rc = run_qm(in_qm, qm_chain, qm_index);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const snell::AmbiguousPermutationError& e) {
    if (g_json) {
      emit_report({{"ok", false},
                   {"error", "chain permutation is ambiguous"},
                   {"detail", e.what()},
                   {"word_a", e.word_a},
                   {"word_b", e.word_b},
                   {"perm_a", e.perm_a},
                   {"perm_b", e.perm_b}});
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  } catch (const snell::Error& e) {
    if (g_json)
      emit_report({{"ok", false}, {"error", to_string(e.kind())}, {"detail", e.what()}});
    else
      std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
