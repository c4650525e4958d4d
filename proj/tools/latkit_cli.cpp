// Command-line front end: loads workspace files, runs the law suites, and
// prints deterministic line-oriented reports.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latkit/latkit.hpp"

namespace {

using namespace latkit;

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::vector<std::string> files;
  int cap = kDefaultEnumCap;
  unsigned seed = 0;
  std::string format = "text";
};

void print_report(const Options& opt, const std::string& section,
                  const Report& rep) {
  if (opt.format == "text") std::cout << "== " << section << " ==\n";
  for (const auto& l : rep.laws) {
    std::cout << "LAW " << section << "." << l.name
              << (l.pass ? " PASS" : " FAIL");
    if (!l.pass) std::cout << " witness=" << l.witness;
    std::cout << "\n";
  }
}

int cmd_check(const Options& opt, const Workspace& ws) {
  bool ok = true;
  for (const auto& l : ws.lattices) {
    print_report(opt, "lattice." + l.name, l.validation);
    ok = ok && l.validation.all_pass();
  }
  for (const auto& r : ws.relations) {
    print_report(opt, "relation." + r.name, r.validation);
    ok = ok && r.validation.all_pass();
  }
  for (const auto& q : ws.quantales) {
    print_report(opt, "quantale." + q.name, q.validation);
    ok = ok && q.validation.all_pass();
  }
  for (const auto& a : ws.actions) {
    print_report(opt, "action." + a.name, a.validation);
    ok = ok && a.validation.all_pass();
  }
  return ok ? kExitOk : kExitLawFailure;
}

int cmd_adjoint(const Options& opt, const Workspace& ws,
                const std::string& name, bool do_totalize) {
  const auto& r = ws.relation(name);
  if (!r.validation.all_pass()) {
    print_report(opt, "relation." + name, r.validation);
    return kExitLawFailure;
  }
  auto K = kernel_K(r.relation);
  if (!K.empty() && !do_totalize) {
    std::cout << "kernel nonempty (" << K.size()
              << " elements); rerun with --totalize\n";
    return kExitLawFailure;
  }
  if (K.empty()) {
    auto pair = derive_pair(r.relation);
    std::cout << dump_map(pair.lower, name + ".propagation");
    std::cout << dump_map(pair.upper, name + ".causation");
  } else {
    auto t = totalize(r.relation);
    std::cout << dump_map(t.pair.lower, name + ".propagation(totalized)");
    std::cout << dump_map(t.pair.upper, name + ".causation(totalized)");
  }
  return kExitOk;
}

int cmd_compose(const Options& opt, const Workspace& ws,
                const std::string& name1, const std::string& name2) {
  const auto& r1 = ws.relation(name1);
  const auto& r2 = ws.relation(name2);
  auto p = compose_pairs(derive_pair(r1.relation), derive_pair(r2.relation));
  std::cout << dump_map(p.lower, name1 + ";" + name2 + ".propagation");
  std::cout << dump_map(p.upper, name1 + ";" + name2 + ".causation");
  Report rep;
  std::pair<Elem, Elem> w;
  is_adjoint_pair(p, &w) ? rep.add_pass("composite-adjoint")
                         : rep.add_fail("composite-adjoint", "witness pair");
  print_report(opt, "compose." + name1 + ";" + name2, rep);
  return rep.all_pass() ? kExitOk : kExitLawFailure;
}

int cmd_hom(const Options&, const Workspace& ws, const std::string& l1,
            const std::string& l2, const std::string& kind, bool list) {
  MapKind k = kind == "meet" ? MapKind::meet_preserving
                             : MapKind::join_preserving;
  auto hom = enumerate_hom(ws.lattice(l1), ws.lattice(l2), k);
  std::cout << "hom " << l1 << " -> " << l2 << " (" << kind
            << "): " << hom.size() << " maps\n";
  if (list)
    for (int i = 0; i < hom.size(); ++i)
      std::cout << dump_map(hom.maps[i], "#" + std::to_string(i));
  return kExitOk;
}

int cmd_act(const Options& opt, const Workspace& ws, const std::string& name) {
  const auto& a = ws.action(name);
  if (!a.validation.all_pass()) {
    print_report(opt, "action." + name, a.validation);
    return kExitLawFailure;
  }
  const auto& E = a.system.quantale.carrier;
  const auto& L = *a.system.state;
  for (int e = 0; e < E.size(); ++e) {
    for (int x = 0; x < L.size(); ++x)
      std::cout << E.label(e) << " . " << L.label(x) << " = "
                << L.label(a.system.action[e][x]) << "\n";
  }
  auto stars = represent_star(a.system);
  for (int e = 0; e < E.size(); ++e) {
    std::cout << dump_map(stars.lower_star[e], E.label(e) + "_*");
    std::cout << dump_map(stars.upper_star[e], E.label(e) + "^*");
  }
  return kExitOk;
}

int cmd_duality(const Options& opt, const Workspace& ws,
                const std::string& name) {
  const auto& a = ws.action(name);
  Report rep = check_causal_duality(a.system);
  print_report(opt, "duality." + name, rep);
  return rep.all_pass() ? kExitOk : kExitLawFailure;
}

int cmd_resolve(const Options& opt, const Workspace& ws,
                const std::string& name) {
  const auto& L = ws.lattice(name);
  for (int x = 0; x < L.size(); ++x) {
    ActualityMask m = embed(L, x);
    std::cout << "embed " << L.label(x) << " = " << dump_actuality_mask(L, m)
              << "  resolve = " << L.label(resolve(L, m)) << "\n";
  }
  Report rep = check_resolution_adjunction(L);
  print_report(opt, "resolve." + name, rep);
  return rep.all_pass() ? kExitOk : kExitLawFailure;
}

int cmd_propagate(const Options& opt, const Workspace& ws,
                  const std::string& name) {
  const auto& a = ws.amap(name);
  ContinuityWitness cw;
  Report rep;
  if (is_continuous(a.map, &cw)) {
    rep.add_pass("continuous");
    print_report(opt, "propagate." + name, rep);
    std::cout << dump_map(induced_map(a.map), name + ".induced");
    return kExitOk;
  }
  rep.add_fail("continuous", "A mask " + std::to_string(cw.A) + " vs B mask " +
                                 std::to_string(cw.B));
  print_report(opt, "propagate." + name, rep);
  return kExitLawFailure;
}

int cmd_complete(const Options& opt, const Workspace& ws,
                 const std::string& name) {
  const auto& L = ws.lattice(name);
  auto C = frame_completion(L, opt.cap);
  std::cout << dump_lattice(C.frame, name + ".completed");
  for (int x = 0; x < L.size(); ++x)
    std::cout << L.label(x) << " -> " << C.frame.label(C.embedding.image[x])
              << "\n";
  Report rep = check_completion_universal_traits(L, C);
  print_report(opt, "complete." + name, rep);
  return rep.all_pass() ? kExitOk : kExitLawFailure;
}

int cmd_laws(const Options& opt, const Workspace& ws) {
  bool ok = true;
  auto run = [&](const std::string& section, const Report& rep) {
    print_report(opt, section, rep);
    ok = ok && rep.all_pass();
  };

  for (const auto& l : ws.lattices) {
    run("lattice." + l.name, l.validation);
    if (l.lattice->size() <= kPropositionScanCap)
      run("resolution." + l.name, check_resolution_adjunction(*l.lattice));
    Report frame_rep;
    FrameWitness fw;
    if (is_frame(*l.lattice, &fw))
      frame_rep.add_pass("is-frame");
    else
      frame_rep.add_fail("is-frame", "(" + l.lattice->label(fw.x) + "," +
                                         l.lattice->label(fw.y) + "," +
                                         l.lattice->label(fw.z) + ")");
    // Frame status is informative, not a failure.
    if (opt.format == "text")
      std::cout << "note: " << l.name
                << (frame_rep.all_pass() ? " is a frame\n" : " is not a frame\n");
  }

  for (const auto& r : ws.relations) {
    run("relation." + r.name, r.validation);
    if (r.validation.all_pass() && kernel_K(r.relation).empty()) {
      Report rep;
      auto pair = derive_pair(r.relation);
      std::pair<Elem, Elem> w;
      is_adjoint_pair(pair, &w)
          ? rep.add_pass("derived-pair-adjoint")
          : rep.add_fail("derived-pair-adjoint",
                         "(" + r.relation.src->label(w.first) + "," +
                             r.relation.dst->label(w.second) + ")");
      auto back = relation_of_pair(pair);
      back.rel == r.relation.rel
          ? rep.add_pass("relation-roundtrip")
          : rep.add_fail("relation-roundtrip", "tables differ");
      run("adjunction." + r.name, rep);
    }
  }

  for (const auto& q : ws.quantales) run("quantale." + q.name, q.validation);

  for (const auto& a : ws.actions) {
    run("action." + a.name, a.validation);
    if (a.validation.all_pass())
      run("causal-duality." + a.name, check_causal_duality(a.system));
  }

  for (const auto& a : ws.amaps) {
    Report rep;
    ContinuityWitness cw;
    if (is_continuous(a.map, &cw)) {
      rep.add_pass("continuous");
      MapTable f = induced_map(a.map);
      std::pair<Elem, Elem> w;
      preserves_joins(f, &w)
          ? rep.add_pass("induced-join-preserving")
          : rep.add_fail("induced-join-preserving",
                         "(" + f.src->label(w.first) + "," +
                             f.src->label(w.second) + ")");
    } else {
      rep.add_fail("continuous", "A mask " + std::to_string(cw.A) +
                                     " vs B mask " + std::to_string(cw.B));
    }
    run("amap." + a.name, rep);
  }

  // Sampled adjunction round-trips across every ordered pair of loaded
  // lattices, driven by --seed.
  std::mt19937 rng(opt.seed);
  for (const auto& l1 : ws.lattices)
    for (const auto& l2 : ws.lattices) {
      if (l1.lattice->size() > 6 || l2.lattice->size() > 6) continue;
      auto hom = enumerate_hom(*l1.lattice, *l2.lattice,
                               MapKind::join_preserving);
      Report rep;
      bool pass = true;
      std::string w;
      for (int i = 0; i < 25 && pass; ++i) {
        auto R = random_relation(hom, rng);
        if (!validate_relation(R).all_pass()) {
          pass = false;
          w = "sample " + std::to_string(i) + " invalid";
          break;
        }
        auto p = derive_pair(R);
        if (!is_adjoint_pair(p) || !(relation_of_pair(p).rel == R.rel)) {
          pass = false;
          w = "sample " + std::to_string(i) + " round trip";
        }
      }
      pass ? rep.add_pass("sampled-roundtrip") : rep.add_fail("sampled-roundtrip", w);
      run("pair." + l1.name + "->" + l2.name, rep);
    }

  std::cout << (ok ? "ALL LAWS PASS\n" : "LAW FAILURES PRESENT\n");
  return ok ? kExitOk : kExitLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-lattice workbench: Galois adjunctions, quantale laws, "
               "operational resolutions, frame completions"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("-f,--file", opt.files, "workspace file(s)");
  app.add_option("--cap", opt.cap, "enumeration cap");
  app.add_option("--seed", opt.seed, "seed for sampled scans");
  app.add_option("--format", opt.format, "text|lines")
      ->check(CLI::IsMember({"text", "lines"}));

  auto* check = app.add_subcommand("check", "run all validators");
  auto* adjoint =
      app.add_subcommand("adjoint", "derive f*/f_* from a relation");
  std::string rel_name;
  bool do_totalize = false;
  adjoint->add_option("relation", rel_name)->required();
  adjoint->add_flag("--totalize", do_totalize,
                    "extend with a fresh top when the kernel is nonempty");
  auto* compose_cmd = app.add_subcommand("compose", "compose two adjoint pairs");
  std::string rel1, rel2;
  compose_cmd->add_option("first", rel1)->required();
  compose_cmd->add_option("second", rel2)->required();
  auto* hom = app.add_subcommand("hom", "enumerate a hom-lattice");
  std::string hom_l1, hom_l2, hom_kind = "join";
  bool hom_list = false;
  hom->add_option("src", hom_l1)->required();
  hom->add_option("dst", hom_l2)->required();
  hom->add_option("--kind", hom_kind)->check(CLI::IsMember({"join", "meet"}));
  hom->add_flag("--list", hom_list, "print every map");
  auto* act = app.add_subcommand("act", "evaluate an induction action");
  std::string act_name;
  act->add_option("action", act_name)->required();
  auto* duality_cmd =
      app.add_subcommand("duality", "check the causal duality of an action");
  std::string dual_name;
  duality_cmd->add_option("action", dual_name)->required();
  auto* resolve_cmd =
      app.add_subcommand("resolve", "embedding/resolution of a lattice");
  std::string res_name;
  resolve_cmd->add_option("lattice", res_name)->required();
  auto* propagate =
      app.add_subcommand("propagate", "continuity and induced map of an amap");
  std::string prop_name;
  propagate->add_option("amap", prop_name)->required();
  auto* complete = app.add_subcommand("complete", "frame completion");
  std::string comp_name;
  complete->add_option("lattice", comp_name)->required();
  auto* laws = app.add_subcommand("laws", "full law suite over the workspace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    Workspace ws = parse_workspace(opt.files);
    if (check->parsed()) return cmd_check(opt, ws);
    if (adjoint->parsed()) return cmd_adjoint(opt, ws, rel_name, do_totalize);
    if (compose_cmd->parsed()) return cmd_compose(opt, ws, rel1, rel2);
    if (hom->parsed()) return cmd_hom(opt, ws, hom_l1, hom_l2, hom_kind, hom_list);
    if (act->parsed()) return cmd_act(opt, ws, act_name);
    if (duality_cmd->parsed()) return cmd_duality(opt, ws, dual_name);
    if (resolve_cmd->parsed()) return cmd_resolve(opt, ws, res_name);
    if (propagate->parsed()) return cmd_propagate(opt, ws, prop_name);
    if (complete->parsed()) return cmd_complete(opt, ws, comp_name);
    if (laws->parsed()) return cmd_laws(opt, ws);
    throw unknown_verb("no verb given");
  } catch (const syntax_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const unresolved_reference& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const duplicate_name& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const unknown_verb& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const parameter_out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLawFailure;
  }
}
