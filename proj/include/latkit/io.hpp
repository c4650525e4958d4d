#ifndef LATKIT_IO_HPP
#define LATKIT_IO_HPP

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "latkit/completion.hpp"
#include "latkit/errors.hpp"
#include "latkit/galois.hpp"
#include "latkit/lattice.hpp"
#include "latkit/propositions.hpp"
#include "latkit/quantale.hpp"
#include "latkit/report.hpp"

namespace latkit {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace detail

/// All named objects loaded from a set of workspace files. Loaded objects
/// carry the report of their module validator.
class Workspace {
 public:
  struct NamedLattice {
    std::string name;
    std::shared_ptr<FiniteLattice> lattice;
    Report validation;
  };
  struct NamedRelation {
    std::string name, src_name, dst_name;
    CausalRelation relation;
    Report validation;
  };
  struct NamedQuantale {
    std::string name, lattice_name;
    Quantale quantale;
    Report validation;
  };
  struct NamedAction {
    std::string name, quantale_name, lattice_name;
    InductionSystem system;
    Report validation;
  };
  struct NamedAmap {
    std::string name, src_name, dst_name;
    ActualityMap map;
  };

  std::vector<NamedLattice> lattices;
  std::vector<NamedRelation> relations;
  std::vector<NamedQuantale> quantales;
  std::vector<NamedAction> actions;
  std::vector<NamedAmap> amaps;

  const FiniteLattice& lattice(const std::string& name) const {
    for (const auto& l : lattices)
      if (l.name == name) return *l.lattice;
    throw unresolved_reference("no lattice named '" + name + "'");
  }
  const NamedRelation& relation(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return r;
    throw unresolved_reference("no relation named '" + name + "'");
  }
  const NamedQuantale& quantale(const std::string& name) const {
    for (const auto& q : quantales)
      if (q.name == name) return q;
    throw unresolved_reference("no quantale named '" + name + "'");
  }
  const NamedAction& action(const std::string& name) const {
    for (const auto& a : actions)
      if (a.name == name) return a;
    throw unresolved_reference("no action named '" + name + "'");
  }
  const NamedAmap& amap(const std::string& name) const {
    for (const auto& a : amaps)
      if (a.name == name) return a;
    throw unresolved_reference("no actuality map named '" + name + "'");
  }
};

namespace detail {

struct RawBlock {
  std::string file;
  int line = 0;
  std::vector<std::string> header;             // tokens of the opening line
  std::vector<std::pair<int, std::string>> body;  // line number + text
};

inline std::vector<RawBlock> split_blocks(const std::string& file,
                                          std::istream& in) {
  static const std::vector<std::string> kKeywords{"lattice", "relation",
                                                  "quantale", "action", "amap"};
  std::vector<RawBlock> blocks;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto toks = tokens(line);
    bool is_header = std::find(kKeywords.begin(), kKeywords.end(), toks[0]) !=
                     kKeywords.end();
    if (is_header) {
      blocks.push_back({file, lineno, toks, {}});
    } else {
      if (blocks.empty())
        throw syntax_error(file + ":" + std::to_string(lineno) +
                           ": statement outside any declaration");
      blocks.back().body.emplace_back(lineno, line);
    }
  }
  return blocks;
}

inline void check_fresh(const Workspace& ws, const std::string& kind,
                        const std::string& name) {
  auto dup = [&](const auto& vec) {
    for (const auto& x : vec)
      if (x.name == name) return true;
    return false;
  };
  bool clash = (kind == "lattice" && dup(ws.lattices)) ||
               (kind == "relation" && dup(ws.relations)) ||
               (kind == "quantale" && dup(ws.quantales)) ||
               (kind == "action" && dup(ws.actions)) ||
               (kind == "amap" && dup(ws.amaps));
  if (clash) throw duplicate_name("duplicate " + kind + " name '" + name + "'");
}

inline void parse_block(Workspace& ws, const RawBlock& b) {
  auto fail = [&](int line, const std::string& msg) -> void {
    throw syntax_error(b.file + ":" + std::to_string(line) + ": " + msg);
  };
  const auto& h = b.header;

  if (h[0] == "lattice") {
    if (h.size() != 2) fail(b.line, "expected: lattice <name>");
    check_fresh(ws, "lattice", h[1]);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [ln, text] : b.body) {
      auto toks = tokens(text);
      if (toks[0] == "elements") {
        labels.insert(labels.end(), toks.begin() + 1, toks.end());
      } else if (toks[0] == "covers") {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          auto lt = toks[i].find('<');
          if (lt == std::string::npos || lt == 0 || lt + 1 == toks[i].size())
            fail(ln, "malformed cover '" + toks[i] + "', expected a<b");
          covers.emplace_back(toks[i].substr(0, lt), toks[i].substr(lt + 1));
        }
      } else {
        fail(ln, "unexpected statement '" + toks[0] + "' in lattice block");
      }
    }
    auto L = std::make_shared<FiniteLattice>(build_from_covers(labels, covers));
    Report v = L->validate();
    ws.lattices.push_back({h[1], std::move(L), std::move(v)});
    return;
  }

  if (h[0] == "relation") {
    if (h.size() != 6 || h[2] != "from" || h[4] != "to")
      fail(b.line, "expected: relation <name> from <lattice> to <lattice>");
    check_fresh(ws, "relation", h[1]);
    const auto& L1 = ws.lattice(h[3]);
    const auto& L2 = ws.lattice(h[5]);
    CausalRelation R{&L1, &L2, {}};
    R.rel.assign(L1.size(), std::vector<bool>(L2.size(), false));
    for (const auto& [ln, text] : b.body) {
      auto toks = tokens(text);
      if (toks.size() != 3 || toks[1] != "~>")
        fail(ln, "expected: <a> ~> <b>");
      R.rel[L1.by_label(toks[0])][L2.by_label(toks[2])] = true;
    }
    Report v = validate_relation(R);
    ws.relations.push_back({h[1], h[3], h[5], std::move(R), std::move(v)});
    return;
  }

  if (h[0] == "quantale") {
    if (h.size() != 4 || h[2] != "over")
      fail(b.line, "expected: quantale <name> over <lattice>");
    check_fresh(ws, "quantale", h[1]);
    const auto& L = ws.lattice(h[3]);
    Quantale Q;
    Q.carrier = L;
    const int n = L.size();
    Q.mult.assign(n, std::vector<Elem>(n, -1));
    bool unit_seen = false;
    for (const auto& [ln, text] : b.body) {
      auto toks = tokens(text);
      if (toks[0] == "unit") {
        if (toks.size() != 2) fail(ln, "expected: unit <element>");
        Q.unit = L.by_label(toks[1]);
        unit_seen = true;
      } else if (toks.size() == 5 && toks[1] == "&" && toks[3] == "=") {
        Q.mult[L.by_label(toks[0])][L.by_label(toks[2])] = L.by_label(toks[4]);
      } else {
        fail(ln, "expected: unit <e>  or  <e> & <f> = <g>");
      }
    }
    if (!unit_seen) fail(b.line, "quantale block lacks a unit statement");
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if (Q.mult[a][c] < 0)
          fail(b.line, "multiplication entry missing for " + L.label(a) +
                           " & " + L.label(c));
    Report v = check_quantale(Q);
    ws.quantales.push_back({h[1], h[3], std::move(Q), std::move(v)});
    return;
  }

  if (h[0] == "action") {
    if (h.size() != 6 || h[2] != "of" || h[4] != "on")
      fail(b.line, "expected: action <name> of <quantale> on <lattice>");
    check_fresh(ws, "action", h[1]);
    const auto& Q = ws.quantale(h[3]);
    const auto& L = ws.lattice(h[5]);
    InductionSystem S;
    S.quantale = Q.quantale;
    S.state = &L;
    const int ne = S.quantale.carrier.size();
    S.action.assign(ne, std::vector<Elem>(L.size(), -1));
    for (const auto& [ln, text] : b.body) {
      auto toks = tokens(text);
      if (toks.size() != 5 || toks[1] != "." || toks[3] != "=")
        fail(ln, "expected: <e> . <a> = <b>");
      S.action[S.quantale.carrier.by_label(toks[0])][L.by_label(toks[2])] =
          L.by_label(toks[4]);
    }
    for (int e = 0; e < ne; ++e)
      for (int a = 0; a < L.size(); ++a)
        if (S.action[e][a] < 0)
          fail(b.line, "action entry missing for " +
                           S.quantale.carrier.label(e) + " . " + L.label(a));
    Report v = validate_action(S);
    ws.actions.push_back({h[1], h[3], h[5], std::move(S), std::move(v)});
    return;
  }

  if (h[0] == "amap") {
    if (h.size() != 6 || h[2] != "from" || h[4] != "to")
      fail(b.line, "expected: amap <name> from <lattice> to <lattice>");
    check_fresh(ws, "amap", h[1]);
    const auto& L1 = ws.lattice(h[3]);
    const auto& L2 = ws.lattice(h[5]);
    ActualityMap g{&L1, &L2, std::vector<ActualityMask>(L1.size(), 0)};
    for (const auto& [ln, text] : b.body) {
      auto arrow = text.find("|->");
      if (arrow == std::string::npos) fail(ln, "expected: <a> |-> {b, c, ...}");
      std::string lhs = trim(text.substr(0, arrow));
      std::string rhs = trim(text.substr(arrow + 3));
      if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}')
        fail(ln, "image must be a braced set");
      Elem a = L1.by_label(lhs);
      if (a == L1.bottom()) fail(ln, "the bottom element has no singleton");
      std::string inner = rhs.substr(1, rhs.size() - 2);
      for (auto& ch : inner)
        if (ch == ',') ch = ' ';
      std::vector<Elem> members;
      for (const auto& tok : tokens(inner)) members.push_back(L2.by_label(tok));
      g.singleton_images[a] = actuality_mask(L2, members);
    }
    ws.amaps.push_back({h[1], h[3], h[5], std::move(g)});
    return;
  }
  fail(b.line, "unknown declaration '" + h[0] + "'");
}

}  // namespace detail

inline Workspace parse_workspace_text(const std::string& text,
                                      const std::string& filename = "<text>") {
  Workspace ws;
  std::istringstream in(text);
  for (const auto& b : detail::split_blocks(filename, in))
    detail::parse_block(ws, b);
  return ws;
}

inline Workspace parse_workspace(const std::vector<std::string>& paths) {
  Workspace ws;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw syntax_error("cannot open file '" + path + "'");
    for (const auto& b : detail::split_blocks(path, in))
      detail::parse_block(ws, b);
  }
  return ws;
}

/// Canonical serialization: elements in a topological order with label
/// tie-break, covers in that order. build -> dump -> build is identity.
inline std::string dump_lattice(const FiniteLattice& L,
                                const std::string& name) {
  std::ostringstream os;
  os << "lattice " << name << "\n";
  const auto order = L.topological_order();
  os << "elements";
  for (Elem a : order) os << " " << L.label(a);
  os << "\n";
  std::vector<int> pos(L.size());
  for (int i = 0; i < L.size(); ++i) pos[order[i]] = i;
  os << "covers";
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j)
      if (L.covers(order[i], order[j])) os << " " << L.label(order[i]) << "<"
                                           << L.label(order[j]);
  os << "\n";
  return os.str();
}

inline std::string dump_map(const MapTable& f, const std::string& name) {
  std::ostringstream os;
  os << "map " << name << " (" << to_string(f.kind) << ")\n";
  for (int a = 0; a < f.src->size(); ++a)
    os << "  " << f.src->label(a) << " -> " << f.dst->label(f.image[a]) << "\n";
  return os.str();
}

inline std::string dump_actuality_mask(const FiniteLattice& L,
                                       ActualityMask m) {
  std::string s = "{";
  bool first = true;
  for (int a = 0; a < L.size(); ++a)
    if (m & (1u << a)) {
      if (!first) s += ", ";
      s += L.label(a);
      first = false;
    }
  return s + "}";
}

}  // namespace latkit

#endif  // LATKIT_IO_HPP
