#ifndef LATKIT_QUANTALE_HPP
#define LATKIT_QUANTALE_HPP

#include <string>
#include <vector>

#include "latkit/errors.hpp"
#include "latkit/galois.hpp"
#include "latkit/lattice.hpp"
#include "latkit/report.hpp"

namespace latkit {

/// Cap for full subset scans in distributivity checks; above it only the
/// binary and empty cases are checked (equivalent for finite lattices).
inline constexpr int kSubsetScanCap = 10;

/// A finite unital quantale: complete lattice carrier, associative
/// multiplication distributing over arbitrary joins on both sides.
struct Quantale {
  FiniteLattice carrier;
  std::vector<std::vector<Elem>> mult;  // mult[e][f] = e & f
  Elem unit = 0;

  Elem times(Elem e, Elem f) const { return mult[e][f]; }
};

inline Report check_quantale(const Quantale& Q, int subset_cap = kSubsetScanCap) {
  const auto& L = Q.carrier;
  const int n = L.size();
  if (static_cast<int>(Q.mult.size()) != n)
    throw shape_mismatch("multiplication table has wrong row count");
  for (const auto& row : Q.mult)
    if (static_cast<int>(row.size()) != n)
      throw shape_mismatch("multiplication table has wrong column count");

  Report rep;
  bool ok = true;
  std::string w;
  for (int a = 0; a < n && ok; ++a)
    for (int b = 0; b < n && ok; ++b)
      for (int c = 0; c < n; ++c)
        if (Q.times(Q.times(a, b), c) != Q.times(a, Q.times(b, c))) {
          ok = false;
          w = L.label(a) + "," + L.label(b) + "," + L.label(c);
          break;
        }
  ok ? rep.add_pass("mult-associative") : rep.add_fail("mult-associative", w);

  ok = true;
  for (int a = 0; a < n; ++a)
    if (Q.times(Q.unit, a) != a || Q.times(a, Q.unit) != a) {
      ok = false;
      w = L.label(a);
      break;
    }
  ok ? rep.add_pass("unit-two-sided") : rep.add_fail("unit-two-sided", w);

  // Distributivity over arbitrary joins: full subset scan within the cap,
  // otherwise binary joins plus the empty join.
  ok = true;
  if (n <= subset_cap && n <= 31) {
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);
    for (std::uint32_t F = 0; F <= full && ok; ++F) {
      const Elem joinF = L.join_mask(F);
      for (int e = 0; e < n; ++e) {
        Elem lhsL = Q.times(e, joinF), lhsR = Q.times(joinF, e);
        Elem rhsL = L.bottom(), rhsR = L.bottom();
        for (int f = 0; f < n; ++f)
          if (F & (1u << f)) {
            rhsL = L.join(rhsL, Q.times(e, f));
            rhsR = L.join(rhsR, Q.times(f, e));
          }
        if (lhsL != rhsL || lhsR != rhsR) {
          ok = false;
          w = L.label(e) + " over subset mask " + std::to_string(F);
          break;
        }
      }
      if (F == full) break;
    }
  } else {
    for (int e = 0; e < n && ok; ++e) {
      if (Q.times(e, L.bottom()) != L.bottom() ||
          Q.times(L.bottom(), e) != L.bottom()) {
        ok = false;
        w = L.label(e) + " over empty join";
        break;
      }
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n; ++b) {
          Elem j = L.join(a, b);
          if (Q.times(e, j) != L.join(Q.times(e, a), Q.times(e, b)) ||
              Q.times(j, e) != L.join(Q.times(a, e), Q.times(b, e))) {
            ok = false;
            w = L.label(e) + " over {" + L.label(a) + "," + L.label(b) + "}";
            break;
          }
        }
    }
  }
  ok ? rep.add_pass("mult-distributes-over-joins")
     : rep.add_fail("mult-distributes-over-joins", w);
  return rep;
}

/// A frame as a quantale: multiplication is the binary meet, unit the top.
inline Quantale frame_quantale(const FiniteLattice& L) {
  Quantale Q;
  Q.carrier = L;
  Q.mult.assign(L.size(), std::vector<Elem>(L.size()));
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) Q.mult[a][b] = L.meet(a, b);
  Q.unit = L.top();
  return Q;
}

/// The one-object quantaloid of join-endomaps of L: carrier the hom-lattice,
/// multiplication composition, unit the identity map.
struct EndoQuantale {
  HomLattice hom;
  Quantale quantale;
};

inline EndoQuantale endo_quantale(const FiniteLattice& L,
                                  long long cap = 1LL << 24) {
  EndoQuantale out;
  out.hom = enumerate_hom(L, L, MapKind::join_preserving, cap);
  out.quantale.carrier = out.hom.as_lattice();
  const int m = out.hom.size();
  out.quantale.mult.assign(m, std::vector<Elem>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int k = out.hom.index_of(compose(out.hom.maps[i], out.hom.maps[j]));
      if (k < 0)
        throw not_a_lattice("join-map hom not closed under composition");
      out.quantale.mult[i][j] = k;
    }
  out.quantale.unit = out.hom.index_of(identity_map(L));
  return out;
}

/// A finite unital quantale acting on a property lattice.
struct InductionSystem {
  Quantale quantale;                    // E
  const FiniteLattice* state = nullptr; // L
  std::vector<std::vector<Elem>> action;  // action[e][a] = e . a
};

/// The module axioms (i)-(iv).
inline Report validate_action(const InductionSystem& S,
                              int subset_cap = kSubsetScanCap) {
  const auto& E = S.quantale.carrier;
  const auto& L = *S.state;
  if (static_cast<int>(S.action.size()) != E.size())
    throw shape_mismatch("action table has wrong row count");
  for (const auto& row : S.action)
    if (static_cast<int>(row.size()) != L.size())
      throw shape_mismatch("action table has wrong column count");

  Report rep;
  bool ok = true;
  std::string w;
  for (int a = 0; a < L.size(); ++a)
    if (S.action[S.quantale.unit][a] != a) {
      ok = false;
      w = L.label(a);
      break;
    }
  ok ? rep.add_pass("(i)-freeze-acts-as-identity")
     : rep.add_fail("(i)-freeze-acts-as-identity", w);

  // (ii) each e.- preserves all meets of L; binary + top suffices, and we
  // add a full subset scan for small L.
  ok = true;
  for (int e = 0; e < E.size() && ok; ++e) {
    MapTable m{&L, &L, S.action[e], MapKind::meet_preserving};
    std::pair<Elem, Elem> pw;
    if (!preserves_meets(m, &pw)) {
      ok = false;
      w = E.label(e) + " at {" + L.label(pw.first) + "," + L.label(pw.second) +
          "}";
    }
  }
  if (ok && L.size() <= subset_cap && L.size() <= 31) {
    const std::uint32_t full = (1u << L.size()) - 1;
    for (int e = 0; e < E.size() && ok; ++e)
      for (std::uint32_t A = 0; A <= full; ++A) {
        Elem lhs = S.action[e][L.meet_mask(A)];
        Elem rhs = L.top();
        for (int a = 0; a < L.size(); ++a)
          if (A & (1u << a)) rhs = L.meet(rhs, S.action[e][a]);
        if (lhs != rhs) {
          ok = false;
          w = E.label(e) + " over state subset mask " + std::to_string(A);
          break;
        }
        if (A == full) break;
      }
  }
  ok ? rep.add_pass("(ii)-action-preserves-meets")
     : rep.add_fail("(ii)-action-preserves-meets", w);

  // (iii) (sup of inductions).a = meet of the individual results.
  ok = true;
  if (E.size() <= subset_cap && E.size() <= 31) {
    const std::uint32_t full = (1u << E.size()) - 1;
    for (std::uint32_t F = 0; F <= full && ok; ++F) {
      Elem supF = E.join_mask(F);
      for (int a = 0; a < L.size(); ++a) {
        Elem lhs = S.action[supF][a];
        Elem rhs = L.top();
        for (int e = 0; e < E.size(); ++e)
          if (F & (1u << e)) rhs = L.meet(rhs, S.action[e][a]);
        if (lhs != rhs) {
          ok = false;
          w = "induction subset mask " + std::to_string(F) + " at " +
              L.label(a);
          break;
        }
      }
      if (F == full) break;
    }
  } else {
    for (int e = 0; e < E.size() && ok; ++e)
      for (int f = 0; f < E.size() && ok; ++f)
        for (int a = 0; a < L.size(); ++a)
          if (S.action[E.join(e, f)][a] !=
              L.meet(S.action[e][a], S.action[f][a])) {
            ok = false;
            w = "{" + E.label(e) + "," + E.label(f) + "} at " + L.label(a);
            break;
          }
    for (int a = 0; a < L.size() && ok; ++a)
      if (S.action[E.bottom()][a] != L.top()) {
        ok = false;
        w = "empty induction choice at " + L.label(a);
      }
  }
  ok ? rep.add_pass("(iii)-choice-acts-as-meet")
     : rep.add_fail("(iii)-choice-acts-as-meet", w);

  ok = true;
  for (int e1 = 0; e1 < E.size() && ok; ++e1)
    for (int e2 = 0; e2 < E.size() && ok; ++e2)
      for (int a = 0; a < L.size(); ++a)
        if (S.action[e1][S.action[e2][a]] !=
            S.action[S.quantale.times(e1, e2)][a]) {
          ok = false;
          w = E.label(e1) + "," + E.label(e2) + " at " + L.label(a);
          break;
        }
  ok ? rep.add_pass("(iv)-sequencing-acts-as-composition")
     : rep.add_fail("(iv)-sequencing-acts-as-composition", w);
  return rep;
}

/// The two map families of an induction: e_* (the action) and its left
/// adjoint e^*.
struct StarRepresentation {
  std::vector<MapTable> lower_star;  // e_* : a |-> e.a, meet-preserving
  std::vector<MapTable> upper_star;  // e^* : a |-> meet{b | a <= e.b}
};

inline StarRepresentation represent_star(const InductionSystem& S) {
  Report v = validate_action(S);
  if (!v.all_pass())
    throw action_invalid("induction system fails the module axioms:\n" +
                         v.to_lines());
  const auto& E = S.quantale.carrier;
  const auto& L = *S.state;
  StarRepresentation out;
  for (int e = 0; e < E.size(); ++e) {
    MapTable lower{&L, &L, S.action[e], MapKind::meet_preserving};
    out.lower_star.push_back(lower);
    out.upper_star.push_back(left_adjoint_of(lower));
  }
  return out;
}

/// The executable content of E^* being the coop dual of E_*.
inline Report check_causal_duality(const InductionSystem& S,
                                   int subset_cap = kSubsetScanCap) {
  const auto rep_star = represent_star(S);
  const auto& E = S.quantale.carrier;
  const auto& L = *S.state;
  Report rep;

  bool ok = true;
  std::string w;
  for (int e = 0; e < E.size() && ok; ++e) {
    std::pair<Elem, Elem> pw;
    if (!is_adjoint_pair(rep_star.upper_star[e], rep_star.lower_star[e], &pw)) {
      ok = false;
      w = E.label(e) + " at (" + L.label(pw.first) + "," + L.label(pw.second) +
          ")";
    }
  }
  ok ? rep.add_pass("adjunction-e-upper-lower")
     : rep.add_fail("adjunction-e-upper-lower", w);

  ok = true;
  for (int e = 0; e < E.size() && ok; ++e)
    for (int f = 0; f < E.size(); ++f) {
      int ef = S.quantale.times(e, f);
      if (!(compose(rep_star.lower_star[e], rep_star.lower_star[f]) ==
            rep_star.lower_star[ef])) {
        ok = false;
        w = "(" + E.label(e) + "&" + E.label(f) + ")_*";
        break;
      }
      if (!(compose(rep_star.upper_star[f], rep_star.upper_star[e]) ==
            rep_star.upper_star[ef])) {
        ok = false;
        w = "(" + E.label(e) + "&" + E.label(f) + ")^*";
        break;
      }
    }
  ok ? rep.add_pass("composition-transported")
     : rep.add_fail("composition-transported", w);

  // Suprema: (sup F)_* is the pointwise meet (coop supremum) of the e_*,
  // and (sup F)^* the pointwise join of the e^*.
  ok = true;
  if (E.size() <= subset_cap && E.size() <= 31) {
    const std::uint32_t full = (1u << E.size()) - 1;
    for (std::uint32_t F = 0; F <= full && ok; ++F) {
      Elem supF = E.join_mask(F);
      for (int a = 0; a < L.size(); ++a) {
        Elem lo = L.top(), up = L.bottom();
        for (int e = 0; e < E.size(); ++e)
          if (F & (1u << e)) {
            lo = L.meet(lo, rep_star.lower_star[e].image[a]);
            up = L.join(up, rep_star.upper_star[e].image[a]);
          }
        if (rep_star.lower_star[supF].image[a] != lo ||
            rep_star.upper_star[supF].image[a] != up) {
          ok = false;
          w = "induction subset mask " + std::to_string(F) + " at " +
              L.label(a);
          break;
        }
      }
      if (F == full) break;
    }
  }
  ok ? rep.add_pass("suprema-transported")
     : rep.add_fail("suprema-transported", w);

  // Order compatibility: e <= f in E makes f_* pointwise below e_* and
  // e^* pointwise below f^*.
  ok = true;
  for (int e = 0; e < E.size() && ok; ++e)
    for (int f = 0; f < E.size(); ++f) {
      if (!E.leq(e, f)) continue;
      for (int a = 0; a < L.size(); ++a)
        if (!L.leq(rep_star.lower_star[f].image[a],
                   rep_star.lower_star[e].image[a]) ||
            !L.leq(rep_star.upper_star[e].image[a],
                   rep_star.upper_star[f].image[a])) {
          ok = false;
          w = E.label(e) + "<=" + E.label(f) + " at " + L.label(a);
          break;
        }
      if (!ok) break;
    }
  ok ? rep.add_pass("order-coop-compatible")
     : rep.add_fail("order-coop-compatible", w);
  return rep;
}

/// A finite diagram of lattices with their enumerated join-map homs.
/// check_quantaloid verifies hom completeness and two-sided distributivity
/// of composition over suprema.
struct HomDiagram {
  std::vector<const FiniteLattice*> objects;
  // homs[i][j]: maps from objects[i] to objects[j]
  std::vector<std::vector<HomLattice>> homs;
};

inline HomDiagram full_join_diagram(
    const std::vector<const FiniteLattice*>& objects,
    long long cap = 1LL << 24) {
  HomDiagram d;
  d.objects = objects;
  d.homs.resize(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      d.homs[i].push_back(
          enumerate_hom(*objects[i], *objects[j], MapKind::join_preserving, cap));
  return d;
}

inline Report check_quantaloid(const HomDiagram& d,
                               int subset_cap = kSubsetScanCap) {
  Report rep;
  const int m = static_cast<int>(d.objects.size());

  // Hom completeness: every pointwise supremum of a subset of maps (the
  // empty one included) is again in the hom.
  bool ok = true;
  std::string w;
  for (int i = 0; i < m && ok; ++i)
    for (int j = 0; j < m && ok; ++j) {
      const auto& hom = d.homs[i][j];
      if (hom.size() > subset_cap || hom.size() > 31) {
        // Binary suprema plus bottom still witness completeness finitely.
        std::vector<int> none;
        if (hom.index_of(hom.sup(none)) < 0) {
          ok = false;
          w = "hom(" + std::to_string(i) + "," + std::to_string(j) +
              ") lacks its bottom";
          break;
        }
        for (int p = 0; p < hom.size() && ok; ++p)
          for (int q = 0; q < hom.size(); ++q)
            if (hom.index_of(hom.sup({p, q})) < 0) {
              ok = false;
              w = "hom(" + std::to_string(i) + "," + std::to_string(j) +
                  ") not closed under sup of maps #" + std::to_string(p) +
                  ",#" + std::to_string(q);
              break;
            }
      } else {
        const std::uint32_t full = (1u << hom.size()) - 1;
        for (std::uint32_t F = 0; F <= full; ++F) {
          std::vector<int> which;
          for (int p = 0; p < hom.size(); ++p)
            if (F & (1u << p)) which.push_back(p);
          if (hom.index_of(hom.sup(which)) < 0) {
            ok = false;
            w = "hom(" + std::to_string(i) + "," + std::to_string(j) +
                ") not closed under sup of subset mask " + std::to_string(F);
            break;
          }
          if (F == full) break;
        }
      }
    }
  ok ? rep.add_pass("hom-completeness") : rep.add_fail("hom-completeness", w);

  // Composition distributes over suprema on both sides.
  ok = true;
  for (int i = 0; i < m && ok; ++i)
    for (int j = 0; j < m && ok; ++j)
      for (int k = 0; k < m && ok; ++k) {
        const auto& hij = d.homs[i][j];
        const auto& hjk = d.homs[j][k];
        if (hij.size() > subset_cap || hij.size() > 31) continue;
        const std::uint32_t full =
            hij.size() ? (1u << hij.size()) - 1 : 0;
        for (std::uint32_t F = 0; F <= full && ok; ++F) {
          std::vector<int> which;
          for (int p = 0; p < hij.size(); ++p)
            if (F & (1u << p)) which.push_back(p);
          MapTable supF = hij.sup(which);
          for (int g = 0; g < hjk.size(); ++g) {
            MapTable lhs = compose(hjk.maps[g], supF);
            std::vector<int> composed;
            for (int p : which)
              composed.push_back(
                  d.homs[i][k].index_of(compose(hjk.maps[g], hij.maps[p])));
            MapTable rhs = d.homs[i][k].sup(composed);
            if (!(lhs == rhs)) {
              ok = false;
              w = "post-composition by hom(" + std::to_string(j) + "," +
                  std::to_string(k) + ") map #" + std::to_string(g) +
                  " over subset mask " + std::to_string(F);
              break;
            }
          }
          if (F == full) break;
        }
        // Pre-composition side.
        const auto& hki = d.homs[k][i];
        for (std::uint32_t F = 0; F <= full && ok; ++F) {
          std::vector<int> which;
          for (int p = 0; p < hij.size(); ++p)
            if (F & (1u << p)) which.push_back(p);
          MapTable supF = hij.sup(which);
          for (int g = 0; g < hki.size(); ++g) {
            MapTable lhs = compose(supF, hki.maps[g]);
            std::vector<int> composed;
            for (int p : which)
              composed.push_back(
                  d.homs[k][j].index_of(compose(hij.maps[p], hki.maps[g])));
            MapTable rhs = d.homs[k][j].sup(composed);
            if (!(lhs == rhs)) {
              ok = false;
              w = "pre-composition by hom(" + std::to_string(k) + "," +
                  std::to_string(i) + ") map #" + std::to_string(g) +
                  " over subset mask " + std::to_string(F);
              break;
            }
          }
          if (F == full) break;
        }
      }
  ok ? rep.add_pass("composition-distributes")
     : rep.add_fail("composition-distributes", w);
  return rep;
}

}  // namespace latkit

#endif  // LATKIT_QUANTALE_HPP
