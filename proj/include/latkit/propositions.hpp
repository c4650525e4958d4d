#ifndef LATKIT_PROPOSITIONS_HPP
#define LATKIT_PROPOSITIONS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "latkit/errors.hpp"
#include "latkit/galois.hpp"
#include "latkit/lattice.hpp"
#include "latkit/report.hpp"

namespace latkit {

/// Default cap on |L1| for exhaustive subset scans over PL1.
inline constexpr int kPropositionScanCap = 12;

/// Actuality sets are subsets of L \ {0}, stored as bit masks over element
/// indices. The bottom bit is never set.
using ActualityMask = std::uint32_t;

inline ActualityMask actuality_mask(const FiniteLattice& L,
                                    const std::vector<Elem>& members) {
  ActualityMask m = 0;
  for (Elem a : members) {
    if (a < 0 || a >= L.size())
      throw foreign_element("actuality set member out of range");
    if (a == L.bottom())
      throw foreign_element("actuality sets exclude the bottom element");
    m |= 1u << a;
  }
  return m;
}

/// All subsets of L \ {0} as a mask universe.
inline ActualityMask nonzero_universe(const FiniteLattice& L) {
  if (L.size() > 31) throw too_large("lattice too large for actuality masks");
  ActualityMask full = (1u << L.size()) - 1;
  return full & ~(1u << L.bottom());
}

/// The down-set embedding L -> PL: x |-> {y != 0 | y <= x}.
inline ActualityMask embed(const FiniteLattice& L, Elem x) {
  return L.down_mask(x) & ~(1u << L.bottom());
}

/// The operational resolution PL -> L: A |-> join A. resolve(empty) = 0.
inline Elem resolve(const FiniteLattice& L, ActualityMask A) {
  return L.join_mask(A);
}

/// resolve -| embed, plus meet preservation of the embedding, by full scan.
inline Report check_resolution_adjunction(const FiniteLattice& L,
                                          int cap = kPropositionScanCap) {
  if (L.size() > cap || L.size() > 31)
    throw too_large("resolution adjunction scan refuses |L| > cap");
  Report rep;
  const ActualityMask U = nonzero_universe(L);

  bool ok = true;
  std::string w;
  for (ActualityMask A = 0; A <= U && ok; ++A) {
    if (A & ~U) continue;
    Elem jA = resolve(L, A);
    for (int x = 0; x < L.size(); ++x) {
      bool lhs = L.leq(jA, x);
      bool rhs = (A & ~embed(L, x)) == 0;
      if (lhs != rhs) {
        ok = false;
        w = "A mask " + std::to_string(A) + ", x = " + L.label(x);
        break;
      }
    }
  }
  ok ? rep.add_pass("resolution-left-adjoint-to-embedding")
     : rep.add_fail("resolution-left-adjoint-to-embedding", w);

  ok = true;
  const std::uint32_t full = (1u << L.size()) - 1;
  for (std::uint32_t X = 0; X <= full && ok; ++X) {
    ActualityMask expect = U;
    for (int x = 0; x < L.size(); ++x)
      if (X & (1u << x)) expect &= embed(L, x);
    if (embed(L, L.meet_mask(X)) != expect) {
      ok = false;
      w = "subset mask " + std::to_string(X);
    }
    if (X == full) break;
  }
  ok ? rep.add_pass("embedding-preserves-meets")
     : rep.add_fail("embedding-preserves-meets", w);
  return rep;
}

/// A union-preserving map PL1 -> PL2 stored by its singleton images;
/// g(A) is the union of the images of the singletons in A, g(empty) = empty.
struct ActualityMap {
  const FiniteLattice* src = nullptr;
  const FiniteLattice* dst = nullptr;
  // Indexed by source element; the bottom slot is unused and stays 0.
  std::vector<ActualityMask> singleton_images;

  ActualityMask operator()(ActualityMask A) const {
    ActualityMask out = 0;
    for (int a = 0; a < src->size(); ++a)
      if (A & (1u << a)) out |= singleton_images[a];
    return out;
  }

  bool operator==(const ActualityMap& o) const {
    return singleton_images == o.singleton_images;
  }
};

struct ContinuityWitness {
  ActualityMask A = 0, B = 0;
};

/// Continuity: join A = join B forces join g(A) = join g(B). Checked via
/// the single-pass equivalent  join g(A) = join g(embed(join A)).
inline bool is_continuous(const ActualityMap& g,
                          ContinuityWitness* witness = nullptr,
                          int cap = kPropositionScanCap) {
  const auto& L1 = *g.src;
  const auto& L2 = *g.dst;
  if (L1.size() > cap || L1.size() > 31)
    throw too_large("continuity scan refuses |L1| > cap");
  const ActualityMask U = nonzero_universe(L1);
  for (ActualityMask A = 0; A <= U; ++A) {
    if (A & ~U) continue;
    ActualityMask B = embed(L1, resolve(L1, A));
    if (resolve(L2, g(A)) != resolve(L2, g(B))) {
      if (witness) *witness = {A, B};
      return false;
    }
  }
  return true;
}

/// The unique join-preserving square-filler f(x) = join g(embed(x)).
inline MapTable induced_map(const ActualityMap& g,
                            int cap = kPropositionScanCap) {
  ContinuityWitness cw;
  if (!is_continuous(g, &cw, cap))
    throw not_continuous("actuality map is not continuous; witness masks A=" +
                         std::to_string(cw.A) + " B=" + std::to_string(cw.B));
  const auto& L1 = *g.src;
  const auto& L2 = *g.dst;
  MapTable f{&L1, &L2, {}, MapKind::join_preserving};
  f.image.resize(L1.size());
  for (int x = 0; x < L1.size(); ++x)
    f.image[x] = resolve(L2, g(embed(L1, x)));
  if (!preserves_joins(f))
    throw kind_violation("induced map of a continuous g must preserve joins");
  return f;
}

/// Lifts a join-preserving map to actuality sets: g({a}) = embed(f(a)).
inline ActualityMap lift_map(const MapTable& f) {
  std::pair<Elem, Elem> w;
  if (!preserves_joins(f, &w))
    throw kind_violation("lift_map: input not join-preserving at {" +
                         f.src->label(w.first) + "," + f.src->label(w.second) +
                         "}");
  ActualityMap g{f.src, f.dst, std::vector<ActualityMask>(f.src->size(), 0)};
  for (int a = 0; a < f.src->size(); ++a) {
    if (a == f.src->bottom()) continue;
    g.singleton_images[a] = embed(*f.dst, f.image[a]);
  }
  return g;
}

/// All union-preserving maps PL1 -> PL2, enumerated by singleton images in
/// lexicographic order.
inline std::vector<ActualityMap> enumerate_actuality_maps(
    const FiniteLattice& L1, const FiniteLattice& L2,
    long long cap = 1LL << 22) {
  const ActualityMask U2 = nonzero_universe(L2);
  std::vector<int> slots;
  for (int a = 0; a < L1.size(); ++a)
    if (a != L1.bottom()) slots.push_back(a);
  long long count = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    count *= (1LL << std::popcount(U2));
    if (count > cap)
      throw too_large("enumerate_actuality_maps exceeds the cap");
  }
  // Dense choices per slot: the subsets of U2.
  std::vector<ActualityMask> choices;
  for (ActualityMask m = U2;; m = (m - 1) & U2) {
    choices.push_back(m);
    if (m == 0) break;
  }
  std::sort(choices.begin(), choices.end());

  std::vector<ActualityMap> out;
  ActualityMap g{&L1, &L2, std::vector<ActualityMask>(L1.size(), 0)};
  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      g.singleton_images[slots[i]] = choices[pick[i]];
    out.push_back(g);
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++pick[i] < choices.size()) break;
      pick[i] = 0;
    }
    if (i == slots.size()) break;
  }
  return out;
}

/// Pointwise union of two actuality maps.
inline ActualityMap union_map(const ActualityMap& g1, const ActualityMap& g2) {
  if (g1.src != g2.src || g1.dst != g2.dst)
    throw shape_mismatch("union of actuality maps needs equal lattices");
  ActualityMap out = g1;
  for (std::size_t a = 0; a < out.singleton_images.size(); ++a)
    out.singleton_images[a] |= g2.singleton_images[a];
  return out;
}

/// g2 after g1 on actuality sets.
inline ActualityMap compose_amaps(const ActualityMap& g2,
                                  const ActualityMap& g1) {
  if (g1.dst != g2.src)
    throw shape_mismatch("composition of actuality maps: middle lattices differ");
  ActualityMap out{g1.src, g2.dst,
                   std::vector<ActualityMask>(g1.src->size(), 0)};
  for (int a = 0; a < g1.src->size(); ++a)
    out.singleton_images[a] = g2(g1.singleton_images[a]);
  return out;
}

/// The quantaloid behaviour of the quotient: unions and composites of
/// continuous maps are continuous, and the induced-map assignment sends
/// unions to pointwise joins and composites to composites.
inline Report check_Fsharp_quantaloidal(const FiniteLattice& L1,
                                        const FiniteLattice& L2,
                                        const FiniteLattice& L3,
                                        long long enum_cap = 1LL << 22,
                                        int scan_cap = kPropositionScanCap) {
  Report rep;
  std::vector<ActualityMap> cont12, cont23;
  for (const auto& g : enumerate_actuality_maps(L1, L2, enum_cap))
    if (is_continuous(g, nullptr, scan_cap)) cont12.push_back(g);
  for (const auto& g : enumerate_actuality_maps(L2, L3, enum_cap))
    if (is_continuous(g, nullptr, scan_cap)) cont23.push_back(g);

  bool ok = true;
  std::string w;
  for (std::size_t i = 0; i < cont12.size() && ok; ++i)
    for (std::size_t j = 0; j < cont12.size(); ++j) {
      ActualityMap u = union_map(cont12[i], cont12[j]);
      if (!is_continuous(u, nullptr, scan_cap)) {
        ok = false;
        w = "union of continuous maps #" + std::to_string(i) + ",#" +
            std::to_string(j) + " not continuous";
        break;
      }
      MapTable fu = induced_map(u, scan_cap);
      MapTable fi = induced_map(cont12[i], scan_cap);
      MapTable fj = induced_map(cont12[j], scan_cap);
      for (int x = 0; x < L1.size(); ++x)
        if (fu.image[x] != L2.join(fi.image[x], fj.image[x])) {
          ok = false;
          w = "union image at " + L1.label(x);
          break;
        }
      if (!ok) break;
    }
  ok ? rep.add_pass("unions-continuous-and-transported")
     : rep.add_fail("unions-continuous-and-transported", w);

  ok = true;
  for (std::size_t i = 0; i < cont23.size() && ok; ++i)
    for (std::size_t j = 0; j < cont12.size(); ++j) {
      ActualityMap c = compose_amaps(cont23[i], cont12[j]);
      if (!is_continuous(c, nullptr, scan_cap)) {
        ok = false;
        w = "composite #" + std::to_string(i) + " after #" + std::to_string(j) +
            " not continuous";
        break;
      }
      MapTable fc = induced_map(c, scan_cap);
      MapTable expect =
          compose(induced_map(cont23[i], scan_cap), induced_map(cont12[j], scan_cap));
      if (!(fc == expect)) {
        ok = false;
        w = "composite image mismatch at pair #" + std::to_string(i) + ",#" +
            std::to_string(j);
        break;
      }
    }
  ok ? rep.add_pass("composites-continuous-and-transported")
     : rep.add_fail("composites-continuous-and-transported", w);
  return rep;
}

/// The stock counterexample: for 0 < a < b the PL-meet {a} cap {b} is empty
/// although the operational conjunction of the two propositions is {a}.
inline Report conjunction_failure_witness(const FiniteLattice& L) {
  Elem a = -1, b = -1;
  for (int x = 0; x < L.size() && a < 0; ++x)
    for (int y = 0; y < L.size(); ++y)
      if (x != L.bottom() && L.lt(x, y)) {
        a = x;
        b = y;
        break;
      }
  if (a < 0)
    throw no_comparable_pair(
        "lattice has no comparable pair above the bottom");
  Report rep;
  ActualityMask inter = (1u << a) & (1u << b);  // distinct, so empty
  Elem res = resolve(L, inter);
  Elem conj = L.meet(a, b);
  if (res == L.bottom() && conj == a && inter == 0)
    rep.add_pass("pl-meet-is-not-conjunction");
  else
    rep.add_fail("pl-meet-is-not-conjunction",
                 "pair (" + L.label(a) + "," + L.label(b) + ")");
  rep.laws.back().witness = "pair (" + L.label(a) + "," + L.label(b) +
                            "): {a} cap {b} resolves to " + L.label(res) +
                            ", conjunction is " + L.label(conj);
  return rep;
}

}  // namespace latkit

#endif  // LATKIT_PROPOSITIONS_HPP
