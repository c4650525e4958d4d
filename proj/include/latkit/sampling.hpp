#ifndef LATKIT_SAMPLING_HPP
#define LATKIT_SAMPLING_HPP

#include <random>
#include <vector>

#include "latkit/galois.hpp"
#include "latkit/lattice.hpp"
#include "latkit/quantale.hpp"

namespace latkit {

/// A random valid causal relation with empty kernel: picks a join-map f
/// from the enumerated hom and reads off a ~> b iff f(a) <= b. Every valid
/// relation with empty kernel arises this way.
inline CausalRelation random_relation(const HomLattice& join_hom,
                                      std::mt19937& rng) {
  if (join_hom.size() == 0)
    throw too_large("random_relation needs a nonempty hom");
  std::uniform_int_distribution<int> pick(0, join_hom.size() - 1);
  const MapTable& f = join_hom.maps[pick(rng)];
  CausalRelation R{f.src, f.dst, {}};
  R.rel.assign(f.src->size(), std::vector<bool>(f.dst->size()));
  for (int a = 0; a < f.src->size(); ++a)
    for (int b = 0; b < f.dst->size(); ++b)
      R.rel[a][b] = f.dst->leq(f.image[a], b);
  return R;
}

/// Closes a set of meet-preserving endomaps under composition and
/// pointwise meet, always including the identity and the constant-top map.
/// The result, ordered so that suprema are pointwise meets, is a unital
/// quantale acting on L by evaluation.
inline std::vector<MapTable> close_meet_endos(const FiniteLattice& L,
                                              std::vector<MapTable> gens,
                                              std::size_t cap = 4096) {
  gens.push_back(identity_map(L, MapKind::meet_preserving));
  gens.push_back(constant_map(L, L, L.top(), MapKind::meet_preserving));
  std::vector<MapTable> out;
  for (auto& g : gens) {
    if (!preserves_meets(g))
      throw kind_violation("generator is not meet-preserving");
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = out;
    for (const auto& f : snapshot)
      for (const auto& g : snapshot) {
        MapTable c = compose(f, g);
        c.kind = MapKind::meet_preserving;
        MapTable m{&L, &L, {}, MapKind::meet_preserving};
        m.image.resize(L.size());
        for (int a = 0; a < L.size(); ++a)
          m.image[a] = L.meet(f.image[a], g.image[a]);
        for (auto& cand : {c, m})
          if (std::find(out.begin(), out.end(), cand) == out.end()) {
            out.push_back(cand);
            grew = true;
            if (out.size() > cap)
              throw too_large("meet-endo closure exceeded the cap");
          }
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Builds the induction system generated by the given meet-endomaps:
/// carrier the closure in the coop order, multiplication composition,
/// unit the identity, action by evaluation.
inline InductionSystem induction_system_from_endos(
    const FiniteLattice& L, const std::vector<MapTable>& generators) {
  auto maps = close_meet_endos(L, generators);
  const int m = static_cast<int>(maps.size());
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string s = "[";
    for (int a = 0; a < L.size(); ++a) {
      if (a) s += " ";
      s += L.label(maps[i].image[a]);
    }
    labels[i] = s + "]";
  }
  // Coop order: e below f iff f is pointwise below e, so that suprema in
  // the carrier are pointwise meets, matching the free-choice axiom.
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool below = true;
      for (int a = 0; a < L.size(); ++a)
        if (!L.leq(maps[j].image[a], maps[i].image[a])) {
          below = false;
          break;
        }
      leq[i][j] = below;
    }

  InductionSystem S;
  S.quantale.carrier = FiniteLattice::from_order(std::move(labels), std::move(leq));
  S.quantale.mult.assign(m, std::vector<Elem>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      MapTable c = compose(maps[i], maps[j]);
      auto it = std::lower_bound(maps.begin(), maps.end(), c);
      S.quantale.mult[i][j] = static_cast<Elem>(it - maps.begin());
    }
  auto id = identity_map(L, MapKind::meet_preserving);
  S.quantale.unit = static_cast<Elem>(
      std::lower_bound(maps.begin(), maps.end(), id) - maps.begin());
  S.state = &L;
  S.action.resize(m);
  for (int i = 0; i < m; ++i) S.action[i] = maps[i].image;
  return S;
}

/// A random induction system on L: a few random meet-endomaps, closed up.
inline InductionSystem random_induction_system(const FiniteLattice& L,
                                               const HomLattice& meet_hom,
                                               std::mt19937& rng,
                                               int generator_count = 2) {
  std::uniform_int_distribution<int> pick(0, meet_hom.size() - 1);
  std::vector<MapTable> gens;
  for (int i = 0; i < generator_count; ++i)
    gens.push_back(meet_hom.maps[pick(rng)]);
  return induction_system_from_endos(L, gens);
}

}  // namespace latkit

#endif  // LATKIT_SAMPLING_HPP
