#ifndef LATKIT_GALOIS_HPP
#define LATKIT_GALOIS_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"
#include "latkit/report.hpp"

namespace latkit {

enum class MapKind { monotone, join_preserving, meet_preserving };

inline const char* to_string(MapKind k) {
  switch (k) {
    case MapKind::monotone: return "monotone";
    case MapKind::join_preserving: return "join-preserving";
    case MapKind::meet_preserving: return "meet-preserving";
  }
  return "?";
}

/// A total map between two lattices stored extensionally, with a verified
/// structure flag.
struct MapTable {
  const FiniteLattice* src = nullptr;
  const FiniteLattice* dst = nullptr;
  std::vector<Elem> image;
  MapKind kind = MapKind::monotone;

  Elem operator()(Elem a) const { return image[a]; }

  bool operator==(const MapTable& o) const { return image == o.image; }
  bool operator<(const MapTable& o) const { return image < o.image; }
};

inline MapTable identity_map(const FiniteLattice& L,
                             MapKind kind = MapKind::join_preserving) {
  MapTable m{&L, &L, {}, kind};
  m.image.resize(L.size());
  for (int a = 0; a < L.size(); ++a) m.image[a] = a;
  return m;
}

inline MapTable constant_map(const FiniteLattice& src,
                             const FiniteLattice& dst, Elem value,
                             MapKind kind = MapKind::monotone) {
  return MapTable{&src, &dst, std::vector<Elem>(src.size(), value), kind};
}

/// f(g(x)).
inline MapTable compose(const MapTable& f, const MapTable& g) {
  if (f.src != g.dst) throw shape_mismatch("composition: middle lattices differ");
  MapTable out{g.src, f.dst, {}, f.kind};
  out.image.resize(g.src->size());
  for (int a = 0; a < g.src->size(); ++a) out.image[a] = f.image[g.image[a]];
  return out;
}

inline bool is_monotone(const MapTable& f,
                        std::pair<Elem, Elem>* witness = nullptr) {
  for (int a = 0; a < f.src->size(); ++a)
    for (int b = 0; b < f.src->size(); ++b)
      if (f.src->leq(a, b) && !f.dst->leq(f.image[a], f.image[b])) {
        if (witness) *witness = {a, b};
        return false;
      }
  return true;
}

/// Finite lattices: preserving binary joins and the empty join (bottom)
/// is equivalent to preserving all joins.
inline bool preserves_joins(const MapTable& f,
                            std::pair<Elem, Elem>* witness = nullptr) {
  if (f.image[f.src->bottom()] != f.dst->bottom()) {
    if (witness) *witness = {f.src->bottom(), f.src->bottom()};
    return false;
  }
  for (int a = 0; a < f.src->size(); ++a)
    for (int b = 0; b < f.src->size(); ++b)
      if (f.image[f.src->join(a, b)] != f.dst->join(f.image[a], f.image[b])) {
        if (witness) *witness = {a, b};
        return false;
      }
  return true;
}

inline bool preserves_meets(const MapTable& f,
                            std::pair<Elem, Elem>* witness = nullptr) {
  if (f.image[f.src->top()] != f.dst->top()) {
    if (witness) *witness = {f.src->top(), f.src->top()};
    return false;
  }
  for (int a = 0; a < f.src->size(); ++a)
    for (int b = 0; b < f.src->size(); ++b)
      if (f.image[f.src->meet(a, b)] != f.dst->meet(f.image[a], f.image[b])) {
        if (witness) *witness = {a, b};
        return false;
      }
  return true;
}

inline bool has_kind(const MapTable& f, MapKind k,
                     std::pair<Elem, Elem>* witness = nullptr) {
  switch (k) {
    case MapKind::monotone: return is_monotone(f, witness);
    case MapKind::join_preserving: return preserves_joins(f, witness);
    case MapKind::meet_preserving: return preserves_meets(f, witness);
  }
  return false;
}

/// f* with its right adjoint f_*; the adjunction f*(a) <= b <=> a <= f_*(b).
struct AdjointPair {
  MapTable lower;  // join-preserving, f*
  MapTable upper;  // meet-preserving, f_*

  bool operator==(const AdjointPair& o) const {
    return lower == o.lower && upper == o.upper;
  }
};

/// A causal relation between two property lattices, stored extensionally.
struct CausalRelation {
  const FiniteLattice* src = nullptr;  // L1
  const FiniteLattice* dst = nullptr;  // L2
  std::vector<std::vector<bool>> rel;  // rel[a1][a2]

  bool related(Elem a1, Elem a2) const { return rel[a1][a2]; }
};

inline CausalRelation relation_from_order(const FiniteLattice& L) {
  CausalRelation R{&L, &L, {}};
  R.rel.assign(L.size(), std::vector<bool>(L.size()));
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) R.rel[a][b] = L.leq(a, b);
  return R;
}

/// a1 ~> a2 iff a1 = 0 or a2 = 1: the two systems do not interact.
inline CausalRelation separation_relation(const FiniteLattice& L1,
                                          const FiniteLattice& L2) {
  CausalRelation R{&L1, &L2, {}};
  R.rel.assign(L1.size(), std::vector<bool>(L2.size()));
  for (int a = 0; a < L1.size(); ++a)
    for (int b = 0; b < L2.size(); ++b)
      R.rel[a][b] = (a == L1.bottom()) || (b == L2.top());
  return R;
}

/// Checks the three closure axioms; every violation is reported with a
/// concrete witness tuple.
inline Report validate_relation(const CausalRelation& R) {
  const auto& L1 = *R.src;
  const auto& L2 = *R.dst;
  if (static_cast<int>(R.rel.size()) != L1.size())
    throw shape_mismatch("relation table has wrong row count");
  for (const auto& row : R.rel)
    if (static_cast<int>(row.size()) != L2.size())
      throw shape_mismatch("relation table has wrong column count");

  Report rep;
  bool ok = true;
  std::string w;
  for (int a1 = 0; a1 < L1.size() && ok; ++a1)
    for (int a2 = 0; a2 < L2.size() && ok; ++a2) {
      if (!R.rel[a1][a2]) continue;
      for (int b1 = 0; b1 < L1.size() && ok; ++b1)
        for (int b2 = 0; b2 < L2.size(); ++b2)
          if (L1.leq(b1, a1) && L2.leq(a2, b2) && !R.rel[b1][b2]) {
            ok = false;
            w = "(" + L1.label(b1) + "<=" + L1.label(a1) + ")~>(" +
                L2.label(a2) + "<=" + L2.label(b2) + ") missing (" +
                L1.label(b1) + "," + L2.label(b2) + ")";
            break;
          }
    }
  ok ? rep.add_pass("down-up-closure") : rep.add_fail("down-up-closure", w);

  // Closure under binary meets of consequents implies closure under all
  // nonempty meets in a finite lattice.
  ok = true;
  for (int a1 = 0; a1 < L1.size() && ok; ++a1)
    for (int b = 0; b < L2.size() && ok; ++b)
      for (int c = 0; c < L2.size(); ++c)
        if (R.rel[a1][b] && R.rel[a1][c] && !R.rel[a1][L2.meet(b, c)]) {
          ok = false;
          w = L1.label(a1) + "~>{" + L2.label(b) + "," + L2.label(c) +
              "} but not their meet " + L2.label(L2.meet(b, c));
          break;
        }
  ok ? rep.add_pass("meet-closure") : rep.add_fail("meet-closure", w);

  ok = true;
  for (int a2 = 0; a2 < L2.size() && ok; ++a2) {
    Elem weakest = L1.bottom();
    bool any = false;
    for (int a1 = 0; a1 < L1.size(); ++a1)
      if (R.rel[a1][a2]) {
        any = true;
        weakest = L1.join(weakest, a1);
      }
    if (any && !R.rel[weakest][a2]) {
      ok = false;
      w = "join of causes of " + L2.label(a2) + " is " + L1.label(weakest) +
          " which is not a cause";
    }
  }
  ok ? rep.add_pass("weakest-cause") : rep.add_fail("weakest-cause", w);
  return rep;
}

/// K: elements of L1 that cause nothing. Empty iff 1_1 ~> 1_2.
inline std::vector<Elem> kernel_K(const CausalRelation& R) {
  std::vector<Elem> K;
  for (int a1 = 0; a1 < R.src->size(); ++a1) {
    bool any = false;
    for (int a2 = 0; a2 < R.dst->size(); ++a2)
      if (R.rel[a1][a2]) {
        any = true;
        break;
      }
    if (!any) K.push_back(a1);
  }
  return K;
}

/// f*(a1) = meet of everything a1 causes. Requires K empty.
inline MapTable derive_propagation(const CausalRelation& R) {
  if (!kernel_K(R).empty())
    throw kernel_non_empty(
        "propagation is undefined on the kernel; totalize the relation first");
  MapTable f{R.src, R.dst, {}, MapKind::join_preserving};
  f.image.resize(R.src->size());
  for (int a1 = 0; a1 < R.src->size(); ++a1) {
    Elem acc = R.dst->top();
    for (int a2 = 0; a2 < R.dst->size(); ++a2)
      if (R.rel[a1][a2]) acc = R.dst->meet(acc, a2);
    f.image[a1] = acc;
  }
  if (!preserves_joins(f))
    throw kind_violation("derived propagation is not join-preserving; "
                         "relation fails the causal axioms");
  return f;
}

/// f_*(a2) = join of the causes of a2.
inline MapTable derive_causation(const CausalRelation& R) {
  MapTable g{R.dst, R.src, {}, MapKind::meet_preserving};
  g.image.resize(R.dst->size());
  for (int a2 = 0; a2 < R.dst->size(); ++a2) {
    Elem acc = R.src->bottom();
    for (int a1 = 0; a1 < R.src->size(); ++a1)
      if (R.rel[a1][a2]) acc = R.src->join(acc, a1);
    g.image[a2] = acc;
  }
  if (!preserves_meets(g))
    throw kind_violation("derived causation is not meet-preserving; "
                         "relation fails the causal axioms");
  return g;
}

inline AdjointPair derive_pair(const CausalRelation& R) {
  return {derive_propagation(R), derive_causation(R)};
}

/// Result of totalizing a relation with nonempty kernel: both lattices get
/// a fresh top, the kernel rows map to it. The extended lattices are held
/// on the heap so the tables inside stay valid when the result moves.
struct TotalizedRelation {
  std::shared_ptr<const FiniteLattice> src_ext, dst_ext;
  CausalRelation relation;  // points at *src_ext / *dst_ext
  AdjointPair pair;
};

inline TotalizedRelation totalize(const CausalRelation& R) {
  TotalizedRelation t;
  t.src_ext = std::make_shared<FiniteLattice>(adjoin_top(*R.src));
  t.dst_ext = std::make_shared<FiniteLattice>(adjoin_top(*R.dst));
  const int n1 = t.src_ext->size(), n2 = t.dst_ext->size();
  t.relation.src = t.src_ext.get();
  t.relation.dst = t.dst_ext.get();
  t.relation.rel.assign(n1, std::vector<bool>(n2, false));
  for (int a1 = 0; a1 < R.src->size(); ++a1)
    for (int a2 = 0; a2 < R.dst->size(); ++a2)
      t.relation.rel[a1][a2] = R.rel[a1][a2];
  // Everything causes the new top, including the new top itself.
  for (int a1 = 0; a1 < n1; ++a1) t.relation.rel[a1][n2 - 1] = true;

  // The defining formulas, evaluated directly: kernel rows see only the
  // new top, so they map to it. Degenerate inputs (an element of L2 with
  // no cause at all) leave the maps merely monotone, which the kind flags
  // record faithfully.
  t.pair.lower = MapTable{t.src_ext.get(), t.dst_ext.get(), {}, MapKind::monotone};
  t.pair.lower.image.resize(n1);
  for (int a1 = 0; a1 < n1; ++a1) {
    Elem acc = t.dst_ext->top();
    for (int a2 = 0; a2 < n2; ++a2)
      if (t.relation.rel[a1][a2]) acc = t.dst_ext->meet(acc, a2);
    t.pair.lower.image[a1] = acc;
  }
  if (preserves_joins(t.pair.lower))
    t.pair.lower.kind = MapKind::join_preserving;
  t.pair.upper = MapTable{t.dst_ext.get(), t.src_ext.get(), {}, MapKind::monotone};
  t.pair.upper.image.resize(n2);
  for (int a2 = 0; a2 < n2; ++a2) {
    Elem acc = t.src_ext->bottom();
    for (int a1 = 0; a1 < n1; ++a1)
      if (t.relation.rel[a1][a2]) acc = t.src_ext->join(acc, a1);
    t.pair.upper.image[a2] = acc;
  }
  if (preserves_meets(t.pair.upper))
    t.pair.upper.kind = MapKind::meet_preserving;
  return t;
}

/// The adjunction law, with the lexicographically least failing pair.
inline bool is_adjoint_pair(const MapTable& f, const MapTable& g,
                            std::pair<Elem, Elem>* witness = nullptr) {
  if (f.src != g.dst || f.dst != g.src)
    throw shape_mismatch("adjunction check: lattices do not line up");
  for (int a = 0; a < f.src->size(); ++a)
    for (int b = 0; b < g.src->size(); ++b)
      if (f.dst->leq(f.image[a], b) != f.src->leq(a, g.image[b])) {
        if (witness) *witness = {a, b};
        return false;
      }
  return true;
}

inline bool is_adjoint_pair(const AdjointPair& p,
                            std::pair<Elem, Elem>* witness = nullptr) {
  return is_adjoint_pair(p.lower, p.upper, witness);
}

/// Right adjoint of a join-preserving map: f_*(b) = join{a | f(a) <= b}.
inline MapTable right_adjoint_of(const MapTable& f) {
  std::pair<Elem, Elem> w;
  if (!preserves_joins(f, &w))
    throw kind_violation("right_adjoint_of: input not join-preserving at {" +
                         f.src->label(w.first) + "," + f.src->label(w.second) +
                         "}");
  MapTable g{f.dst, f.src, {}, MapKind::meet_preserving};
  g.image.resize(f.dst->size());
  for (int b = 0; b < f.dst->size(); ++b) {
    Elem acc = f.src->bottom();
    for (int a = 0; a < f.src->size(); ++a)
      if (f.dst->leq(f.image[a], b)) acc = f.src->join(acc, a);
    g.image[b] = acc;
  }
  return g;
}

/// Left adjoint of a meet-preserving map: f*(a) = meet{b | a <= g(b)}.
inline MapTable left_adjoint_of(const MapTable& g) {
  std::pair<Elem, Elem> w;
  if (!preserves_meets(g, &w))
    throw kind_violation("left_adjoint_of: input not meet-preserving at {" +
                         g.src->label(w.first) + "," + g.src->label(w.second) +
                         "}");
  MapTable f{g.dst, g.src, {}, MapKind::join_preserving};
  f.image.resize(g.dst->size());
  for (int a = 0; a < g.dst->size(); ++a) {
    Elem acc = g.src->top();
    for (int b = 0; b < g.src->size(); ++b)
      if (g.dst->leq(a, g.image[b])) acc = g.src->meet(acc, b);
    f.image[a] = acc;
  }
  return f;
}

/// a1 ~> a2 iff f*(a1) <= a2; inverts derive_pair on valid relations.
inline CausalRelation relation_of_pair(const AdjointPair& p) {
  CausalRelation R{p.lower.src, p.lower.dst, {}};
  R.rel.assign(R.src->size(), std::vector<bool>(R.dst->size()));
  for (int a1 = 0; a1 < R.src->size(); ++a1)
    for (int a2 = 0; a2 < R.dst->size(); ++a2)
      R.rel[a1][a2] = R.dst->leq(p.lower.image[a1], a2);
  return R;
}

inline AdjointPair compose_pairs(const AdjointPair& p12,
                                 const AdjointPair& p23) {
  if (p12.lower.dst != p23.lower.src)
    throw shape_mismatch("compose_pairs: middle lattices differ");
  return {compose(p23.lower, p12.lower), compose(p12.upper, p23.upper)};
}

/// An enumerated hom-set of structure maps between two lattices, with the
/// pointwise order. For meet-preserving maps the lattice order is reversed
/// (the coop order) so that suprema are pointwise infima in the target.
struct HomLattice {
  const FiniteLattice* src = nullptr;
  const FiniteLattice* dst = nullptr;
  MapKind kind = MapKind::join_preserving;
  std::vector<MapTable> maps;  // canonically ordered (lex on image tuples)

  int size() const { return static_cast<int>(maps.size()); }

  /// Pointwise comparison in the target.
  bool pointwise_leq(int i, int j) const {
    for (int a = 0; a < src->size(); ++a)
      if (!dst->leq(maps[i].image[a], maps[j].image[a])) return false;
    return true;
  }

  /// Order of the hom as a complete lattice: pointwise for join maps,
  /// reversed for meet maps.
  bool hom_leq(int i, int j) const {
    return kind == MapKind::meet_preserving ? pointwise_leq(j, i)
                                            : pointwise_leq(i, j);
  }

  int index_of(const MapTable& m) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), m);
    if (it == maps.end() || !(*it == m)) return -1;
    return static_cast<int>(it - maps.begin());
  }

  /// Supremum of a set of maps in the hom order: pointwise join for join
  /// maps, pointwise meet for meet maps. The empty supremum is the hom
  /// bottom.
  MapTable sup(const std::vector<int>& which) const {
    MapTable out{src, dst, {}, kind};
    const bool meets = kind == MapKind::meet_preserving;
    out.image.assign(src->size(), meets ? dst->top() : dst->bottom());
    for (int i : which)
      for (int a = 0; a < src->size(); ++a)
        out.image[a] = meets ? dst->meet(out.image[a], maps[i].image[a])
                             : dst->join(out.image[a], maps[i].image[a]);
    return out;
  }

  /// The hom order realized as a FiniteLattice over map indices.
  FiniteLattice as_lattice() const {
    std::vector<std::string> labels(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
      std::string s = "[";
      for (int a = 0; a < src->size(); ++a) {
        if (a) s += " ";
        s += dst->label(maps[i].image[a]);
      }
      labels[i] = s + "]";
    }
    std::vector<std::vector<bool>> leq(maps.size(),
                                       std::vector<bool>(maps.size()));
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) leq[i][j] = hom_leq(i, j);
    return FiniteLattice::from_order(std::move(labels), std::move(leq));
  }
};

/// All maps L1 -> L2 of the given kind, in lex order on image tuples.
inline HomLattice enumerate_hom(const FiniteLattice& L1,
                                const FiniteLattice& L2, MapKind kind,
                                long long cap = 1LL << 24) {
  const int n1 = L1.size(), n2 = L2.size();
  long long count = 1;
  for (int i = 0; i < n1; ++i) {
    count *= n2;
    if (count > cap)
      throw too_large("enumerate_hom: " + std::to_string(n2) + "^" +
                      std::to_string(n1) + " candidate maps exceed the cap");
  }
  HomLattice hom{&L1, &L2, kind, {}};
  MapTable f{&L1, &L2, std::vector<Elem>(n1, 0), kind};
  for (long long code = 0; code < count; ++code) {
    long long c = code;
    for (int a = 0; a < n1; ++a) {
      f.image[a] = static_cast<Elem>(c % n2);
      c /= n2;
    }
    if (has_kind(f, kind)) hom.maps.push_back(f);
  }
  std::sort(hom.maps.begin(), hom.maps.end());
  return hom;
}

/// The correspondence f |-> f_* from a join-map hom onto the opposite
/// meet-map hom.
struct DualityResult {
  HomLattice meet_hom;           // enumerate_hom(L2, L1, meet)
  std::vector<int> image_index;  // join-map i |-> index of its right adjoint
  bool bijective = false;
  bool order_reversing = false;  // wrt the pointwise orders
  std::string witness;
};

inline DualityResult duality(const HomLattice& join_hom,
                             long long cap = 1LL << 24) {
  if (join_hom.kind != MapKind::join_preserving)
    throw kind_violation("duality expects a join-map hom-lattice");
  DualityResult out;
  out.meet_hom =
      enumerate_hom(*join_hom.dst, *join_hom.src, MapKind::meet_preserving, cap);
  out.image_index.resize(join_hom.size());
  std::vector<bool> hit(out.meet_hom.size(), false);
  out.bijective = true;
  for (int i = 0; i < join_hom.size(); ++i) {
    int j = out.meet_hom.index_of(right_adjoint_of(join_hom.maps[i]));
    out.image_index[i] = j;
    if (j < 0 || hit[j]) {
      out.bijective = false;
      out.witness = "map #" + std::to_string(i) + " has no fresh adjoint";
    } else {
      hit[j] = true;
    }
  }
  if (out.bijective)
    for (bool h : hit)
      if (!h) {
        out.bijective = false;
        out.witness = "some meet-map is not an adjoint";
      }
  out.order_reversing = true;
  for (int i = 0; i < join_hom.size() && out.order_reversing; ++i)
    for (int j = 0; j < join_hom.size(); ++j)
      if (join_hom.pointwise_leq(i, j) &&
          !out.meet_hom.pointwise_leq(out.image_index[j], out.image_index[i])) {
        out.order_reversing = false;
        out.witness = "pointwise order not reversed at maps #" +
                      std::to_string(i) + ",#" + std::to_string(j);
        break;
      }
  return out;
}

}  // namespace latkit

#endif  // LATKIT_GALOIS_HPP
