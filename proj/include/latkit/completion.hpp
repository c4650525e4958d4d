#ifndef LATKIT_COMPLETION_HPP
#define LATKIT_COMPLETION_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "latkit/errors.hpp"
#include "latkit/galois.hpp"
#include "latkit/lattice.hpp"
#include "latkit/report.hpp"

namespace latkit {

/// Default cap on |L| for distributive-ideal enumeration.
inline constexpr int kCompletionCap = 12;

/// The join of A is distributive iff x meet (join A) = join (x meet A) for
/// every x. On failure the witness x is reported.
inline bool is_distributive_join(const FiniteLattice& L, std::uint32_t A,
                                 Elem* witness = nullptr) {
  if (L.size() > 31) throw too_large("distributivity scan needs |L| <= 31");
  const Elem joinA = L.join_mask(A);
  for (int x = 0; x < L.size(); ++x) {
    Elem rhs = L.bottom();
    for (int a = 0; a < L.size(); ++a)
      if (A & (1u << a)) rhs = L.join(rhs, L.meet(x, a));
    if (L.meet(x, joinA) != rhs) {
      if (witness) *witness = x;
      return false;
    }
  }
  return true;
}

inline bool is_distributive_join(const FiniteLattice& L,
                                 const std::vector<Elem>& A,
                                 Elem* witness = nullptr) {
  std::uint32_t m = 0;
  for (Elem a : A) {
    if (a < 0 || a >= L.size()) throw foreign_element("subset member out of range");
    m |= 1u << a;
  }
  return is_distributive_join(L, m, witness);
}

struct FrameWitness {
  Elem x = -1, y = -1, z = -1;
};

/// A finite lattice is a frame iff it is distributive; checked over all
/// triples.
inline bool is_frame(const FiniteLattice& L, FrameWitness* witness = nullptr) {
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      for (int z = 0; z < L.size(); ++z)
        if (L.meet(x, L.join(y, z)) !=
            L.join(L.meet(x, y), L.meet(x, z))) {
          if (witness) *witness = {x, y, z};
          return false;
        }
  return true;
}

/// Cross-check used by the test suite: every join of every subset is
/// distributive.
inline bool every_join_distributive(const FiniteLattice& L,
                                    std::uint32_t* witness = nullptr) {
  if (L.size() > 31) throw too_large("subset scan needs |L| <= 31");
  const std::uint32_t full = (1u << L.size()) - 1;
  for (std::uint32_t A = 0;; ++A) {
    if (!is_distributive_join(L, A)) {
      if (witness) *witness = A;
      return false;
    }
    if (A == full) break;
  }
  return true;
}

namespace detail {

/// Downward-closed, contains bottom, and contains the join of each of its
/// subsets whose join is distributive.
struct IdealTables {
  std::vector<std::uint32_t> down;       // down_mask per element
  std::vector<Elem> join_of;             // join per subset mask
  std::vector<bool> distributive;        // distributivity per subset mask
};

inline IdealTables ideal_tables(const FiniteLattice& L) {
  const int n = L.size();
  IdealTables t;
  t.down.resize(n);
  for (int x = 0; x < n; ++x) t.down[x] = L.down_mask(x);
  const std::uint32_t count = 1u << n;
  t.join_of.resize(count);
  t.distributive.resize(count);
  for (std::uint32_t A = 0; A < count; ++A) {
    t.join_of[A] = L.join_mask(A);
    t.distributive[A] = is_distributive_join(L, A);
  }
  return t;
}

inline bool is_distributive_ideal(const FiniteLattice& L, const IdealTables& t,
                                  std::uint32_t I) {
  if (!(I & (1u << L.bottom()))) return false;
  for (int x = 0; x < L.size(); ++x)
    if ((I & (1u << x)) && (t.down[x] & ~I)) return false;
  // Closure under distributive joins of subsets.
  for (std::uint32_t A = I;; A = (A - 1) & I) {
    if (t.distributive[A] && !(I & (1u << t.join_of[A]))) return false;
    if (A == 0) break;
  }
  return true;
}

/// Least distributive ideal containing the mask: alternate downward closure
/// and adjoining distributive joins until stable.
inline std::uint32_t ideal_closure(const FiniteLattice& L,
                                   const IdealTables& t, std::uint32_t seed) {
  std::uint32_t I = seed | (1u << L.bottom());
  while (true) {
    std::uint32_t before = I;
    for (int x = 0; x < L.size(); ++x)
      if (I & (1u << x)) I |= t.down[x];
    for (std::uint32_t A = I;; A = (A - 1) & I) {
      if (t.distributive[A]) I |= 1u << t.join_of[A];
      if (A == 0) break;
    }
    if (I == before) return I;
  }
}

}  // namespace detail

/// A frame completion by distributive ideals: elements are the distributive
/// ideals ordered by inclusion; x embeds as the least distributive ideal
/// containing x.
struct FrameCompletion {
  FiniteLattice frame;
  MapTable embedding;                 // L -> frame
  std::vector<std::uint32_t> ideals;  // member mask per frame element
};

inline FrameCompletion frame_completion(const FiniteLattice& L,
                                        int cap = kCompletionCap) {
  if (L.size() > cap || L.size() > 31)
    throw too_large("frame completion refuses |L| > cap");
  const auto t = detail::ideal_tables(L);
  std::vector<std::uint32_t> ideals;
  const std::uint32_t count = 1u << L.size();
  for (std::uint32_t I = 0; I < count; ++I)
    if (detail::is_distributive_ideal(L, t, I)) ideals.push_back(I);
  // Canonical order: by cardinality, then by member mask.
  std::sort(ideals.begin(), ideals.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b))
      return std::popcount(a) < std::popcount(b);
    return a < b;
  });

  const int m = static_cast<int>(ideals.size());
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < L.size(); ++x)
      if (ideals[i] & (1u << x)) {
        if (!first) s += " ";
        s += L.label(x);
        first = false;
      }
    labels[i] = s + "}";
  }
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i][j] = (ideals[i] & ~ideals[j]) == 0;

  FrameCompletion out;
  out.frame = FiniteLattice::from_order(std::move(labels), std::move(leq));
  out.ideals = ideals;
  out.embedding.src = nullptr;  // rebound by the caller if it outlives L
  out.embedding.dst = nullptr;
  out.embedding.kind = MapKind::meet_preserving;
  out.embedding.image.resize(L.size());
  for (int x = 0; x < L.size(); ++x) {
    std::uint32_t I = detail::ideal_closure(L, t, 1u << x);
    auto it = std::find(ideals.begin(), ideals.end(), I);
    if (it == ideals.end())
      throw not_a_lattice("ideal closure produced a non-ideal");
    out.embedding.image[x] = static_cast<Elem>(it - ideals.begin());
  }
  return out;
}

/// The finitely testable traits of the completion: the target is a frame,
/// the embedding is injective, order-reflecting, preserves all meets, and
/// preserves exactly the distributive joins.
inline Report check_completion_universal_traits(const FiniteLattice& L,
                                               const FrameCompletion& C) {
  Report rep;
  const auto& F = C.frame;
  const auto& e = C.embedding.image;

  FrameWitness fw;
  bool ok = is_frame(F, &fw);
  ok ? rep.add_pass("target-is-frame")
     : rep.add_fail("target-is-frame", "(" + F.label(fw.x) + "," +
                                           F.label(fw.y) + "," + F.label(fw.z) +
                                           ")");

  ok = true;
  std::string w;
  for (int x = 0; x < L.size() && ok; ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(x, y) != F.leq(e[x], e[y])) {
        ok = false;
        w = "(" + L.label(x) + "," + L.label(y) + ")";
        break;
      }
  ok ? rep.add_pass("embedding-order-reflecting")
     : rep.add_fail("embedding-order-reflecting", w);

  ok = true;
  for (int x = 0; x < L.size() && ok; ++x)
    for (int y = 0; y < L.size(); ++y)
      if (x != y && e[x] == e[y]) {
        ok = false;
        w = L.label(x) + " and " + L.label(y) + " collide";
        break;
      }
  ok ? rep.add_pass("embedding-injective")
     : rep.add_fail("embedding-injective", w);

  ok = true;
  const std::uint32_t full = (1u << L.size()) - 1;
  for (std::uint32_t A = 0; A <= full && ok; ++A) {
    Elem lhs = e[L.meet_mask(A)];
    Elem rhs = F.top();
    for (int x = 0; x < L.size(); ++x)
      if (A & (1u << x)) rhs = F.meet(rhs, e[x]);
    if (lhs != rhs) {
      ok = false;
      w = "subset mask " + std::to_string(A);
    }
    if (A == full) break;
  }
  ok ? rep.add_pass("embedding-preserves-meets")
     : rep.add_fail("embedding-preserves-meets", w);

  // Distributive joins map to joins of images; non-distributive joins are
  // strictly inflated.
  ok = true;
  for (std::uint32_t A = 0; A <= full && ok; ++A) {
    Elem lhs = e[L.join_mask(A)];
    Elem rhs = F.bottom();
    for (int x = 0; x < L.size(); ++x)
      if (A & (1u << x)) rhs = F.join(rhs, e[x]);
    if (is_distributive_join(L, A)) {
      if (lhs != rhs) {
        ok = false;
        w = "distributive subset mask " + std::to_string(A) + " not preserved";
      }
    } else {
      if (!(F.lt(rhs, lhs))) {
        ok = false;
        w = "non-distributive subset mask " + std::to_string(A) +
            " not strictly inflated";
      }
    }
    if (A == full) break;
  }
  ok ? rep.add_pass("joins-preserved-exactly-when-distributive")
     : rep.add_fail("joins-preserved-exactly-when-distributive", w);
  return rep;
}

}  // namespace latkit

#endif  // LATKIT_COMPLETION_HPP
