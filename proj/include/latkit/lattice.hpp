#ifndef LATKIT_LATTICE_HPP
#define LATKIT_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latkit/errors.hpp"
#include "latkit/report.hpp"

namespace latkit {

using Elem = int;

/// Default guard for operations that enumerate all subsets or all maps.
inline constexpr int kDefaultEnumCap = 20;

/// A finite bounded lattice with precomputed order, meet and join tables.
/// Immutable after construction; all queries are pure.
class FiniteLattice {
 public:
  /// An empty placeholder; only assignment is meaningful on it.
  FiniteLattice() = default;

  /// Builds from an explicit order relation. The relation must be a partial
  /// order in which every pair has a unique glb and lub.
  static FiniteLattice from_order(std::vector<std::string> labels,
                                  std::vector<std::vector<bool>> leq) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw empty_input("lattice must have at least one element");
    if (static_cast<int>(leq.size()) != n)
      throw shape_mismatch("order table size does not match label count");
    for (const auto& row : leq)
      if (static_cast<int>(row.size()) != n)
        throw shape_mismatch("order table is not square");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (labels[i] == labels[j])
          throw syntax_error("duplicate element label: " + labels[i]);

    for (int a = 0; a < n; ++a)
      if (!leq[a][a]) throw not_a_poset("order not reflexive at " + labels[a]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && leq[a][b] && leq[b][a])
          throw not_a_poset("antisymmetry fails: " + labels[a] + " and " +
                            labels[b]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq[a][b])
          for (int c = 0; c < n; ++c)
            if (leq[b][c] && !leq[a][c])
              throw not_a_poset("transitivity fails through " + labels[b]);

    FiniteLattice L;
    L.labels_ = std::move(labels);
    L.leq_ = std::move(leq);
    L.n_ = n;
    L.compute_tables();
    return L;
  }

  int size() const { return n_; }
  const std::string& label(Elem a) const { return labels_[check(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of the element with the given label.
  Elem by_label(const std::string& s) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == s) return i;
    throw foreign_element("no element labelled '" + s + "'");
  }

  bool leq(Elem a, Elem b) const { return leq_[check(a)][check(b)]; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[check(a)][check(b)]; }
  Elem join(Elem a, Elem b) const { return join_[check(a)][check(b)]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// b covers a: a < b with nothing strictly between.
  bool covers(Elem a, Elem b) const {
    if (!lt(a, b)) return false;
    for (int c = 0; c < n_; ++c)
      if (lt(a, c) && lt(c, b)) return false;
    return true;
  }

  /// Meet of a subset; the empty meet is top.
  Elem meet_set(std::span<const Elem> members) const {
    Elem acc = top_;
    for (Elem a : members) acc = meet(acc, a);
    return acc;
  }

  /// Join of a subset; the empty join is bottom.
  Elem join_set(std::span<const Elem> members) const {
    Elem acc = bottom_;
    for (Elem a : members) acc = join(acc, a);
    return acc;
  }

  /// Mask-based variants for subset scans (element i <-> bit i). Guarded by
  /// the 32-bit mask width.
  Elem meet_mask(std::uint32_t mask) const {
    require_mask_width();
    Elem acc = top_;
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) acc = meet(acc, i);
    return acc;
  }
  Elem join_mask(std::uint32_t mask) const {
    require_mask_width();
    Elem acc = bottom_;
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) acc = join(acc, i);
    return acc;
  }

  /// Down-set of x as a mask (elements y with y <= x).
  std::uint32_t down_mask(Elem x) const {
    require_mask_width();
    std::uint32_t m = 0;
    for (int y = 0; y < n_; ++y)
      if (leq(y, x)) m |= 1u << y;
    return m;
  }

  std::vector<Elem> atoms() const {
    std::vector<Elem> out;
    for (int a = 0; a < n_; ++a)
      if (covers(bottom_, a)) out.push_back(a);
    return out;
  }

  bool is_atomistic() const {
    const auto at = atoms();
    for (int x = 0; x < n_; ++x) {
      Elem acc = bottom_;
      for (Elem a : at)
        if (leq(a, x)) acc = join(acc, a);
      if (acc != x) return false;
    }
    return true;
  }

  /// Elements in a fixed linear extension (bottom first, top last),
  /// ties broken by label. Used for canonical serialization.
  std::vector<Elem> topological_order() const {
    std::vector<Elem> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [this](Elem a, Elem b) {
      int ha = below_count(a), hb = below_count(b);
      if (ha != hb) return ha < hb;
      return labels_[a] < labels_[b];
    });
    return order;
  }

  /// Covering pairs (a, b) with b covering a.
  std::vector<std::pair<Elem, Elem>> cover_pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (covers(a, b)) out.emplace_back(a, b);
    return out;
  }

  /// Re-checks every table axiom; useful on hand-assembled instances.
  Report validate() const {
    Report r;
    bool ok = true;
    std::string w;
    for (int a = 0; a < n_ && ok; ++a)
      for (int b = 0; b < n_ && ok; ++b) {
        if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) {
          ok = false;
          w = labels_[a] + "," + labels_[b];
        }
      }
    ok ? r.add_pass("commutativity") : r.add_fail("commutativity", w);

    ok = true;
    for (int a = 0; a < n_ && ok; ++a)
      for (int b = 0; b < n_ && ok; ++b)
        for (int c = 0; c < n_; ++c) {
          if (meet(meet(a, b), c) != meet(a, meet(b, c)) ||
              join(join(a, b), c) != join(a, join(b, c))) {
            ok = false;
            w = labels_[a] + "," + labels_[b] + "," + labels_[c];
            break;
          }
        }
    ok ? r.add_pass("associativity") : r.add_fail("associativity", w);

    ok = true;
    for (int a = 0; a < n_ && ok; ++a)
      for (int b = 0; b < n_; ++b) {
        if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) {
          ok = false;
          w = labels_[a] + "," + labels_[b];
          break;
        }
      }
    ok ? r.add_pass("absorption") : r.add_fail("absorption", w);

    ok = true;
    for (int a = 0; a < n_; ++a)
      if (!leq(bottom_, a) || !leq(a, top_)) {
        ok = false;
        w = labels_[a];
        break;
      }
    ok ? r.add_pass("bounds") : r.add_fail("bounds", w);
    return r;
  }

  bool operator==(const FiniteLattice& o) const {
    return labels_ == o.labels_ && leq_ == o.leq_;
  }

 private:
  Elem check(Elem a) const {
    if (a < 0 || a >= n_)
      throw foreign_element("element index " + std::to_string(a) +
                            " out of range");
    return a;
  }

  void require_mask_width() const {
    if (n_ > 31)
      throw too_large("subset masks limited to lattices with at most 31 "
                      "elements; this one has " + std::to_string(n_));
  }

  int below_count(Elem a) const {
    int c = 0;
    for (int x = 0; x < n_; ++x)
      if (leq(x, a)) ++c;
    return c;
  }

  void compute_tables() {
    meet_.assign(n_, std::vector<Elem>(n_));
    join_.assign(n_, std::vector<Elem>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        meet_[a][b] = bound(a, b, /*lower=*/true);
        join_[a][b] = bound(a, b, /*lower=*/false);
      }
    bottom_ = 0;
    top_ = 0;
    for (int a = 0; a < n_; ++a) {
      bottom_ = meet_[bottom_][a];
      top_ = join_[top_][a];
    }
  }

  Elem bound(Elem a, Elem b, bool lower) const {
    std::vector<Elem> cand;
    for (int c = 0; c < n_; ++c)
      if (lower ? (leq_[c][a] && leq_[c][b]) : (leq_[a][c] && leq_[b][c]))
        cand.push_back(c);
    for (Elem m : cand) {
      bool extreme = true;
      for (Elem c : cand)
        if (lower ? !leq_[c][m] : !leq_[m][c]) {
          extreme = false;
          break;
        }
      if (extreme) return m;
    }
    throw not_a_lattice("pair {" + labels_[a] + "," + labels_[b] + "} has no " +
                        (lower ? "greatest lower" : "least upper") + " bound");
  }

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<Elem>> meet_, join_;
  Elem bottom_ = 0, top_ = 0;
};

/// Builds a lattice from its Hasse diagram: the order is the
/// reflexive-transitive closure of the covering pairs.
inline FiniteLattice build_from_covers(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw empty_input("lattice must have at least one element");
  auto index_of = [&](const std::string& s) {
    for (int i = 0; i < n; ++i)
      if (labels[i] == s) return i;
    throw syntax_error("cover references unknown element '" + s + "'");
  };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : covers) leq[index_of(lo)][index_of(hi)] = true;
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return FiniteLattice::from_order(labels, std::move(leq));
}

/// Freely adjoins a new top element strictly above everything.
inline FiniteLattice adjoin_top(const FiniteLattice& L,
                                const std::string& top_label = "TOP") {
  std::vector<std::string> labels = L.labels();
  std::string tl = top_label;
  while (std::find(labels.begin(), labels.end(), tl) != labels.end())
    tl += "'";
  labels.push_back(tl);
  const int n = L.size();
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = L.leq(a, b);
  for (int a = 0; a <= n; ++a) leq[a][n] = true;
  return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

// --- standard example families -------------------------------------------

inline FiniteLattice chain(int n) {
  if (n < 1) throw parameter_out_of_range("chain needs n >= 1");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    covers.emplace_back(labels[i], labels[i + 1]);
  return build_from_covers(labels, covers);
}

/// Boolean k-cube: subsets of {0..k-1} ordered by inclusion.
inline FiniteLattice boolean_lattice(int k) {
  if (k < 0 || k > 5) throw parameter_out_of_range("boolean needs 0 <= k <= 5");
  const int n = 1 << k;
  std::vector<std::string> labels(n);
  for (int m = 0; m < n; ++m) {
    std::string s;
    for (int i = 0; i < k; ++i)
      if (m & (1 << i)) s += static_cast<char>('a' + i);
    labels[m] = s.empty() ? "0" : s;
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = (a & b) == a;
  return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

/// M_k: bottom, k pairwise-incomparable atoms, top.
inline FiniteLattice mn(int k) {
  if (k < 1 || k > 24) throw parameter_out_of_range("mn needs 1 <= k <= 24");
  std::vector<std::string> labels{"0"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < k; ++i) {
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
    covers.emplace_back("0", labels.back());
  }
  labels.push_back("1");
  for (int i = 0; i < k; ++i) covers.emplace_back(labels[1 + i], "1");
  return build_from_covers(labels, covers);
}

/// The pentagon: 0 < a < c < 1 and 0 < b < 1, with b incomparable to a, c.
inline FiniteLattice n5() {
  return build_from_covers({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "c"}, {"c", "1"},
                            {"0", "b"}, {"b", "1"}});
}

namespace detail {

inline int gf_mul(int x, int y, int q) { return (x * y) % q; }
inline int gf_add(int x, int y, int q) { return (x + y) % q; }

/// Span of a set of vectors in GF(q)^d, as a sorted vector of point indices
/// (a point's index encodes its coordinates base q).
inline std::vector<int> gf_span(const std::vector<int>& gens, int q, int d) {
  auto decode = [&](int p) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = p % q;
      p /= q;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int p = 0;
    for (int i = d - 1; i >= 0; --i) p = p * q + v[i];
    return p;
  };
  int total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  std::vector<bool> in(total, false);
  std::vector<int> members{0};
  in[0] = true;
  // Closure under addition and scalar multiples.
  bool grew = true;
  for (int g : gens)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  while (grew) {
    grew = false;
    const auto snapshot = members;
    for (int p1 : snapshot)
      for (int p2 : snapshot) {
        auto v1 = decode(p1), v2 = decode(p2);
        for (int s = 0; s < q; ++s) {
          std::vector<int> v(d);
          for (int i = 0; i < d; ++i)
            v[i] = gf_add(v1[i], gf_mul(s, v2[i], q), q);
          int p = encode(v);
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
            grew = true;
          }
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

/// All linear subspaces of GF(q)^d ordered by inclusion. Meet is
/// intersection, join is the span of the union.
inline FiniteLattice subspace_lattice(int q, int d) {
  if (q != 2 && q != 3 && q != 5)
    throw parameter_out_of_range("subspace_lattice needs q in {2,3,5}");
  if (d < 1 || d > 3)
    throw parameter_out_of_range("subspace_lattice needs 1 <= d <= 3");
  int total = 1;
  for (int i = 0; i < d; ++i) total *= q;

  std::vector<std::vector<int>> subspaces{detail::gf_span({}, q, d)};
  for (std::size_t i = 0; i < subspaces.size(); ++i)
    for (int v = 1; v < total; ++v) {
      auto gens = subspaces[i];
      gens.push_back(v);
      auto s = detail::gf_span(gens, q, d);
      if (std::find(subspaces.begin(), subspaces.end(), s) == subspaces.end())
        subspaces.push_back(s);
    }
  // Canonical order: by dimension proxy (size), then member list.
  std::sort(subspaces.begin(), subspaces.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  const int n = static_cast<int>(subspaces.size());
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "s" + std::to_string(i);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      leq[a][b] = std::includes(subspaces[b].begin(), subspaces[b].end(),
                                subspaces[a].begin(), subspaces[a].end());
  return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

/// Searches for an order isomorphism L1 -> L2 by backtracking; returns the
/// element mapping if one exists. Intended for test-scale lattices.
inline std::optional<std::vector<Elem>> order_isomorphism(
    const FiniteLattice& L1, const FiniteLattice& L2) {
  if (L1.size() != L2.size()) return std::nullopt;
  const int n = L1.size();
  auto profile = [](const FiniteLattice& L, Elem a) {
    int below = 0, above = 0;
    for (int x = 0; x < L.size(); ++x) {
      if (L.leq(x, a)) ++below;
      if (L.leq(a, x)) ++above;
    }
    return std::pair{below, above};
  };
  std::vector<Elem> map(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int a) -> bool {
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (used[b] || profile(L1, a) != profile(L2, b)) continue;
      bool ok = true;
      for (int a2 = 0; a2 < a && ok; ++a2)
        if (L1.leq(a, a2) != L2.leq(b, map[a2]) ||
            L1.leq(a2, a) != L2.leq(map[a2], b))
          ok = false;
      if (!ok) continue;
      map[a] = b;
      used[b] = true;
      if (self(self, a + 1)) return true;
      used[b] = false;
      map[a] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

}  // namespace latkit

#endif  // LATKIT_LATTICE_HPP
