#include "latkit/galois.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "latkit/lattice.hpp"
#include "latkit/sampling.hpp"

using namespace latkit;

namespace {

// Oracle: every function L1 -> L2 as a raw image vector.
std::vector<std::vector<Elem>> all_functions(const FiniteLattice& L1,
                                             const FiniteLattice& L2) {
  std::vector<std::vector<Elem>> out;
  long long count = 1;
  for (int i = 0; i < L1.size(); ++i) count *= L2.size();
  for (long long code = 0; code < count; ++code) {
    std::vector<Elem> img(L1.size());
    long long c = code;
    for (int a = 0; a < L1.size(); ++a) {
      img[a] = static_cast<Elem>(c % L2.size());
      c /= L2.size();
    }
    out.push_back(std::move(img));
  }
  return out;
}

// Oracle: brute-force search for all g with f(a) <= b <=> a <= g(b).
std::vector<std::vector<Elem>> adjoint_candidates(const FiniteLattice& L1,
                                                  const FiniteLattice& L2,
                                                  const std::vector<Elem>& f) {
  std::vector<std::vector<Elem>> found;
  for (const auto& g : all_functions(L2, L1)) {
    bool ok = true;
    for (int a = 0; a < L1.size() && ok; ++a)
      for (int b = 0; b < L2.size(); ++b)
        if (L2.leq(f[a], b) != L1.leq(a, g[b])) {
          ok = false;
          break;
        }
    if (ok) found.push_back(g);
  }
  return found;
}

}  // namespace

TEST_CASE("the order itself is a valid causal relation") {
  auto C = chain(3);
  CHECK(validate_relation(relation_from_order(C)).all_pass());
}

TEST_CASE("the separation relation is valid on assorted pairs") {
  auto M = mn(3);
  auto B = boolean_lattice(2);
  CHECK(validate_relation(separation_relation(M, B)).all_pass());
  CHECK(validate_relation(separation_relation(B, M)).all_pass());
  CHECK(validate_relation(separation_relation(chain(2), chain(4))).all_pass());
}

TEST_CASE("a lone pair violates down-up closure") {
  auto B = boolean_lattice(2);
  CausalRelation R{&B, &B, {}};
  R.rel.assign(4, std::vector<bool>(4, false));
  R.rel[B.top()][B.by_label("a")] = true;
  auto rep = validate_relation(R);
  CHECK_FALSE(rep.all_pass());
  bool downup_failed = false;
  for (const auto& l : rep.laws)
    if (l.name == "down-up-closure" && !l.pass) downup_failed = true;
  CHECK(downup_failed);
}

TEST_CASE("kernel of the separation relation is empty") {
  auto C = chain(3);
  auto M = mn(3);
  auto R = separation_relation(C, M);
  CHECK(kernel_K(R).empty());
}

TEST_CASE("kernel of the empty relation is everything") {
  auto C = chain(2);
  CausalRelation R{&C, &C, {}};
  R.rel.assign(2, std::vector<bool>(2, false));
  CHECK(kernel_K(R).size() == 2);
  CHECK(validate_relation(R).all_pass());  // vacuously closed
}

TEST_CASE("separation yields the stock adjoint pair") {
  for (auto [L1, L2] : {std::pair{chain(3), boolean_lattice(2)},
                        std::pair{mn(3), chain(2)}}) {
    auto R = separation_relation(L1, L2);
    auto p = derive_pair(R);
    for (int a = 0; a < L1.size(); ++a)
      CHECK(p.lower.image[a] == (a == L1.bottom() ? L2.bottom() : L2.top()));
    for (int b = 0; b < L2.size(); ++b)
      CHECK(p.upper.image[b] == (b == L2.top() ? L1.top() : L1.bottom()));
    CHECK(is_adjoint_pair(p));
  }
}

TEST_CASE("the order relation derives the identity pair") {
  auto M = mn(3);
  auto p = derive_pair(relation_from_order(M));
  CHECK(p.lower == identity_map(M));
  CHECK(p.upper == identity_map(M));
}

TEST_CASE("propagation refuses a nonempty kernel") {
  auto C = chain(2);
  CausalRelation R{&C, &C, {}};
  R.rel.assign(2, std::vector<bool>(2, false));
  CHECK_THROWS_AS(derive_propagation(R), kernel_non_empty);
}

TEST_CASE("derived pair matches the brute-force adjoint search") {
  auto C = chain(3);
  auto B = boolean_lattice(2);
  auto hom = enumerate_hom(C, B, MapKind::join_preserving);
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto R = random_relation(hom, rng);
    REQUIRE(validate_relation(R).all_pass());
    auto p = derive_pair(R);
    auto cands = adjoint_candidates(C, B, p.lower.image);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == p.upper.image);
  }
}

TEST_CASE("totalize the empty relation on chain(2) squared") {
  auto C = chain(2);
  CausalRelation R{&C, &C, {}};
  R.rel.assign(2, std::vector<bool>(2, false));
  auto t = totalize(R);
  REQUIRE(t.src_ext->size() == 3);
  const Elem nt1 = 2, nt2 = 2;
  for (int a = 0; a < 3; ++a) CHECK(t.pair.lower.image[a] == nt2);
  CHECK(t.pair.upper.image[nt2] == nt1);
  // Old elements have no old causes: the empty join.
  for (int b = 0; b < 2; ++b)
    CHECK(t.pair.upper.image[b] == t.src_ext->bottom());
}

TEST_CASE("totalized pair is adjoint when the bottom causes everything") {
  // A kernel case that is not degenerate: only the top of chain(2) is
  // causeless, bottom causes every old element.
  auto C = chain(2);
  CausalRelation R{&C, &C, {}};
  R.rel.assign(2, std::vector<bool>(2, false));
  R.rel[0][0] = R.rel[0][1] = true;  // bottom ~> everything, top ~> nothing
  REQUIRE(validate_relation(R).all_pass());
  REQUIRE(kernel_K(R).size() == 1);
  auto t = totalize(R);
  CHECK(t.pair.lower.kind == MapKind::join_preserving);
  CHECK(t.pair.upper.kind == MapKind::meet_preserving);
  CHECK(is_adjoint_pair(t.pair));
  CHECK(t.pair.lower.image[1] == 2);  // the kernel row maps to the new top
}

TEST_CASE("totalize is conservative when the kernel is empty") {
  auto M = mn(3);
  auto B = boolean_lattice(2);
  auto R = separation_relation(M, B);
  auto base = derive_pair(R);
  auto t = totalize(R);
  for (int a = 0; a < M.size(); ++a)
    CHECK(t.pair.lower.image[a] == base.lower.image[a]);
  for (int b = 0; b < B.size(); ++b)
    CHECK(t.pair.upper.image[b] == base.upper.image[b]);
  CHECK(t.pair.lower.image[M.size()] == B.size());  // new top to new top
  CHECK(t.pair.upper.image[B.size()] == M.size());
}

TEST_CASE("adjunction check accepts identities and rejects constants") {
  auto C = chain(2);
  CHECK(is_adjoint_pair(identity_map(C), identity_map(C)));
  auto ct = constant_map(C, C, C.top());
  std::pair<Elem, Elem> w;
  CHECK_FALSE(is_adjoint_pair(ct, ct, &w));
}

TEST_CASE("adjoints of identity and of separation") {
  auto C = chain(3);
  CHECK(right_adjoint_of(identity_map(C)) == identity_map(C));
  auto B = boolean_lattice(2);
  auto p = derive_pair(separation_relation(C, B));
  CHECK(right_adjoint_of(p.lower) == p.upper);
  CHECK(left_adjoint_of(p.upper) == p.lower);
}

TEST_CASE("kind violations carry a witness") {
  auto C = chain(3);
  // Constant-to-top is monotone but does not preserve the empty join.
  CHECK_THROWS_AS(right_adjoint_of(constant_map(C, C, C.top())),
                  kind_violation);
}

TEST_CASE("every enumerated join-map has exactly one meet-adjoint") {
  auto C = chain(3);
  auto B = boolean_lattice(2);
  for (const auto& f : enumerate_hom(C, B, MapKind::join_preserving).maps) {
    auto cands = adjoint_candidates(C, B, f.image);
    REQUIRE(cands.size() == 1);
    CHECK(right_adjoint_of(f).image == cands[0]);
    std::pair<Elem, Elem> w;
    MapTable g{&B, &C, cands[0], MapKind::meet_preserving};
    CHECK(preserves_meets(g, &w));
  }
}

TEST_CASE("relation_of_pair inverts derivation") {
  auto C = chain(3);
  CHECK(relation_of_pair({identity_map(C), identity_map(C)}).rel ==
        relation_from_order(C).rel);

  auto B = boolean_lattice(2);
  auto sep = separation_relation(C, B);
  CHECK(relation_of_pair(derive_pair(sep)).rel == sep.rel);

  auto hom = enumerate_hom(C, C, MapKind::join_preserving);
  for (const auto& f : hom.maps) {
    AdjointPair p{f, right_adjoint_of(f)};
    auto R = relation_of_pair(p);
    CHECK(validate_relation(R).all_pass());
    CHECK(derive_propagation(R) == f);
  }
}

TEST_CASE("composition: unit law, separation, and the brute-force oracle") {
  auto C3 = chain(3);
  auto B = boolean_lattice(2);
  auto C2 = chain(2);

  auto sep12 = derive_pair(separation_relation(C3, B));
  AdjointPair id1{identity_map(C3), identity_map(C3)};
  CHECK(compose_pairs(id1, sep12) == sep12);

  auto sep23 = derive_pair(separation_relation(B, C2));
  auto sep13 = derive_pair(separation_relation(C3, C2));
  CHECK(compose_pairs(sep12, sep23) == sep13);

  auto hom12 = enumerate_hom(C3, B, MapKind::join_preserving);
  auto hom23 = enumerate_hom(B, C2, MapKind::join_preserving);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> p12(0, hom12.size() - 1);
  std::uniform_int_distribution<int> p23(0, hom23.size() - 1);
  for (int i = 0; i < 20; ++i) {
    AdjointPair a{hom12.maps[p12(rng)], {}};
    a.upper = right_adjoint_of(a.lower);
    AdjointPair b{hom23.maps[p23(rng)], {}};
    b.upper = right_adjoint_of(b.lower);
    auto c = compose_pairs(a, b);
    CHECK(is_adjoint_pair(c));
    CHECK(c.upper == right_adjoint_of(c.lower));
  }
}

TEST_CASE("composition is associative") {
  auto C = chain(3);
  auto hom = enumerate_hom(C, C, MapKind::join_preserving);
  for (const auto& f : hom.maps)
    for (const auto& g : hom.maps)
      for (const auto& h : hom.maps) {
        AdjointPair pf{f, right_adjoint_of(f)};
        AdjointPair pg{g, right_adjoint_of(g)};
        AdjointPair ph{h, right_adjoint_of(h)};
        CHECK(compose_pairs(compose_pairs(pf, pg), ph) ==
              compose_pairs(pf, compose_pairs(pg, ph)));
      }
}

TEST_CASE("join-endomaps of chain(2)") {
  auto C = chain(2);
  auto hom = enumerate_hom(C, C, MapKind::join_preserving);
  REQUIRE(hom.size() == 2);
  CHECK(hom.maps[0].image == std::vector<Elem>{0, 0});
  CHECK(hom.maps[1].image == std::vector<Elem>{0, 1});
  CHECK(hom.index_of(identity_map(C)) >= 0);
}

TEST_CASE("join-hom and opposite meet-hom have equal counts") {
  std::vector<FiniteLattice> zoo{chain(2), chain(3), boolean_lattice(2)};
  for (const auto& L1 : zoo)
    for (const auto& L2 : zoo) {
      auto j = enumerate_hom(L1, L2, MapKind::join_preserving);
      auto m = enumerate_hom(L2, L1, MapKind::meet_preserving);
      CHECK(j.size() == m.size());
    }
}

TEST_CASE("duality is an order-reversing bijection with involutive inverse") {
  std::vector<FiniteLattice> zoo{chain(2), chain(3), boolean_lattice(2)};
  for (const auto& L1 : zoo)
    for (const auto& L2 : zoo) {
      auto j = enumerate_hom(L1, L2, MapKind::join_preserving);
      auto d = duality(j);
      CHECK(d.bijective);
      CHECK(d.order_reversing);
      for (int i = 0; i < j.size(); ++i)
        CHECK(left_adjoint_of(d.meet_hom.maps[d.image_index[i]]) == j.maps[i]);
    }
}

TEST_CASE("extreme maps swap under duality") {
  auto C = chain(3);
  auto j = enumerate_hom(C, C, MapKind::join_preserving);
  // Bottom join-map is constant-bottom; its adjoint is constant-top.
  auto bot = j.sup({});
  CHECK(right_adjoint_of(bot).image == std::vector<Elem>(3, C.top()));
}

TEST_CASE("derived propagation preserves all joins, causation all meets") {
  std::vector<std::pair<FiniteLattice, FiniteLattice>> pairs;
  pairs.emplace_back(chain(3), mn(3));
  pairs.emplace_back(boolean_lattice(2), n5());
  std::mt19937 rng(3);
  for (auto& [L1, L2] : pairs) {
    auto hom = enumerate_hom(L1, L2, MapKind::join_preserving);
    for (int t = 0; t < 10; ++t) {
      auto R = random_relation(hom, rng);
      auto p = derive_pair(R);
      const std::uint32_t full1 = (1u << L1.size()) - 1;
      for (std::uint32_t A = 0;; ++A) {
        Elem ja = L1.bottom();
        Elem img = L2.bottom();
        for (int a = 0; a < L1.size(); ++a)
          if (A & (1u << a)) {
            ja = L1.join(ja, a);
            img = L2.join(img, p.lower.image[a]);
          }
        CHECK(p.lower.image[ja] == img);
        if (A == full1) break;
      }
      const std::uint32_t full2 = (1u << L2.size()) - 1;
      for (std::uint32_t A = 0;; ++A) {
        Elem ma = L2.top();
        Elem img = L1.top();
        for (int b = 0; b < L2.size(); ++b)
          if (A & (1u << b)) {
            ma = L2.meet(ma, b);
            img = L1.meet(img, p.upper.image[b]);
          }
        CHECK(p.upper.image[ma] == img);
        if (A == full2) break;
      }
    }
  }
}
