#include "latkit/completion.hpp"

#include <cstdint>
#include <vector>

#include "doctest.h"

using namespace latkit;

namespace {

// Independent oracle: enumerate distributive ideals from first principles,
// without the precomputed tables used by the library.
int count_distributive_ideals(const FiniteLattice& L) {
  const int n = L.size();
  int count = 0;
  for (std::uint32_t I = 0; I < (1u << n); ++I) {
    if (!(I & (1u << L.bottom()))) continue;
    bool good = true;
    for (int x = 0; x < n && good; ++x) {
      if (!(I & (1u << x))) continue;
      for (int y = 0; y < n; ++y)
        if (L.leq(y, x) && !(I & (1u << y))) {
          good = false;
          break;
        }
    }
    // Every subset with a distributive join keeps that join inside.
    for (std::uint32_t A = I; good; A = (A - 1) & I) {
      if (is_distributive_join(L, A) && !(I & (1u << L.join_mask(A))))
        good = false;
      if (A == 0) break;
    }
    if (good) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("the join of two atoms of M_3 is not distributive") {
  auto M = mn(3);
  Elem w = -1;
  CHECK_FALSE(is_distributive_join(
      M, std::vector<Elem>{M.by_label("a"), M.by_label("b")}, &w));
  // The witness is the third atom: c /\ (a \/ b) = c but the right side is 0.
  CHECK(w == M.by_label("c"));
}

TEST_CASE("singleton, empty and chain joins are always distributive") {
  for (const auto& L : {chain(4), mn(3), n5(), boolean_lattice(2)}) {
    CHECK(is_distributive_join(L, std::vector<Elem>{}));
    for (int x = 0; x < L.size(); ++x)
      CHECK(is_distributive_join(L, std::vector<Elem>{x}));
  }
  auto C = chain(4);
  CHECK(is_distributive_join(C, std::vector<Elem>{1, 2, 3}));
}

TEST_CASE("atom joins in a boolean algebra are distributive") {
  auto B = boolean_lattice(2);
  CHECK(is_distributive_join(
      B, std::vector<Elem>{B.by_label("a"), B.by_label("b")}));
}

TEST_CASE("out-of-range subset members are rejected") {
  auto C = chain(2);
  CHECK_THROWS_AS(is_distributive_join(C, std::vector<Elem>{5}),
                  foreign_element);
}

TEST_CASE("frames among the standard examples") {
  for (int k = 0; k <= 3; ++k) CHECK(is_frame(boolean_lattice(k)));
  for (int n = 1; n <= 4; ++n) CHECK(is_frame(chain(n)));
  FrameWitness w;
  CHECK_FALSE(is_frame(mn(3), &w));
  CHECK(mn(3).meet(w.x, mn(3).join(w.y, w.z)) !=
        mn(3).join(mn(3).meet(w.x, w.y), mn(3).meet(w.x, w.z)));
  CHECK_FALSE(is_frame(n5()));
  CHECK_FALSE(is_frame(subspace_lattice(2, 2)));
}

TEST_CASE("triple distributivity agrees with the full subset criterion") {
  std::vector<FiniteLattice> zoo{chain(1), chain(4),  boolean_lattice(3),
                                 mn(3),    mn(4),     n5(),
                                 subspace_lattice(2, 2), subspace_lattice(3, 2)};
  for (const auto& L : zoo) {
    CAPTURE(L.size());
    CHECK(is_frame(L) == every_join_distributive(L));
  }
}

TEST_CASE("completing a frame changes nothing up to isomorphism") {
  for (const auto& L : {chain(1), chain(3), boolean_lattice(2), boolean_lattice(3)}) {
    auto C = frame_completion(L);
    CAPTURE(L.size());
    CHECK(C.frame.size() == L.size());
    CHECK(order_isomorphism(L, C.frame).has_value());
    // The embedding itself is the isomorphism: bijective and order-exact.
    for (int x = 0; x < L.size(); ++x)
      for (int y = 0; y < L.size(); ++y)
        CHECK(L.leq(x, y) == C.frame.leq(C.embedding.image[x],
                                         C.embedding.image[y]));
  }
}

TEST_CASE("the M_3 completion is the eight-element boolean algebra") {
  auto M = mn(3);
  // Oracle first: an independent enumeration of the distributive ideals.
  REQUIRE(count_distributive_ideals(M) == 8);
  auto C = frame_completion(M);
  CHECK(C.frame.size() == 8);
  CHECK(order_isomorphism(C.frame, boolean_lattice(3)).has_value());
  CHECK(is_frame(C.frame));
}

TEST_CASE("completion element counts match the oracle on the zoo") {
  for (const auto& L : {chain(4), mn(3), mn(4), n5(), boolean_lattice(2)}) {
    CAPTURE(L.size());
    auto C = frame_completion(L);
    CHECK(static_cast<int>(C.ideals.size()) == count_distributive_ideals(L));
    CHECK(C.frame.size() == static_cast<int>(C.ideals.size()));
  }
}

TEST_CASE("universal traits hold for the completions of the zoo") {
  for (const auto& L : {chain(3), boolean_lattice(2), mn(3), n5()}) {
    auto C = frame_completion(L);
    auto rep = check_completion_universal_traits(L, C);
    CAPTURE(rep.to_lines());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("the M_3 embedding inflates the non-distributive atom join") {
  auto M = mn(3);
  auto C = frame_completion(M);
  const auto& e = C.embedding.image;
  Elem a = M.by_label("a"), b = M.by_label("b");
  Elem image_join = C.frame.join(e[a], e[b]);
  CHECK(image_join != e[M.join(a, b)]);
  CHECK(C.frame.lt(image_join, e[M.join(a, b)]));
}

TEST_CASE("completion is idempotent on its own output") {
  auto M = mn(3);
  auto C1 = frame_completion(M);
  auto C2 = frame_completion(C1.frame);
  CHECK(order_isomorphism(C1.frame, C2.frame).has_value());
}

TEST_CASE("oversized inputs are refused") {
  CHECK_THROWS_AS(frame_completion(boolean_lattice(4), /*cap=*/10), too_large);
}
