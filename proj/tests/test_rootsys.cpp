#include "type_a_model.hpp"
#include "vuf/error.hpp"
#include "vuf/rootsys.hpp"

#include <doctest.h>

using namespace vuf;

namespace {

Root from_model(const RootSystem& sys, model::RootE r) {
  const auto c = model::coefficients(sys.rank(), r);
  const auto found = sys.find(Eigen::Map<const RootVector>(c.data(), static_cast<Eigen::Index>(c.size())));
  REQUIRE(found.has_value());
  return *found;
}

}  // namespace

TEST_CASE("cartan matrix shape") {
  for (const char* name : {"A1", "A4", "B3", "C3", "D4"}) {
    const auto sys = RootSystem::parse(name);
    const auto& c = sys->cartan();
    for (int i = 0; i < sys->rank(); ++i)
      for (int j = 0; j < sys->rank(); ++j) {
        if (i == j) CHECK(c(i, j) == 2);
        else {
          CHECK(c(i, j) <= 0);
          CHECK((c(i, j) == 0) == (c(j, i) == 0));
        }
      }
  }
}

TEST_CASE("positive root counts") {
  for (int n = 1; n <= 6; ++n) CHECK(RootSystem::build(Family::A, n)->num_positive() == n * (n + 1) / 2);
  for (int n = 2; n <= 5; ++n) {
    CHECK(RootSystem::build(Family::B, n)->num_positive() == n * n);
    CHECK(RootSystem::build(Family::C, n)->num_positive() == n * n);
  }
  for (int n = 4; n <= 6; ++n) CHECK(RootSystem::build(Family::D, n)->num_positive() == n * (n - 1));
}

TEST_CASE("simple roots come first and ordering is by height") {
  const auto sys = RootSystem::parse("B3");
  for (int i = 0; i < sys->rank(); ++i) CHECK(sys->simple(i).index == i);
  const auto pos = sys->positive_roots();
  for (size_t k = 1; k < pos.size(); ++k) CHECK(sys->height(pos[k - 1]) <= sys->height(pos[k]));
}

TEST_CASE("type A roots match the e-coordinate model") {
  for (int n : {2, 3, 4}) {
    const auto sys = RootSystem::build(Family::A, n);
    const auto roots = model::positive_roots(n);
    REQUIRE(static_cast<int>(roots.size()) == sys->num_positive());
    for (auto theta : roots)
      for (int k = 0; k < n; ++k) {
        const model::RootE alpha{k, k + 1};
        const Root t = from_model(*sys, theta);
        CHECK(sys->pairing(t, k) == model::inner(theta, alpha));
        // s_k swaps e_k and e_{k+1}
        auto swap = [k](int x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
        CHECK(sys->reflect(t, k) == from_model(*sys, {swap(theta.i), swap(theta.j)}));
        CHECK(sys->reflect(sys->negate(t), k) == from_model(*sys, {swap(theta.j), swap(theta.i)}));
      }
  }
}

TEST_CASE("reflections are involutions and close up the root set") {
  for (const char* name : {"A3", "B3", "C4", "D4"}) {
    const auto sys = RootSystem::parse(name);
    for (Root r : sys->all_roots())
      for (int i = 0; i < sys->rank(); ++i) {
        CHECK(sys->reflect(sys->reflect(r, i), i) == r);
        // s_i(theta) = theta - <theta, alpha_i^vee> alpha_i, read off the Cartan row
        const int coefficient = sys->cartan().row(i).dot(sys->coeffs(r));
        const RootVector expected = sys->coeffs(r) - coefficient * sys->coeffs(sys->simple(i));
        CHECK(sys->coeffs(sys->reflect(r, i)) == expected);
      }
  }
}

TEST_CASE("worked reflections and pairings in A2 and A4") {
  const auto a2 = RootSystem::parse("A2");
  CHECK(a2->reflect(a2->parse_root("a"), 0) == a2->parse_root("-a"));
  CHECK(a2->reflect(a2->parse_root("b"), 0) == a2->parse_root("a+b"));
  CHECK(a2->reflect(a2->parse_root("a+b"), 1) == a2->parse_root("a"));
  CHECK(a2->pairing(a2->parse_root("a"), 0) == 2);
  CHECK(a2->pairing(a2->parse_root("a+b"), 1) == 1);
  const auto a4 = RootSystem::parse("A4");
  CHECK(a4->pairing(a4->parse_root("a+b+c"), 1) == 0);
}

TEST_CASE("root names round-trip") {
  const auto sys = RootSystem::parse("D4");
  for (Root r : sys->all_roots()) CHECK(sys->parse_root(sys->root_name(r)) == r);
  CHECK(sys->root_name(sys->parse_root("[0,-1,0,0]")) == "-b");
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(RootSystem::parse("E8"), InputError);
  CHECK_THROWS_AS(RootSystem::parse("A0"), InputError);
  CHECK_THROWS_AS(RootSystem::parse("D1"), InputError);
  CHECK(RootSystem::parse("D2")->num_positive() == 2);  // A1 x A1
  CHECK(RootSystem::parse("D3")->num_positive() == 6);  // A3
  CHECK_THROWS_AS(RootSystem::parse("A2")->parse_root("a+c"), InputError);
  CHECK_THROWS_AS(RootSystem::parse("A3")->parse_root("a+c"), InputError);
}
