#include "vuf/chow.hpp"
#include "vuf/error.hpp"
#include "vuf/parabolic.hpp"

#include <doctest.h>

#include <set>

using namespace vuf;

namespace {

std::set<std::pair<std::string, int>> entries_by_name(const WenzelDatum& d) {
  std::set<std::pair<std::string, int>> out;
  for (const auto& e : d.entries()) out.insert({d.roots().root_name(e.root), e.exponent});
  return out;
}

WenzelDatum explicit_datum(const RootSystemPtr& sys, std::vector<std::pair<const char*, int>> roots, int p = 2,
                           Validation mode = Validation::Permissive) {
  std::vector<InfinitesimalRoot> entries;
  for (auto [name, n] : roots) entries.push_back({sys->parse_root(name), n});
  return WenzelDatum::from_explicit(LeviSubset::borel(sys), entries, p, mode);
}

}  // namespace

TEST_CASE("profile closure in A4") {
  const auto sys = RootSystem::parse("A4");
  const auto d = WenzelDatum::from_profile(sys, {{1, 1}}, 2);
  CHECK(entries_by_name(d) == std::set<std::pair<std::string, int>>{{"-b", 1}, {"-a-b", 1}, {"-b-c", 1}, {"-b-c-d", 1}});
  CHECK(closure_violations(d).empty());
  CHECK(thickening_length(d) == 4);
}

TEST_CASE("profile closure in A2 takes the minimum exponent") {
  const auto sys = RootSystem::parse("A2");
  const auto d = WenzelDatum::from_profile(sys, {{0, 2}, {1, 1}}, 3);
  CHECK(entries_by_name(d) == std::set<std::pair<std::string, int>>{{"-a", 2}, {"-b", 1}, {"-a-b", 1}});
  CHECK(thickening_length(d) == 4);
  CHECK(WenzelDatum::from_profile(sys, {{0, std::nullopt}, {1, std::nullopt}}, 2).is_reduced());
}

TEST_CASE("profile data always pass the strict check") {
  for (const char* name : {"A3", "B3", "C3"}) {
    const auto sys = RootSystem::parse(name);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        SimpleProfile profile;
        if (a) profile[0] = a;
        if (b) profile[2] = b;
        const auto d = WenzelDatum::from_profile(sys, profile, 2);
        CHECK(closure_violations(d).empty());
        CHECK_NOTHROW(WenzelDatum::from_explicit(d.levi(), d.entries(), 2, Validation::Strict));
      }
  }
}

TEST_CASE("explicit data from the worked examples") {
  const auto sys = RootSystem::parse("A4");
  const auto beta = explicit_datum(sys, {{"-b", 1}});
  CHECK(beta.entries().size() == 1);
  CHECK(thickening_length(beta) == 1);
  CHECK(explicit_datum(sys, {{"-a", 1}}).entries().size() == 1);
  // the single root is not closed under the profile rule: permissive keeps it with a warning
  CHECK_FALSE(beta.warnings().empty());
  CHECK_THROWS_AS(explicit_datum(sys, {{"-b", 1}}, 2, Validation::Strict), InputError);
}

TEST_CASE("invalid explicit data") {
  const auto sys = RootSystem::parse("A2");
  CHECK_THROWS_AS(explicit_datum(sys, {{"a", 1}}), InputError);
  CHECK_THROWS_AS(explicit_datum(sys, {{"-a", 0}}), InputError);
  CHECK_THROWS_AS(explicit_datum(sys, {{"-a", 1}}, 4), InputError);
  CHECK_THROWS_AS(explicit_datum(sys, {{"-a", 1}, {"-a", 2}}), InputError);
  // -a lies in the Levi when P_red has Levi {a}
  CHECK_THROWS_AS(WenzelDatum::from_explicit(LeviSubset(sys, {0}), {{sys->parse_root("-a"), 1}}, 2), InputError);
}

TEST_CASE("d exponents") {
  const auto sys = RootSystem::parse("A4");
  const auto d = explicit_datum(sys, {{"-b", 1}});
  CHECK(d_exponent(d, WeylElement::identity(sys)) == 0);
  CHECK(d_exponent(d, longest_element(sys)) == 1);
  CHECK(d_exponent(d, WeylElement::parse(sys, "sa*sb")) == 1);
  CHECK(d_exponent(d, WeylElement::parse(sys, "sa")) == 0);
}

TEST_CASE("transfer matrices for a reduced datum are the identity") {
  const auto sys = RootSystem::parse("A3");
  const auto d = WenzelDatum::from_explicit(LeviSubset::borel(sys), {}, 3);
  const IntMatrix id = IntMatrix::Identity(24, 24);
  CHECK(pushforward_matrix(d).dense() == id);
  CHECK(pullback_matrix(d).dense() == id);
  CHECK(cokernel_order(d).value() == 1);
}

TEST_CASE("transfer matrices compose to p^d_w0") {
  const auto sys = RootSystem::parse("A4");
  const auto d = explicit_datum(sys, {{"-b", 1}});
  const auto push = pushforward_matrix(d), pull = pullback_matrix(d);
  const SchubertBasis basis(d.levi());
  CHECK(push.dense()(basis.size() - 1, basis.size() - 1) == 2);
  CHECK(pull.dense()(0, 0) == 2);
  CHECK((composite_exponents(push, pull).array() == 1).all());

  int zeros = 0;
  for (const auto& w : basis.reps()) zeros += d_exponent(d, w) == 0;
  const auto order = cokernel_order(d);
  CHECK(order.p == 2);
  CHECK(order.exponent == zeros);

  // general profile datum over p = 3
  const auto e = WenzelDatum::from_profile(RootSystem::parse("A3"), {{0, 2}, {2, 1}}, 3);
  const auto ep = pushforward_matrix(e), eq = pullback_matrix(e);
  const int top = d_exponent(e, longest_element(e.system()));
  CHECK((composite_exponents(ep, eq).array() == top).all());
  CHECK(top == thickening_length(e));
}

TEST_CASE("chow table rows") {
  const auto sys = RootSystem::parse("A2");
  const auto d = explicit_datum(sys, {{"-a", 1}});
  const auto rows = chow_table(d);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) CHECK(r.push + r.pull == d_exponent(d, longest_element(sys)));
}

TEST_CASE("Schubert basis with a Levi") {
  const auto sys = RootSystem::parse("A3");
  const LeviSubset levi(sys, {1});
  const SchubertBasis basis(levi);
  CHECK(basis.size() == 12);
  // minimal coset representatives: the top class is w0 * w0(I)
  CHECK(basis.top() * longest_element(levi) == longest_element(sys));
  CHECK(basis.index_of(basis[3]) == 3);
}

TEST_CASE("Poincare polynomials") {
  const auto a2 = RootSystem::parse("A2");
  const auto borel = poincare_polynomial(LeviSubset::borel(a2));
  CHECK(borel.size() == 4);
  CHECK(borel == (IntPolynomial(4) << 1, 2, 2, 1).finished());
  CHECK(evaluate(borel, 2) == 21);
  CHECK(evaluate(poincare_polynomial(LeviSubset(a2, {0})), 5) == 31);
  CHECK(evaluate(poincare_polynomial(LeviSubset::borel(RootSystem::parse("A1"))), 7) == 8);
  CHECK(evaluate(poincare_polynomial(LeviSubset::borel(RootSystem::parse("B2"))), 1) == 8);
}
