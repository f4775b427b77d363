#include "vuf/error.hpp"
#include "vuf/fibers.hpp"

#include <doctest.h>

#include "type_a_model.hpp"

#include <set>

using namespace vuf;

namespace {

struct Fixture {
  RootSystemPtr sys;
  explicit Fixture(const char* name) : sys(RootSystem::parse(name)) {}

  WeylElement el(const char* text) const { return WeylElement::parse(sys, text); }
  Root root(const char* text) const { return sys->parse_root(text); }
  WenzelDatum single(const char* r) const {
    return WenzelDatum::from_explicit(LeviSubset::borel(sys), {{root(r), 1}}, 2);
  }
  BsdhWord word(const WenzelDatum& d, std::vector<const char*> entries) const {
    std::vector<WeylElement> out;
    for (const char* e : entries) out.push_back(el(e));
    return BsdhWord(d, out);
  }
};

bool single_direction(const ThickeningReport& r, Root root, int n) {
  return r.directions.size() == 1 && r.directions[0].root == root && r.directions[0].exponent == n;
}

}  // namespace

TEST_CASE("dimension and geometric star") {
  const Fixture a2("A2"), a4("A4");
  const auto red2 = WenzelDatum::from_explicit(LeviSubset::borel(a2.sys), {}, 2);
  CHECK(dimension(a2.word(red2, {"e"})) == 0);
  CHECK(dimension(a2.word(red2, {"sa*sb", "sb"})) == 3);
  CHECK(dimension(a4.word(a4.single("-b"), {"sa*sb", "sd"})) == 3);
  CHECK(geometric_star(a2.word(red2, {"sb", "sa", "sb"})) == longest_element(a2.sys));
  CHECK(geometric_star(a2.word(red2, {"sa", "sa"})) == a2.el("sa"));
  CHECK(geometric_star(a2.word(red2, {"sa*sb"})) == a2.el("sa*sb"));
}

TEST_CASE("entries must be longest double-coset representatives") {
  const Fixture a2("A2");
  const auto d = WenzelDatum::from_explicit(LeviSubset(a2.sys, {0}), {}, 2);
  CHECK_THROWS_AS(a2.word(d, {"sb"}), InputError);
  CHECK_NOTHROW(a2.word(d, {"sa"}));
  const auto n = BsdhWord::normalized(d, {a2.el("sb")});
  CHECK(n[0] == longest_element(a2.sys));
}

TEST_CASE("generic fiber of the first projection") {
  const Fixture a4("A4");
  const auto beta = first_projection_generic_fiber(a4.word(a4.single("-b"), {"sa*sb", "sd"}));
  CHECK(single_direction(beta, a4.root("-b"), 1));
  CHECK(beta.residual_word.size() == 1);
  CHECK(first_projection_generic_fiber(a4.word(a4.single("-a"), {"sa*sb", "sd"})).reduced());
  CHECK(first_projection_generic_fiber(a4.word(a4.single("-b"), {"e", "sd"})).reduced());
}

TEST_CASE("fixed-point fibers over the Schubert cells below s_a s_b") {
  const Fixture a4("A4");
  const auto alpha = a4.word(a4.single("-a"), {"sa*sb", "sd"});
  const auto beta = a4.word(a4.single("-b"), {"sa*sb", "sd"});
  CHECK(single_direction(first_projection_fixed_point_fiber(alpha, a4.el("e")), a4.root("-a"), 1));
  CHECK(single_direction(first_projection_fixed_point_fiber(alpha, a4.el("sa")), a4.root("-a"), 1));
  CHECK(first_projection_fixed_point_fiber(alpha, a4.el("sb")).reduced());
  CHECK(first_projection_fixed_point_fiber(alpha, a4.el("sa*sb")).reduced());
  for (const char* v : {"e", "sa", "sb", "sa*sb"}) {
    const auto r = first_projection_fixed_point_fiber(beta, a4.el(v));
    CHECK(single_direction(r, a4.root("-b"), 1));
    CHECK(r.exactness == Exactness::Exact);
  }
  CHECK_THROWS_AS(first_projection_fixed_point_fiber(beta, a4.el("sc")), InputError);
}

// At the identity the directions are the T-curves of the product of the
// U(-alpha_i) along a reduced word: negative roots e_j - e_i with the
// transposition (i j) below w. Checked against the permutation model.
TEST_CASE("local directions at the identity") {
  const Fixture a3("A3");
  for (const auto& w : all_elements(a3.sys)) {
    const auto loc = local_directions(w, WeylElement::identity(a3.sys));
    CHECK(loc.cell.empty());
    std::set<Root> got(loc.slice.begin(), loc.slice.end());
    got.insert(loc.curves.begin(), loc.curves.end());
    const auto perm = model::from_word(3, w.normal_word());
    std::set<Root> expected;
    for (auto r : model::positive_roots(3)) {
      model::Perm t = model::identity(3);
      std::swap(t[r.i], t[r.j]);
      if (!model::bruhat_leq(t, perm)) continue;
      const auto c = model::coefficients(3, {r.j, r.i});
      expected.insert(*a3.sys->find(Eigen::Map<const RootVector>(c.data(), 3)));
    }
    CHECK(got == expected);
    for (int i : support(w)) CHECK(got.count(a3.sys->negate(a3.sys->simple(i))) == 1);
    // a word without repeated letters has a single distinguished subexpression
    const std::set<int> letters(w.normal_word().begin(), w.normal_word().end());
    if (static_cast<int>(letters.size()) == w.length()) CHECK(loc.exact);
  }
}

TEST_CASE("local directions at w are the inversion set") {
  const Fixture a3("A3");
  for (const auto& w : all_elements(a3.sys)) {
    const auto loc = local_directions(w, w);
    CHECK(loc.slice.empty());
    CHECK(static_cast<int>(loc.cell.size()) == w.length());
    for (Root r : loc.cell) CHECK(a3.sys->is_positive(w(r)));
  }
}

TEST_CASE("fiber at w1 agrees with the generic fiber") {
  const Fixture a3("A3");
  const auto d = WenzelDatum::from_profile(a3.sys, {{1, 1}}, 2);
  for (const auto& w : all_elements(a3.sys)) {
    const BsdhWord word(d, {w});
    const auto g = first_projection_generic_fiber(word);
    const auto f = first_projection_fixed_point_fiber(word, w);
    CHECK(g.directions.size() == f.directions.size());
  }
}

TEST_CASE("last projection") {
  const Fixture a2("A2");
  const auto d = a2.single("-a");
  const auto word = a2.word(d, {"sb", "sa", "sb"});
  const auto reports = last_projection_generic_fiber(word);
  REQUIRE(reports.size() == 2);
  CHECK(single_direction(reports[0], a2.root("-b"), 1));
  CHECK(single_direction(reports[1], a2.root("-a-b"), 1));
  CHECK_FALSE(is_last_projection_birational(word));
  CHECK(last_projection_generic_fiber(a2.word(d, {"sb"})).empty());
  CHECK(is_last_projection_birational(a2.word(d, {"sb"})));

  const auto reduced = WenzelDatum::from_explicit(LeviSubset::borel(a2.sys), {}, 2);
  const auto plain = a2.word(reduced, {"sb", "sa", "sb"});
  for (const auto& r : last_projection_generic_fiber(plain)) CHECK(r.reduced());
  CHECK(is_last_projection_birational(plain));
}

TEST_CASE("Schubert cell thickening") {
  const Fixture a4("A4");
  const auto d = a4.single("-b");
  CHECK(single_direction(schubert_cell_thickening(d, a4.el("sa")), a4.root("-a-b"), 1));
  CHECK(schubert_cell_thickening(d, a4.el("e")).reduced());
  CHECK(schubert_cell_thickening(WenzelDatum::from_explicit(LeviSubset::borel(a4.sys), {}, 2), a4.el("sa")).reduced());
  CHECK(schubert_cell_thickening(d, a4.el("sb")).reduced());
}

TEST_CASE("Q-type elements and convolution targets") {
  const Fixture a2("A2");
  const auto borel = WenzelDatum::from_explicit(LeviSubset::borel(a2.sys), {}, 2);
  const LeviSubset q(a2.sys, {0});
  CHECK(is_Q_type(borel, q, a2.el("sa")));
  CHECK_FALSE(is_Q_type(borel, q, a2.el("sb")));
  for (const auto& w : all_elements(a2.sys)) CHECK(is_Q_type(borel, LeviSubset::borel(a2.sys), w));

  const auto word = a2.word(borel, {"sb", "sa", "sb"});
  const std::vector<int> theta{3};
  const auto targets = convolution_targets(borel, LeviSubset::borel(a2.sys), theta, word);
  REQUIRE(targets.size() == 1);
  CHECK(targets[0] == geometric_star(word));
  const std::vector<int> bad{2, 1};
  CHECK_THROWS_AS(convolution_targets(borel, q, bad, word), InputError);
}
