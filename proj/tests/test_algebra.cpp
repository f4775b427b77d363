#include "vuf/error.hpp"
#include "vuf/groebner.hpp"
#include "vuf/points.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace vuf;

namespace {

Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

// Naive count over F_p with p prime, straight from evaluate().
std::int64_t naive_affine_count(const std::vector<Polynomial>& gens, int p) {
  const auto field = GaloisField::make(p, 1);
  const int n = gens.front().ring()->nvars();
  std::vector<GaloisField::Elem> x(n, 0);
  std::int64_t total = 0;
  for (std::int64_t code = 0, end = static_cast<std::int64_t>(std::pow(p, n)); code < end; ++code) {
    std::int64_t c = code;
    for (int k = 0; k < n; ++k, c /= p) x[k] = static_cast<GaloisField::Elem>(c % p);
    bool zero = true;
    for (const auto& g : gens) zero = zero && g.evaluate(*field, x) == 0;
    total += zero;
  }
  return total;
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
  for (int p : {2, 3, 5, 7, 11}) {
    const auto f = GaloisField::make(p, 1);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        CHECK(f->add(a, b) == static_cast<GaloisField::Elem>((a + b) % p));
        CHECK(f->mul(a, b) == static_cast<GaloisField::Elem>((a * b) % p));
      }
    CHECK(f->from_int(-1) == static_cast<GaloisField::Elem>(p - 1));
  }
}

TEST_CASE("extension field axioms") {
  for (auto [p, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 2}}) {
    const auto f = GaloisField::make(p, k);
    const auto q = f->order();
    CHECK(is_irreducible(p, f->modulus()));
    for (GaloisField::Elem a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->pow(a, q) == a);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      for (GaloisField::Elem b = 0; b < q; ++b) {
        CHECK(f->mul(a, b) == f->mul(b, a));
        const GaloisField::Elem c = (a * 7 + b * 3) % q;
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
    // the primitive element has order exactly q - 1
    GaloisField::Elem g = f->primitive(), x = g;
    std::uint32_t ord = 1;
    while (x != 1) x = f->mul(x, g), ++ord;
    CHECK(ord == q - 1);
  }
}

TEST_CASE("field construction errors") {
  CHECK(GaloisField::of_order(16)->degree() == 4);
  CHECK(GaloisField::of_order(49)->characteristic() == 7);
  CHECK_THROWS_AS(GaloisField::of_order(6), InputError);
  CHECK_THROWS_AS(GaloisField::of_order(1), InputError);
  CHECK_THROWS_AS(GaloisField::make(4, 1), InputError);
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));  // x^2 + 1 = (x + 1)^2
  CHECK(is_irreducible(2, {1, 1, 1}));
}

TEST_CASE("Frobenius is additive and multiplicative") {
  const auto f = GaloisField::make(3, 3);
  std::mt19937 rng(1);
  std::uniform_int_distribution<GaloisField::Elem> pick(0, f->order() - 1);
  for (int s = 0; s < 500; ++s) {
    const FieldElement x(f, pick(rng)), y(f, pick(rng));
    CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
    CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
  }
}

TEST_CASE("polynomial parsing and printing") {
  const auto r = make_ring(5, {"x", "y", "z"});
  const auto f = P(r, "3*x^2*y - (x + 2)*(y - z) + 7");
  CHECK(f == P(r, "3*x^2*y - x*y + x*z - 2*y + 2*z + 2"));
  CHECK(P(r, f.to_string()) == f);
  CHECK(P(r, "x - x").is_zero());
  CHECK(P(r, "5*y").is_zero());
  CHECK(f.total_degree() == 3);
  CHECK_THROWS_AS(P(r, "x + w"), InputError);
  CHECK_THROWS_AS(P(r, "x + "), InputError);
  CHECK_THROWS_AS(P(r, "(x"), InputError);
}

TEST_CASE("ring inference keeps first-appearance order") {
  const std::vector<std::string> texts{"b*x + a", "y - b"};
  const auto r = infer_ring(texts, 3);
  CHECK(r->vars == std::vector<std::string>{"b", "x", "a", "y"});
}

TEST_CASE("derivatives in characteristic p") {
  const auto r = make_ring(2, {"x", "y", "a", "b"});
  const auto f = P(r, "a^2*x + b^2*y");
  CHECK(f.derivative("a").is_zero());
  CHECK(f.derivative("b").is_zero());
  CHECK(P(r, "a^2*x").derivative("x") == P(r, "a^2"));
  const auto r3 = make_ring(3, {"x"});
  CHECK(P(r3, "x^4 + x^3 + x").derivative(0) == P(r3, "x^3 + 1"));
}

TEST_CASE("freshman's dream") {
  for (int p : {2, 3, 5, 7}) {
    const auto r = make_ring(p, {"x", "y"});
    CHECK((P(r, "x") + P(r, "y")).pow(p) == P(r, "x") .pow(p) + P(r, "y").pow(p));
  }
  // not in characteristic 0 shape: (x+y)^2 over F_3 has a cross term
  const auto r = make_ring(3, {"x", "y"});
  CHECK((P(r, "x + y")).pow(2) == P(r, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("grevlex order") {
  const GrevlexGreater gt;
  CHECK(gt({2, 0, 0}, {0, 1, 0}));
  CHECK(gt({1, 1, 0}, {1, 0, 1}));  // ties broken by the smaller power of the last variable
  CHECK(gt({0, 2, 0}, {1, 0, 1}));
  CHECK_FALSE(gt({1, 0, 0}, {1, 0, 0}));
}

TEST_CASE("Groebner bases of small ideals") {
  const auto r = make_ring(2, {"x", "y", "a", "b"});
  auto gb = groebner_basis({P(r, "x")});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == P(r, "x"));

  gb = groebner_basis({P(r, "x^2"), P(r, "x*y")});
  REQUIRE(gb.size() == 2);
  CHECK(gb[0].leading_monomial() == Monomial{2, 0, 0, 0});
  CHECK(gb[1].leading_monomial() == Monomial{1, 1, 0, 0});

  const auto principal = P(r, "a^2 + b^2*y");
  gb = groebner_basis({principal});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == principal.monic());

  CHECK(groebner_basis({P(r, "x"), P(r, "x + 1")}) == std::vector<Polynomial>{P(r, "1")});
  CHECK(groebner_basis({P(r, "0")}).empty());
}

TEST_CASE("Groebner basis over F_3 with a nontrivial S-pair") {
  const auto r = make_ring(3, {"x", "y", "z"});
  const std::vector<Polynomial> gens{P(r, "x^2 - y"), P(r, "x*y - z"), P(r, "y^2 - x*z")};
  const auto gb = groebner_basis(gens);
  for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
  for (size_t a = 0; a < gb.size(); ++a) {
    CHECK(gb[a].leading_coefficient() == 1);
    for (size_t b = a + 1; b < gb.size(); ++b) CHECK(normal_form(s_polynomial(gb[a], gb[b]), gb).is_zero());
    // reduced: no term of gb[a] is divisible by another leading monomial
    for (size_t b = 0; b < gb.size(); ++b)
      if (a != b)
        for (const auto& [m, c] : gb[a].terms()) CHECK_FALSE(divides(gb[b].leading_monomial(), m));
  }
  CHECK(ideal_contains(gens, P(r, "x^3 - z")));
  CHECK_FALSE(ideal_contains(gens, P(r, "x")));
}

TEST_CASE("ideal dimension") {
  const auto r2 = make_ring(2, {"x", "y"});
  CHECK(ideal_dimension({P(r2, "x")}) == 1);
  CHECK(ideal_dimension({P(r2, "1")}) == -1);
  CHECK(ideal_dimension({P(r2, "0")}) == 2);
  CHECK(ideal_dimension({P(r2, "x*y")}) == 1);
  CHECK(ideal_dimension({P(r2, "x"), P(r2, "y")}) == 0);

  // chart ideal of the non-normal Schubert variety for n = 3, p = 2
  const auto r = make_ring(2, {"z2", "z3", "z4", "w1", "w2", "w3"});
  CHECK(ideal_dimension({P(r, "z2*w2^2 + z3*w3^2"), P(r, "w1"), P(r, "z4")}) == 3);
}

TEST_CASE("affine point counts") {
  const auto r = make_ring(3, {"x", "y"});
  CHECK(affine_point_count({P(r, "x")}, GaloisField::make(3, 1)) == 3);
  CHECK(affine_point_count({P(r, "1")}, GaloisField::make(3, 1)) == 0);
  CHECK(affine_point_count({P(r, "0")}, GaloisField::make(3, 2)) == 81);
  for (const char* text : {"x^2 + y^2 - 1", "x*y - 1", "y^2 - x^3 - x"}) {
    const auto g = P(r, text);
    CHECK(affine_point_count({g}, GaloisField::make(3, 1)) == naive_affine_count({g}, 3));
  }
  // x*y = 1 has q - 1 points over every F_q
  const auto r2 = make_ring(2, {"x", "y"});
  CHECK(affine_point_count({P(r2, "x*y + 1")}, GaloisField::make(2, 3)) == 7);
}

TEST_CASE("projective point counts") {
  const auto r = make_ring(2, {"x", "y", "z"});
  const std::vector<std::vector<int>> plane{{0, 1, 2}};
  CHECK(projective_point_count({P(r, "0")}, plane, GaloisField::make(2, 2)) == 21);
  CHECK(projective_point_count({P(r, "x")}, plane, GaloisField::make(2, 2)) == 5);
  // a smooth conic has q + 1 points
  const auto r5 = make_ring(5, {"x", "y", "z"});
  CHECK(projective_point_count({P(r5, "x*y - z^2")}, plane, GaloisField::make(5, 1)) == 6);
  CHECK_THROWS_AS(projective_point_count({P(r, "x + y^2")}, plane, GaloisField::make(2, 1)), InputError);
  CHECK_THROWS_AS(projective_point_count({P(r, "x")}, {{0, 1}}, GaloisField::make(2, 1)), InputError);
  CHECK_THROWS_AS(projective_point_count({P(r, "x")}, plane, GaloisField::make(3, 1)), InputError);
}

TEST_CASE("point budget") {
  const auto r = make_ring(2, {"a", "b", "c", "d", "e", "f"});
  CHECK_THROWS_AS(affine_point_count({P(r, "a")}, GaloisField::make(2, 4), 1000), BudgetExceeded);
}
