#include "vuf/acceptance.hpp"

#include "vuf/chow.hpp"
#include "vuf/fibers.hpp"
#include "vuf/groebner.hpp"
#include "vuf/varieties.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace vuf {

namespace {

// Collects the first few failure messages of one criterion.
struct Check {
  bool pass = true;
  int failures = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    if (++failures <= 3) detail += (failures > 1 ? "; " : "") + what;
  }
  void note(const std::string& what) {
    if (pass) detail = what;
  }
};

std::string directions_text(const RootSystem& sys, const ThickeningReport& r) {
  std::string out = "{";
  for (const auto& d : r.directions) {
    if (out.size() > 1) out += ",";
    out += "(" + sys.root_name(d.root) + "," + std::to_string(d.exponent) + ")";
  }
  return out + "}";
}

bool has_exactly(const ThickeningReport& r, Root root, int exponent) {
  return r.directions.size() == 1 && r.directions[0].root == root && r.directions[0].exponent == exponent &&
         !r.directions[0].flagged;
}

WenzelDatum single_root(const RootSystemPtr& sys, const char* root) {
  return WenzelDatum::from_explicit(LeviSubset::borel(sys), {{sys->parse_root(root), 1}}, 2);
}

BsdhWord a4_word(const WenzelDatum& d) {
  const auto& sys = d.system();
  return BsdhWord(d, {WeylElement::parse(sys, "sa*sb"), WeylElement::parse(sys, "sd")});
}

const char* kFixedPoints[] = {"e", "sa", "sb", "sa*sb"};

void fiber_table_alpha(Check& c) {
  const auto sys = RootSystem::parse("A4");
  const BsdhWord word = a4_word(single_root(sys, "-a"));
  const Root minus_a = sys->parse_root("-a");
  for (const char* v : kFixedPoints) {
    const auto r = first_projection_fixed_point_fiber(word, WeylElement::parse(sys, v));
    const bool nonreduced = std::string(v) == "e" || std::string(v) == "sa";
    const bool ok = nonreduced ? has_exactly(r, minus_a, 1) : r.reduced();
    c.expect(ok && r.exactness == Exactness::Exact, std::string("v=") + v + " gave " + directions_text(*sys, r));
  }
  const auto generic = first_projection_generic_fiber(word);
  c.expect(generic.reduced(), "generic fiber " + directions_text(*sys, generic));
  c.note("(-a,1) at e and sa; reduced at sb, sa*sb and at the generic point");
}

void fiber_table_beta(Check& c) {
  const auto sys = RootSystem::parse("A4");
  const BsdhWord word = a4_word(single_root(sys, "-b"));
  const Root minus_b = sys->parse_root("-b");
  for (const char* v : kFixedPoints) {
    const auto r = first_projection_fixed_point_fiber(word, WeylElement::parse(sys, v));
    c.expect(has_exactly(r, minus_b, 1) && r.exactness == Exactness::Exact,
             std::string("v=") + v + " gave " + directions_text(*sys, r));
  }
  const auto generic = first_projection_generic_fiber(word);
  c.expect(has_exactly(generic, minus_b, 1), "generic fiber " + directions_text(*sys, generic));
  c.note("(-b,1) at e, sa, sb, sa*sb and at the generic point");
}

void last_projection(Check& c) {
  const auto sys = RootSystem::parse("A2");
  const BsdhWord word(single_root(sys, "-a"),
                      {WeylElement::parse(sys, "sb"), WeylElement::parse(sys, "sa"), WeylElement::parse(sys, "sb")});
  const auto reports = last_projection_generic_fiber(word);
  c.expect(reports.size() == 2, "expected 2 coordinate reports, got " + std::to_string(reports.size()));
  if (reports.size() == 2) {
    c.expect(has_exactly(reports[0], sys->parse_root("-b"), 1), "coordinate 1 " + directions_text(*sys, reports[0]));
    c.expect(has_exactly(reports[1], sys->parse_root("-a-b"), 1),
             "coordinate 2 " + directions_text(*sys, reports[1]));
  }
  c.expect(!is_last_projection_birational(word), "last projection reported birational");
  c.note("coordinates (-b,1), (-a-b,1); not birational");
}

void chow_transfer(Check& c) {
  const auto sys = RootSystem::parse("A4");
  const WenzelDatum d = single_root(sys, "-b");
  const SchubertBasis basis(d.levi());
  const IntMatrix push = pushforward_matrix(d).dense();
  const IntMatrix pull = pullback_matrix(d).dense();
  const IntMatrix composite = push * pull;
  const IntMatrix expected = 2 * IntMatrix::Identity(basis.size(), basis.size());
  c.expect(basis.size() == 120, "basis has " + std::to_string(basis.size()) + " classes");
  c.expect(composite == expected, "pushforward * pullback != 2 * identity");
  c.expect(pull * push == expected, "pullback * pushforward != 2 * identity");
  const int d_id = d_exponent(d, WeylElement::identity(sys));
  const int d_top = d_exponent(d, basis.top());
  c.expect(basis.top() == longest_element(sys), "top class is not w0");
  c.expect(d_id == 0, "d_id = " + std::to_string(d_id));
  c.expect(d_top == 1 && d_top == thickening_length(d),
           "d_w0 = " + std::to_string(d_top) + ", thickening_length = " + std::to_string(thickening_length(d)));
  c.note("120 classes, push*pull = 2*I, d_id = 0, d_w0 = 1 = thickening_length");
}

void point_purity(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto twisted = twisted_incidence(2, 2);
  const auto plain = incidence(2, 2);
  const auto rows = point_count_vs_paving(twisted, LeviSubset::borel(RootSystem::parse("A2")), {2, 4});
  c.expect(rows[0].counted == 21 && rows[0].match, "q=2 counted " + std::to_string(rows[0].counted));
  c.expect(rows[1].counted == 105 && rows[1].match, "q=4 counted " + std::to_string(rows[1].counted));
  std::string sweep;
  for (std::int64_t q : {2, 4, 8}) {
    const auto a = projective_point_count(twisted, q);
    const auto b = projective_point_count(plain, q);
    c.expect(a == b, "q=" + std::to_string(q) + ": twisted " + std::to_string(a) + " vs untwisted " + std::to_string(b));
    sweep += (sweep.empty() ? "" : ", ") + std::to_string(q) + ":" + std::to_string(a);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
  c.note("21 over F_2, 105 over F_4; twisted = untwisted at q " + sweep);
}

void non_normality(Check& c) {
  for (int p : {2, 3}) {
    const auto pres = bsdh_sl3(p);
    const auto r = singular_codimension(pres, parse_chart(pres, {"x", "c"}));
    c.expect(r.codimension == 1, "bsdh_sl3(" + std::to_string(p) + ") codimension " +
                                     (r.codimension ? std::to_string(*r.codimension) : "infinite"));
  }
  const auto i31 = nonnormal_schubert(3, 2);
  const auto r = singular_codimension(i31, parse_chart(i31, {"z1", "w4"}));
  c.expect(r.codimension == 1,
           "n=3 Schubert codimension " + (r.codimension ? std::to_string(*r.codimension) : std::string("infinite")));
  c.expect(non_normality_certificate(schubert_ideal(2, 2, 2, 1)).verdict == NormalityVerdict::NotNormal,
           "I_{2,1} not certified");
  c.expect(non_normality_certificate(i31).verdict == NormalityVerdict::NotNormal, "n=3 Schubert not certified");
  c.note("codim 1 for bsdh_sl3(2), bsdh_sl3(3) on x,c and for " + i31.to_string() +
         " on z1,w4; both Schubert varieties not normal");
}

void one_dimensional_schubert(Check& c) {
  int checked = 0;
  for (std::int64_t q : {2, 3, 4, 5}) {
    const int p = q == 4 ? 2 : static_cast<int>(q);
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}}) {
      const auto pres = schubert_ideal(2, p, i, j);
      const auto count = projective_point_count(pres, q);
      c.expect(count == q + 1, pres.tag + " over F_" + std::to_string(q) + " counted " + std::to_string(count));
      ++checked;
    }
  }
  c.note(std::to_string(checked) + " counts equal q+1 for I_{1,2}, I_{2,3} at q = 2,3,4,5");
}

void demazure_associativity(Check& c) {
  const auto a2 = RootSystem::parse("A2");
  const auto all = all_elements(a2);
  int triples = 0;
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) {
        ++triples;
        c.expect(demazure_product(demazure_product(x, y), z) == demazure_product(x, demazure_product(y, z)),
                 "A2 triple " + x.to_string() + "," + y.to_string() + "," + z.to_string());
      }
  const auto a4 = RootSystem::parse("A4");
  const auto all4 = all_elements(a4);
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<size_t> pick(0, all4.size() - 1);
  for (int k = 0; k < 1000; ++k) {
    const auto &x = all4[pick(rng)], &y = all4[pick(rng)], &z = all4[pick(rng)];
    c.expect(demazure_product(demazure_product(x, y), z) == demazure_product(x, demazure_product(y, z)),
             "A4 triple " + x.to_string() + "," + y.to_string() + "," + z.to_string());
  }
  c.note(std::to_string(triples) + " A2 triples, 1000 random A4 triples");
}

// u <= v iff u is the product of some subword of a reduced word of v.
std::set<std::vector<int>> subword_products(const WeylElement& v) {
  const auto& word = v.normal_word();
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
    std::vector<int> sub;
    for (size_t k = 0; k < word.size(); ++k)
      if (mask & (1u << k)) sub.push_back(word[k]);
    out.insert(WeylElement::from_word(v.system(), sub).root_permutation());
  }
  return out;
}

void bruhat_oracle(Check& c) {
  int pairs = 0;
  for (const char* name : {"A2", "A3"}) {
    const auto sys = RootSystem::parse(name);
    const auto all = all_elements(sys);
    for (const auto& v : all) {
      const auto below = subword_products(v);
      for (const auto& u : all) {
        ++pairs;
        const bool oracle = below.count(u.root_permutation()) > 0;
        c.expect(bruhat_leq(u, v) == oracle, std::string(name) + ": " + u.to_string() + " <= " + v.to_string());
      }
    }
  }
  c.note(std::to_string(pairs) + " pairs in A2 and A3 agree with the subword oracle");
}

std::vector<ProjectiveIdealPresentation> builder_ideals() {
  std::vector<ProjectiveIdealPresentation> out;
  for (int p : {2, 3}) {
    out.push_back(incidence(2, p));
    out.push_back(twisted_incidence(2, p));
    out.push_back(bsdh_sl3(p));
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) {
          out.push_back(schubert_ideal(2, p, i, j, true));
          out.push_back(schubert_ideal(2, p, i, j, false));
        }
  }
  out.push_back(bsdh_sl3(5));
  out.push_back(twisted_incidence(3, 2));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) out.push_back(schubert_ideal(3, 2, i, j));
  return out;
}

bool s_pairs_reduce(const std::vector<Polynomial>& gens) {
  const auto basis = groebner_basis(gens);
  for (const auto& g : gens)
    if (!normal_form(g, basis).is_zero()) return false;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b)
      if (!normal_form(s_polynomial(basis[a], basis[b]), basis).is_zero()) return false;
  return true;
}

void groebner_s_pairs(Check& c) {
  int ideals = 0;
  for (const auto& pres : builder_ideals()) {
    ++ideals;
    c.expect(s_pairs_reduce(pres.generators), pres.tag + " homogeneous ideal");
    for (const auto& chart : all_charts(pres)) {
      ++ideals;
      c.expect(s_pairs_reduce(chart_ideal(pres, chart)), pres.tag + " on chart " + chart_name(pres, chart));
    }
  }
  c.note(std::to_string(ideals) + " builder and chart ideals: every S-polynomial reduces to 0");
}

// Valid data with P_red = B: closures of simple profiles, plus the single
// simple-root data used in the worked examples.
std::vector<WenzelDatum> openness_fixtures(const RootSystemPtr& sys, int max_exponent) {
  std::vector<WenzelDatum> out;
  const int base = max_exponent + 1;
  long total = 1;
  for (int i = 0; i < sys->rank(); ++i) total *= base;
  for (long code = 1; code < total; ++code) {
    SimpleProfile profile;
    long rest = code;
    for (int i = 0; i < sys->rank(); ++i, rest /= base)
      if (rest % base) profile[i] = static_cast<int>(rest % base);
    out.push_back(WenzelDatum::from_profile(sys, profile, 2));
  }
  for (int i = 0; i < sys->rank(); ++i)
    out.push_back(WenzelDatum::from_explicit(LeviSubset::borel(sys), {{sys->negate(sys->simple(i)), 1}}, 2));
  return out;
}

void openness(Check& c) {
  int pairs = 0, points = 0;
  for (auto [name, max_exponent] : {std::pair{"A2", 2}, std::pair{"A4", 2}}) {
    const auto sys = RootSystem::parse(name);
    const auto all = all_elements(sys);
    for (const auto& d : openness_fixtures(sys, max_exponent))
      for (const auto& w1 : all) {
        if (w1.length() > 3) continue;
        ++pairs;
        const BsdhWord word(d, {w1});
        const auto generic = first_projection_generic_fiber(word);
        const auto top = first_projection_fixed_point_fiber(word, w1);
        c.expect(top.directions.size() == generic.directions.size(),
                 std::string(name) + " fiber at w1 = " + w1.to_string() + " differs from the generic fiber");
        if (generic.reduced()) continue;
        for (const auto& v : all) {
          if (!bruhat_leq(v, w1)) continue;
          ++points;
          c.expect(!first_projection_fixed_point_fiber(word, v).reduced(),
                   std::string(name) + " w1=" + w1.to_string() + " v=" + v.to_string() + " reduced");
        }
      }
  }
  c.note(std::to_string(pairs) + " (datum, w1) pairs, " + std::to_string(points) +
         " fixed points under nonreduced generic fibers");
}

void frobenius_additivity(Check& c) {
  std::mt19937_64 rng(7);
  int samples = 0;
  for (auto [p, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 2}, std::pair{3, 3},
                      std::pair{3, 4}, std::pair{5, 2}, std::pair{5, 3}, std::pair{7, 2}}) {
    const FieldPtr f = GaloisField::make(p, k);
    std::uniform_int_distribution<GaloisField::Elem> pick(0, f->order() - 1);
    for (int s = 0; s < 10000 / 9 + 1; ++s, ++samples) {
      const auto x = pick(rng), y = pick(rng);
      std::uint64_t e = 1;
      for (int m = 1; m <= k; ++m) {
        e *= static_cast<std::uint64_t>(p);
        c.expect(f->pow(f->add(x, y), e) == f->add(f->pow(x, e), f->pow(y, e)),
                 f->name() + " exponent " + std::to_string(e));
      }
    }
  }
  c.note(std::to_string(samples) + " random pairs over 9 fields, exponents p^1..p^k");
}

struct Criterion {
  const char* id;
  const char* title;
  void (*body)(Check&);
};

const Criterion kCriteria[] = {
    {"1", "fixed-point fiber table, A4, J={-a}", fiber_table_alpha},
    {"2", "fixed-point fiber table, A4, J={-b}", fiber_table_beta},
    {"3", "last projection thickenings, A2, J={-a}", last_projection},
    {"4", "Chow transfer, A4, J={-b}, p=2", chow_transfer},
    {"5", "point-count purity of the twisted incidence variety", point_purity},
    {"6", "non-normality certificates", non_normality},
    {"7", "1-dimensional Schubert varieties count q+1", one_dimensional_schubert},
    {"8a", "Demazure product associativity", demazure_associativity},
    {"8b", "Bruhat order vs subword oracle", bruhat_oracle},
    {"8c", "Groebner S-polynomials reduce to zero", groebner_s_pairs},
    {"8d", "openness of reduced fibers", openness},
    {"8e", "Frobenius additivity", frobenius_additivity},
};

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (const auto& crit : kCriteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({crit.id, crit.title, check.pass, check.detail, secs});
  }
  return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os) {
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    os << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << " -- " << r.detail << " [" << secs << "]\n";
  }
  os << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all;
}

}  // namespace vuf
