#include "vuf/groebner.hpp"

#include "vuf/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace vuf {

namespace {

void require_common_ring(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!(*g.ring() == *gens.front().ring())) throw InputError("generators live in different rings");
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial q(a.size());
  for (size_t k = 0; k < a.size(); ++k) q[k] = a[k] - b[k];
  return q;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const int p = f.ring()->p;
  Polynomial a = f.shifted(quotient(l, f.leading_monomial()), inverse_mod(f.leading_coefficient(), p));
  Polynomial b = g.shifted(quotient(l, g.leading_monomial()), inverse_mod(g.leading_coefficient(), p));
  return a - b;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const int p = f.ring()->p;
  Polynomial rest = f;
  Polynomial remainder(f.ring());
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const int lc = rest.leading_coefficient();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
      const int factor = static_cast<int>(static_cast<long long>(lc) * inverse_mod(g.leading_coefficient(), p) % p);
      rest -= g.shifted(quotient(lm, g.leading_monomial()), factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      rest.add_term(lm, p - lc);
    }
  }
  return remainder;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw InputError("groebner_basis needs at least one generator");
  require_common_ring(generators);

  std::vector<Polynomial> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return {};

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t j = 1; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
    Polynomial h = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    if (basis.back().is_constant()) {
      basis = {basis.back()};
      break;
    }
    for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (size_t m = 0; m < basis.size() && !redundant; ++m) {
      if (m == k) continue;
      const Monomial& a = basis[m].leading_monomial();
      const Monomial& b = basis[k].leading_monomial();
      if (divides(a, b) && (a != b || m < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }

  // Interreduce the tails.
  std::vector<Polynomial> reduced;
  for (size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    reduced.push_back(normal_form(minimal[k], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return GrevlexGreater{}(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

bool ideal_contains(const std::vector<Polynomial>& generators, const Polynomial& f) {
  return normal_form(f, groebner_basis(generators)).is_zero();
}

int ideal_dimension(const std::vector<Polynomial>& generators) {
  const auto basis = groebner_basis(generators);
  const int n = generators.front().ring()->nvars();
  if (basis.empty()) return n;
  if (basis.front().is_constant()) return -1;
  if (n > 24) throw BudgetExceeded("ideal_dimension: too many variables for subset search");

  std::vector<unsigned> supports;
  for (const auto& g : basis) {
    unsigned mask = 0;
    const Monomial& lm = g.leading_monomial();
    for (int k = 0; k < n; ++k)
      if (lm[k] > 0) mask |= 1u << k;
    supports.push_back(mask);
  }
  int best = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (unsigned m : supports)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace vuf
