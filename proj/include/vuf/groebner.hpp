#pragma once

#include "vuf/polynomial.hpp"

#include <vector>

namespace vuf {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full reduction of f by the divisors (every term, not only the leading one).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Reduced grevlex Groebner basis by Buchberger's algorithm with the coprime
/// criterion. Elements are monic and sorted by decreasing leading monomial;
/// the zero ideal gives an empty basis.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators);

bool ideal_contains(const std::vector<Polynomial>& generators, const Polynomial& f);

/// Krull dimension of F_p[vars]/I from the largest set of variables that
/// supports no leading monomial. -1 for the unit ideal.
int ideal_dimension(const std::vector<Polynomial>& generators);

}  // namespace vuf
