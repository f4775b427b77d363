#include "vuf/chow.hpp"

#include "vuf/error.hpp"

#include <limits>

namespace vuf {

namespace {

std::int64_t checked_power(std::int64_t base, std::int64_t exponent) {
  std::int64_t out = 1;
  for (std::int64_t k = 0; k < exponent; ++k) {
    if (out > std::numeric_limits<std::int64_t>::max() / base) throw InvariantError("p-power overflows int64");
    out *= base;
  }
  return out;
}

}  // namespace

SchubertBasis::SchubertBasis(const LeviSubset& levi) : levi_(levi), reps_(minimal_coset_reps(levi)) {}

std::optional<int> SchubertBasis::index_of(const WeylElement& w) const {
  for (int k = 0; k < size(); ++k)
    if (reps_[k] == w) return k;
  return std::nullopt;
}

int d_exponent(const WenzelDatum& d, const WeylElement& w) {
  for (int s : d.levi().generators())
    if (w.has_right_descent(s))
      throw InputError(w.to_string() + " is not a minimal coset representative");
  int total = 0;
  for (const auto& e : d.entries())
    if (d.levi().in_radical(w(e.root))) total += e.exponent;
  return total;
}

IntMatrix TransferMatrix::dense() const {
  IntMatrix m = IntMatrix::Zero(size(), size());
  for (int k = 0; k < size(); ++k) m(k, k) = checked_power(p, exponents(k));
  return m;
}

namespace {

TransferMatrix transfer(const WenzelDatum& d, TransferDirection dir) {
  SchubertBasis basis(d.levi());
  const int top = d_exponent(d, basis.top());
  Eigen::VectorXi exps(basis.size());
  for (int k = 0; k < basis.size(); ++k) {
    const int dw = d_exponent(d, basis[k]);
    if (dw > top) throw InvariantError("d_w exceeds d at the longest class");
    exps(k) = dir == TransferDirection::Pushforward ? dw : top - dw;
  }
  return {dir, d.characteristic(), std::move(exps)};
}

}  // namespace

TransferMatrix pushforward_matrix(const WenzelDatum& d) { return transfer(d, TransferDirection::Pushforward); }
TransferMatrix pullback_matrix(const WenzelDatum& d) { return transfer(d, TransferDirection::Pullback); }

Eigen::VectorXi composite_exponents(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.p != b.p || a.size() != b.size()) throw InputError("incompatible transfer matrices");
  return a.exponents + b.exponents;
}

std::int64_t PrimePower::value() const { return checked_power(p, exponent); }

PrimePower cokernel_order(const WenzelDatum& d) {
  const TransferMatrix pull = pullback_matrix(d);
  return {d.characteristic(), pull.exponents.cast<std::int64_t>().sum()};
}

IntPolynomial poincare_polynomial(const LeviSubset& levi) {
  const auto reps = minimal_coset_reps(levi);
  IntPolynomial poly = IntPolynomial::Zero(reps.back().length() + 1);
  for (const auto& w : reps) poly(w.length()) += 1;
  return poly;
}

std::int64_t evaluate(const IntPolynomial& poly, std::int64_t q) {
  std::int64_t acc = 0;
  for (Eigen::Index k = poly.size() - 1; k >= 0; --k) acc = acc * q + poly(k);
  return acc;
}

std::vector<ChowRow> chow_table(const WenzelDatum& d) {
  SchubertBasis basis(d.levi());
  const TransferMatrix push = pushforward_matrix(d);
  const TransferMatrix pull = pullback_matrix(d);
  std::vector<ChowRow> rows;
  for (int k = 0; k < basis.size(); ++k) rows.push_back({basis[k], push.exponents(k), push.exponents(k), pull.exponents(k)});
  return rows;
}

}  // namespace vuf
