#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace vuf {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// Finite field F_q, q = p^k, as F_p[x] / (modulus).
///
/// Elements are encoded as integers in [0, q): the base-p digits are the
/// coefficients of the residue polynomial, lowest degree first. The prime
/// subfield is therefore [0, p) with the usual integer meaning. Addition uses
/// digitwise arithmetic, multiplication log/antilog tables.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  /// p prime, k >= 1, q <= 2^20. Uses a Conway polynomial when one is
  /// tabulated, otherwise the least monic irreducible in lexicographic order.
  static FieldPtr make(int p, int k);
  /// Field of order q (a prime power).
  static FieldPtr of_order(std::int64_t q);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  Elem order() const { return q_; }
  /// Monic modulus, coefficients lowest degree first (size k + 1).
  const std::vector<int>& modulus() const { return modulus_; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const;
  /// Generator of the multiplicative group used for the log tables.
  Elem primitive() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p_)); }

 private:
  GaloisField(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  Elem q_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;  // size q-1
  std::vector<std::uint32_t> log_;
};

/// Value type wrapper used where convenience matters more than speed.
class FieldElement {
 public:
  FieldElement(FieldPtr field, GaloisField::Elem value) : field_(std::move(field)), v_(value) {}

  const FieldPtr& field() const { return field_; }
  GaloisField::Elem value() const { return v_; }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(v_, o.v_)}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(v_, o.v_)}; }
  FieldElement operator-() const { return {field_, field_->neg(v_)}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(v_, o.v_)}; }
  FieldElement operator/(const FieldElement& o) const { return {field_, field_->mul(v_, field_->inv(o.v_))}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }
  FieldElement frobenius() const { return {field_, field_->frobenius(v_)}; }
  bool operator==(const FieldElement& o) const { return v_ == o.v_; }

 private:
  FieldPtr field_;
  GaloisField::Elem v_;
};

/// Irreducibility of a monic polynomial over F_p (coefficients lowest first),
/// by trial division with every monic polynomial of degree <= deg/2.
bool is_irreducible(int p, const std::vector<int>& monic);

}  // namespace vuf
