#pragma once

#include "vuf/field.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vuf {

/// Polynomial ring F_p[vars]; the variable order is the grevlex order.
struct PolyRing {
  int p;
  std::vector<std::string> vars;

  int nvars() const { return static_cast<int>(vars.size()); }
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};
using RingPtr = std::shared_ptr<const PolyRing>;

/// Throws InputError on a non-prime p or duplicate/empty names.
RingPtr make_ring(int p, std::vector<std::string> vars);

using Monomial = std::vector<int>;

/// Strict "a comes before b" in graded reverse lexicographic order.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Sparse polynomial with coefficients in [1, p); terms are kept in grevlex
/// order, so the first term is the leading one.
class Polynomial {
 public:
  using Terms = std::map<Monomial, int, GrevlexGreater>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, Monomial m, long long c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  /// Degree in the given variables (max over terms).
  int degree_in(std::span<const int> vars) const;
  /// Every term has the same degree in the given variables.
  bool is_homogeneous_in(std::span<const int> vars) const;

  /// Leading data; the polynomial must be nonzero.
  const Monomial& leading_monomial() const;
  int leading_coefficient() const;
  Polynomial monic() const;

  void add_term(const Monomial& m, long long c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(long long c) const;
  /// Multiplies by c * m.
  Polynomial shifted(const Monomial& m, int c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(int var) const;
  Polynomial derivative(std::string_view var) const;

  /// Value at a point of F_q^n; the field characteristic must be p.
  GaloisField::Elem evaluate(const GaloisField& field, std::span<const GaloisField::Elem> point) const;

  std::string to_string() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  Terms terms_;
};

/// Inverse of c modulo the prime p.
int inverse_mod(int c, int p);

/// ASCII syntax: integers, variable names, + - * ^ and parentheses,
/// e.g. "z1*w1^2 + z2*w2^2". Unknown variables are an InputError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Ring over F_p whose variables are the identifiers of the texts in order of
/// first appearance.
RingPtr infer_ring(std::span<const std::string> texts, int p);

/// Copy of f in `target`, mapping source variable k to target variable
/// map[k]; map[k] < 0 substitutes the constant -map[k] - 1 instead.
Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const int> map);

}  // namespace vuf
