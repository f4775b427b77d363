#include "vuf/field.hpp"

#include "vuf/error.hpp"
#include "vuf/parabolic.hpp"

#include <map>

namespace vuf {

namespace {

using Digits = std::vector<int>;

const std::map<std::pair<int, int>, Digits>& conway_table() {
  static const std::map<std::pair<int, int>, Digits> table = {
      {{2, 1}, {1, 1}},          {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}}, {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}}, {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
  };
  return table;
}

Digits to_digits(std::uint32_t v, int p, int k) {
  Digits d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = static_cast<int>(v % p);
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, int p) {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Remainder of a modulo monic b over F_p; both lowest degree first.
Digits poly_mod(Digits a, const Digits& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  a.resize(std::max(db, 0));
  return a;
}

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, int p, const Digits& modulus) {
  const int k = static_cast<int>(modulus.size()) - 1;
  Digits da = to_digits(a, p, k), db = to_digits(b, p, k);
  Digits prod(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  return from_digits(poly_mod(prod, modulus, p), p);
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& monic) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d.
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Digits div = to_digits(c, p, d);
      div.push_back(1);
      Digits r = poly_mod(monic, div, p);
      bool zero = true;
      for (int x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldPtr GaloisField::make(int p, int k) {
  if (!is_prime(p)) throw InputError("field characteristic must be prime");
  if (k < 1) throw InputError("field extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1u << 20)) throw InputError("field order too large");
  }
  Digits modulus;
  if (auto it = conway_table().find({p, k}); it != conway_table().end()) {
    modulus = it->second;
  } else {
    for (std::uint32_t c = 0;; ++c) {
      Digits cand = to_digits(c, p, k);
      cand.push_back(1);
      if (is_irreducible(p, cand)) {
        modulus = cand;
        break;
      }
    }
  }
  return FieldPtr(new GaloisField(p, k, std::move(modulus)));
}

FieldPtr GaloisField::of_order(std::int64_t q) {
  if (q < 2) throw InputError("field order must be at least 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw InputError(std::to_string(q) + " is not a prime power");
  return make(static_cast<int>(p), k);
}

GaloisField::GaloisField(int p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (Elem g = 1; g < q_; ++g) {
    Elem x = 1;
    Elem steps = 0;
    do {
      exp_[steps] = x;
      log_[x] = steps;
      x = slow_mul(x, g, p_, modulus_);
      ++steps;
    } while (x != 1 && steps < q_ - 1);
    if (x == 1 && steps == q_ - 1) return;
  }
  throw InvariantError("no primitive element found; modulus is not irreducible");
}

std::string GaloisField::name() const {
  return "F_" + std::to_string(q_) + " (p=" + std::to_string(p_) + ",k=" + std::to_string(k_) + ")";
}

GaloisField::Elem GaloisField::from_int(std::int64_t n) const {
  return static_cast<Elem>(((n % p_) + p_) % p_);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    Elem s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw InputError("division by zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

}  // namespace vuf
