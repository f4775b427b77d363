#include "vuf/polynomial.hpp"

#include "vuf/error.hpp"
#include "vuf/parabolic.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

namespace vuf {

int PolyRing::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

RingPtr make_ring(int p, std::vector<std::string> vars) {
  if (!is_prime(p)) throw InputError("coefficient characteristic " + std::to_string(p) + " is not prime");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw InputError("empty variable name");
    if (!seen.insert(v).second) throw InputError("duplicate variable " + v);
  }
  return std::make_shared<const PolyRing>(PolyRing{p, std::move(vars)});
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

int inverse_mod(int c, int p) {
  c %= p;
  if (c < 0) c += p;
  if (c == 0) throw InputError("zero has no inverse mod " + std::to_string(p));
  int t = 0, new_t = 1, r = p, new_r = c;
  while (new_r != 0) {
    const int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

namespace {

int reduce(long long c, int p) {
  c %= p;
  return static_cast<int>(c < 0 ? c + p : c);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Polynomial f(ring);
  f.add_term(Monomial(ring->nvars(), 0), c);
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw InputError("variable index out of range");
  Monomial m(ring->nvars(), 0);
  m[i] = 1;
  return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const int i = ring->index_of(name);
  if (i < 0) throw InputError("unknown variable " + std::string(name));
  return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, long long c) {
  if (static_cast<int>(m.size()) != ring->nvars()) throw InputError("monomial length does not match ring");
  Polynomial f(std::move(ring));
  f.add_term(m, c);
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : degree(terms_.begin()->first); }

int Polynomial::degree_in(std::span<const int> vars) const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int v : vars) d += m[v];
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::is_homogeneous_in(std::span<const int> vars) const {
  std::optional<int> seen;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int v : vars) d += m[v];
    if (seen && *seen != d) return false;
    seen = d;
  }
  return true;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InvariantError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

int Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw InvariantError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(inverse_mod(leading_coefficient(), ring_->p));
}

void Polynomial::add_term(const Monomial& m, long long c) {
  const int v = reduce(c, ring_->p);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (inserted) return;
  it->second = (it->second + v) % ring_->p;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw InputError("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, ring_->p - c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.ring_);
  const int p = a.ring_->p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, static_cast<long long>(ca) * cb % p);
    }
  return out;
}

Polynomial Polynomial::scaled(long long c) const {
  const int v = reduce(c, ring_->p);
  Polynomial out(ring_);
  if (v == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, static_cast<long long>(x) * v % ring_->p);
  return out;
}

Polynomial Polynomial::shifted(const Monomial& shift, int c) const {
  Polynomial out(ring_);
  const int v = reduce(c, ring_->p);
  if (v == 0) return out;
  // Multiplying by a monomial preserves the grevlex order of the terms.
  for (const auto& [m, x] : terms_) {
    Monomial n(m.size());
    for (size_t k = 0; k < n.size(); ++k) n[k] = m[k] + shift[k];
    out.terms_.emplace_hint(out.terms_.end(), std::move(n), static_cast<long long>(x) * v % ring_->p);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw InputError("variable index out of range");
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial n = m;
    --n[var];
    out.add_term(n, static_cast<long long>(c) * m[var]);
  }
  return out;
}

Polynomial Polynomial::derivative(std::string_view var) const {
  const int i = ring_->index_of(var);
  if (i < 0) throw InputError("unknown variable " + std::string(var));
  return derivative(i);
}

GaloisField::Elem Polynomial::evaluate(const GaloisField& field, std::span<const GaloisField::Elem> point) const {
  if (field.characteristic() != ring_->p) throw InputError("field characteristic does not match the ring");
  if (static_cast<int>(point.size()) != ring_->nvars()) throw InputError("point has the wrong number of coordinates");
  GaloisField::Elem acc = 0;
  for (const auto& [m, c] : terms_) {
    GaloisField::Elem t = static_cast<GaloisField::Elem>(c);
    for (size_t k = 0; k < m.size() && t != 0; ++k)
      if (m[k] != 0) t = field.mul(t, field.pow(point[k], m[k]));
    acc = field.add(acc, t);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const int p = ring_->p;
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Print coefficients above p/2 as negatives.
    const bool negative = p > 2 && c > p / 2;
    const int shown = negative ? p - c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (int k = 0; k < ring_->nvars(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[k];
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    if (mono.empty())
      out += std::to_string(shown);
    else if (shown == 1)
      out += mono;
    else
      out += std::to_string(shown) + "*" + mono;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long integer() {
    skip();
    const size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      const long long e = integer();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      const int i = ring_->index_of(name);
      if (i < 0) fail("unknown variable " + std::string(name));
      return Polynomial::variable(ring_, i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const RingPtr& ring_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

RingPtr infer_ring(std::span<const std::string> texts, int p) {
  std::vector<std::string> vars;
  for (const auto& t : texts) {
    for (size_t i = 0; i < t.size();) {
      const unsigned char c = t[i];
      if (std::isalpha(c) || c == '_') {
        const size_t start = i;
        while (i < t.size() && (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_')) ++i;
        std::string name = t.substr(start, i - start);
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(std::move(name));
      } else if (std::isdigit(c)) {
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      } else {
        ++i;
      }
    }
  }
  return make_ring(p, std::move(vars));
}

Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const int> map) {
  const PolyRing& src = *f.ring();
  if (static_cast<int>(map.size()) != src.nvars()) throw InputError("variable map has the wrong length");
  if (target->p != src.p) throw InputError("remap across characteristics");
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial n(target->nvars(), 0);
    long long coeff = c;
    for (int k = 0; k < src.nvars(); ++k) {
      if (m[k] == 0) continue;
      if (map[k] >= 0) {
        n[map[k]] += m[k];
      } else {
        const long long value = -map[k] - 1;
        for (int e = 0; e < m[k]; ++e) coeff = coeff * value % src.p;
      }
    }
    out.add_term(n, coeff);
  }
  return out;
}

}  // namespace vuf
