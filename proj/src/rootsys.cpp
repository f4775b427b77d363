#include "vuf/rootsys.hpp"

#include "vuf/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

namespace vuf {

namespace {

std::vector<int> key_of(const RootVector& v) { return {v.data(), v.data() + v.size()}; }

// Gram matrix of the simple roots, scaled so every entry is an integer.
Eigen::MatrixXi gram_matrix(Family family, int rank) {
  Eigen::MatrixXi g = Eigen::MatrixXi::Zero(rank, rank);
  switch (family) {
    case Family::A:
      for (int i = 0; i < rank; ++i) {
        g(i, i) = 2;
        if (i + 1 < rank) g(i, i + 1) = g(i + 1, i) = -1;
      }
      break;
    case Family::B:
    case Family::C: {
      // B: alpha_n short; C: alpha_n long.
      const int chain = family == Family::B ? 4 : 2;
      const int last = family == Family::B ? 2 : 4;
      for (int i = 0; i < rank; ++i) {
        g(i, i) = i + 1 == rank ? last : chain;
        if (i + 1 < rank) g(i, i + 1) = g(i + 1, i) = (family == Family::C && i + 2 < rank) ? -1 : -2;
      }
      if (rank == 1) g(0, 0) = 2;
      break;
    }
    case Family::D:
      for (int i = 0; i < rank; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < rank - 1; ++i) g(i, i + 1) = g(i + 1, i) = -1;
      if (rank >= 3) {
        g(rank - 3, rank - 1) = g(rank - 1, rank - 3) = -1;
        g(rank - 3, rank - 2) = g(rank - 2, rank - 3) = -1;
      }
      break;
  }
  return g;
}

}  // namespace

RootSystemPtr RootSystem::build(Family family, int rank) {
  if (rank < 1) throw InputError("root system rank must be positive");
  if (family == Family::D && rank < 2) throw InputError("type D needs rank >= 2");
  return RootSystemPtr(new RootSystem(family, rank, gram_matrix(family, rank)));
}

RootSystemPtr RootSystem::parse(std::string_view name) {
  if (name.size() < 2) throw InputError("bad root system name '" + std::string(name) + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    default: throw InputError("unsupported root system family in '" + std::string(name) + "'");
  }
  int rank = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), rank);
  if (ec != std::errc() || ptr != name.data() + name.size())
    throw InputError("bad root system rank in '" + std::string(name) + "'");
  return build(family, rank);
}

RootSystem::RootSystem(Family family, int rank, Eigen::MatrixXi form)
    : family_(family), rank_(rank), form_(std::move(form)) {
  cartan_.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_(i, j) = 2 * form_(i, j) / form_(i, i);

  // Orbit of the simple roots under the simple reflections, kept positive.
  auto reflect_vec = [&](const RootVector& v, int i) {
    const int num = 2 * (v.transpose() * form_.col(i))(0);
    RootVector out = v;
    out(i) -= num / form_(i, i);
    return out;
  };
  std::set<std::vector<int>> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < rank; ++i) {
    RootVector e = RootVector::Zero(rank);
    e(i) = 1;
    seen.insert(key_of(e));
    queue.push_back(e);
  }
  std::vector<RootVector> positives;
  while (!queue.empty()) {
    RootVector v = queue.front();
    queue.pop_front();
    positives.push_back(v);
    for (int i = 0; i < rank; ++i) {
      RootVector w = reflect_vec(v, i);
      if ((w.array() < 0).any()) continue;
      if (seen.insert(key_of(w)).second) queue.push_back(w);
    }
  }
  std::sort(positives.begin(), positives.end(), [](const RootVector& a, const RootVector& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return key_of(a) > key_of(b);
  });

  num_positive_ = static_cast<int>(positives.size());
  coeffs_ = positives;
  for (const auto& v : positives) coeffs_.push_back(-v);
  for (int id = 0; id < num_roots(); ++id) lookup_.emplace(key_of(coeffs_[id]), id);

  reflect_table_.resize(static_cast<size_t>(num_roots()) * rank);
  pairing_table_.resize(static_cast<size_t>(num_roots()) * rank);
  for (int id = 0; id < num_roots(); ++id) {
    const RootVector& v = coeffs_[id];
    const int norm = v.dot(form_ * v);
    for (int i = 0; i < rank; ++i) {
      auto it = lookup_.find(key_of(reflect_vec(v, i)));
      if (it == lookup_.end()) throw InvariantError("root set not closed under reflection");
      reflect_table_[id * rank + i] = it->second;
      const int num = 2 * (v.transpose() * form_.col(i))(0);
      if (num % norm != 0) throw InvariantError("non-integral coroot pairing");
      pairing_table_[id * rank + i] = num / norm;
    }
  }
}

std::string RootSystem::name() const {
  const char* letters = "ABCD";
  return std::string(1, letters[static_cast<int>(family_)]) + std::to_string(rank_);
}

Root RootSystem::simple(int i) const {
  if (i < 0 || i >= rank_) throw InputError("simple root index out of range");
  return {i};
}

std::optional<Root> RootSystem::find(const RootVector& v) const {
  if (v.size() != rank_) return std::nullopt;
  auto it = lookup_.find(key_of(v));
  if (it == lookup_.end()) return std::nullopt;
  return Root{it->second};
}

Root RootSystem::reflect(Root theta, int i) const {
  if (i < 0 || i >= rank_) throw InputError("simple root index out of range");
  return {reflect_table_[theta.index * rank_ + i]};
}

int RootSystem::pairing(Root theta, int i) const {
  if (i < 0 || i >= rank_) throw InputError("simple root index out of range");
  return pairing_table_[theta.index * rank_ + i];
}

std::vector<int> RootSystem::support(Root r) const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (coeffs(r)(i) != 0) out.push_back(i);
  return out;
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < num_positive_; ++i) out.push_back({i});
  return out;
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < num_roots(); ++i) out.push_back({i});
  return out;
}

std::string RootSystem::simple_name(int i) const {
  if (rank_ <= 26) return std::string(1, static_cast<char>('a' + i));
  return std::to_string(i + 1);
}

std::optional<int> RootSystem::parse_simple_name(std::string_view token) const {
  if (token.empty()) return std::nullopt;
  if (rank_ <= 26 && token.size() == 1 && std::islower(static_cast<unsigned char>(token[0]))) {
    int i = token[0] - 'a';
    if (i < rank_) return i;
    return std::nullopt;
  }
  int k = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), k);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  if (k < 1 || k > rank_) return std::nullopt;
  return k - 1;
}

std::string RootSystem::root_name(Root r) const {
  const RootVector& v = coeffs(r);
  std::string out;
  const bool numeric = rank_ > 26;
  for (int i = 0; i < rank_; ++i) {
    const int c = v(i);
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += numeric ? "a" + simple_name(i) : simple_name(i);
  }
  return out;
}

Root RootSystem::parse_root(std::string_view text) const {
  auto fail = [&]() { return InputError("cannot parse root '" + std::string(text) + "' in " + name()); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw fail();

  RootVector v = RootVector::Zero(rank_);
  if (s.front() == '[') {
    if (s.back() != ']') throw fail();
    size_t pos = 1;
    int idx = 0;
    while (pos < s.size() - 1) {
      size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size() - 1;
      int c = 0;
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, c);
      if (ec != std::errc() || ptr != s.data() + end || idx >= rank_) throw fail();
      v(idx++) = c;
      pos = end + 1;
    }
    if (idx != rank_) throw fail();
  } else {
    size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      }
      int mult = 1;
      size_t digits = pos;
      while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
      if (digits > pos && rank_ <= 26) {
        std::from_chars(s.data() + pos, s.data() + digits, mult);
        pos = digits;
      }
      size_t end = pos;
      if (rank_ <= 26) {
        if (end < s.size() && std::islower(static_cast<unsigned char>(s[end]))) ++end;
      } else {
        if (pos < s.size() && s[pos] == 'a') ++pos;
        end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      }
      auto idx = parse_simple_name(std::string_view(s).substr(pos, end - pos));
      if (!idx) throw fail();
      v(*idx) += sign * mult;
      pos = end;
    }
  }
  auto r = find(v);
  if (!r) throw fail();
  return *r;
}

}  // namespace vuf
