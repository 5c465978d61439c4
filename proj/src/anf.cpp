#include "qnb/anf.hpp"

#include <algorithm>
#include <string>

#include "qnb/error.hpp"

namespace qnb {

namespace {

// Expansions beyond this many monomials are refused rather than left to run.
constexpr std::size_t kMaxTerms = std::size_t{1} << 22;

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_size(std::size_t n) {
  if (n > kMaxTerms) {
    throw Error(ErrorKind::DimensionCapExceeded,
                "polynomial expansion exceeds " + std::to_string(kMaxTerms) + " monomials");
  }
}

}  // namespace

Anf Anf::one() {
  Anf f;
  f.terms_.push_back({});
  return f;
}

Anf Anf::var(Var v) {
  Anf f;
  f.terms_.push_back({v});
  return f;
}

Anf Anf::from_terms(std::vector<Monomial> terms) {
  Anf f;
  for (auto& m : terms) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  f.terms_ = std::move(terms);
  f.normalize();
  return f;
}

Anf Anf::from_truth_table(std::span<const std::uint8_t> table, std::span<const Var> vars) {
  const std::size_t n = vars.size();
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::ArityMismatch, "truth table size does not match variable count");
  }
  std::vector<std::uint8_t> coeff(table.begin(), table.end());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      if (j & bit) coeff[j] ^= coeff[j ^ bit];
    }
  }
  std::vector<Monomial> terms;
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    if (!(coeff[j] & 1U)) continue;
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) {
      if (j & (std::size_t{1} << i)) m.push_back(vars[i]);
    }
    terms.push_back(std::move(m));
  }
  return from_terms(std::move(terms));
}

void Anf::normalize() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<Monomial> kept;
  kept.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(std::move(terms_[i]));
    i = j;
  }
  terms_ = std::move(kept);
}

std::size_t Anf::degree() const {
  std::size_t d = 0;
  for (const auto& m : terms_) d = std::max(d, m.size());
  return d;
}

Anf Anf::operator+(const Anf& other) const {
  Anf out = *this;
  out += other;
  return out;
}

Anf& Anf::operator+=(const Anf& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

Anf Anf::operator*(const Anf& other) const {
  check_size(terms_.size() * other.terms_.size());
  Anf out;
  out.terms_.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) out.terms_.push_back(merge(a, b));
  }
  out.normalize();
  return out;
}

bool Anf::depends_on(Var v) const {
  for (const auto& m : terms_) {
    if (std::binary_search(m.begin(), m.end(), v)) return true;
  }
  return false;
}

std::vector<Var> Anf::variables() const {
  std::vector<Var> out;
  for (const auto& m : terms_) out.insert(out.end(), m.begin(), m.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Anf Anf::derivative(Var v) const {
  Anf out;
  for (const auto& m : terms_) {
    auto it = std::lower_bound(m.begin(), m.end(), v);
    if (it == m.end() || *it != v) continue;
    Monomial reduced;
    reduced.reserve(m.size() - 1);
    reduced.insert(reduced.end(), m.begin(), it);
    reduced.insert(reduced.end(), it + 1, m.end());
    out.terms_.push_back(std::move(reduced));
  }
  out.normalize();
  return out;
}

Anf Anf::substitute(std::span<const Anf> images) const {
  std::vector<const Anf*> ptrs(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) ptrs[i] = &images[i];
  return substitute(std::span<const Anf* const>(ptrs));
}

Anf Anf::substitute(std::span<const Anf* const> images) const {
  Anf out;
  for (const auto& m : terms_) {
    Anf product = Anf::one();
    Monomial untouched;
    for (Var v : m) {
      if (v < images.size() && images[v] != nullptr) {
        product = product * *images[v];
        if (product.is_zero()) break;
      } else {
        untouched.push_back(v);
      }
    }
    if (!untouched.empty() && !product.is_zero()) {
      Anf keep;
      keep.terms_.push_back(std::move(untouched));
      product = product * keep;
    }
    out.terms_.insert(out.terms_.end(), product.terms_.begin(), product.terms_.end());
    check_size(out.terms_.size());
  }
  out.normalize();
  return out;
}

bool Anf::evaluate(std::span<const std::uint64_t> bits) const {
  bool value = false;
  for (const auto& m : terms_) {
    bool term = true;
    for (Var v : m) {
      if (!bit_of(bits, v)) {
        term = false;
        break;
      }
    }
    value ^= term;
  }
  return value;
}

std::optional<Monomial> Anf::satisfying_assignment() const {
  if (terms_.empty()) return std::nullopt;
  // A minimum-degree monomial has no proper sub-monomial among the terms, so
  // setting exactly its variables makes it the only term that fires.
  auto best = std::min_element(terms_.begin(), terms_.end(),
                               [](const Monomial& a, const Monomial& b) { return a.size() < b.size(); });
  return *best;
}

}  // namespace qnb
