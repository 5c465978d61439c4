#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qnb {

using Var = std::uint32_t;
using Monomial = std::vector<Var>;  // sorted, no repeats; empty = constant 1

// Boolean function in algebraic normal form: a XOR of AND-monomials.
//
// The representation is canonical, so a function depends on a variable iff the
// variable occurs in some monomial. That makes dependency sets exact without
// enumerating inputs.
class Anf {
 public:
  Anf() = default;

  static Anf zero() { return Anf(); }
  static Anf one();
  static Anf var(Var v);
  static Anf from_terms(std::vector<Monomial> terms);
  // Möbius transform of a truth table; bit i of the table index is vars[i].
  static Anf from_truth_table(std::span<const std::uint8_t> table, std::span<const Var> vars);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t degree() const;

  Anf operator+(const Anf& other) const;
  Anf operator*(const Anf& other) const;
  Anf& operator+=(const Anf& other);
  bool operator==(const Anf& other) const = default;

  bool depends_on(Var v) const;
  std::vector<Var> variables() const;
  // Sum of the monomials containing v, with v removed: f(x+e_v) = f(x) + d_v f(x).
  Anf derivative(Var v) const;
  // Replace variable i by images[i]; variables past images.size() stay put.
  Anf substitute(std::span<const Anf> images) const;
  Anf substitute(std::span<const Anf* const> images) const;

  // bits[v / 64] >> (v % 64) is the value of variable v.
  bool evaluate(std::span<const std::uint64_t> bits) const;

  // Assignment (set of variables equal to 1, rest 0) on which the function is
  // 1, or nullopt for the zero function.
  std::optional<Monomial> satisfying_assignment() const;

 private:
  void normalize();

  std::vector<Monomial> terms_;
};

inline bool bit_of(std::span<const std::uint64_t> bits, Var v) {
  return (bits[v / 64] >> (v % 64)) & 1U;
}
inline void set_bit(std::span<std::uint64_t> bits, Var v, bool value) {
  if (value) {
    bits[v / 64] |= std::uint64_t{1} << (v % 64);
  } else {
    bits[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
}

}  // namespace qnb
