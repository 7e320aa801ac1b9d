#pragma once

#include "prr/nat.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace prr {

/// An ordinal below omega^omega, written as a polynomial in omega with
/// natural coefficients. Index i of the coefficient vector holds the
/// coefficient of omega^i; the vector never has trailing zeros, so the empty
/// vector is the ordinal 0 and equality is plain vector equality.
class OrdPoly {
 public:
  OrdPoly() = default;
  explicit OrdPoly(std::vector<Nat> coeffs);

  const std::vector<Nat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest exponent with a nonzero coefficient; 0 for the zero ordinal.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  /// Degree first, then coefficients from the top down.
  std::strong_ordering operator<=>(const OrdPoly& other) const;
  bool operator==(const OrdPoly& other) const = default;

  /// "[c0,c1,...]"
  std::string bracket() const;
  /// "c_k*w^k + ... + c_0", or "0".
  std::string render() const;

 private:
  std::vector<Nat> coeffs_;
};

enum class Cmp { Less, Equal, Greater };

OrdPoly ord_zero();
OrdPoly ord_from_nat(const Nat& n);
Cmp ord_cmp(const OrdPoly& x, const OrdPoly& y);

/// Hessenberg (natural) sum: coefficientwise addition.
OrdPoly ord_nat_sum(const OrdPoly& x, const OrdPoly& y);
/// Multiplication by omega on the left: every exponent moves up by one.
OrdPoly ord_omega_shift(const OrdPoly& x);
/// n-fold natural sum of x.
OrdPoly ord_nat_scale(const Nat& n, const OrdPoly& x);

/// Result of checking a complexity trace for strict descent above zero.
struct DescentResult {
  std::optional<std::size_t> violation;  // first index i with x_{i+1} >= x_i > 0
  bool ok() const { return !violation.has_value(); }
};

DescentResult descent_check(const std::vector<OrdPoly>& trace);

/// Parses the bracket form produced by OrdPoly::bracket().
std::optional<OrdPoly> parse_bracket(const std::string& text);

}  // namespace prr
