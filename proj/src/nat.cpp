#include "prr/nat.hpp"

#include <stdexcept>

namespace prr {

Nat cantor_pair(const Nat& x, const Nat& y) {
  Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& n) {
  // w = floor((sqrt(8n+1) - 1) / 2) is the diagonal index.
  Nat w = (boost::multiprecision::sqrt(Nat(8 * n + 1)) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat y = n - t;
  return {w - y, y};
}

Nat cantor_tuple(const std::vector<Nat>& xs) {
  if (xs.empty()) throw std::invalid_argument("cantor_tuple: empty tuple");
  Nat acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = cantor_pair(xs[i], acc);
  return acc;
}

std::vector<Nat> cantor_untuple(Nat n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("cantor_untuple: k = 0");
  std::vector<Nat> out;
  out.reserve(k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    auto [x, rest] = cantor_unpair(n);
    out.push_back(std::move(x));
    n = std::move(rest);
  }
  out.push_back(std::move(n));
  return out;
}

}  // namespace prr

namespace prr {
namespace {

// x <-> (len, digits): x + 1 has bit length len + 1; digits are the low len bits.
std::size_t bij_len(const Nat& x) { return boost::multiprecision::msb(Nat(x + 1)); }

Nat pow2(std::size_t k) { return Nat(1) << k; }

// Number of pairs whose total digit length is below L: (L-1) 2^L + 1.
Nat below(std::size_t L) {
  if (L == 0) return 0;
  return Nat(L - 1) * pow2(L) + 1;
}

}  // namespace

Nat graded_pair(const Nat& x, const Nat& y) {
  std::size_t bx = bij_len(x);
  std::size_t by = bij_len(y);
  std::size_t L = bx + by;
  Nat sx = x + 1 - pow2(bx);
  Nat sy = y + 1 - pow2(by);
  return below(L) + Nat(bx) * pow2(L) + ((sx << by) | sy);
}

std::pair<Nat, Nat> graded_unpair(const Nat& n) {
  // Find L with below(L) <= n < below(L+1); below grows like L 2^L.
  std::size_t L = 0;
  if (n > 0) {
    std::size_t hi = boost::multiprecision::msb(n) + 1;
    std::size_t lo = 0;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (below(mid) <= n) lo = mid;
      else hi = mid - 1;
    }
    L = lo;
  }
  Nat off = n - below(L);
  Nat block = pow2(L);
  std::size_t bx = static_cast<std::size_t>(off / block);
  Nat bits = off % block;
  std::size_t by = L - bx;
  Nat sy = bits & (pow2(by) - 1);
  Nat sx = bits >> by;
  return {sx + pow2(bx) - 1, sy + pow2(by) - 1};
}

}  // namespace prr
