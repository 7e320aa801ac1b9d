#include "prr/ordinal.hpp"

#include <algorithm>
#include <sstream>

namespace prr {
namespace {

void strip(std::vector<Nat>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

OrdPoly::OrdPoly(std::vector<Nat> coeffs) : coeffs_(std::move(coeffs)) { strip(coeffs_); }

std::strong_ordering OrdPoly::operator<=>(const OrdPoly& other) const {
  if (coeffs_.size() != other.coeffs_.size())
    return coeffs_.size() <=> other.coeffs_.size();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] < other.coeffs_[i]) return std::strong_ordering::less;
    if (coeffs_[i] > other.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string OrdPoly::bracket() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].str();
  }
  return s + "]";
}

std::string OrdPoly::render() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[i].str();
    if (i == 1) s += "*w";
    else if (i > 1) s += "*w^" + std::to_string(i);
  }
  return s;
}

OrdPoly ord_zero() { return OrdPoly{}; }

OrdPoly ord_from_nat(const Nat& n) { return OrdPoly{std::vector<Nat>{n}}; }

Cmp ord_cmp(const OrdPoly& x, const OrdPoly& y) {
  auto c = x <=> y;
  if (c < 0) return Cmp::Less;
  if (c > 0) return Cmp::Greater;
  return Cmp::Equal;
}

OrdPoly ord_nat_sum(const OrdPoly& x, const OrdPoly& y) {
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  std::vector<Nat> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return OrdPoly{std::move(out)};
}

OrdPoly ord_omega_shift(const OrdPoly& x) {
  if (x.is_zero()) return x;
  std::vector<Nat> out;
  out.reserve(x.coeffs().size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
  return OrdPoly{std::move(out)};
}

OrdPoly ord_nat_scale(const Nat& n, const OrdPoly& x) {
  if (n == 0) return ord_zero();
  std::vector<Nat> out = x.coeffs();
  for (auto& c : out) c *= n;
  return OrdPoly{std::move(out)};
}

DescentResult descent_check(const std::vector<OrdPoly>& trace) {
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    if (trace[i].is_zero()) continue;
    if (!(trace[i + 1] < trace[i])) return {i};
  }
  return {};
}

std::optional<OrdPoly> parse_bracket(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  std::vector<Nat> coeffs;
  if (s.empty()) return OrdPoly{};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) return std::nullopt;
    coeffs.emplace_back(item);
  }
  OrdPoly p{coeffs};
  // Reject non-canonical input such as "[1,0]".
  if (p.coeffs().size() != coeffs.size()) return std::nullopt;
  return p;
}

}  // namespace prr
