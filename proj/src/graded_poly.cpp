#include "charnum/graded_poly.hpp"

#include <stdexcept>

namespace charnum {

GradedPoly GradedPoly::monomial(const Partition& mu, const Rational& c, int cap) {
  GradedPoly g(cap);
  g.add_term(mu, c);
  return g;
}

Rational GradedPoly::coeff(const Partition& mu) const {
  auto it = terms.find(mu);
  return it == terms.end() ? Rational(0) : it->second;
}

GradedPoly& GradedPoly::add_term(const Partition& mu, const Rational& c) {
  if (c.is_zero() || mu.weight() > cap) return *this;
  auto [it, inserted] = terms.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

GradedPoly GradedPoly::weight_part(int w) const {
  GradedPoly g(cap);
  for (const auto& [mu, c] : terms)
    if (mu.weight() == w) g.terms.emplace(mu, c);
  return g;
}

int GradedPoly::top_weight() const {
  int top = -1;
  for (const auto& [mu, c] : terms) top = std::max(top, mu.weight());
  return top;
}

GradedPoly GradedPoly::truncated(int new_cap) const {
  GradedPoly g(new_cap);
  for (const auto& [mu, c] : terms)
    if (mu.weight() <= new_cap) g.terms.emplace(mu, c);
  return g;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly g(cap);
  for (const auto& [mu, c] : terms) g.terms.emplace(mu, -c);
  return g;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (cap != o.cap)
    throw std::invalid_argument("graded polynomial cap mismatch: " +
                                std::to_string(cap) + " vs " + std::to_string(o.cap));
  for (const auto& [mu, c] : o.terms) add_term(mu, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  if (cap != o.cap)
    throw std::invalid_argument("graded polynomial cap mismatch: " +
                                std::to_string(cap) + " vs " + std::to_string(o.cap));
  for (const auto& [mu, c] : o.terms) add_term(mu, -c);
  return *this;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
  GradedPoly g(cap);
  if (c.is_zero()) return g;
  for (const auto& [mu, v] : terms) g.terms.emplace(mu, v * c);
  return g;
}

std::string GradedPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mu, c] : terms) {  // map order == weight then partition
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
      first = false;
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (mu.empty()) {
      s += a.str();
    } else {
      std::string var = "p" + mu.str();
      if (a == Rational(1)) {
        s += var;
      } else {
        s += a.str() + "*" + var;
      }
    }
  }
  return s;
}

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) {
  if (a.cap != b.cap)
    throw std::invalid_argument("graded polynomial cap mismatch: " +
                                std::to_string(a.cap) + " vs " +
                                std::to_string(b.cap));
  GradedPoly out(a.cap);
  for (const auto& [mu, cu] : a.terms) {
    int wu = mu.weight();
    for (const auto& [nu, cv] : b.terms) {
      if (wu + nu.weight() > a.cap) continue;
      out.add_term(mu.merged(nu), cu * cv);
    }
  }
  return out;
}

GradedPoly poly_pow(const GradedPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power of graded polynomial");
  GradedPoly acc = GradedPoly::one(a.cap);
  GradedPoly base = a;
  while (k > 0) {
    if (k & 1) acc = poly_mul(acc, base);
    if (k >>= 1) base = poly_mul(base, base);
  }
  return acc;
}

Rational PontryaginNumbers::at(const Partition& mu) const {
  auto it = numbers.find(mu);
  return it == numbers.end() ? Rational(0) : it->second;
}

PontryaginNumbers& PontryaginNumbers::set(const Partition& mu, const Rational& v) {
  if (mu.weight() * 4 != dim)
    throw std::invalid_argument("partition weight " + std::to_string(mu.weight()) +
                                " does not match dimension " + std::to_string(dim));
  if (v.is_zero())
    numbers.erase(mu);
  else
    numbers[mu] = v;
  return *this;
}

bool PontryaginNumbers::string_flavored() const {
  for (const auto& [mu, v] : numbers)
    if (mu.count(1) > 0 && !v.is_zero()) return false;
  return true;
}

PontryaginNumbers PontryaginNumbers::scaled(const Rational& c) const {
  PontryaginNumbers out(dim);
  if (c.is_zero()) return out;
  for (const auto& [mu, v] : numbers) out.numbers.emplace(mu, v * c);
  return out;
}

PontryaginNumbers operator+(const PontryaginNumbers& a, const PontryaginNumbers& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("dimension mismatch in Pontryagin number sum");
  PontryaginNumbers out = a;
  for (const auto& [mu, v] : b.numbers) {
    auto [it, inserted] = out.numbers.emplace(mu, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) out.numbers.erase(it);
    }
  }
  return out;
}

PontryaginNumbers operator-(const PontryaginNumbers& a, const PontryaginNumbers& b) {
  return a + b.scaled(Rational(-1));
}

bool operator==(const PontryaginNumbers& a, const PontryaginNumbers& b) {
  return a.dim == b.dim && a.numbers == b.numbers;
}

Rational pair(const GradedPoly& poly, const PontryaginNumbers& nums) {
  if (nums.dim % 4 != 0)
    throw std::invalid_argument("dimension not divisible by 4");
  int top = nums.dim / 4;
  if (poly.cap != top)
    throw std::invalid_argument("polynomial cap " + std::to_string(poly.cap) +
                                " does not match dimension " +
                                std::to_string(nums.dim));
  Rational acc(0);
  for (const auto& [mu, c] : poly.terms)
    if (mu.weight() == top) acc += c * nums.at(mu);
  return acc;
}

}  // namespace charnum
