#include "charnum/chern.hpp"

#include <cctype>
#include <stdexcept>

namespace charnum {

const GradedPoly& ChernCharacter::comp(int j) const {
  if (j < 1 || j > cap)
    throw std::invalid_argument("character component out of range");
  return comps[j];
}

GradedPoly ChernCharacter::total() const {
  GradedPoly t(cap);
  t.add_term(Partition(), rank);
  for (int j = 1; j <= cap; ++j) t += comps[j];
  return t;
}

ChernCharacter trivial_character(const Rational& rank, int cap) {
  ChernCharacter c(cap);
  c.rank = rank;
  return c;
}

ChernCharacter ch_tangent(int dim, int cap) {
  ChernCharacter c(cap);
  c.rank = Rational(dim);
  for (int j = 1; j <= cap; ++j)
    c.comps[j] =
        newton_power_sum(j, cap).scaled(Rational(Int(2), factorial(2 * j)));
  return c;
}

namespace {
void check_shape(const ChernCharacter& a, const ChernCharacter& b) {
  if (a.cap != b.cap)
    throw std::invalid_argument("character cap mismatch");
}
}  // namespace

ChernCharacter ch_sum(const ChernCharacter& a, const ChernCharacter& b) {
  check_shape(a, b);
  ChernCharacter c(a.cap);
  c.rank = a.rank + b.rank;
  for (int j = 1; j <= a.cap; ++j) c.comps[j] = a.comps[j] + b.comps[j];
  return c;
}

ChernCharacter ch_diff(const ChernCharacter& a, const ChernCharacter& b) {
  return ch_sum(a, ch_scale(Rational(-1), b));
}

ChernCharacter ch_scale(const Rational& c, const ChernCharacter& a) {
  ChernCharacter out(a.cap);
  out.rank = c * a.rank;
  for (int j = 1; j <= a.cap; ++j) out.comps[j] = a.comps[j].scaled(c);
  return out;
}

ChernCharacter tensor(const ChernCharacter& a, const ChernCharacter& b) {
  check_shape(a, b);
  ChernCharacter c(a.cap);
  c.rank = a.rank * b.rank;
  for (int j = 1; j <= a.cap; ++j) {
    GradedPoly acc = a.comps[j].scaled(b.rank) + b.comps[j].scaled(a.rank);
    for (int m = 1; m < j; ++m) acc += poly_mul(a.comps[m], b.comps[j - m]);
    c.comps[j] = acc;
  }
  return c;
}

ChernCharacter adams(int k, const ChernCharacter& a) {
  ChernCharacter c(a.cap);
  c.rank = a.rank;
  Rational k2(static_cast<long>(k) * k);
  Rational f(1);
  for (int j = 1; j <= a.cap; ++j) {
    f *= k2;  // k^(2j)
    c.comps[j] = a.comps[j].scaled(f);
  }
  return c;
}

ChernCharacter exterior_power(int j, const ChernCharacter& a) {
  if (j < 0) throw std::invalid_argument("negative exterior power");
  if (j >= 2 && a.rank < Rational(0))
    throw std::invalid_argument(
        "exterior power of a virtual bundle of negative rank");
  std::vector<ChernCharacter> lam;
  lam.push_back(trivial_character(Rational(1), a.cap));
  for (int n = 1; n <= j; ++n) {
    ChernCharacter acc(a.cap);
    for (int m = 1; m <= n; ++m) {
      ChernCharacter term = tensor(adams(m, a), lam[n - m]);
      if (m % 2 == 0) term = ch_scale(Rational(-1), term);
      acc = ch_sum(acc, term);
    }
    lam.push_back(ch_scale(Rational(1, n), acc));
  }
  return lam[j];
}

ChernCharacter symmetric_power(int k, const ChernCharacter& a) {
  if (k < 0) throw std::invalid_argument("negative symmetric power");
  std::vector<ChernCharacter> sym;
  sym.push_back(trivial_character(Rational(1), a.cap));
  for (int n = 1; n <= k; ++n) {
    ChernCharacter acc(a.cap);
    for (int m = 1; m <= n; ++m) acc = ch_sum(acc, tensor(adams(m, a), sym[n - m]));
    sym.push_back(ch_scale(Rational(1, n), acc));
  }
  return sym[k];
}

ChernCharacter ch2_scale(const ChernCharacter& a) {
  ChernCharacter c(a.cap);
  c.rank = a.rank;
  Rational f(1);
  for (int j = 1; j <= a.cap; ++j) {
    f *= Rational(4);  // 4^j
    c.comps[j] = a.comps[j].scaled(f);
  }
  return c;
}

Rational twisted_ahat(const PontryaginNumbers& nums, const ChernCharacter& e) {
  int cap = nums.dim / 4;
  if (e.cap != cap)
    throw std::invalid_argument("character cap does not match manifold dimension");
  GradedPoly cls = poly_mul(ahat_class(cap).total(), e.total());
  return pair(cls, nums);
}

Rational twisted_sig(const PontryaginNumbers& nums, const ChernCharacter& e) {
  int cap = nums.dim / 4;
  if (e.cap != cap)
    throw std::invalid_argument("character cap does not match manifold dimension");
  GradedPoly cls = poly_mul(l_class(cap).total(), ch2_scale(e).total());
  return pair(cls, nums);
}

std::string Twist::str() const {
  std::string out;
  auto app = [&](char c, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += c;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  };
  app('T', t);
  app('L', l);
  app('S', s);
  return out.empty() ? "1" : out;
}

Twist parse_twist(const std::string& expr) {
  Twist tw;
  if (expr.empty() || expr == "1") return tw;
  bool seen_t = false, seen_l = false, seen_s = false;
  std::size_t pos = 0;
  while (pos <= expr.size()) {
    auto star = expr.find('*', pos);
    std::string tok = expr.substr(
        pos, star == std::string::npos ? std::string::npos : star - pos);
    if (tok.empty()) throw std::invalid_argument("malformed twist: " + expr);
    char letter = tok[0];
    int e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() < 3)
        throw std::invalid_argument("malformed twist: " + expr);
      std::string digits = tok.substr(2);
      for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("malformed twist: " + expr);
      e = std::stoi(digits);
    }
    switch (letter) {
      case 'T':
        if (seen_t) throw std::invalid_argument("repeated twist factor T");
        seen_t = true;
        tw.t = e;
        break;
      case 'L':
        if (seen_l) throw std::invalid_argument("repeated twist factor L");
        seen_l = true;
        tw.l = e;
        break;
      case 'S':
        if (seen_s) throw std::invalid_argument("repeated twist factor S");
        seen_s = true;
        tw.s = e;
        break;
      default:
        throw std::invalid_argument("malformed twist: " + expr);
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return tw;
}

ChernCharacter twist_character(const Twist& tw, int dim, int cap) {
  if (tw.t < 0 || tw.l < 0 || tw.s < 0)
    throw std::invalid_argument("twist exponents must be non-negative");
  ChernCharacter t = ch_tangent(dim, cap);
  ChernCharacter e = trivial_character(Rational(1), cap);
  for (int i = 0; i < tw.t; ++i) e = tensor(e, t);
  if (tw.l > 0) e = tensor(e, exterior_power(tw.l, t));
  if (tw.s > 0) e = tensor(e, symmetric_power(tw.s, t));
  return e;
}

}  // namespace charnum
