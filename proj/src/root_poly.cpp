#include "charnum/root_poly.hpp"

#include <numeric>
#include <stdexcept>

#include "charnum/linalg.hpp"

namespace charnum {

namespace {
int total_degree(const std::vector<int>& expo) {
  return std::accumulate(expo.begin(), expo.end(), 0);
}
}  // namespace

RootPoly RootPoly::one(int nvars, int cap) {
  RootPoly r(nvars, cap);
  r.terms[std::vector<int>(nvars, 0)] = Rational(1);
  return r;
}

RootPoly RootPoly::linear(const std::vector<Rational>& coeffs, int cap) {
  RootPoly r(static_cast<int>(coeffs.size()), cap);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::vector<int> expo(coeffs.size(), 0);
    expo[i] = 1;
    r.terms.emplace(std::move(expo), coeffs[i]);
  }
  return r;
}

RootPoly RootPoly::e_of_squares(int j, int nvars, int cap) {
  if (j < 0) throw std::invalid_argument("negative symmetric function index");
  RootPoly r(nvars, cap);
  if (j > nvars || 2 * j > cap) return r;  // e_j vanishes / truncates away
  // Enumerate j-subsets of {0..nvars-1}.
  std::vector<int> idx(j);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> expo(nvars, 0);
    for (int i : idx) expo[i] = 2;
    r.terms.emplace(std::move(expo), Rational(1));
    int i = j - 1;
    while (i >= 0 && idx[i] == nvars - j + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < j; ++k) idx[k] = idx[k - 1] + 1;
  }
  if (j == 0) r.terms[std::vector<int>(nvars, 0)] = Rational(1);
  return r;
}

RootPoly& RootPoly::add_term(const std::vector<int>& expo, const Rational& c) {
  if (static_cast<int>(expo.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero() || total_degree(expo) > cap) return *this;
  auto [it, inserted] = terms.emplace(expo, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

RootPoly RootPoly::weight_part(int d) const {
  RootPoly r(nvars, cap);
  for (const auto& [expo, c] : terms)
    if (total_degree(expo) == d) r.terms.emplace(expo, c);
  return r;
}

RootPoly RootPoly::operator-() const {
  RootPoly r(nvars, cap);
  for (const auto& [expo, c] : terms) r.terms.emplace(expo, -c);
  return r;
}

RootPoly& RootPoly::operator+=(const RootPoly& o) {
  if (nvars != o.nvars || cap != o.cap)
    throw std::invalid_argument("root polynomial shape mismatch");
  for (const auto& [expo, c] : o.terms) add_term(expo, c);
  return *this;
}

RootPoly& RootPoly::operator-=(const RootPoly& o) {
  if (nvars != o.nvars || cap != o.cap)
    throw std::invalid_argument("root polynomial shape mismatch");
  for (const auto& [expo, c] : o.terms) add_term(expo, -c);
  return *this;
}

RootPoly RootPoly::scaled(const Rational& c) const {
  RootPoly r(nvars, cap);
  if (c.is_zero()) return r;
  for (const auto& [expo, v] : terms) r.terms.emplace(expo, v * c);
  return r;
}

bool RootPoly::is_hyperoctahedral_symmetric() const {
  // Adjacent transpositions.
  for (int i = 0; i + 1 < nvars; ++i) {
    RootPoly swapped(nvars, cap);
    for (const auto& [expo, c] : terms) {
      std::vector<int> e = expo;
      std::swap(e[i], e[i + 1]);
      swapped.add_term(e, c);
    }
    if (!(swapped == *this)) return false;
  }
  // Sign flip of the first variable.
  if (nvars > 0) {
    RootPoly flipped(nvars, cap);
    for (const auto& [expo, c] : terms)
      flipped.add_term(expo, expo[0] % 2 == 0 ? c : -c);
    if (!(flipped == *this)) return false;
  }
  return true;
}

RootPoly root_mul(const RootPoly& a, const RootPoly& b) {
  if (a.nvars != b.nvars || a.cap != b.cap)
    throw std::invalid_argument("root polynomial shape mismatch");
  RootPoly out(a.nvars, a.cap);
  for (const auto& [ea, ca] : a.terms) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms) {
      if (da + total_degree(eb) > a.cap) continue;
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

RootPoly root_pow(const RootPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power of root polynomial");
  RootPoly acc = RootPoly::one(a.nvars, a.cap);
  RootPoly base = a;
  while (k > 0) {
    if (k & 1) acc = root_mul(acc, base);
    if (k >>= 1) base = root_mul(base, base);
  }
  return acc;
}

RootPoly to_roots(const GradedPoly& poly, int nvars) {
  int cap = 2 * poly.cap;
  RootPoly out(nvars, cap);
  for (const auto& [mu, c] : poly.terms) {
    RootPoly m = RootPoly::one(nvars, cap).scaled(c);
    for (int part : mu.parts)
      m = root_mul(m, RootPoly::e_of_squares(part, nvars, cap));
    out += m;
  }
  return out;
}

GradedPoly symmetric_reduce(const RootPoly& rp) {
  if (!rp.is_hyperoctahedral_symmetric())
    throw std::invalid_argument("not symmetric");
  int pcap = rp.cap / 2;
  GradedPoly out(pcap);
  for (int w = 0; w <= pcap; ++w) {
    RootPoly target = rp.weight_part(2 * w);
    if (w == 0) {
      auto it = rp.terms.find(std::vector<int>(rp.nvars, 0));
      if (it != rp.terms.end()) out.add_term(Partition(), it->second);
      continue;
    }
    std::vector<Partition> basis = partitions_of(w, rp.nvars);
    if (basis.empty()) {
      if (!target.is_zero())
        throw std::invalid_argument("not symmetric");
      continue;
    }
    // Expand each candidate monomial p_lambda into root variables.
    std::vector<RootPoly> expanded;
    expanded.reserve(basis.size());
    std::map<std::vector<int>, std::size_t> rows;
    for (const Partition& mu : basis) {
      RootPoly m = RootPoly::one(rp.nvars, rp.cap);
      for (int part : mu.parts)
        m = root_mul(m, RootPoly::e_of_squares(part, rp.nvars, rp.cap));
      for (const auto& [expo, c] : m.terms) rows.emplace(expo, 0);
      expanded.push_back(std::move(m));
    }
    for (const auto& [expo, c] : target.terms) rows.emplace(expo, 0);
    std::size_t r = 0;
    for (auto& [expo, idx] : rows) idx = r++;
    Matrix a(rows.size(), Vector(basis.size(), Rational(0)));
    Vector b(rows.size(), Rational(0));
    for (std::size_t j = 0; j < expanded.size(); ++j)
      for (const auto& [expo, c] : expanded[j].terms) a[rows.at(expo)][j] = c;
    for (const auto& [expo, c] : target.terms) b[rows.at(expo)] = c;
    auto x = solve_linear(std::move(a), std::move(b));
    if (!x)
      throw std::invalid_argument("not symmetric");
    for (std::size_t j = 0; j < basis.size(); ++j)
      out.add_term(basis[j], (*x)[j]);
  }
  return out;
}

}  // namespace charnum
