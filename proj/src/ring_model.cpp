#include "charnum/ring_model.hpp"

#include <functional>
#include <stdexcept>

#include "charnum/bernoulli.hpp"
#include "charnum/genus.hpp"

namespace charnum {

int RingModel::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

RingModel::Element RingModel::mul(const Element& a, const Element& b) const {
  Element r;
  auto accum = [&r](int k, const Rational& v) {
    auto [it, inserted] = r.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    }
  };
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      Rational c = x * y;
      if (c.is_zero()) continue;
      if (i == 0) {
        accum(j, c);
      } else if (j == 0) {
        accum(i, c);
      } else {
        if (degree_of(i) + degree_of(j) > dim) continue;
        auto key = std::make_pair(std::min(i, j), std::max(i, j));
        auto it = products.find(key);
        if (it == products.end()) continue;  // sparse zero
        for (const auto& [k, z] : it->second) accum(k, c * z);
      }
    }
  }
  return r;
}

RingModel::Element RingModel::mul_pow(const Element& a, int k) const {
  if (k < 0) throw std::invalid_argument("negative ring power");
  Element acc = unit();
  for (int i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

Rational RingModel::integrate(const Element& a) const {
  Rational s(0);
  for (const auto& [i, x] : a) {
    if (degree_of(i) != dim) continue;
    auto it = fundamental.find(i);
    if (it != fundamental.end()) s += x * it->second;
  }
  return s;
}

RingModel::Element RingModel::evaluate(const GradedPoly& poly) const {
  Element out;
  for (const auto& [mu, c] : poly.terms) {
    Element term = unit();
    bool vanished = false;
    for (int part : mu.parts) {
      if (part >= static_cast<int>(pont.size())) {
        vanished = true;
        break;
      }
      term = mul(term, pont[part]);
      if (term.empty()) {
        vanished = true;
        break;
      }
    }
    if (vanished) continue;
    out = element_add(out, element_scale(term, c));
  }
  return out;
}

PontryaginNumbers RingModel::numbers() const {
  if (dim % 4 != 0)
    throw std::invalid_argument("dimension not divisible by 4");
  int w = dim / 4;
  PontryaginNumbers out(dim);
  for (const Partition& mu : partitions_of(w)) {
    Element el = unit();
    bool vanished = false;
    for (int part : mu.parts) {
      if (part >= static_cast<int>(pont.size())) {
        vanished = true;
        break;
      }
      el = mul(el, pont[part]);
    }
    if (!vanished) out.set(mu, integrate(el));
  }
  return out;
}

Rational RingModel::signature() const {
  if (dim == 0) return integrate(unit());
  if (dim % 4 != 0) return Rational(0);
  return pair(l_class(dim / 4).K(dim / 4), numbers());
}

void RingModel::validate() const {
  if (labels.empty() || labels[0] != "1" || degrees.empty() || degrees[0] != 0)
    throw std::invalid_argument("ring model must start with the unit generator");
  if (labels.size() != degrees.size())
    throw std::invalid_argument("label/degree length mismatch");
  if (dim % 4 == 0 && static_cast<int>(pont.size()) != dim / 4 + 1)
    throw std::invalid_argument("Pontryagin class has wrong number of pieces");
  if (pont.empty() || !(pont[0] == unit()))
    throw std::invalid_argument("degree-0 Pontryagin piece must be 1");
  for (const auto& [i, v] : fundamental)
    if (degree_of(i) != dim)
      throw std::invalid_argument("fundamental supported outside top degree");
}

std::string element_str(const RingModel& m, const RingModel::Element& e) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : e) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
      first = false;
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    const std::string& var = m.labels[i];
    if (i == 0) {
      s += a.str();
    } else if (a == Rational(1)) {
      s += var;
    } else {
      s += a.str() + "*" + var;
    }
  }
  return s;
}

RingModel::Element element_add(const RingModel::Element& a,
                               const RingModel::Element& b) {
  RingModel::Element r = a;
  for (const auto& [k, v] : b) {
    auto [it, inserted] = r.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

RingModel::Element element_scale(const RingModel::Element& a, const Rational& c) {
  RingModel::Element r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a) r.emplace(k, v * c);
  return r;
}

std::vector<std::vector<long>> h_form() { return {{0, 1}, {1, 0}}; }

std::vector<std::vector<long>> e8_form() {
  return {{2, -1, 0, 0, 0, 0, 0, 0},
          {-1, 2, -1, 0, 0, 0, 0, 0},
          {0, -1, 2, -1, 0, 0, 0, 0},
          {0, 0, -1, 2, -1, 0, 0, 0},
          {0, 0, 0, -1, 2, -1, 0, 1},
          {0, 0, 0, 0, -1, 2, -1, 0},
          {0, 0, 0, 0, 0, -1, 2, 0},
          {0, 0, 0, 0, 1, 0, 0, 2}};
}

WallPair wall_pair_h_e8() {
  WallPair wp;
  auto h = h_form(), e8 = e8_form();
  int n = 10;
  wp.a.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) wp.a[i][j] = h[i][j];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) wp.a[2 + i][2 + j] = e8[i][j];
  wp.b = {2, 2, 0, 0, 0, 0, 0, 0, 0, 0};
  return wp;
}

int signature_of_symmetric(const Matrix& m_in) {
  Matrix m = m_in;
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("signature of non-square matrix");
  int sig = 0;
  std::size_t i = 0;
  while (i < n) {
    // Find a nonzero diagonal entry in the remaining block.
    std::size_t piv = n;
    for (std::size_t r = i; r < n; ++r)
      if (!m[r][r].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) {
      // Use an off-diagonal entry: row/col r += row/col c gives diagonal
      // 2*m[r][c].
      std::size_t fr = n, fc = n;
      for (std::size_t r = i; r < n && fr == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (!m[r][c].is_zero()) {
            fr = r;
            fc = c;
            break;
          }
      if (fr == n) break;  // remaining block is zero
      for (std::size_t k = 0; k < n; ++k) m[fr][k] += m[fc][k];
      for (std::size_t k = 0; k < n; ++k) m[k][fr] += m[k][fc];
      piv = fr;
    }
    if (piv != i) {
      std::swap(m[i], m[piv]);
      for (auto& row : m) std::swap(row[i], row[piv]);
    }
    Rational d = m[i][i];
    sig += d.sign();
    for (std::size_t r = i + 1; r < n; ++r) {
      if (m[r][i].is_zero()) continue;
      Rational f = m[r][i] / d;
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[i][k];
    }
    for (std::size_t c = i + 1; c < n; ++c) m[i][c] = Rational(0);
    for (std::size_t r = i + 1; r < n; ++r) m[r][i] = Rational(0);
    ++i;
  }
  return sig;
}

int signature_of_symmetric_int(const std::vector<std::vector<long>>& m) {
  Matrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long v : m[i]) q[i].push_back(Rational(v));
  return signature_of_symmetric(q);
}

RingModel point_model() {
  RingModel m;
  m.dim = 0;
  m.labels = {"1"};
  m.degrees = {0};
  m.fundamental[0] = Rational(1);
  m.pont = {RingModel::unit()};
  return m;
}

RingModel kervaire_milnor_model(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("Kervaire-Milnor generator index out of range");
  Rational b2n = bernoulli(2 * n);
  long an = (n % 2 == 1) ? 2 : 1;
  // p_n = denom(B_2n / (4n)) * a_n * (2n-1)!
  Rational ratio = b2n / Rational(4L * n);
  Int top = ratio.den() * an * factorial(2 * n - 1);
  RingModel m;
  m.dim = 4 * n;
  m.labels = {"1", "x"};
  m.degrees = {0, 4 * n};
  m.products[{1, 1}] = {};  // x^2 = 0 (above top degree anyway)
  m.fundamental[1] = Rational(1);
  m.pont.assign(n + 1, RingModel::Element{});
  m.pont[0] = RingModel::unit();
  m.pont[n] = {{1, Rational(top)}};
  return m;
}

RingModel op2_model() {
  RingModel m;
  m.dim = 16;
  m.labels = {"1", "u", "u2"};
  m.degrees = {0, 8, 16};
  m.products[{1, 1}] = {{2, Rational(1)}};
  m.products[{1, 2}] = {};
  m.products[{2, 2}] = {};
  m.fundamental[2] = Rational(1);
  m.pont.assign(5, RingModel::Element{});
  m.pont[0] = RingModel::unit();
  m.pont[2] = {{1, Rational(6)}};
  m.pont[4] = {{2, Rational(39)}};
  return m;
}

RingModel product_model(const RingModel& x, const RingModel& y) {
  RingModel m;
  m.dim = x.dim + y.dim;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      index[{i, j}] = m.size();
      std::string lab;
      if (j == 0)
        lab = x.labels[i];
      else if (i == 0)
        lab = y.labels[j];
      else
        lab = x.labels[i] + "*" + y.labels[j];
      m.labels.push_back(lab);
      m.degrees.push_back(x.degree_of(i) + y.degree_of(j));
    }
  }
  auto embed = [&](const RingModel::Element& ax, const RingModel::Element& ay) {
    RingModel::Element r;
    for (const auto& [i, cx] : ax)
      for (const auto& [j, cy] : ay) {
        Rational c = cx * cy;
        if (c.is_zero()) continue;
        int k = index.at({i, j});
        auto [it, inserted] = r.emplace(k, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) r.erase(it);
        }
      }
    return r;
  };
  // Structure constants between every pair of non-unit basis elements.  All
  // degrees are even, so the Koszul sign is always +1.
  for (const auto& [key1, b1] : index) {
    for (const auto& [key2, b2] : index) {
      if (b1 == 0 || b2 == 0 || b1 > b2) continue;
      if (m.degrees[b1] + m.degrees[b2] > m.dim) continue;
      auto ax = x.mul(x.basis_element(key1.first), x.basis_element(key2.first));
      auto ay = y.mul(y.basis_element(key1.second), y.basis_element(key2.second));
      m.products[{b1, b2}] = embed(ax, ay);
    }
  }
  for (const auto& [key, b] : index) {
    if (x.degree_of(key.first) != x.dim || y.degree_of(key.second) != y.dim)
      continue;
    auto fx = x.fundamental.find(key.first);
    auto fy = y.fundamental.find(key.second);
    if (fx == x.fundamental.end() || fy == y.fundamental.end()) continue;
    Rational f = fx->second * fy->second;
    if (!f.is_zero()) m.fundamental[b] = f;
  }
  int nx = static_cast<int>(x.pont.size()) - 1;
  int ny = static_cast<int>(y.pont.size()) - 1;
  int ntot = m.dim % 4 == 0 ? m.dim / 4 : nx + ny;
  m.pont.assign(ntot + 1, RingModel::Element{});
  for (int k = 0; k <= ntot; ++k) {
    RingModel::Element el;
    for (int a = 0; a <= k; ++a) {
      int b = k - a;
      if (a <= nx && b <= ny) el = element_add(el, embed(x.pont[a], y.pont[b]));
    }
    m.pont[k] = el;
  }
  return m;
}

RingModel scale_top_class(const RingModel& x, const Rational& c) {
  std::vector<int> nonzero;
  for (int k = 1; k < static_cast<int>(x.pont.size()); ++k)
    if (!x.pont[k].empty()) nonzero.push_back(k);
  if (nonzero.size() != 1)
    throw std::invalid_argument(
        "scale_top_class needs exactly one nonzero Pontryagin piece, found " +
        std::to_string(nonzero.size()));
  RingModel m = x;
  m.pont[nonzero[0]] = element_scale(m.pont[nonzero[0]], c);
  return m;
}

namespace {
Int quad_form(const std::vector<std::vector<long>>& a, const std::vector<long>& b) {
  Int s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      s += Int(b[i]) * Int(a[i][j]) * Int(b[j]);
  return s;
}
}  // namespace

RingModel wall_model(const WallPair& wp, const std::vector<std::string>& gen_labels) {
  std::size_t n = wp.a.size();
  if (wp.b.size() != n)
    throw std::invalid_argument("Wall pair shape mismatch");
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (wp.a[i].size() != n)
      throw std::invalid_argument("Wall matrix is not square");
    for (long v : wp.a[i]) a[i].push_back(Rational(v));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (wp.a[i][j] != wp.a[j][i])
        throw std::invalid_argument("not realizable: matrix is not symmetric");
  Rational det = matrix_det(a);
  if (det != Rational(1) && det != Rational(-1))
    throw std::invalid_argument("not realizable: matrix is not unimodular");
  for (std::size_t i = 0; i < n; ++i)
    if ((wp.a[i][i] - wp.b[i]) % 2 != 0)
      throw std::invalid_argument(
          "not realizable: diagonal/vector parity violated at index " +
          std::to_string(i + 1));
  int sig = signature_of_symmetric(a);
  Int bab = quad_form(wp.a, wp.b);
  if ((Int(sig) - bab) % 224 != 0)
    throw std::invalid_argument(
        "not realizable: signature " + std::to_string(sig) +
        " is not congruent to bAb^T = " + bab.get_str() + " mod 224");

  RingModel m;
  m.dim = 8;
  m.labels = {"1"};
  m.degrees = {0};
  for (std::size_t i = 0; i < n; ++i) {
    m.labels.push_back(i < gen_labels.size() ? gen_labels[i]
                                             : "g" + std::to_string(i + 1));
    m.degrees.push_back(4);
  }
  m.labels.push_back("w");
  m.degrees.push_back(8);
  int w_idx = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RingModel::Element e;
      if (wp.a[i][j] != 0) e[w_idx] = Rational(wp.a[i][j]);
      m.products[{static_cast<int>(i) + 1, static_cast<int>(j) + 1}] = e;
    }
  m.fundamental[w_idx] = Rational(1);

  RingModel::Element p1;
  for (std::size_t i = 0; i < n; ++i)
    if (wp.b[i] != 0) p1[static_cast<int>(i) + 1] = Rational(2 * wp.b[i]);
  m.pont = {RingModel::unit(), p1, RingModel::Element{}};
  // <(7 p2 - p1^2) / 45> = Sig(A)  =>  top p2 = (45 Sig + <p1^2>) / 7.
  Rational p1sq = m.integrate(m.mul(p1, p1));
  Rational p2top = (Rational(45L * sig) + p1sq) / Rational(7);
  if (!p2top.is_zero()) m.pont[2] = {{w_idx, p2top}};
  return m;
}

RingModel n8_model() {
  return wall_model(wall_pair_h_e8(),
                    {"a1", "a2", "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8"});
}

std::vector<PontryaginNumbers> b_basis_numbers() {
  RingModel m08 = kervaire_milnor_model(2);
  RingModel m012_half = scale_top_class(kervaire_milnor_model(3), Rational(1, 2));
  RingModel b1 = product_model(product_model(m08, m08), m08);
  RingModel b2 = product_model(m012_half, m012_half);
  RingModel b3 = product_model(m08, kervaire_milnor_model(4));
  RingModel b4 = scale_top_class(kervaire_milnor_model(6), Rational(1, 2));
  return {b1.numbers(), b2.numbers(), b3.numbers(), b4.numbers()};
}

std::pair<PontryaginNumbers, PontryaginNumbers> m1_m2_numbers() {
  std::vector<PontryaginNumbers> b = b_basis_numbers();
  PontryaginNumbers m1 = (b[0] + b[1]).scaled(Rational(1, 72));
  PontryaginNumbers m2 =
      (b[0].scaled(Rational(-41)) + b[1].scaled(Rational(31))).scaled(Rational(1, 72));
  for (const auto* nums : {&m1, &m2})
    for (const auto& [mu, v] : nums->numbers)
      if (!v.is_integer())
        throw std::runtime_error("basis combination failed integrality at p" +
                                 mu.str() + " = " + v.str());
  return {m1, m2};
}

PontryaginNumbers whitney_numbers_oracle(const RingModel& x, const RingModel& y) {
  PontryaginNumbers nx = x.numbers(), ny = y.numbers();
  int dim = x.dim + y.dim;
  PontryaginNumbers out(dim);
  // <p_lambda, [X x Y]> = sum over splits of each part lambda_i = a_i + b_i
  // of <p_{a parts}, [X]> * <p_{b parts}, [Y]> (parts equal to 0 dropped).
  for (const Partition& mu : partitions_of(dim / 4)) {
    Rational total(0);
    std::vector<int> split(mu.parts.size(), 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int wx,
                                                         int wy) {
      if (wx > x.dim / 4 || wy > y.dim / 4) return;
      if (idx == mu.parts.size()) {
        if (wx != x.dim / 4 || wy != y.dim / 4) return;
        std::vector<int> pa, pb;
        for (std::size_t i = 0; i < mu.parts.size(); ++i) {
          if (split[i] > 0) pa.push_back(split[i]);
          if (mu.parts[i] - split[i] > 0) pb.push_back(mu.parts[i] - split[i]);
        }
        total += nx.at(Partition(pa)) * ny.at(Partition(pb));
        return;
      }
      for (int a = 0; a <= mu.parts[idx]; ++a) {
        split[idx] = a;
        rec(idx + 1, wx + a, wy + mu.parts[idx] - a);
      }
    };
    rec(0, 0, 0);
    out.set(mu, total);
  }
  return out;
}

}  // namespace charnum
