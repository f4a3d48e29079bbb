#include "charnum/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace charnum {

namespace {
void validate_and_sort(std::vector<int>& parts) {
  for (int p : parts)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}
}  // namespace

Partition::Partition(std::initializer_list<int> p) : parts(p) {
  validate_and_sort(parts);
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  validate_and_sort(parts);
}

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::count(int v) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), v));
}

Partition Partition::merged(const Partition& o) const {
  std::vector<int> all = parts;
  all.insert(all.end(), o.parts.begin(), o.parts.end());
  return Partition(std::move(all));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

Partition Partition::parse(const std::string& s) {
  if (s.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed partition: " + s);
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: " + s);
    }
    if (used != tok.size() || v <= 0)
      throw std::invalid_argument("malformed partition: " + s);
    parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  return a.parts <=> b.parts;
}

std::vector<Partition> partitions_of(int w, int max_part) {
  if (w < 0) return {};
  if (max_part < 0 || max_part > w) max_part = w;
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int hi) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, hi); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  if (w == 0) {
    out.emplace_back();
  } else if (max_part >= 1) {
    rec(w, max_part);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace charnum
