#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace charnum {

// Integer partition with parts stored in descending order.  The empty
// partition (weight 0) indexes the constant term of a graded polynomial.
// Serialized as comma-joined parts: "4,2"; the empty partition is "".
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);

  int weight() const;
  bool empty() const { return parts.empty(); }
  // Multiplicity of the part v.
  int count(int v) const;

  // Multiset union with another partition (used by monomial products).
  Partition merged(const Partition& o) const;

  std::string str() const;
  static Partition parse(const std::string& s);

  // Total order: by weight, then lexicographically on the part vectors.
  // Any strict order works for map keys; this one makes serialization and
  // printing deterministic and weight-sorted.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) = default;
};

// All partitions of w with parts bounded by max_part (no bound if
// max_part < 0), sorted in the Partition order.  partitions_of(0) == {{}}.
std::vector<Partition> partitions_of(int w, int max_part = -1);

}  // namespace charnum
