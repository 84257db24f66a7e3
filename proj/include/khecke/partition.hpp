#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace khecke {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts, rejects non-positive parts
  // "2,1", "21" (single digits), "" or "0" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition with_part(int p) const;
  // "21", or "(10,1)" when some part has two digits; "" for the empty partition.
  std::string label() const;
  std::string comma_label() const;

  // Graded order: size first, then lexicographic on the parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

bool dominates(const Partition& a, const Partition& b);  // a >= b, same size

// All partitions of d with parts <= max_part, in increasing lexicographic order.
std::vector<Partition> partitions_of(int d, int max_part);
// All partitions with size <= d and parts <= max_part, graded order.
std::vector<Partition> partitions_up_to(int d, int max_part);

}  // namespace khecke
