#ifndef PERVHILB_PARTITION_HPP
#define PERVHILB_PARTITION_HPP

#include <string>
#include <vector>

namespace pervhilb {

// A partition nu = 1^{a_1} 2^{a_2} ... n^{a_n} stored as its multiplicity
// vector (a_1, ..., a_n). Trailing zeros are trimmed, so the empty partition
// is the empty vector.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> multiplicities);

  static Partition empty() { return Partition(); }
  // Single part of size j.
  static Partition single(int j);

  int weight() const;  // sum of i * a_i
  int length() const;  // sum of a_i

  // Multiplicity a_j of the part j (1-based); 0 beyond the stored range.
  int multiplicity(int j) const;
  int max_part() const { return static_cast<int>(mult_.size()); }

  // nu with a_j reduced by one: a partition of weight() - j.
  // Requires multiplicity(j) >= 1.
  Partition remove_one_part(int j) const;

  const std::vector<int>& multiplicities() const { return mult_; }

  std::string str() const;  // e.g. "1^2 3^1"; "()" for the empty partition

  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> mult_;
};

// All partitions of n, each exactly once, in lexicographically decreasing
// order of multiplicity vectors: partitions(2) = [1^2, 2^1]. Deterministic,
// so table assembly and derivation traces replay bit-for-bit.
std::vector<Partition> partitions(int n);

}  // namespace pervhilb

#endif
