#include "pervhilb/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pervhilb {

Partition::Partition(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  for (int a : mult_)
    if (a < 0) throw std::invalid_argument("Partition: negative multiplicity");
  while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
}

Partition Partition::single(int j) {
  if (j < 1) throw std::invalid_argument("Partition::single: part must be positive");
  std::vector<int> m(static_cast<std::size_t>(j), 0);
  m.back() = 1;
  return Partition(std::move(m));
}

int Partition::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) w += static_cast<int>(i + 1) * mult_[i];
  return w;
}

int Partition::length() const {
  int l = 0;
  for (int a : mult_) l += a;
  return l;
}

int Partition::multiplicity(int j) const {
  if (j < 1 || j > max_part()) return 0;
  return mult_[static_cast<std::size_t>(j - 1)];
}

Partition Partition::remove_one_part(int j) const {
  if (multiplicity(j) < 1)
    throw std::invalid_argument("Partition::remove_one_part: part not present");
  std::vector<int> m = mult_;
  --m[static_cast<std::size_t>(j - 1)];
  return Partition(std::move(m));
}

std::string Partition::str() const {
  if (mult_.empty()) return "()";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] == 0) continue;
    if (!first) out << ' ';
    out << (i + 1) << '^' << mult_[i];
    first = false;
  }
  return out.str();
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  // Parts chosen in nonincreasing order; emit when the weight is exhausted.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(mult);
      return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
      ++mult[static_cast<std::size_t>(part - 1)];
      self(self, remaining - part, part);
      --mult[static_cast<std::size_t>(part - 1)];
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end(), [n](const Partition& a, const Partition& b) {
    for (int j = 1; j <= n; ++j) {
      if (a.multiplicity(j) != b.multiplicity(j))
        return a.multiplicity(j) > b.multiplicity(j);
    }
    return false;
  });
  return out;
}

}  // namespace pervhilb
