#ifndef PERVHILB_BETTI_TABLE_HPP
#define PERVHILB_BETTI_TABLE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pervhilb/bigint.hpp"
#include "pervhilb/series.hpp"

#include <json.hpp>

namespace pervhilb {

// Bigraded Betti data of a space with a chosen perverse decomposition:
// (perversity p, cohomological degree d) -> dimension. Absent keys mean
// zero; stored dimensions are always positive.
class PervBettiTable {
 public:
  struct Key {
    int p = 0;  // perversity
    int d = 0;  // cohomological degree
    // (d, p): the emission order of every interface
    friend bool operator<(const Key& a, const Key& b) {
      return a.d != b.d ? a.d < b.d : a.p < b.p;
    }
    friend bool operator==(const Key& a, const Key& b) = default;
  };
  using Map = std::map<Key, Int>;

  PervBettiTable() = default;
  PervBettiTable(std::initializer_list<std::pair<Key, Int>> entries);

  static PervBettiTable point();  // {(0,0): 1}

  // Accumulates; prunes zero. Negative keys or dimensions are rejected.
  void add(int p, int d, const Int& dim);
  Int at(int p, int d) const;  // 0 when absent

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  Int total_dim() const;
  // Sums over p per degree; index d, up to the maximal stored degree.
  std::vector<Int> degree_marginals() const;
  int max_degree() const;  // -1 when empty
  int max_perversity() const;

  // Perverse filtration of length 2: every perversity lies in {0, 1, 2}.
  bool is_surface_table() const;

  // Sum of dim * q^p * t^d.
  Poly to_poly() const;

  // JSON document: array of {"p": int, "d": int, "dim": int}.
  // Duplicate (p, d) keys are rejected.
  static PervBettiTable from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const PervBettiTable& a, const PervBettiTable& b) = default;

 private:
  Map entries_;
};

// Entries (p, d) -> sum over p1+p2 = p, d1+d2 = d of A(p1,d1)*B(p2,d2).
PervBettiTable kunneth(const PervBettiTable& a, const PervBettiTable& b);

// Uniform translation of all keys; a negative resulting index signals a
// misuse of the decomposition shifts and is rejected.
PervBettiTable shift(const PervBettiTable& a, int dp, int dd);

// Degree-m part of the free super-commutative algebra on a bigraded basis:
// even-degree classes contribute multisets, odd-degree classes exterior
// subsets; both gradings add. Computed by generating functions.
PervBettiTable sym_power(const PervBettiTable& a, int m);

// Keywise sum of dimensions.
PervBettiTable direct_sum(const PervBettiTable& a, const PervBettiTable& b);

}  // namespace pervhilb

#endif
