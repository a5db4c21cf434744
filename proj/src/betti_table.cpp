#include "pervhilb/betti_table.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace pervhilb {

namespace {
std::uint64_t to_u64(const Int& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw std::invalid_argument("PervBettiTable: dimension out of JSON integer range");
  return v.convert_to<std::uint64_t>();
}
}  // namespace

PervBettiTable::PervBettiTable(std::initializer_list<std::pair<Key, Int>> entries) {
  for (const auto& [k, v] : entries) add(k.p, k.d, v);
}

PervBettiTable PervBettiTable::point() { return PervBettiTable{{{0, 0}, Int(1)}}; }

void PervBettiTable::add(int p, int d, const Int& dim) {
  if (p < 0 || d < 0)
    throw std::invalid_argument("PervBettiTable: negative bidegree");
  if (dim == 0) return;
  Key key{p, d};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (dim < 0) throw std::invalid_argument("PervBettiTable: negative dimension");
    entries_.emplace(key, dim);
    return;
  }
  it->second += dim;
  if (it->second == 0) {
    entries_.erase(it);
  } else if (it->second < 0) {
    throw std::invalid_argument("PervBettiTable: negative dimension");
  }
}

Int PervBettiTable::at(int p, int d) const {
  auto it = entries_.find(Key{p, d});
  return it == entries_.end() ? Int(0) : it->second;
}

Int PervBettiTable::total_dim() const {
  Int t(0);
  for (const auto& [k, v] : entries_) t += v;
  return t;
}

std::vector<Int> PervBettiTable::degree_marginals() const {
  std::vector<Int> out(static_cast<std::size_t>(max_degree() + 1), Int(0));
  for (const auto& [k, v] : entries_) out[static_cast<std::size_t>(k.d)] += v;
  return out;
}

int PervBettiTable::max_degree() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first.d;
}

int PervBettiTable::max_perversity() const {
  int p = -1;
  for (const auto& [k, v] : entries_) p = std::max(p, k.p);
  return p;
}

bool PervBettiTable::is_surface_table() const {
  for (const auto& [k, v] : entries_)
    if (k.p > 2) return false;
  return true;
}

Poly PervBettiTable::to_poly() const {
  Poly f;
  for (const auto& [k, v] : entries_) f.add_term(Monomial::sqt(0, k.p, k.d), v);
  return f;
}

PervBettiTable PervBettiTable::from_json(const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("PervBettiTable: expected a JSON array of {p,d,dim}");
  PervBettiTable t;
  for (const auto& row : j) {
    if (!row.is_object() || !row.contains("p") || !row.contains("d") || !row.contains("dim"))
      throw std::invalid_argument("PervBettiTable: each entry needs fields p, d, dim");
    const int p = row.at("p").get<int>();
    const int d = row.at("d").get<int>();
    const long long dim = row.at("dim").get<long long>();
    if (dim <= 0) throw std::invalid_argument("PervBettiTable: dimensions must be positive");
    if (t.at(p, d) != 0)
      throw std::invalid_argument("PervBettiTable: duplicate (p,d) key in JSON input");
    t.add(p, d, Int(dim));
  }
  return t;
}

nlohmann::json PervBettiTable::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, v] : entries_) {
    arr.push_back({{"p", k.p}, {"d", k.d}, {"dim", to_u64(v)}});
  }
  return arr;
}

PervBettiTable kunneth(const PervBettiTable& a, const PervBettiTable& b) {
  PervBettiTable out;
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries())
      out.add(ka.p + kb.p, ka.d + kb.d, va * vb);
  return out;
}

PervBettiTable shift(const PervBettiTable& a, int dp, int dd) {
  PervBettiTable out;
  for (const auto& [k, v] : a.entries()) {
    if (k.p + dp < 0 || k.d + dd < 0)
      throw std::invalid_argument("shift: negative resulting bidegree");
    out.add(k.p + dp, k.d + dd, v);
  }
  return out;
}

PervBettiTable sym_power(const PervBettiTable& a, int m) {
  if (m < 0) throw std::invalid_argument("sym_power: negative power");
  // Degree-m coefficient of prod over classes of (1 - u z)^(-dim) for even
  // cohomological degree and (1 + u z)^dim for odd, with z carrying the
  // bigrading. The auxiliary variable u is the vector index.
  std::vector<PervBettiTable> coeffs(static_cast<std::size_t>(m) + 1);
  coeffs[0] = PervBettiTable::point();
  for (const auto& [key, dim] : a.entries()) {
    std::vector<PervBettiTable> next(coeffs.size());
    for (int j = 0; j <= m; ++j) {
      Int factor_dim;  // coefficient of u^j in this class's factor
      if (key.d % 2 == 0) {
        factor_dim = multiset_coefficient(static_cast<long long>(dim), j);
      } else {
        if (Int(j) > dim) break;
        // dim is a table dimension; it fits in long long in every use here,
        // but go through Int-aware binomial to stay exact regardless.
        Int num(1), den(1);
        for (int i = 0; i < j; ++i) {
          num *= dim - i;
          den *= i + 1;
        }
        factor_dim = num / den;
      }
      if (factor_dim == 0) continue;
      for (int rest = 0; rest + j <= m; ++rest) {
        for (const auto& [kr, vr] : coeffs[static_cast<std::size_t>(rest)].entries()) {
          next[static_cast<std::size_t>(rest + j)].add(kr.p + j * key.p,
                                                       kr.d + j * key.d,
                                                       vr * factor_dim);
        }
      }
    }
    coeffs = std::move(next);
  }
  return coeffs[static_cast<std::size_t>(m)];
}

PervBettiTable direct_sum(const PervBettiTable& a, const PervBettiTable& b) {
  PervBettiTable out = a;
  for (const auto& [k, v] : b.entries()) out.add(k.p, k.d, v);
  return out;
}

}  // namespace pervhilb
