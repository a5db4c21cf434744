#include "pervhilb/calc/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace pervhilb::calc {

namespace {

// Complex dimensions of the fixture spaces; classes above real degree
// 2*dim are zero and never equal the (nonzero) target.
int max_degree(const std::string& space) { return space == "S" ? 4 : 8; }

struct Entry {
  std::string key;  // canonical expression
  std::string space;
  int degree = 0;
  int bound = 0;
  int depth = 0;
  bool unit = false;  // denotes a fundamental class
};

std::string cup_key(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string key = "cup{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) key += ';';
    key += parts[i];
  }
  key += '}';
  return key;
}

// Flattens nested cups and drops unit factors so that syntactically
// different derivations of the same product share one key.
std::vector<std::string> cup_parts(const Entry& e) {
  if (e.key.rfind("cup{", 0) == 0) {
    std::vector<std::string> parts;
    std::string body = e.key.substr(4, e.key.size() - 5);
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ';' && depth == 0)) {
        parts.push_back(body.substr(start, i - start));
        start = i + 1;
      } else if (body[i] == '{' || body[i] == '(') {
        ++depth;
      } else if (body[i] == '}' || body[i] == ')') {
        --depth;
      }
    }
    return parts;
  }
  return {e.key};
}

}  // namespace

SearchResult search_diagonal_ch3(SurfaceFixture fixture, int target_bound,
                                 const SearchOptions& options) {
  const int c1_bound = fixture == SurfaceFixture::elliptic ? 1 : 2;

  // The target's registered identity: the diagonal pushforward of c1.
  const std::string target_key = "push[diag](c1_S)";

  std::map<std::string, Entry> seen;
  auto insert = [&](Entry e) -> bool {
    if (e.degree > max_degree(e.space)) return false;  // zero class
    auto it = seen.find(e.key);
    if (it != seen.end()) {
      // Same canonical expression: the rules recompute the same bound.
      it->second.depth = std::min(it->second.depth, e.depth);
      return false;
    }
    seen.emplace(e.key, std::move(e));
    return true;
  };

  insert(Entry{"one_S", "S", 0, 0, 0, true});
  insert(Entry{"c1_S", "S", 2, c1_bound, 0, false});
  insert(Entry{"top_S", "S", 4, 2, 0, false});

  auto cap = [](const std::string& space, int b) {
    return std::min(b, space == "S" ? 2 : 4);
  };

  for (int depth = 1; depth <= options.max_depth; ++depth) {
    std::vector<Entry> batch;
    batch.reserve(seen.size());
    for (const auto& [k, e] : seen) batch.push_back(e);

    std::vector<Entry> fresh;
    // pushforward along the small diagonal
    for (const Entry& e : batch) {
      if (e.space != "S" || e.depth + 1 > depth) continue;
      Entry out;
      out.key = "push[diag](" + e.key + ")";
      out.space = "SxS";
      out.degree = e.degree + 4;
      out.bound = cap("SxS", e.bound + 2);
      out.depth = e.depth + 1;
      out.unit = false;
      fresh.push_back(std::move(out));
    }
    // Kunneth across the registered product
    for (const Entry& a : batch) {
      if (a.space != "S") continue;
      for (const Entry& b : batch) {
        if (b.space != "S") continue;
        if (std::max(a.depth, b.depth) + 1 > depth) continue;
        std::string ka = a.key, kb = b.key;
        if (kb < ka) std::swap(ka, kb);
        Entry out;
        out.key = "kunneth(" + ka + ";" + kb + ")";
        out.space = "SxS";
        out.degree = a.degree + b.degree;
        out.bound = cap("SxS", a.bound + b.bound);
        out.depth = std::max(a.depth, b.depth) + 1;
        out.unit = a.unit && b.unit;
        fresh.push_back(std::move(out));
      }
    }
    // cup products (both spaces are multiplicative in the fixtures)
    for (const Entry& a : batch) {
      for (const Entry& b : batch) {
        if (a.key > b.key || a.space != b.space) continue;
        if (std::max(a.depth, b.depth) + 1 > depth) continue;
        std::vector<std::string> parts;
        Entry out;
        out.space = a.space;
        out.degree = a.degree + b.degree;
        out.bound = cap(a.space, a.bound + b.bound);
        out.depth = std::max(a.depth, b.depth) + 1;
        out.unit = a.unit && b.unit;
        for (const Entry* e : {&a, &b}) {
          if (e->unit) continue;  // cupping with a fundamental class is the identity
          auto ps = cup_parts(*e);
          parts.insert(parts.end(), ps.begin(), ps.end());
        }
        if (parts.empty()) {
          continue;  // unit times unit: nothing new
        } else if (parts.size() == 1) {
          continue;  // unit times x is x again: already present
        }
        out.key = cup_key(std::move(parts));
        fresh.push_back(std::move(out));
      }
    }
    bool grew = false;
    for (Entry& e : fresh) grew = insert(std::move(e)) || grew;
    if (!grew) break;  // closure reached before the depth limit
  }

  SearchResult result;
  result.expressions = static_cast<long long>(seen.size());
  auto it = seen.find(target_key);
  if (it != seen.end()) {
    result.best_bound = it->second.bound;
    result.found = it->second.bound <= target_bound;
  }
  return result;
}

}  // namespace pervhilb::calc
