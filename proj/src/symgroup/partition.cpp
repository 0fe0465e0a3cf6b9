#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tvx/symgroup.hpp"

namespace tvx {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition parse_partition(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::istringstream in(s);
  Partition p;
  int part = 0;
  while (in >> part) p.parts.push_back(part);
  if (!in.eof()) throw Error("malformed partition: " + std::string(text));
  if (p.parts.empty()) throw Error("empty partition");
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && p.parts[i] > p.parts[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
  return p;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  for (int k = std::min(remaining, cap); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 1) throw Error("partitions need d >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(d, d, prefix, out);
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error("permutation size mismatch");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

std::vector<Permutation> all_permutations(int d) {
  Permutation p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  Partition out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t k = i; !seen[k]; k = p[k]) {
      seen[k] = true;
      ++len;
    }
    out.parts.push_back(len);
  }
  std::sort(out.parts.rbegin(), out.parts.rend());
  return out;
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::string to_string(const StandardTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(t.rows[r][c]);
    }
  }
  return out;
}

StandardTableau parse_tableau(std::string_view text) {
  StandardTableau t;
  std::string s(text);
  std::istringstream rows(s);
  std::string row;
  while (std::getline(rows, row, '/')) {
    std::istringstream in(row);
    std::vector<int> entries;
    int e = 0;
    while (in >> e) entries.push_back(e);
    t.rows.push_back(entries);
    t.shape.parts.push_back(static_cast<int>(entries.size()));
  }
  return t;
}

namespace {

void tableaux_rec(const Partition& shape, int next, int d, std::vector<std::vector<int>>& rows,
                  std::vector<StandardTableau>& out) {
  if (next > d) {
    out.push_back({shape, rows});
    return;
  }
  for (std::size_t r = 0; r < shape.parts.size(); ++r) {
    int len = static_cast<int>(rows[r].size());
    if (len == shape.parts[r]) continue;
    if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
    rows[r].push_back(next);
    tableaux_rec(shape, next + 1, d, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.parts.size());
  std::vector<StandardTableau> out;
  tableaux_rec(shape, 1, shape.size(), rows, out);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

Integer hook_length_dimension(const Partition& shape) {
  Integer hooks(1);
  for (std::size_t r = 0; r < shape.parts.size(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c) {
      int arm = shape.parts[r] - c - 1, leg = 0;
      for (std::size_t k = r + 1; k < shape.parts.size() && shape.parts[k] > c; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  return factorial(shape.size()) / hooks;
}

Integer class_size(const Partition& rho) {
  Integer z(1);
  std::map<int, int> counts;
  for (int part : rho.parts) ++counts[part];
  for (auto [part, k] : counts) {
    for (int i = 0; i < k; ++i) z *= part;
    z *= factorial(k);
  }
  return factorial(rho.size()) / z;
}

namespace {

// χ on a beta-set (bead positions, strictly decreasing) for the cycle parts ρ[from..].
Integer mn_beta(std::vector<int> beads, const std::vector<int>& rho, std::size_t from,
                std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
  if (from == rho.size()) return 1;
  auto key = std::make_pair(beads, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int h = rho[from];
  Integer total(0);
  for (std::size_t i = 0; i < beads.size(); ++i) {
    int target = beads[i] - h;
    if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int between = 0;
    for (int b : beads)
      if (b > target && b < beads[i]) ++between;
    std::vector<int> moved = beads;
    moved[i] = target;
    std::sort(moved.rbegin(), moved.rend());
    Integer sub = mn_beta(moved, rho, from + 1, memo);
    total += between % 2 ? -sub : sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw Error("partitions of different sizes");
  static std::mutex guard;
  static std::map<std::pair<Partition, Partition>, Integer> cache;
  {
    std::lock_guard<std::mutex> lock(guard);
    if (auto it = cache.find({lambda, rho}); it != cache.end()) return it->second;
  }
  const int k = static_cast<int>(lambda.parts.size());
  std::vector<int> beads(k);
  for (int i = 0; i < k; ++i) beads[i] = lambda.parts[i] + (k - 1 - i);
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  Integer value = mn_beta(beads, rho.parts, 0, memo);
  std::lock_guard<std::mutex> lock(guard);
  cache.emplace(std::make_pair(lambda, rho), value);
  return value;
}

Integer multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int d = lambda.size();
  if (mu.size() != d || nu.size() != d) throw Error("partitions of different sizes");
  Integer sum(0);
  for (const auto& rho : partitions_of(d))
    sum += class_size(rho) * character(lambda, rho) * character(mu, rho) * character(nu, rho);
  return sum / factorial(d);
}

}  // namespace tvx
