#include "pentatail/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "pentatail/errors.hpp"

namespace pentatail {

namespace {

class RestrictedCounter {
 public:
  explicit RestrictedCounter(std::vector<int> parts) : parts_(std::move(parts)) {}

  // Partitions of n using only parts_[0..idx).
  Integer count(int n, std::size_t idx) {
    if (n == 0) return 1;
    if (idx == 0 || n < 0) return 0;
    const auto key = std::make_pair(n, idx);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    const int part = parts_[idx - 1];
    for (int used = 0; used <= n; used += part) total += count(n - used, idx - 1);
    memo_.emplace(key, total);
    return total;
  }

 private:
  std::vector<int> parts_;
  std::map<std::pair<int, std::size_t>, Integer> memo_;
};

void enumerate(int remaining, int max_part, std::vector<int>& stack,
               const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    visit(stack);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    enumerate(remaining - p, p, stack, visit);
    stack.pop_back();
  }
}

}  // namespace

Series partitions_into(std::span<const int> parts, int order) {
  if (parts.empty()) throw std::invalid_argument("partitions_into needs at least one part");
  std::set<int> unique(parts.begin(), parts.end());
  if (*unique.begin() < 1) throw std::invalid_argument("parts must be positive");
  RestrictedCounter counter(std::vector<int>(unique.begin(), unique.end()));
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[n] = counter.count(n, unique.size());
  return Series(std::move(c));
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit, int cap) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  if (n > cap) {
    throw LimitExceeded("partition enumeration of n = " + std::to_string(n) +
                        " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<int> stack;
  enumerate(n, n, stack, visit);
}

Integer count_dregular_bruteforce(int d, int n, int cap) {
  if (d < 2) throw std::invalid_argument("d-regular partitions need d >= 2");
  Integer total = 0;
  for_each_partition(
      n,
      [&](std::span<const int> parts) {
        if (std::none_of(parts.begin(), parts.end(), [d](int p) { return p % d == 0; })) ++total;
      },
      cap);
  return total;
}

}  // namespace pentatail
