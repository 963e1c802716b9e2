#include "famsched/distances.hpp"

#include <algorithm>
#include <unordered_map>

namespace famsched {
namespace {

// position_in_b[x] for every job x of a; validates the shared job set.
std::vector<int> positions_in(const Schedule& a, const Schedule& b) {
  if (a.size() != b.size()) throw InputError("schedules have different lengths");
  std::unordered_map<JobId, int> pos;
  pos.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!pos.emplace(b[i], static_cast<int>(i)).second) throw InputError("schedule repeats a job");
  }
  std::vector<int> out(a.size());
  std::vector<char> used(b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = pos.find(a[i]);
    if (it == pos.end() || used[static_cast<std::size_t>(it->second)]) {
      throw InputError("schedules do not permute the same job set");
    }
    used[static_cast<std::size_t>(it->second)] = 1;
    out[i] = it->second;
  }
  return out;
}

}  // namespace

int window_distance(const Schedule& a, const Schedule& b) {
  positions_in(a, b);
  const int n = static_cast<int>(a.size());
  int first = 0;
  while (first < n && a[first] == b[first]) ++first;
  if (first == n) return 0;
  int last = n - 1;
  while (a[last] == b[last]) --last;
  return last - first + 1;
}

int multi_window_distance(const Schedule& a, const Schedule& b) {
  const std::vector<int> pos = positions_in(a, b);
  if (a == b) return 0;
  // Cut after position i iff the first i+1 jobs of a occupy exactly the first
  // i+1 positions of b, i.e. the running maximum of their b-positions is i.
  int widest = 0;
  int block_start = 0;
  int reach = -1;
  for (int i = 0; i < static_cast<int>(pos.size()); ++i) {
    reach = std::max(reach, pos[static_cast<std::size_t>(i)]);
    if (reach == i) {
      widest = std::max(widest, i - block_start + 1);
      block_start = i + 1;
    }
  }
  return widest;
}

int swap_distance(const Schedule& a, const Schedule& b) {
  const std::vector<int> pos = positions_in(a, b);
  const int n = static_cast<int>(pos.size());
  std::vector<char> visited(pos.size(), 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int x = i; !visited[static_cast<std::size_t>(x)]; x = pos[static_cast<std::size_t>(x)]) {
      visited[static_cast<std::size_t>(x)] = 1;
    }
  }
  return n - cycles;
}

int insert_distance(const Schedule& a, const Schedule& b) {
  // The longest common subsequence of two permutations is the longest
  // increasing run of b-positions along a.
  const std::vector<int> pos = positions_in(a, b);
  std::vector<int> tails;
  for (int p : pos) {
    auto it = std::lower_bound(tails.begin(), tails.end(), p);
    if (it == tails.end()) {
      tails.push_back(p);
    } else {
      *it = p;
    }
  }
  return static_cast<int>(pos.size() - tails.size());
}

}  // namespace famsched
