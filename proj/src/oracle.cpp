#include "dowling/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dowling::oracle {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw CapError(message);
}

// Visits restricted growth strings of length `len` whose first `fixed` entries are
// 0, 1, ..., fixed-1. `labels[i]` is the block index of element i+1.
template <typename Visit>
void for_each_rgs(int len, int fixed, Visit&& visit) {
  std::vector<int> labels(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < fixed; ++i) labels[static_cast<std::size_t>(i)] = i;
  auto rec = [&](auto&& self, int pos, int blocks) -> void {
    if (pos == len) {
      visit(labels, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      labels[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(rec, fixed, fixed);
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& labels, int blocks) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out[static_cast<std::size_t>(labels[i])].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

// Visits weak compositions of `total` into `parts` parts.
template <typename Visit>
void for_each_weak_composition(int total, int parts, Visit&& visit) {
  std::vector<int> sizes(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts - 1) {
      sizes[static_cast<std::size_t>(idx)] = left;
      visit(sizes);
      return;
    }
    for (int s = 0; s <= left; ++s) {
      sizes[static_cast<std::size_t>(idx)] = s;
      self(self, idx + 1, left - s);
    }
  };
  if (parts > 0) rec(rec, 0, total);
}

void check_bpa_caps(int n, int l) {
  require(n >= 0 && n <= kMaxBpaN,
          "barred arrangement enumeration requires 0 <= n <= " + std::to_string(kMaxBpaN) +
              " (got n=" + std::to_string(n) + ")");
  require(l >= 0 && l <= kMaxBpaBars,
          "barred arrangement enumeration requires 0 <= l <= " + std::to_string(kMaxBpaBars) +
              " (got l=" + std::to_string(l) + ")");
}

void check_colored_caps(int n, long r) {
  require(n >= 0 && n <= kMaxColoredN,
          "colored-partition enumeration requires 0 <= n <= " + std::to_string(kMaxColoredN) +
              " (got n=" + std::to_string(n) + ")");
  require(r >= 0 && r <= kMaxColoredR,
          "colored-partition enumeration requires 0 <= r <= " + std::to_string(kMaxColoredR) +
              " (got r=" + std::to_string(r) + ")");
}

// Weight of one colored partition: m^(size-1) per non-distinguished block, times
// block_factor per non-distinguished block.
template <typename Visit>
void for_each_colored_partition(int n, long r, Visit&& visit) {
  const int fixed = static_cast<int>(r);
  std::vector<int> sizes;
  for_each_rgs(n + fixed, fixed, [&](const std::vector<int>& labels, int blocks) {
    sizes.assign(static_cast<std::size_t>(blocks), 0);
    for (int b : labels) ++sizes[static_cast<std::size_t>(b)];
    visit(sizes, fixed);
  });
}

}  // namespace

void enum_set_partitions(int n, const std::function<void(const SetPartition&)>& visit) {
  require(n >= 0 && n <= kMaxSetPartitionN,
          "set partition enumeration requires 0 <= n <= " + std::to_string(kMaxSetPartitionN) +
              " (got n=" + std::to_string(n) + ")");
  SetPartition part;
  for_each_rgs(n, 0, [&](const std::vector<int>& labels, int blocks) {
    part.blocks = blocks_of(labels, blocks);
    visit(part);
  });
}

Integer count_set_partitions(int n, int k) {
  long count = 0;
  enum_set_partitions(n, [&](const SetPartition& p) {
    if (static_cast<int>(p.blocks.size()) == k) ++count;
  });
  return count;
}

void enum_bpa(int n, int l, const std::function<void(const BarredArrangement&)>& visit) {
  check_bpa_caps(n, l);
  BarredArrangement arr;
  enum_set_partitions(n, [&](const SetPartition& p) {
    const int k = static_cast<int>(p.blocks.size());
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    do {
      for_each_weak_composition(k, l + 1, [&](const std::vector<int>& sizes) {
        arr.sections.assign(static_cast<std::size_t>(l) + 1, {});
        std::size_t next = 0;
        for (std::size_t s = 0; s < sizes.size(); ++s) {
          for (int i = 0; i < sizes[s]; ++i) {
            arr.sections[s].push_back(p.blocks[static_cast<std::size_t>(order[next++])]);
          }
        }
        visit(arr);
      });
    } while (std::next_permutation(order.begin(), order.end()));
  });
}

Integer enum_bpa_count(int n, int l) {
  check_bpa_caps(n, l);
  // Arrangements of k labelled blocks: orderings times bar placements.
  std::map<int, long> per_block_count;
  auto arrangements_of = [&](int k) {
    auto it = per_block_count.find(k);
    if (it != per_block_count.end()) return it->second;
    long orderings = 0;
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    do {
      ++orderings;
    } while (std::next_permutation(order.begin(), order.end()));
    long placements = 0;
    for_each_weak_composition(k, l + 1, [&](const std::vector<int>&) { ++placements; });
    return per_block_count[k] = orderings * placements;
  };
  Integer total = 0;
  enum_set_partitions(n, [&](const SetPartition& p) {
    total += arrangements_of(static_cast<int>(p.blocks.size()));
  });
  return total;
}

EnumWeight count_rwhitney(int n, int k, long m, long r) {
  check_colored_caps(n, r);
  require(m >= 1, "count_rwhitney requires m >= 1");
  Integer total = 0;
  for_each_colored_partition(n, r, [&](const std::vector<int>& sizes, int fixed) {
    if (static_cast<int>(sizes.size()) != k + fixed) return;
    Integer w = 1;
    for (std::size_t b = static_cast<std::size_t>(fixed); b < sizes.size(); ++b) {
      w *= ipow(m, static_cast<unsigned long>(sizes[b] - 1));
    }
    total += w;
  });
  return {total};
}

EnumWeight count_rmxl(int n, long m, long r, long x0, long l0) {
  check_colored_caps(n, r);
  require(m >= 1 && x0 >= 1 && l0 >= 1, "count_rmxl requires m, x, lambda >= 1");
  Integer total = 0;
  const Integer block_factor = Integer(x0) * l0;
  for_each_colored_partition(n, r, [&](const std::vector<int>& sizes, int fixed) {
    Integer w = 1;
    for (std::size_t b = static_cast<std::size_t>(fixed); b < sizes.size(); ++b) {
      w *= ipow(m, static_cast<unsigned long>(sizes[b] - 1)) * block_factor;
    }
    total += w;
  });
  return {total};
}

}  // namespace dowling::oracle
