#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dowling/exact.hpp"

namespace dowling::oracle {

/// Thrown when a request exceeds an exhaustive-enumeration cap.
class CapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kMaxSetPartitionN = 12;
inline constexpr int kMaxBpaN = 8;
inline constexpr int kMaxBpaBars = 4;
inline constexpr int kMaxColoredN = 7;
inline constexpr long kMaxColoredR = 5;

/// Partition of [n] = {1..n} in standard form: blocks sorted, ordered by minima.
struct SetPartition {
  std::vector<std::vector<int>> blocks;
};

/// l+1 sections, each a linearly ordered (possibly empty) list of blocks.
struct BarredArrangement {
  std::vector<std::vector<std::vector<int>>> sections;
};

/// Weighted count produced by an exhaustive enumeration.
struct EnumWeight {
  Integer value;
};

/// Visits every set partition of [n] exactly once (restricted growth strings).
void enum_set_partitions(int n, const std::function<void(const SetPartition&)>& visit);

/// Number of set partitions of [n] into exactly k blocks, by enumeration.
Integer count_set_partitions(int n, int k);

/// Visits every barred preferential arrangement of [n] with l bars. Intended for small n;
/// shares the enum_bpa_count caps.
void enum_bpa(int n, int l, const std::function<void(const BarredArrangement&)>& visit);

/// Number of barred preferential arrangements of [n] with l bars. Each set partition is
/// enumerated; its block orderings and bar placements are enumerated once per block count.
Integer enum_bpa_count(int n, int l);

/// Colored partitions of [n+r] into k+r blocks with 1..r in distinct (distinguished)
/// blocks; every other block has its minimum uncolored and the rest of its elements
/// colored with one of m colors.
EnumWeight count_rwhitney(int n, int k, long m, long r);

/// Sum over k of count_rwhitney-style partitions with each non-distinguished block
/// additionally carrying x0 * l0 choices.
EnumWeight count_rmxl(int n, long m, long r, long x0, long l0);

}  // namespace dowling::oracle
