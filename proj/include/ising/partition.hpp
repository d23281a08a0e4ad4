#pragma once

#include <string>
#include <vector>

namespace ising {

/// A partition of the index positions {1..d} into disjoint nonempty blocks.
/// Stored 0-based and canonical: each block ascending, blocks ordered by
/// least element. Displayed 1-based, e.g. "{1,2}{3}".
struct Partition {
  int d = 0;
  std::vector<std::vector<int>> blocks;

  /// Canonicalizes and validates (disjoint, nonempty, covering).
  static Partition of(int d, std::vector<std::vector<int>> blocks);
  static Partition single(int d);      // {{1..d}}
  static Partition singletons(int d);  // {1}{2}...{d}

  /// All partitions of [d] (restricted-growth-string enumeration).
  static std::vector<Partition> all(int d);

  /// Parses "{1,2}{3}" (1-based); requires the result to partition [d].
  static Partition parse(const std::string& s, int d);

  std::string str() const;
  int block_count() const { return static_cast<int>(blocks.size()); }

  /// True when every block of *this is contained in a block of `coarser`.
  bool refines(const Partition& coarser) const;
};

}  // namespace ising
