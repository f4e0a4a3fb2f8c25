#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace symchow {

/// A set partition of the factor indices {1..n} of C^n where some blocks
/// are pinned to the fixed point x. A free block of size k is the small
/// diagonal of its factors (codimension k-1); a pinned singleton is the
/// point condition x_i = x (codimension 1).
///
/// Canonical form:
///   - blocks ordered by least element, elements ascending inside a block;
///   - every pinned block is a singleton. A pinned block of size k is the
///     same cycle as k pinned points modulo numerical equivalence, so it is
///     split on normalisation.
class Configuration {
 public:
  struct Block {
    std::uint32_t mask = 0;  // bit i-1 set  <=>  factor i in the block
    bool pinned = false;
    friend auto operator<=>(const Block&, const Block&) = default;
  };

  /// All-singletons-free partition: the monomial of the fundamental class.
  static Configuration discrete(int n);

  /// Normalises the given blocks; they must partition {1..n}.
  Configuration(int n, std::vector<Block> blocks);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int unpinned_count() const;
  /// n minus the number of unpinned blocks; between 0 and n.
  int codim() const { return n_ - unpinned_count(); }
  bool fully_pinned() const { return codim() == n_; }

  /// Applies a permutation of {1..n}; perm[i-1] is the image of i.
  Configuration relabel(const std::vector<int>& perm) const;

  /// e.g. "[{1,2} {3}*]" with '*' marking a pinned block.
  std::string str() const;

  friend std::strong_ordering operator<=>(const Configuration&,
                                          const Configuration&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// Largest ambient power the bit-mask representation supports.
inline constexpr int kMaxAmbient = 32;

}  // namespace symchow
