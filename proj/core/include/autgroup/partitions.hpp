#pragma once

#include <span>
#include <vector>

#include "autgroup/structure.hpp"

namespace autgroup {

/// Partition of {0, ..., n-1}. Members are sorted inside each block and
/// blocks are ordered by their least member.
class Partition {
 public:
  Partition() = default;

  static Partition single_block(std::size_t n);
  static Partition discrete(std::size_t n);
  /// Throws Error(Validation) unless the blocks are disjoint, nonempty and
  /// cover {0, ..., n-1}.
  static Partition from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks);
  /// Groups i by `key[i]`.
  static Partition from_keys(std::span<const std::size_t> key);

  std::size_t num_elements() const noexcept { return block_of_.size(); }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
  std::size_t block_of(std::size_t i) const { return block_of_.at(i); }

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// A set P x where P is a block of the current partition.
struct Cell {
  std::size_t block;
  Letter letter;

  auto operator<=>(const Cell&) const = default;
};

/// One successful union during refinement together with its witness.
struct MergeRecord {
  Cell first;
  Cell second;
  CellPair witness;
};

struct LambdaBlock {
  std::vector<Cell> cells;              // sorted
  std::vector<std::size_t> members;     // intersection with P, sorted

  bool merged() const noexcept { return cells.size() >= 2; }
};

/// Result of one refinement step Pi -> Pi'.
struct LambdaResult {
  std::vector<LambdaBlock> blocks;      // ordered by least cell
  std::vector<std::size_t> lambda_of_cell;  // indexed by block * |X| + letter
  std::vector<MergeRecord> merges;
  Partition next;
  /// For each Lambda block with members, its block index in `next`.
  std::vector<std::optional<std::size_t>> next_block;
  std::size_t alphabet_size = 0;

  std::size_t lambda_of(Cell c) const { return lambda_of_cell.at(c.block * alphabet_size + c.letter); }
};

/// Unites cells P x and Q y for every {(p,x),(q,y)} in `ee` with p in P and
/// q in Q; element i of P is the cell element (block(shift(i)), last(i)).
LambdaResult refine_step(const Partition& partition, std::span<const CellPair> ee,
                         std::span<const CellRef> embedding, std::size_t alphabet_size);

/// Pi_0 = {P}, Pi_{k+1} = Pi_k' up to the first fixpoint.
struct PartitionChain {
  std::vector<Partition> partitions;    // Pi_0 ... Pi_{n0}
  std::vector<LambdaResult> steps;      // steps[k] refines partitions[k]
  std::size_t alphabet_size = 0;

  std::size_t fixpoint() const noexcept { return partitions.size() - 1; }
  std::size_t successor(std::size_t k) const noexcept {
    return k < fixpoint() ? k + 1 : fixpoint();
  }
  /// Pi_{min(n, n0)}.
  const Partition& at_level(std::size_t n) const {
    return partitions[n < fixpoint() ? n : fixpoint()];
  }
};

/// Throws Error(EmptyPostCritical) when `embedding` is empty.
PartitionChain stabilize(std::span<const CellPair> ee, std::span<const CellRef> embedding,
                         std::size_t alphabet_size);

PartitionChain stabilize(const PostCriticalData& data, std::size_t alphabet_size);

/// Blocks of `partition` merged along the pairs of `e`.
Partition coarsen(const Partition& partition, std::span<const IndexPair> e);

}  // namespace autgroup
