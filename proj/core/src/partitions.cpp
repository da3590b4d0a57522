#include "autgroup/partitions.hpp"

#include <algorithm>
#include <unordered_map>

#include "autgroup/error.hpp"
#include "graph.hpp"

namespace autgroup {

Partition Partition::single_block(std::size_t n) {
  std::vector<std::size_t> key(n, 0);
  return from_keys(key);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = i;
  return from_keys(key);
}

Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> key(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::Validation, "empty block");
    for (std::size_t i : blocks[b]) {
      if (i >= n) throw Error(ErrorKind::Validation, "block member out of range");
      if (key[i] != kUnset) throw Error(ErrorKind::Validation, "blocks are not disjoint");
      key[i] = b;
    }
  }
  if (std::find(key.begin(), key.end(), kUnset) != key.end()) {
    throw Error(ErrorKind::Validation, "blocks do not cover every element");
  }
  return from_keys(key);
}

Partition Partition::from_keys(std::span<const std::size_t> key) {
  Partition p;
  p.block_of_.resize(key.size());
  std::unordered_map<std::size_t, std::size_t> seen;
  for (std::size_t i = 0; i < key.size(); ++i) {
    auto [it, inserted] = seen.emplace(key[i], p.blocks_.size());
    if (inserted) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(i);
    p.block_of_[i] = it->second;
  }
  return p;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.num_elements() != num_elements()) return false;
  for (const auto& b : blocks_) {
    const auto target = coarser.block_of(b.front());
    for (std::size_t i : b) {
      if (coarser.block_of(i) != target) return false;
    }
  }
  return true;
}

LambdaResult refine_step(const Partition& partition, std::span<const CellPair> ee,
                         std::span<const CellRef> embedding, std::size_t alphabet_size) {
  const std::size_t n = partition.num_elements();
  if (embedding.size() != n) throw Error(ErrorKind::Domain, "embedding size mismatch");
  const std::size_t k = alphabet_size;
  auto cell_index = [&](const Cell& c) { return c.block * k + c.letter; };

  LambdaResult r;
  r.alphabet_size = k;
  detail::MinUnionFind uf(partition.num_blocks() * k);
  for (const auto& pair : ee) {
    if (pair.first.index >= n || pair.second.index >= n || pair.first.letter >= k ||
        pair.second.letter >= k) {
      throw Error(ErrorKind::Domain, "merge pair out of range");
    }
    const Cell a{partition.block_of(pair.first.index), pair.first.letter};
    const Cell b{partition.block_of(pair.second.index), pair.second.letter};
    if (uf.unite(cell_index(a), cell_index(b))) r.merges.push_back({a, b, pair});
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of_root(uf.size(), kUnset);
  r.lambda_of_cell.resize(uf.size());
  for (std::size_t c = 0; c < uf.size(); ++c) {
    const auto root = uf.find(c);
    if (block_of_root[root] == kUnset) {
      block_of_root[root] = r.blocks.size();
      r.blocks.emplace_back();
    }
    const auto lb = block_of_root[root];
    r.lambda_of_cell[c] = lb;
    r.blocks[lb].cells.push_back({c / k, static_cast<Letter>(c % k)});
  }

  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = embedding[i];
    const auto lb = r.lambda_of_cell[cell_index({partition.block_of(e.index), e.letter})];
    r.blocks[lb].members.push_back(i);
    key[i] = lb;
  }
  r.next = Partition::from_keys(key);
  r.next_block.resize(r.blocks.size());
  for (std::size_t b = 0; b < r.blocks.size(); ++b) {
    if (!r.blocks[b].members.empty()) r.next_block[b] = r.next.block_of(r.blocks[b].members.front());
  }
  return r;
}

PartitionChain stabilize(std::span<const CellPair> ee, std::span<const CellRef> embedding,
                         std::size_t alphabet_size) {
  if (embedding.empty()) {
    throw Error(ErrorKind::EmptyPostCritical, "post-critical set is empty");
  }
  PartitionChain chain;
  chain.alphabet_size = alphabet_size;
  chain.partitions.push_back(Partition::single_block(embedding.size()));
  for (;;) {
    auto step = refine_step(chain.partitions.back(), ee, embedding, alphabet_size);
    const bool fixed = step.next == chain.partitions.back();
    Partition next = step.next;
    chain.steps.push_back(std::move(step));
    if (fixed) break;
    if (!next.refines(chain.partitions.back()) || chain.partitions.size() > embedding.size()) {
      throw Error(ErrorKind::Internal, "partition chain is not decreasing");
    }
    chain.partitions.push_back(std::move(next));
  }
  return chain;
}

PartitionChain stabilize(const PostCriticalData& data, std::size_t alphabet_size) {
  const auto embedding = data.embedding();
  return stabilize(data.ee_pairs, embedding, alphabet_size);
}

Partition coarsen(const Partition& partition, std::span<const IndexPair> e) {
  const std::size_t n = partition.num_elements();
  detail::MinUnionFind uf(n);
  for (const auto& b : partition.blocks()) {
    for (std::size_t i : b) uf.unite(b.front(), i);
  }
  for (const auto& pair : e) {
    if (pair.first >= n || pair.second >= n) throw Error(ErrorKind::Domain, "pair out of range");
    uf.unite(pair.first, pair.second);
  }
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = uf.find(i);
  return Partition::from_keys(key);
}

}  // namespace autgroup
