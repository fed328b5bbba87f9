/// @file block.hpp
/// Reliability block diagram expression tree.
#pragma once

#include <string>
#include <vector>

namespace rbdkit {

enum class BlockKind { kLeaf, kSeries, kParallel, kKofN, kBridge };

const char* to_string(BlockKind kind);

/// A node of a reliability block diagram.
///
/// Leaf references a component by id. Series, Parallel and KofN hold an
/// ordered child list. Bridge holds exactly five children in the fixed
/// positions: 0/1 are the left column, 3/4 the right column and 2 is the
/// cross-link joining the two mid points.
///
/// The factories do not enforce 1 <= k <= N or non-empty child lists; those
/// are reported by validate() so that malformed trees can be diagnosed.
class Block {
 public:
  static Block leaf(std::string component_id);
  static Block series(std::vector<Block> children);
  static Block parallel(std::vector<Block> children);
  static Block k_of_n(int k, std::vector<Block> children);
  /// Throws StructureError unless exactly five children are given.
  static Block bridge(std::vector<Block> children);
  static Block bridge(Block b1, Block b2, Block b3, Block b4, Block b5);

  BlockKind kind() const { return kind_; }
  /// Component id; empty unless kind() == kLeaf.
  const std::string& component_id() const { return component_id_; }
  /// Required number of working children; meaningful for kKofN only.
  int k() const { return k_; }
  const std::vector<Block>& children() const { return children_; }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  BlockKind kind_ = BlockKind::kLeaf;
  std::string component_id_;
  int k_ = 0;
  std::vector<Block> children_;
};

/// Component ids of all leaves, depth-first left to right, duplicates kept.
std::vector<std::string> leaves(const Block& b);

}  // namespace rbdkit
