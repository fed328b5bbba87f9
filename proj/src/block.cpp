/// @file block.cpp
#include "rbdkit/block.hpp"

#include "rbdkit/error.hpp"

namespace rbdkit {

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kLeaf:
      return "leaf";
    case BlockKind::kSeries:
      return "series";
    case BlockKind::kParallel:
      return "parallel";
    case BlockKind::kKofN:
      return "kofn";
    case BlockKind::kBridge:
      return "bridge";
  }
  return "unknown";
}

Block Block::leaf(std::string component_id) {
  Block b;
  b.kind_ = BlockKind::kLeaf;
  b.component_id_ = std::move(component_id);
  return b;
}

Block Block::series(std::vector<Block> children) {
  Block b;
  b.kind_ = BlockKind::kSeries;
  b.children_ = std::move(children);
  return b;
}

Block Block::parallel(std::vector<Block> children) {
  Block b;
  b.kind_ = BlockKind::kParallel;
  b.children_ = std::move(children);
  return b;
}

Block Block::k_of_n(int k, std::vector<Block> children) {
  Block b;
  b.kind_ = BlockKind::kKofN;
  b.k_ = k;
  b.children_ = std::move(children);
  return b;
}

Block Block::bridge(std::vector<Block> children) {
  if (children.size() != 5)
    throw StructureError("bridge needs exactly 5 blocks, got " +
                         std::to_string(children.size()));
  Block b;
  b.kind_ = BlockKind::kBridge;
  b.children_ = std::move(children);
  return b;
}

Block Block::bridge(Block b1, Block b2, Block b3, Block b4, Block b5) {
  std::vector<Block> children;
  children.reserve(5);
  children.push_back(std::move(b1));
  children.push_back(std::move(b2));
  children.push_back(std::move(b3));
  children.push_back(std::move(b4));
  children.push_back(std::move(b5));
  return bridge(std::move(children));
}

namespace {

void collect(const Block& b, std::vector<std::string>& out) {
  if (b.kind() == BlockKind::kLeaf) {
    out.push_back(b.component_id());
    return;
  }
  for (const auto& child : b.children()) collect(child, out);
}

}  // namespace

std::vector<std::string> leaves(const Block& b) {
  std::vector<std::string> out;
  collect(b, out);
  return out;
}

}  // namespace rbdkit
