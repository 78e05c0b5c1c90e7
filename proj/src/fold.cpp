#include "ik/fold.hpp"

#include <cassert>

namespace ik {

namespace {

// Union-find with one dense transition row per class. Merging two classes
// merges their rows; a label clash queues a further merge, so the pending
// stack drives folding to completion.
class Folder {
 public:
  Folder(uint32_t n, uint32_t stride)
      : stride_(stride),
        parent_(n),
        size_(n, 1),
        rows_(static_cast<size_t>(n) * stride, kNoVertex) {
    for (uint32_t v = 0; v < n; ++v) parent_[v] = v;
  }

  uint32_t find(uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void insert(uint32_t p, uint32_t code, uint32_t q) {
    uint32_t rp = find(p);
    uint32_t& slot = rows_[static_cast<size_t>(rp) * stride_ + code];
    if (slot == kNoVertex) {
      slot = q;  // stored targets may go stale; readers re-find them
    } else if (find(slot) != find(q)) {
      pending_.emplace_back(slot, q);
    }
  }

  void require(uint32_t a, uint32_t b) { pending_.emplace_back(a, b); }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      uint32_t ra = find(a);
      uint32_t rb = find(b);
      if (ra == rb) continue;
      if (size_[ra] < size_[rb]) std::swap(ra, rb);
      parent_[rb] = ra;
      size_[ra] += size_[rb];
      const size_t row = static_cast<size_t>(rb) * stride_;
      for (uint32_t code = 0; code < stride_; ++code) {
        uint32_t t = rows_[row + code];
        if (t != kNoVertex) insert(ra, code, t);
      }
    }
  }

  uint32_t row_entry(uint32_t root, uint32_t code) const {
    return rows_[static_cast<size_t>(root) * stride_ + code];
  }

 private:
  uint32_t stride_;
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> size_;
  std::vector<uint32_t> rows_;
  std::vector<std::pair<uint32_t, uint32_t>> pending_;
};

}  // namespace

FoldResult fold_with_map(
    const EdgeGraph& g,
    std::span<const std::pair<uint32_t, uint32_t>> identify) {
  const uint32_t n = g.vertex_count();
  const uint32_t stride = g.alphabet().letter_codes();
  Folder folder(n, stride);

  for (auto [a, b] : g.identifications()) folder.require(a, b);
  for (auto [a, b] : identify) folder.require(a, b);
  for (const Edge& e : g.edges()) {
    folder.insert(e.from, 2 * e.letter, e.to);
    folder.insert(e.to, 2 * e.letter + 1, e.from);
  }
  folder.drain();

  // Number classes by smallest original vertex: ascending scan assigns ids
  // on first sight of each root.
  std::vector<uint32_t> newid(n, kNoVertex);
  std::vector<uint32_t> roots;
  uint32_t classes = 0;
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t r = folder.find(v);
    if (newid[r] == kNoVertex) {
      newid[r] = classes++;
      roots.push_back(r);
    }
  }

  std::vector<uint32_t> trans(static_cast<size_t>(classes) * stride,
                              kNoVertex);
  for (uint32_t i = 0; i < classes; ++i) {
    for (uint32_t code = 0; code < stride; ++code) {
      uint32_t t = folder.row_entry(roots[i], code);
      if (t != kNoVertex) {
        trans[static_cast<size_t>(i) * stride + code] =
            newid[folder.find(t)];
      }
    }
  }

  std::vector<uint32_t> vertex_map(n);
  for (uint32_t v = 0; v < n; ++v) vertex_map[v] = newid[folder.find(v)];

  FoldResult result{
      FoldedAutomaton(g.alphabet(), classes, vertex_map[g.initial()],
                      vertex_map[g.terminal()], std::move(trans)),
      std::move(vertex_map)};
  return result;
}

FoldedAutomaton fold_complete(const EdgeGraph& g) {
  return fold_with_map(g).automaton;
}

}  // namespace ik
