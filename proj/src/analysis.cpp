#include "ik/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ik/fold.hpp"
#include "ik/munn.hpp"

namespace ik {

WeightReport check_loop_weights(const FoldedAutomaton& a, uint32_t base,
                                uint64_t sample) {
  if (base >= a.alphabet().size()) {
    throw input_error("weight letter outside the alphabet");
  }
  const uint32_t n = a.vertex_count();
  const uint32_t stride = a.stride();

  // Breadth-first spanning tree rooted at the initial vertex. pot[v] is the
  // weight of the tree path to v; a chord (u, x, w) closes a cycle of
  // weight pot[u] + weight(x) - pot[w].
  std::vector<uint32_t> parent(n, kNoVertex);
  std::vector<uint32_t> up_code(n, 0);
  std::vector<int64_t> pot(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<uint32_t> order;
  order.reserve(n);
  seen[a.initial()] = 1;
  order.push_back(a.initial());
  for (size_t head = 0; head < order.size(); ++head) {
    uint32_t v = order[head];
    for (uint32_t code = 0; code < stride; ++code) {
      uint32_t q = a.target_code(v, code);
      if (q == kNoVertex || seen[q]) continue;
      seen[q] = 1;
      parent[q] = v;
      up_code[q] = code;
      Letter x = Letter::from_code(code);
      pot[q] =
          pot[v] + (x.base() == base ? (x.is_positive() ? 1 : -1) : 0);
      order.push_back(q);
    }
  }

  auto is_tree_edge = [&](const Edge& e) {
    // A stored edge is a tree edge if discovery crossed it in either
    // direction. Self-loops never qualify.
    return (parent[e.to] == e.from && up_code[e.to] == 2 * e.letter) ||
           (parent[e.from] == e.to && up_code[e.from] == 2 * e.letter + 1);
  };
  auto path_from_root = [&](uint32_t v) {
    Word w;
    while (parent[v] != kNoVertex) {
      w.push_back(Letter::from_code(up_code[v]));
      v = parent[v];
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  WeightReport report{base, 0, {}};
  for (const Edge& e : a.positive_edges()) {
    if (is_tree_edge(e)) continue;
    if (sample != 0 && report.loops_checked == sample) break;
    ++report.loops_checked;
    int64_t weight = pot[e.from] + (e.letter == base ? 1 : 0) - pot[e.to];
    if (weight != 0) {
      // Witness loop at e.from: the chord, then back to the root, then out
      // to e.from again along tree paths.
      Word loop;
      loop.push_back(Letter::generator(e.letter));
      Word back = inverse(path_from_root(e.to));
      Word forth = path_from_root(e.from);
      loop.insert(loop.end(), back.begin(), back.end());
      loop.insert(loop.end(), forth.begin(), forth.end());
      report.violations.push_back(WeightViolation{e.from, std::move(loop)});
    }
  }
  return report;
}

std::optional<std::pair<uint32_t, uint32_t>> find_labeled_path(
    const FoldedAutomaton& a, const Word& w) {
  for (uint32_t v = 0; v < a.vertex_count(); ++v) {
    auto q = read_word(a, v, w);
    if (q) return std::make_pair(v, *q);
  }
  return std::nullopt;
}

namespace {

// Depth-first enumeration of rooted folded trees over the doubled alphabet,
// i.e. of Munn trees of idempotent words. Each tree vertex i > 0 hangs off
// parent[i] by letter code up_code[i]; edges are emitted with
// non-decreasing parent and, per parent, strictly increasing code, which
// makes each tree appear exactly once.
//
// Alongside the tree the enumerator maintains the closure automaton of the
// tree's word in one mutable table with an undo log. Adding a pendant tree
// edge whose image already exists in the closed automaton changes nothing;
// gluing a fresh pendant writes two table slots, undone on backtrack. A
// relation site can only appear on a path through the fresh edge, so a hook
// table per letter code keeps the site scan local; only when a site fires
// does a full closure run, and only then is the table checkpointed.
class TreeEnumerator {
 public:
  TreeEnumerator(const Presentation& p, uint32_t max_edges,
                 const Budget& budget)
      : pres_(&p),
        budget_(budget),
        stride_(p.alphabet().letter_codes()),
        max_edges_(max_edges) {
    if (stride_ > 32) {
      throw input_error("idempotent enumeration supports at most 16 letters");
    }
    checkpoints_.resize(max_edges_ + 1);
    image_.assign(max_edges_ + 2, 0);
    parent_.assign(max_edges_ + 2, 0);
    up_code_.assign(max_edges_ + 2, 0);
    free_mask_.assign(max_edges_ + 2, 0);
    build_hooks();
  }

  template <class F>
  void run(F& f) {
    FoldedAutomaton trivial = FoldedAutomaton::trusted(
        pres_->alphabet(), 1, 0, 0,
        std::vector<uint32_t>(stride_, kNoVertex));
    TrackedClosure tc = close_automaton(*pres_, std::move(trivial), budget_);
    if (tc.status != ClosureStatus::Exact) {
      truncated_ = true;
      return;
    }
    table_ = tc.automaton.transitions();
    nverts_ = tc.automaton.vertex_count();
    image_[0] = tc.vertex_map[0];
    free_mask_[0] = full_mask();
    visit(0, 0, -1, f);
  }

  uint64_t visited() const { return visited_; }
  bool hit_truncation() const { return truncated_; }

  // Accessors for the per-tree callback.
  uint32_t current_edges() const { return cur_d_; }
  uint32_t root_image() const { return image_[0]; }

  /// read(root, w) == root on the current closure automaton, i.e. the
  /// current idempotent lies below w in the natural order.
  bool reads_back_to_root(const Word& w) const {
    const uint32_t* tbl = table_.data();
    uint32_t v = image_[0];
    for (Letter x : w) {
      v = tbl[v * stride_ + x.code()];
      if (v == kNoVertex) return false;
    }
    return v == image_[0];
  }

  FoldedAutomaton materialize() const {
    std::vector<uint32_t> trans(
        table_.begin(),
        table_.begin() + static_cast<size_t>(nverts_) * stride_);
    return FoldedAutomaton::trusted(pres_->alphabet(), nverts_, image_[0],
                                    image_[0], std::move(trans));
  }

  /// Canonical Dyck word of the current tree: children in index order,
  /// each contributing letter, subtree, inverse letter.
  Word witness() const {
    Word w;
    w.reserve(2 * cur_d_);
    emit(0, w);
    return w;
  }

  /// Packed canonical table of the current closure automaton: vertices
  /// renumbered in breadth-first order from the root with codes scanned
  /// ascending, one byte per slot (0xff undefined). Keys are equal iff the
  /// based automata are isomorphic. Reuses scratch buffers across calls.
  void canonical_key(std::vector<uint8_t>& out) const {
    if (nverts_ > 0xfe) {
      throw std::runtime_error("packed canonical key supports at most 254 "
                               "vertices");
    }
    if (stamp_.size() < nverts_) {
      stamp_.resize(nverts_, 0);
      newid_.resize(nverts_, 0);
    }
    ++epoch_;
    order_.clear();
    order_.push_back(image_[0]);
    stamp_[image_[0]] = epoch_;
    newid_[image_[0]] = 0;
    out.clear();
    for (size_t i = 0; i < order_.size(); ++i) {
      const uint32_t* row =
          table_.data() + static_cast<size_t>(order_[i]) * stride_;
      for (uint32_t c = 0; c < stride_; ++c) {
        const uint32_t t = row[c];
        if (t == kNoVertex) {
          out.push_back(0xff);
          continue;
        }
        if (stamp_[t] != epoch_) {
          stamp_[t] = epoch_;
          newid_[t] = static_cast<uint32_t>(order_.size());
          order_.push_back(t);
        }
        out.push_back(static_cast<uint8_t>(newid_[t]));
      }
    }
  }

 private:
  enum class Extend { Fast, Glued, Reclosed, Failed };

  struct Checkpoint {
    std::vector<uint32_t> table;
    std::vector<uint32_t> image;
    uint32_t nverts = 0;
  };
  struct Hook {
    // Letter-code sequences around one occurrence of the glued code in a
    // present side: walk back to the candidate start, read the rest of the
    // present side from the far end of the new edge, then compare the
    // missing side from the start.
    std::vector<uint32_t> back;
    std::vector<uint32_t> ahead;
    std::vector<uint32_t> missing;
  };
  struct Side {
    std::vector<uint32_t> present;
    std::vector<uint32_t> missing;
  };
  struct Site {
    uint32_t v;
    uint32_t q;
    const Side* side;
  };

  uint32_t full_mask() const {
    return stride_ == 32 ? 0xffffffffu : (1u << stride_) - 1;
  }

  void build_hooks() {
    hooks_.assign(stride_, {});
    for (const Relation& rel : pres_->relations()) {
      for (int rev = 0; rev < 2; ++rev) {
        const Word& present = rev ? rel.rhs : rel.lhs;
        const Word& missing = rev ? rel.lhs : rel.rhs;
        Side sd;
        for (Letter x : present) sd.present.push_back(x.code());
        for (Letter x : missing) sd.missing.push_back(x.code());
        sides_.push_back(std::move(sd));
        if (present.empty()) {
          empty_side_missing_.emplace_back();
          for (Letter x : missing) {
            empty_side_missing_.back().push_back(x.code());
          }
          continue;
        }
        for (uint32_t pos = 0; pos < present.size(); ++pos) {
          Hook h;
          for (uint32_t j = pos; j-- > 0;) {
            h.back.push_back(present[j].code() ^ 1);
          }
          for (uint32_t j = pos + 1; j < present.size(); ++j) {
            h.ahead.push_back(present[j].code());
          }
          for (Letter x : missing) h.missing.push_back(x.code());
          hooks_[present[pos].code()].push_back(std::move(h));
        }
      }
    }
  }

  void emit(uint32_t v, Word& w) const {
    for (uint32_t i = 1; i <= cur_d_; ++i) {
      if (parent_[i] != v) continue;
      w.push_back(Letter::from_code(up_code_[i]));
      emit(i, w);
      w.push_back(Letter::from_code(up_code_[i]).inverse());
    }
  }

  template <class F>
  void visit(uint32_t d, uint32_t last_p, int last_code, F& f) {
    ++visited_;
    cur_d_ = d;
    f(*this);
    if (d == max_edges_) return;
    for (uint32_t pv = last_p; pv <= d; ++pv) {
      uint32_t start =
          pv == last_p ? static_cast<uint32_t>(last_code + 1) : 0u;
      for (uint32_t code = start; code < stride_; ++code) {
        if (!(free_mask_[pv] >> code & 1u)) continue;
        const uint32_t glued_at = image_[pv];
        Extend kind = extend(d, pv, code);
        if (kind == Extend::Failed) {
          if (truncated_) return;
          continue;
        }
        parent_[d + 1] = pv;
        up_code_[d + 1] = code;
        const uint32_t saved = free_mask_[pv];
        free_mask_[pv] &= ~(1u << code);
        free_mask_[d + 1] = full_mask() & ~(1u << (code ^ 1));
        visit(d + 1, pv, static_cast<int>(code), f);
        free_mask_[pv] = saved;
        if (truncated_) return;
        if (kind == Extend::Reclosed) {
          // The checkpoint holds the post-glue table, so fall through to
          // the glue undo after restoring it.
          const Checkpoint& cp = checkpoints_[d];
          nverts_ = cp.nverts;
          std::copy(cp.table.begin(), cp.table.end(), table_.begin());
          std::copy(cp.image.begin(), cp.image.end(), image_.begin());
        }
        if (kind != Extend::Fast) {
          table_[glued_at * stride_ + code] = kNoVertex;
          --nverts_;
        }
      }
    }
  }

  // Extends the automaton by the tree edge (pv, code), mutating the shared
  // table. The return value tells visit() how to undo it.
  Extend extend(uint32_t d, uint32_t pv, uint32_t code) {
    const uint32_t u = image_[pv];
    const uint32_t existing = table_[u * stride_ + code];
    if (existing != kNoVertex) {
      image_[d + 1] = existing;
      return Extend::Fast;
    }
    if (nverts_ + 1 > budget_.max_vertices) {
      truncated_ = true;
      return Extend::Failed;
    }
    // Glue a fresh pendant vertex. Both table slots involved were
    // undefined, so the result is still folded.
    const uint32_t fresh = nverts_;
    if (table_.size() < static_cast<size_t>(fresh + 1) * stride_) {
      table_.resize(static_cast<size_t>(fresh + 1) * stride_ * 2, kNoVertex);
    }
    uint32_t* row = table_.data() + static_cast<size_t>(fresh) * stride_;
    std::memset(row, 0xff, stride_ * sizeof(uint32_t));
    table_[u * stride_ + code] = fresh;
    row[code ^ 1] = u;
    ++nverts_;
    image_[d + 1] = fresh;

    if (!has_new_site(u, fresh, code)) return Extend::Glued;
    return reclose(d) ? Extend::Reclosed : Extend::Failed;
  }

  uint32_t fresh_vertex() {
    const uint32_t fresh = nverts_;
    if (table_.size() < static_cast<size_t>(fresh + 1) * stride_) {
      table_.resize(static_cast<size_t>(fresh + 1) * stride_ * 2, kNoVertex);
    }
    std::memset(table_.data() + static_cast<size_t>(fresh) * stride_, 0xff,
                stride_ * sizeof(uint32_t));
    ++nverts_;
    return fresh;
  }

  // One round of the closure loop on the mutable table: find every site on
  // the current automaton, then trace each missing side from its start,
  // appending fresh path vertices where the table is undefined and queueing
  // vertex merges where paths must land together. Mirrors the generic
  // engine round for round; the shared table just skips its rebuilds.
  bool close_in_place(uint32_t d) {
    for (uint32_t round = 0; round < budget_.max_rounds; ++round) {
      sites_.clear();
      for (const Side& sd : sides_) {
        for (uint32_t v = 0; v < nverts_; ++v) {
          const uint32_t q = read_codes(v, sd.present);
          if (q == kNoVertex) continue;
          if (read_codes(v, sd.missing) != q) sites_.push_back({v, q, &sd});
        }
      }
      if (sites_.empty()) return true;
      pending_.clear();
      for (const Site& st : sites_) {
        const std::vector<uint32_t>& m = st.side->missing;
        if (m.empty()) {
          pending_.push_back({st.v, st.q});
          continue;
        }
        uint32_t v = st.v;
        for (size_t i = 0; i + 1 < m.size(); ++i) {
          const uint32_t t = table_[v * stride_ + m[i]];
          if (t != kNoVertex) {
            v = t;
            continue;
          }
          if (nverts_ + 1 > budget_.max_vertices) return false;
          const uint32_t fresh = fresh_vertex();
          table_[v * stride_ + m[i]] = fresh;
          table_[static_cast<size_t>(fresh) * stride_ + (m[i] ^ 1)] = v;
          v = fresh;
        }
        const uint32_t c = m.back();
        const uint32_t t = table_[v * stride_ + c];
        if (t != kNoVertex) {
          if (t != st.q) pending_.push_back({t, st.q});
        } else {
          const uint32_t back = table_[st.q * stride_ + (c ^ 1)];
          if (back != kNoVertex) {
            pending_.push_back({back, v});
          } else {
            table_[v * stride_ + c] = st.q;
            table_[st.q * stride_ + (c ^ 1)] = v;
          }
        }
      }
      if (!pending_.empty()) fold_in_place(d);
    }
    return false;
  }

  // Drains queued merges with dense row folding, then compacts the table
  // to representatives numbered by smallest merged vertex and remaps the
  // live tree images.
  void fold_in_place(uint32_t d) {
    uf_.resize(nverts_);
    std::iota(uf_.begin(), uf_.end(), 0u);
    auto find = [&](uint32_t v) {
      while (uf_[v] != v) {
        uf_[v] = uf_[uf_[v]];
        v = uf_[v];
      }
      return v;
    };
    for (size_t head = 0; head < pending_.size(); ++head) {
      uint32_t ra = find(pending_[head].first);
      uint32_t rb = find(pending_[head].second);
      if (ra == rb) continue;
      if (rb < ra) std::swap(ra, rb);
      uint32_t* rowa = table_.data() + static_cast<size_t>(ra) * stride_;
      const uint32_t* rowb = table_.data() + static_cast<size_t>(rb) * stride_;
      for (uint32_t c = 0; c < stride_; ++c) {
        const uint32_t x = rowb[c];
        if (x == kNoVertex) continue;
        if (rowa[c] == kNoVertex) {
          rowa[c] = x;
        } else if (rowa[c] != x) {
          pending_.push_back({rowa[c], x});
        }
      }
      uf_[rb] = ra;
    }
    // Entries still hold stale merged ids; one ascending pass rewrites
    // representative rows into their compacted slots. A write lands at
    // newid[v] <= v, below every unread representative row.
    cib_newid_.resize(nverts_);
    uint32_t n2 = 0;
    for (uint32_t v = 0; v < nverts_; ++v) {
      if (find(v) == v) cib_newid_[v] = n2++;
    }
    for (uint32_t v = 0; v < nverts_; ++v) {
      if (find(v) != v) continue;
      const uint32_t* src = table_.data() + static_cast<size_t>(v) * stride_;
      uint32_t* dst =
          table_.data() + static_cast<size_t>(cib_newid_[v]) * stride_;
      for (uint32_t c = 0; c < stride_; ++c) {
        dst[c] = src[c] == kNoVertex ? kNoVertex : cib_newid_[find(src[c])];
      }
    }
    for (uint32_t i = 0; i <= d + 1; ++i) {
      image_[i] = cib_newid_[find(image_[i])];
    }
    nverts_ = n2;
  }

  uint32_t read_codes(uint32_t v, const std::vector<uint32_t>& codes) const {
    const uint32_t* tbl = table_.data();
    for (uint32_t c : codes) {
      v = tbl[v * stride_ + c];
      if (v == kNoVertex) break;
    }
    return v;
  }

  // The parent automaton was closed, so any new site reads its present side
  // through the fresh edge; walk back from the edge to each candidate start
  // and compare both sides. Relations with an empty side are checked at the
  // fresh vertex only.
  bool has_new_site(uint32_t u, uint32_t fresh, uint32_t code) const {
    for (int side = 0; side < 2; ++side) {
      const uint32_t c = side ? (code ^ 1) : code;
      const uint32_t near = side ? fresh : u;
      const uint32_t far = side ? u : fresh;
      for (const Hook& h : hooks_[c]) {
        const uint32_t start = read_codes(near, h.back);
        if (start == kNoVertex) continue;
        const uint32_t q = read_codes(far, h.ahead);
        if (q == kNoVertex) continue;
        if (read_codes(start, h.missing) != q) return true;
      }
    }
    for (const auto& missing : empty_side_missing_) {
      if (read_codes(fresh, missing) != fresh) return true;
    }
    return false;
  }

  // A site fired: checkpoint the post-glue state at tree depth d, then run
  // the closure loop on the shared table.
  bool reclose(uint32_t d) {
    Checkpoint& cp = checkpoints_[d];
    cp.nverts = nverts_;
    cp.table.assign(table_.begin(),
                    table_.begin() + static_cast<size_t>(nverts_) * stride_);
    cp.image.assign(image_.begin(), image_.begin() + d + 2);
    if (!close_in_place(d)) {
      truncated_ = true;
      return false;
    }
    return true;
  }

  const Presentation* pres_;
  Budget budget_;
  uint32_t stride_;
  uint32_t max_edges_;
  std::vector<uint32_t> table_;
  uint32_t nverts_ = 0;
  std::vector<uint32_t> image_;
  std::vector<Checkpoint> checkpoints_;
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> up_code_;
  std::vector<uint32_t> free_mask_;
  std::vector<std::vector<Hook>> hooks_;
  std::vector<std::vector<uint32_t>> empty_side_missing_;
  std::vector<Side> sides_;
  std::vector<Site> sites_;
  std::vector<std::pair<uint32_t, uint32_t>> pending_;
  std::vector<uint32_t> uf_;
  std::vector<uint32_t> cib_newid_;
  uint64_t visited_ = 0;
  bool truncated_ = false;
  uint32_t cur_d_ = 0;
  mutable std::vector<uint32_t> stamp_;
  mutable std::vector<uint32_t> newid_;
  mutable std::vector<uint32_t> order_;
  mutable uint32_t epoch_ = 0;
};

using StateKey = std::vector<uint8_t>;

/// Same packing as TreeEnumerator::canonical_key, for a finished automaton.
StateKey packed_key(const FoldedAutomaton& a) {
  if (a.vertex_count() > 0xfe) {
    throw std::runtime_error("packed canonical key supports at most 254 "
                             "vertices");
  }
  const uint32_t stride = a.alphabet().letter_codes();
  std::vector<uint32_t> newid(a.vertex_count(), kNoVertex);
  std::vector<uint32_t> order{a.initial()};
  newid[a.initial()] = 0;
  StateKey out;
  out.reserve(static_cast<size_t>(a.vertex_count()) * stride);
  for (size_t i = 0; i < order.size(); ++i) {
    for (uint32_t c = 0; c < stride; ++c) {
      const uint32_t t = a.target_code(order[i], c);
      if (t == kNoVertex) {
        out.push_back(0xff);
        continue;
      }
      if (newid[t] == kNoVertex) {
        newid[t] = static_cast<uint32_t>(order.size());
        order.push_back(t);
      }
      out.push_back(static_cast<uint8_t>(newid[t]));
    }
  }
  return out;
}

struct StateKeyHash {
  size_t operator()(const StateKey& k) const {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : k) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct StateInfo {
  uint32_t min_edges;
  Word witness;
};

using StateMap = std::unordered_map<StateKey, StateInfo, StateKeyHash>;

// All distinct idempotents below s whose Munn tree has at most max_edges
// edges, keyed by the canonical closure automaton, with a minimal witness.
StateMap collect_states_below(const Presentation& p, const Word& s,
                              uint32_t max_edges, const Budget& budget,
                              uint64_t* visited_out) {
  for (Letter x : s) {
    if (!p.alphabet().contains(x)) {
      throw input_error("target word letter outside the alphabet");
    }
  }
  TreeEnumerator en(p, max_edges, budget);
  StateMap states;
  StateKey key;
  auto collect = [&](const TreeEnumerator& t) {
    if (!t.reads_back_to_root(s)) return;
    t.canonical_key(key);
    uint32_t d = t.current_edges();
    auto it = states.find(key);
    if (it == states.end()) {
      states.emplace(key, StateInfo{d, t.witness()});
    } else if (d < it->second.min_edges) {
      it->second.min_edges = d;
      it->second.witness = t.witness();
    }
  };
  en.run(collect);
  if (en.hit_truncation()) {
    throw std::runtime_error(
        "closure budget exhausted during idempotent enumeration");
  }
  if (visited_out) *visited_out = en.visited();
  return states;
}

struct StateEntry {
  const StateKey* key;
  uint32_t min_edges;
  const Word* witness;
};

std::vector<StateEntry> sorted_entries(const StateMap& states) {
  std::vector<StateEntry> entries;
  entries.reserve(states.size());
  for (const auto& [key, info] : states) {
    entries.push_back(StateEntry{&key, info.min_edges, &info.witness});
  }
  std::sort(entries.begin(), entries.end(),
            [](const StateEntry& a, const StateEntry& b) {
              if (a.min_edges != b.min_edges) return a.min_edges < b.min_edges;
              return *a.witness < *b.witness;
            });
  return entries;
}

// f <= g in the natural order iff the closure automaton of f reads a
// witness of g from its basepoint back to its basepoint. The packed key is
// the transition table of that automaton with basepoint 0.
bool state_below(const StateKey& f, uint32_t stride, const Word& g_witness) {
  uint32_t v = 0;
  for (Letter x : g_witness) {
    const uint8_t t = f[v * stride + x.code()];
    if (t == 0xff) return false;
    v = t;
  }
  return v == 0;
}

}  // namespace

void for_each_idempotent_tree(
    const Presentation& p, uint32_t max_edges, const Budget& budget,
    const std::function<void(const EnumeratedState&)>& visit) {
  TreeEnumerator en(p, max_edges, budget);
  auto wrap = [&](const TreeEnumerator& t) {
    FoldedAutomaton a = t.materialize();
    Word w = t.witness();
    visit(EnumeratedState{a, a.initial(), t.current_edges(), w});
  };
  en.run(wrap);
  if (en.hit_truncation()) {
    throw std::runtime_error(
        "closure budget exhausted during idempotent enumeration");
  }
}

MuSearchReport mu_falsifier_search(const Presentation& p, const Word& s,
                                   const Word& e, uint32_t max_len,
                                   const Budget& budget) {
  Verdict idem = is_idempotent(p, e, budget);
  if (idem == Verdict::No) {
    throw input_error("candidate word is not idempotent");
  }
  Verdict below = leq(p, e, s, budget);
  if (below == Verdict::No) {
    throw input_error("candidate word is not below the target");
  }
  if (idem == Verdict::Unknown || below == Verdict::Unknown) {
    throw std::runtime_error("budget too small to validate the candidate");
  }
  ClosureResult ce = closure(p, e, budget);
  if (ce.status != ClosureStatus::Exact) {
    throw std::runtime_error("budget too small to close the candidate");
  }
  StateKey e_key = packed_key(ce.automaton);
  const uint32_t stride = p.alphabet().letter_codes();

  MuSearchReport report;
  report.target = s;
  report.max_len = max_len;
  StateMap states =
      collect_states_below(p, s, max_len / 2, budget, &report.words_enumerated);
  for (const StateEntry& entry : sorted_entries(states)) {
    Word w = *entry.witness;
    report.candidates_confirmed.push_back(w);
    // A falsifier is an idempotent strictly between e and s.
    if (*entry.key != e_key && state_below(e_key, stride, w)) {
      report.strict_between_found.emplace_back(e, std::move(w));
    }
  }
  return report;
}

std::vector<uint64_t> mu_candidate_growth(const Presentation& p,
                                          const Word& s,
                                          const std::vector<uint32_t>& lens,
                                          const Budget& budget) {
  if (lens.empty()) return {};
  uint32_t max_len = *std::max_element(lens.begin(), lens.end());
  StateMap states =
      collect_states_below(p, s, max_len / 2, budget, nullptr);
  std::vector<StateEntry> entries = sorted_entries(states);
  const uint32_t stride = p.alphabet().letter_codes();

  std::vector<uint64_t> counts;
  counts.reserve(lens.size());
  for (uint32_t len : lens) {
    // Maximal elements of the horizon-restricted poset: nothing in the
    // same horizon lies strictly above them.
    uint64_t maximal = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
      if (2 * entries[i].min_edges > len) continue;
      bool dominated = false;
      for (size_t j = 0; j < entries.size() && !dominated; ++j) {
        if (j == i || 2 * entries[j].min_edges > len) continue;
        dominated = state_below(*entries[i].key, stride, *entries[j].witness);
      }
      if (!dominated) ++maximal;
    }
    counts.push_back(maximal);
  }
  return counts;
}

}  // namespace ik
