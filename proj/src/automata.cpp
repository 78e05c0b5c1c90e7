#include "ik/automata.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ik {

EdgeGraph::EdgeGraph(Alphabet alphabet, uint32_t vertex_count,
                     uint32_t initial, uint32_t terminal)
    : alphabet_(std::move(alphabet)),
      vertex_count_(vertex_count),
      initial_(initial),
      terminal_(terminal) {
  if (vertex_count_ == 0) {
    throw input_error("an edge graph needs at least one vertex");
  }
  if (initial_ >= vertex_count_ || terminal_ >= vertex_count_) {
    throw input_error("root vertex out of range");
  }
}

uint32_t EdgeGraph::add_vertex() { return vertex_count_++; }

void EdgeGraph::add_edge(uint32_t from, uint32_t letter, uint32_t to) {
  if (from >= vertex_count_ || to >= vertex_count_) {
    throw input_error("edge endpoint out of range");
  }
  if (letter >= alphabet_.size()) {
    throw input_error("edge letter out of range");
  }
  edges_.push_back(Edge{from, letter, to});
}

void EdgeGraph::add_path(uint32_t from, const Word& w, uint32_t to) {
  if (w.empty()) {
    identify(from, to);
    return;
  }
  uint32_t cur = from;
  for (size_t i = 0; i < w.size(); ++i) {
    uint32_t next = (i + 1 == w.size()) ? to : add_vertex();
    Letter x = w[i];
    if (x.is_positive()) {
      add_edge(cur, x.base(), next);
    } else {
      add_edge(next, x.base(), cur);
    }
    cur = next;
  }
}

void EdgeGraph::identify(uint32_t a, uint32_t b) {
  if (a >= vertex_count_ || b >= vertex_count_) {
    throw input_error("identification vertex out of range");
  }
  identifications_.emplace_back(a, b);
}

void EdgeGraph::set_roots(uint32_t initial, uint32_t terminal) {
  if (initial >= vertex_count_ || terminal >= vertex_count_) {
    throw input_error("root vertex out of range");
  }
  initial_ = initial;
  terminal_ = terminal;
}

EdgeGraph linear_automaton(const Alphabet& alphabet, const Word& w) {
  for (Letter x : w) {
    if (!alphabet.contains(x)) {
      throw input_error("word letter outside the alphabet");
    }
  }
  EdgeGraph g(alphabet, static_cast<uint32_t>(w.size()) + 1, 0,
              static_cast<uint32_t>(w.size()));
  for (size_t i = 0; i < w.size(); ++i) {
    Letter x = w[i];
    uint32_t p = static_cast<uint32_t>(i);
    uint32_t q = p + 1;
    if (x.is_positive()) {
      g.add_edge(p, x.base(), q);
    } else {
      g.add_edge(q, x.base(), p);
    }
  }
  return g;
}

FoldedAutomaton::FoldedAutomaton(Alphabet alphabet, uint32_t vertex_count,
                                 uint32_t initial, uint32_t terminal,
                                 std::vector<uint32_t> transitions)
    : alphabet_(std::move(alphabet)),
      vertex_count_(vertex_count),
      initial_(initial),
      terminal_(terminal),
      stride_(alphabet_.letter_codes()),
      transitions_(std::move(transitions)) {
  check_valid();
}

FoldedAutomaton FoldedAutomaton::trusted(Alphabet alphabet,
                                         uint32_t vertex_count,
                                         uint32_t initial, uint32_t terminal,
                                         std::vector<uint32_t> transitions) {
  FoldedAutomaton a;
  a.alphabet_ = std::move(alphabet);
  a.vertex_count_ = vertex_count;
  a.initial_ = initial;
  a.terminal_ = terminal;
  a.stride_ = a.alphabet_.letter_codes();
  a.transitions_ = std::move(transitions);
  return a;
}

void FoldedAutomaton::check_valid() const {
  if (vertex_count_ == 0) {
    throw std::logic_error("automaton has no vertices");
  }
  if (initial_ >= vertex_count_ || terminal_ >= vertex_count_) {
    throw std::logic_error("automaton root out of range");
  }
  if (transitions_.size() !=
      static_cast<size_t>(vertex_count_) * stride_) {
    throw std::logic_error("transition table has the wrong shape");
  }
  for (uint32_t v = 0; v < vertex_count_; ++v) {
    for (uint32_t code = 0; code < stride_; ++code) {
      uint32_t q = transitions_[v * stride_ + code];
      if (q == kNoVertex) continue;
      if (q >= vertex_count_) {
        throw std::logic_error("transition target out of range");
      }
      // Involutivity doubles as determinism here: q --x^-1--> must come
      // back to exactly v.
      if (transitions_[q * stride_ + (code ^ 1)] != v) {
        throw std::logic_error("automaton is not involutive");
      }
    }
  }
  // Trim: with both letter directions present, reachability from the
  // initial vertex is undirected connectivity.
  std::vector<char> seen(vertex_count_, 0);
  std::vector<uint32_t> queue{initial_};
  seen[initial_] = 1;
  size_t head = 0;
  size_t found = 1;
  while (head < queue.size()) {
    uint32_t v = queue[head++];
    for (uint32_t code = 0; code < stride_; ++code) {
      uint32_t q = transitions_[v * stride_ + code];
      if (q != kNoVertex && !seen[q]) {
        seen[q] = 1;
        ++found;
        queue.push_back(q);
      }
    }
  }
  if (found != vertex_count_) {
    throw std::logic_error("automaton is not trim");
  }
}

std::vector<Edge> FoldedAutomaton::positive_edges() const {
  std::vector<Edge> out;
  for (uint32_t v = 0; v < vertex_count_; ++v) {
    for (uint32_t base = 0; base < alphabet_.size(); ++base) {
      uint32_t q = transitions_[v * stride_ + 2 * base];
      if (q != kNoVertex) out.push_back(Edge{v, base, q});
    }
  }
  // Row-major scan already yields (from, letter, to) order.
  return out;
}

uint64_t FoldedAutomaton::edge_count(uint32_t base) const {
  uint64_t n = 0;
  for (uint32_t v = 0; v < vertex_count_; ++v) {
    if (transitions_[v * stride_ + 2 * base] != kNoVertex) ++n;
  }
  return n;
}

uint64_t FoldedAutomaton::edge_count() const {
  uint64_t n = 0;
  for (uint32_t base = 0; base < alphabet_.size(); ++base) {
    n += edge_count(base);
  }
  return n;
}

std::vector<uint32_t> FoldedAutomaton::loop_vertices(uint32_t base) const {
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < vertex_count_; ++v) {
    if (transitions_[v * stride_ + 2 * base] == v) out.push_back(v);
  }
  return out;
}

std::optional<uint32_t> read_word(const FoldedAutomaton& a, uint32_t from,
                                  const Word& w) {
  uint32_t v = from;
  for (Letter x : w) {
    if (!a.alphabet().contains(x)) {
      throw input_error("word letter outside the automaton alphabet");
    }
    v = a.target(v, x);
    if (v == kNoVertex) return std::nullopt;
  }
  return v;
}

bool accepts(const FoldedAutomaton& a, const Word& w) {
  auto end = read_word(a, a.initial(), w);
  return end && *end == a.terminal();
}

bool isomorphic(const FoldedAutomaton& a, const FoldedAutomaton& b) {
  if (a.alphabet() != b.alphabet()) return false;
  if (a.vertex_count() != b.vertex_count()) return false;
  const uint32_t stride = a.stride();
  // Determinism plus trimness force the only possible map, built by a
  // parallel traversal from the initial vertices.
  std::vector<uint32_t> map(a.vertex_count(), kNoVertex);
  std::vector<uint32_t> queue;
  map[a.initial()] = b.initial();
  queue.push_back(a.initial());
  size_t head = 0;
  while (head < queue.size()) {
    uint32_t va = queue[head++];
    uint32_t vb = map[va];
    for (uint32_t code = 0; code < stride; ++code) {
      uint32_t qa = a.target_code(va, code);
      uint32_t qb = b.target_code(vb, code);
      if ((qa == kNoVertex) != (qb == kNoVertex)) return false;
      if (qa == kNoVertex) continue;
      if (map[qa] == kNoVertex) {
        map[qa] = qb;
        queue.push_back(qa);
      } else if (map[qa] != qb) {
        return false;
      }
    }
  }
  // Trimness makes the traversal exhaustive; equal vertex counts plus a
  // defined map everywhere give bijectivity.
  return map[a.terminal()] == b.terminal();
}

FoldedAutomaton canonical_form(const FoldedAutomaton& a) {
  const uint32_t n = a.vertex_count();
  const uint32_t k = static_cast<uint32_t>(a.alphabet().size());
  const uint32_t stride = a.stride();
  std::vector<uint32_t> order(n, kNoVertex);  // old -> new
  std::vector<uint32_t> queue;
  order[a.initial()] = 0;
  queue.push_back(a.initial());
  size_t head = 0;
  uint32_t next = 1;
  while (head < queue.size()) {
    uint32_t v = queue[head++];
    // Positive letters ascending, then negative letters ascending.
    for (uint32_t pass = 0; pass < 2; ++pass) {
      for (uint32_t base = 0; base < k; ++base) {
        uint32_t q = a.target_code(v, 2 * base + pass);
        if (q != kNoVertex && order[q] == kNoVertex) {
          order[q] = next++;
          queue.push_back(q);
        }
      }
    }
  }
  std::vector<uint32_t> trans(static_cast<size_t>(n) * stride, kNoVertex);
  for (uint32_t v = 0; v < n; ++v) {
    for (uint32_t code = 0; code < stride; ++code) {
      uint32_t q = a.target_code(v, code);
      if (q != kNoVertex) {
        trans[order[v] * stride + code] = order[q];
      }
    }
  }
  return FoldedAutomaton::trusted(a.alphabet(), n, order[a.initial()],
                                  order[a.terminal()], std::move(trans));
}

size_t AutomatonHash::operator()(const FoldedAutomaton& a) const {
  // FNV-1a over the table and roots.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(a.vertex_count());
  mix(a.initial());
  mix(a.terminal());
  for (uint32_t t : a.transitions()) mix(t);
  return static_cast<size_t>(h);
}

}  // namespace ik
