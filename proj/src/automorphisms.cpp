#include "vnc/automorphisms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace vnc {

namespace {

using Pos = std::uint32_t;

// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`
// and are identified by their start position, which never changes once a
// cell exists.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<Pos> pos;       // vertex -> position in lab
  std::vector<Pos> start_of;  // vertex -> start of its cell
  std::vector<Pos> end_at;    // cell start -> one past its end
  std::size_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
};

class TraceHash {
 public:
  void mix(std::uint64_t v) {
    // splitmix64 step over the running state.
    std::uint64_t z = state_ ^ (v + 0x9e3779b97f4a7c15ULL + (state_ << 6) + (state_ >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    state_ = z ^ (z >> 31);
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0x243f6a8885a308d3ULL;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  void absorb(const Permutation& g) {
    for (Point i = 0; i < g.degree(); ++i) unite(i, g[i]);
  }
  std::vector<std::size_t> parent;
};

// Equitable refinement. All decisions depend only on cell positions and
// neighbour counts, so the result commutes with relabelling the graph.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(g.order(), 0), cell_mark_(g.order(), 0), in_queue_(g.order(), 0) {}

  // Cells by (degree, sorted neighbour degrees, triangles through v).
  std::pair<Partition, std::uint64_t> initial() {
    const std::size_t n = g_.order();
    using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::size_t>;
    std::vector<Key> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> nd;
      std::size_t triangles = 0;
      const auto nb = g_.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        nd.push_back(g_.degree(nb[i]));
        for (std::size_t j = i + 1; j < nb.size(); ++j) triangles += g_.adjacent(nb[i], nb[j]);
      }
      std::sort(nd.begin(), nd.end());
      keys[v] = Key{nb.size(), std::move(nd), triangles};
    }
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), Vertex{0});
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
    p.pos.resize(n);
    p.start_of.resize(n);
    p.end_at.assign(n, 0);
    TraceHash h;
    std::vector<Pos> seeds;
    for (Pos i = 0; i < n;) {
      Pos j = i;
      while (j < n && keys[p.lab[j]] == keys[p.lab[i]]) ++j;
      for (Pos k = i; k < j; ++k) {
        p.pos[p.lab[k]] = k;
        p.start_of[p.lab[k]] = i;
      }
      p.end_at[i] = j;
      ++p.cells;
      seeds.push_back(i);
      h.mix(j - i);
      h.mix(std::get<0>(keys[p.lab[i]]));
      h.mix(std::get<2>(keys[p.lab[i]]));
      i = j;
    }
    h.mix(refine(p, seeds));
    return {std::move(p), h.value()};
  }

  std::uint64_t individualize(Partition& p, Vertex v) {
    const Pos s = p.start_of[v];
    const Pos e = p.end_at[s];
    const Pos pv = p.pos[v];
    const Vertex u = p.lab[s];
    p.lab[s] = v;
    p.lab[pv] = u;
    p.pos[v] = s;
    p.pos[u] = pv;
    p.end_at[s] = s + 1;
    p.end_at[s + 1] = e;
    for (Pos k = s + 1; k < e; ++k) p.start_of[p.lab[k]] = s + 1;
    ++p.cells;
    const Pos seeds[] = {s};
    TraceHash h;
    h.mix(s);
    h.mix(refine(p, seeds));
    return h.value();
  }

  // First smallest non-singleton cell.
  static Pos target_cell(const Partition& p) {
    Pos best = static_cast<Pos>(p.lab.size());
    Pos best_size = best + 1;
    for (Pos s = 0; s < p.lab.size(); s = p.end_at[s]) {
      const Pos size = p.end_at[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  std::uint64_t refine(Partition& p, std::span<const Pos> seeds) {
    TraceHash h;
    for (Pos s : seeds) enqueue(s);
    while (!queue_.empty()) {
      const Pos w = queue_.front();
      queue_.pop_front();
      in_queue_[w] = 0;
      if (p.discrete()) continue;
      const Pos we = p.end_at[w];
      touched_.clear();
      for (Pos i = w; i < we; ++i) {
        for (Vertex x : g_.neighbors(p.lab[i])) {
          if (count_[x]++ == 0) touched_.push_back(x);
        }
      }
      ++stamp_;
      touched_cells_.clear();
      for (Vertex x : touched_) {
        const Pos c = p.start_of[x];
        if (cell_mark_[c] != stamp_) {
          cell_mark_[c] = stamp_;
          touched_cells_.push_back(c);
        }
      }
      std::sort(touched_cells_.begin(), touched_cells_.end());
      h.mix(w);
      for (Pos c : touched_cells_) {
        h.mix(c);
        if (p.end_at[c] - c > 1) {
          split_cell(p, c, h);
        } else {
          h.mix(count_[p.lab[c]]);
        }
      }
      for (Vertex x : touched_) count_[x] = 0;
    }
    h.mix(p.cells);
    return h.value();
  }

 private:
  void enqueue(Pos s) {
    if (!in_queue_[s]) {
      in_queue_[s] = 1;
      queue_.push_back(s);
    }
  }

  void split_cell(Partition& p, Pos s, TraceHash& h) {
    const Pos e = p.end_at[s];
    std::sort(p.lab.begin() + s, p.lab.begin() + e, [&](Vertex a, Vertex b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });
    fragments_.clear();
    for (Pos i = s; i < e; ++i) {
      p.pos[p.lab[i]] = i;
      if (i == s || count_[p.lab[i]] != count_[p.lab[i - 1]]) fragments_.push_back(i);
    }
    if (fragments_.size() == 1) {
      h.mix(count_[p.lab[s]]);
      return;
    }
    fragments_.push_back(e);
    const std::size_t k = fragments_.size() - 1;
    std::size_t largest = 0;
    for (std::size_t f = 0; f < k; ++f) {
      const Pos fs = fragments_[f];
      const Pos fe = fragments_[f + 1];
      p.end_at[fs] = fe;
      for (Pos i = fs; i < fe; ++i) p.start_of[p.lab[i]] = fs;
      h.mix(count_[p.lab[fs]]);
      h.mix(fe - fs);
      if (fe - fs > fragments_[largest + 1] - fragments_[largest]) largest = f;
    }
    p.cells += k - 1;
    const bool whole_queued = in_queue_[s] != 0;
    for (std::size_t f = 0; f < k; ++f) {
      if (whole_queued || f != largest) enqueue(fragments_[f]);
    }
  }

  const Graph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<Vertex> touched_;
  std::vector<Pos> touched_cells_;
  std::vector<Pos> fragments_;
  std::vector<std::uint32_t> cell_mark_;
  std::uint32_t stamp_ = 0;
  std::vector<char> in_queue_;
  std::deque<Pos> queue_;
};

std::vector<Vertex> cell_members(const Partition& p, Pos start) {
  std::vector<Vertex> out(p.lab.begin() + start, p.lab.begin() + p.end_at[start]);
  std::sort(out.begin(), out.end());
  return out;
}

using EdgeCode = std::vector<std::pair<Pos, Pos>>;

EdgeCode relabeled_edges(const Graph& g, const Partition& leaf) {
  EdgeCode code;
  code.reserve(g.size());
  for (const auto& [u, v] : g.edges()) {
    const Pos a = leaf.pos[u];
    const Pos b = leaf.pos[v];
    code.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(code.begin(), code.end());
  return code;
}

// Lexicographic comparison where a proper prefix counts as larger: leaves
// deeper than the incumbent never beat it once the shared prefix ties.
int compare_traces(const std::vector<std::uint64_t>& node, const std::vector<std::uint64_t>& best) {
  const std::size_t m = std::min(node.size(), best.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (node[i] != best[i]) return node[i] < best[i] ? -1 : 1;
  }
  return node.size() > best.size() ? 1 : 0;
}

class SearchTree {
 public:
  explicit SearchTree(const Graph& g) : g_(g), refiner_(g) {
    auto [root, trace] = refiner_.initial();
    path_parts_.push_back(std::move(root));
    path_traces_.push_back(trace);
    while (!path_parts_.back().discrete()) {
      Partition next = path_parts_.back();
      const Pos target = Refiner::target_cell(next);
      const Vertex v = cell_members(next, target).front();
      path_targets_.push_back(target);
      path_vertices_.push_back(v);
      path_traces_.push_back(refiner_.individualize(next, v));
      path_parts_.push_back(std::move(next));
    }
  }

  AutomorphismResult automorphisms() {
    const std::size_t n = g_.order();
    const std::size_t depth = path_vertices_.size();
    std::vector<Permutation> gens;
    std::uint64_t product = 1;
    UnionFind uf(n);
    for (std::size_t k = depth; k-- > 0;) {
      const Vertex v = path_vertices_[k];
      std::vector<Vertex> failed;
      for (Vertex w : cell_members(path_parts_[k], path_targets_[k])) {
        if (w == v || uf.find(w) == uf.find(v)) continue;
        if (std::any_of(failed.begin(), failed.end(),
                        [&](Vertex f) { return uf.find(f) == uf.find(w); })) {
          continue;
        }
        if (auto g = find_equivalent(path_parts_[k], w, k + 1)) {
          uf.absorb(*g);
          gens.push_back(std::move(*g));
        } else {
          failed.push_back(w);
        }
      }
      std::uint64_t orbit = 0;
      for (Vertex w : cell_members(path_parts_[k], path_targets_[k])) orbit += uf.find(w) == uf.find(v);
      if (__builtin_mul_overflow(product, orbit, &product)) {
        throw BoundExceeded("automorphism group order does not fit in 64 bits");
      }
    }
    AutomorphismResult result;
    result.group = PermutationGroup(n, gens);
    result.generators = std::move(gens);
    result.order = result.group.order();
    if (result.order != product) {
      throw std::logic_error("automorphism search: orbit product disagrees with group order");
    }
    result.orbits = orbits(result.group);
    result.search_nodes = nodes_;
    return result;
  }

  CanonicalForm canonical(const PermutationGroup& aut) {
    const PermutationGroup rebased(g_.order(), aut.generators(), path_vertices_);
    for (const auto& level : rebased.chain().levels()) {
      all_strong_.insert(all_strong_.end(), level.generators.begin(), level.generators.end());
    }
    levels_ = &rebased.chain().levels();
    std::vector<Vertex> seq;
    std::vector<std::uint64_t> traces{path_traces_.front()};
    explore(path_parts_.front(), seq, traces, true);
    levels_ = nullptr;

    std::vector<Point> labels(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) labels[v] = best_leaf_.pos[v];
    CanonicalForm out;
    out.labeling = Permutation(std::move(labels));
    out.graph = g_.relabeled(out.labeling);
    out.certificate = "vnc-cert/1 " + std::to_string(g_.order()) + " " + std::to_string(g_.size()) + " |";
    for (const auto& [u, v] : best_code_) {
      out.certificate += ' ';
      out.certificate += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
  }

 private:
  std::optional<Permutation> find_equivalent(const Partition& parent, Vertex w, std::size_t depth) {
    ++nodes_;
    Partition q = parent;
    if (refiner_.individualize(q, w) != path_traces_[depth]) return std::nullopt;
    const std::size_t leaf_depth = path_vertices_.size();
    if (q.discrete()) {
      if (depth != leaf_depth) return std::nullopt;
      std::vector<Point> images(g_.order());
      const Partition& first = path_parts_.back();
      for (std::size_t i = 0; i < images.size(); ++i) images[first.lab[i]] = q.lab[i];
      Permutation g(std::move(images));
      if (g_.is_automorphism(g)) return g;
      return std::nullopt;
    }
    if (depth >= leaf_depth) return std::nullopt;
    const Pos target = Refiner::target_cell(q);
    if (target != path_targets_[depth]) return std::nullopt;
    for (Vertex u : cell_members(q, target)) {
      if (auto g = find_equivalent(q, u, depth + 1)) return g;
    }
    return std::nullopt;
  }

  void explore(const Partition& p, std::vector<Vertex>& seq, std::vector<std::uint64_t>& traces,
               bool on_first_path) {
    ++nodes_;
    if (have_best_ && compare_traces(traces, best_traces_) > 0) return;
    if (p.discrete()) {
      EdgeCode code = relabeled_edges(g_, p);
      const int cmp = have_best_ ? compare_traces(traces, best_traces_) : -1;
      if (!have_best_ || cmp < 0 || (cmp == 0 && code < best_code_)) {
        have_best_ = true;
        best_traces_ = traces;
        best_code_ = std::move(code);
        best_leaf_ = p;
      }
      return;
    }
    // Children in one orbit of a subgroup of Aut fixing `seq` pointwise have
    // identical subtrees up to relabelling; explore one per orbit.
    UnionFind uf(g_.order());
    if (on_first_path && seq.size() < levels_->size()) {
      for (const Permutation& g : (*levels_)[seq.size()].generators) uf.absorb(g);
    } else if (!on_first_path) {
      for (const Permutation& g : all_strong_) {
        if (std::all_of(seq.begin(), seq.end(), [&](Vertex s) { return g[s] == s; })) uf.absorb(g);
      }
    }
    const Pos target = Refiner::target_cell(p);
    std::vector<std::size_t> explored_roots;
    for (Vertex u : cell_members(p, target)) {
      const std::size_t root = uf.find(u);
      if (std::find(explored_roots.begin(), explored_roots.end(), root) != explored_roots.end()) continue;
      explored_roots.push_back(root);
      Partition q = p;
      traces.push_back(refiner_.individualize(q, u));
      seq.push_back(u);
      const bool stays = on_first_path && seq.size() <= path_vertices_.size() &&
                         path_vertices_[seq.size() - 1] == u;
      explore(q, seq, traces, stays);
      seq.pop_back();
      traces.pop_back();
    }
  }

  const Graph& g_;
  Refiner refiner_;
  std::vector<Partition> path_parts_;
  std::vector<Pos> path_targets_;
  std::vector<Vertex> path_vertices_;
  std::vector<std::uint64_t> path_traces_;
  std::uint64_t nodes_ = 0;

  const std::vector<StabilizerChain::Level>* levels_ = nullptr;
  std::vector<Permutation> all_strong_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_traces_;
  EdgeCode best_code_;
  Partition best_leaf_;
};

void check_bound(const Graph& x, std::size_t bound) {
  if (x.order() > bound) {
    throw BoundExceeded("graph on " + std::to_string(x.order()) + " vertices exceeds solver bound " +
                        std::to_string(bound));
  }
}

}  // namespace

AutomorphismResult automorphism_group(const Graph& x, std::size_t bound) {
  check_bound(x, bound);
  SearchTree tree(x);
  return tree.automorphisms();
}

CanonicalForm canonical_form(const Graph& x, std::size_t bound) {
  check_bound(x, bound);
  SearchTree tree(x);
  const AutomorphismResult aut = tree.automorphisms();
  return tree.canonical(aut.group);
}

std::optional<Permutation> are_isomorphic(const Graph& x, const Graph& y, std::size_t bound) {
  check_bound(x, bound);
  check_bound(y, bound);
  if (x.order() != y.order() || x.size() != y.size()) return std::nullopt;
  if (x.degree_sequence() != y.degree_sequence()) return std::nullopt;
  if (girth(x) != girth(y)) return std::nullopt;
  for (std::size_t s = 1; s <= 3; ++s) {
    if (count_s_arcs(x, s) != count_s_arcs(y, s)) return std::nullopt;
  }
  const CanonicalForm cx = canonical_form(x, bound);
  const CanonicalForm cy = canonical_form(y, bound);
  if (cx.certificate != cy.certificate) return std::nullopt;
  // x --labeling--> canonical --labeling_y^-1--> y
  Permutation map = compose(cx.labeling, cy.labeling.inverse());
  for (const auto& [u, v] : x.edges()) {
    if (!y.adjacent(map[u], map[v])) throw std::logic_error("isomorphism certificate mismatch");
  }
  return map;
}

}  // namespace vnc
