#include "punctri/canon.hpp"

#include <algorithm>
#include <deque>

#include "punctri/parallel.hpp"

namespace punctri {

IncidenceGraph incidence_graph(const Triangulation& t) {
  IncidenceGraph g;
  g.vertex_nodes = t.vertex_count();
  g.face_nodes = t.face_count();
  g.adjacency.assign(g.node_count(), {});
  for (int f = 0; f < t.face_count(); ++f) {
    const int node = g.vertex_nodes + f;
    for (Vertex v : t.faces()[f]) {
      g.adjacency[node].push_back(v);
      g.adjacency[v].push_back(node);
    }
  }
  return g;
}

std::strong_ordering CanonicalKey::operator<=>(const CanonicalKey& other) const {
  if (auto c = vertex_count <=> other.vertex_count; c != 0) return c;
  if (auto c = faces.size() <=> other.faces.size(); c != 0) return c;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (auto c = faces[i] <=> other.faces[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string CanonicalKey::bytes() const {
  std::string out;
  out.reserve(4 + 6 * faces.size());
  auto put = [&](unsigned x) {
    out.push_back(static_cast<char>((x >> 8) & 0xff));
    out.push_back(static_cast<char>(x & 0xff));
  };
  put(static_cast<unsigned>(vertex_count));
  put(static_cast<unsigned>(faces.size()));
  for (const Face& f : faces) {
    for (Vertex v : f) put(static_cast<unsigned>(v));
  }
  return out;
}

Triangulation CanonicalKey::to_triangulation(std::string label) const {
  return Triangulation::build(vertex_count, faces, std::move(label));
}

namespace {

// Ordered partition of the nodes of B_T. Cells are contiguous position
// ranges; a cell is named by its first position.
struct Partition {
  std::vector<int> lab;       // position -> node
  std::vector<int> pos;       // node -> position
  std::vector<int> cell;      // position -> start of its cell
  std::vector<int> cell_end;  // start -> one past its last position
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

using Trace = std::vector<int>;

int compare(const std::vector<int>& a, const std::vector<int>& b) {
  const auto c = std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

class CanonSearch {
 public:
  explicit CanonSearch(const Triangulation& t) : t_(t), g_(incidence_graph(t)) {
    const int n = g_.node_count();
    count_.assign(n, 0);
    queued_.assign(n, 0);
  }

  CanonicalForm run() {
    const int n = g_.node_count();
    Partition p;
    p.lab.resize(n);
    p.pos.resize(n);
    p.cell.resize(n);
    p.cell_end.assign(n, 0);
    for (int i = 0; i < n; ++i) p.lab[i] = i;
    auto color = [&](int node) {
      return std::pair{g_.is_face_node(node) ? 1 : 0, static_cast<int>(g_.adjacency[node].size())};
    };
    std::sort(p.lab.begin(), p.lab.end(), [&](int x, int y) { return color(x) < color(y); });

    Trace trace;
    std::vector<int> queue;
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && color(p.lab[j]) == color(p.lab[i])) ++j;
      for (int k = i; k < j; ++k) {
        p.cell[k] = i;
        p.pos[p.lab[k]] = k;
      }
      p.cell_end[i] = j;
      ++p.cells;
      queue.push_back(i);
      trace.push_back(color(p.lab[i]).first);
      trace.push_back(color(p.lab[i]).second);
      trace.push_back(j - i);
      i = j;
    }
    refine(p, queue, trace);
    search(p, std::move(trace), 0);

    CanonicalForm out;
    out.labeling = best_labeling_;
    out.key.vertex_count = t_.vertex_count();
    out.key.faces = best_faces_;
    return out;
  }

 private:
  // Splits cells until every node has, for each cell, a count of
  // neighbours there that depends only on its own cell. Appends a
  // relabelling-invariant record of each split to `trace`.
  void refine(Partition& p, const std::vector<int>& initial, Trace& trace) {
    std::deque<int> queue;
    for (int s : initial) {
      queue.push_back(s);
      queued_[s] = 1;
    }
    std::vector<int> touched;
    std::vector<int> touched_cells;
    while (!queue.empty() && !p.discrete()) {
      const int w = queue.front();
      queue.pop_front();
      queued_[w] = 0;

      touched.clear();
      for (int i = w; i < p.cell_end[w]; ++i) {
        for (int nb : g_.adjacency[p.lab[i]]) {
          if (count_[nb]++ == 0) touched.push_back(nb);
        }
      }
      touched_cells.clear();
      for (int node : touched) touched_cells.push_back(p.cell[p.pos[node]]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                          touched_cells.end());

      for (int x : touched_cells) {
        const int end = p.cell_end[x];
        if (end - x == 1) continue;
        std::sort(p.lab.begin() + x, p.lab.begin() + end,
                  [&](int a, int b) { return count_[a] < count_[b]; });
        if (count_[p.lab[x]] == count_[p.lab[end - 1]]) continue;
        trace.push_back(x);
        int start = x;
        for (int i = x; i <= end; ++i) {
          if (i < end && count_[p.lab[i]] == count_[p.lab[start]]) continue;
          p.cell_end[start] = i;
          for (int k = start; k < i; ++k) {
            p.cell[k] = start;
            p.pos[p.lab[k]] = k;
          }
          trace.push_back(i - start);
          trace.push_back(count_[p.lab[start]]);
          if (!queued_[start]) {
            queue.push_back(start);
            queued_[start] = 1;
          }
          if (start != x) ++p.cells;
          start = i;
        }
        trace.push_back(-1);
      }
      for (int node : touched) count_[node] = 0;
    }
    for (int s : queue) queued_[s] = 0;
  }

  // First smallest non-singleton cell, preferring vertex cells; once every
  // vertex is a singleton the face cells follow.
  int target_cell(const Partition& p) const {
    const int n = static_cast<int>(p.lab.size());
    for (const auto& [from, to] : {std::pair{0, g_.vertex_nodes}, std::pair{g_.vertex_nodes, n}}) {
      int best = -1;
      int best_size = 0;
      for (int s = from; s < to; s = p.cell_end[s]) {
        const int size = p.cell_end[s] - s;
        if (size > 1 && (best < 0 || size < best_size)) {
          best = s;
          best_size = size;
        }
      }
      if (best >= 0) return best;
    }
    return -1;
  }

  std::vector<int> leaf_certificate(const Partition& p, std::vector<Face>& faces) const {
    faces.clear();
    faces.reserve(t_.face_count());
    for (const Face& f : t_.faces()) faces.push_back(make_face(p.pos[f[0]], p.pos[f[1]], p.pos[f[2]]));
    std::sort(faces.begin(), faces.end());
    std::vector<int> cert;
    cert.reserve(3 * faces.size());
    for (const Face& f : faces) cert.insert(cert.end(), f.begin(), f.end());
    return cert;
  }

  enum class Standing { Worse, Tied, Better };

  // Compares one certificate entry against the best leaf's entry at
  // `depth`. On entry best_[0..depth) equals the current path.
  Standing admit(std::vector<int> entry, std::size_t depth) {
    if (best_.size() > depth) {
      const int c = compare(entry, best_[depth]);
      if (c > 0) return Standing::Worse;
      if (c == 0) return Standing::Tied;
      best_.resize(depth);
    }
    best_.push_back(std::move(entry));
    return Standing::Better;
  }

  void search(const Partition& p, Trace trace, std::size_t depth) {
    if (admit(std::move(trace), depth) == Standing::Worse) return;
    if (p.discrete()) {
      std::vector<Face> faces;
      auto cert = leaf_certificate(p, faces);
      if (admit(std::move(cert), depth + 1) != Standing::Better) return;
      best_faces_ = std::move(faces);
      best_labeling_.assign(p.pos.begin(), p.pos.begin() + g_.vertex_nodes);
      return;
    }
    const int s = target_cell(p);
    const int e = p.cell_end[s];
    for (int i = s; i < e; ++i) {
      Partition child = p;
      const int node = p.lab[i];
      std::swap(child.lab[s], child.lab[child.pos[node]]);
      child.pos[child.lab[s]] = s;
      child.pos[child.lab[i]] = i;
      child.cell_end[s] = s + 1;
      child.cell_end[s + 1] = e;
      for (int k = s + 1; k < e; ++k) child.cell[k] = s + 1;
      ++child.cells;
      Trace child_trace{s, e - s};
      refine(child, {s}, child_trace);
      search(child, std::move(child_trace), depth + 1);
    }
  }

  const Triangulation& t_;
  IncidenceGraph g_;
  std::vector<int> count_;
  std::vector<char> queued_;

  std::vector<std::vector<int>> best_;
  std::vector<Face> best_faces_;
  std::vector<Vertex> best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Triangulation& t) { return CanonSearch(t).run(); }

CanonicalKey canonical_key(const Triangulation& t) { return canonical_form(t).key; }

bool are_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<CanonicalKey> canonical_keys(std::span<const Triangulation> items) {
  std::vector<CanonicalKey> keys(items.size());
  parallel_for(items.size(), [&](std::size_t i) { keys[i] = canonical_key(items[i]); });
  return keys;
}

std::vector<Keyed> dedupe_keyed(std::span<const Triangulation> items) {
  auto keys = canonical_keys(items);
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (auto c = keys[x] <=> keys[y]; c != 0) return c < 0;
    if (items[x].label() != items[y].label()) return items[x].label() < items[y].label();
    return x < y;
  });
  std::vector<Keyed> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (!out.empty() && out.back().key == keys[i]) continue;
    out.push_back({keys[i], keys[i].to_triangulation(items[i].label())});
  }
  return out;
}

std::vector<Triangulation> dedupe(std::span<const Triangulation> items) {
  std::vector<Triangulation> out;
  for (auto& k : dedupe_keyed(items)) out.push_back(std::move(k.triangulation));
  return out;
}

}  // namespace punctri
