#include "punctri/enumerate.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "punctri/canon.hpp"
#include "punctri/homotopy.hpp"
#include "punctri/transform.hpp"

namespace punctri {

ClosedTarget ClosedTarget::from_name(const std::string& name) {
  const SurfaceName parsed = parse_surface_name(name);
  if (parsed.punctured) throw std::invalid_argument("enumeration needs a closed surface, got " + name);
  return {parsed.closed_euler_characteristic, parsed.orientable};
}

namespace {

constexpr int kMaxVertices = 16;

class GluingSearch {
 public:
  GluingSearch(const ClosedTarget& target, const EnumerateOptions& options)
      : target_(target),
        options_(options),
        max_faces_(2 * (options.max_vertices - target.euler_characteristic)) {
    for (auto& row : apex_) {
      for (auto& slot : row) slot = {-1, -1};
    }
  }

  void run() {
    if (options_.max_vertices < 3 || max_faces_ < 1) return;
    add_face(0, 1, 2);
    nv_ = 3;
    if (target_.orientable) {
      dir_[0][1] = dir_[1][2] = dir_[2][0] = 1;
    }
    extend();
  }

  std::map<CanonicalKey, Triangulation>& found() { return found_; }
  EnumerationStats stats;

 private:
  enum class LinkStep { Open, Close, Reject };

  // Effect on the link of x of adding the link edge y-z.
  LinkStep link_step(int x, int y, int z) const {
    if (count_[x][y] != 1 || count_[x][z] != 1) return LinkStep::Open;
    int prev = -1;
    int cur = y;
    int length = 1;
    for (;;) {
      int next = -1;
      for (int k = 0; k < count_[x][cur]; ++k) {
        if (apex_[x][cur][k] != prev) next = apex_[x][cur][k];
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++length;
    }
    if (cur != z) return LinkStep::Open;
    return length == degree_[x] ? LinkStep::Close : LinkStep::Reject;
  }

  void touch_edge(int p, int q, int r) {
    const int k = count_[p][q]++;
    count_[q][p] = count_[p][q];
    apex_[p][q][k] = apex_[q][p][k] = static_cast<std::int8_t>(r);
    if (k == 0) {
      ++degree_[p];
      ++degree_[q];
      ++open_;
    } else {
      --open_;
    }
  }

  void untouch_edge(int p, int q) {
    const int k = --count_[p][q];
    count_[q][p] = count_[p][q];
    apex_[p][q][k] = apex_[q][p][k] = -1;
    if (k == 0) {
      --degree_[p];
      --degree_[q];
      --open_;
    } else {
      ++open_;
    }
  }

  void add_face(int a, int b, int c) {
    touch_edge(a, b, c);
    touch_edge(a, c, b);
    touch_edge(b, c, a);
    faces_.push_back(make_face(a, b, c));
  }

  void remove_face(int a, int b, int c) {
    faces_.pop_back();
    untouch_edge(b, c);
    untouch_edge(a, c);
    untouch_edge(a, b);
  }

  void extend() {
    ++stats.nodes;
    if (open_ == 0) {
      leaf();
      return;
    }
    const int face_count = static_cast<int>(faces_.size());
    if (face_count + (open_ + 2) / 3 > max_faces_) return;

    int a = -1;
    int b = -1;
    for (int x = 0; x < nv_ && a < 0; ++x) {
      for (int y = x + 1; y < nv_; ++y) {
        if (count_[x][y] == 1) {
          a = x;
          b = y;
          break;
        }
      }
    }
    const int existing = apex_[a][b][0];
    const bool forward = dir_[a][b] != 0;
    const int limit = nv_ < options_.max_vertices ? nv_ + 1 : nv_;

    for (int c = 0; c < limit; ++c) {
      if (c == a || c == b || c == existing) continue;
      const bool fresh = c == nv_;
      if (!fresh && (closed_[c] || count_[a][c] >= 2 || count_[b][c] >= 2)) continue;

      // New face runs ab against the existing face: (b,a,c) or (a,b,c).
      int o0 = a, o1 = b;
      if (forward) std::swap(o0, o1);
      if (target_.orientable && (dir_[o1][c] || dir_[c][o0])) continue;

      const LinkStep at_a = link_step(a, b, c);
      const LinkStep at_b = link_step(b, a, c);
      const LinkStep at_c = fresh ? LinkStep::Open : link_step(c, a, b);
      if (at_a == LinkStep::Reject || at_b == LinkStep::Reject || at_c == LinkStep::Reject) continue;

      if (fresh) ++nv_;
      add_face(a, b, c);
      if (target_.orientable) {
        dir_[o0][o1] = dir_[o1][c] = dir_[c][o0] = 1;
      }
      const bool close_a = at_a == LinkStep::Close;
      const bool close_b = at_b == LinkStep::Close;
      const bool close_c = at_c == LinkStep::Close;
      closed_[a] |= close_a;
      closed_[b] |= close_b;
      closed_[c] |= close_c;

      extend();

      if (close_a) closed_[a] = false;
      if (close_b) closed_[b] = false;
      if (close_c) closed_[c] = false;
      if (target_.orientable) {
        dir_[o0][o1] = dir_[o1][c] = dir_[c][o0] = 0;
      }
      remove_face(a, b, c);
      if (fresh) --nv_;
    }
  }

  void leaf() {
    ++stats.leaves;
    const int f = static_cast<int>(faces_.size());
    if (nv_ - f / 2 != target_.euler_characteristic) return;
    auto t = Triangulation::try_build(nv_, faces_);
    if (!t) return;
    if (is_orientable(*t) != target_.orientable) return;
    if (options_.irreducible_only && !is_irreducible(*t, RodMode::Agreement)) return;
    ++stats.accepted_leaves;
    auto key = canonical_key(*t);
    if (!found_.contains(key)) {
      auto rep = key.to_triangulation();
      found_.emplace(std::move(key), std::move(rep));
    }
  }

  ClosedTarget target_;
  EnumerateOptions options_;
  int max_faces_;
  int nv_ = 0;
  int open_ = 0;
  std::uint8_t count_[kMaxVertices][kMaxVertices]{};
  std::array<std::int8_t, 2> apex_[kMaxVertices][kMaxVertices];
  std::uint8_t dir_[kMaxVertices][kMaxVertices]{};
  int degree_[kMaxVertices]{};
  bool closed_[kMaxVertices]{};
  std::vector<Face> faces_;
  std::map<CanonicalKey, Triangulation> found_;
};

}  // namespace

std::vector<Triangulation> enumerate_closed(const ClosedTarget& target,
                                            const EnumerateOptions& options,
                                            EnumerationStats* stats) {
  if (options.max_vertices > kMaxVertices) {
    throw std::invalid_argument("enumeration supports at most " + std::to_string(kMaxVertices) +
                                " vertices");
  }
  if (options.irreducible_only && target.orientable && target.euler_characteristic == 2) {
    throw ModeError("irreducibility under the agreement needs a surface other than the sphere");
  }
  GluingSearch search(target, options);
  search.run();
  if (stats) *stats = search.stats;

  std::vector<Triangulation> out;
  int index = 0;
  const std::string prefix = target.name() + "_";
  for (auto& [key, t] : search.found()) {
    out.push_back(t.with_label(prefix + std::to_string(t.vertex_count()) + "v_" +
                               std::to_string(index++)));
  }
  return out;
}

bool no_contractible_edge(const Triangulation& t) {
  for (const Edge& e : t.edges()) {
    if (is_contractible(t, e)) return false;
  }
  return true;
}

FilterReport irreducible_filter(std::span<const Triangulation> items) {
  FilterReport report;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Triangulation& t = items[i];
    const bool agreement = is_irreducible(t, RodMode::Agreement);
    const bool literal = no_contractible_edge(t);
    if (agreement != literal) {
      report.discrepancies.push_back(t.label().empty() ? "#" + std::to_string(i) : t.label());
    }
    if (agreement) report.kept.push_back(t);
  }
  return report;
}

}  // namespace punctri
