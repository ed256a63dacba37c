#include "skein/annulus.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "skein/error.hpp"

namespace skein {

LaurentPoly loop_value() {
  // -(t^2 + t^-2)
  LaurentPoly u;
  u += LaurentPoly::t_power(2);
  u += LaurentPoly::t_power(-2);
  return -u;
}

// ---------------------------------------------------------------------------
// SolidTorusElement

SolidTorusElement SolidTorusElement::z_power(int degree,
                                             const LaurentPoly& coeff) {
  if (degree < 0) fail(Errc::internal, "negative z-degree");
  SolidTorusElement e;
  if (!coeff.is_zero()) e.coeffs_[degree] = coeff;
  return e;
}

LaurentPoly SolidTorusElement::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

int SolidTorusElement::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

void SolidTorusElement::prune(int degree) {
  auto it = coeffs_.find(degree);
  if (it != coeffs_.end() && it->second.is_zero()) coeffs_.erase(it);
}

SolidTorusElement& SolidTorusElement::operator+=(const SolidTorusElement& rhs) {
  for (const auto& [deg, c] : rhs.coeffs_) {
    coeffs_[deg] += c;
    prune(deg);
  }
  return *this;
}

SolidTorusElement& SolidTorusElement::operator-=(const SolidTorusElement& rhs) {
  for (const auto& [deg, c] : rhs.coeffs_) {
    coeffs_[deg] -= c;
    prune(deg);
  }
  return *this;
}

SolidTorusElement SolidTorusElement::operator+(
    const SolidTorusElement& rhs) const {
  SolidTorusElement out = *this;
  out += rhs;
  return out;
}

SolidTorusElement SolidTorusElement::operator-(
    const SolidTorusElement& rhs) const {
  SolidTorusElement out = *this;
  out -= rhs;
  return out;
}

SolidTorusElement SolidTorusElement::operator-() const {
  SolidTorusElement out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_[deg] = -c;
  return out;
}

SolidTorusElement SolidTorusElement::operator*(
    const LaurentPoly& scalar) const {
  SolidTorusElement out;
  if (scalar.is_zero()) return out;
  for (const auto& [deg, c] : coeffs_) out.coeffs_[deg] = c * scalar;
  return out;
}

SolidTorusElement SolidTorusElement::operator*(
    const SolidTorusElement& rhs) const {
  SolidTorusElement out;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : rhs.coeffs_) {
      out.coeffs_[d1 + d2] += c1 * c2;
      out.prune(d1 + d2);
    }
  return out;
}

std::string SolidTorusElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.to_string() << ")*";
    if (it->first == 0)
      os << "phi";
    else if (it->first == 1)
      os << "z";
    else
      os << "z^" << it->first;
  }
  return os.str();
}

SolidTorusElement SolidTorusElement::parse(const std::string& text) {
  auto bad = [&](const std::string& why) {
    fail(Errc::parse_error, "solid-torus element: " + why);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size()) bad("empty input");
  if (text[i] == '0') {
    ++i;
    skip_ws();
    if (i != text.size()) bad("trailing input after 0");
    return SolidTorusElement();
  }
  SolidTorusElement out;
  while (true) {
    skip_ws();
    if (i >= text.size() || text[i] != '(') bad("expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) bad("unbalanced '('");
    LaurentPoly c = LaurentPoly::parse(text.substr(i + 1, close - i - 1));
    i = close + 1;
    if (i >= text.size() || text[i] != '*') bad("expected '*'");
    ++i;
    int deg = 0;
    if (text.compare(i, 3, "phi") == 0) {
      deg = 0;
      i += 3;
    } else if (i < text.size() && text[i] == 'z') {
      ++i;
      deg = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
        if (j == i) bad("expected exponent digits");
        deg = std::stoi(text.substr(i, j - i));
        i = j;
      }
    } else {
      bad("expected phi or z");
    }
    out += z_power(deg, c);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') bad("expected '+'");
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

// Per-edge endpoint table built from the crossing records.
std::vector<std::array<SlotRef, 2>> endpoint_table(const AnnulusDiagram& d) {
  std::vector<std::array<SlotRef, 2>> at(d.edges.size());
  std::vector<std::array<int, 2>> seen(d.edges.size(), {0, 0});
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    for (int s = 0; s < 4; ++s) {
      int e = x.edge[s];
      int end = x.end[s];
      if (e < 0 || e >= static_cast<int>(d.edges.size()))
        fail(Errc::invalid_diagram, "edge id out of range");
      if (end != 0 && end != 1)
        fail(Errc::invalid_diagram, "edge end must be 0 or 1");
      if (seen[e][end]++)
        fail(Errc::invalid_diagram, "edge end attached twice");
      at[e][end] = {static_cast<int>(c), s};
    }
  }
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    if (seen[e][0] != 1 || seen[e][1] != 1)
      fail(Errc::invalid_diagram, "every edge needs both ends attached");
  return at;
}

}  // namespace

void validate(const AnnulusDiagram& d) {
  auto at = endpoint_table(d);
  for (const auto& l : d.free_loops)
    if (std::abs(l.winding) > 1)
      fail(Errc::invalid_diagram, "free loop winds more than once");
  if (d.crossings.empty()) return;

  // Planarity of the 4-valent code: trace faces of the rotation system and
  // check V - E + F == 2 * (number of connected components).
  const int V = static_cast<int>(d.crossings.size());
  const int E = static_cast<int>(d.edges.size());
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& ends : at) parent[find(ends[0].crossing)] = find(ends[1].crossing);
  int components = 0;
  for (int v = 0; v < V; ++v)
    if (find(v) == v) ++components;

  // Directed edge 2e+dir, dir 0 meaning end0 -> end1. Faces: on arrival turn
  // to the next slot counterclockwise and leave along that edge.
  std::vector<char> used(2 * E, 0);
  int faces = 0;
  for (int start = 0; start < 2 * E; ++start) {
    if (used[start]) continue;
    ++faces;
    int cur = start;
    do {
      used[cur] = 1;
      int e = cur / 2;
      int dir = cur % 2;
      SlotRef arrive = at[e][dir == 0 ? 1 : 0];
      int s = (arrive.slot + 1) % 4;
      const auto& x = d.crossings[arrive.crossing];
      int e2 = x.edge[s];
      int leave_end = x.end[s];
      cur = 2 * e2 + (leave_end == 0 ? 0 : 1);
    } while (cur != start);
  }
  if (V - E + faces != 2 * components)
    fail(Errc::invalid_diagram, "crossing code is not planar");
}

// ---------------------------------------------------------------------------
// Canonical code

std::string canonical_code(const AnnulusDiagram& d) {
  std::vector<int> newid(d.edges.size(), -1);
  std::vector<char> flip(d.edges.size(), 0);
  int next = 0;
  for (const auto& x : d.crossings)
    for (int s = 0; s < 4; ++s) {
      int e = x.edge[s];
      if (newid[e] < 0) {
        newid[e] = next++;
        flip[e] = (x.end[s] == 1);
      }
    }
  std::ostringstream os;
  for (const auto& x : d.crossings) {
    os << 'x';
    for (int s = 0; s < 4; ++s) {
      int e = x.edge[s];
      int end = flip[e] ? 1 - x.end[s] : x.end[s];
      os << newid[e] << (end == 0 ? 'a' : 'b');
    }
    os << (x.over_first ? 'o' : 'u');
  }
  os << '|';
  std::vector<int> weights(next, 0);
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    if (newid[e] >= 0)
      weights[newid[e]] = flip[e] ? -d.edges[e].weight : d.edges[e].weight;
  for (int w : weights) os << w << ',';
  os << '|';
  std::vector<std::pair<int, int>> loops;
  for (const auto& l : d.free_loops)
    loops.emplace_back(std::abs(l.winding), l.meridian ? 1 : 0);
  std::sort(loops.begin(), loops.end());
  for (auto [w, m] : loops) os << w << (m ? 'm' : 'p');
  return os.str();
}

// ---------------------------------------------------------------------------
// Assembler: builds a diagram from a movie of cross/cup/cap events on a
// strand cross-section, then closes final positions to initial ones around
// the annulus (each closure passes the seam once).

namespace {

struct Pending {
  int weight = 0;
  std::array<SlotRef, 2> at{};  // unset crossing == -1 means dangling
  bool dead = false;
};

class Assembler {
 public:
  explicit Assembler(int strands) {
    for (int i = 0; i < strands; ++i) {
      int e = new_edge();
      stubs_.push_back({e, 0});
      heads_.push_back({e, 1});
    }
  }

  // Crosses the strands at positions pos, pos+1 (1-based).
  void cross(int pos, bool over_first) {
    check_pos(pos, 2);
    Head l = heads_[pos - 1];
    Head r = heads_[pos];
    int c = static_cast<int>(crossings_.size());
    AnnulusDiagram::Crossing x;
    x.over_first = over_first;
    attach(l, c, 0, x);
    attach(r, c, 1, x);
    int ne = new_edge();
    int nw = new_edge();
    edges_[ne].at[0] = {c, 2};
    x.edge[2] = ne;
    x.end[2] = 0;
    edges_[nw].at[0] = {c, 3};
    x.edge[3] = nw;
    x.end[3] = 0;
    crossings_.push_back(x);
    heads_[pos - 1] = {nw, 1};
    heads_[pos] = {ne, 1};
  }

  // Inserts a new minimum: two fresh heads appear at positions pos, pos+1.
  void cup(int pos) {
    if (pos < 1 || pos > static_cast<int>(heads_.size()) + 1)
      fail(Errc::internal, "cup position out of range");
    int e = new_edge();
    heads_.insert(heads_.begin() + (pos - 1), {e, 1});
    heads_.insert(heads_.begin() + (pos - 1), {e, 0});
  }

  // Joins the strands at positions pos, pos+1 by a maximum.
  void cap(int pos) {
    check_pos(pos, 2);
    Head l = heads_[pos - 1];
    Head r = heads_[pos];
    heads_.erase(heads_.begin() + (pos - 1), heads_.begin() + (pos + 1));
    join(l, r, 0);
  }

  void add_free_loop(int winding, bool meridian) {
    loops_.push_back({winding, meridian});
  }

  AnnulusDiagram finish() {
    if (heads_.size() != stubs_.size())
      fail(Errc::internal, "unbalanced cups and caps");
    // Close position i to position i around the annulus; the closing arc
    // passes the seam once in the sweep direction. Consumed entries are
    // blanked first so redirects only ever see live references.
    for (std::size_t i = 0; i < stubs_.size(); ++i) {
      Head a = heads_[i];
      Head b = stubs_[i];
      heads_[i] = {-1, -1};
      stubs_[i] = {-1, -1};
      join(a, b, 1);
    }

    AnnulusDiagram d;
    std::vector<int> remap(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].dead) continue;
      if (edges_[e].at[0].crossing < 0 || edges_[e].at[1].crossing < 0)
        fail(Errc::internal, "dangling edge after closure");
      remap[e] = static_cast<int>(d.edges.size());
      d.edges.push_back({edges_[e].weight});
    }
    for (auto x : crossings_) {
      for (int s = 0; s < 4; ++s) x.edge[s] = remap[x.edge[s]];
      d.crossings.push_back(x);
    }
    for (auto l : loops_) {
      l.winding = std::abs(l.winding);
      if (l.winding > 1) fail(Errc::internal, "assembled loop winds twice");
      d.free_loops.push_back(l);
    }
    return d;
  }

 private:
  struct Head {
    int edge;
    int end;
  };

  int new_edge() {
    edges_.push_back({});
    return static_cast<int>(edges_.size()) - 1;
  }

  void check_pos(int pos, int span) const {
    if (pos < 1 || pos + span - 2 > static_cast<int>(heads_.size()))
      fail(Errc::internal, "event position out of range");
  }

  void attach(Head h, int crossing, int slot, AnnulusDiagram::Crossing& x) {
    edges_[h.edge].at[h.end] = {crossing, slot};
    x.edge[slot] = h.edge;
    x.end[slot] = h.end;
  }

  void redirect(int old_edge, int old_end, int new_edge_id, int new_end) {
    for (auto& h : heads_)
      if (h.edge == old_edge && h.end == old_end) {
        h = {new_edge_id, new_end};
        return;
      }
    for (auto& s : stubs_)
      if (s.edge == old_edge && s.end == old_end) {
        s = {new_edge_id, new_end};
        return;
      }
    fail(Errc::internal, "dangling end has no live reference");
  }

  // Joins dangling end a to dangling end b, inserting `extra` seam weight.
  // Traversal runs along a's edge toward a, then into b's edge away from b.
  void join(Head a, Head b, int extra) {
    Pending& A = edges_[a.edge];
    if (a.edge == b.edge) {
      int w = (b.end == 0 ? A.weight : -A.weight) + extra;
      loops_.push_back({w, false});
      A.dead = true;
      return;
    }
    Pending& B = edges_[b.edge];
    int w = (a.end == 1 ? A.weight : -A.weight) + extra +
            (b.end == 0 ? B.weight : -B.weight);
    SlotRef other_a = A.at[1 - a.end];
    SlotRef other_b = B.at[1 - b.end];
    A.weight = w;
    A.at[0] = other_a;
    A.at[1] = other_b;
    if (other_a.crossing >= 0) {
      crossings_[other_a.crossing].edge[other_a.slot] = a.edge;
      crossings_[other_a.crossing].end[other_a.slot] = 0;
    } else {
      redirect(a.edge, 1 - a.end, a.edge, 0);
    }
    if (other_b.crossing >= 0) {
      crossings_[other_b.crossing].edge[other_b.slot] = a.edge;
      crossings_[other_b.crossing].end[other_b.slot] = 1;
    } else {
      redirect(b.edge, 1 - b.end, a.edge, 1);
    }
    B.dead = true;
  }

  std::vector<Pending> edges_;
  std::vector<AnnulusDiagram::Crossing> crossings_;
  std::vector<AnnulusDiagram::FreeLoop> loops_;
  std::vector<Head> heads_;
  std::vector<Head> stubs_;
};

LayerCurve canonical_layer(LayerCurve c) {
  if (c.a == 0 && c.b == 0) fail(Errc::zero_curve, "curve (0,0) has no diagram");
  if (c.a < 0 || (c.a == 0 && c.b < 0)) {
    c.a = -c.a;
    c.b = -c.b;
  }
  if (std::gcd(std::abs(c.a), std::abs(c.b)) != 1)
    fail(Errc::not_primitive, "curve must be primitive");
  return c;
}

}  // namespace

AnnulusDiagram empty_diagram() {
  AnnulusDiagram d;
  d.layers.emplace();
  return d;
}

AnnulusDiagram layered_diagram(const std::vector<LayerCurve>& layers) {
  std::vector<LayerCurve> canon;
  canon.reserve(layers.size());
  int strands = 0;
  for (const auto& l : layers) {
    canon.push_back(canonical_layer(l));
    strands += canon.back().a;
  }
  Assembler am(strands);
  int depth = 0;
  for (const auto& l : canon) {
    const int T = depth;
    const bool h = (l.b < 0);  // crossing flag for the layer's own winding
    const int winds = std::abs(l.b);
    if (l.a == 0) {
      // Meridian loop around all deeper strands.
      if (T == 0) {
        am.add_free_loop(0, true);
      } else {
        am.cup(T + 1);
        for (int j = T; j >= 1; --j) am.cross(j, h);
        for (int j = 1; j <= T; ++j) am.cross(j, h);
        am.cap(T + 1);
      }
      continue;
    }
    if (l.a == 1) {
      for (int k = 0; k < winds; ++k) {
        am.cup(T + 2);
        am.cross(T + 1, h);
        am.cap(T + 2);
      }
    } else {
      for (int k = 0; k < winds; ++k)
        for (int i = 1; i < l.a; ++i) am.cross(T + i, h);
    }
    // Each meridian wind carries the layer around every deeper strand.
    if (T > 0) {
      for (int k = 0; k < winds; ++k) {
        for (int j = T; j >= 1; --j) am.cross(j, h);
        for (int j = 1; j <= T; ++j) am.cross(j, h);
      }
    }
    depth += l.a;
  }
  AnnulusDiagram d = am.finish();
  d.layers = std::move(canon);
  validate(d);
  return d;
}

AnnulusDiagram curve_diagram(int a, int b) { return layered_diagram({{a, b}}); }

AnnulusDiagram core_power(int k) {
  if (k < 0) fail(Errc::internal, "negative core power");
  return layered_diagram(std::vector<LayerCurve>(k, {1, 0}));
}

AnnulusDiagram clasp_diagram(bool over_first) {
  // Two cores joined by a clasp: both crossings carry the same flag, which
  // is what distinguishes a clasp from a removable poke.
  AnnulusDiagram d;
  d.edges = {{1}, {1}, {0}, {0}};  // P, Q, m1, m2
  AnnulusDiagram::Crossing x1, x2;
  x1.over_first = x2.over_first = over_first;
  x1.edge = {0, 1, 3, 2};
  x1.end = {1, 1, 0, 0};
  x2.edge = {2, 3, 1, 0};
  x2.end = {1, 1, 0, 0};
  d.crossings = {x1, x2};
  validate(d);
  return d;
}

// ---------------------------------------------------------------------------
// Stacking

namespace {

bool meridian_free(const AnnulusDiagram& d) {
  if (d.layers) {
    for (const auto& l : *d.layers)
      if (l.b != 0) return false;
    return true;
  }
  if (!d.crossings.empty()) return false;
  for (const auto& l : d.free_loops)
    if (l.meridian) return false;
  return true;
}

}  // namespace

AnnulusDiagram stack(const std::vector<AnnulusDiagram>& parts) {
  std::vector<const AnnulusDiagram*> live;
  for (const auto& p : parts)
    if (!p.is_empty()) live.push_back(&p);
  if (live.empty()) return empty_diagram();

  bool all_layers = true;
  for (const auto* p : live)
    if (!p->layers) all_layers = false;
  if (all_layers) {
    std::vector<LayerCurve> combined;
    for (const auto* p : live)
      combined.insert(combined.end(), p->layers->begin(), p->layers->end());
    return layered_diagram(combined);
  }

  for (std::size_t i = 1; i < live.size(); ++i)
    if (!meridian_free(*live[i]))
      fail(Errc::invalid_diagram,
           "stack needs layer provenance or meridian-free outer parts");

  AnnulusDiagram out;
  for (const auto* p : live) {
    int offset = static_cast<int>(out.edges.size());
    out.edges.insert(out.edges.end(), p->edges.begin(), p->edges.end());
    for (auto x : p->crossings) {
      for (int s = 0; s < 4; ++s) x.edge[s] += offset;
      out.crossings.push_back(x);
    }
    out.free_loops.insert(out.free_loops.end(), p->free_loops.begin(),
                          p->free_loops.end());
  }
  validate(out);
  return out;
}

// ---------------------------------------------------------------------------
// Resolution

namespace {

using Pairing = std::array<std::array<int, 2>, 2>;

// A-smoothing arcs. Anchored by the curl theorem: the writhe +1 curl
// (over-strand southwest to northeast) must resolve to -t^3 times the strand.
Pairing a_pairing(bool over_first) {
  if (over_first) return {{{0, 3}, {1, 2}}};
  return {{{0, 1}, {2, 3}}};
}

Pairing b_pairing(bool over_first) { return a_pairing(!over_first); }

// Removes crossing ci, joining its slots as directed. Exact merge of seam
// weights; newly closed components become free loops.
AnnulusDiagram smooth(const AnnulusDiagram& d, std::size_t ci,
                      const Pairing& pairing) {
  std::vector<Pending> edges(d.edges.size());
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    edges[e].weight = d.edges[e].weight;
  std::vector<AnnulusDiagram::Crossing> xs = d.crossings;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int s = 0; s < 4; ++s)
      edges[xs[c].edge[s]].at[xs[c].end[s]] = {static_cast<int>(c), s};
  std::vector<AnnulusDiagram::FreeLoop> loops = d.free_loops;

  for (const auto& pair : pairing) {
    int p = pair[0], q = pair[1];
    int ep = xs[ci].edge[p], dp = xs[ci].end[p];
    int eq = xs[ci].edge[q], dq = xs[ci].end[q];
    if (ep == eq) {
      int w = std::abs(edges[ep].weight);
      if (w > 1)
        fail(Errc::invalid_diagram, "smoothed component winds more than once");
      loops.push_back({w, false});
      edges[ep].dead = true;
      continue;
    }
    int w = (dp == 1 ? edges[ep].weight : -edges[ep].weight) +
            (dq == 0 ? edges[eq].weight : -edges[eq].weight);
    SlotRef other_p = edges[ep].at[1 - dp];
    SlotRef other_q = edges[eq].at[1 - dq];
    edges[ep].weight = w;
    edges[ep].at[0] = other_p;
    edges[ep].at[1] = other_q;
    xs[other_p.crossing].edge[other_p.slot] = ep;
    xs[other_p.crossing].end[other_p.slot] = 0;
    xs[other_q.crossing].edge[other_q.slot] = ep;
    xs[other_q.crossing].end[other_q.slot] = 1;
    edges[eq].dead = true;
  }

  AnnulusDiagram out;
  std::vector<int> remap(edges.size(), -1);
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (c == ci) continue;
    for (int s = 0; s < 4; ++s) {
      int e = xs[c].edge[s];
      if (remap[e] < 0) {
        remap[e] = static_cast<int>(out.edges.size());
        out.edges.push_back({edges[e].weight});
      }
    }
  }
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (c == ci) continue;
    auto x = xs[c];
    for (int s = 0; s < 4; ++s) x.edge[s] = remap[x.edge[s]];
    out.crossings.push_back(x);
  }
  for (auto l : loops) {
    l.winding = std::abs(l.winding);
    out.free_loops.push_back(l);
  }
  return out;
}

std::mutex memo_mutex;
std::unordered_map<std::string, SolidTorusElement> memo;

SolidTorusElement resolve_rec(const AnnulusDiagram& d,
                              const CrossingChooser& chooser, bool memoize) {
  // Peel off free loops: z per core-parallel loop, u per null loop.
  int cores = 0;
  LaurentPoly pref = LaurentPoly::one();
  for (const auto& l : d.free_loops) {
    if (std::abs(l.winding) == 1)
      ++cores;
    else
      pref *= loop_value();
  }
  if (d.crossings.empty()) return SolidTorusElement::z_power(cores, pref);

  AnnulusDiagram bare = d;
  bare.free_loops.clear();
  bare.layers.reset();
  std::string key = canonical_code(bare);
  if (memoize) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end())
      return (it->second * pref) * SolidTorusElement::z_power(cores);
  }
  std::size_t ci = chooser(bare);
  if (ci >= bare.crossings.size())
    fail(Errc::internal, "crossing choice out of range");
  bool of = bare.crossings[ci].over_first;
  SolidTorusElement val =
      resolve_rec(smooth(bare, ci, a_pairing(of)), chooser, memoize) *
          LaurentPoly::t_power(1) +
      resolve_rec(smooth(bare, ci, b_pairing(of)), chooser, memoize) *
          LaurentPoly::t_power(-1);
  if (memoize) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, val);
  }
  return (val * pref) * SolidTorusElement::z_power(cores);
}

}  // namespace

SolidTorusElement resolve(const AnnulusDiagram& d) {
  validate(d);
  return resolve_rec(d, [](const AnnulusDiagram&) { return std::size_t{0}; },
                     true);
}

SolidTorusElement resolve_choosing(const AnnulusDiagram& d,
                                   const CrossingChooser& chooser,
                                   bool memoize) {
  validate(d);
  return resolve_rec(d, chooser, memoize);
}

SolidTorusElement state_sum(const AnnulusDiagram& d) {
  validate(d);
  const std::size_t n = d.crossings.size();
  if (n > 24)
    fail(Errc::too_many_crossings, "state sum capped at 24 crossings");
  auto at = endpoint_table(d);

  int base_cores = 0;
  LaurentPoly base = LaurentPoly::one();
  for (const auto& l : d.free_loops) {
    if (std::abs(l.winding) == 1)
      ++base_cores;
    else
      base *= loop_value();
  }

  SolidTorusElement total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::array<int, 4>> partner(n);
    int a_count = 0;
    for (std::size_t c = 0; c < n; ++c) {
      bool use_a = (mask >> c) & 1;
      if (use_a) ++a_count;
      Pairing p = use_a ? a_pairing(d.crossings[c].over_first)
                        : b_pairing(d.crossings[c].over_first);
      for (const auto& pr : p) {
        partner[c][pr[0]] = pr[1];
        partner[c][pr[1]] = pr[0];
      }
    }
    int nulls = 0;
    int cores = base_cores;
    std::vector<char> visited(d.edges.size(), 0);
    for (std::size_t start = 0; start < d.edges.size(); ++start) {
      if (visited[start]) continue;
      long winding = 0;
      std::size_t e = start;
      int leave_end = 0;
      do {
        visited[e] = 1;
        winding += (leave_end == 0 ? d.edges[e].weight : -d.edges[e].weight);
        SlotRef arrive = at[e][1 - leave_end];
        int s2 = partner[arrive.crossing][arrive.slot];
        e = d.crossings[arrive.crossing].edge[s2];
        leave_end = d.crossings[arrive.crossing].end[s2];
      } while (!(e == start && leave_end == 0));
      if (winding == 0)
        ++nulls;
      else if (winding == 1 || winding == -1)
        ++cores;
      else
        fail(Errc::invalid_diagram, "smoothed component winds more than once");
    }
    LaurentPoly coeff =
        base * LaurentPoly::t_power(2 * a_count - static_cast<int>(n));
    for (int i = 0; i < nulls; ++i) coeff *= loop_value();
    total += SolidTorusElement::z_power(cores, coeff);
  }
  return total;
}

// ---------------------------------------------------------------------------
// JSON planar code

std::string diagram_to_json(const AnnulusDiagram& d) {
  validate(d);
  std::vector<int> newid(d.edges.size(), -1);
  std::vector<char> flip(d.edges.size(), 0);
  int next = 0;
  for (const auto& x : d.crossings)
    for (int s = 0; s < 4; ++s) {
      int e = x.edge[s];
      if (newid[e] < 0) {
        newid[e] = next++;
        flip[e] = (x.end[s] == 1);
      }
    }
  nlohmann::ordered_json j;
  j["crossings"] = nlohmann::ordered_json::array();
  for (const auto& x : d.crossings) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int s = 0; s < 4; ++s) row.push_back(newid[x.edge[s]]);
    row.push_back(x.over_first ? "over_first" : "over_second");
    j["crossings"].push_back(row);
  }
  j["closures"] = nlohmann::ordered_json::array();
  for (const auto& l : d.free_loops)
    j["closures"].push_back({{"winding", std::abs(l.winding)},
                             {"meridian", l.meridian}});
  std::vector<int> weights(next, 0);
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    if (newid[e] >= 0)
      weights[newid[e]] = flip[e] ? -d.edges[e].weight : d.edges[e].weight;
  j["seam"] = weights;
  if (d.layers) {
    j["layers"] = nlohmann::ordered_json::array();
    for (const auto& l : *d.layers) j["layers"].push_back({l.a, l.b});
  }
  return j.dump(2);
}

AnnulusDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("diagram JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Errc::invalid_diagram, "diagram JSON must be an object");
  AnnulusDiagram d;
  try {
    int edge_count = 0;
    if (j.contains("crossings")) {
      for (const auto& row : j.at("crossings")) {
        if (!row.is_array() || row.size() != 5)
          fail(Errc::invalid_diagram,
               "crossing rows are [e0,e1,e2,e3,\"over_first\"]");
        AnnulusDiagram::Crossing x;
        for (int s = 0; s < 4; ++s) {
          x.edge[s] = row.at(s).get<int>();
          if (x.edge[s] < 0) fail(Errc::invalid_diagram, "negative edge id");
          edge_count = std::max(edge_count, x.edge[s] + 1);
        }
        std::string flag = row.at(4).get<std::string>();
        if (flag == "over_first")
          x.over_first = true;
        else if (flag == "over_second")
          x.over_first = false;
        else
          fail(Errc::invalid_diagram, "crossing flag must be over_first or over_second");
        d.crossings.push_back(x);
      }
    }
    d.edges.resize(edge_count);
    // First occurrence of an edge id in scan order is its end 0.
    std::vector<int> seen(edge_count, 0);
    for (auto& x : d.crossings)
      for (int s = 0; s < 4; ++s) {
        int e = x.edge[s];
        if (seen[e] > 1) fail(Errc::invalid_diagram, "edge id used more than twice");
        x.end[s] = seen[e]++;
      }
    if (j.contains("seam")) {
      const auto& w = j.at("seam");
      if (!w.is_array() || static_cast<int>(w.size()) != edge_count)
        fail(Errc::invalid_diagram, "seam needs one weight per edge");
      for (int e = 0; e < edge_count; ++e) d.edges[e].weight = w.at(e).get<int>();
    }
    if (j.contains("closures")) {
      for (const auto& row : j.at("closures")) {
        AnnulusDiagram::FreeLoop l;
        l.winding = std::abs(row.at("winding").get<int>());
        l.meridian = row.value("meridian", false);
        d.free_loops.push_back(l);
      }
    }
    if (j.contains("layers")) {
      std::vector<LayerCurve> layers;
      for (const auto& row : j.at("layers")) {
        if (!row.is_array() || row.size() != 2)
          fail(Errc::invalid_diagram, "layers rows are [a,b]");
        layers.push_back({row.at(0).get<int>(), row.at(1).get<int>()});
      }
      // Provenance must reproduce the stated planar code.
      AnnulusDiagram rebuilt = layered_diagram(layers);
      AnnulusDiagram bare = d;
      if (canonical_code(rebuilt) != canonical_code(bare))
        fail(Errc::invalid_diagram, "layers do not match the planar code");
      d.layers = std::move(*rebuilt.layers);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_diagram, std::string("diagram JSON: ") + e.what());
  }
  validate(d);
  return d;
}

}  // namespace skein
