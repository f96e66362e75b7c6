#include "vclone/cloner_type1.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "vclone/retro_dict.hpp"

namespace vclone {

namespace {

// y of the beach line (parabola with focus `site`, directrix `sweep_y`) at x
double beach_height(Point2 site, double x, double sweep_y) {
  double dy = site.y - sweep_y;
  if (std::abs(dy) <= kTol)
    throw DegenerateInstance("beach_height: site on the sweep line");
  double dx = x - site.x;
  return (dx * dx + site.y * site.y - sweep_y * sweep_y) / (2.0 * dy);
}

std::vector<std::string> sorted_labels(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// top edge classification (shared by the sweep; exposed for tests)
// ---------------------------------------------------------------------------

struct TopEdgeState {
  Oracle* oracle;
  std::map<std::string, Site> known;

  std::vector<Site> add_response(const ProbeResponse& r) {
    std::vector<Site> fresh;
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      if (known.count(r.labels[i])) continue;
      Site s{r.labels[i], r.locations[i]};
      known[s.label] = s;
      fresh.push_back(s);
    }
    return fresh;
  }

  // crossing of bisector(a, b) with the horizontal line y = top
  double bisector_top_x(Point2 a, Point2 b, double top) const {
    if (std::abs(a.x - b.x) <= kTol) return 0.5 * (a.x + b.x);
    return (norm2(b) - norm2(a) - 2.0 * top * (b.y - a.y)) /
           (2.0 * (b.x - a.x));
  }

  void classify(Point2 pl, std::vector<std::string> set_l, Point2 pr,
                std::vector<std::string> set_r) {
    for (const auto& l : set_l)
      for (const auto& r : set_r)
        if (l == r) return;  // shared owner: segment fully classified

    double top = oracle->box().hi.y;
    Point2 a = known.at(set_l.front()).location;
    Point2 b = known.at(set_r.front()).location;
    double xm = bisector_top_x(a, b, top);
    if (!(xm > pl.x + kTol && xm < pr.x - kTol))
      throw DegenerateInstance("top edge: bisector crossing escaped segment");
    Point2 pm{xm, top};
    ProbeResponse resp = oracle->probe(1, pm);
    bool fresh = !add_response(resp).empty();
    bool hits_l = false, hits_r = false;
    for (const auto& lab : resp.labels) {
      hits_l |= std::count(set_l.begin(), set_l.end(), lab) > 0;
      hits_r |= std::count(set_r.begin(), set_r.end(), lab) > 0;
    }
    if (!fresh && hits_l && hits_r) return;  // edge crossing confirmed
    classify(pl, set_l, pm, resp.labels);
    classify(pm, resp.labels, pr, set_r);
  }
};

}  // namespace

std::vector<Site> initialize_top_edge(Oracle& oracle) {
  oracle.set_phase("init");
  const BoundingBox& box = oracle.box();
  Point2 pl{box.lo.x, box.hi.y}, pr{box.hi.x, box.hi.y};
  TopEdgeState st{&oracle, {}};
  ProbeResponse rl = oracle.probe(1, pl);
  st.add_response(rl);
  ProbeResponse rr = oracle.probe(1, pr);
  st.add_response(rr);
  st.classify(pl, rl.labels, pr, rr.labels);
  std::vector<Site> out;
  for (const auto& [label, s] : st.known) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// sweep cloner
// ---------------------------------------------------------------------------

namespace {

// Beach-line item: the moving boundary between two adjacent arcs. The
// trajectory is a fixed function of the two sites, so items are comparable
// at any time both are alive. One sentinel at x = -inf anchors the leftmost
// arc (owned by the topmost site, which never changes).
struct Breakpoint {
  Site left, right;
  bool sentinel = false;

  double x(double t) const {
    return breakpoint_x(left.location, right.location, -t);
  }
};

struct BreakpointOrder {
  bool operator()(const Breakpoint& a, const Breakpoint& b, double t) const {
    if (a.sentinel || b.sentinel) return a.sentinel && !b.sentinel;
    return a.x(t) < b.x(t);
  }
};

using Beach = RetroDict<Breakpoint, BreakpointOrder>;
using Handle = Beach::Handle;

struct SweepEvent {
  double y;
  int kind;  // 0 site, 1 tentative vertex (sites first on equal y)
  std::uint64_t seq;
  Site site;
  // vertex events
  Point2 center;
  std::array<Site, 3> gens;  // left, dying, right arc sites
  Handle h1 = 0, h2 = 0;     // converging breakpoint pair

  double sort_x() const { return kind == 0 ? site.location.x : center.x; }
};

struct EventCmp {
  bool operator()(const SweepEvent& a, const SweepEvent& b) const {
    if (a.y != b.y) return a.y > b.y;  // descending sweep
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.sort_x() != b.sort_x()) return a.sort_x() < b.sort_x();
    return a.seq < b.seq;
  }
};

class SweepCloner {
 public:
  explicit SweepCloner(Oracle& oracle) : o_(oracle) {}

  CloneResult run() {
    std::vector<Site> top = initialize_top_edge(o_);
    result_.k_top = top.size();
    for (const Site& s : top) add_site(s);

    if (top.size() == 1) bootstrap_single_region(top.front());

    while (!queue_.empty()) {
      SweepEvent e = *queue_.begin();
      queue_.erase(queue_.begin());
      if (o_.probe_count() > 4 * known_.size() + 9)
        throw BudgetExceeded("sweep: probe budget tripwire");
      if (e.kind == 0)
        handle_site_event(e);
      else
        handle_vertex_event(e);
    }

    finish();
    return std::move(result_);
  }

 private:
  Oracle& o_;
  CloneResult result_;
  Beach beach_;
  std::set<SweepEvent, EventCmp> queue_;
  std::map<std::string, Site> known_;
  std::set<std::string> queued_sites_;
  std::set<std::vector<std::string>> queued_triples_, confirmed_triples_,
      refuted_triples_;
  std::vector<std::pair<double, Handle>> births_;
  std::uint64_t seq_ = 0;
  bool have_first_arc_ = false;
  double max_processed_t_ = -std::numeric_limits<double>::infinity();

  static double time_of(double y) { return -y; }

  void add_site(const Site& s) {
    if (known_.count(s.label)) return;
    known_[s.label] = s;
    if (queued_sites_.insert(s.label).second) {
      SweepEvent e;
      e.y = s.location.y;
      e.kind = 0;
      e.seq = seq_++;
      e.site = s;
      queue_.insert(e);
    }
  }

  // discovery bookkeeping shared by all probe sites; returns true if the
  // response introduced at least one unknown site
  bool absorb_discoveries(const ProbeResponse& r, double sweep_y) {
    bool fresh = false;
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      if (known_.count(r.labels[i])) continue;
      Site s{r.labels[i], r.locations[i]};
      if (have_first_arc_ && s.location.y > first_site_.location.y)
        throw Error("sweep: discovered a site above the topmost site");
      add_site(s);
      fresh = true;
      if (s.location.y > sweep_y + kTol) ++result_.backtracks;
    }
    return fresh;
  }

  void bootstrap_single_region(const Site& q) {
    // a single top-edge region says nothing about the space below: probe
    // the bottom corners (all four corners sharing one owner proves n = 1)
    o_.set_phase("bootstrap");
    const BoundingBox& box = o_.box();
    Point2 bl{box.lo.x, box.lo.y}, br{box.hi.x, box.lo.y};
    Point2 first = dist(bl, q.location) >= dist(br, q.location) ? bl : br;
    Point2 second = (first.x == bl.x && first.y == bl.y) ? br : bl;
    ProbeResponse r1 = o_.probe(1, first);
    if (!absorb_discoveries(r1, box.hi.y)) {
      ProbeResponse r2 = o_.probe(1, second);
      absorb_discoveries(r2, box.hi.y);
    }
  }

  Site first_site_;

  void handle_site_event(const SweepEvent& e) {
    const Site& q = e.site;
    double t_q = time_of(q.location.y);

    auto loc = beach_.query(t_q, [&](const Breakpoint& bp, Handle, double t) {
      if (bp.sentinel) return -1;
      return bp.x(t) < q.location.x ? -1 : 1;
    });

    if (!loc.pred) {
      // empty beach line: the very first (topmost) arc
      if (have_first_arc_) throw Error("sweep: beach lost its leftmost arc");
      have_first_arc_ = true;
      first_site_ = q;
      Breakpoint sent;
      sent.left = q;
      sent.right = q;
      sent.sentinel = true;
      beach_.insert(sent, t_q);
      max_processed_t_ = std::max(max_processed_t_, t_q);
      return;
    }

    Site arc = beach_.payload(*loc.pred).sentinel
                   ? first_site_
                   : beach_.payload(*loc.pred).right;

    // verify the tentative edge directly above q before touching the beach
    Point2 w{q.location.x, beach_height(arc.location, q.location.x, q.location.y)};
    o_.set_phase("site");
    ProbeResponse resp = o_.probe(1, w);
    if (absorb_discoveries(resp, q.location.y)) {
      // new site(s) above the sweep; leave q in the queue and backtrack
      SweepEvent again = e;
      again.seq = seq_++;
      queue_.insert(again);
      return;
    }
    bool has_q = std::count(resp.labels.begin(), resp.labels.end(), q.label);
    bool has_arc = std::count(resp.labels.begin(), resp.labels.end(), arc.label);
    if (!has_q || !has_arc)
      throw Error("sweep: edge probe contradicts beach state");

    result_.confirmed.push_back(
        {Feature::kEdge, sorted_labels({q.label, arc.label}), w});

    Handle hl = beach_.insert(Breakpoint{arc, q}, t_q);
    Handle hr = beach_.insert(Breakpoint{q, arc}, t_q);
    register_birth(t_q, hl);
    register_birth(t_q, hr);
    max_processed_t_ = std::max(max_processed_t_, t_q);

    auto nl = beach_.neighbors(t_q, hl);
    if (nl.pred) make_candidate(*nl.pred, hl, q.location.y);
    auto nr = beach_.neighbors(t_q, hr);
    if (nr.succ) make_candidate(hr, *nr.succ, q.location.y);
  }

  void handle_vertex_event(const SweepEvent& e) {
    std::vector<std::string> triple = sorted_labels(
        {e.gens[0].label, e.gens[1].label, e.gens[2].label});
    queued_triples_.erase(triple);

    double t_e = time_of(e.y);
    // structural staleness check: both breakpoints still alive and adjacent
    if (beach_.is_erased(e.h1) || beach_.is_erased(e.h2)) return;
    if (beach_.end(e.h1) != Beach::kInf || beach_.end(e.h2) != Beach::kInf)
      return;
    auto nb = beach_.neighbors(t_e, e.h1);
    bool adjacent = (nb.succ && *nb.succ == e.h2) || (nb.pred && *nb.pred == e.h2);
    if (!adjacent) return;

    o_.set_phase("vertex");
    ProbeResponse resp = o_.probe(1, e.center);
    if (absorb_discoveries(resp, e.y)) {
      refuted_triples_.insert(triple);
      return;  // false vertex; the discovering site explains it
    }
    if (sorted_labels(resp.labels) != triple) {
      // a known site is co-nearest: cocircular degeneracy outside the
      // generator contract
      throw DegenerateInstance("sweep: tentative vertex tied with known site");
    }

    result_.confirmed.push_back({Feature::kVertex, triple, e.center});
    result_.confirmed.push_back(
        {Feature::kEdge, sorted_labels({e.gens[0].label, e.gens[2].label}),
         e.center});

    beach_.finalize_end(e.h1, t_e);
    beach_.finalize_end(e.h2, t_e);
    Handle hn = beach_.insert(Breakpoint{e.gens[0], e.gens[2]}, t_e);
    register_birth(t_e, hn);
    max_processed_t_ = std::max(max_processed_t_, t_e);

    auto nn = beach_.neighbors(t_e, hn);
    if (nn.pred) make_candidate(*nn.pred, hn, e.y);
    if (nn.succ) make_candidate(hn, *nn.succ, e.y);
  }

  // a retroactive insertion changes adjacencies at later times; rescan the
  // younger births for pairs that now flank the new item
  void register_birth(double t, Handle h) {
    births_.push_back({t, h});
    if (t >= max_processed_t_) return;
    for (std::size_t i = 0; i + 1 < births_.size(); ++i) {
      auto [tb, hb] = births_[i];
      if (tb <= t || tb > max_processed_t_) continue;
      if (beach_.is_erased(hb)) continue;
      if (!beach_.alive_at(hb, tb)) continue;
      auto nb = beach_.neighbors(tb, hb);
      if (nb.pred && *nb.pred == h) make_candidate(h, hb, -tb);
      if (nb.succ && *nb.succ == h) make_candidate(hb, h, -tb);
    }
  }

  void make_candidate(Handle hu, Handle hw, double sweep_y) {
    const Breakpoint& u = beach_.payload(hu);
    const Breakpoint& w = beach_.payload(hw);
    if (u.sentinel || w.sentinel) return;
    if (u.right.label != w.left.label)
      throw Error("sweep: adjacent breakpoints disagree on the shared arc");
    const Site& a = u.left;
    const Site& m = u.right;
    const Site& b = w.right;
    if (a.label == b.label) return;  // same outer arcs never converge
    std::vector<std::string> triple = sorted_labels({a.label, m.label, b.label});
    if (queued_triples_.count(triple) || confirmed_triples_.count(triple) ||
        refuted_triples_.count(triple))
      return;
    if (orient(a.location, m.location, b.location) >= -kTol) return;  // diverging
    Point2 c = circumcenter(a.location, m.location, b.location);
    double y_event = c.y - dist(c, m.location);
    if (y_event > sweep_y + kTieTol) return;  // would precede current position
    double t_event = time_of(y_event);
    if (t_event <= std::max(beach_.start(hu), beach_.start(hw))) return;

    SweepEvent e;
    e.y = y_event;
    e.kind = 1;
    e.seq = seq_++;
    e.center = c;
    e.gens = {a, m, b};
    e.h1 = hu;
    e.h2 = hw;
    queue_.insert(e);
    queued_triples_.insert(triple);
  }

  void finish() {
    std::vector<Site> sites;
    for (const auto& [label, s] : known_) sites.push_back(s);
    result_.sites = sites;
    result_.diagram = build_reference(sites, o_.box());
    result_.probes = o_.probe_count();
    std::size_t n = sites.size();
    result_.bound = n <= 1 ? 4 : 4 * n - 3;
  }
};

}  // namespace

CloneResult clone_sweep(Oracle& oracle) {
  SweepCloner cloner(oracle);
  return cloner.run();
}

// ---------------------------------------------------------------------------
// incremental cloner
// ---------------------------------------------------------------------------

namespace {

// Diagram of the known sites maintained in an enlarged box so tentative
// Voronoi vertices beyond the unit box are still realized as cell corners.
class IncrementalDiagram {
 public:
  explicit IncrementalDiagram(BoundingBox box) : unit_box_(box) {
    set_factor(2.0);
  }

  std::size_t updates() const { return updates_; }

  void insert(const Site& s) {
    sites_.push_back(s);
    rebuild_one(s);
    ++updates_;
    for (auto& [label, cell] : cells_) {
      if (label == s.label) continue;
      if (!cut_by(cell, sites_by_label_.at(label).location, s.location))
        continue;
      cell = clip_to_nearer(cell, sites_by_label_.at(label).location,
                            s.location, s.label);
      ++updates_;
    }
    ensure_vertices_inside();
  }

  struct Tentative {
    Point2 location;
    std::vector<std::string> triple;  // sorted
  };

  std::vector<Tentative> tentative_vertices() const {
    // cluster cell corners; every corner where three site labels meet is a
    // Voronoi vertex of the current diagram
    struct Corner {
      Point2 p;
      std::string label;
    };
    std::vector<Corner> corners;
    for (const auto& [label, cell] : cells_)
      for (Point2 p : cell.pts) corners.push_back({p, label});
    std::sort(corners.begin(), corners.end(), [](const Corner& a, const Corner& b) {
      if (a.p.x != b.p.x) return a.p.x < b.p.x;
      return a.p.y < b.p.y;
    });
    std::vector<bool> used(corners.size(), false);
    std::vector<Tentative> out;
    double merge = kTieTol;
    for (std::size_t i = 0; i < corners.size(); ++i) {
      if (used[i]) continue;
      std::set<std::string> labels = {corners[i].label};
      for (std::size_t j = i + 1; j < corners.size(); ++j) {
        if (corners[j].p.x - corners[i].p.x > merge) break;
        if (used[j]) continue;
        if (dist(corners[i].p, corners[j].p) <= merge) {
          labels.insert(corners[j].label);
          used[j] = true;
        }
      }
      if (labels.size() >= 3)
        out.push_back({corners[i].p,
                       std::vector<std::string>(labels.begin(), labels.end())});
    }
    std::sort(out.begin(), out.end(), [](const Tentative& a, const Tentative& b) {
      if (a.location.y != b.location.y) return a.location.y > b.location.y;
      return a.location.x < b.location.x;
    });
    return out;
  }

  std::map<std::string, ConvexCell> unit_cells() const {
    std::map<std::string, ConvexCell> out;
    for (const Site& s : sites_) {
      ConvexCell cell = box_cell(unit_box_);
      for (const Site& t : sites_) {
        if (t.label == s.label) continue;
        cell = clip_to_nearer(cell, s.location, t.location, t.label);
        if (cell.empty()) break;
      }
      out[s.label] = std::move(cell);
    }
    return out;
  }

  const std::vector<Site>& sites() const { return sites_; }

 private:
  BoundingBox unit_box_, big_box_;
  std::vector<Site> sites_;
  std::map<std::string, Site> sites_by_label_;
  std::map<std::string, ConvexCell> cells_;
  std::size_t updates_ = 0;

  void set_factor(double f) {
    factor_ = f;
    Point2 c = 0.5 * (unit_box_.lo + unit_box_.hi);
    Point2 half{0.5 * unit_box_.width() * (1 + 2 * f),
                0.5 * unit_box_.height() * (1 + 2 * f)};
    big_box_ = {c - half, c + half};
  }
  double factor_ = 2.0;

  static bool cut_by(const ConvexCell& cell, Point2 own, Point2 other) {
    Point2 n = other - own;
    double c = 0.5 * (norm2(other) - norm2(own));
    for (Point2 p : cell.pts)
      if (dot(n, p) - c > kTol) return true;
    return false;
  }

  void rebuild_one(const Site& s) {
    sites_by_label_[s.label] = s;
    ConvexCell cell = box_cell(big_box_);
    for (const Site& t : sites_) {
      if (t.label == s.label) continue;
      cell = clip_to_nearer(cell, s.location, t.location, t.label);
    }
    cells_[s.label] = std::move(cell);
  }

  void rebuild_all() {
    cells_.clear();
    std::size_t saved = updates_;
    for (const Site& s : sites_) rebuild_one(s);
    updates_ = saved;  // representation enlargement is not algorithmic work
  }

  // A finite Voronoi vertex beyond the enlarged box shows up as a two-label
  // wall cut by the synthetic boundary between non-hull neighbors; keep
  // enlarging until every such wall endpoint is genuine.
  void ensure_vertices_inside() {
    for (int rounds = 0; rounds < 20; ++rounds) {
      if (!has_cut_wall()) return;
      if (factor_ > 1e9)
        throw DegenerateInstance("incremental: vertex escapes any box");
      set_factor(factor_ * 4.0);
      rebuild_all();
    }
    throw DegenerateInstance("incremental: enlargement did not converge");
  }

  bool has_cut_wall() const {
    if (sites_.size() < 3) return false;
    auto hull_pairs = convex_hull_pairs();
    for (const auto& [label, cell] : cells_) {
      std::size_t m = cell.pts.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (cell.src[i] != kOutsideLabel) continue;
        // boundary edge endpoints adjoining a site wall
        for (Point2 corner : {cell.pts[i], cell.pts[(i + 1) % m]}) {
          std::size_t prev = (i + m - 1) % m;
          std::size_t next = (i + 1) % m;
          const std::string& other = dist(corner, cell.pts[i]) <= kTol
                                         ? cell.src[prev]
                                         : cell.src[next];
          if (other == kOutsideLabel) continue;
          auto key = std::minmax(label, other);
          if (!hull_pairs.count({key.first, key.second})) return true;
        }
      }
    }
    return false;
  }

  std::set<std::pair<std::string, std::string>> convex_hull_pairs() const {
    std::vector<Site> pts = sites_;
    std::sort(pts.begin(), pts.end(), [](const Site& a, const Site& b) {
      if (a.location.x != b.location.x) return a.location.x < b.location.x;
      return a.location.y < b.location.y;
    });
    // keep collinear points on the hull: their walls are unbounded too
    auto build = [&](bool upper) {
      std::vector<Site> chain;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Site& p = pts[upper ? pts.size() - 1 - i : i];
        while (chain.size() >= 2 &&
               orient(chain[chain.size() - 2].location,
                      chain.back().location, p.location) < -kTol)
          chain.pop_back();
        chain.push_back(p);
      }
      return chain;
    };
    std::set<std::pair<std::string, std::string>> pairs;
    for (bool upper : {false, true}) {
      auto chain = build(upper);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        auto key = std::minmax(chain[i].label, chain[i + 1].label);
        pairs.insert({key.first, key.second});
      }
    }
    return pairs;
  }
};

class IncrementalCloner {
 public:
  explicit IncrementalCloner(Oracle& oracle) : o_(oracle), diag_(oracle.box()) {}

  CloneResult run() {
    const BoundingBox& box = o_.box();
    o_.set_phase("corners");
    std::array<Point2, 4> corners = {Point2{box.lo.x, box.lo.y},
                                     Point2{box.hi.x, box.lo.y},
                                     Point2{box.hi.x, box.hi.y},
                                     Point2{box.lo.x, box.hi.y}};
    for (Point2 c : corners) absorb(o_.probe(1, c));

    // every corner in one region means the box is a single cell
    if (known_.size() == 1) return finish(o_.probe_count());

    if (known_.size() == 2) {
      o_.set_phase("edge");
      auto it = known_.begin();
      Site s1 = it->second;
      Site s2 = std::next(it)->second;
      auto [w1, w2] = bisector_box_crossings(s1.location, s2.location, box);
      bool fresh = false;
      for (Point2 w : {w1, w2}) fresh |= absorb(o_.probe(1, w));
      if (!fresh) {
        result_.confirmed.push_back(
            {Feature::kEdge, sorted_labels({s1.label, s2.label}), w1});
        return finish(o_.probe_count());
      }
    }

    o_.set_phase("vertex");
    for (const auto& [label, s] : known_) diag_.insert(s);
    pending_insertions_.clear();

    bool diagram_changed = true;
    while (diagram_changed) {
      diagram_changed = false;
      auto tents = diag_.tentative_vertices();
      for (const auto& t : tents) {
        if (confirmed_.count(t.triple) || refuted_.count(t.triple)) continue;
        if (o_.probe_count() > 3 * known_.size() + 7)
          throw BudgetExceeded("incremental: probe budget tripwire");
        ProbeResponse resp = o_.probe(1, t.location);
        if (sorted_labels(resp.labels) == t.triple) {
          confirmed_.insert(t.triple);
          result_.confirmed.push_back({Feature::kVertex, t.triple, t.location});
          continue;  // the cached vertex list is still valid
        }
        if (!absorb(resp))
          throw DegenerateInstance(
              "incremental: refuted vertex without a new site");
        refuted_.insert(t.triple);
        for (const Site& s : pending_insertions_) diag_.insert(s);
        pending_insertions_.clear();
        diagram_changed = true;
        break;
      }
    }
    return finish(o_.probe_count());
  }

 private:
  Oracle& o_;
  CloneResult result_;
  IncrementalDiagram diag_;
  std::map<std::string, Site> known_;
  std::vector<Site> pending_insertions_;
  std::set<std::vector<std::string>> confirmed_, refuted_;

  bool absorb(const ProbeResponse& r) {
    bool fresh = false;
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      if (known_.count(r.labels[i])) continue;
      Site s{r.labels[i], r.locations[i]};
      known_[s.label] = s;
      pending_insertions_.push_back(s);
      fresh = true;
    }
    return fresh;
  }

  static std::pair<Point2, Point2> bisector_box_crossings(Point2 a, Point2 b,
                                                          const BoundingBox& box) {
    Line bis = perpendicular_bisector(a, b);
    // Liang-Barsky style param range of the box along the bisector line
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    auto clip = [&](double p, double q) {
      if (std::abs(p) <= kTol) return q >= -kTol;
      double r = q / p;
      if (p < 0)
        t0 = std::max(t0, r);
      else
        t1 = std::min(t1, r);
      return t0 <= t1 + kTol;
    };
    bool ok = clip(-bis.dir.x, bis.point.x - box.lo.x) &&
              clip(bis.dir.x, box.hi.x - bis.point.x) &&
              clip(-bis.dir.y, bis.point.y - box.lo.y) &&
              clip(bis.dir.y, box.hi.y - bis.point.y);
    if (!ok || !std::isfinite(t0) || !std::isfinite(t1))
      throw DegenerateInstance("bisector misses the box");
    return {bis.point + t0 * bis.dir, bis.point + t1 * bis.dir};
  }

  CloneResult finish(std::size_t probes) {
    std::vector<Site> sites;
    for (const auto& [label, s] : known_) sites.push_back(s);
    result_.sites = sites;
    result_.diagram = build_reference(sites, o_.box());
    result_.probes = probes;
    std::size_t n = sites.size();
    result_.bound = n <= 1 ? 4 : 3 * n + 1;
    result_.cell_updates = diag_.updates();
    return std::move(result_);
  }
};

}  // namespace

CloneResult clone_incremental(Oracle& oracle) {
  IncrementalCloner cloner(oracle);
  return cloner.run();
}

// ---------------------------------------------------------------------------
// adversarial instance
// ---------------------------------------------------------------------------

double adversarial_quadratic_max_delta(std::size_t m) {
  double paper = std::pow(0.5, static_cast<double>(m));
  return std::max(paper, 1e-6);  // float-safe floor below the paper's 1/2^m
}

std::vector<Site> adversarial_quadratic_instance(std::size_t m, double delta) {
  if (m < 4 || m % 2 != 0)
    throw InvalidParameters("adversarial instance: m must be even, >= 4");
  if (!(delta > 0.0) || delta > adversarial_quadratic_max_delta(m) * (1 + kTol))
    throw InvalidParameters("adversarial instance: delta out of range");

  std::size_t half = m / 2;
  std::vector<Site> sites;
  char buf[32];
  // bottom cluster within delta of the origin
  for (std::size_t j = 0; j < half; ++j) {
    double x = half == 1 ? 0.0
                         : 0.5 * delta * double(j) / double(half - 1);
    std::snprintf(buf, sizeof buf, "b%03zu", j);
    sites.push_back({buf, {x, 0.0}});
  }
  // descending column at x = delta
  sites.push_back({"p000", {delta, 1.0 - delta}});
  if (half >= 2) {
    double h_first = 0.5;
    double h_last = std::max(std::pow(0.5, double(half - 1)), 1e-5);
    double rho = half == 2 ? 0.5
                           : std::pow(h_last / h_first, 1.0 / double(half - 2));
    double h = h_first;
    for (std::size_t i = 1; i < half; ++i) {
      std::snprintf(buf, sizeof buf, "p%03zu", i);
      sites.push_back({buf, {delta, h}});
      h *= rho;
    }
  }
  return sites;
}

}  // namespace vclone
