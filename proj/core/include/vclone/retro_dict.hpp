#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "vclone/errors.hpp"

namespace vclone {

// Fully-retroactive comparison-based ordered dictionary.
//
// Items carry a lifespan [t_start, t_end) (half-open; t_end may be +inf
// until finalized) and are stored in an interval tree over their lifespans,
// kept weight-balanced as a BB[alpha] tree. Each interval-tree node owns two
// priority search trees over the items stabbing its separator time: L is
// ordered by the dictionary order and heapified on minimum insertion time,
// R likewise on maximum deletion time. A query at time t walks the
// separator path for t and searches L(v) when t <= v.time (activity there
// reduces to t_start <= t) or R(v) otherwise (t_end > t), then combines the
// per-node candidates by comparing them at t.
//
// Order contract: order(a, b, t) is a strict order among payloads whenever
// both are active at t, and the relative order of two items is constant
// across their common active interval. The heap-shaped search never
// evaluates the order against an item that is inactive at the query time,
// which is what makes the contract sufficient.
//
// Ties (order reports neither a<b nor b<a) break by handle creation order.
template <typename Payload, typename Order>
class RetroDict {
 public:
  using Handle = std::uint32_t;
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  struct QueryResult {
    std::optional<Handle> pred;
    std::optional<Handle> succ;
  };

  explicit RetroDict(Order order = Order{}) : order_(std::move(order)) {}

  Handle insert(Payload payload, double t_start) {
    Handle h = static_cast<Handle>(items_.size());
    items_.push_back(Item{std::move(payload), t_start, kInf, nullptr, false});
    insert_time_key(t_start);
    place(h);
    return h;
  }

  void finalize_end(Handle h, double t_end) {
    Item& it = checked(h);
    if (!(t_end > it.t_start))
      throw NonpositiveLifespan("finalize_end: t_end <= t_start");
    insert_time_key(t_end);  // may rebalance and relocate items, incl. h
    Item& cur = items_[h];
    unplace(h);
    cur.t_end = t_end;
    place(h);
  }

  void erase(Handle h) {
    checked(h);
    unplace(h);
    items_[h].erased = true;
    --alive_;
  }

  // side(payload, handle, t) -> negative if the item lies below the query
  // position, positive if above, zero only for the position item itself.
  template <typename Side>
  QueryResult query(double t, Side&& side) const {
    QueryResult res;
    const TNode* u = root_.get();
    while (u) {
      if (t < u->time) {
        search(u->lpst.root, t, side, /*use_start=*/true, res);
        u = u->left.get();
      } else if (t > u->time) {
        search(u->rpst.root, t, side, /*use_start=*/false, res);
        u = u->right.get();
      } else {
        search(u->lpst.root, t, side, /*use_start=*/true, res);
        break;  // deeper nodes cannot hold items active exactly at u->time
      }
    }
    return res;
  }

  // strict neighbors of an existing item at time t
  QueryResult neighbors(double t, Handle h) const {
    const Item& it = items_[h];
    return query(t, [&](const Payload& p, Handle ph, double tt) {
      if (ph == h) return 0;
      if (less_at(p, it.payload, tt)) return -1;
      if (less_at(it.payload, p, tt)) return 1;
      return ph < h ? -1 : 1;  // order tie: handle creation order
    });
  }

  const Payload& payload(Handle h) const { return items_.at(h).payload; }
  double start(Handle h) const { return items_.at(h).t_start; }
  double end(Handle h) const { return items_.at(h).t_end; }
  bool is_erased(Handle h) const {
    return h >= items_.size() || items_[h].erased;
  }
  bool alive_at(Handle h, double t) const {
    if (h >= items_.size() || items_[h].erased) return false;
    return items_[h].t_start <= t && t < items_[h].t_end;
  }

  std::size_t item_count() const { return alive_; }
  std::uint64_t comparisons() const { return comparisons_; }

  // Full structural audit; throws Error with a description on violation.
  void audit() const {
    std::size_t stored = 0;
    audit_node(root_.get(), -kInf, kInf, stored);
    if (stored != alive_) throw Error("audit: stored item count mismatch");
    for (Handle h = 0; h < items_.size(); ++h) {
      const Item& it = items_[h];
      if (it.erased) continue;
      if (!it.node) throw Error("audit: alive item without node");
      if (!(it.t_start <= it.node->time && it.node->time < it.t_end))
        throw Error("audit: item stored at non-stabbing node");
    }
  }

 private:
  struct TNode;

  struct Item {
    Payload payload;
    double t_start;
    double t_end;
    TNode* node;  // interval-tree node currently storing the item
    bool erased;
  };

  struct PNode {
    Handle item;
    PNode* l = nullptr;
    PNode* r = nullptr;
  };

  // Priority search tree: in-order is the dictionary order at the owning
  // node's separator time, heap order on t_start (min) or t_end (max).
  struct Pst {
    PNode* root = nullptr;
  };

  struct TNode {
    double time;
    int weight = 1;  // interval-tree nodes in this subtree
    std::unique_ptr<TNode> left, right;
    Pst lpst, rpst;
  };

  static constexpr double kAlpha = 0.25;

  Order order_;
  std::vector<Item> items_;
  std::unique_ptr<TNode> root_;
  std::size_t alive_ = 0;
  mutable std::uint64_t comparisons_ = 0;

  Item& checked(Handle h) {
    if (h >= items_.size() || items_[h].erased)
      throw InvalidHandle("retro_dict: invalid handle");
    return items_[h];
  }

  bool less_at(const Payload& a, const Payload& b, double t) const {
    ++comparisons_;
    return order_(a, b, t);
  }

  // item order used inside the trees: dictionary order at time t with
  // handle tie-break
  bool item_less(Handle a, Handle b, double t) const {
    const Payload& pa = items_[a].payload;
    const Payload& pb = items_[b].payload;
    if (less_at(pa, pb, t)) return true;
    if (less_at(pb, pa, t)) return false;
    return a < b;
  }

  // ---- priority search tree helpers ----

  double prio(Handle h, bool use_start) const {
    return use_start ? items_[h].t_start : items_[h].t_end;
  }
  // true if a's priority should be nearer the root than b's
  bool prio_wins(Handle a, Handle b, bool use_start) const {
    return use_start ? prio(a, true) < prio(b, true)
                     : prio(a, false) > prio(b, false);
  }

  static PNode* rotate_right(PNode* u) {
    PNode* v = u->l;
    u->l = v->r;
    v->r = u;
    return v;
  }
  static PNode* rotate_left(PNode* u) {
    PNode* v = u->r;
    u->r = v->l;
    v->l = u;
    return v;
  }

  PNode* pst_insert(PNode* u, Handle h, double vtime, bool use_start) {
    if (!u) return new PNode{h};
    if (item_less(h, u->item, vtime)) {
      u->l = pst_insert(u->l, h, vtime, use_start);
      if (prio_wins(u->l->item, u->item, use_start)) u = rotate_right(u);
    } else {
      u->r = pst_insert(u->r, h, vtime, use_start);
      if (prio_wins(u->r->item, u->item, use_start)) u = rotate_left(u);
    }
    return u;
  }

  PNode* pst_erase(PNode* u, Handle h, double vtime, bool use_start) {
    if (!u) throw Error("retro_dict: item missing from PST");
    if (u->item == h) {
      if (!u->l && !u->r) {
        delete u;
        return nullptr;
      }
      if (!u->l || (u->r && prio_wins(u->r->item, u->l->item, use_start))) {
        u = rotate_left(u);
        u->l = pst_erase(u->l, h, vtime, use_start);
      } else {
        u = rotate_right(u);
        u->r = pst_erase(u->r, h, vtime, use_start);
      }
      return u;
    }
    if (item_less(h, u->item, vtime))
      u->l = pst_erase(u->l, h, vtime, use_start);
    else
      u->r = pst_erase(u->r, h, vtime, use_start);
    return u;
  }

  static void pst_free(PNode* u) {
    if (!u) return;
    pst_free(u->l);
    pst_free(u->r);
    delete u;
  }

  static void pst_collect(const PNode* u, std::vector<Handle>& out) {
    if (!u) return;
    pst_collect(u->l, out);
    out.push_back(u->item);
    pst_collect(u->r, out);
  }

  // Heap-pruned search. The heap shape guarantees that whenever a node
  // survives the priority cut its own item qualifies, so every order
  // evaluation involves an item active at t.
  template <typename Side>
  void search(const PNode* u, double t, Side&& side, bool use_start,
              QueryResult& res) const {
    // pred scan
    const PNode* n = u;
    while (n) {
      if (use_start ? items_[n->item].t_start > t : items_[n->item].t_end <= t)
        break;  // heap prune: nothing below qualifies
      int s = side(items_[n->item].payload, n->item, t);
      if (s < 0) {
        offer_pred(res, n->item, t);
        n = n->r;
      } else {
        n = n->l;
      }
    }
    // succ scan
    n = u;
    while (n) {
      if (use_start ? items_[n->item].t_start > t : items_[n->item].t_end <= t)
        break;
      int s = side(items_[n->item].payload, n->item, t);
      if (s > 0) {
        offer_succ(res, n->item, t);
        n = n->l;
      } else {
        n = n->r;
      }
    }
  }

  void offer_pred(QueryResult& res, Handle h, double t) const {
    if (!res.pred || item_less(*res.pred, h, t)) res.pred = h;
  }
  void offer_succ(QueryResult& res, Handle h, double t) const {
    if (!res.succ || item_less(h, *res.succ, t)) res.succ = h;
  }

  // ---- interval tree ----

  void place(Handle h) {
    Item& it = items_[h];
    TNode* u = root_.get();
    while (u) {
      if (it.t_end <= u->time) {
        u = u->left.get();
      } else if (it.t_start > u->time) {
        u = u->right.get();
      } else {
        it.node = u;
        u->lpst.root = pst_insert(u->lpst.root, h, u->time, true);
        u->rpst.root = pst_insert(u->rpst.root, h, u->time, false);
        ++alive_;
        return;
      }
    }
    throw Error("retro_dict: no stabbing node for item");
  }

  void unplace(Handle h) {
    Item& it = items_[h];
    TNode* u = it.node;
    if (!u) throw Error("retro_dict: unplace without node");
    u->lpst.root = pst_erase(u->lpst.root, h, u->time, true);
    u->rpst.root = pst_erase(u->rpst.root, h, u->time, false);
    it.node = nullptr;
    --alive_;
  }

  static int weight(const TNode* u) { return u ? u->weight : 0; }

  void insert_time_key(double t) {
    if (t == kInf) return;  // +inf sentinel never becomes a key
    // descend; remember the path for weight updates and balance checking
    std::vector<TNode*> path;
    TNode* u = root_.get();
    while (u) {
      path.push_back(u);
      if (t == u->time) return;  // already present
      u = (t < u->time) ? u->left.get() : u->right.get();
    }
    // attach a fresh leaf
    TNode* parent = path.empty() ? nullptr : path.back();
    auto leaf = std::make_unique<TNode>();
    leaf->time = t;
    if (!parent) {
      root_ = std::move(leaf);
    } else if (t < parent->time) {
      parent->left = std::move(leaf);
    } else {
      parent->right = std::move(leaf);
    }
    for (TNode* n : path) ++n->weight;

    // rebuild the highest subtree violating BB[alpha]
    std::unique_ptr<TNode>* slot = &root_;
    while (*slot) {
      TNode* n = slot->get();
      double bound = kAlpha * (n->weight + 1);
      if (weight(n->left.get()) + 1 < bound ||
          weight(n->right.get()) + 1 < bound) {
        rebuild(*slot);
        return;
      }
      if (t == n->time) return;
      slot = (t < n->time) ? &n->left : &n->right;
    }
  }

  void collect_subtree(TNode* u, std::vector<double>& times,
                       std::vector<Handle>& its) {
    if (!u) return;
    collect_subtree(u->left.get(), times, its);
    times.push_back(u->time);
    pst_collect(u->lpst.root, its);
    collect_subtree(u->right.get(), times, its);
  }

  std::unique_ptr<TNode> build_balanced(const std::vector<double>& times,
                                        std::size_t lo, std::size_t hi) {
    if (lo >= hi) return nullptr;
    std::size_t mid = lo + (hi - lo) / 2;
    auto n = std::make_unique<TNode>();
    n->time = times[mid];
    n->left = build_balanced(times, lo, mid);
    n->right = build_balanced(times, mid + 1, hi);
    n->weight = 1 + weight(n->left.get()) + weight(n->right.get());
    return n;
  }

  void rebuild(std::unique_ptr<TNode>& slot) {
    std::vector<double> times;
    std::vector<Handle> its;
    collect_subtree(slot.get(), times, its);
    free_subtree(slot.get());
    slot = build_balanced(times, 0, times.size());
    for (Handle h : its) {
      // re-place within the rebuilt subtree
      Item& it = items_[h];
      TNode* u = slot.get();
      it.node = nullptr;
      while (u) {
        if (it.t_end <= u->time) {
          u = u->left.get();
        } else if (it.t_start > u->time) {
          u = u->right.get();
        } else {
          it.node = u;
          u->lpst.root = pst_insert(u->lpst.root, h, u->time, true);
          u->rpst.root = pst_insert(u->rpst.root, h, u->time, false);
          break;
        }
      }
      if (!it.node) throw Error("retro_dict: rebuild lost an item");
    }
  }

  static void free_subtree(TNode* u) {
    if (!u) return;
    free_subtree(u->left.get());
    free_subtree(u->right.get());
    pst_free(u->lpst.root);
    pst_free(u->rpst.root);
    u->lpst.root = nullptr;
    u->rpst.root = nullptr;
  }

  // ---- audit helpers ----

  void audit_pst(const PNode* u, double vtime, bool use_start,
                 std::vector<Handle>& inorder) const {
    if (!u) return;
    if (u->l) {
      if (!item_less(u->l->item, u->item, vtime))
        throw Error("audit: PST in-order violated (left)");
      if (prio_wins(u->l->item, u->item, use_start))
        throw Error("audit: PST heap violated (left)");
    }
    if (u->r) {
      if (!item_less(u->item, u->r->item, vtime))
        throw Error("audit: PST in-order violated (right)");
      if (prio_wins(u->r->item, u->item, use_start))
        throw Error("audit: PST heap violated (right)");
    }
    audit_pst(u->l, vtime, use_start, inorder);
    inorder.push_back(u->item);
    audit_pst(u->r, vtime, use_start, inorder);
  }

  int audit_node(const TNode* u, double lo, double hi,
                 std::size_t& stored) const {
    if (!u) return 0;
    if (!(u->time > lo && u->time < hi))
      throw Error("audit: interval tree key order violated");
    int wl = audit_node(u->left.get(), lo, u->time, stored);
    int wr = audit_node(u->right.get(), u->time, hi, stored);
    if (u->weight != wl + wr + 1) throw Error("audit: weight mismatch");
    double bound = kAlpha * (u->weight + 1);
    if (wl + 1 < bound || wr + 1 < bound)
      throw Error("audit: BB[alpha] violated");

    std::vector<Handle> linorder, rinorder;
    audit_pst(u->lpst.root, u->time, true, linorder);
    audit_pst(u->rpst.root, u->time, false, rinorder);
    for (std::size_t i = 1; i < linorder.size(); ++i)
      if (!item_less(linorder[i - 1], linorder[i], u->time))
        throw Error("audit: L in-order not sorted");
    for (std::size_t i = 1; i < rinorder.size(); ++i)
      if (!item_less(rinorder[i - 1], rinorder[i], u->time))
        throw Error("audit: R in-order not sorted");
    std::vector<Handle> ls = linorder, rs = rinorder;
    std::sort(ls.begin(), ls.end());
    std::sort(rs.begin(), rs.end());
    if (ls != rs) throw Error("audit: L/R item sets differ");
    for (Handle h : linorder) {
      const Item& it = items_[h];
      if (it.erased) throw Error("audit: erased item still stored");
      if (!(it.t_start <= u->time && u->time < it.t_end))
        throw Error("audit: non-stabbing item in PSTs");
      if (it.node != u) throw Error("audit: item node pointer mismatch");
    }
    stored += linorder.size();
    return u->weight;
  }

 public:
  ~RetroDict() {
    if (root_) free_all(root_.get());
  }
  RetroDict(const RetroDict&) = delete;
  RetroDict& operator=(const RetroDict&) = delete;
  RetroDict(RetroDict&&) = default;
  RetroDict& operator=(RetroDict&&) = default;

 private:
  static void free_all(TNode* u) {
    if (!u) return;
    free_all(u->left.get());
    free_all(u->right.get());
    pst_free(u->lpst.root);
    pst_free(u->rpst.root);
    u->lpst.root = nullptr;
    u->rpst.root = nullptr;
  }
};

}  // namespace vclone
