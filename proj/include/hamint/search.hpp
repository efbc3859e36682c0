#pragma once

#include <vector>

#include "hamint/errors.hpp"
#include "hamint/face.hpp"

namespace hamint {

struct SearchOptions {
  int cap = 10;  ///< largest vertex count accepted by exhaustive searches
};

inline void require_within_cap(int n, const SearchOptions& opts) {
  if (n > opts.cap) throw CapacityError("labeling search on " + std::to_string(n) + " vertices", n, opts.cap, "--cap");
}

/// Backtracking over vertex orders; position p of the order receives label p+1.
///
/// Policy::place(order, pos) is called after order[pos] is set and returns false to
/// prune; Policy::unplace(order, pos) is always called afterwards.
/// Policy::accept(order) filters complete orders. on_leaf returns true to stop.
template <class Policy, class OnLeaf>
bool search_orders(int n, Policy& policy, OnLeaf&& on_leaf) {
  std::vector<Vertex> order(n, 0);
  VertexMask used = 0;
  auto rec = [&](auto& self, int pos) -> bool {
    for (Vertex v = 1; v <= n; ++v) {
      VertexMask bit = vertex_bit(v);
      if (used & bit) continue;
      order[pos] = v;
      used |= bit;
      bool stop = false;
      if (policy.place(order, pos)) {
        if (pos + 1 == n) {
          stop = policy.accept(order) && on_leaf(order);
        } else {
          stop = self(self, pos + 1);
        }
      }
      policy.unplace(order, pos);
      used &= ~bit;
      if (stop) return true;
    }
    return false;
  };
  if (n == 0) return false;
  return rec(rec, 0);
}

}  // namespace hamint
