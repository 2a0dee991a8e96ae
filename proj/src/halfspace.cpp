#include "segdp/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace segdp {

namespace {
constexpr std::uint32_t kLeafSize = 8;
}

PointSet4D::PointSet4D(HalfspaceBackend backend) : backend_(backend) {}

void PointSet4D::insert(const Point4& p) {
    for (double c : p.coords)
        if (!std::isfinite(c)) throw std::invalid_argument("PointSet4D: non-finite coordinate");
    for (const Point4& q : points_)
        if (q.tag == p.tag) throw std::invalid_argument("PointSet4D: duplicate tag");
    points_.push_back(p);
    if (backend_ == HalfspaceBackend::Tree) {
        ++fresh_;
        if (fresh_ >= points_.size() - fresh_) rebuild();
    }
}

void PointSet4D::rebuild() {
    order_.resize(points_.size());
    for (std::uint32_t k = 0; k < order_.size(); ++k) order_[k] = k;
    nodes_.clear();
    fresh_ = 0;
    if (!order_.empty()) build_node(0, static_cast<std::uint32_t>(order_.size()));
}

std::int32_t PointSet4D::build_node(std::uint32_t begin, std::uint32_t end) {
    Node node;
    node.begin = begin;
    node.end = end;
    for (int d = 0; d < 4; ++d) {
        node.lo[d] = std::numeric_limits<double>::infinity();
        node.hi[d] = -std::numeric_limits<double>::infinity();
    }
    for (std::uint32_t k = begin; k < end; ++k) {
        const auto& c = points_[order_[k]].coords;
        for (int d = 0; d < 4; ++d) {
            node.lo[d] = std::min(node.lo[d], c[d]);
            node.hi[d] = std::max(node.hi[d], c[d]);
        }
    }
    const std::int32_t id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(node);
    if (end - begin > kLeafSize) {
        int axis = 0;
        double width = -1;
        for (int d = 0; d < 4; ++d) {
            const double w = node.hi[d] - node.lo[d];
            if (w > width) {
                width = w;
                axis = d;
            }
        }
        const std::uint32_t mid = begin + (end - begin) / 2;
        std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                         [&](std::uint32_t a, std::uint32_t b) {
                             return points_[a].coords[axis] < points_[b].coords[axis];
                         });
        const std::int32_t l = build_node(begin, mid);
        const std::int32_t r = build_node(mid, end);
        nodes_[id].left = l;
        nodes_[id].right = r;
    }
    return id;
}

void PointSet4D::search(std::int32_t node, const std::array<double, 4>& q, double& best,
                        std::int64_t& best_idx) const {
    const Node& nd = nodes_[node];
    double bound = 0.0;
    for (int d = 0; d < 4; ++d) bound += q[d] * (q[d] >= 0 ? nd.lo[d] : nd.hi[d]);
    if (best_idx >= 0 && bound > best) return;
    if (nd.left < 0) {
        for (std::uint32_t k = nd.begin; k < nd.end; ++k) {
            ++scanned_;
            const double dp = dot4(q, points_[order_[k]].coords);
            if (best_idx < 0 || dp < best) {
                best = dp;
                best_idx = order_[k];
            }
        }
        return;
    }
    // visit the tighter child first
    double lb[2] = {0.0, 0.0};
    const std::int32_t kids[2] = {nd.left, nd.right};
    for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 4; ++d)
            lb[c] += q[d] * (q[d] >= 0 ? nodes_[kids[c]].lo[d] : nodes_[kids[c]].hi[d]);
    const int first = lb[0] <= lb[1] ? 0 : 1;
    search(kids[first], q, best, best_idx);
    search(kids[1 - first], q, best, best_idx);
}

std::optional<std::uint64_t> PointSet4D::query(const Halfspace4& h) const {
    bool all_zero = true;
    for (double c : h.normal) {
        if (!std::isfinite(c)) throw std::invalid_argument("PointSet4D: non-finite normal");
        if (c != 0) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("PointSet4D: zero normal");
    if (points_.empty()) return std::nullopt;

    double best = 0.0;
    std::int64_t best_idx = -1;
    if (backend_ == HalfspaceBackend::Tree && !nodes_.empty())
        search(0, h.normal, best, best_idx);
    const std::size_t linear_from =
        backend_ == HalfspaceBackend::Tree ? points_.size() - fresh_ : 0;
    for (std::size_t k = linear_from; k < points_.size(); ++k) {
        ++scanned_;
        const double dp = dot4(h.normal, points_[k].coords);
        if (best_idx < 0 || dp < best) {
            best = dp;
            best_idx = static_cast<std::int64_t>(k);
        }
    }
    if (best <= h.threshold) return points_[static_cast<std::size_t>(best_idx)].tag;
    return std::nullopt;
}

} // namespace segdp
