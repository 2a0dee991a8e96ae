#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace segdp {

struct Point4 {
    std::array<double, 4> coords{};
    std::uint64_t tag = 0;
};

// Query halfspace: dot(normal, p) <= threshold.
struct Halfspace4 {
    std::array<double, 4> normal{};
    double threshold = 0.0;
};

inline double dot4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

enum class HalfspaceBackend { LinearScan, Tree };

// Dynamic 4D point set answering halfspace-emptiness queries exactly, with
// the minimum-dot-product point as witness. The tree backend prunes via
// axis-aligned bounding boxes over a balanced spatial partition that is
// rebuilt when the insert buffer reaches the committed size (amortized
// doubling); decisions are identical to the linear scan.
class PointSet4D {
public:
    explicit PointSet4D(HalfspaceBackend backend = HalfspaceBackend::LinearScan);

    void insert(const Point4& p);
    std::size_t size() const { return points_.size(); }

    // Tag of the minimum-dot-product point if its dot is <= threshold
    // (boundary counts as inside), nullopt otherwise.
    std::optional<std::uint64_t> query(const Halfspace4& h) const;

    std::uint64_t points_scanned() const { return scanned_; }

private:
    struct Node {
        std::array<double, 4> lo{};
        std::array<double, 4> hi{};
        std::uint32_t begin = 0, end = 0; // range in order_ (leaf if count small)
        std::int32_t left = -1, right = -1;
    };

    void rebuild();
    std::int32_t build_node(std::uint32_t begin, std::uint32_t end);
    void search(std::int32_t node, const std::array<double, 4>& q, double& best,
                std::int64_t& best_idx) const;

    HalfspaceBackend backend_;
    std::vector<Point4> points_;
    std::vector<bool> tag_seen_;
    // tree over points_[order_[begin..end)]; fresh_ counts trailing points not
    // yet in the tree
    std::vector<std::uint32_t> order_;
    std::vector<Node> nodes_;
    std::size_t fresh_ = 0;
    mutable std::uint64_t scanned_ = 0;
};

} // namespace segdp
