#include "disklab/gridpath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace disklab {

GridGraph::GridGraph(const Domain& domain, int grid_n) : n_(grid_n) {
    if (grid_n < 16) throw std::domain_error("GridGraph: grid_n too small");
    const auto box = domain.bbox();
    h_ = (box[1] - box[0]) / grid_n;
    const double hy = (box[3] - box[2]) / grid_n;
    if (std::abs(h_ - hy) > 1e-15) throw std::domain_error("GridGraph: bbox must be square");
    x0_ = box[0];
    y0_ = box[2];
    clearance_ = 10.0 / grid_n;

    cell_node_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const Complex p(x0_ + (i + 0.5) * h_, y0_ + (j + 0.5) * h_);
            if (domain.obstacle_clearance(p) >= clearance_ && domain.contains(p)) {
                cell_node_[static_cast<std::size_t>(i) * n_ + j] =
                    static_cast<int>(positions_.size());
                positions_.push_back(p);
                node_cell_.push_back(i * n_ + j);
            }
        }
    }
}

int GridGraph::snap(Complex p) const {
    const int ci = std::clamp(static_cast<int>((p.real() - x0_) / h_), 0, n_ - 1);
    const int cj = std::clamp(static_cast<int>((p.imag() - y0_) / h_), 0, n_ - 1);
    const int max_ring = std::max(16, static_cast<int>(std::ceil(3.0 * clearance_ / h_)));
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int ring = 0; ring <= max_ring; ++ring) {
        for (int i = std::max(0, ci - ring); i <= std::min(n_ - 1, ci + ring); ++i) {
            for (int j = std::max(0, cj - ring); j <= std::min(n_ - 1, cj + ring); ++j) {
                if (std::max(std::abs(i - ci), std::abs(j - cj)) != ring) continue;
                const int node = index_of(i, j);
                if (node < 0) continue;
                const double d = std::abs(positions_[static_cast<std::size_t>(node)] - p);
                if (d < best_d) {
                    best_d = d;
                    best = node;
                }
            }
        }
        if (best >= 0 && ring > best_d / h_ + 1.5) break;  // no closer node possible
    }
    return best;
}

std::vector<double> GridGraph::shortest_from(int source_node) const {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(positions_.size(), inf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[static_cast<std::size_t>(source_node)] = 0.0;
    queue.push({0.0, source_node});
    const double diag = h_ * std::sqrt(2.0);
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        const int cell = node_cell_[static_cast<std::size_t>(u)];
        const int i = cell / n_, j = cell % n_;
        auto relax = [&](int node, double w) {
            if (node < 0) return;
            const double nd = d + w;
            if (nd < dist[static_cast<std::size_t>(node)]) {
                dist[static_cast<std::size_t>(node)] = nd;
                queue.push({nd, node});
            }
        };
        const int left = i > 0 ? index_of(i - 1, j) : -1;
        const int right = i + 1 < n_ ? index_of(i + 1, j) : -1;
        const int down = j > 0 ? index_of(i, j - 1) : -1;
        const int up = j + 1 < n_ ? index_of(i, j + 1) : -1;
        relax(left, h_);
        relax(right, h_);
        relax(down, h_);
        relax(up, h_);
        // diagonals only when both adjacent orthogonal cells are free
        if (left >= 0 && down >= 0) relax(index_of(i - 1, j - 1), diag);
        if (left >= 0 && up >= 0) relax(index_of(i - 1, j + 1), diag);
        if (right >= 0 && down >= 0) relax(index_of(i + 1, j - 1), diag);
        if (right >= 0 && up >= 0) relax(index_of(i + 1, j + 1), diag);
    }
    return dist;
}

std::optional<double> GridGraph::distance(Complex a, Complex b) const {
    auto d = distances(a, {b});
    return d[0];
}

std::vector<std::optional<double>> GridGraph::distances(
    Complex a, const std::vector<Complex>& targets) const {
    std::vector<std::optional<double>> out(targets.size());
    const int sa = snap(a);
    if (sa < 0) return out;
    const double snap_a = std::abs(positions_[static_cast<std::size_t>(sa)] - a);
    const auto dist = shortest_from(sa);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const int sb = snap(targets[t]);
        if (sb < 0) continue;
        const double d = dist[static_cast<std::size_t>(sb)];
        if (!std::isfinite(d)) continue;
        out[t] = snap_a + d + std::abs(positions_[static_cast<std::size_t>(sb)] - targets[t]);
    }
    return out;
}

DiameterResult arc_length_diameter(const GridGraph& graph, const std::vector<Complex>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("arc_length_diameter: need at least 2 samples");
    DiameterResult out;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        std::vector<Complex> rest(samples.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                  samples.end());
        const auto d = graph.distances(samples[i], rest);
        for (const auto& v : d) {
            if (!v) {
                ++out.unreachable_pairs;
                continue;
            }
            out.diameter = std::max(out.diameter, *v);
        }
    }
    return out;
}

} // namespace disklab
