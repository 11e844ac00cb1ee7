#pragma once

#include <optional>
#include <vector>

#include "disklab/domains.hpp"

namespace disklab {

/// Grid graph over a domain's bounding box: grid_n x grid_n cell centers,
/// 8-connectivity with exact Euclidean weights (no corner cutting through
/// blocked cells), nodes blocked when within clearance = 10/grid_n of the
/// slit set or the outer boundary.  Shortest paths give upper bounds for the
/// arc-length distance that tighten under grid refinement.
class GridGraph {
  public:
    GridGraph(const Domain& domain, int grid_n);

    int grid_n() const { return n_; }
    double clearance() const { return clearance_; }
    std::size_t free_count() const { return positions_.size(); }

    /// Nearest free node (searching outward from the containing cell);
    /// -1 when none within a few clearance radii.
    int snap(Complex p) const;
    Complex node_position(int node) const { return positions_[static_cast<std::size_t>(node)]; }

    /// Dijkstra from the given free node; lexicographic tie-breaking via the
    /// (distance, node index) queue ordering.
    std::vector<double> shortest_from(int source_node) const;

    /// Snapped endpoint-to-endpoint distance: |a - node_a| + graph distance +
    /// |node_b - b|.  nullopt when snapping fails or no path exists.
    std::optional<double> distance(Complex a, Complex b) const;

    /// Distances from `a` to many targets off a single Dijkstra sweep.
    std::vector<std::optional<double>> distances(Complex a,
                                                 const std::vector<Complex>& targets) const;

  private:
    int index_of(int i, int j) const { return cell_node_[static_cast<std::size_t>(i) * n_ + j]; }

    int n_;
    double clearance_;
    double x0_, y0_, h_;
    std::vector<int> cell_node_;       // grid cell -> free node id or -1
    std::vector<Complex> positions_;   // free node id -> position
    std::vector<int> node_cell_;       // free node id -> cell index
};

struct DiameterResult {
    double diameter = 0.0;
    int unreachable_pairs = 0;
};

/// Max pairwise snapped distance over the sample points.
DiameterResult arc_length_diameter(const GridGraph& graph, const std::vector<Complex>& samples);

} // namespace disklab
