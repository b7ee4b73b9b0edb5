#ifndef DISTSUM_COLORING_HPP
#define DISTSUM_COLORING_HPP

#include "distsum/graph.hpp"

namespace distsum {

/// Total map edge -> positive color, keyed by the owning graph's edge ids.
/// A value of 0 marks a not-yet-assigned edge.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(int edge_count) : colors_(edge_count, 0) {}

    Color get(int edge_id) const { return colors_.at(edge_id); }
    void set(int edge_id, Color c) { colors_.at(edge_id) = c; }
    int size() const { return static_cast<int>(colors_.size()); }

    bool total() const;
    Color max_color() const;
    std::vector<int> missing_edges() const;

    bool operator==(const EdgeColoring&) const = default;

private:
    std::vector<Color> colors_;
};

/// Proper edge coloring with colors in [1, max_degree+1] via Misra-Gries.
/// Deterministic: edges processed in id order, lowest free color and lowest
/// fan vertex at every choice point.
EdgeColoring vizing_color(const Graph& g);

/// Adds a non-negative offset to every color.
EdgeColoring remap_colors(const EdgeColoring& c, Color offset);

}  // namespace distsum

#endif
