#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dyckt/skew.hpp"

namespace dyckt {

// A tile is a path of nodes running west to east, each step NE or SE.
// It is a Dyck tile when the maximum height is attained at both ends.
struct Tile {
    std::vector<Node> path;

    Node start() const { return path.front(); }
    Node end() const { return path.back(); }
    bool big() const { return path.size() > 1; }
    int height() const;
    int depth(Node n) const { return height() - n.height(); }
    bool contains(Node n) const;
    bool valid_path() const;
    bool is_dyck() const;

    bool operator==(const Tile& o) const { return path == o.path; }
};

// A partition of a skew shape into Dyck tiles.
class Tiling {
public:
    Tiling(SkewShape shape, std::vector<Tile> tiles);

    const SkewShape& shape() const { return shape_; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    int tile_count() const { return static_cast<int>(tiles_.size()); }

    int tile_index(Node n) const;  // -1 when n is not a cell
    const Tile& tile_of(Node n) const;
    // n and m lie in a common tile (and are therefore consecutive in it)
    bool attached(Node n, Node m) const;

    bool same_tiles(const Tiling& o) const;

private:
    SkewShape shape_;
    std::vector<Tile> tiles_;
    std::map<Node, int> tile_of_;
};

// Every Dyck tiling of the shape, exactly once, in a deterministic order.
std::vector<Tiling> enumerate_tilings(const SkewShape& shape, int cell_cap = 24);

enum class Side { Left, Right, Both };

// The nine equivalent formulations of cover-inclusiveness; `condition`
// selects one of them (1..9).  All nine agree on every valid tiling.
//   1 both-sides definition        2 depths weakly increase upward
//   3 translate containment       4 NW attachment propagates upward
//   5 end nodes propagate down    6 right-sided definition
//   7 NE attachment propagates    8 start nodes propagate down
//   9 left-sided definition
bool is_cover_inclusive(const Tiling& t, int condition);
inline bool is_cover_inclusive(const Tiling& t) { return is_cover_inclusive(t, 1); }

// Evaluated both from the covering definition and from the tile-boundary
// criterion (start has no NW neighbour / end has no NE neighbour); the two
// must agree.
bool is_cover_expansive(const Tiling& t, Side side);

// The unique cover-expansive tiling of the shape, if one exists; built
// greedily by peeling the tile of the leftmost lowest node.
std::optional<Tiling> find_ce_tiling(const SkewShape& shape);

// Size of the highest tile starting in column c (resp. ending in column c).
std::optional<int> highest_tile_starting(const Tiling& t, int c);
std::optional<int> highest_tile_ending(const Tiling& t, int c);
bool has_big_tile_starting(const Tiling& t, int c);
bool has_big_tile_ending(const Tiling& t, int c);

}  // namespace dyckt
