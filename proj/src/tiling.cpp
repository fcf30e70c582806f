#include "dyckt/tiling.hpp"

#include <algorithm>

namespace dyckt {

int Tile::height() const
{
    int h = path.front().height();
    for (Node n : path)
        h = std::max(h, n.height());
    return h;
}

bool Tile::contains(Node n) const
{
    return std::find(path.begin(), path.end(), n) != path.end();
}

bool Tile::valid_path() const
{
    if (path.empty())
        return false;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i + 1] != path[i].ne() && path[i + 1] != path[i].se())
            return false;
    return true;
}

bool Tile::is_dyck() const
{
    if (!valid_path())
        return false;
    int h = height();
    return start().height() == h && end().height() == h;
}

Tiling::Tiling(SkewShape shape, std::vector<Tile> tiles)
    : shape_(std::move(shape)), tiles_(std::move(tiles))
{
    Int covered = 0;
    for (size_t i = 0; i < tiles_.size(); ++i) {
        if (!tiles_[i].is_dyck())
            throw Error("tiling contains a non-Dyck tile");
        for (Node n : tiles_[i].path) {
            if (!shape_.contains(n))
                throw Error("tile node outside the shape");
            if (!tile_of_.emplace(n, static_cast<int>(i)).second)
                throw Error("tiles overlap");
            ++covered;
        }
    }
    if (covered != shape_.cell_count())
        throw Error("tiles do not cover the shape");
}

int Tiling::tile_index(Node n) const
{
    auto it = tile_of_.find(n);
    return it == tile_of_.end() ? -1 : it->second;
}

const Tile& Tiling::tile_of(Node n) const
{
    int i = tile_index(n);
    if (i < 0)
        throw IndexOutOfRange("node not in tiling");
    return tiles_[i];
}

bool Tiling::attached(Node n, Node m) const
{
    int i = tile_index(n);
    return i >= 0 && i == tile_index(m);
}

bool Tiling::same_tiles(const Tiling& o) const
{
    if (!(shape_ == o.shape_) || tiles_.size() != o.tiles_.size())
        return false;
    auto key = [](const Tiling& t) {
        std::vector<std::vector<Node>> k;
        for (const Tile& tile : t.tiles_)
            k.push_back(tile.path);
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(*this) == key(o);
}

namespace {

struct OpenTile {
    int path_id;
    Node at;      // east-most node so far, in the previous column
    int cap;      // height of the start node
    bool extended = false;
};

struct Enumerator {
    const SkewShape& shape;
    std::vector<std::vector<Node>> paths;
    std::vector<Tiling> out;

    explicit Enumerator(const SkewShape& s) : shape(s) {}

    void emit()
    {
        std::vector<Tile> tiles;
        tiles.reserve(paths.size());
        for (const auto& p : paths)
            tiles.push_back(Tile{p});
        out.emplace_back(shape, std::move(tiles));
    }

    // all open tiles must close with their end at full height
    static bool closable(const std::vector<OpenTile>& open)
    {
        for (const OpenTile& t : open)
            if (!t.extended && t.at.height() != t.cap)
                return false;
        return true;
    }

    void column_done(int c, std::vector<OpenTile>& cur)
    {
        if (c >= shape.max_col()) {
            for (const OpenTile& t : cur)
                if (t.at.height() != t.cap)
                    return;
            emit();
            return;
        }
        place(c + 1, 0, cur);
    }

    // assign the idx-th node (top first) of column c
    void place(int c, size_t idx, std::vector<OpenTile>& prev)
    {
        const auto& nodes = shape.column(c);
        if (idx == nodes.size()) {
            if (!closable(prev))
                return;
            std::vector<OpenTile> cur;
            for (OpenTile& t : prev)
                if (t.extended)
                    cur.push_back({t.path_id, paths[t.path_id].back(), t.cap, false});
            column_done(c, cur);
            return;
        }
        Node n = nodes[nodes.size() - 1 - idx];
        // continue an open tile through its NE or SE step; recursion may
        // reallocate prev, so index access only
        const size_t n_prev = prev.size();
        for (size_t ti = 0; ti < n_prev; ++ti) {
            if (prev[ti].extended)
                continue;
            Node at = prev[ti].at;
            if (!(at.ne() == n || at.se() == n) || n.height() > prev[ti].cap)
                continue;
            const int pid = prev[ti].path_id;
            prev[ti].extended = true;
            paths[pid].push_back(n);
            place(c, idx + 1, prev);
            paths[pid].pop_back();
            prev[ti].extended = false;
        }
        // or start a new tile at n
        paths.push_back({n});
        prev.push_back({static_cast<int>(paths.size()) - 1, n, n.height(), true});
        place(c, idx + 1, prev);
        prev.pop_back();
        paths.pop_back();
    }

    void run()
    {
        if (shape.cell_count() == 0) {
            emit();
            return;
        }
        std::vector<OpenTile> none;
        place(shape.min_col(), 0, none);
    }
};

}  // namespace

std::vector<Tiling> enumerate_tilings(const SkewShape& shape, int cell_cap)
{
    if (shape.cell_count() > cell_cap)
        throw CapExceeded("shape has " + std::to_string(shape.cell_count()) +
                          " cells, enumeration cap is " + std::to_string(cell_cap));
    Enumerator e(shape);
    e.run();
    return std::move(e.out);
}

namespace {

bool left_ci_def(const Tiling& t, Node n)
{
    Node up = n.north();
    if (!t.shape().contains(up))
        return true;
    return t.tile_of(up).start().col() <= t.tile_of(n).start().col();
}

bool right_ci_def(const Tiling& t, Node n)
{
    Node up = n.north();
    if (!t.shape().contains(up))
        return true;
    return t.tile_of(up).end().col() >= t.tile_of(n).end().col();
}

}  // namespace

bool is_cover_inclusive(const Tiling& t, int condition)
{
    if (condition < 1 || condition > 9)
        throw IndexOutOfRange("cover-inclusive condition must be 1..9");
    const SkewShape& sh = t.shape();
    for (Node n : sh.cells()) {
        Node up = n.north();
        if (!sh.contains(up))
            continue;
        switch (condition) {
        case 1:
            if (!left_ci_def(t, n) || !right_ci_def(t, n))
                return false;
            break;
        case 2:
            if (t.tile_of(up).depth(up) < t.tile_of(n).depth(n))
                return false;
            break;
        case 3: {
            const Tile& upper = t.tile_of(up);
            for (Node p : t.tile_of(n).path)
                if (!upper.contains(p.north()))
                    return false;
            break;
        }
        case 4:
            if (t.attached(n, n.nw()) &&
                !(sh.contains(up.nw()) && t.attached(up, up.nw())))
                return false;
            break;
        case 5:
            if (t.tile_of(up).end() == up && t.tile_of(n).end() != n)
                return false;
            break;
        case 6:
            if (!right_ci_def(t, n))
                return false;
            break;
        case 7:
            if (t.attached(n, n.ne()) &&
                !(sh.contains(up.ne()) && t.attached(up, up.ne())))
                return false;
            break;
        case 8:
            if (t.tile_of(up).start() == up && t.tile_of(n).start() != n)
                return false;
            break;
        case 9:
            if (!left_ci_def(t, n))
                return false;
            break;
        }
    }
    return true;
}

bool is_cover_expansive(const Tiling& t, Side side)
{
    const SkewShape& sh = t.shape();
    bool left_crit = true, right_crit = true;
    for (const Tile& tile : t.tiles()) {
        if (sh.contains(tile.start().nw()))
            left_crit = false;
        if (sh.contains(tile.end().ne()))
            right_crit = false;
    }
    bool left_def = true, right_def = true;
    for (Node n : sh.cells()) {
        if (sh.contains(n.se()) &&
            t.tile_of(n.se()).start().col() > t.tile_of(n).start().col())
            left_def = false;
        if (sh.contains(n.sw()) &&
            t.tile_of(n.sw()).end().col() < t.tile_of(n).end().col())
            right_def = false;
    }
    if (left_crit != left_def || right_crit != right_def)
        throw Error("internal: cover-expansive criterion disagrees with the definition");
    switch (side) {
    case Side::Left:
        return left_crit;
    case Side::Right:
        return right_crit;
    default:
        return left_crit && right_crit;
    }
}

std::optional<Tiling> find_ce_tiling(const SkewShape& shape)
{
    std::map<int, std::vector<Node>> cols;  // col -> nodes, heights ascending
    for (int c = shape.min_col(); c <= shape.max_col(); ++c)
        if (!shape.column(c).empty())
            cols[c] = shape.column(c);
    std::vector<Tile> tiles;
    while (!cols.empty()) {
        auto it = cols.begin();
        const int c0 = it->first;
        Node start = it->second.front();
        const int h = start.height();
        std::vector<Node> path{start};
        for (int c = c0 + 1;; ++c) {
            auto jt = cols.find(c);
            if (jt == cols.end() || jt->second.front().height() > h)
                break;
            path.push_back(jt->second.front());
        }
        Tile tile{path};
        if (!tile.is_dyck())
            return std::nullopt;
        for (Node n : path) {
            auto& col = cols[n.col()];
            col.erase(col.begin());
            if (col.empty())
                cols.erase(n.col());
        }
        tiles.push_back(std::move(tile));
    }
    Tiling t(shape, std::move(tiles));
    if (!is_cover_expansive(t, Side::Both))
        return std::nullopt;
    return t;
}

std::optional<int> highest_tile_starting(const Tiling& t, int c)
{
    const Tile* best = nullptr;
    for (const Tile& tile : t.tiles())
        if (tile.start().col() == c && (!best || tile.height() > best->height()))
            best = &tile;
    if (!best)
        return std::nullopt;
    return static_cast<int>(best->path.size());
}

std::optional<int> highest_tile_ending(const Tiling& t, int c)
{
    const Tile* best = nullptr;
    for (const Tile& tile : t.tiles())
        if (tile.end().col() == c && (!best || tile.height() > best->height()))
            best = &tile;
    if (!best)
        return std::nullopt;
    return static_cast<int>(best->path.size());
}

bool has_big_tile_starting(const Tiling& t, int c)
{
    for (const Tile& tile : t.tiles())
        if (tile.big() && tile.start().col() == c)
            return true;
    return false;
}

bool has_big_tile_ending(const Tiling& t, int c)
{
    for (const Tile& tile : t.tiles())
        if (tile.big() && tile.end().col() == c)
            return true;
    return false;
}

}  // namespace dyckt
