#include "dyckt/render.hpp"

#include <algorithm>
#include <vector>

namespace dyckt {

namespace {

struct Canvas {
    // every edge glyph lies on an odd-odd grid point, so the canvas stores
    // only those positions
    int gx_min, gx_max, gy_min, gy_max;
    std::vector<std::string> rows;

    Canvas(int cmin, int cmax, int hmin, int hmax)
        : gx_min(2 * cmin - 1),
          gx_max(2 * cmax + 1),
          gy_min(2 * hmin - 1),
          gy_max(2 * hmax + 1),
          rows((gy_max - gy_min) / 2 + 1, std::string((gx_max - gx_min) / 2 + 1, ' '))
    {
    }

    void put(int gx, int gy, char ch) { rows[(gy_max - gy) / 2][(gx - gx_min) / 2] = ch; }

    std::string str() const
    {
        std::string out;
        for (const std::string& row : rows) {
            size_t end = row.find_last_not_of(' ');
            if (end != std::string::npos)
                out += row.substr(0, end + 1);
            out += "\n";
        }
        return out;
    }
};

// Each node is a diamond centered at (2c, 2h); its four edges sit at the
// odd-odd grid points around the center.
void draw_node(Canvas& canvas, Node n, bool wn, bool ne, bool ws, bool se)
{
    const int x = 2 * n.col(), y = 2 * n.height();
    if (wn)
        canvas.put(x - 1, y + 1, '/');
    if (ne)
        canvas.put(x + 1, y + 1, '\\');
    if (ws)
        canvas.put(x - 1, y - 1, '\\');
    if (se)
        canvas.put(x + 1, y - 1, '/');
}

Canvas make_canvas(const SkewShape& shape)
{
    int hmin = shape.cells().front().height(), hmax = hmin;
    for (Node n : shape.cells()) {
        hmin = std::min(hmin, n.height());
        hmax = std::max(hmax, n.height());
    }
    return Canvas(shape.min_col(), shape.max_col(), hmin, hmax);
}

}  // namespace

std::string render(const Tiling& t)
{
    const SkewShape& shape = t.shape();
    if (shape.cell_count() == 0)
        return "(empty shape)\n";
    Canvas canvas = make_canvas(shape);
    for (Node n : shape.cells()) {
        // suppress the edge shared with a same-tile neighbour
        bool ne = !t.attached(n, {n.a, n.b + 1});      // NE step partner
        bool se = !t.attached(n, {n.a - 1, n.b});      // SE step partner
        bool wn = !t.attached(n, {n.a + 1, n.b});      // NW partner's SE edge
        bool ws = !t.attached(n, {n.a, n.b - 1});      // SW partner's NE edge
        draw_node(canvas, n, wn, ne, ws, se);
    }
    return canvas.str();
}

std::string render(const SkewShape& shape)
{
    if (shape.cell_count() == 0)
        return "(empty shape)\n";
    Canvas canvas = make_canvas(shape);
    for (Node n : shape.cells())
        draw_node(canvas, n, true, true, true, true);
    return canvas.str();
}

std::string render_pairs(const Partition& lambda)
{
    ParenSeq ps = paren_sequence(lambda);
    std::string word = ps.padded_str();
    std::vector<int> number(word.size(), 0);
    std::vector<int> stack;
    int next = 0;
    for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
        if (word[pos] == '(') {
            stack.push_back(pos);
        } else {
            number[pos] = ++next;
            number[stack.back()] = next;
            stack.pop_back();
        }
    }
    size_t width = std::to_string(std::max(next, 1)).size() + 1;
    std::string symbols, numbers;
    for (size_t pos = 0; pos < word.size(); ++pos) {
        std::string num = std::to_string(number[pos]);
        symbols += std::string(width - 1, ' ') + word[pos];
        numbers += std::string(width - num.size(), ' ') + num;
    }
    return symbols + "\n" + numbers + "\n";
}

}  // namespace dyckt
