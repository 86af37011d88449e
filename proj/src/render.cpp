#include "shimin/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace shimin {

namespace {

constexpr int cell_width = 4;

int column_of(const LineLayout& line, int slot)
{
    return cell_width * line.coordinate(slot) + 1;
}

struct Bracket {
    int left;
    int right;
};

/// Stacks brackets in levels so that no two brackets on a level touch.
std::vector<std::vector<Bracket>> stack_levels(std::vector<Bracket> brackets)
{
    std::stable_sort(brackets.begin(), brackets.end(), [](const Bracket& a, const Bracket& b) {
        return a.right - a.left < b.right - b.left;
    });
    std::vector<std::vector<Bracket>> levels;
    for (const Bracket& b : brackets) {
        auto fits = [&](const std::vector<Bracket>& level) {
            return std::none_of(level.begin(), level.end(),
                                [&](const Bracket& o) { return b.left <= o.right && o.left <= b.right; });
        };
        auto it = std::find_if(levels.begin(), levels.end(), fits);
        if (it == levels.end()) levels.push_back({b});
        else it->push_back(b);
    }
    return levels;
}

/// Rows of brackets; row 0 is farthest from the value line.
std::vector<std::string> draw_brackets(const std::vector<std::vector<Bracket>>& levels, int width)
{
    const std::size_t height = levels.size() * 2;
    std::vector<std::string> rows(height, std::string(static_cast<std::size_t>(width), ' '));
    for (std::size_t lvl = 0; lvl < levels.size(); ++lvl) {
        const std::size_t top = height - 2 * (lvl + 1);
        for (const Bracket& b : levels[lvl]) {
            for (int x = b.left; x <= b.right; ++x) {
                char& c = rows[top][static_cast<std::size_t>(x)];
                c = (x == b.left || x == b.right) ? '+' : (c == '|' ? '|' : '-');
            }
            for (std::size_t r = top + 1; r < height; ++r) {
                for (int x : {b.left, b.right}) rows[r][static_cast<std::size_t>(x)] = '|';
            }
        }
    }
    return rows;
}

void put_label(std::string& row, int col, int value)
{
    const std::string text = std::to_string(value);
    const int start = col - (value < 0 ? 1 : 0);
    for (std::size_t k = 0; k < text.size(); ++k) {
        const auto pos = static_cast<std::size_t>(start) + k;
        if (pos < row.size()) row[pos] = text[k];
    }
}

void trim_right(std::string& s)
{
    s.erase(s.find_last_not_of(' ') + 1);
}

} // namespace

std::string render_text(const ArcDiagram& d)
{
    const LineLayout& line = d.layout();
    int width = 0;
    for (int slot : line.slots()) width = std::max(width, column_of(line, slot) + 3);

    std::vector<Bracket> above;
    std::vector<Bracket> below;
    for (const Arc& a : d.arcs()) {
        const Bracket b{column_of(line, a.from), column_of(line, a.to)};
        const bool at_bottom = line.has_fork() && (a.from == line.fork_bottom() || a.to == line.fork_bottom());
        (at_bottom ? below : above).push_back(b);
    }

    std::ostringstream out;
    for (std::string row : draw_brackets(stack_levels(above), width)) {
        trim_right(row);
        out << row << '\n';
    }

    std::string values(static_cast<std::size_t>(width), ' ');
    std::string fork_row(static_cast<std::size_t>(width), ' ');
    for (int slot : line.slots()) {
        if (line.has_fork() && slot == line.fork_bottom()) put_label(fork_row, column_of(line, slot), d.value_at(slot));
        else put_label(values, column_of(line, slot), d.value_at(slot));
    }
    trim_right(values);
    out << values << '\n';

    if (line.has_fork()) {
        auto rows = draw_brackets(stack_levels(below), width);
        std::reverse(rows.begin(), rows.end());
        // verticals of the non-fork ends pass the fork row
        for (const Bracket& b : below)
            for (int x : {b.left, b.right})
                if (fork_row[static_cast<std::size_t>(x)] == ' ') fork_row[static_cast<std::size_t>(x)] = '|';
        trim_right(fork_row);
        out << fork_row << '\n';
        for (std::string row : rows) {
            trim_right(row);
            out << row << '\n';
        }
    }
    return out.str();
}

std::string render_svg(const ArcDiagram& d)
{
    const LineLayout& line = d.layout();
    constexpr int step = 60;
    constexpr int margin = 40;
    int max_coord = 0;
    for (int slot : line.slots()) max_coord = std::max(max_coord, line.coordinate(slot));
    const int width = 2 * margin + step * max_coord;
    const int fork_drop = line.has_fork() ? 40 : 0;
    const int arc_room = step * (max_coord + 1) / 2 + 10;
    const int base_y = margin + arc_room;
    const int height = base_y + fork_drop + arc_room + margin;

    auto x_of = [&](int slot) { return margin + step * line.coordinate(slot); };
    auto y_of = [&](int slot) {
        return line.has_fork() && slot == line.fork_bottom() ? base_y + fork_drop : base_y;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <title>" << d.permutation().kind().to_string() << " arc diagram</title>\n";

    // the line, forking around the fork slots in type D
    out << "  <g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    const auto slots = line.slots();
    for (std::size_t k = 0; k + 1 < slots.size(); ++k) {
        for (std::size_t m = k + 1; m < slots.size(); ++m) {
            const int ck = line.coordinate(slots[k]);
            const int cm = line.coordinate(slots[m]);
            if (cm != ck + 1) continue;
            out << "    <line x1=\"" << x_of(slots[k]) << "\" y1=\"" << y_of(slots[k]) << "\" x2=\""
                << x_of(slots[m]) << "\" y2=\"" << y_of(slots[m]) << "\"/>\n";
        }
    }
    out << "  </g>\n";

    out << "  <g stroke=\"firebrick\" stroke-width=\"2\" fill=\"none\">\n";
    for (const Arc& a : d.arcs()) {
        const int x1 = x_of(a.from);
        const int x2 = x_of(a.to);
        const int y1 = y_of(a.from);
        const int y2 = y_of(a.to);
        const bool down = line.has_fork() && (a.from == line.fork_bottom() || a.to == line.fork_bottom());
        const int bulge = (x2 - x1) * 2 / 3 * (down ? 1 : -1);
        out << "    <path d=\"M " << x1 << ' ' << y1 << " C " << x1 << ' ' << y1 + bulge << ", " << x2 << ' '
            << y2 + bulge << ", " << x2 << ' ' << y2 << "\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
    for (int slot : slots) {
        const int x = x_of(slot);
        const int y = y_of(slot);
        const bool label_below = !(line.has_fork() && slot == line.fork_top());
        out << "    <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"black\"/>\n";
        out << "    <text x=\"" << x << "\" y=\"" << (label_below ? y + 20 : y - 10) << "\">" << d.value_at(slot)
            << "</text>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace shimin
