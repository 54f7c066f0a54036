// Diagram construction and SVG / ASCII rendering.

#include "permstat/render.hpp"

#include <algorithm>
#include <sstream>

#include "permstat/errors.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

Diagram build_linear_diagram(const Permutation& p) {
    Diagram d;
    d.kind = DiagramKind::Linear;
    d.n = p.size();
    d.values = p.word();
    d.boxed = two_descent_set(p);
    d.arcs = two_inversion_set(p);
    return d;
}

Diagram build_planar_diagram(const Permutation& p) {
    Diagram d;
    d.kind = DiagramKind::Planar;
    d.n = p.size();
    d.values = p.word();
    d.circled = exceedance_set(p);
    d.heights.assign(static_cast<size_t>(d.n), 0);
    for (int i = 1; i + 1 <= d.n; ++i) {
        const int step = p(i) < p(i + 1) ? 1 : -1;
        d.heights[static_cast<size_t>(i)] = d.heights[static_cast<size_t>(i - 1)] + step;
    }
    return d;
}

namespace {

constexpr int kStep = 40;    // horizontal distance between positions
constexpr int kMargin = 30;

std::string svg_open(int width, int height) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    return os.str();
}

std::string render_svg_linear(const Diagram& d) {
    int max_span = 0;
    for (auto [i, j] : d.arcs) max_span = std::max(max_span, j - i);
    const int arc_room = 16 + max_span * 5;
    const int width = 2 * kMargin + (d.n - 1) * kStep;
    const int baseline = kMargin + arc_room;
    const int height = baseline + kMargin;
    auto x_of = [&](int pos) { return kMargin + (pos - 1) * kStep; };

    std::ostringstream os;
    os << svg_open(width, height);
    for (auto [i, j] : d.arcs) {
        const int x1 = x_of(i);
        const int x2 = x_of(j);
        const int ry = 12 + (j - i) * 5;
        os << "  <path d=\"M " << x1 << ' ' << baseline - 12 << " A " << (x2 - x1) / 2 << ' '
           << ry << " 0 0 1 " << x2 << ' ' << baseline - 12
           << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int b : d.boxed) {
        os << "  <rect x=\"" << x_of(b) - 11 << "\" y=\"" << baseline - 11
           << "\" width=\"22\" height=\"22\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int i = 1; i <= d.n; ++i) {
        os << "  <text x=\"" << x_of(i) << "\" y=\"" << baseline + 5
           << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">"
           << d.values[static_cast<size_t>(i - 1)] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg_planar(const Diagram& d) {
    const int maxh = *std::max_element(d.heights.begin(), d.heights.end());
    const int minh = *std::min_element(d.heights.begin(), d.heights.end());
    const int width = 2 * kMargin + (d.n - 1) * kStep;
    const int height = 2 * kMargin + (maxh - minh) * kStep;
    auto x_of = [&](int pos) { return kMargin + (pos - 1) * kStep; };
    auto y_of = [&](int pos) {
        return kMargin + (maxh - d.heights[static_cast<size_t>(pos - 1)]) * kStep;
    };

    std::ostringstream os;
    os << svg_open(width, height);
    for (int i = 1; i + 1 <= d.n; ++i) {
        const int y1 = y_of(i);
        const int y2 = y_of(i + 1);
        const int off = (y2 < y1) ? -4 : 4;
        os << "  <line x1=\"" << x_of(i) + 8 << "\" y1=\"" << y1 + off << "\" x2=\""
           << x_of(i + 1) - 8 << "\" y2=\"" << y2 - off << "\" stroke=\"black\"/>\n";
    }
    for (int i = 1; i <= d.n; ++i) {
        os << "  <text x=\"" << x_of(i) << "\" y=\"" << y_of(i) + 5
           << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">"
           << d.values[static_cast<size_t>(i - 1)] << "</text>\n";
    }
    for (int c : d.circled) {
        os << "  <circle cx=\"" << x_of(c) << "\" cy=\"" << y_of(c)
           << "\" r=\"12\" fill=\"none\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

int cell_width(const Diagram& d) { return d.n >= 10 ? 5 : 4; }

// Token for one value, padded to the cell width, with the wrapping glyphs
// when the position is marked.
std::string value_token(int value, bool marked, char open, char close, int width) {
    std::string s = std::to_string(value);
    if (marked) {
        s.insert(s.begin(), open);
        s.push_back(close);
    } else {
        s.insert(s.begin(), ' ');
        s.push_back(' ');
    }
    while (static_cast<int>(s.size()) < width) s.push_back(' ');
    return s;
}

std::string render_ascii_linear(const Diagram& d) {
    const int w = cell_width(d);
    const int cols = d.n * w;
    auto center = [&](int pos) { return (pos - 1) * w + 1; };

    // Shorter arcs sit closer to the word; each arc gets its own row.
    auto arcs = d.arcs;
    std::stable_sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
        return a.second - a.first < b.second - b.first;
    });
    std::vector<std::string> rows;
    for (const auto& [i, j] : arcs) {
        std::string row(static_cast<size_t>(cols), ' ');
        for (int x = center(i) + 1; x < center(j); ++x) row[static_cast<size_t>(x)] = '-';
        row[static_cast<size_t>(center(i))] = '.';
        row[static_cast<size_t>(center(j))] = '.';
        rows.push_back(std::move(row));
    }

    std::string word_row;
    std::vector<bool> boxed(static_cast<size_t>(d.n) + 1, false);
    for (int b : d.boxed) boxed[static_cast<size_t>(b)] = true;
    for (int i = 1; i <= d.n; ++i) {
        word_row += value_token(d.values[static_cast<size_t>(i - 1)],
                                boxed[static_cast<size_t>(i)], '[', ']', w);
    }

    std::ostringstream os;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        std::string trimmed = *it;
        while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
        os << trimmed << '\n';
    }
    while (!word_row.empty() && word_row.back() == ' ') word_row.pop_back();
    os << word_row << '\n';
    return os.str();
}

std::string render_ascii_planar(const Diagram& d) {
    const int w = cell_width(d);
    const int cols = d.n * w;
    const int maxh = *std::max_element(d.heights.begin(), d.heights.end());
    const int minh = *std::min_element(d.heights.begin(), d.heights.end());
    const int levels = maxh - minh;
    // Three text rows per height level keep room for the slope connectors.
    const int nrows = levels * 3 + 1;
    std::vector<std::string> grid(static_cast<size_t>(nrows),
                                  std::string(static_cast<size_t>(cols), ' '));
    auto row_of = [&](int pos) { return (maxh - d.heights[static_cast<size_t>(pos - 1)]) * 3; };

    std::vector<bool> circled(static_cast<size_t>(d.n) + 1, false);
    for (int c : d.circled) circled[static_cast<size_t>(c)] = true;
    for (int i = 1; i <= d.n; ++i) {
        const std::string tok = value_token(d.values[static_cast<size_t>(i - 1)],
                                            circled[static_cast<size_t>(i)], '(', ')', w);
        const int row = row_of(i);
        const int col = (i - 1) * w;
        for (size_t k = 0; k < tok.size(); ++k) {
            grid[static_cast<size_t>(row)][static_cast<size_t>(col) + k] = tok[k];
        }
    }
    for (int i = 1; i + 1 <= d.n; ++i) {
        const int r1 = row_of(i);
        const int r2 = row_of(i + 1);
        const int col = i * w - 1;
        if (r2 < r1) {
            grid[static_cast<size_t>(r1 - 1)][static_cast<size_t>(col) - 1] = '/';
            grid[static_cast<size_t>(r1 - 2)][static_cast<size_t>(col)] = '/';
        } else {
            grid[static_cast<size_t>(r2 - 2)][static_cast<size_t>(col) - 1] = '\\';
            grid[static_cast<size_t>(r2 - 1)][static_cast<size_t>(col)] = '\\';
        }
    }

    std::ostringstream os;
    for (auto& row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        os << row << '\n';
    }
    return os.str();
}

} // namespace

std::string render_svg(const Diagram& d) {
    if (d.n < 1) throw validation_error("render_svg: empty diagram");
    return d.kind == DiagramKind::Linear ? render_svg_linear(d) : render_svg_planar(d);
}

std::string render_ascii(const Diagram& d) {
    if (d.n < 1) throw validation_error("render_ascii: empty diagram");
    return d.kind == DiagramKind::Linear ? render_ascii_linear(d) : render_ascii_planar(d);
}

} // namespace permstat
