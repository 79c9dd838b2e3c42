#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace skewchar {

/// Matrix-style 1-based box coordinates.
struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/*
 * The skew diagram outer/inner with inner contained in outer. Row i holds
 * the boxes (i, inner_i + 1) .. (i, outer_i).
 *
 * Equality and ordering compare the raw (outer, inner) pair. Translation is
 * quotiented out by calling normalize_basic first.
 */
class SkewDiagram {
public:
    SkewDiagram() = default;

    SkewDiagram(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw not_contained(inner_.to_string() + " is not contained in " + outer_.to_string());
    }

    explicit SkewDiagram(Partition shape) : outer_(std::move(shape)) {}

    [[nodiscard]] const Partition& outer() const noexcept { return outer_; }
    [[nodiscard]] const Partition& inner() const noexcept { return inner_; }

    [[nodiscard]] int cell_count() const noexcept { return outer_.weight() - inner_.weight(); }
    [[nodiscard]] bool empty() const noexcept { return cell_count() == 0; }
    [[nodiscard]] std::size_t rows() const noexcept { return outer_.length(); }
    [[nodiscard]] int columns() const noexcept { return outer_.first(); }

    /// Boxes of row r (1-based) as the half-open column range (first, last].
    [[nodiscard]] std::pair<int, int> row_span(std::size_t r) const noexcept {
        return {inner_[r - 1], outer_[r - 1]};
    }

    [[nodiscard]] bool has_cell(int row, int col) const noexcept {
        if (row < 1 || col < 1) return false;
        const auto r = static_cast<std::size_t>(row - 1);
        return col > inner_[r] && col <= outer_[r];
    }

    /// Cells in row-major order.
    [[nodiscard]] std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(cell_count()));
        for (std::size_t r = 0; r < rows(); ++r)
            for (int c = inner_[r] + 1; c <= outer_[r]; ++c) out.push_back({static_cast<int>(r + 1), c});
        return out;
    }

    /// No empty rows and no empty columns.
    [[nodiscard]] bool is_basic() const noexcept {
        for (std::size_t r = 0; r < rows(); ++r)
            if (inner_[r] >= outer_[r] || inner_[r] > outer_[r + 1]) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        return format_partition(outer_) + "/" + format_partition(inner_);
    }

    friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;
    friend auto operator<=>(const SkewDiagram&, const SkewDiagram&) = default;

private:
    Partition outer_;
    Partition inner_;
};

inline SkewDiagram make_skew(Partition outer, Partition inner) {
    return SkewDiagram(std::move(outer), std::move(inner));
}

/// Parses "outer/inner"; the inner part may be omitted ("4,3" or "4,3/").
inline SkewDiagram parse_skew(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return SkewDiagram(parse_partition(text));
    if (text.find('/', slash + 1) != std::string_view::npos)
        throw malformed_partition("more than one '/' in '" + std::string(text) + "'");
    return make_skew(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

/// Deletes empty rows and columns.
inline SkewDiagram normalize_basic(const SkewDiagram& d) {
    struct Span {
        int first;
        int last;
    };
    std::vector<Span> spans;
    for (std::size_t r = 1; r <= d.rows(); ++r) {
        auto [lo, hi] = d.row_span(r);
        if (lo < hi) spans.push_back({lo, hi});
    }
    if (spans.empty()) return {};

    // shift[c] = number of empty columns among 1..c
    const int width = d.columns();
    std::vector<char> used(static_cast<std::size_t>(width + 1), 0);
    for (const auto& s : spans)
        for (int c = s.first + 1; c <= s.last; ++c) used[static_cast<std::size_t>(c)] = 1;
    std::vector<int> shift(static_cast<std::size_t>(width + 1), 0);
    for (int c = 1; c <= width; ++c)
        shift[static_cast<std::size_t>(c)] = shift[static_cast<std::size_t>(c - 1)] + (used[static_cast<std::size_t>(c)] ? 0 : 1);

    std::vector<int> outer, inner;
    for (const auto& s : spans) {
        outer.push_back(s.last - shift[static_cast<std::size_t>(s.last)]);
        inner.push_back(s.first - shift[static_cast<std::size_t>(s.first)]);
    }
    return SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)));
}

/// Transpose: (outer', inner').
inline SkewDiagram conjugate_skew(const SkewDiagram& d) {
    return SkewDiagram(conjugate(d.outer()), conjugate(d.inner()));
}

/// 180 degree rotation inside the bounding box of the normalized diagram.
inline SkewDiagram rotate180(const SkewDiagram& d) {
    const SkewDiagram b = normalize_basic(d);
    const auto rows = b.rows();
    const int width = b.columns();
    std::vector<int> outer(rows), inner(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        outer[i] = width - b.inner()[rows - 1 - i];
        inner[i] = width - b.outer()[rows - 1 - i];
    }
    return SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)));
}

/// Straight shape after normalization.
inline bool is_partition_shape(const SkewDiagram& d) { return normalize_basic(d).inner().empty(); }

/// 180 degree rotation of a straight shape.
inline bool is_rotated_partition(const SkewDiagram& d) { return rotate180(d).inner().empty(); }

/// Row lengths (parts) and column lengths (heights), each sorted decreasingly.
struct PartsAndHeights {
    std::vector<int> parts;
    std::vector<int> heights;
    friend bool operator==(const PartsAndHeights&, const PartsAndHeights&) = default;
};

inline PartsAndHeights parts_and_heights(const SkewDiagram& d) {
    PartsAndHeights out;
    for (std::size_t r = 1; r <= d.rows(); ++r) {
        auto [lo, hi] = d.row_span(r);
        out.parts.push_back(hi - lo);
    }
    const auto outer_t = conjugate(d.outer());
    const auto inner_t = conjugate(d.inner());
    for (std::size_t c = 0; c < outer_t.length(); ++c) out.heights.push_back(outer_t[c] - inner_t[c]);
    std::ranges::sort(out.parts, std::greater<>{});
    std::ranges::sort(out.heights, std::greater<>{});
    return out;
}

/*
 * Components of a basic diagram. Two consecutive rows i, i+1 share a column
 * iff inner_i < outer_{i+1}; rows further apart can only share a column
 * through the rows between them, so components are maximal row blocks.
 * Returned top-right first, each normalized.
 */
inline std::vector<SkewDiagram> decay_components(const SkewDiagram& d) {
    const SkewDiagram b = normalize_basic(d);
    std::vector<SkewDiagram> out;
    std::size_t start = 0;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        const bool last = r + 1 == b.rows() || b.inner()[r] >= b.outer()[r + 1];
        if (!last) continue;
        std::vector<int> outer(b.outer().parts().begin() + static_cast<std::ptrdiff_t>(start),
                               b.outer().parts().begin() + static_cast<std::ptrdiff_t>(r + 1));
        std::vector<int> inner;
        for (std::size_t i = start; i <= r; ++i) inner.push_back(b.inner()[i]);
        out.push_back(normalize_basic(SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)))));
        start = r + 1;
    }
    return out;
}

inline bool is_connected(const SkewDiagram& d) { return decay_components(d).size() <= 1; }

/*
 * Boundary lattice paths of a basic diagram, both running from the lower
 * left corner to the upper right corner of the bounding box. Segments are
 * maximal straight runs, listed in walking order.
 *   inner path: up first, along the inner shape, right last
 *   outer path: right first, along the outer shape, up last
 */
struct PathStats {
    std::optional<int> s_in;
    int s_out = 0;
    std::vector<int> inner_segments;
    std::vector<int> outer_segments;
};

inline PathStats path_stats(const SkewDiagram& d) {
    if (!d.is_basic()) throw not_basic(d.to_string());
    if (d.empty()) throw not_basic("empty diagram has no boundary paths");
    PathStats st;
    const int rows = static_cast<int>(d.rows());
    const int width = d.columns();

    // Outer: walk blocks of equal parts from the bottom row upwards.
    {
        auto blocks = part_blocks(d.outer());
        int x = 0;
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
            st.outer_segments.push_back(it->value - x);
            st.outer_segments.push_back(static_cast<int>(it->multiplicity));
            x = it->value;
        }
        st.s_out = *std::ranges::min_element(st.outer_segments);
    }

    if (!d.inner().empty()) {
        st.inner_segments.push_back(rows - static_cast<int>(d.inner().length()));
        auto blocks = part_blocks(d.inner());
        int x = 0;
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
            st.inner_segments.push_back(it->value - x);
            st.inner_segments.push_back(static_cast<int>(it->multiplicity));
            x = it->value;
        }
        st.inner_segments.push_back(width - x);
        st.s_in = *std::ranges::min_element(st.inner_segments);
    }
    return st;
}

/// Deletes the top `count` boxes of every column; the result is normalized.
inline SkewDiagram remove_top(const SkewDiagram& d, int count) {
    const SkewDiagram b = normalize_basic(d);
    const auto outer_t = conjugate(b.outer());
    const auto inner_t = conjugate(b.inner());
    std::vector<int> raised(outer_t.length());
    for (std::size_t c = 0; c < outer_t.length(); ++c) {
        if (outer_t[c] - inner_t[c] < count)
            throw too_shallow("column " + std::to_string(c + 1) + " of " + b.to_string() + " has fewer than " +
                              std::to_string(count) + " boxes");
        raised[c] = inner_t[c] + count;
    }
    return normalize_basic(SkewDiagram(b.outer(), conjugate(Partition(std::move(raised)))));
}

/// Deletes the leftmost `count` boxes of every row; the result is normalized.
inline SkewDiagram remove_left(const SkewDiagram& d, int count) {
    const SkewDiagram b = normalize_basic(d);
    std::vector<int> shifted(b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r) {
        if (b.outer()[r] - b.inner()[r] < count)
            throw too_shallow("row " + std::to_string(r + 1) + " of " + b.to_string() + " has fewer than " +
                              std::to_string(count) + " boxes");
        shifted[r] = b.inner()[r] + count;
    }
    return normalize_basic(SkewDiagram(b.outer(), Partition(std::move(shifted))));
}

/// Minimum column height of a nonempty diagram; the largest feasible remove_top count.
inline int min_height(const SkewDiagram& d) {
    auto ph = parts_and_heights(normalize_basic(d));
    return ph.heights.empty() ? 0 : ph.heights.back();
}

/// Minimum row length of a nonempty diagram; the largest feasible remove_left count.
inline int min_part(const SkewDiagram& d) {
    auto ph = parts_and_heights(normalize_basic(d));
    return ph.parts.empty() ? 0 : ph.parts.back();
}

/*
 * Every basic skew diagram with at most max_cells boxes, first row at most
 * max_part and at most max_rows rows, each exactly once. Rows are chosen top
 * down: the next row (outer', inner') needs inner <= outer' <= outer and
 * inner' < outer', inner' <= inner; the diagram may end once inner is 0.
 */
struct EnumerationBounds {
    int max_cells = 1;
    int max_part = 1;
    int max_rows = 1;
};

template <class Fn>
void for_each_basic_skew_diagram(const EnumerationBounds& bounds, Fn&& fn) {
    std::vector<int> outer, inner;
    auto rec = [&](auto&& self, int cells) -> void {
        if (inner.back() == 0) fn(SkewDiagram(Partition(outer), Partition(inner)));
        if (static_cast<int>(outer.size()) >= bounds.max_rows) return;
        const int lo = outer.back();
        const int li = inner.back();
        for (int next_outer = std::max(li, 1); next_outer <= lo; ++next_outer) {
            for (int next_inner = 0; next_inner <= std::min(li, next_outer - 1); ++next_inner) {
                const int c = cells + next_outer - next_inner;
                if (c > bounds.max_cells) continue;
                outer.push_back(next_outer);
                inner.push_back(next_inner);
                self(self, c);
                outer.pop_back();
                inner.pop_back();
            }
        }
    };
    for (int first_outer = 1; first_outer <= bounds.max_part; ++first_outer) {
        for (int first_inner = 0; first_inner < first_outer; ++first_inner) {
            if (first_outer - first_inner > bounds.max_cells) continue;
            outer.assign(1, first_outer);
            inner.assign(1, first_inner);
            rec(rec, first_outer - first_inner);
        }
    }
}

inline std::vector<SkewDiagram> enumerate_basic_skew_diagrams(int max_cells, int max_part, int max_rows) {
    std::vector<SkewDiagram> out;
    for_each_basic_skew_diagram(EnumerationBounds{max_cells, max_part, max_rows},
                                [&](SkewDiagram d) { out.push_back(std::move(d)); });
    return out;
}

} // namespace skewchar

template <>
struct std::hash<skewchar::SkewDiagram> {
    std::size_t operator()(const skewchar::SkewDiagram& d) const noexcept {
        std::hash<skewchar::Partition> h;
        return h(d.outer()) * 31 + h(d.inner());
    }
};
