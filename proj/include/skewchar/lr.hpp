#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "skew_diagram.hpp"

namespace skewchar {

using Coefficient = std::uint64_t;

inline Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) throw coefficient_overflow();
    return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) throw coefficient_overflow();
    return r;
}

/*
 * A virtual character sum_nu c_nu [nu] with positive coefficients, kept in
 * descending lexicographic order of nu. Absent keys have coefficient 0.
 */
class Decomposition {
public:
    using map_type = std::map<Partition, Coefficient, std::greater<>>;

    Decomposition() = default;
    Decomposition(std::initializer_list<std::pair<const Partition, Coefficient>> terms) {
        for (const auto& [nu, c] : terms) add(nu, c);
    }

    /// The trivial character of S_0.
    static Decomposition unit() { return Decomposition{{Partition{}, 1}}; }

    void add(const Partition& nu, Coefficient c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(nu, c);
        if (!inserted) it->second = checked_add(it->second, c);
    }

    [[nodiscard]] Coefficient coefficient(const Partition& nu) const {
        auto it = terms_.find(nu);
        return it == terms_.end() ? 0 : it->second;
    }

    [[nodiscard]] const map_type& terms() const& noexcept { return terms_; }
    /// By value on temporaries so `for (... : skew_character(d).terms())` is safe.
    [[nodiscard]] map_type terms() && { return std::move(terms_); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    /// Sum of all coefficients.
    [[nodiscard]] Coefficient total() const {
        Coefficient s = 0;
        for (const auto& [nu, c] : terms_) s = checked_add(s, c);
        return s;
    }

    /// Lexicographically greatest constituent.
    [[nodiscard]] const Partition& leading() const { return terms_.begin()->first; }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (const auto& [nu, c] : terms_) {
            if (!out.empty()) out += " + ";
            if (c != 1) out += std::to_string(c) + "*";
            out += "[" + format_partition(nu) + "]";
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
    friend bool operator<(const Decomposition& a, const Decomposition& b) { return a.terms_ < b.terms_; }

private:
    map_type terms_;
};

/// Every prefix holds at least as many i's as (i+1)'s.
inline bool is_lattice_word(std::span<const int> word) {
    std::vector<int> count;
    for (int v : word) {
        if (v < 1) return false;
        if (static_cast<std::size_t>(v) > count.size()) count.resize(static_cast<std::size_t>(v), 0);
        ++count[static_cast<std::size_t>(v - 1)];
        if (v > 1 && count[static_cast<std::size_t>(v - 1)] > count[static_cast<std::size_t>(v - 2)]) return false;
    }
    return true;
}

/// A filling of a skew diagram, entries stored in row-major cell order.
class LRTableau {
public:
    LRTableau(SkewDiagram shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {}

    [[nodiscard]] const SkewDiagram& shape() const noexcept { return shape_; }
    [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }

    [[nodiscard]] int at(int row, int col) const {
        std::size_t idx = 0;
        for (int r = 1; r < row; ++r) {
            auto [lo, hi] = shape_.row_span(static_cast<std::size_t>(r));
            idx += static_cast<std::size_t>(hi - lo);
        }
        return entries_.at(idx + static_cast<std::size_t>(col - shape_.inner()[static_cast<std::size_t>(row - 1)] - 1));
    }

    /// Entries right to left within each row, rows top to bottom.
    [[nodiscard]] std::vector<int> reverse_row_word() const {
        std::vector<int> word;
        std::size_t idx = 0;
        for (std::size_t r = 1; r <= shape_.rows(); ++r) {
            auto [lo, hi] = shape_.row_span(r);
            const auto len = static_cast<std::size_t>(hi - lo);
            for (std::size_t k = 0; k < len; ++k) word.push_back(entries_[idx + len - 1 - k]);
            idx += len;
        }
        return word;
    }

    [[nodiscard]] Partition content() const {
        std::vector<int> count;
        for (int v : entries_) {
            if (static_cast<std::size_t>(v) > count.size()) count.resize(static_cast<std::size_t>(v), 0);
            ++count[static_cast<std::size_t>(v - 1)];
        }
        // Content of a non-lattice filling need not be a partition.
        std::ranges::sort(count, std::greater<>{});
        return Partition(std::move(count));
    }

    /// Rows weakly increase, columns strictly increase, reverse row word is a lattice word.
    [[nodiscard]] bool is_valid() const {
        for (const auto& c : shape_.cells()) {
            const int v = at(c.row, c.col);
            if (v < 1) return false;
            if (shape_.has_cell(c.row, c.col + 1) && v > at(c.row, c.col + 1)) return false;
            if (shape_.has_cell(c.row + 1, c.col) && v >= at(c.row + 1, c.col)) return false;
        }
        return is_lattice_word(reverse_row_word());
    }

    friend bool operator==(const LRTableau&, const LRTableau&) = default;

private:
    SkewDiagram shape_;
    std::vector<int> entries_;
};

namespace detail {

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }
};

/*
 * LR tableaux counted row by row. Within a row the boxes are filled right to
 * left (the reverse row word order) so the lattice condition is checked on
 * each placement. Partial tableaux that agree on the content so far and on
 * the entries of the last row that sit above the next row have identical
 * completions; they are merged into one state carrying a multiplicity.
 *
 * State key layout: [content length, content..., trimmed last row...].
 * cap, when nonempty, bounds the content (lr_coefficient for a fixed nu).
 */
inline std::unordered_map<std::vector<int>, Coefficient, VectorHash>
lr_row_states(const SkewDiagram& d, const Partition* cap) {
    using StateMap = std::unordered_map<std::vector<int>, Coefficient, VectorHash>;
    StateMap states;
    states.emplace(std::vector<int>{0}, 1);

    std::vector<int> row;
    std::vector<int> content;
    for (std::size_t r = 1; r <= d.rows(); ++r) {
        auto [lo, hi] = d.row_span(r);
        const int width = hi - lo;
        // Columns of this row with a box directly above: (inner_{r-1}, outer_r].
        const int above_from = r > 1 ? d.inner()[r - 2] : hi;
        // Entries kept for the next row: columns (lo, outer_{r+1}].
        const int keep = std::max(0, d.outer()[r] - lo);

        StateMap next;
        for (const auto& [key, mult] : states) {
            const auto clen = static_cast<std::size_t>(key[0]);
            content.assign(key.begin() + 1, key.begin() + 1 + static_cast<std::ptrdiff_t>(clen));
            const int* prev = key.data() + 1 + clen;  // previous row from column inner_{r-1}+1
            row.assign(static_cast<std::size_t>(width), 0);

            auto emit = [&] {
                std::vector<int> k;
                k.reserve(1 + content.size() + static_cast<std::size_t>(keep));
                k.push_back(static_cast<int>(content.size()));
                k.insert(k.end(), content.begin(), content.end());
                k.insert(k.end(), row.begin(), row.begin() + keep);
                auto [it, inserted] = next.try_emplace(std::move(k), mult);
                if (!inserted) it->second = checked_add(it->second, mult);
            };

            // pos indexes the row from the right: column hi - pos.
            auto place = [&](auto&& self, int pos) -> void {
                if (pos == width) {
                    emit();
                    return;
                }
                const int col = hi - pos;
                int upper = pos == 0 ? std::numeric_limits<int>::max() : row[static_cast<std::size_t>(width - pos)];
                upper = std::min(upper, static_cast<int>(content.size()) + 1);
                int lower = 1;
                if (col > above_from) lower = prev[col - above_from - 1] + 1;
                for (int v = lower; v <= upper; ++v) {
                    const auto vi = static_cast<std::size_t>(v - 1);
                    const int have = vi < content.size() ? content[vi] : 0;
                    if (v > 1 && content[vi - 1] <= have) continue;
                    if (cap && have >= (*cap)[vi]) continue;
                    if (vi == content.size()) content.push_back(0);
                    ++content[vi];
                    row[static_cast<std::size_t>(width - 1 - pos)] = v;
                    self(self, pos + 1);
                    --content[vi];
                    if (content[vi] == 0 && vi + 1 == content.size()) content.pop_back();
                }
            };
            place(place, 0);
        }
        states = std::move(next);
    }
    return states;
}

} // namespace detail

/// c(outer; inner, nu): the number of LR tableaux of shape outer/inner and content nu.
inline Coefficient lr_coefficient(const Partition& outer, const Partition& inner, const Partition& nu) {
    if (!outer.contains(inner) || outer.weight() != inner.weight() + nu.weight()) return 0;
    const SkewDiagram d(outer, inner);
    if (d.empty()) return 1;
    Coefficient total = 0;
    for (const auto& [key, mult] : detail::lr_row_states(d, &nu)) {
        const auto clen = static_cast<std::size_t>(key[0]);
        if (Partition(std::vector<int>(key.begin() + 1, key.begin() + 1 + static_cast<std::ptrdiff_t>(clen))) == nu)
            total = checked_add(total, mult);
    }
    return total;
}

/// [d] = sum_nu c(outer; inner, nu) [nu]. The empty diagram gives [()].
inline Decomposition skew_character(const SkewDiagram& d) {
    const SkewDiagram b = normalize_basic(d);
    if (b.empty()) return Decomposition::unit();
    Decomposition out;
    for (const auto& [key, mult] : detail::lr_row_states(b, nullptr)) {
        const auto clen = static_cast<std::size_t>(key[0]);
        out.add(Partition(std::vector<int>(key.begin() + 1, key.begin() + 1 + static_cast<std::ptrdiff_t>(clen))), mult);
    }
    return out;
}

/// All LR tableaux of shape d and content nu, ordered by their row-major entry sequences.
inline std::vector<LRTableau> enumerate_lr_tableaux(const SkewDiagram& d, const Partition& nu) {
    std::vector<LRTableau> out;
    if (d.cell_count() != nu.weight()) return out;

    // Boxes in reverse row word order, with the row-major index of each.
    struct Slot {
        Cell cell;
        std::size_t index;
    };
    std::vector<Slot> order;
    std::vector<std::vector<std::size_t>> index_of(d.rows() + 2);
    {
        std::size_t idx = 0;
        for (std::size_t r = 1; r <= d.rows(); ++r) {
            auto [lo, hi] = d.row_span(r);
            index_of[r].assign(static_cast<std::size_t>(d.columns() + 2), 0);
            for (int c = lo + 1; c <= hi; ++c) index_of[r][static_cast<std::size_t>(c)] = idx++;
        }
        for (std::size_t r = 1; r <= d.rows(); ++r) {
            auto [lo, hi] = d.row_span(r);
            for (int c = hi; c > lo; --c) order.push_back({{static_cast<int>(r), c}, index_of[r][static_cast<std::size_t>(c)]});
        }
    }

    std::vector<int> entries(static_cast<std::size_t>(d.cell_count()), 0);
    std::vector<int> content(nu.length() + 1, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            out.emplace_back(d, entries);
            return;
        }
        const auto [cell, idx] = order[k];
        int upper = static_cast<int>(nu.length());
        if (d.has_cell(cell.row, cell.col + 1))
            upper = std::min(upper, entries[index_of[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col + 1)]]);
        int lower = 1;
        if (d.has_cell(cell.row - 1, cell.col))
            lower = entries[index_of[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col)]] + 1;
        for (int v = lower; v <= upper; ++v) {
            const auto vi = static_cast<std::size_t>(v - 1);
            if (content[vi] >= nu[vi]) continue;
            if (v > 1 && content[vi - 1] <= content[vi]) continue;
            ++content[vi];
            entries[idx] = v;
            self(self, k + 1);
            --content[vi];
        }
        entries[idx] = 0;
    };
    rec(rec, 0);
    std::ranges::sort(out, [](const LRTableau& a, const LRTableau& b) { return a.entries() < b.entries(); });
    return out;
}

/// [alpha] (x) [beta] induced up, as the character of beta placed to the upper right of alpha.
inline Decomposition lr_product(const Partition& alpha, const Partition& beta) {
    if (alpha.empty()) return Decomposition{{beta, 1}};
    if (beta.empty()) return Decomposition{{alpha, 1}};
    std::vector<int> outer, inner;
    for (auto b : beta.parts()) {
        outer.push_back(b + alpha.first());
        inner.push_back(alpha.first());
    }
    for (auto a : alpha.parts()) outer.push_back(a);
    return skew_character(SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner))));
}

/// Bilinear extension of lr_product.
inline Decomposition lr_product(const Decomposition& a, const Decomposition& b) {
    Decomposition out;
    for (const auto& [gamma, cg] : a.terms())
        for (const auto& [delta, cd] : b.terms())
            for (const auto& [nu, c] : lr_product(gamma, delta).terms())
                out.add(nu, checked_mul(checked_mul(cg, cd), c));
    return out;
}

using MonomialMap = std::map<std::vector<int>, Coefficient>;

/*
 * Skew Schur polynomial s_d(x_1..x_nvars) as exponent vector -> coefficient.
 * Enumerates every semistandard filling with entries <= nvars in row-major
 * order, with no lattice condition.
 */
inline MonomialMap skew_schur_monomials(const SkewDiagram& d, int nvars) {
    MonomialMap out;
    const auto cells = d.cells();
    std::map<Cell, int> value;
    std::vector<int> exponent(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            auto& slot = out[exponent];
            slot = checked_add(slot, 1);
            return;
        }
        const Cell c = cells[k];
        int lower = 1;
        if (auto it = value.find({c.row, c.col - 1}); it != value.end()) lower = std::max(lower, it->second);
        if (auto it = value.find({c.row - 1, c.col}); it != value.end()) lower = std::max(lower, it->second + 1);
        for (int v = lower; v <= nvars; ++v) {
            value[c] = v;
            ++exponent[static_cast<std::size_t>(v - 1)];
            self(self, k + 1);
            --exponent[static_cast<std::size_t>(v - 1)];
        }
        value.erase(c);
    };
    rec(rec, 0);
    return out;
}

inline MonomialMap schur_monomials(const Partition& nu, int nvars) {
    return skew_schur_monomials(SkewDiagram(nu), nvars);
}

/// f^p by the hook length formula, evaluated through prime exponents so it stays exact.
inline Coefficient syt_count(const Partition& p) {
    const int n = p.weight();
    std::vector<int> exponent(static_cast<std::size_t>(n + 1), 0);
    auto factor_into = [&](int m, int sign) {
        for (int q = 2; q * q <= m; ++q)
            while (m % q == 0) {
                exponent[static_cast<std::size_t>(q)] += sign;
                m /= q;
            }
        if (m > 1) exponent[static_cast<std::size_t>(m)] += sign;
    };
    for (int k = 2; k <= n; ++k) factor_into(k, +1);
    const auto t = conjugate(p);
    for (std::size_t i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.parts()[i]; ++j) {
            const int hook = (p.parts()[i] - j - 1) + (t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
            factor_into(hook, -1);
        }
    Coefficient out = 1;
    for (std::size_t q = 2; q < exponent.size(); ++q)
        for (int e = 0; e < exponent[q]; ++e) out = checked_mul(out, q);
    return out;
}

/// Standard fillings of a skew shape: chains inner = k_0 < k_1 < ... < k_n = outer in Young's lattice.
inline Coefficient syt_count(const SkewDiagram& d) {
    std::unordered_map<Partition, Coefficient> memo;
    memo.emplace(d.inner(), 1);
    auto count = [&](auto&& self, const Partition& shape) -> Coefficient {
        if (auto it = memo.find(shape); it != memo.end()) return it->second;
        Coefficient total = 0;
        std::vector<int> parts = shape.vec();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const bool corner = i + 1 == parts.size() || parts[i] > parts[i + 1];
            if (!corner || parts[i] <= d.inner()[i]) continue;
            --parts[i];
            total = checked_add(total, self(self, Partition(parts)));
            ++parts[i];
        }
        memo.emplace(shape, total);
        return total;
    };
    return count(count, d.outer());
}

} // namespace skewchar
