#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace skewchar {

/*
 * A partition is stored as its positive parts in weakly decreasing order.
 * Trailing zeros are accepted on construction and stripped, so two
 * partitions that differ only by trailing zeros compare equal.
 *
 * Ordering is lexicographic on the parts, which coincides with the usual
 * lexicographic order on partitions padded with zeros.
 */
class Partition {
public:
    using part_type = int;

    Partition() = default;

    Partition(std::initializer_list<part_type> parts)
        : Partition(std::vector<part_type>(parts)) {}

    explicit Partition(std::vector<part_type> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw malformed_partition("parts must be non-negative with zeros only at the end");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw malformed_partition("parts must be weakly decreasing");
        }
    }

    /// Single row (n); the empty partition for n == 0.
    static Partition row(part_type n) { return n == 0 ? Partition{} : Partition{n}; }

    /// The rectangle (width^height).
    static Partition rectangle(part_type width, std::size_t height) {
        if (width == 0 || height == 0) return {};
        return Partition(std::vector<part_type>(height, width));
    }

    /// The staircase (l, l-1, ..., 1).
    static Partition staircase(part_type l) {
        std::vector<part_type> p;
        for (part_type i = l; i >= 1; --i) p.push_back(i);
        return Partition(std::move(p));
    }

    [[nodiscard]] std::span<const part_type> parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<part_type>& vec() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    [[nodiscard]] part_type weight() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), part_type{0});
    }

    /// Part i (0-based); zero past the end.
    [[nodiscard]] part_type operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    [[nodiscard]] part_type first() const noexcept { return (*this)[0]; }

    [[nodiscard]] bool contains(const Partition& other) const noexcept {
        if (other.length() > length()) return false;
        for (std::size_t i = 0; i < other.length(); ++i)
            if (other.parts_[i] > parts_[i]) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<part_type> parts_;
};

/// Distinct part values together with their multiplicities, largest first.
struct PartBlock {
    Partition::part_type value;
    std::size_t multiplicity;
    friend bool operator==(const PartBlock&, const PartBlock&) = default;
};

inline std::vector<PartBlock> part_blocks(const Partition& p) {
    std::vector<PartBlock> blocks;
    for (auto v : p.parts()) {
        if (!blocks.empty() && blocks.back().value == v)
            ++blocks.back().multiplicity;
        else
            blocks.push_back({v, 1});
    }
    return blocks;
}

inline Partition conjugate(const Partition& p) {
    std::vector<Partition::part_type> out(static_cast<std::size_t>(p.first()), 0);
    for (auto v : p.parts())
        for (Partition::part_type j = 0; j < v; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// dp(p): the number of distinct part values.
inline std::size_t distinct_part_count(const Partition& p) { return part_blocks(p).size(); }

inline bool is_staircase(const Partition& p) {
    if (p.empty()) return false;
    const auto l = static_cast<Partition::part_type>(p.length());
    for (std::size_t i = 0; i < p.length(); ++i)
        if (p.parts()[i] != l - static_cast<Partition::part_type>(i)) return false;
    return true;
}

inline bool is_rectangle(const Partition& p) {
    return !p.empty() && p.parts().front() == p.parts().back();
}

/// Parses "4,3,2,1"; the empty string (or whitespace) is the empty partition.
inline Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    std::vector<Partition::part_type> parts;
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        Partition::part_type value{};
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), last, value);
        if (token.empty() || ec != std::errc{} || ptr != last || value < 0)
            throw malformed_partition("bad token '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw malformed_partition("parts must be weakly decreasing: '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

/// Comma-separated form accepted by parse_partition.
inline std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

/// Calls fn(p) for every partition of n with at most max_rows parts and
/// first part at most max_part, in descending lexicographic order.
template <class Fn>
void for_each_partition(int n, int max_part, int max_rows, Fn&& fn) {
    std::vector<Partition::part_type> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            fn(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= max_rows) return;
        for (int v = std::min(cap, remaining); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
}

inline std::vector<Partition> partitions_of(int n, int max_part, int max_rows) {
    std::vector<Partition> out;
    for_each_partition(n, max_part, max_rows, [&](Partition p) { out.push_back(std::move(p)); });
    return out;
}

inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n, n); }

/// Every partition contained in (max_part^max_rows), all weights.
inline std::vector<Partition> partitions_in_box(int max_part, int max_rows) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_part * max_rows; ++n)
        for_each_partition(n, max_part, max_rows, [&](Partition p) { out.push_back(std::move(p)); });
    return out;
}

/// Every partition contained in outer, all weights.
inline std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<Partition::part_type> cur;
    auto rec = [&](auto&& self, std::size_t i, Partition::part_type cap) -> void {
        out.emplace_back(cur);
        if (i >= outer.length()) return;
        for (Partition::part_type v = 1; v <= std::min(cap, outer[i]); ++v) {
            cur.push_back(v);
            self(self, i + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, outer.first());
    return out;
}

} // namespace skewchar

template <>
struct std::hash<skewchar::Partition> {
    std::size_t operator()(const skewchar::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};
