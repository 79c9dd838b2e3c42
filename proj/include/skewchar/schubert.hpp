#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "lr.hpp"
#include "partition.hpp"
#include "skew_diagram.hpp"

namespace skewchar {

/// The rectangle (k^l): at most l rows, each of length at most k.
struct BoxSpec {
    int k = 0;
    int l = 0;

    [[nodiscard]] bool fits(const Partition& p) const noexcept {
        return p.length() <= static_cast<std::size_t>(l) && p.first() <= k;
    }
    [[nodiscard]] Partition shape() const { return Partition::rectangle(k, static_cast<std::size_t>(l)); }
    [[nodiscard]] std::string to_string() const { return std::to_string(k) + "x" + std::to_string(l); }

    friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

/// Parses "KxL".
inline BoxSpec parse_box(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw malformed_partition("box must look like KxL, got '" + text + "'");
    try {
        std::size_t used_k = 0, used_l = 0;
        const int k = std::stoi(text.substr(0, x), &used_k);
        const int l = std::stoi(text.substr(x + 1), &used_l);
        if (used_k != x || used_l != text.size() - x - 1 || k < 1 || l < 1) throw std::invalid_argument(text);
        return {k, l};
    } catch (const std::logic_error&) {
        throw malformed_partition("box must look like KxL with positive K and L, got '" + text + "'");
    }
}

/// The 180 degree rotated complement (k^l)/p.
inline Partition complement_in_box(const Partition& p, const BoxSpec& box) {
    if (!box.fits(p)) throw does_not_fit(p.to_string() + " in " + box.to_string());
    std::vector<int> out(static_cast<std::size_t>(box.l));
    for (int i = 0; i < box.l; ++i) out[static_cast<std::size_t>(i)] = box.k - p[static_cast<std::size_t>(box.l - 1 - i)];
    return Partition(std::move(out));
}

/// [mu] * [nu] restricted to constituents inside the box.
inline Decomposition star_product(const Partition& mu, const Partition& nu, const BoxSpec& box) {
    Decomposition out;
    for (const auto& [p, c] : lr_product(mu, nu).terms())
        if (box.fits(p)) out.add(p, c);
    return out;
}

/*
 * For mu in lam in the box: the coefficient of [alpha] in [lam/mu] equals
 * the coefficient of [alpha^-1] in [mu] * [lam^-1], for every alpha in the box.
 */
inline bool duality_check(const Partition& mu, const Partition& lam, const BoxSpec& box) {
    if (!box.fits(lam)) throw does_not_fit(lam.to_string() + " in " + box.to_string());
    if (!lam.contains(mu)) throw not_contained(mu.to_string() + " is not contained in " + lam.to_string());
    const auto skew = skew_character(SkewDiagram(lam, mu));
    const auto star = star_product(mu, complement_in_box(lam, box), box);
    for (const auto& alpha : partitions_in_box(box.k, box.l))
        if (skew.coefficient(alpha) != star.coefficient(complement_in_box(alpha, box))) return false;
    return true;
}

} // namespace skewchar
