#pragma once

#include <array>
#include <string_view>

#include "lr.hpp"
#include "partition.hpp"
#include "skew_diagram.hpp"

namespace skewchar {

inline bool is_multiplicity_free(const Decomposition& dec) {
    for (const auto& [nu, c] : dec.terms())
        if (c != 1) return false;
    return true;
}

enum class MFReason {
    IrreduciblePartition,
    RotatedPartition,
    Case1_sin1,
    Case2_sin2_dp3,
    Case3_dp3_sout1,
    Case4_dp2,
    BruteForce,
    NotMF,
};

inline std::string_view to_string(MFReason r) {
    static constexpr std::array<std::string_view, 8> names{
        "IrreduciblePartition", "RotatedPartition", "Case1_sin1", "Case2_sin2_dp3",
        "Case3_dp3_sout1",      "Case4_dp2",        "BruteForce", "NotMF",
    };
    return names[static_cast<std::size_t>(r)];
}

struct MFVerdict {
    bool multiplicity_free = false;
    MFReason reason = MFReason::NotMF;
    friend bool operator==(const MFVerdict&, const MFVerdict&) = default;
};

namespace detail {

/// The structural conditions for one orientation; NotMF when none applies.
inline MFReason structural_case(const SkewDiagram& d) {
    if (!is_rectangle(d.inner())) return MFReason::NotMF;
    const auto stats = path_stats(d);
    const auto dp = distinct_part_count(d.outer());
    if (stats.s_in == 1) return MFReason::Case1_sin1;
    if (stats.s_in == 2 && dp == 3) return MFReason::Case2_sin2_dp3;
    if (dp == 3 && stats.s_out == 1) return MFReason::Case3_dp3_sout1;
    if (dp == 2) return MFReason::Case4_dp2;
    return MFReason::NotMF;
}

} // namespace detail

/*
 * Straight and rotated straight shapes are single irreducibles. A connected
 * diagram is multiplicity free iff, in the diagram itself or in its 180
 * degree rotation, the inner shape is a rectangle and one of
 *   s_in = 1;  s_in = 2 and dp(outer) = 3;  dp(outer) = 3 and s_out = 1;
 *   dp(outer) = 2
 * holds. Disconnected diagrams are decided from the decomposition.
 */
inline MFVerdict classify_mf(const SkewDiagram& d) {
    const SkewDiagram b = normalize_basic(d);
    if (b.inner().empty()) return {true, MFReason::IrreduciblePartition};
    const SkewDiagram rotated = rotate180(b);
    if (rotated.inner().empty()) return {true, MFReason::RotatedPartition};
    if (!is_connected(b)) return {is_multiplicity_free(skew_character(b)), MFReason::BruteForce};
    for (const auto& orientation : {b, rotated}) {
        const auto reason = detail::structural_case(orientation);
        if (reason != MFReason::NotMF) return {true, reason};
    }
    return {false, MFReason::NotMF};
}

} // namespace skewchar
