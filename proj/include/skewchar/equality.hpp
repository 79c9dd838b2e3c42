#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lr.hpp"
#include "mf.hpp"
#include "partition.hpp"
#include "skew_diagram.hpp"

namespace skewchar {

namespace detail {

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be written by index.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace detail

/*
 * Representative of a diagram modulo translation and 180 degree rotation,
 * where the components of a disconnected diagram move independently. Holds
 * one normalized entry per component (the smaller of the component and its
 * rotation), sorted.
 */
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::vector<SkewDiagram> components) : components_(std::move(components)) {
        std::ranges::sort(components_);
    }

    [[nodiscard]] const std::vector<SkewDiagram>& components() const noexcept { return components_; }
    [[nodiscard]] bool connected() const noexcept { return components_.size() <= 1; }

    /// The representative of a connected diagram.
    [[nodiscard]] const SkewDiagram& representative() const { return components_.at(0); }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (const auto& c : components_) {
            if (!out.empty()) out += " (x) ";
            out += c.to_string();
        }
        return out.empty() ? "/" : out;
    }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

private:
    std::vector<SkewDiagram> components_;
};

inline CanonicalForm canonical_form(const SkewDiagram& d) {
    std::vector<SkewDiagram> parts;
    for (const auto& c : decay_components(d)) parts.push_back(std::min(c, rotate180(c)));
    return CanonicalForm(std::move(parts));
}

inline bool trivially_equal(const SkewDiagram& a, const SkewDiagram& b) {
    return canonical_form(a) == canonical_form(b);
}

/// Same staircase outer shape and b is the transpose of a (both normalized).
inline bool staircase_conjugate_equal(const SkewDiagram& a, const SkewDiagram& b) {
    const auto na = normalize_basic(a);
    const auto nb = normalize_basic(b);
    return is_staircase(na.outer()) && na.outer() == nb.outer() && nb == normalize_basic(conjugate_skew(na));
}

inline bool characters_equal(const SkewDiagram& a, const SkewDiagram& b) {
    return skew_character(a) == skew_character(b);
}

/// Equal parts multisets and equal heights multisets.
inline bool necessary_conditions_check(const SkewDiagram& a, const SkewDiagram& b) {
    return parts_and_heights(normalize_basic(a)) == parts_and_heights(normalize_basic(b));
}

/// Stacks normalized components top-right to bottom-left, touching corner to corner.
inline SkewDiagram assemble_components(const std::vector<SkewDiagram>& components) {
    std::vector<int> outer, inner;
    int offset = 0;
    for (const auto& c : components) offset += c.columns();
    for (const auto& c : components) {
        offset -= c.columns();
        for (std::size_t r = 0; r < c.rows(); ++r) {
            outer.push_back(c.outer()[r] + offset);
            inner.push_back(c.inner()[r] + offset);
        }
    }
    return SkewDiagram(Partition(std::move(outer)), Partition(std::move(inner)));
}

/*
 * The arrangements of d reachable by translating or rotating its components
 * independently, restricted to those whose outer shape is a staircase.
 */
inline std::vector<SkewDiagram> staircase_arrangements(const SkewDiagram& d) {
    std::vector<SkewDiagram> out;
    const auto form = canonical_form(d);
    const auto& comps = form.components();
    if (comps.empty()) return out;

    // comps is sorted, so next_permutation visits each distinct ordering once.
    std::vector<SkewDiagram> order = comps;
    std::vector<SkewDiagram> placed(comps.size());
    do {
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == order.size()) {
                auto candidate = assemble_components(placed);
                if (is_staircase(candidate.outer()) && std::ranges::find(out, candidate) == out.end())
                    out.push_back(std::move(candidate));
                return;
            }
            placed[k] = order[k];
            self(self, k + 1);
            auto r = rotate180(order[k]);
            if (r != order[k]) {
                placed[k] = std::move(r);
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    } while (std::next_permutation(order.begin(), order.end()));
    std::ranges::sort(out);
    return out;
}

/*
 * Whether a and b are related by the staircase clause once translation and
 * rotation (of the whole diagram or of its components) are allowed: some
 * arrangement of a has a staircase outer shape and its transpose is an
 * arrangement of b.
 */
inline bool staircase_conjugate_up_to_symmetry(const SkewDiagram& a, const SkewDiagram& b) {
    const auto target = canonical_form(b);
    for (const auto& arrangement : staircase_arrangements(a))
        if (canonical_form(conjugate_skew(arrangement)) == target) return true;
    return false;
}

/*
 * Predicted equality of two multiplicity free skew characters: the diagrams
 * agree up to translation or rotation, or they are transposes of each other
 * inside a common staircase.
 */
inline bool predict_equal_mf(const SkewDiagram& a, const SkewDiagram& b, bool check_preconditions = false) {
    if (check_preconditions) {
        if (!classify_mf(a).multiplicity_free) throw not_multiplicity_free(a.to_string());
        if (!classify_mf(b).multiplicity_free) throw not_multiplicity_free(b.to_string());
    }
    return trivially_equal(a, b) || staircase_conjugate_up_to_symmetry(a, b);
}

/// Characters of a corpus, computed once per canonical form.
struct CharacterTable {
    std::vector<SkewDiagram> corpus;
    std::vector<std::size_t> form_of;          // corpus index -> form index
    std::vector<CanonicalForm> forms;          // sorted, distinct
    std::vector<SkewDiagram> representatives;  // first corpus diagram with each form
    std::vector<Decomposition> characters;     // per form

    /// Form indices grouped by character, each list ascending.
    [[nodiscard]] std::map<Decomposition, std::vector<std::size_t>> classes() const {
        std::map<Decomposition, std::vector<std::size_t>> out;
        for (std::size_t f = 0; f < forms.size(); ++f) out[characters[f]].push_back(f);
        return out;
    }
};

inline CharacterTable tabulate_characters(std::vector<SkewDiagram> corpus, unsigned jobs = 1) {
    CharacterTable t;
    t.corpus = std::move(corpus);
    std::map<CanonicalForm, std::size_t> first_seen;
    std::vector<CanonicalForm> per_diagram;
    per_diagram.reserve(t.corpus.size());
    for (std::size_t i = 0; i < t.corpus.size(); ++i) {
        per_diagram.push_back(canonical_form(t.corpus[i]));
        first_seen.try_emplace(per_diagram.back(), i);
    }
    std::map<CanonicalForm, std::size_t> index;
    for (const auto& [form, first] : first_seen) {
        index.emplace(form, t.forms.size());
        t.forms.push_back(form);
        t.representatives.push_back(t.corpus[first]);
    }
    t.form_of.reserve(t.corpus.size());
    for (const auto& f : per_diagram) t.form_of.push_back(index.at(f));

    t.characters.resize(t.forms.size());
    detail::parallel_for(t.forms.size(), jobs,
                         [&](std::size_t f) { t.characters[f] = skew_character(t.representatives[f]); });
    return t;
}

struct EqualityClass {
    Decomposition character;
    std::vector<CanonicalForm> forms;
};

enum class ViolationKind {
    UnpredictedEquality,  // equal multiplicity free characters not explained by the prediction
    StaircaseConverse,    // a staircase diagram whose transpose has a different character
};

struct Violation {
    ViolationKind kind;
    SkewDiagram a;
    SkewDiagram b;
};

struct VerificationReport {
    EnumerationBounds bounds;
    std::size_t diagrams_examined = 0;
    std::size_t distinct_forms = 0;
    std::size_t mf_count = 0;
    std::vector<EqualityClass> equality_classes;
    std::vector<Violation> violations;
    std::size_t staircase_confirmations = 0;
    std::size_t staircase_converse_checked = 0;

    [[nodiscard]] bool confirmed() const noexcept { return violations.empty(); }
};

/*
 * Enumerates every basic diagram within bounds, keeps those with a
 * multiplicity free character and groups them by character. Every pair of
 * distinct canonical forms inside a group must satisfy predict_equal_mf;
 * each staircase-explained pair counts as a confirmation. Conversely every
 * enumerated diagram with a staircase outer shape must share its character
 * with its transpose.
 */
inline VerificationReport verify_main_theorem(const EnumerationBounds& bounds, unsigned jobs = 1) {
    VerificationReport report;
    report.bounds = bounds;
    const auto table = tabulate_characters(
        enumerate_basic_skew_diagrams(bounds.max_cells, bounds.max_part, bounds.max_rows), jobs);
    report.diagrams_examined = table.corpus.size();
    report.distinct_forms = table.forms.size();
    for (std::size_t f : table.form_of)
        if (is_multiplicity_free(table.characters[f])) ++report.mf_count;

    for (auto& [character, members] : table.classes()) {
        if (!is_multiplicity_free(character)) continue;
        EqualityClass cls{character, {}};
        for (std::size_t f : members) cls.forms.push_back(table.forms[f]);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const auto& a = table.representatives[members[i]];
                const auto& b = table.representatives[members[j]];
                if (predict_equal_mf(a, b))
                    ++report.staircase_confirmations;
                else
                    report.violations.push_back({ViolationKind::UnpredictedEquality, a, b});
            }
        report.equality_classes.push_back(std::move(cls));
    }
    std::ranges::sort(report.equality_classes,
                      [](const EqualityClass& x, const EqualityClass& y) { return x.forms.front() < y.forms.front(); });

    std::map<CanonicalForm, std::size_t> form_index;
    for (std::size_t f = 0; f < table.forms.size(); ++f) form_index.emplace(table.forms[f], f);
    std::vector<std::pair<std::size_t, SkewDiagram>> pending;
    for (std::size_t i = 0; i < table.corpus.size(); ++i) {
        const auto& d = table.corpus[i];
        if (!is_staircase(d.outer())) continue;
        ++report.staircase_converse_checked;
        pending.emplace_back(i, conjugate_skew(d));
    }
    std::vector<char> ok(pending.size(), 0);
    detail::parallel_for(pending.size(), jobs, [&](std::size_t k) {
        const auto& [i, t] = pending[k];
        const auto& expected = table.characters[table.form_of[i]];
        auto it = form_index.find(canonical_form(t));
        ok[k] = (it != form_index.end() ? table.characters[it->second] : skew_character(t)) == expected;
    });
    for (std::size_t k = 0; k < pending.size(); ++k)
        if (!ok[k]) report.violations.push_back({ViolationKind::StaircaseConverse, table.corpus[pending[k].first], pending[k].second});
    return report;
}

} // namespace skewchar
