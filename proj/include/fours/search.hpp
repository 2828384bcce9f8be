#pragma once

#include <cstdint>
#include <optional>
#include <tuple>

#include "fours/matrix.hpp"
#include "fours/dihedral.hpp"

namespace fours {

/// Exponent box for KN coefficients a^i b^j in a scan.
struct ExpBox {
    long ilo = 0, ihi = 0, jlo = 0, jhi = 0;
    long width_i() const { return ihi - ilo + 1; }
    long width_j() const { return jhi - jlo + 1; }
};

/**
 * Finite space of candidate elements: one KN coefficient with support inside
 * the box for each listed transversal word. The candidate count is known in
 * advance and checked against the budget before scanning.
 */
struct SearchSpace {
    std::vector<GroupElement> words; // transversal-word lifts
    ExpBox box;
    Field field;
    int support_cap = 0;               // 0 = full enumeration
    std::uint64_t budget = 1ull << 32; // candidate-count budget
    int jobs = 1;

    std::uint64_t candidate_count() const; // saturates at UINT64_MAX
    std::size_t slot_count() const { return words.size() * static_cast<std::size_t>(box.width_i() * box.width_j()); }
};

struct BudgetExceeded : std::runtime_error {
    std::uint64_t count;
    explicit BudgetExceeded(std::uint64_t c)
        : std::runtime_error("candidate count " + std::to_string(c) + " exceeds the configured budget"),
          count(c) {}
};

struct ScanResult {
    std::vector<AlgebraElement> units; // every unit found, canonical order
    std::uint64_t candidates = 0;      // candidates enumerated
    std::uint64_t det_checked = 0;     // candidates that reached the determinant
    std::uint64_t nontrivial = 0;      // units with support size > 1
};

/**
 * Enumerates the whole space and returns every unit (determinant criterion,
 * re-verified through the adjugate inverse). Cheap sound filters run first:
 * augmentation, the Klein-quotient evaluation, and for F_2 the three infinite
 * dihedral quotients, where all units are trivial.
 */
ScanResult unit_scan(const SearchSpace &space);

/// Lifts of all transversal words of length <= maxlen (1, x, y, xy, yx, ...).
std::vector<GroupElement> words_up_to_length(int maxlen);

/// The 14-element Promislow set A x u B y u C.
std::vector<GroupElement> promislow_set();

struct PromislowReport {
    std::vector<GroupElement> set;                      // P, 14 elements
    std::vector<GroupElement> image;                    // P' under x -> xy, y -> y
    std::vector<std::pair<GroupElement, long>> lengths; // per image element, N1 length
    bool image_matches = false; // P' equals the expected B'y u C' u D'xy lists
    long max_length = 0;
    std::vector<GroupElement> length3; // image elements of length 3
    bool ok = false;
};

/**
 * Applies the automorphism swapping a and c to P, checks the image set and
 * its length profile (max exactly 3, attained only by the two elements with
 * a c factor in front of y, everything else of length at most 2).
 */
PromislowReport promislow_check();

/**
 * Brute-force unique-product check over X x Y; returns a product with a
 * unique representation (x, y, xy) if one exists, none otherwise.
 */
std::optional<std::tuple<GroupElement, GroupElement, GroupElement>>
unique_product_check(const std::vector<GroupElement> &X, const std::vector<GroupElement> &Y);

} // namespace fours
