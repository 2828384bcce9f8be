#include "fours/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <mutex>
#include <thread>

namespace fours {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0)
        return 0;
    if (a > UINT64_MAX / b)
        return UINT64_MAX;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) {
        r = sat_mul(r, base);
        if (r == UINT64_MAX)
            return r;
    }
    return r;
}

std::uint64_t binom_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = sat_mul(r, n - k + i);
        if (r == UINT64_MAX)
            return r;
        r /= i;
    }
    return r;
}

} // namespace

std::uint64_t SearchSpace::candidate_count() const {
    std::uint64_t slots = slot_count();
    std::uint64_t q = field.p; // scans require a finite field
    if (support_cap <= 0)
        return sat_pow(q, slots);
    std::uint64_t total = 0;
    for (int k = 1; k <= support_cap; ++k)
        total = sat_add(total, sat_mul(binom_sat(slots, static_cast<std::uint64_t>(k)),
                                       sat_pow(q - 1, static_cast<std::uint64_t>(k))));
    return total;
}

std::vector<GroupElement> words_up_to_length(int maxlen) {
    std::vector<GroupElement> out{GroupElement::identity()};
    for (int len = 1; len <= maxlen; ++len)
        for (Tv s : {Tv::X, Tv::Y})
            out.push_back(lift(DihedralWord::of(s, len)));
    return out;
}

// ---------------------------------------------------------------------------
// unit_scan
// ---------------------------------------------------------------------------

namespace {

struct Slot {
    GroupElement g;
    bool at_imin = false, at_jmin = false;
};

std::vector<Slot> make_slots(const SearchSpace &space) {
    std::vector<Slot> slots;
    for (const GroupElement &w : space.words)
        for (long i = space.box.ilo; i <= space.box.ihi; ++i)
            for (long j = space.box.jlo; j <= space.box.jhi; ++j) {
                Slot s;
                s.g = GroupElement{Exp3{w.h.i + i, w.h.j + j, w.h.k}, w.t};
                s.at_imin = i == space.box.ilo;
                s.at_jmin = j == space.box.jlo;
                slots.push_back(s);
            }
    return slots;
}

/// 4x4 GF(2) determinant, matrix packed row-major into 16 bits.
int gf2_det16(std::uint16_t m) {
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if ((m >> (row * 4 + col)) & 1) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != col) {
            std::uint16_t a = static_cast<std::uint16_t>((m >> (pivot * 4)) & 0xF);
            std::uint16_t b = static_cast<std::uint16_t>((m >> (col * 4)) & 0xF);
            m = static_cast<std::uint16_t>(m & ~(0xF << (pivot * 4)) & ~(0xF << (col * 4)));
            m = static_cast<std::uint16_t>(m | (b << (pivot * 4)) | (a << (col * 4)));
        }
        for (int row = col + 1; row < 4; ++row)
            if ((m >> (row * 4 + col)) & 1)
                m = static_cast<std::uint16_t>(m ^ (((m >> (col * 4)) & 0xF) << (row * 4)));
    }
    return 1;
}

const std::array<std::uint8_t, 65536> &gf2_det_table() {
    static const std::array<std::uint8_t, 65536> table = [] {
        std::array<std::uint8_t, 65536> t{};
        for (std::uint32_t m = 0; m < 65536; ++m)
            t[m] = static_cast<std::uint8_t>(gf2_det16(static_cast<std::uint16_t>(m)));
        return t;
    }();
    return table;
}

/// Evaluation of embed(g) at a = b = c = 1 over F_2, packed into 16 bits.
std::uint16_t klein_eval_f2(const GroupElement &g, const Field &f2) {
    AlgebraElement e = AlgebraElement::of_group(f2, g, Scalar::one(f2));
    Matrix4 m = embed(e);
    std::uint16_t bits = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            std::uint64_t parity = 0;
            for (const auto &[ex, s] : m.at(r, c).terms())
                parity ^= s.residue() & 1;
            if (parity)
                bits = static_cast<std::uint16_t>(bits | (1u << (r * 4 + c)));
        }
    return bits;
}

struct Found {
    std::uint64_t order;
    AlgebraElement element;
};

AlgebraElement candidate_element_f2(const Field &f, const std::vector<Slot> &slots,
                                    std::uint64_t mask) {
    AlgebraElement e(f);
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        e.add_term(slots[static_cast<std::size_t>(b)].g, Scalar::one(f));
    }
    return e;
}

void check_candidate(const Field &f, const std::vector<Slot> &slots, std::uint64_t mask,
                     std::uint64_t order, std::vector<Found> &out, std::uint64_t &det_checked) {
    AlgebraElement e = candidate_element_f2(f, slots, mask);
    ++det_checked;
    UnitVerdict v = is_unit(e);
    if (!v.is_unit)
        return;
    AlgebraElement inv = try_invert(e); // throws if the criterion lied
    if (e * inv != AlgebraElement::one(f))
        throw std::logic_error("unit_scan: inverse round-trip failed");
    out.push_back(Found{order, e});
}

struct F2Tables {
    std::vector<std::uint16_t> klein;
    std::array<std::vector<int>, 3> cls; // slot -> class id per quotient
    std::array<int, 3> class_count{};
    std::uint64_t imin_mask = 0, jmin_mask = 0;
};

F2Tables make_f2_tables(const SearchSpace &space, const std::vector<Slot> &slots) {
    F2Tables t;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        t.klein.push_back(klein_eval_f2(slots[s].g, space.field));
        if (slots[s].at_imin)
            t.imin_mask |= 1ull << s;
        if (slots[s].at_jmin)
            t.jmin_mask |= 1ull << s;
    }
    for (int q = 0; q < 3; ++q) {
        std::map<DihedralWord, int> ids;
        for (const Slot &s : slots) {
            DihedralWord w = project(s.g, QuotientChoice::of(q + 1));
            auto [it, fresh] = ids.emplace(w, static_cast<int>(ids.size()));
            t.cls[q].push_back(it->second);
        }
        t.class_count[q] = static_cast<int>(ids.size());
        if (t.class_count[q] > 64)
            throw std::invalid_argument("unit_scan: too many dihedral classes");
    }
    return t;
}

ScanResult scan_f2_full(const SearchSpace &space, const std::vector<Slot> &slots) {
    const Field &f = space.field;
    const std::size_t S = slots.size();
    const F2Tables tables = make_f2_tables(space, slots);
    const auto &det_table = gf2_det_table();
    const std::uint64_t total = 1ull << S;
    const int jobs = std::max(1, space.jobs);

    std::vector<std::vector<Found>> found(static_cast<std::size_t>(jobs));
    std::vector<std::uint64_t> det_counts(static_cast<std::size_t>(jobs), 0);
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&](int id) {
        std::uint64_t lo = total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(id);
        std::uint64_t hi = id == jobs - 1
                               ? total
                               : total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(id + 1);
        if (lo >= hi)
            return;
        try {
            // Gray-code walk: one slot flips per step, all filter state is O(1).
            std::uint64_t mask = lo ^ (lo >> 1);
            int parity = std::popcount(mask) & 1;
            std::uint16_t klein = 0;
            std::array<std::uint64_t, 3> class_parity{};
            std::array<int, 3> odd_classes{};
            for (std::uint64_t m = mask; m;) {
                int b = std::countr_zero(m);
                m &= m - 1;
                klein ^= tables.klein[static_cast<std::size_t>(b)];
                for (int q = 0; q < 3; ++q) {
                    std::uint64_t bit = 1ull << tables.cls[q][static_cast<std::size_t>(b)];
                    class_parity[q] ^= bit;
                    odd_classes[q] += (class_parity[q] & bit) ? 1 : -1;
                }
            }
            for (std::uint64_t n = lo; n < hi; ++n) {
                if (parity == 1 && odd_classes[0] == 1 && odd_classes[1] == 1 && odd_classes[2] == 1 &&
                    (mask & tables.imin_mask) && (mask & tables.jmin_mask) && det_table[klein] == 1)
                    check_candidate(f, slots, mask, n, found[static_cast<std::size_t>(id)],
                                    det_counts[static_cast<std::size_t>(id)]);
                if (n + 1 == hi)
                    break;
                int b = std::countr_zero(n + 1);
                mask ^= 1ull << b;
                parity ^= 1;
                klein ^= tables.klein[static_cast<std::size_t>(b)];
                for (int q = 0; q < 3; ++q) {
                    std::uint64_t bit = 1ull << tables.cls[q][static_cast<std::size_t>(b)];
                    class_parity[q] ^= bit;
                    odd_classes[q] += (class_parity[q] & bit) ? 1 : -1;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int id = 0; id < jobs; ++id)
            threads.emplace_back(worker, id);
        for (auto &t : threads)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    ScanResult result;
    result.candidates = total;
    std::vector<Found> all;
    for (auto &v : found)
        all.insert(all.end(), v.begin(), v.end());
    for (std::uint64_t d : det_counts)
        result.det_checked += d;
    std::sort(all.begin(), all.end(), [](const Found &a, const Found &b) { return a.order < b.order; });
    for (auto &fnd : all) {
        if (fnd.element.support_size() > 1)
            ++result.nontrivial;
        result.units.push_back(std::move(fnd.element));
    }
    return result;
}

ScanResult scan_f2_capped(const SearchSpace &space, const std::vector<Slot> &slots) {
    const Field &f = space.field;
    const std::size_t S = slots.size();
    const F2Tables tables = make_f2_tables(space, slots);
    const auto &det_table = gf2_det_table();

    ScanResult result;
    std::vector<Found> all;
    std::uint64_t order = 0;
    for (int k = 1; k <= space.support_cap; ++k) {
        if (static_cast<std::size_t>(k) > S)
            break;
        // Gosper's hack over S bits.
        std::uint64_t mask = (1ull << k) - 1;
        std::uint64_t limit = S == 64 ? ~0ull : (1ull << S);
        while (mask < limit) {
            ++order;
            ++result.candidates;
            if ((k & 1) == 1 && (mask & tables.imin_mask) && (mask & tables.jmin_mask)) {
                std::uint16_t klein = 0;
                std::array<std::uint64_t, 3> class_parity{};
                bool ok = true;
                for (std::uint64_t m = mask; m;) {
                    int b = std::countr_zero(m);
                    m &= m - 1;
                    klein ^= tables.klein[static_cast<std::size_t>(b)];
                    for (int q = 0; q < 3; ++q)
                        class_parity[q] ^= 1ull << tables.cls[q][static_cast<std::size_t>(b)];
                }
                for (int q = 0; q < 3 && ok; ++q)
                    ok = std::popcount(class_parity[q]) == 1;
                if (ok && det_table[klein] == 1)
                    check_candidate(f, slots, mask, order, all, result.det_checked);
            }
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            if (r >= limit || r == 0)
                break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    std::sort(all.begin(), all.end(), [](const Found &a, const Found &b) { return a.order < b.order; });
    for (auto &fnd : all) {
        if (fnd.element.support_size() > 1)
            ++result.nontrivial;
        result.units.push_back(std::move(fnd.element));
    }
    return result;
}

/// Small-space odometer scan for any prime field.
ScanResult scan_generic(const SearchSpace &space, const std::vector<Slot> &slots) {
    const Field &f = space.field;
    const std::uint64_t p = f.p;
    const std::size_t S = slots.size();

    std::vector<std::array<std::uint64_t, 16>> klein(S);
    for (std::size_t s = 0; s < S; ++s) {
        Matrix4 m = embed(AlgebraElement::of_group(f, slots[s].g, Scalar::one(f)));
        for (int rc = 0; rc < 16; ++rc) {
            std::uint64_t v = 0;
            for (const auto &[ex, sc] : m.at(rc / 4, rc % 4).terms())
                v = (v + sc.residue()) % p;
            klein[s][static_cast<std::size_t>(rc)] = v;
        }
    }
    auto det4_mod = [&](const std::array<std::uint64_t, 16> &m) -> std::uint64_t {
        auto mul = [&](std::uint64_t a, std::uint64_t b) {
            return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
        };
        auto sub = [&](std::uint64_t a, std::uint64_t b) { return (a + p - b % p) % p; };
        std::uint64_t det = 0;
        int perm[4] = {0, 1, 2, 3};
        // 24 permutations, direct expansion
        std::sort(perm, perm + 4);
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    inv += perm[i] > perm[j];
            std::uint64_t prod = 1;
            for (int i = 0; i < 4; ++i)
                prod = mul(prod, m[static_cast<std::size_t>(i * 4 + perm[i])]);
            det = inv % 2 == 0 ? (det + prod) % p : sub(det, prod);
        } while (std::next_permutation(perm, perm + 4));
        return det;
    };

    ScanResult result;
    std::vector<Found> all;
    std::vector<std::uint64_t> digits(S, 0);
    std::uint64_t order = 0;
    while (true) {
        // advance odometer
        std::size_t pos = 0;
        while (pos < S && ++digits[pos] == p) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == S)
            break;
        ++order;
        ++result.candidates;

        int active = 0;
        std::uint64_t aug = 0;
        bool imin = false, jmin = false;
        for (std::size_t s = 0; s < S; ++s) {
            if (digits[s]) {
                ++active;
                imin = imin || slots[s].at_imin;
                jmin = jmin || slots[s].at_jmin;
            }
            aug = (aug + digits[s]) % p;
        }
        if (space.support_cap > 0 && active > space.support_cap)
            continue;
        if (!imin || !jmin) // an exponent-shifted representative is scanned instead
            continue;
        if (aug == 0)
            continue;
        std::array<std::uint64_t, 16> m{};
        for (std::size_t s = 0; s < S; ++s)
            if (digits[s])
                for (int rc = 0; rc < 16; ++rc)
                    m[static_cast<std::size_t>(rc)] =
                        (m[static_cast<std::size_t>(rc)] +
                         static_cast<std::uint64_t>((static_cast<unsigned __int128>(digits[s]) *
                                                     klein[s][static_cast<std::size_t>(rc)]) %
                                                    p)) %
                        p;
        if (det4_mod(m) == 0)
            continue;
        AlgebraElement e(f);
        for (std::size_t s = 0; s < S; ++s)
            if (digits[s])
                e.add_term(slots[s].g, Scalar::of_residue(f, digits[s]));
        ++result.det_checked;
        UnitVerdict v = is_unit(e);
        if (v.is_unit) {
            AlgebraElement inv = try_invert(e);
            if (e * inv != AlgebraElement::one(f))
                throw std::logic_error("unit_scan: inverse round-trip failed");
            all.push_back(Found{order, e});
        }
    }
    for (auto &fnd : all) {
        if (fnd.element.support_size() > 1)
            ++result.nontrivial;
        result.units.push_back(std::move(fnd.element));
    }
    return result;
}

} // namespace

ScanResult unit_scan(const SearchSpace &space) {
    if (space.field.is_rational())
        throw std::invalid_argument("unit_scan: scans require a finite prime field");
    if (space.words.empty())
        throw std::invalid_argument("unit_scan: empty word set");
    std::uint64_t count = space.candidate_count();
    if (count > space.budget)
        throw BudgetExceeded(count);

    std::vector<Slot> slots = make_slots(space);
    if (space.field.p == 2 && slots.size() <= 63) {
        if (space.support_cap > 0)
            return scan_f2_capped(space, slots);
        return scan_f2_full(space, slots);
    }
    return scan_generic(space, slots);
}

// ---------------------------------------------------------------------------
// Promislow set
// ---------------------------------------------------------------------------

std::vector<GroupElement> promislow_set() {
    std::vector<GroupElement> out;
    const Exp3 A[6] = {{0, 0, 0}, {-1, 0, 0}, {-1, 1, 0}, {0, 1, 0}, {-1, 0, -1}, {0, 0, 1}};
    const Exp3 B[6] = {{0, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, -1, 1}, {0, 0, 1}, {1, -1, 1}};
    const Exp3 C[2] = {{0, 0, 1}, {0, 0, -1}};
    for (const Exp3 &e : A)
        out.push_back(GroupElement{e, Tv::X});
    for (const Exp3 &e : B)
        out.push_back(GroupElement{e, Tv::Y});
    for (const Exp3 &e : C)
        out.push_back(GroupElement{e, Tv::E});
    return out;
}

PromislowReport promislow_check() {
    PromislowReport rep;
    rep.set = promislow_set();

    const GroupAutomorphism &psi = GroupAutomorphism::swap_a_c();
    for (const GroupElement &g : rep.set)
        rep.image.push_back(psi.apply(g));

    // Expected image: B'y u C' u D'xy with B' = {1, c, b^-1, b^-1 a, a, c b^-1 a},
    // C' = {a, a^-1}, D' = {1, c^-1, c^-1 b, b, c^-1 a^-1, a}.
    std::set<GroupElement> expected;
    const Exp3 Bp[6] = {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}, {1, -1, 0}, {1, 0, 0}, {1, -1, 1}};
    const Exp3 Cp[2] = {{1, 0, 0}, {-1, 0, 0}};
    const Exp3 Dp[6] = {{0, 0, 0}, {0, 0, -1}, {0, 1, -1}, {0, 1, 0}, {-1, 0, -1}, {1, 0, 0}};
    for (const Exp3 &e : Bp)
        expected.insert(GroupElement{e, Tv::Y});
    for (const Exp3 &e : Cp)
        expected.insert(GroupElement{e, Tv::E});
    for (const Exp3 &e : Dp)
        expected.insert(GroupElement{e, Tv::Z});
    rep.image_matches =
        std::set<GroupElement>(rep.image.begin(), rep.image.end()) == expected &&
        rep.image.size() == 14;

    rep.max_length = 0;
    bool others_short = true;
    for (const GroupElement &g : rep.image) {
        long l = length(g);
        rep.lengths.emplace_back(g, l);
        rep.max_length = std::max(rep.max_length, l);
        if (l >= 3)
            rep.length3.push_back(g);
        else if (l > 2)
            others_short = false;
    }
    std::sort(rep.length3.begin(), rep.length3.end());

    // The two length-3 elements are the B' entries with a c factor, times y.
    std::vector<GroupElement> expected3 = {GroupElement{Exp3{0, 0, 1}, Tv::Y},
                                           GroupElement{Exp3{1, -1, 1}, Tv::Y}};
    std::sort(expected3.begin(), expected3.end());
    rep.ok = rep.image_matches && rep.max_length == 3 && others_short && rep.length3 == expected3;
    return rep;
}

std::optional<std::tuple<GroupElement, GroupElement, GroupElement>>
unique_product_check(const std::vector<GroupElement> &X, const std::vector<GroupElement> &Y) {
    if (X.empty() || Y.empty())
        throw std::invalid_argument("unique_product_check: sets must be nonempty");
    std::map<GroupElement, std::pair<int, std::pair<GroupElement, GroupElement>>> products;
    for (const GroupElement &x : X)
        for (const GroupElement &y : Y) {
            GroupElement g = gmul(x, y);
            auto it = products.find(g);
            if (it == products.end())
                products.emplace(g, std::make_pair(1, std::make_pair(x, y)));
            else
                ++it->second.first;
        }
    for (const auto &[g, info] : products)
        if (info.first == 1)
            return std::make_tuple(info.second.first, info.second.second, g);
    return std::nullopt;
}

} // namespace fours
