#include "fours/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace fours {

std::string Token::str() const {
    std::string s(kind == TokenKind::Alpha ? "a" : "b");
    s += std::to_string(index);
    if (conj != Tv::E) {
        s += '^';
        s += tv_char(conj);
    }
    return s;
}

std::string to_string(const Token &t) { return t.str(); }

std::string to_string(const Chain &c) {
    std::string s = "{";
    bool first = true;
    for (const Token &t : c) {
        if (!first)
            s += ", ";
        s += t.str();
        first = false;
    }
    return s + "}";
}

std::string to_string(const Monomial &m) {
    std::string s;
    for (const Token &t : m)
        s += t.str() + " ";
    if (!s.empty())
        s.pop_back();
    return s;
}

Tv factor_letter(int n, Tv start, int index) {
    if (start != Tv::X && start != Tv::Y)
        throw std::invalid_argument("factor_letter: start must be x or y");
    Tv other = start == Tv::X ? Tv::Y : Tv::X;
    return ((n - index) % 2 == 0) ? start : other;
}

TokenTable build_table(int n, Tv start) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("build_table: n out of range");
    if (start != Tv::X && start != Tv::Y)
        throw std::invalid_argument("build_table: start must be x or y");

    TokenTable table{n, start, {}};
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        Monomial mono;
        mono.reserve(static_cast<std::size_t>(n));
        std::vector<Tv> letters; // selected letters, top index first
        Tv acc = Tv::E;          // Klein image of the letters selected so far
        for (int i = n; i >= 1; --i) {
            bool beta = (bits >> (i - 1)) & 1u;
            mono.push_back(Token{i, beta ? TokenKind::Beta : TokenKind::Alpha, acc});
            if (beta) {
                Tv g = factor_letter(n, start, i);
                letters.push_back(g);
                acc = klein_mul(acc, g);
            }
        }
        // Free reduction in C2 * C2: adjacent equal letters cancel.
        std::vector<Tv> red;
        for (Tv g : letters) {
            if (!red.empty() && red.back() == g)
                red.pop_back();
            else
                red.push_back(g);
        }
        DihedralWord w = red.empty() ? DihedralWord::empty()
                                     : DihedralWord::of(red.front(), static_cast<long>(red.size()));
        table.rows[w].push_back(std::move(mono));
    }
    return table;
}

bool chain_admissible(const Chain &c) {
    for (const Token &t : c) {
        Token other = t;
        other.kind = t.kind == TokenKind::Alpha ? TokenKind::Beta : TokenKind::Alpha;
        if (c.count(other))
            return false;
    }
    return true;
}

bool is_consistent(const Chain &c, const TokenTable &table) {
    if (!chain_admissible(c))
        return false;
    for (const auto &[w, monos] : table.rows) {
        std::size_t hits = 0;
        for (const Monomial &m : monos)
            hits += std::any_of(m.begin(), m.end(), [&](const Token &t) { return c.count(t) > 0; });
        if (hits == monos.size() - 1)
            return false;
    }
    return true;
}

namespace {

struct MaskTable {
    std::vector<Token> universe;
    std::vector<std::vector<std::uint64_t>> rows; // one mask per monomial
    std::vector<std::uint64_t> conflict;          // per token: mask of its alpha/beta twin
};

MaskTable make_masks(const TokenTable &table) {
    std::set<Token> uni;
    for (const auto &[w, monos] : table.rows)
        for (const Monomial &m : monos)
            uni.insert(m.begin(), m.end());
    MaskTable mt;
    mt.universe.assign(uni.begin(), uni.end());
    if (mt.universe.size() > 64)
        throw std::invalid_argument("minimal_chains: token universe exceeds 64");
    auto bit_of = [&](const Token &t) -> int {
        auto it = std::lower_bound(mt.universe.begin(), mt.universe.end(), t);
        return it != mt.universe.end() && *it == t
                   ? static_cast<int>(it - mt.universe.begin())
                   : -1;
    };
    for (const auto &[w, monos] : table.rows) {
        std::vector<std::uint64_t> masks;
        for (const Monomial &m : monos) {
            std::uint64_t mask = 0;
            for (const Token &t : m)
                mask |= 1ull << bit_of(t);
            masks.push_back(mask);
        }
        mt.rows.push_back(std::move(masks));
    }
    mt.conflict.resize(mt.universe.size(), 0);
    for (std::size_t b = 0; b < mt.universe.size(); ++b) {
        Token twin = mt.universe[b];
        twin.kind = twin.kind == TokenKind::Alpha ? TokenKind::Beta : TokenKind::Alpha;
        int tb = bit_of(twin);
        if (tb >= 0)
            mt.conflict[b] = 1ull << tb;
    }
    return mt;
}

bool consistent_mask(const MaskTable &mt, std::uint64_t chain) {
    for (const auto &row : mt.rows) {
        std::size_t hits = 0;
        for (std::uint64_t m : row)
            hits += (m & chain) != 0;
        if (hits == row.size() - 1)
            return false;
    }
    return true;
}

void enumerate_subsets(const MaskTable &mt, int k, std::vector<std::uint64_t> &found,
                       std::vector<int> &picked, int next, std::uint64_t mask) {
    if (static_cast<int>(picked.size()) == k) {
        for (std::uint64_t f : found)
            if ((f & mask) == f)
                return; // contains a smaller minimal chain
        if (consistent_mask(mt, mask))
            found.push_back(mask);
        return;
    }
    int remaining = k - static_cast<int>(picked.size());
    for (int b = next; b + remaining <= static_cast<int>(mt.universe.size()); ++b) {
        if (mt.conflict[b] & mask)
            continue;
        picked.push_back(b);
        enumerate_subsets(mt, k, found, picked, b + 1, mask | (1ull << b));
        picked.pop_back();
    }
}

} // namespace

std::set<Chain> minimal_chains(const TokenTable &table, int size_bound) {
    if (size_bound < 1)
        throw std::invalid_argument("minimal_chains: size bound must be positive");
    MaskTable mt = make_masks(table);
    std::vector<std::uint64_t> found;
    for (int k = 1; k <= size_bound; ++k) {
        std::vector<int> picked;
        enumerate_subsets(mt, k, found, picked, 0, 0);
    }
    std::set<Chain> out;
    for (std::uint64_t mask : found) {
        Chain c;
        for (std::size_t b = 0; b < mt.universe.size(); ++b)
            if (mask & (1ull << b))
                c.insert(mt.universe[b]);
        out.insert(std::move(c));
    }
    return out;
}

std::vector<Token> pair_pool(int n, Tv start) {
    if (n < 3)
        throw std::invalid_argument("pair_pool: n must be at least 3");
    const Tv cycle_x[4] = {Tv::E, Tv::Y, Tv::Z, Tv::X};
    const Tv cycle_y[4] = {Tv::E, Tv::X, Tv::Z, Tv::Y};
    const Tv *cycle = start == Tv::X ? cycle_x : cycle_y;
    std::vector<Token> out;
    for (int r = 0; n - 1 - r >= 2; ++r)
        out.push_back(Token{n - 1 - r, TokenKind::Beta, cycle[r % 4]});
    return out;
}

namespace {

Chain shift_labels(const Chain &c, Tv g) {
    Chain out;
    for (Token t : c) {
        t.conj = klein_mul(t.conj, g);
        out.insert(t);
    }
    return out;
}

std::set<Chain> recursive_chains(int n, Tv start) {
    if (n == 2)
        return {}; // length-2 coefficient tables admit no consistent chain
    std::set<Chain> out;
    std::vector<Token> pool = pair_pool(n, start);
    for (const Token &lam : pool)
        for (Token mu : pool) {
            mu.conj = klein_mul(mu.conj, start);
            out.insert(Chain{lam, mu});
        }
    Tv other = start == Tv::X ? Tv::Y : Tv::X;
    for (const Chain &r : recursive_chains(n - 1, other)) {
        Chain with_beta = r;
        with_beta.insert(Token{n, TokenKind::Beta, Tv::E});
        out.insert(with_beta);
        Chain with_alpha = shift_labels(r, start);
        with_alpha.insert(Token{n, TokenKind::Alpha, Tv::E});
        out.insert(with_alpha);
    }
    // From n = 5 on, lifted level-(n-1) chains can strictly contain one of the
    // new pairs; keep only the inclusion-minimal members.
    std::set<Chain> minimal;
    for (const Chain &c : out) {
        bool keep = true;
        for (const Chain &other_chain : out)
            if (other_chain != c &&
                std::includes(c.begin(), c.end(), other_chain.begin(), other_chain.end())) {
                keep = false;
                break;
            }
        if (keep)
            minimal.insert(c);
    }
    return minimal;
}

} // namespace

std::set<Chain> recursive_minimal_chains(int n, Tv start) {
    if (n < 3)
        throw std::invalid_argument("recursive_minimal_chains: n must be at least 3");
    if (start != Tv::X && start != Tv::Y)
        throw std::invalid_argument("recursive_minimal_chains: start must be x or y");
    return recursive_chains(n, start);
}

Chain chain_action(const Chain &c, int n, ChainOp op, Tv side) {
    switch (op) {
    case ChainOp::ConjX:
        return shift_labels(c, Tv::X);
    case ChainOp::ConjY:
        return shift_labels(c, Tv::Y);
    case ChainOp::SwapXY: {
        Chain out;
        for (Token t : c) {
            if (t.conj == Tv::X)
                t.conj = Tv::Y;
            else if (t.conj == Tv::Y)
                t.conj = Tv::X;
            out.insert(t);
        }
        return out;
    }
    case ChainOp::Star: {
        Chain out;
        for (Token t : c) {
            Tv label = klein_mul(t.conj, Tv::Z);
            if (t.kind == TokenKind::Beta)
                label = klein_mul(label, factor_letter(n, side, t.index));
            out.insert(Token{n + 1 - t.index, t.kind, label});
        }
        return out;
    }
    }
    throw std::logic_error("chain_action: unknown op");
}

std::vector<std::vector<SidedChain>> chain_orbits(const std::vector<SidedChain> &chains, int n) {
    const std::size_t m = chains.size();

    // Closure of each chain under the action group, as bare token sets.
    std::vector<std::set<Chain>> closures(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::set<SidedChain> seen;
        std::vector<SidedChain> frontier{chains[i]};
        seen.insert(chains[i]);
        while (!frontier.empty()) {
            SidedChain cur = frontier.back();
            frontier.pop_back();
            closures[i].insert(cur.chain);
            for (ChainOp op : {ChainOp::ConjX, ChainOp::ConjY, ChainOp::SwapXY, ChainOp::Star}) {
                SidedChain next;
                next.chain = chain_action(cur.chain, n, op, cur.side);
                next.side = cur.side;
                if (op == ChainOp::SwapXY || (op == ChainOp::Star && n % 2 == 0))
                    next.side = cur.side == Tv::X ? Tv::Y : Tv::X;
                if (seen.insert(next).second)
                    frontier.push_back(next);
            }
        }
    }

    // Union-find: join i and j when some closure set of one embeds in the other.
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i)
        parent[i] = i;
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    auto contains = [](const Chain &big, const Chain &small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool joined = false;
            for (const Chain &s : closures[i])
                if (contains(chains[j].chain, s)) {
                    joined = true;
                    break;
                }
            if (!joined)
                for (const Chain &s : closures[j])
                    if (contains(chains[i].chain, s)) {
                        joined = true;
                        break;
                    }
            if (joined)
                parent[find(i)] = find(j);
        }

    std::map<std::size_t, std::vector<SidedChain>> groups;
    for (std::size_t i = 0; i < m; ++i)
        groups[find(i)].push_back(chains[i]);
    std::vector<std::vector<SidedChain>> out;
    for (auto &[root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fours
