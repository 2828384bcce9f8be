#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fours/dihedral.hpp"

namespace fours {

enum class TokenKind : std::uint8_t { Alpha, Beta };

/**
 * Symbolic conjugate of a split-form coefficient: alpha_i or beta_i with a
 * Klein four conjugation label. Conjugation of KN coefficients factors
 * through Gamma/H, so word superscripts reduce to the four labels.
 */
struct Token {
    int index = 0;
    TokenKind kind = TokenKind::Alpha;
    Tv conj = Tv::E;

    friend auto operator<=>(const Token &, const Token &) = default;
    std::string str() const; // "a4", "b2^x"
};

/// One product of chosen tokens, highest factor index first.
using Monomial = std::vector<Token>;

/// A set of conjugated tokens; condition (2) of consistency requires that
/// alpha_i^g and beta_i^g never both occur.
using Chain = std::set<Token>;

/**
 * Symbolic coefficient table of (a_n + b_n g_n)...(a_1 + b_1 g_1) with
 * alternating letters, g_n = start: for every transversal word, the token
 * monomials appearing in its coefficient. H-monomial factors are dropped.
 */
struct TokenTable {
    int n = 0;
    Tv start = Tv::X;
    std::map<DihedralWord, std::vector<Monomial>> rows;
};

/// Letter of factor `index` in the table with top letter `start`.
Tv factor_letter(int n, Tv start, int index);

TokenTable build_table(int n, Tv start);

/// Condition (2) alone: no alpha/beta clash at the same index and label.
bool chain_admissible(const Chain &c);

/**
 * Consistency: condition (2), and for every coefficient with m monomials, if
 * at least m-1 of them contain a token of c then all m do. Single-monomial
 * coefficients must therefore always be hit.
 */
bool is_consistent(const Chain &c, const TokenTable &table);

/// All inclusion-minimal consistent chains of size <= size_bound.
std::set<Chain> minimal_chains(const TokenTable &table, int size_bound);

/**
 * The beta tokens of the two monomial-coefficient families: beta_{n-1},
 * beta_{n-2}^y, beta_{n-3}^z, beta_{n-4}^x, beta_{n-5}, ... down to index 2
 * (x and y swapped when start is y). Minimal pair chains draw from this list.
 */
std::vector<Token> pair_pool(int n, Tv start);

/**
 * Recursive construction of the minimal consistent chains: all pairs
 * {lambda, mu} with lambda and mu^start in pair_pool(n, start), together with
 * R + {beta_n} and R^start + {alpha_n} for R from level n-1 with the other
 * start letter.
 */
std::set<Chain> recursive_minimal_chains(int n, Tv start);

enum class ChainOp { ConjX, ConjY, SwapXY, Star };

/**
 * Token action of the four symmetries. ConjX / ConjY multiply every label by
 * x / y; SwapXY exchanges x and y in labels (moving chains to the mirrored
 * table); Star reverses indices i -> n+1-i and maps alpha_i^g -> alpha^{gz},
 * beta_i^g -> beta^{g z gamma_i}, with gamma_i the factor letter in the
 * source table (`side`).
 */
Chain chain_action(const Chain &c, int n, ChainOp op, Tv side = Tv::X);

struct SidedChain {
    Tv side = Tv::X; // which table the chain belongs to
    Chain chain;
    friend auto operator<=>(const SidedChain &, const SidedChain &) = default;
};

/**
 * Orbit partition of a family of chains under the group generated by the four
 * actions. Two chains are connected when some action word carries the token
 * set of one into (a subset of) the other; containment participates because
 * ruling out a divisibility pattern rules out every pattern containing it.
 */
std::vector<std::vector<SidedChain>> chain_orbits(const std::vector<SidedChain> &chains, int n);

std::string to_string(const Token &t);
std::string to_string(const Chain &c);
std::string to_string(const Monomial &m);

} // namespace fours
