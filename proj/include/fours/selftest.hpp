#pragma once

#include <string>
#include <vector>

#include "fours/search.hpp"
#include "fours/chains.hpp"

namespace fours {

struct SelfTestItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

/**
 * Golden checks: the embedding matrix against its definition, transversal
 * table certification, the symbolic coefficient tables for n = 3, 4, 5, the
 * worked three-factor example, the Promislow verification, and the minimal
 * chain lists. Scalar-dependent items run over the given field.
 */
std::vector<SelfTestItem> selftest(const Field &field);

/**
 * Certifies a transversal product table against multiplicativity of the
 * embedding, which never consults the table. Exposed with the table as a
 * parameter so tests can inject a corrupted copy.
 */
bool certify_table(const Field &field, const Exp3 (&table)[4][4]);

} // namespace fours
