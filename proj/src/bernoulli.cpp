// SPDX-License-Identifier: Apache-2.0
#include "zetadqpt/bernoulli.hpp"

#include "zetadqpt/errors.hpp"

#include <atomic>
#include <mutex>
#include <vector>

namespace zdq {

namespace {

std::atomic<unsigned> g_max{200};
std::mutex g_mutex;
std::vector<mpq_class> g_table; // g_table[p] = B_p

// Akiyama-Tanigawa triangle. The classic recurrence yields B_1 = +1/2;
// the sign is flipped afterwards to match the binomial-sum convention.
void extend_table(unsigned p) {
    unsigned have = static_cast<unsigned>(g_table.size());
    if (p < have) return;

    std::vector<mpq_class> row(p + 2);
    for (unsigned j = 0; j <= p; ++j)
        row[j] = mpq_class(1, j + 1);

    std::vector<mpq_class> out(p + 1);
    out[0] = row[0];
    for (unsigned m = 1; m <= p; ++m) {
        for (unsigned j = 0; j + m <= p; ++j)
            row[j] = (row[j] - row[j + 1]) * (j + 1);
        out[m] = row[0];
    }
    if (p >= 1) out[1] = mpq_class(-1, 2);
    g_table = std::move(out);
}

} // namespace

const mpq_class& bernoulli(unsigned p) {
    if (p > g_max.load())
        throw capacity_error("bernoulli: index " + std::to_string(p) +
                             " above configured maximum " + std::to_string(g_max.load()));
    std::lock_guard<std::mutex> lock(g_mutex);
    if (p >= g_table.size()) extend_table(g_max.load());
    return g_table[p];
}

double bernoulli_d(unsigned p) { return bernoulli(p).get_d(); }

unsigned bernoulli_max() { return g_max.load(); }

void set_bernoulli_max(unsigned m) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_max.store(m);
    if (g_table.size() > m + 1) g_table.resize(m + 1);
}

} // namespace zdq
