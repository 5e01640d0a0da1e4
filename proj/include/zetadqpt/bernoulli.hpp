// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>

namespace zdq {

// Exact Bernoulli numbers under the convention sum_{p<=q} C(q+1,p) B_p = 0,
// which fixes B_1 = -1/2. Values are memoized; thread-safe after the first
// call completes (callers that race on first use are serialized internally).
const mpq_class& bernoulli(unsigned p);

double bernoulli_d(unsigned p);

// Configured ceiling for the memo table (default 200). Requests above it
// raise capacity_error.
unsigned bernoulli_max();
void set_bernoulli_max(unsigned m);

} // namespace zdq
