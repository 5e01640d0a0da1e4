// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace zdq {

// Input outside an operation's mathematical domain.
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured resource or representation limit was exceeded.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An accelerated formula's validity precondition failed; callers may fall
// back to a direct method.
struct validity_error : std::runtime_error {
    explicit validity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated an internal contract (e.g. a malformed bracket).
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zdq
