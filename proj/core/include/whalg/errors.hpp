#pragma once

#include <stdexcept>
#include <string>

namespace whalg {

// Invalid mathematical input (bad word entries, out-of-range parameters).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input; `pos` is a 1-based column.
struct parse_error : std::runtime_error {
    int pos;
    parse_error(const std::string& what, int pos_)
        : std::runtime_error(what + " at column " + std::to_string(pos_)), pos(pos_) {}
};

// A face was requested for a non-degenerate generator with no declared rule.
struct missing_rule_error : std::runtime_error {
    explicit missing_rule_error(const std::string& what) : std::runtime_error(what) {}
};

// reduce_mod_p met a composite class whose additive order is not declared.
struct unknown_order_error : std::runtime_error {
    explicit unknown_order_error(const std::string& what) : std::runtime_error(what) {}
};

// Structural failure (boundary-of-boundary nonzero, level mismatch, ...).
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace whalg
