#pragma once

#include <string>
#include <vector>

namespace whalg {

// Verification certificate emitted by the CLI.  `verdict` is "verified" iff
// every residue is exactly zero.
struct Certificate {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    struct Check {
        std::string name;
        std::string residue;  // printed residue, "0" when clean
        bool ok = false;
    };
    std::vector<Check> checks;
    std::string verdict;  // "verified" / "falsified"
    long long elapsed_ms = 0;

    bool all_ok() const;
    void finalize();  // sets verdict from checks
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace whalg
