#include "whalg/cert.hpp"

#include <algorithm>
#include <sstream>

#include "whalg/version.hpp"

namespace whalg {

bool Certificate::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void Certificate::finalize() { verdict = all_ok() ? "verified" : "falsified"; }

namespace {
std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}
}  // namespace

std::string Certificate::to_json() const {
    std::ostringstream os;
    os << "{\"command\":\"" << escape(command) << "\",\"inputs\":{";
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (i) os << ",";
        os << "\"" << escape(inputs[i].first) << "\":\"" << escape(inputs[i].second) << "\"";
    }
    os << "},\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        if (i) os << ",";
        os << "{\"name\":\"" << escape(checks[i].name) << "\",\"residue\":\""
           << escape(checks[i].residue) << "\",\"ok\":" << (checks[i].ok ? "true" : "false")
           << "}";
    }
    os << "],\"verdict\":\"" << verdict << "\",\"engine\":\"" << kEngineVersion
       << "\",\"elapsed_ms\":" << elapsed_ms << "}";
    return os.str();
}

std::string Certificate::to_text() const {
    std::ostringstream os;
    os << command << "\n";
    for (const auto& [k, v] : inputs) os << "  " << k << " = " << v << "\n";
    for (const auto& c : checks)
        os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name
           << (c.residue.empty() ? "" : ": " + c.residue) << "\n";
    os << "verdict: " << verdict << "\n";
    return os.str();
}

}  // namespace whalg
