#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "signil/errors.hpp"
#include "signil/group.hpp"

namespace signil {

// File format: '#' comment lines, then the order n on its own line, then n rows
// of n space-separated 0-based indices. Element 0 must be the identity.
inline Group read_cayley_stream(std::istream& in, const std::string& name) {
    std::vector<std::uint64_t> numbers;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        std::string tok;
        while (row >> tok) {
            std::uint64_t v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    fail(errc::malformed_table, "non-numeric token '" + tok + "' in Cayley table");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
                if (v > (1u << 24)) fail(errc::malformed_table, "oversized entry in Cayley table");
            }
            numbers.push_back(v);
        }
    }
    if (numbers.empty()) fail(errc::malformed_table, "empty Cayley table file");
    std::uint64_t n = numbers.front();
    if (n == 0) fail(errc::malformed_table, "declared order 0");
    if (numbers.size() != 1 + n * n)
        fail(errc::malformed_table, "expected " + std::to_string(n * n) + " entries for order " +
                                        std::to_string(n) + ", found " +
                                        std::to_string(numbers.size() - 1));
    std::vector<std::uint16_t> table;
    table.reserve(n * n);
    for (std::size_t k = 1; k < numbers.size(); ++k) {
        if (numbers[k] >= n)
            fail(errc::malformed_table,
                 "entry " + std::to_string(numbers[k]) + " out of range for order " +
                     std::to_string(n));
        table.push_back(static_cast<std::uint16_t>(numbers[k]));
    }
    for (std::uint64_t x = 0; x < n; ++x)
        if (table[x] != x || table[x * n] != x)
            fail(errc::malformed_table, "element 0 is not the identity");
    return from_cayley_table(static_cast<std::size_t>(n), table, name);
}

inline Group read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open '" + path + "'");
    std::string name = path;
    auto slash = name.find_last_of("/\\");
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.rfind(".cayley");
    if (dot != std::string::npos && dot + 7 == name.size()) name.resize(dot);
    return read_cayley_stream(in, name);
}

inline void write_cayley_stream(std::ostream& out, const Group& g) {
    out << g.order() << "\n";
    for (std::uint16_t a = 0; a < g.order(); ++a) {
        for (std::uint16_t b = 0; b < g.order(); ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << "\n";
    }
}

inline void write_cayley_file(const std::string& path, const Group& g) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
    write_cayley_stream(out, g);
    if (!out) fail(errc::io_error, "write failed for '" + path + "'");
}

}  // namespace signil
