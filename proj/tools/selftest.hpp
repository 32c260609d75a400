#pragma once

#include <cstdint>
#include <iosfwd>

namespace istk::tool {

struct SelftestOptions {
    int max_n = 8;
    int random_graphs = 500;
    int random_max_n = 10;
    std::uint64_t seed = 1;
    int cap = 16;
};

// Invariant sweep over every connected graph up to max_n vertices and a random
// corpus. Prints one line per check family; returns the number of failures.
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace istk::tool
