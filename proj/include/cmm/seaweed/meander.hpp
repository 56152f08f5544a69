#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cmm/rigor/error.hpp"

namespace cmm::seaweed {

struct Partition {
    std::vector<int> parts; // non-increasing
    int n() const;
};

bool operator==(const Partition& a, const Partition& b);

// All partitions of n into odd parts, lexicographically descending.
std::vector<Partition> odd_partitions(int n);

using Arc = std::pair<int, int>; // 1-based vertices, first < second

struct MeanderGraph {
    int n = 0;
    std::vector<Arc> top_arcs;
    std::vector<Arc> bottom_arcs;
};

MeanderGraph build_meander(const Partition& lambda, const Partition& mu);

struct Components {
    int cycles = 0;
    int paths = 0; // isolated vertices included
    int cycle_vertices = 0;
    int path_vertices = 0;
    int max_degree = 0;
};

Components components(const MeanderGraph& g);

// 2 * cycles + paths
int seaweed_index(const MeanderGraph& g);

struct ParityCounts {
    std::int64_t e = 0; // even index
    std::int64_t o = 0; // odd index
};

ParityCounts parity_counts(int n);

struct Part2Row {
    int n = 0;
    std::int64_t e = 0;
    std::int64_t o = 0;
    std::int64_t a = 0; // coefficient of q^n in G(q)
    bool match = false;
};

// Rows for n = 1..N. The parallel version hands whole n values to OpenMP
// threads; the serial one is the reference.
std::vector<Part2Row> verify_part2(int N);
std::vector<Part2Row> verify_part2_serial(int N);

} // namespace cmm::seaweed
