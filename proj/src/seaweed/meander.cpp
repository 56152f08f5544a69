#include "cmm/seaweed/meander.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "cmm/series/qseries.hpp"

namespace cmm::seaweed {

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }

namespace {

template <typename Visit>
void for_each_odd_partition(int remaining, int max_part, std::vector<int>& prefix, Visit&& visit)
{
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    int p = std::min(max_part, remaining);
    if (p % 2 == 0) {
        --p;
    }
    for (; p >= 1; p -= 2) {
        prefix.push_back(p);
        for_each_odd_partition(remaining - p, p, prefix, visit);
        prefix.pop_back();
    }
}

void nested_arcs(const std::vector<int>& blocks, std::vector<Arc>& arcs)
{
    int start = 1;
    for (int s : blocks) {
        for (int i = 0; i < s / 2; ++i) {
            arcs.emplace_back(start + i, start + s - 1 - i);
        }
        start += s;
    }
}

// Index of lambda against the single block {n}, without materialising arcs.
int index_against_full(const std::vector<int>& lambda, int n, std::vector<int>& top, std::vector<char>& seen)
{
    top.assign(static_cast<std::size_t>(n) + 1, 0);
    int start = 1;
    for (int s : lambda) {
        for (int i = 0; i < s / 2; ++i) {
            top[static_cast<std::size_t>(start + i)] = start + s - 1 - i;
            top[static_cast<std::size_t>(start + s - 1 - i)] = start + i;
        }
        start += s;
    }
    auto bottom = [n](int v) { return (2 * v == n + 1) ? 0 : n + 1 - v; };
    seen.assign(static_cast<std::size_t>(n) + 1, 0);
    int index = 0;
    // Paths first: start from every vertex of degree < 2 and walk.
    for (int v = 1; v <= n; ++v) {
        const int deg = (top[static_cast<std::size_t>(v)] != 0) + (bottom(v) != 0);
        if (seen[static_cast<std::size_t>(v)] || deg == 2) {
            continue;
        }
        ++index;
        int prev = 0;
        int cur = v;
        while (cur != 0 && !seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = 1;
            int next = top[static_cast<std::size_t>(cur)];
            if (next == 0 || next == prev) {
                const int b = bottom(cur);
                next = (b != prev) ? b : 0;
            }
            prev = cur;
            cur = next;
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) {
            continue;
        }
        index += 2;
        int cur = v;
        bool use_top = true;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = 1;
            cur = use_top ? top[static_cast<std::size_t>(cur)] : bottom(cur);
            use_top = !use_top;
        }
    }
    return index;
}

ParityCounts parity_counts_impl(int n)
{
    ParityCounts pc;
    std::vector<int> prefix;
    std::vector<int> top;
    std::vector<char> seen;
    for_each_odd_partition(n, n, prefix, [&](const std::vector<int>& lambda) {
        if (index_against_full(lambda, n, top, seen) % 2 == 0) {
            ++pc.e;
        } else {
            ++pc.o;
        }
    });
    return pc;
}

Part2Row make_row(int n, const series::QSeries& g)
{
    const ParityCounts pc = parity_counts_impl(n);
    Part2Row row{n, pc.e, pc.o, g[static_cast<std::size_t>(n)].get_si(), false};
    row.match = std::llabs(row.e - row.o) == row.a;
    return row;
}

} // namespace

std::vector<Partition> odd_partitions(int n)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    for_each_odd_partition(n, n, prefix, [&](const std::vector<int>& p) { out.push_back({p}); });
    return out;
}

MeanderGraph build_meander(const Partition& lambda, const Partition& mu)
{
    const int n = lambda.n();
    if (mu.n() != n) {
        throw SumMismatch("partitions sum to " + std::to_string(n) + " and " + std::to_string(mu.n()));
    }
    MeanderGraph g;
    g.n = n;
    nested_arcs(lambda.parts, g.top_arcs);
    nested_arcs(mu.parts, g.bottom_arcs);
    return g;
}

Components components(const MeanderGraph& g)
{
    const auto sz = static_cast<std::size_t>(g.n) + 1;
    std::vector<std::vector<int>> adj(sz);
    for (const auto* arcs : {&g.top_arcs, &g.bottom_arcs}) {
        for (auto [a, b] : *arcs) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
    }
    Components c;
    std::vector<char> seen(sz, 0);
    std::vector<int> stack;
    for (int v = 1; v <= g.n; ++v) {
        c.max_degree = std::max(c.max_degree, static_cast<int>(adj[static_cast<std::size_t>(v)].size()));
        if (seen[static_cast<std::size_t>(v)]) {
            continue;
        }
        int vertices = 0;
        int degree_sum = 0;
        stack.push_back(v);
        seen[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++vertices;
            degree_sum += static_cast<int>(adj[static_cast<std::size_t>(u)].size());
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        // A component with max degree 2 is a cycle iff edges == vertices.
        // A top and a bottom arc on the same pair count as two edges.
        if (degree_sum / 2 == vertices) {
            ++c.cycles;
            c.cycle_vertices += vertices;
        } else {
            ++c.paths;
            c.path_vertices += vertices;
        }
    }
    return c;
}

int seaweed_index(const MeanderGraph& g)
{
    const Components c = components(g);
    return 2 * c.cycles + c.paths;
}

ParityCounts parity_counts(int n) { return parity_counts_impl(n); }

std::vector<Part2Row> verify_part2_serial(int N)
{
    const auto g = series::expand_G(static_cast<std::size_t>(N));
    std::vector<Part2Row> rows;
    for (int n = 1; n <= N; ++n) {
        rows.push_back(make_row(n, g));
    }
    return rows;
}

std::vector<Part2Row> verify_part2(int N)
{
    const auto g = series::expand_G(static_cast<std::size_t>(N));
    std::vector<Part2Row> rows(static_cast<std::size_t>(std::max(N, 0)));
    // Work grows roughly like exp(sqrt(n)); hand out the largest n first.
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < N; ++i) {
        const int n = N - i;
        rows[static_cast<std::size_t>(n - 1)] = make_row(n, g);
    }
    return rows;
}

} // namespace cmm::seaweed
