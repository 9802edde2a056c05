#include "pdlab/polyomino.hpp"

#include <algorithm>
#include <unordered_set>

#include "pdlab/errors.hpp"
#include "pdlab/rng.hpp"

namespace pdlab {

namespace {

// Wernicke-style enumeration specialized to subsets containing a fixed root:
// candidates are processed in increasing order and each branch extends only
// with exclusive neighbors (not in S, not adjacent to any earlier member), so
// every connected n-set containing the root appears exactly once.
struct Enumerator {
    const DelaunayGraph& graph;
    int n;
    const std::function<bool(const std::vector<int>&)>& emit;
    long budget;
    long steps = 0;
    bool stopped = false;
    std::vector<int> current;
    std::vector<char> in_set;
    std::vector<char> in_hood; // in S or adjacent to S

    Enumerator(const DelaunayGraph& g, int n_, const std::function<bool(const std::vector<int>&)>& e,
               long b)
        : graph(g), n(n_), emit(e), budget(b) {
        in_set.assign(g.adjacency.size(), 0);
        in_hood.assign(g.adjacency.size(), 0);
    }

    void run(int root) {
        current.push_back(root);
        in_set[std::size_t(root)] = 1;
        in_hood[std::size_t(root)] = 1;
        std::vector<int> ext;
        for (int u : graph.adjacency[std::size_t(root)]) {
            in_hood[std::size_t(u)] = 1;
            ext.push_back(u);
        }
        std::sort(ext.begin(), ext.end());
        extend(ext);
    }

    void extend(std::vector<int> ext) {
        if (stopped) return;
        if (int(current.size()) == n) {
            std::vector<int> sorted = current;
            std::sort(sorted.begin(), sorted.end());
            if (!emit(sorted)) stopped = true;
            return;
        }
        while (!ext.empty() && !stopped) {
            if (++steps > budget)
                throw BudgetExceeded("polyomino enumeration budget; use the beam search");
            const int w = ext.front();
            ext.erase(ext.begin());
            // Exclusive neighbors of w.
            std::vector<int> added;
            for (int u : graph.adjacency[std::size_t(w)]) {
                if (in_hood[std::size_t(u)]) continue;
                in_hood[std::size_t(u)] = 1;
                added.push_back(u);
            }
            std::vector<int> ext2 = ext;
            ext2.insert(ext2.end(), added.begin(), added.end());
            std::sort(ext2.begin(), ext2.end());
            current.push_back(w);
            in_set[std::size_t(w)] = 1;
            extend(std::move(ext2));
            in_set[std::size_t(w)] = 0;
            current.pop_back();
            for (int u : added) in_hood[std::size_t(u)] = 0;
        }
    }
};

double score_of(const DelaunayGraph& graph, const WeightFn& f, const std::vector<int>& set) {
    double s = 0;
    for (int v : set) s += f(double(graph.degree[std::size_t(v)]));
    return s;
}

uint64_t set_hash(const std::vector<int>& sorted) {
    uint64_t h = 0x12345;
    for (int v : sorted) h = hash_combine(h, uint64_t(v));
    return h;
}

} // namespace

void enum_polyominoes(const DelaunayGraph& graph, int root, int n,
                      const std::function<bool(const std::vector<int>&)>& emit, long budget) {
    if (n < 1) throw InvalidParameter("polyomino size must be >= 1");
    if (root < 0 || root >= graph.num_vertices()) throw InvalidParameter("bad root vertex");
    if (n == 1) {
        emit({root});
        return;
    }
    Enumerator e(graph, n, emit, budget);
    e.run(root);
}

std::vector<Polyomino> collect_polyominoes(const DelaunayGraph& graph, int root, int n,
                                           long budget) {
    std::vector<Polyomino> out;
    enum_polyominoes(
        graph, root, n,
        [&](const std::vector<int>& set) {
            out.push_back({set, root});
            return true;
        },
        budget);
    return out;
}

WeightResult f_n_exact(const DelaunayGraph& graph, const WeightFn& f, int root, int n, long budget) {
    f.validate();
    WeightResult best;
    best.exact = true;
    bool have = false;
    enum_polyominoes(
        graph, root, n,
        [&](const std::vector<int>& set) {
            const double s = score_of(graph, f, set);
            if (!have || s > best.value || (s == best.value && set < best.witness.vertices)) {
                best.value = s;
                best.witness = {set, root};
                have = true;
            }
            return true;
        },
        budget);
    if (!have) throw InvalidParameter("no polyomino of the requested size exists");
    return best;
}

WeightResult f_n_beam(const DelaunayGraph& graph, const WeightFn& f, int root, int n, int width) {
    f.validate();
    if (width < 1) throw InvalidParameter("beam width must be >= 1");
    if (root < 0 || root >= graph.num_vertices()) throw InvalidParameter("bad root vertex");

    struct Cand {
        std::vector<int> set; // sorted
        double score = 0;
    };
    std::vector<Cand> beam{{{root}, f(double(graph.degree[std::size_t(root)]))}};
    for (int size = 1; size < n; ++size) {
        std::vector<Cand> next;
        std::unordered_set<uint64_t> seen;
        for (const Cand& c : beam) {
            for (int v : c.set) {
                for (int u : graph.adjacency[std::size_t(v)]) {
                    if (std::binary_search(c.set.begin(), c.set.end(), u)) continue;
                    Cand expanded;
                    expanded.set = c.set;
                    expanded.set.insert(
                        std::lower_bound(expanded.set.begin(), expanded.set.end(), u), u);
                    if (!seen.insert(set_hash(expanded.set)).second) continue;
                    expanded.score = c.score + f(double(graph.degree[std::size_t(u)]));
                    next.push_back(std::move(expanded));
                }
            }
        }
        if (next.empty()) throw InvalidParameter("no polyomino of the requested size exists");
        std::sort(next.begin(), next.end(), [](const Cand& a, const Cand& b) {
            if (a.score != b.score) return a.score > b.score;
            return a.set < b.set;
        });
        if (int(next.size()) > width) next.resize(std::size_t(width));
        beam = std::move(next);
    }
    WeightResult r;
    r.value = beam.front().score;
    r.witness = {beam.front().set, root};
    r.exact = false;
    return r;
}

} // namespace pdlab
