#include "levy/typedyn.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cstddef>
#include <string>

#include "levy/errors.hpp"

namespace levy {

namespace {

// Source index (1-based, into the parent's 15-tuple) for each bit of the
// two child types. Indices repeat: these are gathers, not permutations.
constexpr std::array<int, kTypeBits> kChildOneSource = {8, 1, 9, 8, 10, 9, 1, 10,
                                                        15, 3, 2, 5, 4, 7, 6};
constexpr std::array<int, kTypeBits> kChildTwoSource = {10, 1, 12, 11, 14, 13, 2, 15,
                                                        3, 8, 1, 9, 8, 10, 9};

TypeCode gather(TypeCode c, const std::array<int, kTypeBits>& source) {
    TypeCode out = 0;
    for (int i = 0; i < kTypeBits; ++i)
        if ((c >> (source[static_cast<std::size_t>(i)] - 1)) & 1u)
            out = static_cast<TypeCode>(out | (1u << i));
    return out;
}

struct ChildTable {
    std::array<TypeCode, kTypeSpace> first{};
    std::array<TypeCode, kTypeSpace> second{};

    ChildTable() {
        for (std::uint32_t c = 0; c < kTypeSpace; ++c) {
            first[c] = gather(static_cast<TypeCode>(c), kChildOneSource);
            second[c] = gather(static_cast<TypeCode>(c), kChildTwoSource);
        }
    }
};

const ChildTable& table() {
    static const ChildTable t;
    return t;
}

}  // namespace

std::pair<TypeCode, TypeCode> child_types(TypeCode c) {
    const ChildTable& t = table();
    return {t.first[c], t.second[c]};
}

TypeCensus star_seed_census() {
    TypeCensus census;
    for (int i = 0; i < kTypeBits; ++i)
        census.counts.emplace(static_cast<TypeCode>(1u << i), BigInt(1));
    return census;
}

StableSet stable_set(int max_iterations) {
    const ChildTable& t = table();
    std::bitset<kTypeSpace> current;
    for (int i = 0; i < kTypeBits; ++i) current.set(1u << i);

    for (int depth = 0; depth < max_iterations; ++depth) {
        std::bitset<kTypeSpace> next;
        for (std::uint32_t c = 0; c < kTypeSpace; ++c) {
            if (!current[c]) continue;
            next.set(t.first[c]);
            next.set(t.second[c]);
        }
        if (next == current) {
            StableSet result;
            result.depth = depth;
            result.codes.reserve(current.count());
            for (std::uint32_t c = 0; c < kTypeSpace; ++c)
                if (current[c]) result.codes.push_back(static_cast<TypeCode>(c));
            return result;
        }
        current = next;
    }
    throw convergence_error("stable_set: no fixed point within " +
                            std::to_string(max_iterations) + " iterations");
}

namespace {

/// Iterative Tarjan over the child digraph restricted to `nodes`.
/// Returns a component id per node; ids are assigned in reverse
/// topological order (children's components never come after parents').
std::vector<int> strongly_connected_components(const std::vector<TypeCode>& nodes,
                                               const std::vector<std::array<int, 2>>& adj,
                                               int& component_count) {
    const int n = static_cast<int>(nodes.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    int next_index = 0;
    component_count = 0;

    struct Frame {
        int node;
        int edge;
    };
    std::vector<Frame> call_stack;

    for (int start = 0; start < n; ++start) {
        if (index[static_cast<std::size_t>(start)] != -1) continue;
        call_stack.push_back({start, 0});
        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const int v = frame.node;
            if (frame.edge == 0) {
                index[static_cast<std::size_t>(v)] = lowlink[static_cast<std::size_t>(v)] =
                    next_index++;
                stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = true;
            }
            bool descended = false;
            while (frame.edge < 2) {
                const int w = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(frame.edge)];
                ++frame.edge;
                if (w < 0) continue;
                if (index[static_cast<std::size_t>(w)] == -1) {
                    call_stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    lowlink[static_cast<std::size_t>(v)] = std::min(
                        lowlink[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    component[static_cast<std::size_t>(w)] = component_count;
                    if (w == v) break;
                }
                ++component_count;
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                Frame& parent = call_stack.back();
                lowlink[static_cast<std::size_t>(parent.node)] =
                    std::min(lowlink[static_cast<std::size_t>(parent.node)],
                             lowlink[static_cast<std::size_t>(v)]);
            }
        }
    }
    return component;
}

}  // namespace

TypeClassification classify(const std::vector<TypeCode>& stable) {
    TypeClassification cls;

    std::array<int, kTypeSpace> position;
    position.fill(-1);
    for (std::size_t i = 0; i < stable.size(); ++i) position[stable[i]] = static_cast<int>(i);

    for (TypeCode c : stable) {
        const auto [a, b] = child_types(c);
        if (position[a] < 0 || position[b] < 0)
            throw structure_error("classify: set is not closed under child_types (code " +
                                  std::to_string(c) + ")");
        if (a == c && b == c) cls.absorbing.push_back(c);
    }
    if (cls.absorbing != std::vector<TypeCode>{0, kCoveredType})
        throw structure_error("classify: absorbing set is not {0, 32767}");

    // Non-absorbing digraph; edges into absorbing codes are dropped.
    std::vector<TypeCode> nodes;
    nodes.reserve(stable.size() - cls.absorbing.size());
    std::array<int, kTypeSpace> node_id;
    node_id.fill(-1);
    for (TypeCode c : stable) {
        if (c == 0 || c == kCoveredType) continue;
        node_id[c] = static_cast<int>(nodes.size());
        nodes.push_back(c);
    }
    std::vector<std::array<int, 2>> adj(nodes.size(), {-1, -1});
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto [a, b] = child_types(nodes[i]);
        adj[i][0] = node_id[a];
        adj[i][1] = node_id[b];
    }

    int component_count = 0;
    const std::vector<int> component =
        strongly_connected_components(nodes, adj, component_count);

    // A component is a permutation cycle iff every node has exactly one
    // child edge (counted with multiplicity) staying inside it.
    std::vector<std::size_t> component_size(static_cast<std::size_t>(component_count), 0);
    for (int c : component) ++component_size[static_cast<std::size_t>(c)];
    std::vector<bool> is_cycle(static_cast<std::size_t>(component_count), true);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        int internal_edges = 0;
        for (int w : adj[i])
            if (w >= 0 && component[static_cast<std::size_t>(w)] == component[i]) ++internal_edges;
        if (internal_edges != 1) is_cycle[static_cast<std::size_t>(component[i])] = false;
    }

    int core_components = 0;
    for (int c = 0; c < component_count; ++c)
        if (!is_cycle[static_cast<std::size_t>(c)]) ++core_components;
    if (core_components != 1)
        throw structure_error("classify: expected one core component, found " +
                              std::to_string(core_components));

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (is_cycle[static_cast<std::size_t>(component[i])])
            cls.transient.push_back(nodes[i]);
        else
            cls.core.push_back(nodes[i]);
    }
    std::sort(cls.transient.begin(), cls.transient.end());
    std::sort(cls.core.begin(), cls.core.end());
    return cls;
}

TypeCensus evolve(TypeCensus census, int steps) {
    const ChildTable& t = table();
    for (int s = 0; s < steps; ++s) {
        TypeCensus next;
        for (const auto& [code, count] : census.counts) {
            next.add(t.first[code], count);
            next.add(t.second[code], count);
        }
        census = std::move(next);
    }
    return census;
}

BigInt boundary_count(const TypeCensus& census) {
    BigInt sum = 0;
    for (const auto& [code, count] : census.counts)
        if (is_boundary_type(code)) sum += count;
    return sum;
}

}  // namespace levy
