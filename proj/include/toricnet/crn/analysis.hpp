// Copyright 2026 The toricnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORICNET_CRN_ANALYSIS_HPP
#define TORICNET_CRN_ANALYSIS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/core/lattice.hpp>
#include <toricnet/core/matrix.hpp>
#include <toricnet/core/sparse_poly.hpp>
#include <toricnet/crn/network.hpp>

namespace toricnet::crn {

/// Complex matrix Y (species x complexes).
inline IntMatrix complex_matrix(const Network& net) {
    IntMatrix y(net.species_count(), net.complex_count());
    for (std::size_t l = 0; l < net.complex_count(); ++l)
        for (std::size_t i = 0; i < net.species_count(); ++i) y(i, l) = net.complexes()[l][i];
    return y;
}

/// Stoichiometric matrix: one column Y_target - Y_source per reaction.
inline IntMatrix stoichiometric_matrix(const Network& net) {
    IntMatrix s(net.species_count(), net.reactions().size());
    for (std::size_t r = 0; r < net.reactions().size(); ++r) {
        const auto& rx = net.reactions()[r];
        for (std::size_t i = 0; i < net.species_count(); ++i)
            s(i, r) = BigInt(net.complexes()[rx.target][i]) - BigInt(net.complexes()[rx.source][i]);
    }
    return s;
}

/// Numeric value of every reaction's rate. Explicit bindings take precedence
/// over values given in the network text.
inline std::vector<Rational> resolve_rates(const Network& net, const Bindings& bindings = {}) {
    for (const auto& [name, v] : bindings)
        if (v.sign() <= 0) throw InputError("binding for '" + name + "' must be positive");
    std::vector<Rational> out;
    for (const auto& rx : net.reactions()) {
        if (!rx.rate.is_symbolic()) {
            out.push_back(rx.rate.value);
            continue;
        }
        if (auto it = bindings.find(rx.rate.name); it != bindings.end()) {
            out.push_back(it->second);
        } else if (auto jt = net.default_bindings().find(rx.rate.name); jt != net.default_bindings().end()) {
            out.push_back(jt->second);
        } else {
            throw InputError("unbound rate symbol '" + rx.rate.name + "'");
        }
    }
    return out;
}

/// Symbolic rate matrix: entry (k,l) is the (summed) rate of l -> k, diagonal
/// entries make every column sum to zero.
inline Matrix<SparsePoly> build_rate_matrix(const Network& net) {
    std::size_t n = net.complex_count();
    Matrix<SparsePoly> a(n, n);
    for (const auto& rx : net.reactions()) {
        SparsePoly w = rx.rate.as_poly();
        a(rx.target, rx.source) += w;
        a(rx.source, rx.source) -= w;
    }
    return a;
}

inline RatMatrix build_rate_matrix(const Network& net, const Bindings& bindings) {
    auto rates = resolve_rates(net, bindings);
    std::size_t n = net.complex_count();
    RatMatrix a(n, n);
    for (std::size_t r = 0; r < rates.size(); ++r) {
        const auto& rx = net.reactions()[r];
        a(rx.target, rx.source) += rates[r];
        a(rx.source, rx.source) -= rates[r];
    }
    return a;
}

struct NetworkAnalysis {
    std::vector<std::vector<std::size_t>> linkage_classes;
    std::vector<std::size_t> class_of;
    std::vector<std::vector<std::size_t>> strong_components;
    bool weakly_reversible = false;
    std::size_t stoichiometric_rank = 0;
    std::size_t deficiency = 0;
    IntMatrix cayley;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> adjacency(const Network& net, bool undirected) {
    std::vector<std::vector<std::size_t>> adj(net.complex_count());
    for (const auto& rx : net.reactions()) {
        adj[rx.source].push_back(rx.target);
        if (undirected) adj[rx.target].push_back(rx.source);
    }
    return adj;
}

// Tarjan's algorithm; components listed by smallest member.
inline std::vector<std::vector<std::size_t>> strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
    std::size_t n = adj.size();
    std::vector<long> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    long counter = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : adj[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    std::sort(comps.begin(), comps.end());
    return comps;
}

}  // namespace detail

/// Cayley matrix: Y stacked over the linkage-class indicator rows.
inline IntMatrix cayley_matrix(const Network& net, const std::vector<std::size_t>& class_of, std::size_t classes) {
    std::size_t s = net.species_count();
    IntMatrix c(s + classes, net.complex_count());
    for (std::size_t k = 0; k < net.complex_count(); ++k) {
        for (std::size_t i = 0; i < s; ++i) c(i, k) = net.complexes()[k][i];
        c(s + class_of[k], k) = 1;
    }
    return c;
}

inline NetworkAnalysis analyze(const Network& net) {
    NetworkAnalysis a;
    std::size_t n = net.complex_count();
    auto undirected = detail::adjacency(net, true);
    a.class_of.assign(n, n);
    for (std::size_t start = 0; start < n; ++start) {
        if (a.class_of[start] != n) continue;
        std::size_t q = a.linkage_classes.size();
        std::vector<std::size_t> members{start}, todo{start};
        a.class_of[start] = q;
        while (!todo.empty()) {
            auto v = todo.back();
            todo.pop_back();
            for (auto w : undirected[v])
                if (a.class_of[w] == n) {
                    a.class_of[w] = q;
                    members.push_back(w);
                    todo.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        a.linkage_classes.push_back(std::move(members));
    }
    a.strong_components = detail::strongly_connected(detail::adjacency(net, false));
    a.weakly_reversible = a.strong_components.size() == a.linkage_classes.size();
    a.stoichiometric_rank = rank(stoichiometric_matrix(net));
    a.cayley = cayley_matrix(net, a.class_of, a.linkage_classes.size());

    std::size_t l = a.linkage_classes.size();
    std::size_t cayley_rank = rank(a.cayley);
    if (n < l + a.stoichiometric_rank || n - l - a.stoichiometric_rank != n - cayley_rank)
        throw std::logic_error("deficiency formulas disagree");
    a.deficiency = n - l - a.stoichiometric_rank;
    return a;
}

inline std::size_t deficiency(const Network& net) { return analyze(net).deficiency; }
inline IntMatrix cayley_matrix(const Network& net) { return analyze(net).cayley; }

namespace detail {

template <class W>
struct WeightedGraph {
    // out[v] = list of (target, weight); parallel edges already summed.
    std::vector<std::vector<std::pair<std::size_t, W>>> out;
};

template <class W>
WeightedGraph<W> class_graph(const Network& net, const std::vector<std::size_t>& members,
                             const std::vector<W>& weights) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
    std::vector<std::map<std::size_t, W>> summed(members.size());
    for (std::size_t r = 0; r < net.reactions().size(); ++r) {
        const auto& rx = net.reactions()[r];
        auto it = local.find(rx.source);
        if (it == local.end()) continue;
        auto& slot = summed[it->second][local.at(rx.target)];
        slot = slot + weights[r];
    }
    WeightedGraph<W> g;
    g.out.resize(members.size());
    for (std::size_t v = 0; v < members.size(); ++v)
        for (auto& [t, w] : summed[v]) g.out[v].emplace_back(t, w);
    return g;
}

// Sum over arborescences rooted at `root` (edges point toward the root) of
// the product of edge weights; backtracking over each vertex's parent.
template <class W>
W arborescence_sum(const WeightedGraph<W>& g, std::size_t root) {
    std::size_t n = g.out.size();
    std::vector<long> parent(n, -1);
    W total{};
    auto reaches_root = [&](std::size_t v) {
        // Follows assigned parents; false on a cycle.
        for (std::size_t steps = 0; steps <= n; ++steps) {
            if (v == root) return true;
            if (parent[v] < 0) return true;  // unassigned tail, decided later
            v = static_cast<std::size_t>(parent[v]);
        }
        return false;
    };
    std::function<void(std::size_t, const W&)> assign = [&](std::size_t v, const W& acc) {
        if (v == n) {
            total = total + acc;
            return;
        }
        if (v == root) {
            assign(v + 1, acc);
            return;
        }
        for (const auto& [t, w] : g.out[v]) {
            parent[v] = static_cast<long>(t);
            if (reaches_root(v)) assign(v + 1, acc * w);
        }
        parent[v] = -1;
    };
    assign(0, W(Rational(1)));
    return total;
}

template <class W>
Matrix<W> class_laplacian(const WeightedGraph<W>& g) {
    std::size_t n = g.out.size();
    Matrix<W> a(n, n);
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& [t, w] : g.out[v]) {
            a(t, v) = a(t, v) + w;
            a(v, v) = a(v, v) - w;
        }
    return a;
}

inline constexpr std::size_t max_enumeration_nodes = 8;

template <class W, class Det>
std::vector<W> tree_constants_impl(const Network& net, const std::vector<W>& weights, Det determinant) {
    auto a = analyze(net);
    if (!a.weakly_reversible)
        throw DomainRefusal("NotWeaklyReversible", "a linkage class is not strongly connected");
    std::vector<W> k(net.complex_count());
    for (const auto& members : a.linkage_classes) {
        auto g = class_graph(net, members, weights);
        std::size_t n = members.size();
        if (n <= max_enumeration_nodes) {
            for (std::size_t i = 0; i < n; ++i) k[members[i]] = arborescence_sum(g, i);
            continue;
        }
        // K_i = (-1)^(n-1+i) det(A without row 0, column i).
        auto lap = class_laplacian(g);
        for (std::size_t i = 0; i < n; ++i) {
            W d = determinant(lap.minor(0, i));
            k[members[i]] = ((n - 1 + i) % 2 == 0) ? d : W(-d);
        }
    }
    return k;
}

}  // namespace detail

/// Symbolic tree constants K_i in the rate symbols (numeric rates appear as
/// constants). Requires weak reversibility.
inline std::vector<SparsePoly> tree_constants(const Network& net) {
    std::vector<SparsePoly> w;
    for (const auto& rx : net.reactions()) w.push_back(rx.rate.as_poly());
    return detail::tree_constants_impl(
        net, w, [](const Matrix<SparsePoly>& m) { return expansion_determinant(m); });
}

inline std::vector<Rational> tree_constants(const Network& net, const Bindings& bindings) {
    auto w = resolve_rates(net, bindings);
    return detail::tree_constants_impl(net, w, [](const RatMatrix& m) { return ff_determinant(m); });
}

struct Binomial {
    IntVector plus;
    IntVector minus;
    std::string text;
    SparsePoly poly;
};

inline std::string k_symbol(std::size_t i) { return "K" + std::to_string(i + 1); }

/// Lattice-ideal generators K^{u+} - K^{u-} from the kernel of the Cayley matrix.
inline std::vector<Binomial> toric_binomials(const Network& net) {
    auto c = cayley_matrix(net);
    if (rank(c) == c.cols()) return {};
    std::vector<Binomial> out;
    for (const auto& u : lattice_kernel(c)) {
        Binomial b;
        b.plus.assign(u.size(), 0);
        b.minus.assign(u.size(), 0);
        SparsePoly lhs(Rational(1)), rhs(Rational(1));
        auto render = [](const IntVector& e) {
            std::string s;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += k_symbol(i);
                if (e[i] > 1) s += "^" + e[i].get_str();
            }
            return s.empty() ? std::string("1") : s;
        };
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] > 0) {
                b.plus[i] = u[i];
                lhs *= variable(k_symbol(i), static_cast<unsigned>(u[i].get_ui()));
            } else if (u[i] < 0) {
                b.minus[i] = -u[i];
                rhs *= variable(k_symbol(i), static_cast<unsigned>(BigInt(-u[i]).get_ui()));
            }
        }
        b.text = render(b.plus) + " - " + render(b.minus);
        b.poly = lhs - rhs;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace toricnet::crn

#endif  // TORICNET_CRN_ANALYSIS_HPP
