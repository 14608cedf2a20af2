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

#ifndef TORICNET_NCSF_COMPOSITIONS_HPP
#define TORICNET_NCSF_COMPOSITIONS_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace toricnet::ncsf {

/// Ordered list of positive parts; the empty composition is the unit.
using Composition = std::vector<unsigned>;
/// Weakly decreasing list of positive parts.
using Partition = std::vector<unsigned>;

inline unsigned weight(const std::vector<unsigned>& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

/// All compositions of n in lexicographic order (2^{n-1} of them for n >= 1).
inline std::vector<Composition> compositions(unsigned n) {
    std::vector<Composition> out;
    Composition cur;
    std::function<void(unsigned)> rec = [&](unsigned rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned first = 1; first <= rest; ++first) {
            cur.push_back(first);
            rec(rest - first);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// All partitions of n, largest first part first: (n), (n-1,1), ...
inline std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline bool is_partition(const std::vector<unsigned>& parts) {
    return std::all_of(parts.begin(), parts.end(), [](unsigned p) { return p > 0; }) &&
           std::is_sorted(parts.begin(), parts.end(), std::greater<>());
}

inline Partition sorted_partition(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

inline std::string render_index(const std::string& symbol, const std::vector<unsigned>& parts) {
    std::string s = symbol + "[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "]";
}

}  // namespace toricnet::ncsf

#endif  // TORICNET_NCSF_COMPOSITIONS_HPP
