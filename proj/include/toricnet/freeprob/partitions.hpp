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

#ifndef TORICNET_FREEPROB_PARTITIONS_HPP
#define TORICNET_FREEPROB_PARTITIONS_HPP

#include <vector>

#include <toricnet/core/errors.hpp>
#include <toricnet/freeprob/cumulants.hpp>

namespace toricnet::freeprob {

/// A set partition of {0..n-1} as block labels: block[i] is the block of i,
/// numbered in order of first appearance.
using SetPartition = std::vector<unsigned>;

inline constexpr unsigned nc_partition_max = 10;

namespace detail {
inline void restricted_growth(unsigned n, SetPartition& cur, unsigned blocks, std::vector<SetPartition>& out,
                              bool noncrossing) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
        // Reopening block b crosses a block c that has elements both before and
        // after b's last element.
        if (noncrossing && b < blocks) {
            std::size_t last = cur.size() - 1;
            while (cur[last] != b) --last;
            bool crossing = false;
            for (std::size_t j = last + 1; j < cur.size() && !crossing; ++j)
                for (std::size_t i = 0; i < last && !crossing; ++i) crossing = cur[i] == cur[j];
            if (crossing) continue;
        }
        cur.push_back(b);
        restricted_growth(n, cur, b == blocks ? blocks + 1 : blocks, out, noncrossing);
        cur.pop_back();
    }
}

inline std::vector<SetPartition> partitions_of(unsigned n, bool noncrossing) {
    std::vector<SetPartition> out;
    SetPartition cur;
    restricted_growth(n, cur, 0, out, noncrossing);
    return out;
}

inline std::vector<unsigned> block_sizes(const SetPartition& p) {
    std::vector<unsigned> sizes;
    for (unsigned b : p) {
        if (b >= sizes.size()) sizes.resize(b + 1);
        ++sizes[b];
    }
    return sizes;
}
}  // namespace detail

/// All non-crossing partitions of {1..n}.
inline std::vector<SetPartition> nc_partition_oracle(unsigned n) {
    if (n > nc_partition_max) throw InputError("non-crossing enumeration limited to n <= 10");
    return detail::partitions_of(n, true);
}

/// m_n = sum over NC(n) of the product of k_{|V|}.
inline MomentSeq moments_from_nc_partitions(const CumulantSeq& k) {
    unsigned n = k.empty() ? 0 : static_cast<unsigned>(k.size() - 1);
    MomentSeq m(n + 1);
    m[0] = Rational(1);
    for (unsigned i = 1; i <= n; ++i)
        for (const auto& p : nc_partition_oracle(i)) {
            Rational term(1);
            for (unsigned s : detail::block_sizes(p)) term *= k[s];
            m[i] += term;
        }
    return m;
}

}  // namespace toricnet::freeprob

#endif  // TORICNET_FREEPROB_PARTITIONS_HPP
