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

#ifndef TORICNET_TORICTOP_CRN_BRIDGE_HPP
#define TORICNET_TORICTOP_CRN_BRIDGE_HPP

#include <string>
#include <vector>

#include <toricnet/core/lattice.hpp>
#include <toricnet/crn/analysis.hpp>
#include <toricnet/torictop/characteristic.hpp>

namespace toricnet::torictop {

struct ToricBridge {
    unsigned dimension = 0;
    std::vector<BigInt> elementary_divisors;
    QuasitoricData data;
    ncsf::NCF mxi;
};

inline std::string render_divisors(const std::vector<BigInt>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].get_str();
    return s + "]";
}

/// A deficiency-zero weakly reversible network whose Cayley columns span a
/// unimodular simplex gives CP^d with d = (number of complexes) - 1.
inline ToricBridge crn_to_toric(const crn::Network& net) {
    auto a = crn::analyze(net);
    if (a.deficiency != 0) throw DomainRefusal("DeficiencyNonzero", "deficiency " + std::to_string(a.deficiency));
    if (!a.weakly_reversible) throw DomainRefusal("NotWeaklyReversible", "some linkage class is not strongly connected");
    std::size_t n = a.cayley.cols(), rows = a.cayley.rows();
    ToricBridge out;
    out.dimension = static_cast<unsigned>(n - 1);
    IntMatrix edges(rows, n - 1);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t r = 0; r < rows; ++r) edges(r, k - 1) = a.cayley(r, k) - a.cayley(r, 0);
    out.elementary_divisors = elementary_divisors(edges);
    for (const auto& d : out.elementary_divisors)
        if (d != 1) throw DomainRefusal("NonSmooth", "elementary divisors " + render_divisors(out.elementary_divisors));
    if (out.dimension == 0) throw DomainRefusal("NonSmooth", "a single complex spans no simplex");
    out.data = projective_space(out.dimension);
    out.mxi = mxi_numbers(out.data);
    return out;
}

}  // namespace toricnet::torictop

#endif  // TORICNET_TORICTOP_CRN_BRIDGE_HPP
