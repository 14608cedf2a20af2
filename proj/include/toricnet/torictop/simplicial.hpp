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

#ifndef TORICNET_TORICTOP_SIMPLICIAL_HPP
#define TORICNET_TORICTOP_SIMPLICIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <toricnet/core/errors.hpp>

namespace toricnet::torictop {

using Face = std::vector<unsigned>;
using VertexMask = std::uint32_t;

inline constexpr unsigned max_vertices = 24;

inline VertexMask mask_of(const Face& f) {
    VertexMask m = 0;
    for (unsigned v : f) m |= VertexMask{1} << v;
    return m;
}

inline std::string render_face(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i] + 1);
    return s + "}";
}

/// A simplicial complex on vertices 0..m-1 given by its facets. Facets are
/// stored sorted and in lexicographic order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(unsigned m, std::vector<Face> facets) : m_(m), facets_(std::move(facets)) {
        if (m > max_vertices) throw InputError("too many vertices (limit 24)");
        for (auto& f : facets_) {
            if (f.empty()) throw InputError("empty facet");
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("repeated vertex in facet");
            if (f.back() >= m) throw InputError("facet vertex out of range");
        }
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        for (const auto& f : facets_) masks_.push_back(mask_of(f));
    }

    unsigned vertex_count() const noexcept { return m_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }

    bool is_face(VertexMask s) const {
        return std::any_of(masks_.begin(), masks_.end(), [&](VertexMask f) { return (f & s) == s; });
    }
    bool is_face(const Face& f) const { return is_face(mask_of(f)); }

    /// Lexicographically least facet containing s, or -1.
    int facet_containing(VertexMask s) const {
        for (std::size_t i = 0; i < masks_.size(); ++i)
            if ((masks_[i] & s) == s) return static_cast<int>(i);
        return -1;
    }
    int facet_index(const Face& f) const {
        auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
        return it != facets_.end() && *it == f ? static_cast<int>(it - facets_.begin()) : -1;
    }

    /// Number of nonempty faces in each dimension.
    std::vector<std::size_t> f_vector() const {
        std::set<VertexMask> faces;
        for (VertexMask f : masks_)
            for (VertexMask s = f; s; s = (s - 1) & f) faces.insert(s);
        std::vector<std::size_t> fv;
        for (VertexMask s : faces) {
            auto d = static_cast<std::size_t>(__builtin_popcount(s)) - 1;
            if (fv.size() <= d) fv.resize(d + 1);
            ++fv[d];
        }
        return fv;
    }

    long euler_characteristic() const {
        long chi = 0;
        auto fv = f_vector();
        for (std::size_t d = 0; d < fv.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(fv[d]);
        return chi;
    }

    /// Ridges (codimension-one faces of facets) with the facets containing them.
    std::map<Face, std::vector<std::size_t>> ridges() const {
        std::map<Face, std::vector<std::size_t>> out;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            for (std::size_t drop = 0; drop < facets_[i].size(); ++drop) {
                Face r = facets_[i];
                r.erase(r.begin() + static_cast<long>(drop));
                out[r].push_back(i);
            }
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    unsigned m_ = 0;
    std::vector<Face> facets_;
    std::vector<VertexMask> masks_;
};

/// Boundary of the n-simplex on vertices 0..n.
inline SimplicialComplex simplex_boundary(unsigned n) {
    std::vector<Face> facets;
    for (unsigned drop = 0; drop <= n; ++drop) {
        Face f;
        for (unsigned v = 0; v <= n; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex(n + 1, facets);
}

/// Join K1 * K2; the vertices of K2 are shifted past those of K1.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> facets;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            Face h = f;
            for (unsigned v : g) h.push_back(v + a.vertex_count());
            facets.push_back(h);
        }
    return SimplicialComplex(a.vertex_count() + b.vertex_count(), facets);
}

}  // namespace toricnet::torictop

#endif  // TORICNET_TORICTOP_SIMPLICIAL_HPP
