#include "threshold_lab/sunflower.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>

#include "threshold_lab/canonical.hpp"

namespace tlab {

namespace {

// Code of [R, C] with R as ordered roots (ascending).  Equal codes mean an
// isomorphism fixing R pointwise, i.e. identical attachment.
CanonicalCode attachment_code(const Graph& base, const std::vector<int>& r_verts,
                              const std::vector<int>& c_verts) {
    std::vector<int> verts;
    verts.reserve(r_verts.size() + c_verts.size());
    std::merge(r_verts.begin(), r_verts.end(), c_verts.begin(), c_verts.end(),
               std::back_inserter(verts));
    Graph sub = base.induced(verts);
    std::vector<int> roots;
    roots.reserve(r_verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (std::binary_search(r_verts.begin(), r_verts.end(), verts[i]))
            roots.push_back(static_cast<int>(i));
    return canonical_form(RootedGraph::on(sub, std::move(roots))).code;
}

std::vector<int> external_nbhd(const Graph& base, const std::vector<int>& petal) {
    std::vector<char> inside(static_cast<std::size_t>(base.vertex_count()), 0);
    for (int v : petal) inside[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(base.vertex_count()), 0);
    std::vector<int> out;
    for (int v : petal)
        for (int u : base.neighbors(v))
            if (!inside[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                out.push_back(u);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Sunflower max_sunflower(const RootedGraph& r, int max_free) {
    const Graph& base = r.base();
    const std::vector<int> nr = r.nonroots();
    const int f = static_cast<int>(nr.size());
    Sunflower best;
    if (f == 0) return best;

    if (f <= max_free) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < f; ++i)
                if (mask >> i & 1) s.push_back(nr[i]);
            std::vector<char> in_s(static_cast<std::size_t>(base.vertex_count()), 0);
            for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;
            std::vector<int> rest;
            for (int v = 0; v < base.vertex_count(); ++v)
                if (!in_s[static_cast<std::size_t>(v)]) rest.push_back(v);

            auto comps = base.induced(s).components();
            for (auto& c : comps)
                for (int& v : c) v = s[static_cast<std::size_t>(v)];

            std::map<CanonicalCode, std::vector<std::size_t>> types;
            for (std::size_t ci = 0; ci < comps.size(); ++ci)
                types[attachment_code(base, rest, comps[ci])].push_back(ci);

            int k = 0;
            for (const auto& [code, ids] : types) k = std::gcd(k, static_cast<int>(ids.size()));
            if (k <= best.k) continue;

            best.k = k;
            best.petals.assign(static_cast<std::size_t>(k), {});
            // round-robin within each type keeps the petals isomorphic
            for (const auto& [code, ids] : types)
                for (std::size_t j = 0; j < ids.size(); ++j)
                    for (int v : comps[ids[j]])
                        best.petals[j % static_cast<std::size_t>(k)].push_back(v);
            for (auto& p : best.petals) std::sort(p.begin(), p.end());
            best.core = external_nbhd(base, best.petals[0]);
        }
        best.exact = true;
        return best;
    }

    // Beyond the cap: the components of Z\W with a common attachment type
    // over W form a sunflower, so the largest class is a lower bound.
    auto comps = base.induced(nr).components();
    for (auto& c : comps)
        for (int& v : c) v = nr[static_cast<std::size_t>(v)];
    std::vector<int> w = r.roots();
    std::sort(w.begin(), w.end());
    std::map<CanonicalCode, std::vector<std::size_t>> types;
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        types[attachment_code(base, w, comps[ci])].push_back(ci);

    const std::vector<std::size_t>* chosen = nullptr;
    for (const auto& [code, ids] : types)
        if (!chosen || ids.size() > chosen->size()) chosen = &ids;
    best.k = static_cast<int>(chosen->size());
    best.exact = false;
    for (std::size_t id : *chosen) best.petals.push_back(comps[id]);
    best.core = external_nbhd(base, best.petals[0]);
    return best;
}

}  // namespace tlab
