#include "threshold_lab/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace tlab {

namespace {

constexpr int kCanonCap = 64;

// Individualization-refinement canonical search on a vertex-colored graph.
// The canonical certificate is the lexicographically largest byte string
// [n, init colors by position, packed upper-triangle adjacency] over all
// labelings compatible with the refinement search tree.
class Canon {
  public:
    Canon(const Graph& g, std::vector<int> init_colors)
        : g_(g), n_(g.vertex_count()), init_(std::move(init_colors)) {
        if (n_ > kCanonCap) throw SearchBudgetExceeded("canonical labeling capped at 64 vertices");
    }

    CanonResult run() {
        if (n_ == 0) return {std::string(1, '\0'), {}};
        recurse(init_);
        return {best_cert_, best_lab_};
    }

    // Orbit-stabilizer group order: |Aut| = |orbit(v0)| * |Stab(v0)|,
    // recursing on the individualized coloring.  Orbit membership is decided
    // by equality of canonical certificates.
    BigInt group_order() {
        if (n_ == 0) return 1;
        return order_rec(init_);
    }

  private:
    void refine(std::vector<int>& col) const {
        int rounds = 0;
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> keyed(n_);
            for (int v = 0; v < n_; ++v) {
                std::vector<int> key;
                key.push_back(col[v]);
                for (int u : g_.neighbors(v)) key.push_back(col[u]);
                std::sort(key.begin() + 1, key.end());
                keyed[v] = {std::move(key), v};
            }
            std::sort(keyed.begin(), keyed.end());
            int before = 1 + *std::max_element(col.begin(), col.end());
            int rank = -1;
            const std::vector<int>* prev = nullptr;
            for (auto& [key, v] : keyed) {
                if (!prev || key != *prev) {
                    ++rank;
                    prev = &key;
                }
                col[v] = rank;
            }
            if (rank + 1 == before || ++rounds > n_) break;
        }
    }

    std::string certificate(const std::vector<int>& lab) const {
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v) inv[lab[v]] = v;
        std::string cert;
        cert.reserve(1 + n_ + (n_ * (n_ - 1) / 2 + 7) / 8);
        cert.push_back(static_cast<char>(n_));
        for (int pos = 0; pos < n_; ++pos) cert.push_back(static_cast<char>(init_[inv[pos]]));
        int cur = 0, left = 8;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                cur = (cur << 1) | (g_.has_edge(inv[i], inv[j]) ? 1 : 0);
                if (--left == 0) {
                    cert.push_back(static_cast<char>(cur));
                    cur = 0;
                    left = 8;
                }
            }
        if (left < 8) cert.push_back(static_cast<char>(cur << left));
        return cert;
    }

    // Cells in color order; assumes dense colors (as refine leaves them).
    std::vector<std::vector<int>> cells(const std::vector<int>& col) const {
        int ncol = n_ ? 1 + *std::max_element(col.begin(), col.end()) : 0;
        std::vector<std::vector<int>> out(ncol);
        for (int v = 0; v < n_; ++v) out[col[v]].push_back(v);
        return out;
    }

    static std::vector<int> individualized(const std::vector<int>& col, int v) {
        std::vector<int> out(col.size());
        for (std::size_t u = 0; u < col.size(); ++u) out[u] = 2 * col[u];
        out[v] -= 1;
        return out;
    }

    // Orbit representatives of `cell` under the discovered generators that
    // fix `path_` pointwise.
    std::vector<int> orbit_reps(const std::vector<int>& cell) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gen : gens_) {
            bool fixes = true;
            for (int p : path_)
                if (gen[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(gen[v]);
                if (a != b) parent[a] = b;
            }
        }
        std::vector<int> reps;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (int v : cell) {
            int r = find(v);
            if (!seen[r]) {
                seen[r] = 1;
                reps.push_back(v);
            }
        }
        return reps;
    }

    void recurse(std::vector<int> col) {
        refine(col);
        auto cc = cells(col);
        const std::vector<int>* target = nullptr;
        for (const auto& cell : cc)
            if (cell.size() > 1) {
                target = &cell;
                break;
            }
        if (!target) {
            std::string cert = certificate(col);
            if (!have_best_ || cert > best_cert_) {
                best_cert_ = cert;
                best_lab_ = col;
                have_best_ = true;
            } else if (cert == best_cert_) {
                std::vector<int> inv_best(n_);
                for (int v = 0; v < n_; ++v) inv_best[best_lab_[v]] = v;
                std::vector<int> sigma(n_);
                for (int v = 0; v < n_; ++v) sigma[v] = inv_best[col[v]];
                gens_.push_back(std::move(sigma));
            }
            return;
        }
        for (int v : orbit_reps(*target)) {
            path_.push_back(v);
            recurse(individualized(col, v));
            path_.pop_back();
        }
    }

    // Canonical code of (g, col) as a colored graph.  The certificate bytes
    // embed `col` itself, so equality is exactly colored isomorphism; since
    // individualized colorings give their special vertex a unique color value,
    // equal codes certify an automorphism mapping one individualized vertex to
    // the other while fixing every singleton (in particular the search path).
    std::string code_for(const std::vector<int>& col) { return Canon(g_, col).run().code; }

    BigInt order_rec(std::vector<int> col) {
        refine(col);
        auto cc = cells(col);
        const std::vector<int>* target = nullptr;
        for (const auto& cell : cc)
            if (cell.size() > 1) {
                target = &cell;
                break;
            }
        if (!target) return 1;
        int v0 = (*target)[0];
        std::string code0 = code_for(individualized(col, v0));
        BigInt orbit = 1;
        for (std::size_t i = 1; i < target->size(); ++i)
            if (code_for(individualized(col, (*target)[i])) == code0) ++orbit;
        return orbit * order_rec(individualized(col, v0));
    }

    const Graph g_;
    int n_;
    std::vector<int> init_;
    std::string best_cert_;
    std::vector<int> best_lab_;
    bool have_best_ = false;
    std::vector<std::vector<int>> gens_;
    std::vector<int> path_;
};

std::vector<int> rooted_colors(const RootedGraph& r) {
    int n = r.vertex_count();
    int s = r.root_count();
    std::vector<int> col(static_cast<std::size_t>(n), s);
    for (int i = 0; i < s; ++i) col[r.roots()[i]] = i;
    return col;
}

struct AutMemo {
    std::mutex mu;
    std::unordered_map<std::string, BigInt> map;
};

AutMemo& aut_memo() {
    static AutMemo memo;
    return memo;
}

BigInt aut_count_colored(const Graph& g, const std::vector<int>& colors,
                         const CanonicalCode& code) {
    auto& memo = aut_memo();
    {
        std::lock_guard<std::mutex> lock(memo.mu);
        auto it = memo.map.find(code);
        if (it != memo.map.end()) return it->second;
    }
    BigInt order = Canon(g, colors).group_order();
    std::lock_guard<std::mutex> lock(memo.mu);
    memo.map.emplace(code, order);
    return order;
}

void enumerate_auts(const Graph& g, const std::vector<int>& colors, std::size_t cap,
                    std::vector<std::vector<int>>& out) {
    int n = g.vertex_count();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> degs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(image);
            if (out.size() > cap)
                throw SearchBudgetExceeded("automorphism group larger than enumeration cap");
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || colors[w] != colors[v] || degs[w] != degs[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(image[u], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
            image[v] = -1;
        }
    };
    rec(rec, 0);
}

}  // namespace

CanonResult canonical_form(const Graph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    return Canon(g, colors).run();
}

CanonResult canonical_form(const RootedGraph& r) { return Canon(r.base(), rooted_colors(r)).run(); }

Graph canonical_copy(const Graph& g) { return g.relabeled(canonical_form(g).labeling); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).code == canonical_form(b).code;
}

bool rooted_isomorphic(const RootedGraph& a, const RootedGraph& b) {
    if (a.root_count() != b.root_count() || a.vertex_count() != b.vertex_count() ||
        a.rooted_edge_count() != b.rooted_edge_count())
        return false;
    return canonical_form(a).code == canonical_form(b).code;
}

BigInt aut_count(const Graph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    return aut_count_colored(g, colors, canonical_form(g).code);
}

BigInt aut_count(const RootedGraph& r) {
    return aut_count_colored(r.base(), rooted_colors(r), canonical_form(r).code);
}

std::vector<std::vector<int>> aut_elements(const Graph& g, std::size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    enumerate_auts(g, colors, cap, out);
    return out;
}

std::vector<std::vector<int>> aut_elements(const RootedGraph& r, std::size_t cap) {
    std::vector<std::vector<int>> out;
    enumerate_auts(r.base(), rooted_colors(r), cap, out);
    return out;
}

std::string code_hex(const CanonicalCode& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (unsigned char c : code) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace tlab
