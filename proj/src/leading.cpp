#include "threshold_lab/leading.hpp"

#include <algorithm>

namespace tlab {

namespace {

// Next k-combination of {0..n-1} in lexicographic order; returns false when
// exhausted.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

LeadingCheck is_p_leading(const RootedGraph& r, long long n, const Prob& p, int max_free) {
    int free = r.nonroot_count();
    if (free < 1) throw PreconditionUnmet("leading check needs W ⊊ Z");
    if (free > max_free) throw SearchBudgetExceeded("leading check over too many free vertices");
    std::vector<int> nonroots = r.nonroots();
    LeadingCheck out;
    out.leading = true;
    // Y strictly between W and Z: nonempty proper subsets of the non-roots,
    // scanned by size then lexicographically.
    for (int size = 1; size < free; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[i] = i;
        do {
            std::vector<int> extra;
            extra.reserve(pick.size());
            for (int idx : pick) extra.push_back(nonroots[idx]);
            MuValue m = mu(grow_roots(r, extra), n, p);
            CmpResult cmp = m.cmp_mu(Rational(1));
            if (cmp.near_tie) out.near_tie = true;
            if (cmp.ge()) {
                out.leading = false;
                out.witness = LeadingWitness{std::move(extra), std::move(m)};
                return out;
            }
        } while (next_combination(pick, free));
    }
    return out;
}

namespace {

// Best Y ⊊ current for one decomposition step, in local labels of
// J[current]: maximum cardinality with mu_p(Y, current) >= 1, ties to the
// lexicographically least vertex set.  The empty set always qualifies, so
// this never fails.
std::vector<int> best_step(const Graph& local, long long n, const Prob& p, MuValue& mu_out,
                           bool& tie_out) {
    int k = local.vertex_count();
    for (int size = k - 1; size >= 0; --size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[i] = i;
        do {
            RootedGraph step = RootedGraph::on(local, pick);
            MuValue m = mu(step, n, p);
            CmpResult cmp = m.cmp_mu(Rational(1));
            if (cmp.ge()) {
                mu_out = std::move(m);
                tie_out = cmp.near_tie;
                return pick;
            }
        } while (size > 0 && next_combination(pick, k));
    }
    throw Error("internal: empty root set failed to qualify in decomposition step");
}

}  // namespace

LeadingDecomposition leading_decomposition(const Graph& j, long long n, const Prob& q,
                                           const Prob& p, int max_vertices, int census_cap) {
    if (j.vertex_count() > max_vertices)
        throw SearchBudgetExceeded("decomposition over too many vertices");
    if (n < j.vertex_count()) throw HostTooSmall(n, j.vertex_count());
    if (p.cmp(q).lt()) throw DomainError("decomposition needs p >= q");
    SparseCheck sparse = is_q_sparse(j, n, q, Rational(1), census_cap);
    if (!sparse.sparse)
        throw NotSparse("graph is not q-sparse", code_hex(sparse.witness->code));

    LeadingDecomposition out;
    std::vector<int> current(static_cast<std::size_t>(j.vertex_count()));
    for (int v = 0; v < j.vertex_count(); ++v) current[v] = v;
    out.chain.push_back(current);
    while (!current.empty()) {
        Graph local = j.induced(current);
        MuValue m;
        bool tie = false;
        std::vector<int> pick = best_step(local, n, p, m, tie);
        std::vector<int> lower;
        lower.reserve(pick.size());
        for (int idx : pick) lower.push_back(current[idx]);
        DecompositionStep step;
        step.lower = lower;
        step.upper = current;
        step.step_mu = std::move(m);
        step.near_tie = tie;
        out.steps.push_back(std::move(step));
        out.chain.push_back(lower);
        current = std::move(lower);
    }
    std::reverse(out.chain.begin(), out.chain.end());
    std::reverse(out.steps.begin(), out.steps.end());
    return out;
}

bool validate_decomposition(const Graph& j, long long n, const Prob& p,
                            const LeadingDecomposition& dec) {
    if (dec.chain.empty() || !dec.chain.front().empty()) return false;
    if (static_cast<int>(dec.chain.back().size()) != j.vertex_count()) return false;
    if (dec.steps.size() + 1 != dec.chain.size()) return false;
    for (std::size_t i = 0; i + 1 < dec.chain.size(); ++i) {
        const auto& lo = dec.chain[i];
        const auto& hi = dec.chain[i + 1];
        if (lo.size() >= hi.size()) return false;
        if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) return false;
        // step mu >= 1 and p-leading inside J[hi]
        Graph local = j.induced(hi);
        std::vector<int> roots;
        for (std::size_t t = 0; t < hi.size(); ++t)
            if (std::binary_search(lo.begin(), lo.end(), hi[t])) roots.push_back(static_cast<int>(t));
        RootedGraph step = RootedGraph::on(local, roots);
        if (!mu(step, n, p).cmp_mu(Rational(1)).ge()) return false;
        if (!is_p_leading(step, n, p).leading) return false;
    }
    return true;
}

}  // namespace tlab
