#include "nakhom/endo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nakhom/errors.hpp"

namespace nakhom {

namespace {

/* Valid shifts for maps M(i,k) -> M(j,l): residual paths from j to i. */
std::vector<int> shift_window(const KupischSeries& K, const IntervalModule& src,
                              const IntervalModule& tgt) {
    const int i = src.vertex, k = src.length, j = tgt.vertex, l = tgt.length;
    const int lo = std::max(0, l - k), hi = std::min(l, K.c()[j]);
    std::vector<int> out;
    for (int t = lo; t < hi; ++t) {
        const bool ok = K.cyclic() ? (j + t - i) % K.n() == 0 : j + t == i;
        if (ok) out.push_back(t);
    }
    return out;
}

}  // namespace

Matrix<Rational> interval_hom_matrix(const KupischSeries& K, const IntervalModule& src,
                                     const IntervalModule& tgt, int shift) {
    // source basis v_a = residue of p(i,a); the map sends v_a to the residue
    // of p(j, shift + a), which survives iff shift + a < min(l, c_j)
    Matrix<Rational> F(src.length, tgt.length);
    const int limit = std::min(tgt.length, K.c()[tgt.vertex]);
    for (int a = 0; a < src.length; ++a)
        if (shift + a < limit) F.at(a, shift + a) = Rational(1);
    return F;
}

EndoAlgebra build_endo(const KupischSeries& K, const ModuleList& modules) {
    if (modules.empty()) fail("EmptyModuleList", "endomorphism algebra of the zero module");
    check_module_list(K, modules);

    EndoAlgebra E;
    E.base = K;
    E.summands = modules.basic(&E.dropped_duplicates);
    const int r = static_cast<int>(E.summands.size());

    // basis: all (src, tgt, shift) in lexicographic order
    std::map<std::array<int, 3>, int> index;
    for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t)
            for (int u : shift_window(K, E.summands.entries[s], E.summands.entries[t])) {
                const int idx = static_cast<int>(E.labels.size());
                E.labels.push_back(HomBasisElement{s, t, u});
                index[{s, t, u}] = idx;
            }
    const int dim = static_cast<int>(E.labels.size());

    std::vector<std::string> names;
    std::vector<int> idem, rad;
    for (int a = 0; a < dim; ++a) {
        const auto& h = E.labels[a];
        names.push_back("f(" + std::to_string(h.src) + "->" + std::to_string(h.tgt) + ";" +
                        std::to_string(h.shift) + ")");
        if (h.src == h.tgt && h.shift == 0) idem.push_back(a);
        else rad.push_back(a);
    }

    // a*b = a after b: defined when src(a) = tgt(b); the composite is the
    // shift-sum basis map of the pair (src(b) -> tgt(a)) when that shift is
    // still inside the window, and zero otherwise.
    std::vector<std::vector<SparseVec>> mult(static_cast<size_t>(dim),
                                             std::vector<SparseVec>(static_cast<size_t>(dim)));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const auto& ha = E.labels[a];
            const auto& hb = E.labels[b];
            if (ha.src != hb.tgt) continue;
            const auto it = index.find({hb.src, ha.tgt, ha.shift + hb.shift});
            if (it != index.end()) mult[a][b] = {{it->second, Rational(1)}};
        }

    E.algebra = std::make_shared<SCAlgebra>(dim, std::move(names), std::move(mult),
                                            std::move(idem), std::move(rad));

    // Cross-check the shift-composition rule against explicit matrix
    // composition of the module maps (exhaustive on small algebras, sampled
    // above 2000 composable pairs; the test suite runs the exhaustive form).
    std::vector<std::pair<int, int>> composable;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            if (E.labels[a].src == E.labels[b].tgt) composable.emplace_back(a, b);
    std::vector<std::pair<int, int>> checks;
    if (composable.size() <= 2000) {
        checks = composable;
    } else {
        std::mt19937_64 rng(0x6b75706973636821ull);
        for (int trial = 0; trial < 500; ++trial)
            checks.push_back(composable[rng() % composable.size()]);
    }
    for (const auto& [a, b] : checks) {
        const auto& ha = E.labels[a];
        const auto& hb = E.labels[b];
        const Matrix<Rational> Fa = interval_hom_matrix(K, E.summands.entries[ha.src],
                                                        E.summands.entries[ha.tgt], ha.shift);
        const Matrix<Rational> Fb = interval_hom_matrix(K, E.summands.entries[hb.src],
                                                        E.summands.entries[hb.tgt], hb.shift);
        const Matrix<Rational> composite = Fb * Fa;  // rows act left to right: b then a
        const SparseVec& prod = E.algebra->product(a, b);
        Matrix<Rational> expect(E.summands.entries[hb.src].length,
                                E.summands.entries[ha.tgt].length);
        if (!prod.empty()) {
            const auto& hc = E.labels[prod[0].first];
            expect = interval_hom_matrix(K, E.summands.entries[hc.src], E.summands.entries[hc.tgt],
                                         hc.shift);
        }
        if (!(composite == expect))
            fail_internal("endomorphism structure constants disagree with matrix composition");
    }
    return E;
}

std::vector<std::vector<long>> cartan_matrix(const EndoAlgebra& E) {
    const int r = static_cast<int>(E.summands.size());
    std::vector<std::vector<long>> C(r, std::vector<long>(r, 0));
    for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t)
            C[s][t] = hom_dim(E.base, E.summands.entries[s], E.summands.entries[t]);
    return C;
}

namespace {

/* rad^2 as a set of basis indices; all products in these algebras are
 * monomial, which the SCAlgebra validator already certified. */
std::set<int> radical_square(const SCAlgebra& A) {
    std::set<int> out;
    for (int a : A.radical_basis())
        for (int b : A.radical_basis()) {
            const int p = A.product_index(a, b);
            if (p >= 0) out.insert(p);
        }
    return out;
}

}  // namespace

QuiverPresentation quiver(const EndoAlgebra& E) {
    QuiverPresentation Q;
    const int r = static_cast<int>(E.summands.size());
    for (const auto& m : E.summands.entries) Q.vertex_labels.push_back(m.str());
    Q.cartan = cartan_matrix(E);
    Q.arrow_count.assign(r, std::vector<long>(r, 0));

    const std::set<int> rad2 = radical_square(*E.algebra);
    for (int idx : E.algebra->radical_basis()) {
        if (rad2.count(idx)) continue;
        const auto& h = E.labels[idx];
        // the map M_src -> M_tgt sits in e_tgt B e_src: an arrow tgt -> src
        Q.arrows.push_back({h.tgt, h.src});
        ++Q.arrow_count[h.tgt][h.src];
    }
    return Q;
}

QuiverPresentation relations(const EndoAlgebra& E, int degree_cap) {
    QuiverPresentation Q = quiver(E);
    Q.has_relations = true;
    const SCAlgebra& A = *E.algebra;
    if (degree_cap <= 0) degree_cap = A.radical_nilpotency_index();
    if (degree_cap < 2) degree_cap = 2;

    // arrow index -> chosen representative basis element
    std::vector<int> arrow_elem;
    {
        const std::set<int> rad2 = radical_square(A);
        for (int idx : A.radical_basis())
            if (!rad2.count(idx)) arrow_elem.push_back(idx);
    }
    const int n_arrows = static_cast<int>(arrow_elem.size());

    struct Path {
        std::vector<int> arrows;  // arrow indices, composing left to right
        int eval = -1;            // basis index of the product, -1 if zero
        int from = 0, to = 0;
    };

    // degree-1 paths are the arrows themselves
    std::vector<Path> current;
    for (int a = 0; a < n_arrows; ++a) {
        Path p;
        p.arrows = {a};
        p.eval = arrow_elem[a];
        p.from = Q.arrows[a][0];
        p.to = Q.arrows[a][1];
        current.push_back(std::move(p));
    }

    long quotient_dim = static_cast<long>(E.summands.size()) + n_arrows;
    // relations found so far, stored per degree as coefficient vectors over
    // that degree's path list (for building the ideal at later degrees)
    std::vector<std::vector<Path>> paths_by_degree{{}, current};
    std::vector<std::vector<std::vector<std::pair<Rational, std::vector<int>>>>> rels_by_degree(2);

    bool exhausted = n_arrows == 0;
    for (int d = 2; d <= degree_cap && !exhausted; ++d) {
        // extend
        std::vector<Path> next;
        for (const auto& p : current)
            for (int a = 0; a < n_arrows; ++a) {
                if (Q.arrows[a][0] != p.to) continue;
                Path q;
                q.arrows = p.arrows;
                q.arrows.push_back(a);
                q.from = p.from;
                q.to = Q.arrows[a][1];
                q.eval = p.eval < 0 ? -1 : A.product_index(p.eval, arrow_elem[a]);
                next.push_back(std::move(q));
            }
        current = std::move(next);
        paths_by_degree.push_back(current);
        rels_by_degree.emplace_back();
        if (current.empty()) {
            exhausted = true;
            break;
        }
        const int np = static_cast<int>(current.size());
        std::map<std::vector<int>, int> path_pos;
        for (int i = 0; i < np; ++i) path_pos[current[i].arrows] = i;

        // ideal generated by lower-degree relations, at this degree
        RowBasis<Rational> span(np);
        for (int dl = 2; dl < d; ++dl) {
            for (const auto& rel : rels_by_degree[dl]) {
                const std::vector<int>& first = rel.front().second;
                const int rel_from = Q.arrows[first.front()][0];
                const int rel_to = Q.arrows[first.back()][1];
                // all paddings u * rel * v of total degree d
                for (int pre = 0; pre + dl <= d; ++pre) {
                    const int post = d - dl - pre;
                    std::vector<std::vector<int>> prefixes, suffixes;
                    if (pre == 0) prefixes.push_back({});
                    else
                        for (const auto& p : paths_by_degree[pre])
                            if (p.to == rel_from) prefixes.push_back(p.arrows);
                    if (post == 0) suffixes.push_back({});
                    else
                        for (const auto& p : paths_by_degree[post])
                            if (p.from == rel_to) suffixes.push_back(p.arrows);
                    for (const auto& u : prefixes)
                        for (const auto& v : suffixes) {
                            std::vector<Rational> row(np, Rational(0));
                            for (const auto& [coef, mid] : rel) {
                                std::vector<int> whole = u;
                                whole.insert(whole.end(), mid.begin(), mid.end());
                                whole.insert(whole.end(), v.begin(), v.end());
                                row[path_pos.at(whole)] += coef;
                            }
                            span.insert(std::move(row));
                        }
                }
            }
        }

        // kernel of evaluation: zero paths plus differences within a fiber
        std::map<int, std::vector<int>> fibers;
        std::vector<std::vector<Rational>> kernel;
        for (int i = 0; i < np; ++i) {
            if (current[i].eval < 0) {
                std::vector<Rational> row(np, Rational(0));
                row[i] = Rational(1);
                kernel.push_back(std::move(row));
            } else {
                fibers[current[i].eval].push_back(i);
            }
        }
        long distinct = 0;
        for (const auto& [val, idxs] : fibers) {
            (void)val;
            ++distinct;
            for (size_t j = 1; j < idxs.size(); ++j) {
                std::vector<Rational> row(np, Rational(0));
                row[idxs[0]] = Rational(1);
                row[idxs[j]] = Rational(-1);
                kernel.push_back(std::move(row));
            }
        }
        quotient_dim += distinct;

        for (auto& row : kernel) {
            std::vector<Rational> copy = row;
            if (!span.insert(std::move(copy))) continue;  // already in the ideal
            QuiverRelation rel;
            std::vector<std::pair<Rational, std::vector<int>>> stored;
            for (int i = 0; i < np; ++i)
                if (!row[i].is_zero()) {
                    rel.terms.emplace_back(row[i], current[i].arrows);
                    stored.emplace_back(row[i], current[i].arrows);
                }
            Q.relations.push_back(std::move(rel));
            rels_by_degree[d].push_back(std::move(stored));
        }

        // once every surviving path evaluates to zero, longer paths vanish too
        if (distinct == 0) exhausted = true;
    }

    Q.quotient_dim = quotient_dim;
    Q.certificate_ok = exhausted && quotient_dim == E.dim();
    if (!Q.certificate_ok)
        fail("CapTooSmall", "path algebra modulo relations has dimension " +
                                std::to_string(quotient_dim) + " against algebra dimension " +
                                std::to_string(E.dim()) +
                                (exhausted ? "" : " (paths survive past the cap)"));
    return Q;
}

bool digraph_isomorphic(const std::vector<std::vector<long>>& a,
                        const std::vector<std::vector<long>>& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return false;

    auto signature = [](const std::vector<std::vector<long>>& m, int v) {
        std::vector<long> out, in;
        for (size_t j = 0; j < m.size(); ++j) {
            out.push_back(m[v][j]);
            in.push_back(m[j][v]);
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        long total_out = std::accumulate(out.begin(), out.end(), 0L);
        long total_in = std::accumulate(in.begin(), in.end(), 0L);
        return std::tuple(total_out, total_in, m[v][v], out, in);
    };

    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);

    std::function<bool(int)> assign = [&](int s) {
        if (s == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[t] || signature(a, s) != signature(b, t)) continue;
            bool ok = a[s][s] == b[t][t];
            for (int s2 = 0; s2 < s && ok; ++s2)
                ok = a[s][s2] == b[t][perm[s2]] && a[s2][s] == b[perm[s2]][t];
            if (!ok) continue;
            perm[s] = t;
            used[t] = true;
            if (assign(s + 1)) return true;
            perm[s] = -1;
            used[t] = false;
        }
        return false;
    };
    return assign(0);
}

}  // namespace nakhom
