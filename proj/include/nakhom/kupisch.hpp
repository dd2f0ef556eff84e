#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nakhom/extnat.hpp"

namespace nakhom {

enum class Orientation { Linear, Cyclic };

std::string orientation_str(Orientation o);

/* Indecomposable module M(i,k) = e_i A / e_i J^k over a connected Nakayama
 * algebra: uniserial of length k with top S_i and socle S_{i+k-1}. */
struct IntervalModule {
    int vertex = 0;  // i
    int length = 0;  // k, 1 <= k <= c_i

    bool operator==(const IntervalModule& o) const {
        return vertex == o.vertex && length == o.length;
    }
    bool operator<(const IntervalModule& o) const {
        return vertex != o.vertex ? vertex < o.vertex : length < o.length;
    }
    std::string str() const;
    static IntervalModule parse(const std::string& s);  // "M(i,k)"
};

/* Finite multiset of interval modules (a direct sum), kept in the canonical
 * (vertex, length) order so output is deterministic. */
struct ModuleList {
    std::vector<IntervalModule> entries;

    ModuleList() = default;
    explicit ModuleList(std::vector<IntervalModule> e) : entries(std::move(e)) { canonicalize(); }

    void canonicalize();
    void add(const IntervalModule& m);
    ModuleList basic(bool* dropped = nullptr) const;  // deduplicated
    long total_length() const;
    bool empty() const { return entries.empty(); }
    size_t size() const { return entries.size(); }
    bool operator==(const ModuleList& o) const { return entries == o.entries; }
    std::string str() const;
};

/* A connected non-semisimple Nakayama algebra, presented by its Kupisch
 * series c_i = dim e_i A with vertices 0..n-1 and arrows i -> i+1 (indices
 * mod n on a cycle). The CoKupisch series d_i = dim D(A e_i) is cached on
 * validation via d_i = inf { k >= 1 : k >= c_{i-k} }; on a line the series
 * is padded with c_j = 0 for j < 0, which makes the same formula work at
 * the left boundary. */
class KupischSeries {
public:
    Orientation orientation() const { return orientation_; }
    bool cyclic() const { return orientation_ == Orientation::Cyclic; }
    int n() const { return static_cast<int>(c_.size()); }
    const std::vector<int>& c() const { return c_; }
    const std::vector<int>& d() const { return d_; }
    long dim() const;  // sum of c_i

    /* Normalize a vertex index: mod n on a cycle, identity (checked) on a line. */
    int vertex(long i) const;
    int c_at(long i) const;  // 0 outside the line
    int d_at(long i) const;

    std::string str() const;  // "linear:3,3,3,2,1"
    bool operator==(const KupischSeries& o) const {
        return orientation_ == o.orientation_ && c_ == o.c_;
    }

    friend KupischSeries validate_kupisch(const std::vector<int>& c, Orientation o);

private:
    Orientation orientation_ = Orientation::Linear;
    std::vector<int> c_;
    std::vector<int> d_;
};

/* Validation errors: EmptySeries, NonPositiveEntry, SlopeViolation,
 * LinearTailViolation, Disconnected, Semisimple. */
KupischSeries validate_kupisch(const std::vector<int>& c, Orientation o);
KupischSeries parse_kupisch(const std::string& text);  // "linear:3,3,3,2,1" / "cyclic:2,3"

std::vector<int> cokupisch(const KupischSeries& K);

void check_interval(const KupischSeries& K, const IntervalModule& M);
void check_module_list(const KupischSeries& K, const ModuleList& L);

IntervalModule simple_at(const KupischSeries& K, int i);
IntervalModule projective_at(const KupischSeries& K, int i);
IntervalModule injective_at(const KupischSeries& K, int i);  // D(A e_i)

int socle_vertex(const KupischSeries& K, const IntervalModule& M);
int top_vertex(const KupischSeries& K, const IntervalModule& M);

bool is_projective(const KupischSeries& K, const IntervalModule& M);
bool is_injective(const KupischSeries& K, const IntervalModule& M);

/* 0 -> M -> hull -> cosyzygy -> 0 and 0 -> syzygy -> cover -> M -> 0;
 * nullopt encodes the zero (co)syzygy. */
IntervalModule injective_hull(const KupischSeries& K, const IntervalModule& M);
std::optional<IntervalModule> cosyzygy(const KupischSeries& K, const IntervalModule& M);
IntervalModule projective_cover(const KupischSeries& K, const IntervalModule& M);
std::optional<IntervalModule> syzygy(const KupischSeries& K, const IntervalModule& M);

/* dim Hom(M, N) by counting residual paths in the shift window. */
long hom_dim(const KupischSeries& K, const IntervalModule& M, const IntervalModule& N);
long hom_dim(const KupischSeries& K, const ModuleList& M, const ModuleList& N);

enum class Direction { Injective, Projective };

struct ResolutionStep {
    ModuleList term;  // injectives (resp. projectives) at this step
    ModuleList next;  // their cosyzygies (resp. syzygies)
};

/* Trace of a minimal (co)resolution together with the verdicts read off it.
 * Infinite length is detected exactly: the (co)syzygy operator is a
 * deterministic self-map of the finite interval set, so a repeat proves
 * periodicity. max_steps is a safety cap only, never the verdict source. */
struct ResolutionReport {
    Direction direction = Direction::Injective;
    std::vector<ResolutionStep> steps;
    ExtNat length;              // injdim / projdim of the input
    ExtNat dominant_prefix;     // leading projective (resp. injective) terms
    bool cycle_detected = false;
};

long default_step_cap(const KupischSeries& K);  // sum c_i + 1

ResolutionReport min_injective_resolution(const KupischSeries& K, const ModuleList& M,
                                          long max_steps = 0);
ResolutionReport min_projective_resolution(const KupischSeries& K, const ModuleList& M,
                                           long max_steps = 0);

ExtNat injdim(const KupischSeries& K, const IntervalModule& M);
ExtNat projdim(const KupischSeries& K, const IntervalModule& M);
ExtNat domdim_module(const KupischSeries& K, const IntervalModule& M);

ExtNat domdim_algebra(const KupischSeries& K);
ExtNat gldim(const KupischSeries& K);

struct GorensteinReport {
    std::vector<ExtNat> injdim_projectives;  // injdim(e_i A)
    std::vector<ExtNat> projdim_injectives;  // projdim(D(A e_i))
    ExtNat gdim;
    bool asymmetry = false;  // one side finite, the other not: invariant violation
};
GorensteinReport gorenstein(const KupischSeries& K);

/* Vertices i with e_i A projective-injective; nonempty for every Nakayama
 * algebra (they are QF-3). eA = direct sum over this set. */
std::set<int> minimal_faithful_vertices(const KupischSeries& K);
ModuleList minimal_faithful_module(const KupischSeries& K);

/* i-th cosyzygy of the regular module (nonzero summands only). */
ModuleList regular_cosyzygy(const KupischSeries& K, long i);

/* Basic version of eA + Omega^{-i}(A), 1 <= i <= domdim(A); always has
 * exactly n pairwise non-isomorphic summands. */
ModuleList canonical_tilting(const KupischSeries& K, long i);

/* The counterexample family: linear [3,3,...,3,2,1] of length n (n >= 2;
 * n = 2 degenerates to [2,1]). */
KupischSeries family_A(int n);

struct OppositeResult {
    KupischSeries series;
    std::vector<int> old_to_new;  // vertex relabeling
};
OppositeResult opposite(const KupischSeries& K);

/* All valid series with given bounds, linear and cyclic, in lexicographic
 * order; used by sweeps and enumerative tests. */
std::vector<KupischSeries> enumerate_series(int max_n, int max_c);

}  // namespace nakhom
