#include "nakhom/kupisch.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "nakhom/errors.hpp"

namespace nakhom {

std::string orientation_str(Orientation o) {
    return o == Orientation::Linear ? "linear" : "cyclic";
}

std::string IntervalModule::str() const {
    return "M(" + std::to_string(vertex) + "," + std::to_string(length) + ")";
}

IntervalModule IntervalModule::parse(const std::string& s) {
    int i = 0, k = 0;
    char a = 0, b = 0, c = 0, d = 0;
    std::istringstream in(s);
    if (!(in >> a >> b >> i >> c >> k >> d) || a != 'M' || b != '(' || c != ',' || d != ')' ||
        (in >> std::ws, !in.eof()))
        fail("ParseError", "expected interval module of the form M(i,k), got '" + s + "'");
    return IntervalModule{i, k};
}

void ModuleList::canonicalize() { std::sort(entries.begin(), entries.end()); }

void ModuleList::add(const IntervalModule& m) {
    entries.insert(std::upper_bound(entries.begin(), entries.end(), m), m);
}

ModuleList ModuleList::basic(bool* dropped) const {
    ModuleList out;
    for (const auto& m : entries)
        if (out.entries.empty() || !(out.entries.back() == m)) out.entries.push_back(m);
    if (dropped) *dropped = out.entries.size() != entries.size();
    return out;
}

long ModuleList::total_length() const {
    long s = 0;
    for (const auto& m : entries) s += m.length;
    return s;
}

std::string ModuleList::str() const {
    std::string s;
    for (const auto& m : entries) {
        if (!s.empty()) s += " + ";
        s += m.str();
    }
    return s.empty() ? "0" : s;
}

long KupischSeries::dim() const { return std::accumulate(c_.begin(), c_.end(), 0L); }

int KupischSeries::vertex(long i) const {
    const long m = n();
    if (cyclic()) return static_cast<int>(((i % m) + m) % m);
    if (i < 0 || i >= m) fail_internal("linear vertex index out of range: " + std::to_string(i));
    return static_cast<int>(i);
}

int KupischSeries::c_at(long i) const {
    const long m = n();
    if (cyclic()) return c_[static_cast<size_t>(((i % m) + m) % m)];
    if (i < 0 || i >= m) return 0;
    return c_[static_cast<size_t>(i)];
}

int KupischSeries::d_at(long i) const {
    const long m = n();
    if (cyclic()) return d_[static_cast<size_t>(((i % m) + m) % m)];
    if (i < 0 || i >= m) return 0;
    return d_[static_cast<size_t>(i)];
}

std::string KupischSeries::str() const {
    std::string s = orientation_str(orientation_) + ":";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s;
}

std::vector<int> cokupisch(const KupischSeries& K) {
    const int n = K.n();
    int max_c = 0;
    for (int ci : K.c()) max_c = std::max(max_c, ci);
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 1; k <= max_c + 1; ++k) {
            if (k >= K.c_at(static_cast<long>(i) - k)) {
                d[i] = k;
                break;
            }
        }
        if (d[i] == 0) fail_internal("CoKupisch search did not terminate");
    }
    return d;
}

KupischSeries validate_kupisch(const std::vector<int>& c, Orientation o) {
    if (c.empty()) fail("EmptySeries", "Kupisch series must be nonempty");
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i)
        if (c[i] <= 0)
            fail("NonPositiveEntry", "c[" + std::to_string(i) + "] = " + std::to_string(c[i]));

    if (o == Orientation::Linear) {
        for (int i = 0; i < n - 1; ++i)
            if (c[i] > c[i + 1] + 1)
                fail("SlopeViolation", "c[" + std::to_string(i) + "] = " + std::to_string(c[i]) +
                                           " > c[" + std::to_string(i + 1) + "]+1 = " +
                                           std::to_string(c[i + 1] + 1));
        if (c[n - 1] != 1)
            fail("LinearTailViolation",
                 "a linear series ends in 1, got c[" + std::to_string(n - 1) + "] = " +
                     std::to_string(c[n - 1]));
        if (n == 1) fail("Semisimple", "the one-point linear algebra is semisimple");
        for (int i = 0; i < n - 1; ++i)
            if (c[i] == 1)
                fail("Disconnected", "c[" + std::to_string(i) +
                                         "] = 1 before the tail disconnects the line quiver");
        // The slope condition pins every interval inside the line.
        for (int i = 0; i < n; ++i)
            if (i + c[i] > n) fail_internal("linear series escapes the quiver");
    } else {
        if (n == 1 && c[0] == 1) fail("Semisimple", "cyclic series [1] presents the base field");
        for (int i = 0; i < n; ++i) {
            if (c[i] == 1)
                fail("Disconnected",
                     "c[" + std::to_string(i) + "] = 1 breaks the cycle; the presentation is not "
                                                "a connected cyclic Nakayama algebra");
            if (c[i] > c[(i + 1) % n] + 1)
                fail("SlopeViolation", "c[" + std::to_string(i) + "] = " + std::to_string(c[i]) +
                                           " > c[" + std::to_string((i + 1) % n) + "]+1 = " +
                                           std::to_string(c[(i + 1) % n] + 1));
        }
    }

    KupischSeries K;
    K.orientation_ = o;
    K.c_ = c;
    K.d_ = cokupisch(K);

    // d must be a permutation of c
    std::vector<int> cs = c, ds = K.d_;
    std::sort(cs.begin(), cs.end());
    std::sort(ds.begin(), ds.end());
    if (cs != ds) fail_internal("CoKupisch series is not a permutation of the Kupisch series");
    return K;
}

KupischSeries parse_kupisch(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        fail("ParseError", "expected '<linear|cyclic>:<c list>', got '" + text + "'");
    const std::string shape = text.substr(0, colon);
    Orientation o;
    if (shape == "linear") o = Orientation::Linear;
    else if (shape == "cyclic") o = Orientation::Cyclic;
    else fail("ParseError", "unknown orientation '" + shape + "'");
    std::vector<int> c;
    std::istringstream in(text.substr(colon + 1));
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            c.push_back(v);
        } catch (const std::exception&) {
            fail("ParseError", "bad series entry '" + tok + "'");
        }
    }
    return validate_kupisch(c, o);
}

void check_interval(const KupischSeries& K, const IntervalModule& M) {
    if (M.vertex < 0 || M.vertex >= K.n())
        fail("VertexOutOfRange", "vertex " + std::to_string(M.vertex));
    if (M.length < 1 || M.length > K.c()[M.vertex])
        fail("InvalidInterval", M.str() + " over " + K.str() + " (need 1 <= k <= c_i = " +
                                    std::to_string(K.c()[M.vertex]) + ")");
}

void check_module_list(const KupischSeries& K, const ModuleList& L) {
    for (const auto& m : L.entries) check_interval(K, m);
}

static void check_vertex(const KupischSeries& K, int i) {
    if (i < 0 || i >= K.n()) fail("VertexOutOfRange", "vertex " + std::to_string(i));
}

IntervalModule simple_at(const KupischSeries& K, int i) {
    check_vertex(K, i);
    return IntervalModule{i, 1};
}

IntervalModule projective_at(const KupischSeries& K, int i) {
    check_vertex(K, i);
    return IntervalModule{i, K.c()[i]};
}

IntervalModule injective_at(const KupischSeries& K, int i) {
    // D(A e_i) = M(i - d_i + 1, d_i): the uniserial of length d_i with socle S_i.
    check_vertex(K, i);
    const int di = K.d()[i];
    return IntervalModule{K.vertex(static_cast<long>(i) - di + 1), di};
}

int socle_vertex(const KupischSeries& K, const IntervalModule& M) {
    check_interval(K, M);
    return K.vertex(static_cast<long>(M.vertex) + M.length - 1);
}

int top_vertex(const KupischSeries& K, const IntervalModule& M) {
    check_interval(K, M);
    return M.vertex;
}

bool is_projective(const KupischSeries& K, const IntervalModule& M) {
    check_interval(K, M);
    return M.length == K.c()[M.vertex];
}

bool is_injective(const KupischSeries& K, const IntervalModule& M) {
    // Uniform test: M equals the injective envelope of its socle iff the
    // lengths agree. Equivalent to c_{i-1} <= k away from the line boundary.
    return M.length == K.d()[socle_vertex(K, M)];
}

IntervalModule injective_hull(const KupischSeries& K, const IntervalModule& M) {
    const int s = socle_vertex(K, M);
    return injective_at(K, s);
}

std::optional<IntervalModule> cosyzygy(const KupischSeries& K, const IntervalModule& M) {
    const int s = socle_vertex(K, M);
    const int ds = K.d()[s];
    if (ds == M.length) return std::nullopt;  // M is injective
    return IntervalModule{K.vertex(static_cast<long>(M.vertex) + M.length - ds), ds - M.length};
}

IntervalModule projective_cover(const KupischSeries& K, const IntervalModule& M) {
    check_interval(K, M);
    return projective_at(K, M.vertex);
}

std::optional<IntervalModule> syzygy(const KupischSeries& K, const IntervalModule& M) {
    check_interval(K, M);
    const int ci = K.c()[M.vertex];
    if (M.length == ci) return std::nullopt;  // M is projective
    return IntervalModule{K.vertex(static_cast<long>(M.vertex) + M.length), ci - M.length};
}

long hom_dim(const KupischSeries& K, const IntervalModule& M, const IntervalModule& N) {
    check_interval(K, M);
    check_interval(K, N);
    // Hom(M(i,k), M(j,l)) has one basis map per residual path of length t
    // from j to i with max(0, l-k) <= t < min(l, c_j).
    const int i = M.vertex, k = M.length, j = N.vertex, l = N.length;
    const int lo = std::max(0, l - k), hi = std::min(l, K.c()[j]);
    long count = 0;
    for (int t = lo; t < hi; ++t) {
        if (K.cyclic() ? (j + t - i) % K.n() == 0 : j + t == i) ++count;
    }
    return count;
}

long hom_dim(const KupischSeries& K, const ModuleList& M, const ModuleList& N) {
    long s = 0;
    for (const auto& m : M.entries)
        for (const auto& n : N.entries) s += hom_dim(K, m, n);
    return s;
}

long default_step_cap(const KupischSeries& K) { return K.dim() + 1; }

namespace {

/* One summand's (co)resolution chain. The operator is a deterministic
 * self-map of the finite interval set, so either it reaches zero or it
 * revisits a state, which proves an eventually-periodic infinite chain. */
struct Chain {
    std::vector<IntervalModule> terms;               // hulls resp. covers
    std::vector<std::optional<IntervalModule>> nexts;  // cosyzygies resp. syzygies
    bool infinite = false;
    long first_nondominant = -1;  // first non-projective (resp. non-injective) term, -1 if none
};

Chain run_chain(const KupischSeries& K, IntervalModule M, Direction dir, long cap) {
    Chain out;
    std::set<IntervalModule> seen;
    IntervalModule cur = M;
    for (long step = 0;; ++step) {
        if (step > cap)
            fail("StepCapExceeded",
                 "resolution exceeded the step cap " + std::to_string(cap) +
                     "; the cap must be at least the interval count " + std::to_string(K.dim()));
        if (seen.count(cur)) {
            out.infinite = true;
            return out;
        }
        seen.insert(cur);
        const IntervalModule term =
            dir == Direction::Injective ? injective_hull(K, cur) : projective_cover(K, cur);
        out.terms.push_back(term);
        const bool dominant =
            dir == Direction::Injective ? is_projective(K, term) : is_injective(K, term);
        if (!dominant && out.first_nondominant < 0) out.first_nondominant = step;
        const auto next = dir == Direction::Injective ? cosyzygy(K, cur) : syzygy(K, cur);
        out.nexts.push_back(next);
        if (!next) return out;
        cur = *next;
    }
}

}  // namespace

static ResolutionReport min_resolution(const KupischSeries& K, const ModuleList& M, Direction dir,
                                       long max_steps) {
    check_module_list(K, M);
    if (M.empty()) fail("EmptyModuleList", "resolution of the zero module");
    const long cap = max_steps > 0 ? max_steps : default_step_cap(K);

    std::vector<Chain> chains;
    chains.reserve(M.size());
    for (const auto& m : M.entries) chains.push_back(run_chain(K, m, dir, cap));

    ResolutionReport rep;
    rep.direction = dir;

    size_t max_len = 0;
    for (const auto& ch : chains) max_len = std::max(max_len, ch.terms.size());
    for (size_t t = 0; t < max_len; ++t) {
        ResolutionStep step;
        for (const auto& ch : chains) {
            if (t >= ch.terms.size()) continue;
            step.term.add(ch.terms[t]);
            if (ch.nexts[t]) step.next.add(*ch.nexts[t]);
        }
        rep.steps.push_back(std::move(step));
    }

    std::vector<ExtNat> lengths, prefixes;
    for (const auto& ch : chains) {
        lengths.push_back(ch.infinite ? ExtNat::infinity()
                                      : ExtNat::finite(static_cast<long>(ch.terms.size()) - 1));
        prefixes.push_back(ch.first_nondominant < 0 ? ExtNat::infinity()
                                                    : ExtNat::finite(ch.first_nondominant));
        if (ch.infinite) rep.cycle_detected = true;
    }
    rep.length = ExtNat::max_of(lengths);
    rep.dominant_prefix = ExtNat::min_of(prefixes);
    return rep;
}

ResolutionReport min_injective_resolution(const KupischSeries& K, const ModuleList& M,
                                          long max_steps) {
    return min_resolution(K, M, Direction::Injective, max_steps);
}

ResolutionReport min_projective_resolution(const KupischSeries& K, const ModuleList& M,
                                           long max_steps) {
    return min_resolution(K, M, Direction::Projective, max_steps);
}

ExtNat injdim(const KupischSeries& K, const IntervalModule& M) {
    return min_injective_resolution(K, ModuleList({M})).length;
}

ExtNat projdim(const KupischSeries& K, const IntervalModule& M) {
    return min_projective_resolution(K, ModuleList({M})).length;
}

ExtNat domdim_module(const KupischSeries& K, const IntervalModule& M) {
    return min_injective_resolution(K, ModuleList({M})).dominant_prefix;
}

ExtNat domdim_algebra(const KupischSeries& K) {
    std::vector<ExtNat> per;
    for (int i = 0; i < K.n(); ++i) per.push_back(domdim_module(K, projective_at(K, i)));
    return ExtNat::min_of(per);
}

ExtNat gldim(const KupischSeries& K) {
    std::vector<ExtNat> per;
    for (int i = 0; i < K.n(); ++i) per.push_back(projdim(K, simple_at(K, i)));
    return ExtNat::max_of(per);
}

GorensteinReport gorenstein(const KupischSeries& K) {
    GorensteinReport rep;
    bool inj_all_finite = true, proj_all_finite = true;
    for (int i = 0; i < K.n(); ++i) {
        rep.injdim_projectives.push_back(injdim(K, projective_at(K, i)));
        rep.projdim_injectives.push_back(projdim(K, injective_at(K, i)));
        inj_all_finite &= rep.injdim_projectives.back().is_finite();
        proj_all_finite &= rep.projdim_injectives.back().is_finite();
    }
    rep.asymmetry = inj_all_finite != proj_all_finite;
    rep.gdim = inj_all_finite ? ExtNat::max_of(rep.injdim_projectives) : ExtNat::infinity();
    return rep;
}

std::set<int> minimal_faithful_vertices(const KupischSeries& K) {
    std::set<int> out;
    for (int i = 0; i < K.n(); ++i)
        if (is_injective(K, projective_at(K, i))) out.insert(i);
    if (out.empty()) fail_internal("Nakayama algebra without projective-injective modules");
    return out;
}

ModuleList minimal_faithful_module(const KupischSeries& K) {
    ModuleList eA;
    for (int i : minimal_faithful_vertices(K)) eA.add(projective_at(K, i));
    return eA;
}

ModuleList regular_cosyzygy(const KupischSeries& K, long i) {
    ModuleList out;
    for (int v = 0; v < K.n(); ++v) {
        std::optional<IntervalModule> cur = projective_at(K, v);
        for (long t = 0; t < i && cur; ++t) cur = cosyzygy(K, *cur);
        if (cur) out.add(*cur);
    }
    return out;
}

ModuleList canonical_tilting(const KupischSeries& K, long i) {
    const ExtNat dd = domdim_algebra(K);
    if (dd.is_infinite())
        fail("InfiniteDomdim", "canonical tilting modules need finite dominant dimension");
    if (i < 1 || i > dd.value())
        fail("IndexExceedsDomdim", "index " + std::to_string(i) + " outside [1, " +
                                       std::to_string(dd.value()) + "]");
    ModuleList T = minimal_faithful_module(K);
    for (const auto& m : regular_cosyzygy(K, i).entries) T.add(m);
    T = T.basic();
    if (static_cast<int>(T.size()) != K.n())
        fail_internal("canonical tilting module with " + std::to_string(T.size()) +
                      " summands over " + K.str());
    return T;
}

KupischSeries family_A(int n) {
    if (n < 2) fail("InvalidFamilyIndex", "the family needs n >= 2, got " + std::to_string(n));
    std::vector<int> c(static_cast<size_t>(n), 3);
    c[n - 1] = 1;
    if (n >= 2) c[n - 2] = 2;
    return validate_kupisch(c, Orientation::Linear);
}

OppositeResult opposite(const KupischSeries& K) {
    // Reversing all arrows swaps projectives with injectives; relabel so the
    // opposite quiver's arrows again run v -> v+1. On a line the map is
    // v -> n-1-v, on a cycle v -> -v (mod n).
    const int n = K.n();
    std::vector<int> cop(static_cast<size_t>(n), 0);
    std::vector<int> old_to_new(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const int nv = K.cyclic() ? (n - v) % n : n - 1 - v;
        old_to_new[v] = nv;
        cop[nv] = K.d()[v];
    }
    return OppositeResult{validate_kupisch(cop, K.orientation()), old_to_new};
}

namespace {

void enumerate_linear(int n, int max_c, std::vector<KupischSeries>& out) {
    // build right to left: c_{n-1} = 1, then c_i in [2, min(max_c, c_{i+1}+1)]
    std::vector<int> c(static_cast<size_t>(n), 1);
    std::function<void(int)> rec = [&](int i) {
        if (i < 0) {
            out.push_back(validate_kupisch(c, Orientation::Linear));
            return;
        }
        const int hi = std::min(max_c, c[i + 1] + 1);
        for (int v = 2; v <= hi; ++v) {
            c[i] = v;
            rec(i - 1);
        }
    };
    if (n >= 2) rec(n - 2);
}

void enumerate_cyclic(int n, int max_c, std::vector<KupischSeries>& out) {
    std::vector<int> c(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i < 0) {
            if (c[n - 1] <= c[0] + 1 && !(n == 1 && c[0] == 1))
                out.push_back(validate_kupisch(c, Orientation::Cyclic));
            return;
        }
        const int hi = i == n - 1 ? max_c : std::min(max_c, c[i + 1] + 1);
        for (int v = 2; v <= hi; ++v) {
            c[i] = v;
            rec(i - 1);
        }
    };
    rec(n - 1);
}

}  // namespace

std::vector<KupischSeries> enumerate_series(int max_n, int max_c) {
    std::vector<KupischSeries> out;
    for (int n = 1; n <= max_n; ++n) enumerate_linear(n, max_c, out);
    for (int n = 1; n <= max_n; ++n) enumerate_cyclic(n, max_c, out);
    return out;
}

}  // namespace nakhom
