#include "nakhom/scalgebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "nakhom/errors.hpp"
#include "nakhom/matrix.hpp"

namespace nakhom {

using json = nlohmann::ordered_json;

namespace {

SparseVec normalize(SparseVec v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [idx, coef] : v) {
        if (!out.empty() && out.back().first == idx) out.back().second += coef;
        else out.emplace_back(idx, coef);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    return out;
}

}  // namespace

SCAlgebra::SCAlgebra(int dim, std::vector<std::string> basis_labels,
                     std::vector<std::vector<SparseVec>> mult, std::vector<int> idempotents,
                     std::vector<int> radical_basis, FieldSpec field)
    : dim_(dim),
      labels_(std::move(basis_labels)),
      mult_(std::move(mult)),
      idempotents_(std::move(idempotents)),
      radical_(std::move(radical_basis)),
      field_(field) {
    if (dim_ <= 0) fail("InvalidAlgebra", "dimension must be positive");
    if (static_cast<int>(labels_.size()) != dim_ ||
        static_cast<int>(mult_.size()) != dim_)
        fail("InvalidAlgebra", "basis/multiplication table size mismatch");
    for (auto& row : mult_) {
        if (static_cast<int>(row.size()) != dim_)
            fail("InvalidAlgebra", "multiplication table row size mismatch");
        for (auto& cell : row) cell = normalize(std::move(cell));
    }
    verify();
}

SparseVec SCAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseVec acc;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            for (const auto& [c, k] : mult_[a][b]) acc.emplace_back(c, ca * cb * k);
    return normalize(std::move(acc));
}

void SCAlgebra::verify() {
    // basis partition
    std::vector<int> kind(dim_, 0);  // 1 idempotent, 2 radical
    for (int e : idempotents_) {
        if (e < 0 || e >= dim_ || kind[e]) fail("InvalidAlgebra", "bad idempotent list");
        kind[e] = 1;
    }
    for (int r : radical_) {
        if (r < 0 || r >= dim_ || kind[r]) fail("InvalidAlgebra", "bad radical list");
        kind[r] = 2;
    }
    for (int i = 0; i < dim_; ++i)
        if (!kind[i])
            fail("InvalidAlgebra",
                 "basis element " + std::to_string(i) + " neither idempotent nor radical");
    if (idempotents_.empty()) fail("InvalidAlgebra", "no idempotents listed");

    // monomial fast path detection
    monomial_ = true;
    mono_.assign(static_cast<size_t>(dim_) * dim_, -1);
    for (int a = 0; a < dim_ && monomial_; ++a)
        for (int b = 0; b < dim_; ++b) {
            const SparseVec& p = mult_[a][b];
            if (p.empty()) continue;
            if (p.size() == 1 && p[0].second == Rational(1))
                mono_[static_cast<size_t>(a) * dim_ + b] = p[0].first;
            else {
                monomial_ = false;
                break;
            }
        }
    if (!monomial_) mono_.clear();

    // associativity on all basis triples
    if (monomial_) {
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b) {
                const int ab = product_index(a, b);
                for (int c = 0; c < dim_; ++c) {
                    const int bc = product_index(b, c);
                    const int left = ab < 0 ? -1 : product_index(ab, c);
                    const int right = bc < 0 ? -1 : product_index(a, bc);
                    if (left != right)
                        fail("InvalidAlgebra", "associativity fails on triple (" +
                                                   std::to_string(a) + "," + std::to_string(b) +
                                                   "," + std::to_string(c) + ")");
                }
            }
    } else {
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b) {
                const SparseVec ab = mult_[a][b];
                for (int c = 0; c < dim_; ++c) {
                    SparseVec left = multiply(ab, {{c, Rational(1)}});
                    SparseVec right = multiply({{a, Rational(1)}}, mult_[b][c]);
                    if (left != right)
                        fail("InvalidAlgebra", "associativity fails on triple (" +
                                                   std::to_string(a) + "," + std::to_string(b) +
                                                   "," + std::to_string(c) + ")");
                }
            }
    }

    // idempotent axioms: e*e = e, e*f = 0, and sum(e_i) is a two-sided unit
    for (int e : idempotents_) {
        if (mult_[e][e] != SparseVec{{e, Rational(1)}})
            fail("InvalidAlgebra", "basis element " + std::to_string(e) + " is not idempotent");
        for (int f : idempotents_)
            if (e != f && !mult_[e][f].empty())
                fail("InvalidAlgebra", "idempotents " + std::to_string(e) + ", " +
                                           std::to_string(f) + " are not orthogonal");
    }
    SparseVec unit;
    for (int e : idempotents_) unit.emplace_back(e, Rational(1));
    unit = normalize(std::move(unit));
    for (int b = 0; b < dim_; ++b) {
        const SparseVec elem{{b, Rational(1)}};
        if (multiply(unit, elem) != elem || multiply(elem, unit) != elem)
            fail("InvalidAlgebra", "idempotents do not sum to the identity (fails on basis " +
                                       std::to_string(b) + ")");
    }

    // radical spans a two-sided ideal ...
    std::vector<bool> is_rad(dim_, false);
    for (int r : radical_) is_rad[r] = true;
    auto in_radical_span = [&](const SparseVec& v) {
        for (const auto& [idx, coef] : v)
            if (!coef.is_zero() && !is_rad[idx]) return false;
        return true;
    };
    for (int r : radical_)
        for (int b = 0; b < dim_; ++b)
            if (!in_radical_span(mult_[r][b]) || !in_radical_span(mult_[b][r]))
                fail("InvalidAlgebra", "radical span is not a two-sided ideal");

    // ... and the ideal is nilpotent
    if (monomial_) {
        std::set<int> cur(radical_.begin(), radical_.end());
        nilpotency_ = 1;
        while (!cur.empty()) {
            if (nilpotency_ > dim_ + 1) fail("InvalidAlgebra", "radical is not nilpotent");
            std::set<int> next;
            for (int a : cur)
                for (int r : radical_) {
                    const int p = product_index(a, r);
                    if (p >= 0) next.insert(p);
                }
            cur = std::move(next);
            ++nilpotency_;
        }
    } else {
        RowBasis<Rational> cur(dim_);
        for (int r : radical_) {
            std::vector<Rational> v(dim_, Rational(0));
            v[r] = Rational(1);
            cur.insert(std::move(v));
        }
        nilpotency_ = 1;
        while (cur.dim() > 0) {
            if (nilpotency_ > dim_ + 1) fail("InvalidAlgebra", "radical is not nilpotent");
            RowBasis<Rational> next(dim_);
            for (int i = 0; i < cur.dim(); ++i) {
                SparseVec x;
                for (int j = 0; j < dim_; ++j)
                    if (!cur.row(i)[j].is_zero()) x.emplace_back(j, cur.row(i)[j]);
                for (int r : radical_) {
                    SparseVec p = multiply(x, {{r, Rational(1)}});
                    std::vector<Rational> v(dim_, Rational(0));
                    for (const auto& [idx, coef] : p) v[idx] = coef;
                    next.insert(std::move(v));
                }
            }
            cur = std::move(next);
            ++nilpotency_;
        }
    }
}

SCAlgebra SCAlgebra::opposite() const {
    std::vector<std::vector<SparseVec>> m(static_cast<size_t>(dim_),
                                          std::vector<SparseVec>(static_cast<size_t>(dim_)));
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) m[a][b] = mult_[b][a];
    return SCAlgebra(dim_, labels_, std::move(m), idempotents_, radical_, field_);
}

std::string SCAlgebra::to_json_string(int indent) const {
    json j;
    j["dim"] = dim_;
    j["basis"] = labels_;
    json mult = json::array();
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) {
            if (mult_[a][b].empty()) continue;
            json terms = json::array();
            for (const auto& [idx, coef] : mult_[a][b])
                terms.push_back(json::array({idx, coef.str()}));
            mult.push_back(json::array({a, b, terms}));
        }
    j["mult"] = std::move(mult);
    j["idempotents"] = idempotents_;
    j["radical"] = radical_;
    j["field"] = field_.str();
    return indent < 0 ? j.dump() : j.dump(indent);
}

SCAlgebra SCAlgebra::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail("ParseError", std::string("bad algebra JSON: ") + e.what());
    }
    try {
        const int dim = j.at("dim").get<int>();
        auto labels = j.at("basis").get<std::vector<std::string>>();
        std::vector<std::vector<SparseVec>> mult(
            static_cast<size_t>(dim), std::vector<SparseVec>(static_cast<size_t>(dim)));
        for (const auto& entry : j.at("mult")) {
            const int a = entry.at(0).get<int>();
            const int b = entry.at(1).get<int>();
            SparseVec terms;
            for (const auto& t : entry.at(2)) {
                const int idx = t.at(0).get<int>();
                const auto& cv = t.at(1);
                terms.emplace_back(idx, cv.is_string() ? Rational::parse(cv.get<std::string>())
                                                       : Rational(cv.get<long>()));
            }
            mult.at(a).at(b) = std::move(terms);
        }
        auto idem = j.at("idempotents").get<std::vector<int>>();
        auto rad = j.at("radical").get<std::vector<int>>();
        const FieldSpec field =
            j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>())
                                : FieldSpec::rationals();
        return SCAlgebra(dim, std::move(labels), std::move(mult), std::move(idem), std::move(rad),
                         field);
    } catch (const json::exception& e) {
        fail("ParseError", std::string("bad algebra JSON: ") + e.what());
    }
}

SCAlgebra nakayama_to_sc(const KupischSeries& K, FieldSpec field) {
    const int n = K.n();
    std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + K.c()[i];
    const int dim = offset[n];

    std::vector<std::string> labels(static_cast<size_t>(dim));
    std::vector<int> idem, rad;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < K.c()[i]; ++t) {
            labels[offset[i] + t] =
                t == 0 ? "e(" + std::to_string(i) + ")"
                       : "p(" + std::to_string(i) + "," + std::to_string(t) + ")";
            (t == 0 ? idem : rad).push_back(offset[i] + t);
        }

    std::vector<std::vector<SparseVec>> mult(static_cast<size_t>(dim),
                                             std::vector<SparseVec>(static_cast<size_t>(dim)));
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < K.c()[i]; ++s)
            for (int j = 0; j < n; ++j)
                for (int t = 0; t < K.c()[j]; ++t) {
                    // p(i,s) ends at i+s; composable with p(j,t) iff j = i+s
                    const bool composable =
                        K.cyclic() ? ((static_cast<long>(i) + s - j) % n + n) % n == 0
                                   : i + s == j;
                    if (!composable || s + t >= K.c()[i]) continue;
                    mult[offset[i] + s][offset[j] + t] = {{offset[i] + s + t, Rational(1)}};
                }
    return SCAlgebra(dim, std::move(labels), std::move(mult), std::move(idem), std::move(rad),
                     field);
}

int path_index(const KupischSeries& K, int i, int t) {
    if (i < 0 || i >= K.n() || t < 0 || t >= K.c()[i])
        fail_internal("path_index out of range");
    int off = 0;
    for (int v = 0; v < i; ++v) off += K.c()[v];
    return off + t;
}

}  // namespace nakhom
