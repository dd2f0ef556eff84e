#pragma once

#include <string>
#include <vector>

#include "nakhom/errors.hpp"

namespace nakhom {

/* Extended natural number for homological dimensions: an exact value, exact
 * infinity, or a lower bound AtLeast(b) from a capped computation.
 *
 * The combinatorial (Kupisch) side only ever produces Finite/Infinity; the
 * linear-algebra engine produces AtLeast(b) when its step cap is hit. */
class ExtNat {
public:
    enum class Kind { Finite, Infinity, AtLeast };

    ExtNat() : kind_(Kind::Finite), v_(0) {}

    static ExtNat finite(long v) {
        if (v < 0) fail_internal("negative homological dimension");
        return ExtNat(Kind::Finite, v);
    }
    static ExtNat infinity() { return ExtNat(Kind::Infinity, 0); }
    static ExtNat at_least(long b) { return ExtNat(Kind::AtLeast, b); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinity; }
    bool is_bound() const { return kind_ == Kind::AtLeast; }
    bool is_exact() const { return kind_ != Kind::AtLeast; }

    long value() const {
        if (!is_finite()) fail_internal("value() on non-finite ExtNat");
        return v_;
    }
    long bound() const {
        if (!is_bound()) fail_internal("bound() on exact ExtNat");
        return v_;
    }

    bool operator==(const ExtNat& o) const { return kind_ == o.kind_ && v_ == o.v_; }
    bool operator!=(const ExtNat& o) const { return !(*this == o); }

    /* Three-valued comparison with an exact finite value: AtLeast(b) decides
     * the comparison only when b already exceeds the candidate. */
    bool equals_finite(long v) const { return is_finite() && v_ == v; }
    bool conclusively_differs_from(long v) const {
        if (is_finite()) return v_ != v;
        if (is_infinite()) return true;
        return v_ > v;  // value >= bound > v
    }

    /* min/max over a set of verdicts, propagating bounds soundly:
     * min is exact when the smallest exact candidate is <= every bound. */
    static ExtNat min_of(const std::vector<ExtNat>& xs);
    static ExtNat max_of(const std::vector<ExtNat>& xs);

    std::string str() const {
        switch (kind_) {
            case Kind::Finite: return std::to_string(v_);
            case Kind::Infinity: return "inf";
            default: return ">=" + std::to_string(v_);
        }
    }

private:
    ExtNat(Kind k, long v) : kind_(k), v_(v) {}
    Kind kind_;
    long v_;
};

inline ExtNat ExtNat::min_of(const std::vector<ExtNat>& xs) {
    bool have_exact = false, exact_inf = true;
    long exact_min = 0;
    bool have_bound = false;
    long bound_min = 0;
    for (const auto& x : xs) {
        if (x.is_bound()) {
            bound_min = have_bound ? std::min(bound_min, x.bound()) : x.bound();
            have_bound = true;
        } else {
            if (x.is_finite()) {
                exact_min = have_exact && !exact_inf ? std::min(exact_min, x.value()) : x.value();
                exact_inf = false;
            }
            have_exact = true;
        }
    }
    if (!have_exact && !have_bound) fail_internal("min_of on empty list");
    if (!have_bound) return exact_inf ? infinity() : finite(exact_min);
    if (have_exact && !exact_inf && exact_min <= bound_min) return finite(exact_min);
    return at_least(bound_min);
}

inline ExtNat ExtNat::max_of(const std::vector<ExtNat>& xs) {
    bool any_inf = false, any_bound = false;
    long m = 0;
    for (const auto& x : xs) {
        if (x.is_infinite()) any_inf = true;
        else if (x.is_bound()) { any_bound = true; m = std::max(m, x.bound()); }
        else m = std::max(m, x.value());
    }
    if (any_inf) return infinity();
    if (xs.empty()) fail_internal("max_of on empty list");
    return any_bound ? at_least(m) : finite(m);
}

}  // namespace nakhom
