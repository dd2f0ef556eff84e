#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "nakhom/matrix.hpp"
#include "nakhom/scalgebra.hpp"

namespace nakhom {

/* One basis map of End(⊕ M_s): left multiplication by the residual path of
 * length `shift` from the target's vertex, as a map M_src -> M_tgt. The
 * shift ranges over max(0, l-k) <= t < min(l, c_j) with j + t = src vertex. */
struct HomBasisElement {
    int src = 0;
    int tgt = 0;
    int shift = 0;
};

/* End_A(M) for a basic list of interval modules, as a structure-constant
 * algebra with 0/1 constants. Products compose maps: a*b applies b first,
 * so e_s B e_t is Hom(M_t, M_s) and quiver arrows read s -> t there. */
struct EndoAlgebra {
    KupischSeries base;
    ModuleList summands;                  // canonically ordered, basic
    std::shared_ptr<SCAlgebra> algebra;   // basis = HomBasisElements
    std::vector<HomBasisElement> labels;  // basis index -> (src, tgt, shift)
    bool dropped_duplicates = false;

    long dim() const { return algebra->dim(); }
};

EndoAlgebra build_endo(const KupischSeries& K, const ModuleList& modules);

/* The matrix of the basis map (src, tgt, shift) on interval bases. */
Matrix<Rational> interval_hom_matrix(const KupischSeries& K, const IntervalModule& src,
                                     const IntervalModule& tgt, int shift);

std::vector<std::vector<long>> cartan_matrix(const EndoAlgebra& E);

struct QuiverRelation {
    // sum of coeff * (arrow index sequence), evaluating to zero in the algebra
    std::vector<std::pair<Rational, std::vector<int>>> terms;
};

struct QuiverPresentation {
    std::vector<std::string> vertex_labels;        // one per summand
    std::vector<std::array<int, 2>> arrows;        // (from, to) per arrow
    std::vector<std::vector<long>> arrow_count;    // entry (s,t) = #arrows s -> t
    std::vector<std::vector<long>> cartan;
    bool has_relations = false;
    std::vector<QuiverRelation> relations;
    long quotient_dim = 0;      // of the path algebra modulo the relations
    bool certificate_ok = false;  // quotient_dim == dim E and paths exhausted
};

/* Arrow counts from rad/rad^2 by exact bookkeeping inside the 0/1 algebra. */
QuiverPresentation quiver(const EndoAlgebra& E);

/* Degreewise relation extraction with the dimension-equality certificate.
 * degree_cap = 0 uses the radical nilpotency index. Errors with CapTooSmall
 * if paths survive past the cap or the spanning count exceeds dim E. */
QuiverPresentation relations(const EndoAlgebra& E, int degree_cap = 0);

/* Multi-digraph isomorphism on arrow-count matrices (vertex relabeling). */
bool digraph_isomorphic(const std::vector<std::vector<long>>& a,
                        const std::vector<std::vector<long>>& b);

}  // namespace nakhom
