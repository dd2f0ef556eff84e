#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nakhom/kupisch.hpp"
#include "nakhom/scalar.hpp"

namespace nakhom {

/* Sparse element of an algebra: list of (basis index, coefficient). */
using SparseVec = std::vector<std::pair<int, Rational>>;

/* A finite-dimensional associative algebra given by basis, structure
 * constants, a complete set of primitive orthogonal idempotents and a basis
 * of the Jacobson radical. Construction always verifies associativity on
 * all basis triples, the idempotent axioms, that the radical spans a
 * nilpotent two-sided ideal, and that idempotents and radical partition the
 * basis. The radical is input data, not computed: every construction path
 * in this toolkit knows its radical and verifying is cheap.
 *
 * Structure constants are stored over Q; prime-field computations reduce
 * them mod p on entry. */
class SCAlgebra {
public:
    SCAlgebra(int dim, std::vector<std::string> basis_labels,
              std::vector<std::vector<SparseVec>> mult, std::vector<int> idempotents,
              std::vector<int> radical_basis, FieldSpec field = FieldSpec::rationals());

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<int>& idempotents() const { return idempotents_; }
    const std::vector<int>& radical_basis() const { return radical_; }
    const FieldSpec& field() const { return field_; }

    const SparseVec& product(int a, int b) const { return mult_[a][b]; }

    /* Monomial algebras (every product is 0 or a single basis element with
     * coefficient 1) admit integer-only fast paths; both algebras this
     * toolkit constructs are monomial. product_index is -1 for zero. */
    bool is_monomial() const { return monomial_; }
    int product_index(int a, int b) const { return mono_[static_cast<size_t>(a) * dim_ + b]; }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;

    /* Smallest m with J^m = 0. */
    int radical_nilpotency_index() const { return nilpotency_; }

    SCAlgebra opposite() const;

    std::string to_json_string(int indent = -1) const;
    static SCAlgebra from_json_string(const std::string& text);

private:
    void verify();

    int dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVec>> mult_;
    std::vector<int> idempotents_;
    std::vector<int> radical_;
    FieldSpec field_;
    bool monomial_ = false;
    std::vector<int> mono_;  // dim*dim product table when monomial
    int nilpotency_ = 0;
};

/* Path-basis model of the Nakayama algebra of K: basis p(i,t) for
 * 0 <= t < c_i, p(i,s) * p(i+s,t) = p(i,s+t) when s+t < c_i, else zero.
 * Idempotents are the lazy paths p(i,0); labels are "e(i)" and "p(i,t)". */
SCAlgebra nakayama_to_sc(const KupischSeries& K, FieldSpec field = FieldSpec::rationals());

/* Basis index of p(i,t) in nakayama_to_sc(K). */
int path_index(const KupischSeries& K, int i, int t);

}  // namespace nakhom
