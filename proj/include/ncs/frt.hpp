#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncs/matrix.hpp"
#include "ncs/presentation.hpp"

namespace ncs {

// n^2 x n^2 matrix of coefficients acting on V (x) V. Entry R^{ij}_{kl} sits
// at flat row (i*n + j), flat column (k*n + l), indices 0-based.
class RMatrix {
public:
    explicit RMatrix(int n);

    int n() const { return n_; }
    int flat_dim() const { return n_ * n_; }

    const ParamScalar& at(int i, int j, int k, int l) const;
    void set(int i, int j, int k, int l, const ParamScalar& v);

    RMatrix scaled(const ParamScalar& c) const;
    bool operator==(const RMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

private:
    int n_;
    std::vector<ParamScalar> entries_;
};

// Standard GL_q(n) Yang-Baxter solution
//   R = q sum_i E_ii (x) E_ii + sum_{i != j} E_ii (x) E_jj
//       + (q - q^{-1}) sum_{i > j} E_ij (x) E_ji,
// with the conventional q^{-1/n} prefactor dropped (both the YBE and the
// RTT relations are invariant under rescaling R).
RMatrix standard_R(int n);

struct YbeMismatch {
    int row, col; // indices into the n^3-dimensional space
    ParamScalar lhs, rhs;
};
struct YbeReport {
    std::vector<YbeMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

// Compares R12 R13 R23 with R23 R13 R12 on V (x) V (x) V entrywise.
YbeReport ybe_check(const RMatrix& R);

// The n^4 entries of R t1 t2 - t2 t1 R as free quadratic polynomials over
// the generators t_ij (generator id = i*n + j, row-major).
std::vector<NCPoly> rtt_relations(const RMatrix& R);

std::string t_generator_name(int n, int i, int j);

// FRT algebra A(R): the RTT relations are linearly inter-reduced (row
// echelon over deglex-ordered quadratic words, precedence t11 < t12 < ...
// row-major) and the pivots oriented into rewrite rules.
struct QuantumMatrixAlgebra {
    int n = 0;
    RMatrix R;
    std::shared_ptr<const Presentation> pres;
    const Presentation& presentation() const { return *pres; }

    // The matrix of generators t.
    AlgMatrix generator_matrix() const;
};

// Throws construction_error if the YBE fails or the oriented system is not
// confluent (witness in the message).
QuantumMatrixAlgebra make_quantum_matrix_algebra(const RMatrix& R);

// Quantum-minor matrix ttilde:
//   ttilde_ij = (-q)^{i-j} sum_{sigma in S_{n-1}} (-q)^{len(sigma)}
//               t_{j_1 i_sigma(1)} ... t_{j_{n-1} i_sigma(n-1)},
// rows {j_1 < ...} the complement of j, columns the complement of i.
AlgMatrix tilde_matrix(const QuantumMatrixAlgebra& Q);

struct QuantumDetReport {
    NCPoly det; // nf((t ttilde)_{11})
    std::vector<EntryResidual> scalar_matrix_failures; // t ttilde / ttilde t vs det * I
    std::optional<std::string> centrality_witness_name;
    bool matches_permutation_sum = false; // informational
    NCPoly permutation_sum;
    bool pass() const { return scalar_matrix_failures.empty() && !centrality_witness_name; }
};

// D = nf((t ttilde)_{11}); verifies t ttilde = ttilde t = D I and that D is
// central; compares D against the row permutation sum as a side report.
QuantumDetReport quantum_det(const QuantumMatrixAlgebra& Q);

struct StarStructureResult {
    std::shared_ptr<const Presentation> pres; // involution installed iff consistent
    bool consistent = false;
    bool n1_anomaly = false; // ttilde_11 = 1 degenerates for n = 1
    std::string witness;     // first offending generator or relation
};

// Involution candidate t_ij -> nf(ttilde_ji); checks self-inverse on
// generators and preservation of every relation.
StarStructureResult star_quantum_matrices(const QuantumMatrixAlgebra& Q);

struct FrtSphereResult {
    std::shared_ptr<const Presentation> pres; // A(R) + central Z, det_q = 1 - Z^2
    AlgMatrix t;
    AlgMatrix ttilde;
    AlgMatrix projector; // 2n x 2n block projector, idempotence verified
    NCPoly det;
    bool star_consistent = false;
};

// Adjoins central Z with det_q(t) = 1 - Z^2 and builds the block projector.
// Confluence or idempotence failure is fatal (construction_error).
FrtSphereResult sphere_from_frt(const QuantumMatrixAlgebra& Q);

} // namespace ncs
