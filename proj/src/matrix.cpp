#include "ncs/matrix.hpp"

#include "ncs/errors.hpp"

namespace ncs {

AlgMatrix::AlgMatrix(const Presentation& P, std::size_t rows, std::size_t cols)
    : pres_(&P), rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw construction_error("matrix dimensions must be positive");
}

AlgMatrix AlgMatrix::identity(const Presentation& P, std::size_t n) {
    AlgMatrix m(P, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = NCPoly::one();
    return m;
}

AlgMatrix AlgMatrix::from_entries(const Presentation& P, std::size_t rows, std::size_t cols,
                                  std::vector<NCPoly> entries) {
    if (entries.size() != rows * cols) throw construction_error("entry count does not match matrix shape");
    AlgMatrix m(P, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.entries_[i] = normal_form(P, entries[i]);
    return m;
}

void AlgMatrix::set(std::size_t r, std::size_t c, const NCPoly& v) {
    entries_[r * cols_ + c] = normal_form(*pres_, v);
}

AlgMatrix AlgMatrix::operator+(const AlgMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw construction_error("matrix shape mismatch in addition");
    AlgMatrix m(*pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + o.entries_[i];
    return m;
}

AlgMatrix AlgMatrix::operator-(const AlgMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw construction_error("matrix shape mismatch in subtraction");
    AlgMatrix m(*pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] - o.entries_[i];
    return m;
}

AlgMatrix AlgMatrix::scaled(const ParamScalar& c) const {
    AlgMatrix m(*pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].scaled(c);
    return m;
}

AlgMatrix AlgMatrix::specialized(const ParamAssignment& at) const {
    AlgMatrix m(*pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].specialized(at);
    return m;
}

bool AlgMatrix::operator==(const AlgMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

AlgMatrix mat_mul(const AlgMatrix& A, const AlgMatrix& B) {
    if (&A.presentation() != &B.presentation())
        throw construction_error("matrix product across different presentations");
    if (A.cols() != B.rows()) throw construction_error("matrix product dimension mismatch");
    AlgMatrix M(A.presentation(), A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < B.cols(); ++j) {
            NCPoly sum;
            for (std::size_t k = 0; k < A.cols(); ++k) sum += A.at(i, k) * B.at(k, j);
            M.set(i, j, sum);
        }
    }
    return M;
}

MatrixReport is_idempotent(const AlgMatrix& A) {
    if (A.rows() != A.cols()) throw construction_error("idempotence requires a square matrix");
    AlgMatrix diff = mat_mul(A, A) - A;
    MatrixReport rep;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!diff.at(i, j).is_zero()) rep.failures.push_back({i, j, diff.at(i, j)});
    return rep;
}

AlgMatrix mat_adjoint(const AlgMatrix& A) {
    const Presentation& P = A.presentation();
    if (!P.has_involution()) throw construction_error("adjoint requires a *-presentation");
    AlgMatrix M(P, A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) M.set(j, i, apply_involution(P, A.at(i, j)));
    return M;
}

MatrixReport is_self_adjoint(const AlgMatrix& A) {
    AlgMatrix diff = mat_adjoint(A) - A;
    MatrixReport rep;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!diff.at(i, j).is_zero()) rep.failures.push_back({i, j, diff.at(i, j)});
    return rep;
}

AlgMatrix block_projector(const AlgMatrix& t, const AlgMatrix& ttilde, const NCPoly& Zelem) {
    const Presentation& P = t.presentation();
    if (&P != &ttilde.presentation())
        throw construction_error("block projector inputs live over different presentations");
    if (t.rows() != t.cols() || ttilde.rows() != ttilde.cols() || t.rows() != ttilde.rows())
        throw construction_error("block projector requires two square matrices of equal size");
    if (auto g = centrality_witness(P, Zelem))
        throw construction_error("Z element is not central: fails to commute with '" + *g + "'");

    std::size_t n = t.rows();
    ParamScalar half = ParamScalar::of(Rational(1, 2));
    NCPoly Z = normal_form(P, Zelem);
    AlgMatrix e(P, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                e.set(i, j, half * (NCPoly::one() + Z));
                e.set(n + i, n + j, half * (NCPoly::one() - Z));
            }
            e.set(i, n + j, half * t.at(i, j));
            e.set(n + i, j, half * ttilde.at(i, j));
        }
    }
    return e;
}

MatrixReport verify_det_condition(const AlgMatrix& t, const AlgMatrix& ttilde, const NCPoly& Zelem) {
    const Presentation& P = t.presentation();
    std::size_t n = t.rows();
    NCPoly target = NCPoly::one() - normal_form(P, Zelem * Zelem);
    AlgMatrix want(P, n, n);
    for (std::size_t i = 0; i < n; ++i) want.set(i, i, target);

    MatrixReport rep;
    AlgMatrix d1 = mat_mul(ttilde, t) - want;
    AlgMatrix d2 = mat_mul(t, ttilde) - want;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!d1.at(i, j).is_zero()) rep.failures.push_back({i, j, d1.at(i, j)});
            if (!d2.at(i, j).is_zero()) rep.failures.push_back({i, j, d2.at(i, j)});
        }
    return rep;
}

} // namespace ncs
