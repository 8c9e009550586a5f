#pragma once

#include <vector>

#include "ncs/presentation.hpp"

namespace ncs {

// Failing entry of a matrix identity check, with the nonzero residual.
struct EntryResidual {
    std::size_t row, col;
    NCPoly residual;
};

struct MatrixReport {
    std::vector<EntryResidual> failures;
    bool pass() const { return failures.empty(); }
};

// Rectangular matrix with normal-form entries over one presentation.
class AlgMatrix {
public:
    AlgMatrix(const Presentation& P, std::size_t rows, std::size_t cols);
    static AlgMatrix identity(const Presentation& P, std::size_t n);
    static AlgMatrix from_entries(const Presentation& P, std::size_t rows, std::size_t cols,
                                  std::vector<NCPoly> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Presentation& presentation() const { return *pres_; }

    const NCPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const NCPoly& v);

    AlgMatrix operator+(const AlgMatrix& o) const;
    AlgMatrix operator-(const AlgMatrix& o) const;
    AlgMatrix scaled(const ParamScalar& c) const;
    AlgMatrix specialized(const ParamAssignment& at) const;

    bool operator==(const AlgMatrix& o) const;

private:
    const Presentation* pres_;
    std::size_t rows_, cols_;
    std::vector<NCPoly> entries_;
};

// Entry products taken A-entry times B-entry, then reduced.
AlgMatrix mat_mul(const AlgMatrix& A, const AlgMatrix& B);

// Entrywise check of A*A == A; reports every failing entry.
MatrixReport is_idempotent(const AlgMatrix& A);

// Transpose combined with the entrywise involution.
AlgMatrix mat_adjoint(const AlgMatrix& A);

MatrixReport is_self_adjoint(const AlgMatrix& A);

// (1/2) [[1+Z, t], [ttilde, 1-Z]] with Z-multiples on the diagonal blocks.
// Requires Zelem central; does NOT assume ttilde*t = t*ttilde = 1 - Z^2.
AlgMatrix block_projector(const AlgMatrix& t, const AlgMatrix& ttilde, const NCPoly& Zelem);

// Checks ttilde*t == t*ttilde == (1 - Z^2) * I entrywise.
MatrixReport verify_det_condition(const AlgMatrix& t, const AlgMatrix& ttilde, const NCPoly& Zelem);

} // namespace ncs
