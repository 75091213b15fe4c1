#pragma once

// Eigen glue for exact scalars: dense vector/matrix aliases templated on the
// scalar and a Gauss-Jordan inverse that never divides by anything but a
// nonzero pivot.

#include "kstab/arith.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<kstab::BigRational> : GenericNumTraits<kstab::BigRational> {
    using Real = kstab::BigRational;
    using NonInteger = kstab::BigRational;
    using Literal = kstab::BigRational;
    using Nested = kstab::BigRational;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 80
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace kstab {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<BigRational>;
using RationalMatrix = Matrix<BigRational>;

/// Exact inverse by Gauss-Jordan elimination; PreconditionError when singular.
template <typename Scalar>
Matrix<Scalar> exact_inverse(const Matrix<Scalar>& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw PreconditionError("exact_inverse: matrix is not square");
    Matrix<Scalar> a = m;
    Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
        if (pivot == n) throw PreconditionError("exact_inverse: matrix is singular");
        a.row(col).swap(a.row(pivot));
        inv.row(col).swap(inv.row(pivot));
        const Scalar p = a(col, col);
        for (Eigen::Index j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == Scalar(0)) continue;
            const Scalar f = a(r, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
    return m.template cast<BigRational>();
}

}  // namespace kstab
