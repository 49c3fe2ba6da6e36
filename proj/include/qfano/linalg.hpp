#pragma once

#include <complex>
#include <vector>

namespace qfano {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense square complex matrix, row-major. The workhorse for states and
// operators; dims stay small (<= ~64), so everything is O(dim^2) storage
// and O(dim^3) algorithms with no sparsity.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int dim() const { return dim_; }
    Complex& operator()(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const std::vector<Complex>& entries() const { return e_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol) const;
    double max_abs_diff(const ComplexMatrix& other) const;

private:
    int dim_ = 0;
    std::vector<Complex> e_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
CVector operator*(const ComplexMatrix& a, const CVector& v);

Complex inner(const CVector& a, const CVector& b);  // <a|b>, conjugate-linear in a
double norm(const CVector& v);
ComplexMatrix outer(const CVector& a, const CVector& b);  // |a><b|

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]

    CVector eigenvector(int k) const;
};

// Kronecker product; block (i,j) of the result is a(i,j)*b. The joint index
// convention everywhere is i_A*dim(b) + i_B (first factor is the slow index).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
CVector tensor_product(const CVector& a, const CVector& b);

// Trace out the first (slow) factor: out[i][j] = sum_k m[k*dQ+i][k*dQ+j].
ComplexMatrix partial_trace_R(const ComplexMatrix& m, int d_r, int d_q);
// Trace out the second (fast) factor: out[i][j] = sum_k m[i*dQ+k][j*dQ+k].
ComplexMatrix partial_trace_Q(const ComplexMatrix& m, int d_r, int d_q);

// Cyclic complex Jacobi rotations. Requires input Hermitian within 1e-10
// entrywise; the iteration runs on (m+m^dag)/2 until every off-diagonal
// magnitude is below 1e-13, at most 100 sweeps.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

// Orthonormal basis whose element 0 is v exactly; the rest come from
// Gram-Schmidt over the standard basis, skipping candidates whose residual
// norm falls below 1e-8.
std::vector<CVector> complete_orthonormal_basis(const CVector& v, int dim);

double real_checked_trace(const ComplexMatrix& a, const ComplexMatrix& b);  // Re Tr(a*b), imag residue checked

}  // namespace qfano
