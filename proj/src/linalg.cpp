#include "qfano/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qfano/errors.hpp"

namespace qfano {

namespace {

constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kHermitianTol = 1e-10;
constexpr double kGramSchmidtSkipTol = 1e-8;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double real_checked(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) {
        throw consistency_error("imaginary residue " + std::to_string(z.imag()) +
                                " exceeds tolerance; Hermiticity broken upstream");
    }
    return z.real();
}

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {
    require(dim > 0, "matrix dim must be positive");
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), e_(std::move(entries)) {
    require(dim > 0, "matrix dim must be positive");
    require(e_.size() == static_cast<size_t>(dim) * dim,
            "entry count does not match dim*dim");
    for (const Complex& z : e_) {
        require(std::isfinite(z.real()) && std::isfinite(z.imag()),
                "matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require(dim_ == other.dim_, "dimension mismatch");
    double worst = 0.0;
    for (size_t k = 0; k < e_.size(); ++k)
        worst = std::max(worst, std::abs(e_[k] - other.e_[k]));
    return worst;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.dim() == b.dim(), "dimension mismatch");
    ComplexMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.dim() == b.dim(), "dimension mismatch");
    ComplexMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.dim() == b.dim(), "dimension mismatch");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out(i, j) = s * a(i, j);
    return out;
}

CVector operator*(const ComplexMatrix& a, const CVector& v) {
    require(static_cast<size_t>(a.dim()) == v.size(), "dimension mismatch");
    CVector out(v.size());
    for (int i = 0; i < a.dim(); ++i) {
        Complex s = 0.0;
        for (int j = 0; j < a.dim(); ++j) s += a(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

Complex inner(const CVector& a, const CVector& b) {
    require(a.size() == b.size(), "dimension mismatch");
    Complex s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

double norm(const CVector& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix outer(const CVector& a, const CVector& b) {
    require(a.size() == b.size(), "dimension mismatch");
    const int n = static_cast<int>(a.size());
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = a[static_cast<size_t>(i)] * std::conj(b[static_cast<size_t>(j)]);
    return out;
}

CVector EigenDecomposition::eigenvector(int k) const {
    CVector v(static_cast<size_t>(eigenvectors.dim()));
    for (int i = 0; i < eigenvectors.dim(); ++i) v[static_cast<size_t>(i)] = eigenvectors(i, k);
    return v;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

CVector tensor_product(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
    return out;
}

ComplexMatrix partial_trace_R(const ComplexMatrix& m, int d_r, int d_q) {
    require(m.dim() == d_r * d_q, "partial_trace_R: dim(m) != dR*dQ");
    ComplexMatrix out(d_q);
    for (int i = 0; i < d_q; ++i)
        for (int j = 0; j < d_q; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < d_r; ++k) s += m(k * d_q + i, k * d_q + j);
            out(i, j) = s;
        }
    return out;
}

ComplexMatrix partial_trace_Q(const ComplexMatrix& m, int d_r, int d_q) {
    require(m.dim() == d_r * d_q, "partial_trace_Q: dim(m) != dR*dQ");
    ComplexMatrix out(d_r);
    for (int i = 0; i < d_r; ++i)
        for (int j = 0; j < d_r; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < d_q; ++k) s += m(i * d_q + k, j * d_q + k);
            out(i, j) = s;
        }
    return out;
}

namespace {

double max_offdiag(const ComplexMatrix& a) {
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) worst = std::max(worst, std::abs(a(i, j)));
    return worst;
}

// Zero a(p,q) with the unitary that is identity outside the (p,q) plane and
// [[c, -s*e^{i phi}], [s*e^{-i phi}, c]] inside it, phi = arg a(p,q).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag < kJacobiOffTol * 1e-2) return;

    const Complex phase = apq / mag;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    // A <- J^dag A J, columns then rows
    for (int k = 0; k < n; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + s * std::conj(phase) * akq;
        a(k, q) = -s * phase * akp + c * akq;
    }
    for (int k = 0; k < n; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + s * phase * aqk;
        a(q, k) = -s * std::conj(phase) * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    for (int k = 0; k < n; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + s * std::conj(phase) * vkq;
        v(k, q) = -s * phase * vkp + c * vkq;
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_hermitian(kHermitianTol)) {
        throw std::invalid_argument("hermitian_eig: input not Hermitian within 1e-10");
    }
    const int n = m.dim();
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = max_offdiag(a) < kJacobiOffTol;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        converged = max_offdiag(a) < kJacobiOffTol;
    }
    if (!converged) {
        throw std::runtime_error("hermitian_eig: no convergence in 100 sweeps");
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[static_cast<size_t>(k)]);
    }
    return out;
}

std::vector<CVector> complete_orthonormal_basis(const CVector& v, int dim) {
    require(static_cast<int>(v.size()) == dim, "vector length does not match dim");
    require(std::abs(norm(v) - 1.0) <= 1e-10, "input vector must have unit norm");

    std::vector<CVector> basis;
    basis.reserve(static_cast<size_t>(dim));
    basis.push_back(v);

    for (int cand = 0; cand < dim && static_cast<int>(basis.size()) < dim; ++cand) {
        CVector w(static_cast<size_t>(dim), Complex{});
        w[static_cast<size_t>(cand)] = 1.0;
        // two Gram-Schmidt passes for orthogonality at the 1e-12 level
        for (int pass = 0; pass < 2; ++pass) {
            for (const CVector& b : basis) {
                const Complex proj = inner(b, w);
                for (size_t k = 0; k < w.size(); ++k) w[k] -= proj * b[k];
            }
        }
        const double r = norm(w);
        if (r < kGramSchmidtSkipTol) continue;
        for (Complex& z : w) z /= r;
        basis.push_back(std::move(w));
    }
    if (static_cast<int>(basis.size()) != dim) {
        throw std::runtime_error("complete_orthonormal_basis: span not completed");
    }
    return basis;
}

double real_checked_trace(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.dim() == b.dim(), "dimension mismatch");
    Complex t = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
    return real_checked(t);
}

}  // namespace qfano
