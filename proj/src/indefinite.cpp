#include "lsg/indefinite.hpp"

#include "lsg/errors.hpp"

#include <cmath>
#include <random>
#include <string>

namespace lsg {

Signature::Signature(int plus_count, int minus_count) : plus(plus_count), minus(minus_count) {
    if (plus < 1 || (minus != 1 && minus != 2)) {
        fail(ErrorKind::Domain, "signature (" + std::to_string(plus) + "," + std::to_string(minus) + ")");
    }
}

Matrix Signature::form() const {
    Matrix f = Matrix::Identity(dim(), dim());
    for (int i = plus; i < dim(); ++i) f(i, i) = -1.0;
    return f;
}

SignedVector::SignedVector(Signature sig, Vector coords) : sig_(sig), coords_(std::move(coords)) {
    if (coords_.size() != sig_.dim()) {
        fail(ErrorKind::SignatureMismatch, "vector length " + std::to_string(coords_.size()) +
                                                " vs signature dimension " + std::to_string(sig_.dim()));
    }
    if (!coords_.allFinite()) fail(ErrorKind::Domain, "non-finite coordinate");
}

double inner(const SignedVector& x, const SignedVector& y) {
    if (!(x.signature() == y.signature())) fail(ErrorKind::SignatureMismatch, "inner product operands");
    const int p = x.signature().plus;
    const auto& a = x.coords();
    const auto& b = y.coords();
    return a.head(p).dot(b.head(p)) - a.tail(a.size() - p).dot(b.tail(b.size() - p));
}

MembershipResult is_lie_transform(const Matrix& m, const Signature& sig, double tol) {
    if (m.rows() != m.cols()) fail(ErrorKind::Shape, "matrix is not square");
    if (m.rows() != sig.dim()) fail(ErrorKind::Shape, "matrix size does not match signature");
    const Matrix f = sig.form();
    const double r = (m.transpose() * f * m - f).cwiseAbs().maxCoeff();
    return {r <= tol, r};
}

LieTransform::LieTransform(Matrix m, Signature sig, double tol) : m_(std::move(m)), sig_(sig) {
    const auto check = is_lie_transform(m_, sig_, tol);
    if (!check.ok) {
        fail(ErrorKind::Domain, "matrix leaves the group, residual " + std::to_string(check.residual));
    }
}

LieTransform LieTransform::identity(Signature sig) {
    return LieTransform(Matrix::Identity(sig.dim(), sig.dim()), sig);
}

SignedVector LieTransform::apply(const SignedVector& x) const {
    if (!(x.signature() == sig_)) fail(ErrorKind::SignatureMismatch, "transform applied to foreign vector");
    return SignedVector(sig_, m_ * x.coords());
}

Matrix expm(const Matrix& x) {
    constexpr int squarings = 10;
    constexpr int degree = 8;
    const Matrix a = x / std::ldexp(1.0, squarings);
    Matrix term = Matrix::Identity(x.rows(), x.cols());
    Matrix sum = term;
    for (int k = 1; k <= degree; ++k) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

LieTransform random_lie_transform(const Signature& sig, std::uint64_t seed, double scale) {
    const int n = sig.dim();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Matrix skew = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            skew(i, j) = unit(rng);
            skew(j, i) = -skew(i, j);
        }
    }
    // I*skew satisfies X^T I + I X = 0.
    Matrix gen = sig.form() * skew;
    const double norm = gen.norm();
    if (scale <= 0.0 || norm == 0.0) return LieTransform::identity(sig);
    gen *= scale / norm;
    return LieTransform(expm(gen), sig);
}

LieTransform compose(const LieTransform& a, const LieTransform& b) {
    if (!(a.signature() == b.signature())) fail(ErrorKind::SignatureMismatch, "compose");
    return LieTransform(a.matrix() * b.matrix(), a.signature(), 1e-8);
}

LieTransform invert(const LieTransform& a) {
    const Matrix f = a.signature().form();
    return LieTransform(f * a.matrix().transpose() * f, a.signature(), 1e-8);
}

}  // namespace lsg
