#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace lsg {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Inner-product signature: `plus` positive squares followed by `minus` negative ones.
struct Signature {
    int plus = 1;
    int minus = 2;

    Signature() = default;
    Signature(int plus_count, int minus_count);

    int dim() const { return plus + minus; }
    Matrix form() const;  // diagonal matrix with +1/-1 entries
    bool operator==(const Signature&) const = default;
};

class SignedVector {
public:
    SignedVector(Signature sig, Vector coords);

    const Signature& signature() const { return sig_; }
    const Vector& coords() const { return coords_; }
    double operator[](int i) const { return coords_[i]; }
    int size() const { return static_cast<int>(coords_.size()); }

private:
    Signature sig_;
    Vector coords_;
};

double inner(const SignedVector& x, const SignedVector& y);

struct MembershipResult {
    bool ok = false;
    double residual = 0.0;
};

// Checks max|L^T I L - I| <= tol for the signature form I.
MembershipResult is_lie_transform(const Matrix& m, const Signature& sig, double tol = 1e-9);

class LieTransform {
public:
    // Throws if the matrix is not in the group at `tol`.
    LieTransform(Matrix m, Signature sig, double tol = 1e-9);

    static LieTransform identity(Signature sig);

    const Matrix& matrix() const { return m_; }
    const Signature& signature() const { return sig_; }
    SignedVector apply(const SignedVector& x) const;

private:
    Matrix m_;
    Signature sig_;
};

// exp of a seeded I-skew generator rescaled to Frobenius norm `scale`.
LieTransform random_lie_transform(const Signature& sig, std::uint64_t seed, double scale);

// Scaling and squaring: 10 squarings around a degree-8 Taylor core.
Matrix expm(const Matrix& x);

LieTransform compose(const LieTransform& a, const LieTransform& b);
LieTransform invert(const LieTransform& a);

}  // namespace lsg
