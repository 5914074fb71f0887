#include "gomplab/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

namespace gomplab {

Matrix columns(const Matrix& phi, const IndexSet& s) {
    Matrix out(phi.rows(), s.size());
    for (int i = 0; i < s.size(); ++i) {
        if (s[i] >= phi.cols())
            throw DimensionMismatchError("column index out of range");
        out.col(i) = phi.col(s[i]);
    }
    return out;
}

namespace {

void check_pivots(const Eigen::ColPivHouseholderQR<Matrix>& qr, int cols) {
    const auto& qrm = qr.matrixQR();
    int k = static_cast<int>(std::min(qrm.rows(), qrm.cols()));
    double largest = std::abs(qrm(0, 0));
    if (largest == 0.0) throw RankDeficientError("zero matrix in least squares");
    for (int i = 0; i < k && i < cols; ++i) {
        if (std::abs(qrm(i, i)) < kRankTolerance * largest)
            throw RankDeficientError("pivot below rank tolerance");
    }
}

} // namespace

Vector least_squares(const Matrix& a, const Vector& y) {
    if (a.rows() < a.cols())
        throw DimensionMismatchError("least_squares: more columns than rows");
    if (y.size() != a.rows())
        throw DimensionMismatchError("least_squares: length of y does not match rows");
    Eigen::ColPivHouseholderQR<Matrix> qr(a);
    check_pivots(qr, static_cast<int>(a.cols()));
    return qr.solve(y);
}

Vector project_residual(const Matrix& phi, const IndexSet& s, const Vector& y) {
    if (s.empty())
        throw std::invalid_argument("project_residual: empty index set");
    Matrix sub = columns(phi, s);
    Vector z = least_squares(sub, y);
    return y - sub * z;
}

Vector correlations(const Matrix& phi, const Vector& r) {
    if (r.size() != phi.rows())
        throw DimensionMismatchError("correlations: length of r does not match rows");
    return (phi.transpose() * r).cwiseAbs();
}

std::pair<double, double> gram_extreme_eigs(const Matrix& phi, const IndexSet& i) {
    if (i.empty())
        throw std::invalid_argument("gram_extreme_eigs: empty index set");
    Matrix sub = columns(phi, i);
    Matrix gram = sub.transpose() * sub;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues()(0);
    double hi = es.eigenvalues()(i.size() - 1);
    if (lo < 0.0) lo = 0.0;
    if (hi < 0.0) hi = 0.0;
    return {lo, hi};
}

Matrix orthogonalize_against(const Matrix& phi, const IndexSet& i1) {
    if (i1.empty()) return phi;
    Matrix sub = columns(phi, i1);
    Eigen::ColPivHouseholderQR<Matrix> qr(sub);
    check_pivots(qr, i1.size());
    // Thin Q spanning the selected columns.
    Matrix q = qr.householderQ() * Matrix::Identity(phi.rows(), i1.size());
    return phi - q * (q.transpose() * phi);
}

} // namespace gomplab
