#include "gomplab/oracle.hpp"

#include <Eigen/QR>

#include "gomplab/pursuit.hpp"

namespace gomplab {

L0Result l0_oracle(const Matrix& phi, const Vector& y, int sparsity,
                   std::int64_t enumeration_cap) {
    const int n = static_cast<int>(phi.cols());
    if (sparsity < 1 || sparsity > phi.rows() || sparsity > n)
        throw std::invalid_argument("l0_oracle: invalid sparsity");
    if (y.size() != phi.rows())
        throw DimensionMismatchError("l0_oracle: measurement length mismatch");
    if (binomial_capped(n, sparsity, enumeration_cap) > enumeration_cap)
        throw EnumerationTooLargeError("l0_oracle: support count exceeds cap");

    std::vector<int> comb(sparsity);
    for (int i = 0; i < sparsity; ++i) comb[i] = i;

    L0Result best;
    bool found = false;
    while (true) {
        IndexSet s(comb);
        ++best.supports_evaluated;
        try {
            Matrix sub = columns(phi, s);
            Vector z = least_squares(sub, y);
            double res = (y - sub * z).norm();
            if (!found || res < best.residual_norm) {
                best.support = s;
                best.coefficients = z;
                best.residual_norm = res;
                found = true;
            }
        } catch (const RankDeficientError&) {
            ++best.rank_deficient_skipped;
        }

        int i = sparsity - 1;
        while (i >= 0 && comb[i] == n - sparsity + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < sparsity; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!found)
        throw RankDeficientError("l0_oracle: every support was rank deficient");
    return best;
}

AlphaBeta alpha_beta(const Matrix& phi, const SparseSignal& truth,
                     const IndexSet& /*support*/, const Vector& residual, int n_select) {
    const int n = static_cast<int>(phi.cols());
    if (n_select > n - truth.support.size())
        throw InsufficientCandidatesError("alpha_beta: fewer incorrect indices than requested");

    Vector corr = correlations(phi, residual);
    AlphaBeta out;
    for (int i : truth.support) out.beta_1 = std::max(out.beta_1, corr(i));
    out.top_incorrect = select_top_n(corr, n_select, truth.support);
    double lo = std::numeric_limits<double>::infinity();
    for (int j : out.top_incorrect) lo = std::min(lo, corr(j));
    out.alpha_n = out.top_incorrect.empty() ? 0.0 : lo;
    return out;
}

bool two_k_columns_independent(const Matrix& phi, int sparsity,
                               std::int64_t enumeration_cap) {
    const int n = static_cast<int>(phi.cols());
    const int size = 2 * sparsity;
    if (size > phi.rows() || size > n) return false;
    if (binomial_capped(n, size, enumeration_cap) > enumeration_cap)
        throw EnumerationTooLargeError("two_k_columns_independent: too many subsets");

    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
        Matrix sub = columns(phi, IndexSet(comb));
        Eigen::ColPivHouseholderQR<Matrix> qr(sub);
        const auto& qrm = qr.matrixQR();
        double largest = std::abs(qrm(0, 0));
        if (largest == 0.0) return false;
        for (int i = 0; i < size; ++i) {
            if (std::abs(qrm(i, i)) < kRankTolerance * largest) return false;
        }

        int i = size - 1;
        while (i >= 0 && comb[i] == n - size + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
    return true;
}

} // namespace gomplab
