#pragma once

#include <Eigen/Dense>

#include "gomplab/index_set.hpp"

namespace gomplab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A length-n signal with explicit support and the values on it.
/// `values(i)` is the coefficient of column `support[i]`.
struct SparseSignal {
    int length = 0;
    IndexSet support;
    Vector values;

    Vector dense() const {
        Vector x = Vector::Zero(length);
        for (int i = 0; i < support.size(); ++i) x(support[i]) = values(i);
        return x;
    }

    int sparsity() const { return support.size(); }
};

/// True when every nonzero magnitude strictly exceeds the maximum
/// magnitude divided by gamma.
inline bool satisfies_gamma(const SparseSignal& s, double gamma) {
    if (s.support.empty()) return true;
    double lo = s.values.cwiseAbs().minCoeff();
    double hi = s.values.cwiseAbs().maxCoeff();
    return lo > hi / gamma;
}

} // namespace gomplab
