#include "gomplab/bounds.hpp"

#include <cmath>

namespace gomplab {

namespace {

void require_positive(int n, int k) {
    if (n < 1 || k < 1)
        throw DomainError(DomainError::Kind::InvalidInput,
                          "N and K must be positive");
}

void require_delta(double d, const char* name) {
    if (!(d >= 0.0) || d >= 1.0)
        throw DomainError(DomainError::Kind::InvalidInput,
                          std::string(name) + " must lie in [0, 1)");
}

} // namespace

double theorem1_bound(int n, int k) {
    require_positive(n, k);
    double sn = std::sqrt(static_cast<double>(n));
    double sk = std::sqrt(static_cast<double>(k));
    return sn / (sk + 2.0 * sn);
}

double theorem2_bound(int n, int k) {
    require_positive(n, k);
    double sn = std::sqrt(static_cast<double>(n));
    double sk = std::sqrt(static_cast<double>(k));
    return sn / (sk + sn);
}

double c_k1(double delta_nk, double delta_k, double delta_n, double delta_nkk,
            int n, int k) {
    require_positive(n, k);
    require_delta(delta_nk, "delta_NK");
    require_delta(delta_k, "delta_K");
    require_delta(delta_n, "delta_N");
    require_delta(delta_nkk, "delta_NK+K");
    if (delta_nk >= theorem1_bound(n, k))
        throw DomainError(DomainError::Kind::InvalidInput,
                          "delta_NK must stay below the order-NK recovery threshold");

    double sn = std::sqrt(static_cast<double>(n));
    double sk = std::sqrt(static_cast<double>(k));
    double tail = std::sqrt(1.0 - delta_nkk);
    double num = (1.0 - delta_nk) *
                 (sn * (1.0 + delta_k) +
                  std::sqrt(k * (1.0 + delta_n) * (1.0 + delta_k)));
    double den = (sn - (sk + 2.0 * sn) * delta_nk) * tail;
    return num / den + 2.0 / tail;
}

double c_k1_appendix(double delta_nk, double delta_k, double delta_n,
                     double delta_nkk, int n, int k) {
    require_positive(n, k);
    require_delta(delta_nk, "delta_NK");
    require_delta(delta_k, "delta_K");
    require_delta(delta_n, "delta_N");
    require_delta(delta_nkk, "delta_NK+K");
    if (delta_nk >= theorem1_bound(n, k))
        throw DomainError(DomainError::Kind::InvalidInput,
                          "delta_NK must stay below the order-NK recovery threshold");

    double sn = std::sqrt(static_cast<double>(n));
    double sk = std::sqrt(static_cast<double>(k));
    double tail = std::sqrt(1.0 - delta_nkk);
    double num = (1.0 - delta_nk) *
                 (std::sqrt(n * (1.0 + delta_k)) + std::sqrt(k * (1.0 + delta_n)));
    double den = (sn - (sk + 2.0 * sn) * delta_nk) * tail;
    return num / den + 2.0 / tail;
}

double c_k2(double delta_nk1, double delta_k, double delta_n, double delta_nkk,
            int n, int k) {
    require_positive(n, k);
    require_delta(delta_nk1, "delta_NK+1");
    require_delta(delta_k, "delta_K");
    require_delta(delta_n, "delta_N");
    require_delta(delta_nkk, "delta_NK+K");
    if (delta_nk1 >= theorem2_bound(n, k))
        throw DomainError(DomainError::Kind::InvalidInput,
                          "delta_NK+1 must stay below the order-NK+1 recovery threshold");

    double sn = std::sqrt(static_cast<double>(n));
    double sk = std::sqrt(static_cast<double>(k));
    double tail = std::sqrt(1.0 - delta_nkk);
    double num = sn * (1.0 + delta_k) +
                 std::sqrt(k * (1.0 + delta_n) * (1.0 + delta_k));
    double den = (sn - (sk + sn) * delta_nk1) * tail;
    return num / den + 2.0 / tail;
}

double c_k3(double delta_nk, double delta_k, double delta_n, double gamma,
            int n, int k) {
    require_positive(n, k);
    require_delta(delta_nk, "delta_NK");
    require_delta(delta_k, "delta_K");
    require_delta(delta_n, "delta_N");
    if (gamma < 1.0)
        throw DomainError(DomainError::Kind::InvalidInput, "gamma must be >= 1");
    if (delta_nk >= 0.5)
        throw DomainError(DomainError::Kind::InvalidInput,
                          "delta_NK must stay below 1/2");

    double sn = std::sqrt(static_cast<double>(n));
    double num = std::sqrt(k * (1.0 + delta_n)) + std::sqrt(n * (1.0 + delta_k));
    double lead = sn * (1.0 - delta_k) * (1.0 - 2.0 * delta_nk) /
                  (gamma * std::sqrt(1.0 + delta_k) * (1.0 - delta_nk) * (1.0 - delta_nk));
    double den = lead - std::sqrt(k * (1.0 + delta_n));
    if (den <= 0.0)
        throw DomainError(DomainError::Kind::VacuousBound,
                          "threshold denominator is not positive; the bound is vacuous");
    return num / den;
}

std::vector<BoundReport> recovery_certificate(const std::vector<RipEstimate>& estimates,
                                              int n, int k) {
    require_positive(n, k);
    const int order1 = n * k;
    const int order2 = n * k + 1;

    std::vector<BoundReport> reports;
    for (const auto& est : estimates) {
        Theorem thm;
        double bound;
        if (est.order == order1) {
            thm = Theorem::T1;
            bound = theorem1_bound(n, k);
        } else if (est.order == order2) {
            thm = Theorem::T2;
            bound = theorem2_bound(n, k);
        } else {
            continue;
        }
        BoundReport rep;
        rep.theorem = thm;
        rep.required_delta_order = est.order;
        rep.bound_value = bound;
        rep.measured_delta = est.delta;
        if (est.method == RipMethod::Exact) {
            rep.satisfied = est.delta < bound;
        } else if (est.delta >= bound) {
            rep.satisfied = false; // a sampled lower bound already busts the premise
        }
        reports.push_back(rep);
    }
    if (reports.empty())
        throw MissingOrderError("recovery_certificate: no estimate of order NK or NK+1");
    return reports;
}

} // namespace gomplab
