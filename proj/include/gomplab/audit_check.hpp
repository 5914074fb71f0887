#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace gomplab {

enum class Relation { LT, LE, GT, GE };

inline const char* relation_name(Relation r) {
    switch (r) {
        case Relation::LT: return "<";
        case Relation::LE: return "<=";
        case Relation::GT: return ">";
        case Relation::GE: return ">=";
    }
    return "?";
}

/// One named inequality evaluated on a concrete instance. Strict
/// relations are accepted with a relative slack of kCheckTolerance on
/// the failing side, so exact ties on degenerate instances pass.
/// `vacuous` marks checks whose premise does not apply at this
/// iteration (for example an empty remainder set); they count as
/// passed but are reported separately.
struct AuditCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::LT;
    double margin = 0.0; // positive = satisfied with room
    bool pass = false;
    bool vacuous = false;
};

inline constexpr double kCheckTolerance = 1e-9;

/// Builds a check; `scale` anchors the relative tolerance (typically
/// the norm of the measurement or signal involved).
inline AuditCheck make_check(std::string name, double lhs, Relation rel,
                             double rhs, double scale) {
    AuditCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = rel;
    double mag = std::max({std::abs(lhs), std::abs(rhs), std::abs(scale)});
    double slack = kCheckTolerance * mag;
    switch (rel) {
        case Relation::LT:
        case Relation::LE:
            c.margin = rhs - lhs;
            break;
        case Relation::GT:
        case Relation::GE:
            c.margin = lhs - rhs;
            break;
    }
    c.pass = c.margin >= -slack;
    // Zero against zero carries no information; report as vacuously true.
    if (std::abs(lhs) <= slack && std::abs(rhs) <= slack &&
        (rel == Relation::LT || rel == Relation::GT))
        c.vacuous = true;
    return c;
}

/// A check whose premise is absent at this iteration.
inline AuditCheck make_vacuous(std::string name, double lhs = 0.0, double rhs = 0.0,
                               Relation rel = Relation::LE) {
    AuditCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = rel;
    c.margin = 0.0;
    c.pass = true;
    c.vacuous = true;
    return c;
}

/// All checks for one iteration of one instance.
struct AuditReport {
    int iteration = 0;
    std::vector<AuditCheck> checks;
    std::string instance_id;

    int failed_count() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

inline int total_failures(const std::vector<AuditReport>& reports) {
    int n = 0;
    for (const auto& r : reports) n += r.failed_count();
    return n;
}

} // namespace gomplab
