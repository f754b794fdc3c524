#include "cyclokin/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cyclokin/errors.hpp"

namespace cyclokin {

namespace {

std::array<Expr, 3> parse_triple(const nlohmann::json& arr, const std::string& field) {
    if (!arr.is_array() || arr.size() != 3)
        throw SchemaError("field '" + field + "' must be an array of exactly 3 expression strings");
    std::array<Expr, 3> out{Expr::constant(0.0), Expr::constant(0.0), Expr::constant(0.0)};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!arr[i].is_string())
            throw SchemaError("field '" + field + "' entries must be strings");
        out[i] = parse_expression(arr[i].get<std::string>());
    }
    return out;
}

} // namespace

std::string to_string(CrossSumStatus s) {
    switch (s) {
    case CrossSumStatus::ExactlyZero: return "exactly zero";
    case CrossSumStatus::NumericallyZero: return "numerically zero";
    case CrossSumStatus::Violated: return "violated";
    }
    return {};
}

Curve parse_curve(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("curve document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("curve document must be a JSON object");
    if (!doc.contains("components")) throw SchemaError("missing field 'components'");
    Curve curve;
    curve.components = parse_triple(doc["components"], "components");
    if (doc.contains("translation"))
        curve.translation = parse_triple(doc["translation"], "translation");
    if (!doc.contains("domain")) throw SchemaError("missing field 'domain'");
    const auto& dom = doc["domain"];
    if (!dom.is_array() || dom.size() != 2 || !dom[0].is_number() || !dom[1].is_number())
        throw SchemaError("field 'domain' must be an array [t_lo, t_hi] of numbers");
    curve.t_lo = dom[0].get<double>();
    curve.t_hi = dom[1].get<double>();
    if (!(curve.t_lo <= curve.t_hi)) throw SchemaError("domain is empty: t_lo > t_hi");
    return curve;
}

Curve load_curve(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open curve file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve(buf.str());
}

Curve spherical_circle(int sign, double phase) {
    if (sign != 1 && sign != -1)
        throw UnknownNameError("spherical_circle sign must be +1 or -1");
    const double s = static_cast<double>(sign);
    const double rho = std::sqrt(2.0 / 3.0);
    const std::array<double, 3> center{s / 3.0, s / 3.0, s / 3.0};
    const std::array<double, 3> u{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
    const std::array<double, 3> v{1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0),
                                  -2.0 / std::sqrt(6.0)};
    const Expr arg = phase == 0.0 ? Expr::variable()
                                  : Expr::variable() - Expr::constant(phase);
    Curve curve;
    for (std::size_t i = 0; i < 3; ++i) {
        curve.components[i] = Expr::constant(center[i]) +
                              Expr::constant(rho * u[i]) * cos(arg) +
                              Expr::constant(rho * v[i]) * sin(arg);
    }
    curve.t_lo = 0.0;
    curve.t_hi = 2.0 * std::numbers::pi;
    return curve;
}

Curve builtin(const std::string& name) {
    if (name == "ex41") {
        // The translation (t^2, 0, 0) is an artifact choice: with C = 0
        // every pole and acceleration center sits at the origin.
        return parse_curve(R"({
            "components": ["t", "1 - t", "t^2 - t"],
            "translation": ["t^2", "0", "0"],
            "domain": [-2, 3]
        })");
    }
    if (name == "ex51") {
        return parse_curve(R"json({
            "components": ["(1+t)/(1+t+t^2)", "-t/(1+t+t^2)", "(t^2+t)/(1+t+t^2)"],
            "domain": [-5, 5]
        })json");
    }
    if (name == "circle_plus") return spherical_circle(+1, 0.0);
    if (name == "circle_minus") return spherical_circle(-1, 0.0);
    throw UnknownNameError("unknown built-in curve '" + name + "'");
}

AdmissibilityReport validate(const Curve& curve, int samples) {
    if (samples < 2) throw Error("validate requires at least 2 samples");

    AdmissibilityReport report;

    // Exact path: expand the cross-sum of rational components and test
    // the numerator coefficients. Sampling alone cannot certify the
    // "for every t" identity.
    const auto r1 = to_rational(curve.components[0]);
    const auto r2 = to_rational(curve.components[1]);
    const auto r3 = to_rational(curve.components[2]);
    bool exactly_zero = false;
    if (r1 && r2 && r3) {
        const RationalFunction cross = *r1 * *r2 + *r2 * *r3 + *r3 * *r1;
        report.cross_sum_numerator = cross.num;
        exactly_zero = cross.num.is_zero();
    }

    double norm_min = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    double max_rel = 0.0;
    double worst_t = curve.t_lo;
    double worst_value = 0.0;
    double max_sphere_dev = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double t = curve.t_lo + (curve.t_hi - curve.t_lo) * static_cast<double>(k) /
                                          static_cast<double>(samples - 1);
        const Vec3 a = curve.point(t);
        curve.translation_point(t); // surface DomainErrors in C(t) too
        const double cross = a.x * a.y + a.y * a.z + a.z * a.x;
        const double h2 = a.dot(a);
        const double h = std::sqrt(h2);
        norm_min = std::min(norm_min, h);
        max_abs = std::max(max_abs, std::abs(cross));
        const double rel = std::abs(cross) / std::max(1.0, h2);
        if (rel >= max_rel) {
            max_rel = rel;
            worst_t = t;
            worst_value = cross;
        }
        max_sphere_dev = std::max(max_sphere_dev, std::abs(h - 1.0));
    }

    report.norm_min = norm_min;
    if (norm_min <= 1e-12)
        throw OriginError("curve passes through the origin: min |alpha(t)| = " +
                          std::to_string(norm_min));

    report.max_abs = max_abs;
    report.spherical = max_sphere_dev <= 1e-9;
    if (exactly_zero) {
        report.cross_sum = CrossSumStatus::ExactlyZero;
    } else if (max_rel <= 1e-9) {
        report.cross_sum = CrossSumStatus::NumericallyZero;
    } else {
        report.cross_sum = CrossSumStatus::Violated;
        report.worst_t = worst_t;
        report.worst_value = worst_value;
    }
    return report;
}

} // namespace cyclokin
