#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclokin/circulant.hpp"
#include "cyclokin/curve.hpp"
#include "cyclokin/errors.hpp"
#include "cyclokin/motion.hpp"
#include "cyclokin/spherical.hpp"

namespace {

using namespace cyclokin;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNotAdmissible = 2;
constexpr int kOrigin = 3;
constexpr int kSingularRows = 4;
constexpr int kPrecondition = 5;

constexpr int kValidateSamples = 256;

// 17 significant digits round-trip doubles, so reruns are byte-identical.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Curve resolve_curve(const std::string& arg) {
    const std::string prefix = "@builtin:";
    if (arg.rfind(prefix, 0) == 0) return builtin(arg.substr(prefix.size()));
    return load_curve(arg);
}

std::vector<double> grid(double t0, double t1, int n) {
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        ts.push_back(n == 1 ? t0
                            : t0 + (t1 - t0) * static_cast<double>(k) /
                                       static_cast<double>(n - 1));
    }
    return ts;
}

int run_validate(const std::string& curve_arg) {
    const Curve curve = resolve_curve(curve_arg);
    AdmissibilityReport rep;
    try {
        rep = validate(curve, kValidateSamples);
    } catch (const OriginError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOrigin;
    }
    std::cout << "cross_sum: " << to_string(rep.cross_sum) << "\n";
    if (rep.cross_sum_numerator)
        std::cout << "cross_sum_numerator: " << rep.cross_sum_numerator->to_string() << "\n";
    std::cout << "max_abs: " << fmt(rep.max_abs) << "\n";
    if (!rep.admissible()) {
        std::cout << "worst_t: " << fmt(rep.worst_t) << "\n";
        std::cout << "worst_value: " << fmt(rep.worst_value) << "\n";
    }
    std::cout << "norm_min: " << fmt(rep.norm_min) << "\n";
    std::cout << "spherical: " << (rep.spherical ? "true" : "false") << "\n";
    std::cout << "admissible: " << (rep.admissible() ? "true" : "false") << "\n";
    return rep.admissible() ? kOk : kNotAdmissible;
}

double orthogonality_residual(const Circulant3& A) {
    const Mat3 D = A.dense();
    return (D.transposed() * D - Mat3::identity()).norm_inf();
}

void sweep_decompose(const Curve& curve, const std::vector<double>& ts, std::ostream& os,
                     bool& any_bad) {
    os << "t,a1,a2,a3,h,orth_residual,status\n";
    for (double t : ts) {
        const Vec3 a = curve.point(t);
        std::string status = "ok";
        double h = 0.0;
        double residual = 0.0;
        try {
            const Decomposition d = decompose({a.x, a.y, a.z});
            h = d.h;
            residual = orthogonality_residual(d.A);
        } catch (const NotAdmissibleError&) {
            status = "not_admissible";
            any_bad = true;
        }
        os << fmt(t) << ',' << fmt(a.x) << ',' << fmt(a.y) << ',' << fmt(a.z) << ',' << fmt(h)
           << ',' << fmt(residual) << ',' << status << "\n";
    }
}

void sweep_pole(const Curve& curve, const std::vector<double>& ts, std::ostream& os,
                bool& any_bad) {
    os << "t,px,py,pz,qx,qy,qz,det_Bdot,status\n";
    for (const PoleSample& s : pole_curves(curve, ts)) {
        if (s.singular) any_bad = true;
        os << fmt(s.t) << ',' << fmt(s.pole.p.x) << ',' << fmt(s.pole.p.y) << ','
           << fmt(s.pole.p.z) << ',' << fmt(s.pole.q.x) << ',' << fmt(s.pole.q.y) << ','
           << fmt(s.pole.q.z) << ',' << fmt(s.det_Bdot) << ','
           << (s.singular ? "singular" : "ok") << "\n";
    }
}

void sweep_darboux(const Curve& curve, const std::vector<double>& ts, std::ostream& os,
                   bool& any_bad) {
    os << "t,wx,wy,wz,omega,det_Sdot,status\n";
    for (double t : ts) {
        std::string status = "ok";
        Vec3 w;
        double omega = 0.0;
        double det_Sdot = 0.0;
        try {
            const SphericalFrame sf = spherical_frame(curve, t);
            const DarbouxFrame df = darboux(sf);
            w = df.omega_vec;
            omega = df.omega_scalar;
            det_Sdot = det(sf.S_dot);
        } catch (const NotSphericalError&) {
            status = "not_spherical";
            any_bad = true;
        }
        os << fmt(t) << ',' << fmt(w.x) << ',' << fmt(w.y) << ',' << fmt(w.z) << ','
           << fmt(omega) << ',' << fmt(det_Sdot) << ',' << status << "\n";
    }
}

void sweep_accel(const Curve& curve, const std::vector<double>& ts, int order, std::ostream& os,
                 bool& any_bad) {
    os << "t,order,xx,xy,xz,residual,status\n";
    for (double t : ts) {
        std::string status = "ok";
        Vec3 X;
        double residual = 0.0;
        try {
            const MotionFrame frame(curve, t, order);
            X = acceleration_center(frame, order);
            residual = (frame.B_derivative(order).apply(X) + frame.C_derivative(order)).norm();
        } catch (const SingularError&) {
            status = "singular";
            any_bad = true;
        }
        os << fmt(t) << ',' << order << ',' << fmt(X.x) << ',' << fmt(X.y) << ',' << fmt(X.z)
           << ',' << fmt(residual) << ',' << status << "\n";
    }
}

int run_sweep(const std::string& curve_arg, const std::string& mode, double t0, double t1, int n,
              int order, const std::string& out_path) {
    if (t0 > t1) {
        std::cerr << "error: --t0 must not exceed --t1\n";
        return kUsage;
    }
    if (n >= 2 && !(t0 < t1)) {
        std::cerr << "error: n >= 2 requires t0 < t1 (t column must increase)\n";
        return kUsage;
    }
    const Curve curve = resolve_curve(curve_arg);

    AdmissibilityReport rep;
    try {
        rep = validate(curve, kValidateSamples);
    } catch (const OriginError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOrigin;
    }
    if (!rep.admissible()) {
        std::cerr << "error: curve is not admissible (cross_sum violated)\n";
        return kNotAdmissible;
    }
    if (mode == "darboux" && !rep.spherical) {
        std::cerr << "error: darboux sweeps need a spherical curve (h = 1)\n";
        return kPrecondition;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return kUsage;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;

    const std::vector<double> ts = grid(t0, t1, n);
    bool any_bad = false;
    if (mode == "decompose") sweep_decompose(curve, ts, os, any_bad);
    else if (mode == "pole") sweep_pole(curve, ts, os, any_bad);
    else if (mode == "darboux") sweep_darboux(curve, ts, os, any_bad);
    else sweep_accel(curve, ts, order, os, any_bad);
    os.flush();
    return any_bad ? kSingularRows : kOk;
}

void print_matrix(const Mat3& M) {
    for (std::size_t i = 0; i < 3; ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < 3; ++j) std::cout << ' ' << fmt(M(i, j));
        std::cout << " ]\n";
    }
}

int run_demo(const std::string& name) {
    if (name != "ex41" && name != "ex51") {
        std::cerr << "error: unknown demo '" << name << "' (try ex41 or ex51)\n";
        return kUsage;
    }
    const Curve curve = builtin(name);
    std::cout << "curve " << name << ": alpha(t) = (" << curve.components[0].to_string() << ", "
              << curve.components[1].to_string() << ", " << curve.components[2].to_string()
              << ")\n";
    std::cout << "homothetic scale h and orthogonality residual |A^T A - I|:\n";
    for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
        const Vec3 a = curve.point(t);
        const Decomposition d = decompose({a.x, a.y, a.z});
        std::cout << "  h(" << fmt(t) << ") = " << fmt(d.h)
                  << "   residual = " << fmt(orthogonality_residual(d.A)) << "\n";
    }
    if (name == "ex41") {
        std::cout << "h agrees with t^2 - t + 1 at every t; the motion rescales by h and"
                     " rotates by A.\n";
    } else {
        const DarbouxFrame df = darboux(curve, 0.0);
        std::cout << "Darboux matrix Omega(0) = Sdot S^T:\n";
        print_matrix(df.Omega);
        std::cout << "omega_vec = (" << fmt(df.omega_vec.x) << ", " << fmt(df.omega_vec.y) << ", "
                  << fmt(df.omega_vec.z) << "), omega = " << fmt(df.omega_scalar) << "\n";
        std::cout << "the rotation axis stays parallel to (1,1,1): a helical motion with a"
                     " fixed axis.\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant-matrix curve kinematics"};
    app.require_subcommand(1);

    std::string validate_curve;
    CLI::App* cmd_validate = app.add_subcommand("validate", "check a curve's admissibility");
    cmd_validate->add_option("curve", validate_curve, "curve file or @builtin:<name>")
        ->required();

    std::string sweep_curve;
    std::string mode;
    double t0 = 0.0;
    double t1 = 0.0;
    int n = 0;
    int order = 1;
    std::string out_path;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "sample a motion over a t range");
    cmd_sweep->add_option("--mode", mode, "decompose | pole | darboux | accel")
        ->required()
        ->check(CLI::IsMember({"decompose", "pole", "darboux", "accel"}));
    cmd_sweep->add_option("--order", order, "derivative order for accel mode")
        ->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--t0", t0, "range start")->required();
    cmd_sweep->add_option("--t1", t1, "range end")->required();
    cmd_sweep->add_option("-n,--samples", n, "sample count")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--out", out_path, "CSV output path (default: stdout)");
    cmd_sweep->add_option("curve", sweep_curve, "curve file or @builtin:<name>")->required();

    std::string demo_name;
    CLI::App* cmd_demo = app.add_subcommand("demo", "walk through a built-in example");
    cmd_demo->add_option("name", demo_name, "ex41 or ex51")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help and friends
        app.exit(e);
        return kUsage;
    }

    try {
        if (cmd_validate->parsed()) return run_validate(validate_curve);
        if (cmd_sweep->parsed()) return run_sweep(sweep_curve, mode, t0, t1, n, order, out_path);
        return run_demo(demo_name);
    } catch (const NotSphericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const OriginError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOrigin;
    } catch (const NotAdmissibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotAdmissible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
