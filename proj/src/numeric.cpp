#include "bautin/numeric.hpp"

#include "bautin/blowup.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace bautin {

namespace {

template <class S>
struct FieldS {
    S cx_x, cx_y, cx_xx, cx_xy, cx_yy;
    S cy_x, cy_y, cy_xx, cy_xy, cy_yy;

    static FieldS from(const VectorField2& f) {
        return {static_cast<S>(f.cx_x),  static_cast<S>(f.cx_y),
                static_cast<S>(f.cx_xx), static_cast<S>(f.cx_xy),
                static_cast<S>(f.cx_yy), static_cast<S>(f.cy_x),
                static_cast<S>(f.cy_y),  static_cast<S>(f.cy_xx),
                static_cast<S>(f.cy_xy), static_cast<S>(f.cy_yy)};
    }
    void eval(S x, S y, S& dx, S& dy) const {
        dx = cx_x * x + cx_y * y + cx_xx * x * x + cx_xy * x * y + cx_yy * y * y;
        dy = cy_x * x + cy_y * y + cy_xx * x * x + cy_xy * x * y + cy_yy * y * y;
    }
};

// Dormand-Prince 5(4) tableau
template <class S> constexpr S A21 = static_cast<S>(1.0L / 5);
template <class S> constexpr S A31 = static_cast<S>(3.0L / 40);
template <class S> constexpr S A32 = static_cast<S>(9.0L / 40);
template <class S> constexpr S A41 = static_cast<S>(44.0L / 45);
template <class S> constexpr S A42 = static_cast<S>(-56.0L / 15);
template <class S> constexpr S A43 = static_cast<S>(32.0L / 9);
template <class S> constexpr S A51 = static_cast<S>(19372.0L / 6561);
template <class S> constexpr S A52 = static_cast<S>(-25360.0L / 2187);
template <class S> constexpr S A53 = static_cast<S>(64448.0L / 6561);
template <class S> constexpr S A54 = static_cast<S>(-212.0L / 729);
template <class S> constexpr S A61 = static_cast<S>(9017.0L / 3168);
template <class S> constexpr S A62 = static_cast<S>(-355.0L / 33);
template <class S> constexpr S A63 = static_cast<S>(46732.0L / 5247);
template <class S> constexpr S A64 = static_cast<S>(49.0L / 176);
template <class S> constexpr S A65 = static_cast<S>(-5103.0L / 18656);
template <class S> constexpr S B1 = static_cast<S>(35.0L / 384);
template <class S> constexpr S B3 = static_cast<S>(500.0L / 1113);
template <class S> constexpr S B4 = static_cast<S>(125.0L / 192);
template <class S> constexpr S B5 = static_cast<S>(-2187.0L / 6784);
template <class S> constexpr S B6 = static_cast<S>(11.0L / 84);
// error weights: 5th-order minus embedded 4th-order solution
template <class S> constexpr S E1 = static_cast<S>(71.0L / 57600);
template <class S> constexpr S E3 = static_cast<S>(-71.0L / 16695);
template <class S> constexpr S E4 = static_cast<S>(71.0L / 1920);
template <class S> constexpr S E5 = static_cast<S>(-17253.0L / 339200);
template <class S> constexpr S E6 = static_cast<S>(22.0L / 525);
template <class S> constexpr S E7 = static_cast<S>(-1.0L / 40);

template <class S>
struct StepResult {
    S x, y;      // 5th-order end state
    S ex, ey;    // embedded error components
    S fx, fy;    // field at the end state (FSAL stage)
};

template <class S>
StepResult<S> dp5_step(const FieldS<S>& f, S x, S y, S f0x, S f0y, S h) {
    S k2x, k2y, k3x, k3y, k4x, k4y, k5x, k5y, k6x, k6y, k7x, k7y;
    f.eval(x + h * A21<S> * f0x, y + h * A21<S> * f0y, k2x, k2y);
    f.eval(x + h * (A31<S> * f0x + A32<S> * k2x),
           y + h * (A31<S> * f0y + A32<S> * k2y), k3x, k3y);
    f.eval(x + h * (A41<S> * f0x + A42<S> * k2x + A43<S> * k3x),
           y + h * (A41<S> * f0y + A42<S> * k2y + A43<S> * k3y), k4x, k4y);
    f.eval(x + h * (A51<S> * f0x + A52<S> * k2x + A53<S> * k3x + A54<S> * k4x),
           y + h * (A51<S> * f0y + A52<S> * k2y + A53<S> * k3y + A54<S> * k4y),
           k5x, k5y);
    f.eval(x + h * (A61<S> * f0x + A62<S> * k2x + A63<S> * k3x + A64<S> * k4x +
                    A65<S> * k5x),
           y + h * (A61<S> * f0y + A62<S> * k2y + A63<S> * k3y + A64<S> * k4y +
                    A65<S> * k5y),
           k6x, k6y);
    StepResult<S> r;
    r.x = x + h * (B1<S> * f0x + B3<S> * k3x + B4<S> * k4x + B5<S> * k5x +
                   B6<S> * k6x);
    r.y = y + h * (B1<S> * f0y + B3<S> * k3y + B4<S> * k4y + B5<S> * k5y +
                   B6<S> * k6y);
    f.eval(r.x, r.y, k7x, k7y);
    r.ex = h * (E1<S> * f0x + E3<S> * k3x + E4<S> * k4x + E5<S> * k5x +
                E6<S> * k6x + E7<S> * k7x);
    r.ey = h * (E1<S> * f0y + E3<S> * k3y + E4<S> * k4y + E5<S> * k5y +
                E6<S> * k6y + E7<S> * k7y);
    r.fx = k7x;
    r.fy = k7y;
    return r;
}

template <class S>
struct Tolerances {
    S rtol, atol, ytol, hmin, hmax;
};

template <class S>
Tolerances<S> tolerances() {
    if constexpr (sizeof(S) > sizeof(double))
        return {static_cast<S>(1e-15L), static_cast<S>(1e-18L),
                static_cast<S>(1e-16L), static_cast<S>(1e-13L),
                static_cast<S>(0.15L)};
    else
        return {static_cast<S>(1e-12), static_cast<S>(1e-15),
                static_cast<S>(1e-13), static_cast<S>(1e-12),
                static_cast<S>(0.15)};
}

constexpr double kBox = 4.0;
constexpr double kTmax = 100.0;

// One return to {y = 0, x > 0} crossed upward. Returns (x1, error estimate).
template <class S>
std::pair<S, S> return_impl(const FieldS<S>& f, S x0) {
    const Tolerances<S> tol = tolerances<S>();
    S t = 0, x = x0, y = 0;
    S f0x, f0y;
    f.eval(x, y, f0x, f0y);
    S h = static_cast<S>(1e-3);
    S err_acc = 0;

    while (t < static_cast<S>(kTmax)) {
        if (h > tol.hmax) h = tol.hmax;
        StepResult<S> st = dp5_step(f, x, y, f0x, f0y, h);
        S scx = tol.atol + tol.rtol * std::max(std::abs(x), std::abs(st.x));
        S scy = tol.atol + tol.rtol * std::max(std::abs(y), std::abs(st.y));
        S ratio = std::sqrt(((st.ex / scx) * (st.ex / scx) +
                             (st.ey / scy) * (st.ey / scy)) /
                            static_cast<S>(2));
        if (ratio <= 1) {
            err_acc += std::sqrt(st.ex * st.ex + st.ey * st.ey);
            if (std::abs(st.x) > static_cast<S>(kBox) ||
                std::abs(st.y) > static_cast<S>(kBox))
                throw NumericError("orbit left the bounding box");
            if (y < 0 && st.y >= 0) {
                // bracketed upward section crossing: Illinois iteration on the
                // sub-step size, each trial re-stepped from the left node
                S sa = 0, fa = y, sb = h, fb = st.y;
                S sx = st.x, sy = st.y;
                int side = 0;
                for (int it = 0; it < 200 && std::abs(sy) > tol.ytol; ++it) {
                    S s = (fb - fa) != 0 ? (sa * fb - sb * fa) / (fb - fa)
                                         : (sa + sb) / 2;
                    if (!(s > sa) || !(s < sb)) s = (sa + sb) / 2;
                    StepResult<S> trial = dp5_step(f, x, y, f0x, f0y, s);
                    sx = trial.x;
                    sy = trial.y;
                    if ((sy < 0) == (fa < 0)) {
                        sa = s;
                        fa = sy;
                        if (side == -1) fb /= 2;
                        side = -1;
                    } else {
                        sb = s;
                        fb = sy;
                        if (side == 1) fa /= 2;
                        side = 1;
                    }
                    if (sb - sa < tol.hmin * static_cast<S>(1e-3)) break;
                }
                if (std::abs(sy) > tol.ytol * static_cast<S>(100))
                    throw NumericError("section crossing refinement stalled");
                if (sx > 0) return {sx, err_acc};
                // crossing on the x <= 0 half-plane is not the section
            }
            t += h;
            x = st.x;
            y = st.y;
            f0x = st.fx;
            f0y = st.fy;
            S grow = static_cast<S>(0.9) *
                     std::pow(std::max(ratio, static_cast<S>(1e-10)),
                              static_cast<S>(-0.2));
            h *= std::min(static_cast<S>(5), std::max(static_cast<S>(0.2), grow));
        } else {
            h *= std::max(static_cast<S>(0.1),
                          static_cast<S>(0.9) * std::pow(ratio, static_cast<S>(-0.2)));
            if (h < tol.hmin) throw NumericError("step size underflow");
        }
    }
    throw NumericError("no return to the section within the time limit");
}

template <class S>
std::pair<double, double> integrate_return_s(const VectorField2& field, double x0) {
    auto [x1, err] = return_impl<S>(FieldS<S>::from(field), static_cast<S>(x0));
    return {static_cast<double>(x1), static_cast<double>(err)};
}

template <class S>
double displacement_s(const std::array<double, 6>& lambda, double h, double* err) {
    if (!(h > 0)) throw std::invalid_argument("section energy h must be positive");
    FieldS<S> f = FieldS<S>::from(vector_field(lambda));
    S x0 = std::sqrt(static_cast<S>(2) * static_cast<S>(h));
    auto [x1, e] = return_impl<S>(f, x0);
    if (err) *err = static_cast<double>(e);
    return static_cast<double>(x1 * x1 / 2 - static_cast<S>(h));
}

template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
    int nt = worker_thread_count();
    if (nt <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(nt), n));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

double noise_floor(bool extended) { return extended ? 1e-16 : 1e-13; }

// simple linear regression slope of y against x
double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

int worker_thread_count() {
    const char* v = std::getenv("BAUTIN_ARCS_THREADS");
    if (!v) return 1;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || n < 1) return 1;
    return static_cast<int>(std::min<long>(n, 64));
}

std::pair<double, double> integrate_return(const VectorField2& field, double x0,
                                           bool extended) {
    if (!(x0 > 0)) throw std::invalid_argument("x0 must be positive");
    return extended ? integrate_return_s<long double>(field, x0)
                    : integrate_return_s<double>(field, x0);
}

double displacement(const std::array<double, 6>& lambda, double h, bool extended,
                    double* err_estimate) {
    return extended ? displacement_s<long double>(lambda, h, err_estimate)
                    : displacement_s<double>(lambda, h, err_estimate);
}

std::array<double, 6> lambda_at(const Arc& arc, double eps) {
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) {
        const Jet& j = arc.jet(kLambdaVars[i]);
        long double acc = 0;
        for (int k = j.truncation(); k >= 0; --k)
            acc = acc * static_cast<long double>(eps) +
                  static_cast<long double>(j.coeff(k).to_long_double());
        out[i] = static_cast<double>(acc);
    }
    return out;
}

std::vector<double> default_eps_list(int algebraic_order) {
    int lo, hi;  // exponents of 2^-e
    switch (std::max(algebraic_order, 1)) {
        case 1: lo = 4; hi = 12; break;
        case 2: lo = 4; hi = 10; break;
        case 3: lo = 4; hi = 9; break;
        case 4: lo = 4; hi = 8; break;
        default: lo = 3; hi = 7; break;
    }
    std::vector<double> out;
    for (int e = lo; e <= hi; ++e) out.push_back(std::ldexp(1.0, -e));
    return out;
}

std::vector<double> default_h_list() { return {0.02, 0.05, 0.08, 0.12}; }

OrderFit measure_order(const Arc& arc, const std::vector<double>& h_list,
                       const std::vector<double>& eps_list, bool extended,
                       std::vector<ReturnMapSample>* samples) {
    if (h_list.size() < 3)
        throw std::invalid_argument("measure_order needs at least 3 section values");
    if (eps_list.size() < 3)
        throw std::invalid_argument("measure_order needs at least 3 epsilon values");
    const std::size_t nh = h_list.size(), ne = eps_list.size();

    // task grid: per h the base-point displacement plus one value per epsilon
    std::vector<double> base_disp(nh), base_err(nh);
    std::vector<double> disp(nh * ne), derr(nh * ne);
    std::vector<std::string> failures(nh * (ne + 1));
    std::array<double, 6> lam0 = lambda_at(arc, 0.0);
    parallel_for(nh * (ne + 1), [&](std::size_t idx) {
        std::size_t ih = idx / (ne + 1);
        std::size_t ie = idx % (ne + 1);
        try {
            if (ie == 0) {
                base_disp[ih] = displacement(lam0, h_list[ih], extended, &base_err[ih]);
            } else {
                std::array<double, 6> lam = lambda_at(arc, eps_list[ie - 1]);
                std::size_t g = ih * ne + (ie - 1);
                disp[g] = displacement(lam, h_list[ih], extended, &derr[g]);
            }
        } catch (const std::exception& e) {
            failures[idx] = e.what();
        }
    });
    for (const auto& msg : failures)
        if (!msg.empty()) throw NumericError(msg);

    OrderFit fit;
    const double floor_ = noise_floor(extended);
    double min_slope = 0;
    bool have_slope = false;
    for (std::size_t ih = 0; ih < nh; ++ih) {
        std::vector<double> xs, ys;
        for (std::size_t ie = 0; ie < ne; ++ie) {
            double d = disp[ih * ne + ie] - base_disp[ih];
            if (samples)
                samples->push_back({h_list[ih], eps_list[ie], d,
                                    derr[ih * ne + ie] + base_err[ih]});
            if (std::abs(d) < floor_) continue;
            xs.push_back(std::log(eps_list[ie]));
            ys.push_back(std::log(std::abs(d)));
        }
        if (xs.size() < 3) continue;  // too little signal at this h
        double s = lsq_slope(xs, ys);
        fit.h_values_used.push_back(h_list[ih]);
        fit.residual = std::max(fit.residual, std::abs(s - std::llround(s)));
        if (!have_slope || s < min_slope) {
            min_slope = s;
            have_slope = true;
        }
    }
    if (!have_slope) {
        fit.below_noise = true;
        return fit;
    }
    fit.slope = min_slope;
    fit.measured_order = static_cast<int>(std::llround(min_slope));
    return fit;
}

bool ZoladekFit::degree4_ok() const {
    double floor_ = 1e-12 * std::max(1.0, std::abs(c[0]));
    return std::abs(c5) <= std::max(10.0 * c5_sigma, floor_);
}

namespace {

// least squares via normal equations in long double; returns coefficients,
// the inverse normal matrix diagonal, and an infinity-norm condition estimate
struct LsqOut {
    std::vector<double> coef;
    std::vector<double> inv_diag;
    double condition = 0.0;
    double rms = 0.0;
};

LsqOut solve_lsq(const std::vector<std::vector<double>>& cols,
                 const std::vector<double>& rhs) {
    const std::size_t m = cols.size(), n = rhs.size();
    std::vector<std::vector<long double>> M(m, std::vector<long double>(m, 0));
    std::vector<long double> b(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < n; ++r)
                M[i][j] += static_cast<long double>(cols[i][r]) * cols[j][r];
        for (std::size_t r = 0; r < n; ++r)
            b[i] += static_cast<long double>(cols[i][r]) * rhs[r];
    }
    // Gauss-Jordan with full inverse for the covariance diagonal
    std::vector<std::vector<long double>> inv(m, std::vector<long double>(m, 0));
    for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
    std::vector<std::vector<long double>> A = M;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (A[piv][col] == 0) throw NumericError("singular least-squares system");
        std::swap(A[piv], A[col]);
        std::swap(inv[piv], inv[col]);
        long double d = A[col][col];
        for (std::size_t j = 0; j < m; ++j) {
            A[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            long double f = A[r][col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                A[r][j] -= f * A[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    LsqOut out;
    out.coef.resize(m);
    out.inv_diag.resize(m);
    long double norm_m = 0, norm_inv = 0;
    for (std::size_t i = 0; i < m; ++i) {
        long double c = 0, rm = 0, ri = 0;
        for (std::size_t j = 0; j < m; ++j) {
            c += inv[i][j] * b[j];
            rm += std::abs(M[i][j]);
            ri += std::abs(inv[i][j]);
        }
        out.coef[i] = static_cast<double>(c);
        out.inv_diag[i] = static_cast<double>(inv[i][i]);
        norm_m = std::max(norm_m, rm);
        norm_inv = std::max(norm_inv, ri);
    }
    out.condition = static_cast<double>(norm_m * norm_inv);
    long double ss = 0;
    for (std::size_t r = 0; r < n; ++r) {
        long double fitv = 0;
        for (std::size_t i = 0; i < m; ++i)
            fitv += static_cast<long double>(out.coef[i]) * cols[i][r];
        long double res = rhs[r] - fitv;
        ss += res * res;
    }
    out.rms = static_cast<double>(std::sqrt(ss / static_cast<long double>(n)));
    return out;
}

}  // namespace

ZoladekFit zoladek_fit(const Arc& arc, double eps, const std::vector<double>& h_list,
                       bool extended, std::vector<ReturnMapSample>* samples) {
    if (!(eps > 0) || eps > 0.25)
        throw std::invalid_argument("eps must be in (0, 0.25]");
    if (h_list.size() < 6)
        throw std::invalid_argument("zoladek_fit needs at least 6 section values");
    for (double h : h_list)
        if (!(h > 0) || h > 0.2)
            throw std::invalid_argument("section values must lie in (0, 0.2]");
    RatVec base = arc.base_point(kLambdaVars);
    if (classify_stratum(base) != Stratum::ORIGIN)
        throw std::invalid_argument("zoladek_fit needs an arc centered at the origin");

    OrderResult alg = order_of_arc(bautin_ideal(), arc);
    if (!alg.determined())
        throw UndeterminedError("arc order is undetermined; cannot scale the fit",
                                alg.truncation);
    int k = *alg.order;

    const std::size_t nh = h_list.size();
    std::vector<double> disp(nh), base_disp(nh), derr(nh), base_err(nh);
    std::vector<std::string> failures(2 * nh);
    std::array<double, 6> lam = lambda_at(arc, eps);
    std::array<double, 6> lam0 = lambda_at(arc, 0.0);
    parallel_for(2 * nh, [&](std::size_t idx) {
        std::size_t ih = idx / 2;
        try {
            if (idx % 2 == 0)
                disp[ih] = displacement(lam, h_list[ih], extended, &derr[ih]);
            else
                base_disp[ih] = displacement(lam0, h_list[ih], extended, &base_err[ih]);
        } catch (const std::exception& e) {
            failures[idx] = e.what();
        }
    });
    for (const auto& msg : failures)
        if (!msg.empty()) throw NumericError(msg);

    long double scale = std::pow(static_cast<long double>(eps), k);
    std::vector<double> rhs(nh);
    std::vector<std::vector<double>> cols(5, std::vector<double>(nh));
    for (std::size_t i = 0; i < nh; ++i) {
        double d = disp[i] - base_disp[i];
        rhs[i] = static_cast<double>(static_cast<long double>(d) / scale);
        if (samples) samples->push_back({h_list[i], eps, d, derr[i] + base_err[i]});
        double u = 2.0 * h_list[i];
        double p = u;
        for (std::size_t c = 0; c < 5; ++c) {
            cols[c][i] = p;
            p *= u;
        }
    }

    std::vector<std::vector<double>> four(cols.begin(), cols.begin() + 4);
    LsqOut fit4 = solve_lsq(four, rhs);
    LsqOut fit5 = solve_lsq(cols, rhs);

    ZoladekFit out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = fit4.coef[i];
    out.order_used = k;
    out.condition = fit4.condition;
    double max_term = 0;
    for (std::size_t i = 0; i < nh; ++i) {
        double fitted = 0, p = 2.0 * h_list[i];
        for (std::size_t c = 0; c < 4; ++c) {
            fitted += out.c[c] * p;
            p *= 2.0 * h_list[i];
        }
        max_term = std::max(max_term, std::abs(fitted));
    }
    out.residual = max_term > 0 ? fit4.rms / max_term : fit4.rms;
    out.c5 = fit5.coef[4];
    std::size_t dof = nh > 5 ? nh - 5 : 1;
    double s2 = fit5.rms * fit5.rms * static_cast<double>(nh) / static_cast<double>(dof);
    out.c5_sigma = std::sqrt(std::max(s2 * fit5.inv_diag[4], 0.0));
    return out;
}

nlohmann::ordered_json order_fit_to_json(const OrderFit& fit) {
    nlohmann::ordered_json j;
    if (fit.below_noise) {
        j["status"] = "BELOW_NOISE";
        return j;
    }
    j["status"] = "ok";
    j["measured_order"] = fit.measured_order;
    j["slope"] = fit.slope;
    j["residual"] = fit.residual;
    j["h_values_used"] = fit.h_values_used;
    return j;
}

nlohmann::ordered_json zoladek_fit_to_json(const ZoladekFit& fit) {
    nlohmann::ordered_json j;
    j["c1"] = fit.c[0];
    j["c2"] = fit.c[1];
    j["c3"] = fit.c[2];
    j["c4"] = fit.c[3];
    j["residual"] = fit.residual;
    j["condition"] = fit.condition;
    j["c5"] = fit.c5;
    j["c5_sigma"] = fit.c5_sigma;
    j["order_used"] = fit.order_used;
    j["degree4_ok"] = fit.degree4_ok();
    return j;
}

std::string samples_to_csv(const std::vector<ReturnMapSample>& rows) {
    std::ostringstream os;
    os << "h,epsilon,displacement,integrator_error_estimate\n";
    os.precision(17);
    for (const auto& r : rows)
        os << r.h << ',' << r.epsilon << ',' << r.displacement << ','
           << r.integrator_error_estimate << '\n';
    return os.str();
}

}  // namespace bautin
