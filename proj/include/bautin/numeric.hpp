#pragma once

#include "bautin/kapteyn.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace bautin {

// Escape from the bounding box, time-limit hit, or step-size underflow.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// One (h, epsilon) return-map evaluation, as written to CSV dumps.
struct ReturnMapSample {
    double h = 0.0;
    double epsilon = 0.0;
    double displacement = 0.0;
    double integrator_error_estimate = 0.0;
};

// First return to the section {y = 0, x > 0} with ydot > 0, starting from
// (x0, 0). Adaptive embedded RK5(4) with relative tolerance 1e-12; the
// crossing is refined until |y| < 1e-13 (1e-16 in extended mode, which runs
// the same scheme in wider arithmetic for small-signal measurements).
// Returns (x1, accumulated error estimate); throws NumericError.
std::pair<double, double> integrate_return(const VectorField2& field, double x0,
                                           bool extended = false);

// P(h) - h in the energy coordinate h = x^2/2 on the section.
double displacement(const std::array<double, 6>& lambda, double h,
                    bool extended = false, double* err_estimate = nullptr);

// Measured epsilon-order of the displacement along an arc.
struct OrderFit {
    int measured_order = 0;          // rounded minimum log-log slope
    double slope = 0.0;              // the minimizing slope itself
    double residual = 0.0;           // max |slope - nearest integer| over used h
    std::vector<double> h_values_used;
    bool below_noise = false;        // every sample sat under the noise floor
};

// Default geometric epsilon ladders per algebraic order, and section values.
std::vector<double> default_eps_list(int algebraic_order);
std::vector<double> default_h_list();

// Evaluates lambda(eps) from the arc (components l1..l6), measures
// F(h, lambda(eps)) - F(h, lambda(0)) over the grid, and fits one log-log
// slope per h. Subtracting the base-point displacement removes the smooth
// integrator bias: the base point is a center, so its true displacement is 0.
// Optionally records every sample row. Throws NumericError on escape.
OrderFit measure_order(const Arc& arc, const std::vector<double>& h_list,
                       const std::vector<double>& eps_list, bool extended = false,
                       std::vector<ReturnMapSample>* samples = nullptr);

// Least-squares polynomial fit of the leading displacement coefficient.
struct ZoladekFit {
    std::array<double, 4> c{};   // coefficients of u, u^2, u^3, u^4 with u = 2h
    double residual = 0.0;       // rms residual / largest fitted term
    double condition = 0.0;      // condition estimate of the normal matrix
    double c5 = 0.0;             // u^5 coefficient of the degree-5 refit
    double c5_sigma = 0.0;       // its standard error from the fit covariance
    int order_used = 0;          // epsilon power divided out
    // the u^5 term is statistically indistinguishable from zero
    bool degree4_ok() const;
};

// Fits F(h, lambda(eps))/eps^k against u, u^2, u^3, u^4 (u = 2h), where k is
// the exact algebraic order of the arc on the center-set ideal. The arc must
// be centered at the origin. A degree-5 refit provides the u^5 coefficient
// and its standard error for the degree bound check.
ZoladekFit zoladek_fit(const Arc& arc, double eps, const std::vector<double>& h_list,
                       bool extended = false,
                       std::vector<ReturnMapSample>* samples = nullptr);

// lambda(eps) by Horner evaluation of the six component jets.
std::array<double, 6> lambda_at(const Arc& arc, double eps);

// Number of worker threads: BAUTIN_ARCS_THREADS when set, else 1.
int worker_thread_count();

nlohmann::ordered_json order_fit_to_json(const OrderFit& fit);
nlohmann::ordered_json zoladek_fit_to_json(const ZoladekFit& fit);
std::string samples_to_csv(const std::vector<ReturnMapSample>& rows);

}  // namespace bautin
