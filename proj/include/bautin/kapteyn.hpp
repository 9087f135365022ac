#pragma once

#include "bautin/blowup.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bautin {

// Strata of the quadratic center set, finest first within intersections.
enum class Stratum {
    I1,
    I2,
    I3,
    I4,
    I12,
    I13,
    I23,
    I24,
    I123,
    ORIGIN,
    NOT_IN_CENTER_SET,
};

std::string stratum_name(Stratum s);
std::optional<Stratum> stratum_from_name(const std::string& name);

// The two lines making up the I2 ∩ I4 stratum.
enum class I24Branch { LAMBDA6_ZERO, LAMBDA3_TWICE_LAMBDA6 };
I24Branch i24_branch(const RatVec& lambda);

// Center-set generators over l1..l6, built in factored mode.
Ideal bautin_ideal();

// Finest stratum whose defining equations hold at the point.
Stratum classify_stratum(const RatVec& lambda);

// Per-stratum localized generator lists; ORIGIN gets the global ideal.
Ideal localized_generators(Stratum s);

// One-parameter deformation families and their delta-witness variants.
enum class FamilyId {
    SMOOTH_I1,
    SMOOTH_I2,
    SMOOTH_I3,
    SMOOTH_I4,
    I13_A,
    I13_B,
    I13_C,
    I12,
    I23,
    I24,
    I123,
    ORIGIN_39,
    DEF_I13,
    DEF_I12,
    DEF_I24,
    DEF_I24B,
    DEF_I123,
    DEF_ORIGIN,
};

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);
bool is_witness(FamilyId id);
std::vector<FamilyId> all_families();
std::vector<FamilyId> all_witnesses();

// Stratum the family's arcs are centered on (for witnesses: at delta = 0).
Stratum family_stratum(FamilyId id);
// Frozen generic order of each non-witness family on its localized ideal.
int family_expected_order(FamilyId id);

struct FamilySpec {
    FamilyId family = FamilyId::SMOOTH_I1;
    std::optional<RatVec> base;            // stratum-specific default when absent
    std::map<std::string, Rat> symbols;    // slot coefficients by name
    std::optional<Rat> delta;              // witnesses only

    RatVec base_point() const;             // resolved base (default applied)
};

FamilySpec famspec_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json famspec_to_json(const FamilySpec& spec);

// Builds the family arc at the given symbol values. Validates the base point
// stratum, mandatory-nonzero symbols, and the genericity conditions;
// unexpected symbols are rejected except for higher-order tail coefficients
// (named l<i>_<k> above the displayed block), which default to 0.
Arc essential_family(const FamilySpec& spec);

// Witness arc at a rational delta (spec.delta required).
Arc deformation_witness(const FamilySpec& spec);

// Witness arc with delta kept symbolic; coefficients are polynomials in
// "delta", so limits at delta -> 0 are exact.
ArcP witness_symbolic(const FamilySpec& spec);

// Draw a generic random spec for the family: symbol values from the integer
// box [-9, 9] (nonzero where mandatory), stratum-consistent random base,
// retried until the genericity conditions hold.
FamilySpec sample_family(FamilyId id, Rng& rng);

struct ClosureSweepEntry {
    Rat delta;
    int order = -1;
    ProjPoint point;
    Stratum base_stratum = Stratum::NOT_IN_CENTER_SET;
};

struct ClosureReport {
    FamilyId witness = FamilyId::DEF_I13;
    FamilyId lower = FamilyId::I13_B;
    bool extrapolated = false;       // witness obtained by symmetry, not displayed
    int lower_order = -1;
    ProjPoint lower_point;
    int generic_order = -1;
    ProjPoint limit_point;
    bool delta0_matches = false;     // witness(0) reproduces the lower family arc
    bool limit_matches = false;      // lim_{delta->0} point equals the lower point
    bool sweep_consistent = false;   // rational-delta runs agree with the symbolic run
    std::vector<ClosureSweepEntry> sweep;
    std::string detail;              // first mismatch description

    bool pass() const { return delta0_matches && limit_matches && sweep_consistent; }
};

// Runs the full closure verification for one witness at its reference symbol
// values (or the provided ones): delta = 0 reproduction, symbolic-delta order
// and limit point, and a rational-delta sweep classified by base stratum.
ClosureReport closure_check(FamilyId witness_id,
                            const std::map<std::string, Rat>* symbols = nullptr);

// Same computation with a deliberately corrupted witness (a delta*eps term
// added to the trace coefficient); must fail, guarding the suite against
// vacuous passes.
ClosureReport closure_check_negative_control();

nlohmann::ordered_json closure_report_to_json(const ClosureReport& r);

// Exact complex parameters of the normal form on the complex side.
struct RatComplex {
    Rat re, im;

    RatComplex() = default;
    RatComplex(Rat real, Rat imag) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    RatComplex conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const RatComplex& a, const RatComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RatComplex& a, const RatComplex& b) { return !(a == b); }
};

struct ComplexParams {
    RatComplex A, B, C;
};

// Real quadratic coefficients (a, b, c, a', b', c') of the plane field.
struct RealCoeffs {
    Rat a, b, c, ap, bp, cp;
};

ComplexParams realcoeffs_to_complex(const RealCoeffs& rc);
RealCoeffs complex_to_realcoeffs(const ComplexParams& cp);
RealCoeffs kapteyn_to_realcoeffs(const RatVec& lambda);
ComplexParams kapteyn_to_complex(const RatVec& lambda);

struct ComplexMembership {
    bool lv = false;  // B = 0
    bool r = false;   // Im(AB) = Im(conj(B)^3 C) = Im(A^3 C) = 0
    bool h = false;   // 2A + conj(B) = 0
    bool q4 = false;  // A - 2 conj(B) = 0 and |B| = |C|
};

ComplexMembership complex_strata_membership(const ComplexParams& cp);

// Plane quadratic vector field in the 6-parameter normal form.
struct VectorField2 {
    // xdot = cx_x x + cx_y y + cx_xx x^2 + cx_xy xy + cx_yy y^2, same for ydot
    double cx_x, cx_y, cx_xx, cx_xy, cx_yy;
    double cy_x, cy_y, cy_xx, cy_xy, cy_yy;

    void eval(double x, double y, double& dx, double& dy) const {
        dx = cx_x * x + cx_y * y + cx_xx * x * x + cx_xy * x * y + cx_yy * y * y;
        dy = cy_x * x + cy_y * y + cy_xx * x * x + cy_xy * x * y + cy_yy * y * y;
    }
};

VectorField2 vector_field(const std::array<double, 6>& lambda);
VectorField2 vector_field(const RatVec& lambda);

// Exact right-hand sides over {x, y}, for display and algebraic tests.
std::pair<Poly, Poly> vector_field_polys(const RatVec& lambda);

extern const std::vector<std::string> kLambdaVars;  // {"l1", ..., "l6"}

}  // namespace bautin
