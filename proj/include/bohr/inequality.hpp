#pragma once

#include "bohr/functions.hpp"
#include "bohr/radius.hpp"

#include <optional>
#include <string>

#include <json.hpp>

namespace bohr {

enum class TheoremId { T1, T2, T3, T4, T5, T6, ThmA_first, ThmA_second };

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& name);

/// Parameter bundle shared by all theorem left-hand sides.
struct LabParams {
    int k = 1;
    int m = 1;
    int q = 1;
    int s = 1;
    int t = 0;
    double p = 1.0;
    double lambda = 1.0;
    double a = 0.0;
};

/// A disk function together with its precomputed expansion.
struct StudyFunction {
    DiskFunction fn;
    CoefficientSeries series;
};

StudyFunction make_study(DiskFunction fn, int n_max = 256);

double lhs_A(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, double p, cplx z);
double lhs_B(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, double p, double lambda, int s, int t, cplx z);
double lhs_C(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, double p, double lambda, cplx z);
double lhs_D(const StudyFunction& f, const SchwarzFunction& wk, double p, int q, cplx z);
double lhs_E(const StudyFunction& f, const SchwarzFunction& wk,
             const SchwarzFunction& wm, cplx z);

/// Dispatch to the left-hand side bound to the given theorem, with monomial or
/// general Schwarz factors wk, wm.
double theorem_lhs(TheoremId id, const LabParams& params, const StudyFunction& f,
                   const SchwarzFunction& wk, const SchwarzFunction& wm, cplx z);

// Closed forms of the extremal families evaluated at z = r (monomial Schwarz).
double closed_A_phi(double a, double p, int k, int m, double r);
double closed_B_f(double a, double p, double lambda, int s, int t, int k, int m, double r);
double closed_C_f(double a, double p, double lambda, int k, int m, double r);
double closed_D_fstar(double a, double p, int q, int k, double r);
double closed_E_phi(double a, int k, int m, double r);

/// The radius governing the theorem. a_hint supplies |f(0)| where the radius
/// depends on it (T4 and its multidimensional analogue).
double theorem_radius(TheoremId id, const LabParams& params, double a_hint = 0.0);

struct GridPoint {
    double r;
    double theta;
    double lhs;
};

struct Witness {
    double r;
    double a;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::T1;
    LabParams params;
    double radius = 0.0;
    std::vector<GridPoint> grid;
    double max_lhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    std::optional<Witness> witness;

    nlohmann::json to_json() const;
    std::string to_markdown() const;
};

/// Evaluate the theorem's LHS at r = fraction * radius over angle_count angles
/// for every family member; pass iff the grid max stays below 1 + 1e-9.
VerificationReport verify(TheoremId id, const LabParams& params,
                          const std::vector<DiskFunction>& family,
                          const std::vector<double>& r_fractions, int angle_count);

/// Extremal functions driving the theorem's sharpness argument.
std::vector<DiskFunction> extremal_family(TheoremId id, const LabParams& params,
                                          const std::vector<double>& a_values);

/// Evaluate the extremal closed form at r = radius + eps for each (eps, a);
/// pass iff some grid point exceeds 1 (the witness).
VerificationReport sharpness_probe(TheoremId id, const LabParams& params,
                                   const std::vector<double>& eps_list,
                                   const std::vector<double>& a_list);

double psi6(double r, int k, int m);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Grid oracles for the auxiliary coefficient and sign conditions.
std::vector<CheckResult> lemma_checks();

} // namespace bohr
