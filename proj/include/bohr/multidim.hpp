#pragma once

#include "bohr/inequality.hpp"

namespace bohr {

enum class Norm { Sup, Euclid };

using Vec = std::vector<cplx>;

double vector_norm(const Vec& z, Norm norm);

/// Norm-one linear functional with T_v(v) = ||v|| = 1. For the sup norm the
/// functional reads off the max-modulus coordinate (smallest index on ties);
/// for the euclidean norm it is the inner product with v.
class SupportFunctional {
public:
    SupportFunctional() = default;
    SupportFunctional(Norm norm, Vec v);

    cplx operator()(const Vec& z) const;
    const Vec& base_point() const { return v_; }
    Norm norm_kind() const { return norm_; }

private:
    Norm norm_ = Norm::Sup;
    Vec v_;
    std::size_t sup_index_ = 0;
    cplx sup_phase_ = 1.0;
};

SupportFunctional support_functional(Norm norm, const Vec& v);

/// mu_n(z) = T_v(z)^{n-1} z: a Schwarz mapping with an order-n zero at 0.
struct VectorSchwarzMap {
    int order = 1;
    SupportFunctional T;

    Vec eval(const Vec& z) const;
};

enum class BallKind {
    EtaA,    // (a - T_v(z)) / (1 - a T_v(z))
    XiA,     // (a + T_v(z)) / (1 + a T_v(z))
    EtaStar, // (a - T_v(z)^q) / (1 - a T_v(z)^q)
};

/// Extremal ball function g(T_v(z)) with homogeneous parts c_j T_v(z)^j.
struct BallFunction {
    BallKind kind = BallKind::EtaA;
    double a = 0.0;
    int q = 1;
    SupportFunctional T;

    cplx eval(const Vec& z) const;
    /// Degree of the j-th nonzero homogeneous part (j >= 1).
    long long part_degree(int j) const;
    /// Coefficient of the j-th nonzero homogeneous part.
    cplx part_coefficient(int j) const;
};

enum class MultiLhs { G, H, I, J, K };

std::string to_string(MultiLhs which);
std::optional<MultiLhs> multi_lhs_from_string(const std::string& name);

/// Vector-valued left-hand side on the extremal family, with r = ||z||.
double multidim_lhs(MultiLhs which, const BallFunction& f,
                    const VectorSchwarzMap& mu_k, const VectorSchwarzMap& mu_m,
                    const LabParams& params, const Vec& z);

struct ReductionMismatch {
    double a;
    double r;
    double scalar;
    double multidim;
};

struct ReductionReport {
    MultiLhs which = MultiLhs::G;
    int dimension = 2;
    Norm norm = Norm::Sup;
    bool pass = true;
    double max_abs_diff = 0.0;
    std::optional<ReductionMismatch> first_mismatch;
};

/// Check that the multidimensional LHS on rays z = r v matches the scalar
/// module's LHS on the corresponding extremal disk function, within 1e-10.
ReductionReport reduction_check(MultiLhs which, const LabParams& params, int d,
                                Norm norm, const std::vector<double>& a_grid,
                                const std::vector<double>& r_grid);

} // namespace bohr
