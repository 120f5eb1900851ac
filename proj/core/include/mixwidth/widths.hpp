#pragma once

// Known width formulas and the rigid / non-rigid classification of
// (p1, p2, q1, q2).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mixwidth/norms.hpp"
#include "mixwidth/pipeline.hpp"

namespace mixwidth {

enum class Verdict { Rigid, NonRigid };

enum class RegimeCase {
    A,            // p1 >= q1, p2 >= q2
    B,            // p1 < q1 <= 2, p2 < q2 <= 2
    C,            // p1 < q1 <= 2, p2 >= q2
    D1,           // p1 >= q1, p2 < q2 <= 2, q1 >= q2
    D2,           // p1 >= q1, p2 < q2 <= 2, p1 = q1 <= 2
    InnerFail,    // q1 > max{p1, 2}
    OuterFail,    // q2 > max{p2, 2}
    Exceptional,  // q1 < min{p1, q2}, p2 < q2 <= 2
};

std::string to_string(Verdict v);
std::string to_string(RegimeCase c);

struct RegimeReport {
    ExponentTuple tuple;
    Verdict verdict = Verdict::Rigid;
    RegimeCase label = RegimeCase::A;
    D0Exponents d0;
};

RegimeReport classify(const ExponentTuple& tuple);

/// d_n(B_p^N, l_q^N) = (N - n)^{1/q - 1/p} for p >= q (0 at n = N).
double pietsch_stesin(std::size_t N, std::size_t n, const Exponent& p, const Exponent& q);

/// d_n(B_1^N, l_2^N) = (1 - n/N)^{1/2}.
double b1_l2_width(std::size_t N, std::size_t n);

/// A lower bound d_n >= constant * numeric_factor for a rigid tuple. The
/// constant is kept symbolic ("" when the chain is fully numeric).
struct RigidityCertificate {
    RegimeCase label = RegimeCase::A;
    std::vector<std::string> chain;
    double numeric_factor = 0.0;
    std::string symbolic_constant;
    double d0 = 0.0;
    std::size_t n = 0;
    double eps = 0.0;
};

/// Requires a Rigid report, 0 < eps < 1 and n <= s b (1 - eps).
RigidityCertificate rigidity_certificate(const RegimeReport& report, std::size_t s, std::size_t b,
                                         std::size_t n, double eps);

struct NonRigidityWitness {
    RegimeCase label = RegimeCase::Exceptional;
    bool analytic = false;   // true: only a citation of the l_p ball bound, nothing computed
    std::string description;
    std::size_t n = 0;       // subspace dimension (computed witnesses)
    double d0 = 0.0;
    double sup_error = 0.0;
    double error_ratio = 0.0;
};

/// Requires a NonRigid tuple (PreconditionError otherwise). The exceptional
/// case runs the approximation pipeline; the other cases are analytic.
NonRigidityWitness nonrigidity_witness(const ExponentTuple& tuple, std::size_t s, std::size_t b,
                                       const EvaluationOptions& options = {});

}  // namespace mixwidth
