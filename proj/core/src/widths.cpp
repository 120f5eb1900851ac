#include "mixwidth/widths.hpp"

#include <cmath>
#include <stdexcept>

#include "mixwidth/errors.hpp"

namespace mixwidth {

std::string to_string(Verdict v) { return v == Verdict::Rigid ? "Rigid" : "NonRigid"; }

std::string to_string(RegimeCase c)
{
    switch (c) {
    case RegimeCase::A: return "a";
    case RegimeCase::B: return "b";
    case RegimeCase::C: return "c";
    case RegimeCase::D1: return "d1";
    case RegimeCase::D2: return "d2";
    case RegimeCase::InnerFail: return "inner-fail";
    case RegimeCase::OuterFail: return "outer-fail";
    case RegimeCase::Exceptional: return "exceptional";
    }
    return "?";
}

RegimeReport classify(const ExponentTuple& t)
{
    const auto two = Exponent::from_int(2);
    RegimeReport report;
    report.tuple = t;
    report.d0 = d0_exponents(t.p1, t.p2, t.q1, t.q2);

    const bool inner_ok = t.q1 <= max(t.p1, two);
    const bool outer_ok = t.q2 <= max(t.p2, two);
    const bool exceptional = t.q1 < min(t.p1, t.q2) && t.p2 < t.q2 && t.q2 <= two;

    report.verdict = Verdict::NonRigid;
    if (!inner_ok) {
        report.label = RegimeCase::InnerFail;
        return report;
    }
    if (!outer_ok) {
        report.label = RegimeCase::OuterFail;
        return report;
    }
    if (exceptional) {
        report.label = RegimeCase::Exceptional;
        return report;
    }

    // Under (i) and (ii) each coordinate is either p_i >= q_i or p_i < q_i <= 2.
    report.verdict = Verdict::Rigid;
    const bool inner_dominates = t.p1 >= t.q1;
    const bool outer_dominates = t.p2 >= t.q2;
    if (inner_dominates && outer_dominates)
        report.label = RegimeCase::A;
    else if (!inner_dominates && !outer_dominates)
        report.label = RegimeCase::B;
    else if (!inner_dominates)
        report.label = RegimeCase::C;
    else if (t.q1 >= t.q2)
        report.label = RegimeCase::D1;
    else if (t.p1 == t.q1 && t.q1 <= two)
        report.label = RegimeCase::D2;
    else
        throw std::logic_error("classify: rigid tuple " + t.str() + " matches no case");
    return report;
}

double pietsch_stesin(std::size_t N, std::size_t n, const Exponent& p, const Exponent& q)
{
    if (p < q)
        throw std::invalid_argument("pietsch_stesin needs p >= q");
    if (n > N)
        throw std::invalid_argument("pietsch_stesin needs n <= N");
    if (n == N)
        return 0.0;
    return rational_pow(static_cast<double>(N - n), q.recip() - p.recip());
}

double b1_l2_width(std::size_t N, std::size_t n)
{
    if (N == 0 || n > N)
        throw std::invalid_argument("b1_l2_width needs 0 <= n <= N, N >= 1");
    return std::sqrt(1.0 - static_cast<double>(n) / static_cast<double>(N));
}

RigidityCertificate rigidity_certificate(const RegimeReport& report, std::size_t s, std::size_t b,
                                         std::size_t n, double eps)
{
    if (report.verdict != Verdict::Rigid)
        throw PreconditionError("rigidity_certificate: tuple " + report.tuple.str() +
                                " is non-rigid (" + to_string(report.label) + ")");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("rigidity_certificate needs 0 < eps < 1");
    const double N = static_cast<double>(s) * static_cast<double>(b);
    if (static_cast<double>(n) > N * (1.0 - eps))
        throw std::invalid_argument("rigidity_certificate needs n <= s b (1 - eps)");

    const auto& t = report.tuple;
    const double sd = static_cast<double>(s);
    const double bd = static_cast<double>(b);
    RigidityCertificate cert;
    cert.label = report.label;
    cert.n = n;
    cert.eps = eps;
    cert.d0 = d0_mixed(BlockShape(s, b), t.p1, t.p2, t.q1, t.q2);

    const Rational inner = t.q1.recip() - t.p1.recip();
    const Rational outer = t.q2.recip() - t.p2.recip();
    switch (report.label) {
    case RegimeCase::A:
        cert.chain = {
            "B_{p1,p2} contains s^{-1/p1} b^{-1/p2} B_inf^N",
            t.q1 <= t.q2
                ? "d_n(B_inf^N, l_{q1,q2}) >= b^{1/q2-1/q1} d_n(B_inf^N, l_{q1}^N)"
                : "d_n(B_inf^N, l_{q1,q2}) >= s^{1/q1-1/q2} d_n(B_inf^N, l_{q2}^N)",
            "d_n(B_inf^N, l_q^N) = (N-n)^{1/q} >= eps N^{1/q}",
            "d_n >= eps s^{1/q1-1/p1} b^{1/q2-1/p2}",
        };
        cert.numeric_factor = eps * rational_pow(sd, inner) * rational_pow(bd, outer);
        break;
    case RegimeCase::B:
    case RegimeCase::D2:
        cert.chain = {
            "d_0 = 1",
            "d_n(B_{p1,p2}, l_{q1,q2}) >= d_n(B_1^N, l_2^N)",
            "d_n(B_1^N, l_2^N) = (1-n/N)^{1/2} >= eps^{1/2}",
        };
        cert.numeric_factor = std::sqrt(eps);
        break;
    case RegimeCase::C:
        cert.chain = {
            "d_n(B_{p1,p2}, l_{q1,q2}) >= d_n(B_{1,p2}, l_{2,q2})",
            "B_{1,p2} contains b^{-1/p2} B_{1,inf}",
            "||x||_{2,1} <= b^{1-1/q2} ||x||_{2,q2}",
            "d_n(B_{1,inf}, l_{2,1}) >= c(eps) b",
            "d_n >= c(eps) b^{1/q2-1/p2}",
        };
        cert.numeric_factor = rational_pow(bd, outer);
        cert.symbolic_constant = "c(eps)";
        break;
    case RegimeCase::D1:
        cert.chain = {
            "d_n(B_{p1,p2}, l_{q1,q2}) >= s^{1/q1-1/q2} d_n(B_{p1,p2}, l_{q2}^N)",
            "d_n(B_{p1,p2}, l_{q2}^N) >= c(q2,eps) s^{(1/q2-1/p1)_+} b^{(1/q2-1/p2)_+}",
            "d_n >= c(q2,eps) s^{1/q1-1/p1}",
        };
        cert.numeric_factor = rational_pow(sd, inner);
        cert.symbolic_constant = "c(q2,eps)";
        break;
    default:
        throw std::logic_error("rigidity_certificate: unexpected label");
    }
    if (!(cert.numeric_factor > 0.0))
        throw std::logic_error("rigidity_certificate: non-positive numeric factor");
    return cert;
}

NonRigidityWitness nonrigidity_witness(const ExponentTuple& tuple, std::size_t s, std::size_t b,
                                       const EvaluationOptions& options)
{
    const auto report = classify(tuple);
    if (report.verdict == Verdict::Rigid)
        throw PreconditionError("nonrigidity_witness: tuple " + tuple.str() + " is rigid (case " +
                                to_string(report.label) + ")");
    NonRigidityWitness w;
    w.label = report.label;
    w.d0 = d0_mixed(BlockShape(s, b), tuple.p1, tuple.p2, tuple.q1, tuple.q2);
    if (report.label == RegimeCase::InnerFail || report.label == RegimeCase::OuterFail) {
        w.analytic = true;
        w.description =
            report.label == RegimeCase::InnerFail
                ? "q1 > max{p1,2}: B_{p1}^s is not rigid in l_{q1}^s; "
                  "d_n(B_p^N, l_q^N) <= C(p,q) N^{-delta} for n >= N^{1-delta} applied blockwise"
                : "q2 > max{p2,2}: B_{p2}^b is not rigid in l_{q2}^b; "
                  "d_n(B_p^N, l_q^N) <= C(p,q) N^{-delta} for n >= N^{1-delta} applied across blocks";
        return w;
    }
    const auto eval = evaluate_size(tuple, s, b, options);
    w.analytic = false;
    w.description = "exceptional case: group-constant subspace from the " +
                    to_string(options.kind) + " partition, sup over " +
                    std::to_string(eval.samples) + " sampled points";
    w.n = eval.dimension;
    w.sup_error = eval.sup_sampled_error;
    w.error_ratio = eval.ratio;
    return w;
}

}  // namespace mixwidth
