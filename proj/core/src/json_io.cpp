#include "mixwidth/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace mixwidth {

namespace {

template <typename T>
T required(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("JSON is missing field '") + key + "'");
    return j.at(key).get<T>();
}

// NaN and infinities have no JSON number form.
Json number(double v)
{
    if (std::isfinite(v))
        return v;
    return nullptr;
}

}  // namespace

Json to_json(const BlockMatrix& x)
{
    Json j;
    j["s"] = x.rows();
    j["b"] = x.cols();
    j["entries"] = std::vector<double>(x.entries().begin(), x.entries().end());
    return j;
}

BlockMatrix block_matrix_from_json(const Json& j)
{
    const auto s = required<std::size_t>(j, "s");
    const auto b = required<std::size_t>(j, "b");
    return BlockMatrix(BlockShape(s, b), required<std::vector<double>>(j, "entries"));
}

Json to_json(const Design& design)
{
    Json j;
    j["b"] = design.b;
    j["r"] = design.r;
    j["l"] = design.l;
    j["sets"] = design.sets;
    return j;
}

Design design_from_json(const Json& j)
{
    Design d;
    d.b = required<std::size_t>(j, "b");
    d.r = required<std::size_t>(j, "r");
    d.l = required<std::size_t>(j, "l");
    d.sets = required<std::vector<std::vector<std::size_t>>>(j, "sets");
    return d;
}

Json to_json(const DesignReport& report)
{
    Json j;
    j["ok"] = report.ok;
    j["l_observed"] = report.l_observed;
    j["l_min"] = report.l_min;
    j["replication_min"] = report.replication_min;
    j["replication_max"] = report.replication_max;
    j["violations"] = report.violations;
    return j;
}

Json to_json(const Partition& partition)
{
    Json j;
    j["s"] = partition.shape.s;
    j["b"] = partition.shape.b;
    j["m"] = partition.m();
    j["r"] = partition.r;
    j["l"] = partition.l;
    j["empty_groups"] = partition.empty_groups;
    Json groups = Json::array();
    for (const auto& g : partition.groups) {
        Json cells = Json::array();
        for (const auto& c : g)
            cells.push_back({c.row, c.col});
        groups.push_back(std::move(cells));
    }
    j["groups"] = std::move(groups);
    return j;
}

Partition partition_from_json(const Json& j)
{
    Partition p;
    p.shape = BlockShape(required<std::size_t>(j, "s"), required<std::size_t>(j, "b"));
    p.r = required<std::size_t>(j, "r");
    p.l = required<std::size_t>(j, "l");
    if (j.contains("empty_groups"))
        p.empty_groups = j.at("empty_groups").get<std::size_t>();
    for (const auto& g : required<Json>(j, "groups")) {
        std::vector<Cell> cells;
        for (const auto& c : g) {
            if (!c.is_array() || c.size() != 2)
                throw std::invalid_argument("partition cell must be [row, col]");
            cells.push_back({c[0].get<std::uint32_t>(), c[1].get<std::uint32_t>()});
        }
        p.groups.push_back(std::move(cells));
    }
    if (j.contains("m") && j.at("m").get<std::size_t>() != p.groups.size())
        throw std::invalid_argument("partition JSON: m does not match the number of groups");
    return p;
}

Json to_json(const PartitionReport& report)
{
    Json j;
    j["ok"] = report.ok;
    j["cover_ok"] = report.cover_ok;
    j["column_ok"] = report.column_ok;
    j["r_observed"] = report.r_observed;
    j["l_observed"] = report.l_observed;
    j["violations"] = report.violations;
    return j;
}

Json to_json(const ApproxResult& result, bool include_approximant)
{
    Json j;
    j["lambda"] = result.lambda;
    j["measured_error"] = number(result.measured_error);
    j["certified_bound"] = number(result.certified_bound);
    j["delta"] = number(result.delta);
    j["dimension"] = result.dimension;
    if (include_approximant)
        j["approximant"] = to_json(result.approximant);
    return j;
}

Json to_json(const RegimeReport& report)
{
    Json j;
    j["p1"] = report.tuple.p1.str();
    j["p2"] = report.tuple.p2.str();
    j["q1"] = report.tuple.q1.str();
    j["q2"] = report.tuple.q2.str();
    j["verdict"] = to_string(report.verdict);
    j["case"] = to_string(report.label);
    j["d0_exponents"] = {to_string(report.d0.inner), to_string(report.d0.outer)};
    return j;
}

Json to_json(const RigidityCertificate& cert)
{
    Json j;
    j["case"] = to_string(cert.label);
    j["n"] = cert.n;
    j["eps"] = cert.eps;
    j["d0"] = number(cert.d0);
    j["numeric_factor"] = number(cert.numeric_factor);
    j["symbolic_constant"] = cert.symbolic_constant;
    j["chain"] = cert.chain;
    return j;
}

Json to_json(const NonRigidityWitness& witness)
{
    Json j;
    j["case"] = to_string(witness.label);
    j["analytic"] = witness.analytic;
    j["description"] = witness.description;
    if (!witness.analytic) {
        j["n"] = witness.n;
        j["d0"] = number(witness.d0);
        j["sup_error"] = number(witness.sup_error);
        j["error_ratio"] = number(witness.error_ratio);
    }
    return j;
}

Json to_json(const SizeEvaluation& eval)
{
    Json j;
    j["s"] = eval.s;
    j["b"] = eval.b;
    j["d"] = eval.d;
    j["k"] = eval.k;
    j["r"] = eval.r;
    j["l"] = eval.l;
    j["dim"] = eval.dimension;
    j["d0"] = number(eval.d0);
    j["sup_sampled_error"] = number(eval.sup_sampled_error);
    j["ratio"] = number(eval.ratio);
    j["certified_bound"] = number(eval.certified_bound);
    j["samples"] = eval.samples;
    return j;
}

}  // namespace mixwidth
