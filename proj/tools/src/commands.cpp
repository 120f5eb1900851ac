#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mixwidth/errors.hpp"
#include "mixwidth/json_io.hpp"
#include "mixwidth/sampling.hpp"

namespace mixwidth::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TupleFlags {
    std::string p1, p2, q1, q2;

    void add_to(CLI::App& app)
    {
        app.add_option("--p1", p1, "inner exponent of the ball (inf, integer or a/b)")->required();
        app.add_option("--p2", p2, "outer exponent of the ball")->required();
        app.add_option("--q1", q1, "inner exponent of the norm")->required();
        app.add_option("--q2", q2, "outer exponent of the norm")->required();
    }

    ExponentTuple parse() const
    {
        return {parse_one("--p1", p1), parse_one("--p2", p2), parse_one("--q1", q1),
                parse_one("--q2", q2)};
    }

    static Exponent parse_one(const char* flag, const std::string& text)
    {
        try {
            return Exponent::parse(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("invalid value for ") + flag + ": " + e.what());
        }
    }
};

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Writes to --out when given, otherwise to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file '" + path + "'");
    file << text;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text)
{
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    std::stringstream ss(text);
    std::string item;
    auto to_size = [&](const std::string& t) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != t.size() || v == 0)
            throw UsageError("invalid value for --sizes: '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    while (std::getline(ss, item, ',')) {
        auto x = item.find('x');
        if (x == std::string::npos) {
            auto n = to_size(item);
            sizes.emplace_back(n, n);
        } else {
            sizes.emplace_back(to_size(item.substr(0, x)), to_size(item.substr(x + 1)));
        }
    }
    if (sizes.empty())
        throw UsageError("--sizes must list at least one size");
    return sizes;
}

Json precondition_report(const ExponentTuple& tuple, const std::string& message)
{
    Json j;
    j["error"] = message;
    j["report"] = to_json(classify(tuple));
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Widths of mixed-norm balls: designs, partitions, spreading operators"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "rigid / non-rigid verdict for a tuple");
    TupleFlags classify_tuple;
    classify_tuple.add_to(*classify_cmd);
    std::size_t classify_s = 0, classify_b = 0;
    std::optional<std::size_t> classify_n;
    double classify_eps = 0.5;
    classify_cmd->add_option("--s", classify_s, "block size; with --b adds a certificate or witness");
    classify_cmd->add_option("--b", classify_b, "number of blocks");
    classify_cmd->add_option("--n", classify_n, "width index for the certificate (default floor(N(1-eps)))");
    classify_cmd->add_option("--eps", classify_eps, "epsilon of the certificate")->check(CLI::Range(0.0, 1.0));

    // design
    auto* design_cmd = app.add_subcommand("design", "affine-line design over F_r^d");
    std::uint32_t design_r = 2;
    unsigned design_d = 2;
    bool design_verify = false;
    std::string design_out;
    design_cmd->add_option("--r", design_r, "field order (prime or 2^u, u <= 6)")->required();
    design_cmd->add_option("--d", design_d, "dimension >= 2")->required();
    design_cmd->add_flag("--verify", design_verify, "run the exhaustive pair scan");
    design_cmd->add_option("--out", design_out, "write the design JSON here");

    // partition
    auto* partition_cmd = app.add_subcommand("partition", "(m,r,l)-partition of [s]x[b]");
    std::size_t part_s = 0, part_b = 0;
    unsigned part_d = 2;
    std::string part_kind = "good";
    bool part_verify = false;
    std::string part_out;
    partition_cmd->add_option("--s", part_s, "rows")->required();
    partition_cmd->add_option("--b", part_b, "columns")->required();
    partition_cmd->add_option("--d", part_d, "design dimension for the good partition");
    partition_cmd->add_option("--kind", part_kind, "good|transposition|rows|singleton");
    partition_cmd->add_flag("--verify", part_verify, "check (i)-(iii) exhaustively");
    partition_cmd->add_option("--out", part_out, "write the partition JSON here");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "run the approximation pipeline on one point");
    TupleFlags bound_tuple;
    bound_tuple.add_to(*bound_cmd);
    std::size_t bound_s = 0, bound_b = 0;
    std::optional<unsigned> bound_d;
    std::optional<std::size_t> bound_k;
    std::string bound_partition = "good", bound_input, bound_out;
    std::uint64_t bound_seed = 0;
    bool bound_extreme = false, bound_approximant = false;
    bound_cmd->add_option("--s", bound_s, "rows");
    bound_cmd->add_option("--b", bound_b, "columns");
    bound_cmd->add_option("--d", bound_d, "override the design dimension");
    bound_cmd->add_option("--k", bound_k, "override the block budget");
    bound_cmd->add_option("--partition", bound_partition, "good|transposition");
    bound_cmd->add_option("--input", bound_input, "BlockMatrix JSON file (default: a sampled point)");
    bound_cmd->add_option("--seed", bound_seed, "seed for the sampled point");
    bound_cmd->add_flag("--extreme", bound_extreme, "sample an extreme point of B_{inf,1}");
    bound_cmd->add_flag("--approximant", bound_approximant, "include the approximant in the output");
    bound_cmd->add_option("--out", bound_out, "write the result JSON here");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "pipeline over a list of sizes");
    TupleFlags sweep_tuple;
    sweep_tuple.add_to(*sweep_cmd);
    std::string sweep_sizes, sweep_partition = "good", sweep_format = "csv", sweep_out;
    std::optional<unsigned> sweep_d;
    std::optional<std::size_t> sweep_k;
    std::size_t sweep_samples = 32;
    std::uint64_t sweep_seed = 0;
    sweep_cmd->add_option("--sizes", sweep_sizes, "comma list of SxB or N (= NxN)")->required();
    sweep_cmd->add_option("--partition", sweep_partition, "good|transposition");
    sweep_cmd->add_option("--d", sweep_d, "override the design dimension");
    sweep_cmd->add_option("--k", sweep_k, "override the block budget");
    sweep_cmd->add_option("--samples", sweep_samples, "samples per size")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sweep_seed, "sampling seed");
    sweep_cmd->add_option("--format", sweep_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_out, "output path (default stdout)");

    // example-transpose
    auto* example_cmd = app.add_subcommand(
        "example-transpose", "transposition witness for B_{inf,1}^{s,s} in l_{1,2}^{s,s}");
    std::string example_sizes = "4,8,16", example_format = "json", example_out;
    std::size_t example_samples = 16;
    std::uint64_t example_seed = 0;
    example_cmd->add_option("--s", example_sizes, "comma list of sizes s");
    example_cmd->add_option("--samples", example_samples, "extreme points per size")->check(CLI::PositiveNumber);
    example_cmd->add_option("--seed", example_seed, "sampling seed");
    example_cmd->add_option("--format", example_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    example_cmd->add_option("--out", example_out, "output path (default stdout)");

    std::vector<const char*> argv{"mixwidth"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    ExponentTuple tuple;  // for precondition reports
    try {
        if (*classify_cmd) {
            tuple = classify_tuple.parse();
            const auto report = classify(tuple);
            Json j = to_json(report);
            if (classify_s > 0 && classify_b > 0) {
                if (report.verdict == Verdict::Rigid) {
                    const double N = static_cast<double>(classify_s * classify_b);
                    const auto n = classify_n.value_or(
                        static_cast<std::size_t>(std::floor(N * (1.0 - classify_eps))));
                    j["certificate"] =
                        to_json(rigidity_certificate(report, classify_s, classify_b, n, classify_eps));
                } else {
                    EvaluationOptions opts;
                    if (report.label == RegimeCase::Exceptional && classify_s < classify_b)
                        opts.kind = PartitionKind::Good;
                    j["witness"] = to_json(nonrigidity_witness(tuple, classify_s, classify_b, opts));
                }
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*design_cmd) {
            Design design;
            try {
                design = affine_line_design(design_r, design_d);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("invalid value for --r/--d: ") + e.what());
            }
            if (design.b > 4096)
                throw UsageError("r^d must be at most 4096");
            Json body = to_json(design);
            Json summary;
            summary["b"] = design.b;
            summary["r"] = design.r;
            summary["l"] = design.l;
            summary["m"] = design.size();
            if (design_verify) {
                auto report = to_json(verify_design(design));
                body["verification"] = report;
                summary["verification"] = report;
            }
            if (design_out.empty()) {
                out << body.dump() << "\n";
            } else {
                emit(design_out, to_json(design).dump() + "\n", out);
                summary["out"] = design_out;
                out << summary.dump(2) << "\n";
            }
            return kExitOk;
        }

        if (*partition_cmd) {
            Partition partition;
            if (part_kind == "good")
                partition = good_partition(part_s, part_b, part_d);
            else if (part_kind == "transposition") {
                if (part_s != part_b)
                    throw UsageError("the transposition partition needs --s = --b");
                partition = transposition_partition(part_s);
            } else if (part_kind == "rows")
                partition = row_partition(part_s, part_b);
            else if (part_kind == "singleton")
                partition = singleton_partition(BlockShape(part_s, part_b));
            else
                throw UsageError("invalid value for --kind: '" + part_kind + "'");
            Json body = to_json(partition);
            if (part_verify)
                body["verification"] = to_json(verify_partition(partition));
            if (part_out.empty()) {
                out << body.dump() << "\n";
            } else {
                emit(part_out, to_json(partition).dump() + "\n", out);
                Json summary;
                summary["s"] = part_s;
                summary["b"] = part_b;
                summary["m"] = partition.m();
                summary["r"] = partition.r;
                summary["l"] = partition.l;
                if (part_verify)
                    summary["verification"] = body["verification"];
                summary["out"] = part_out;
                out << summary.dump(2) << "\n";
            }
            return kExitOk;
        }

        if (*bound_cmd) {
            tuple = bound_tuple.parse();
            const auto kind = parse_partition_kind(bound_partition);
            BlockMatrix x;
            if (!bound_input.empty()) {
                std::ifstream file(bound_input);
                if (!file)
                    throw UsageError("cannot read --input '" + bound_input + "'");
                x = block_matrix_from_json(Json::parse(file));
            } else {
                if (bound_s == 0 || bound_b == 0)
                    throw UsageError("--s and --b are required without --input");
                const BlockShape shape(bound_s, bound_b);
                if (bound_extreme) {
                    if (!(tuple.p1.is_infinite() && tuple.p2 == Exponent::from_int(1)))
                        throw UsageError("--extreme needs --p1 inf --p2 1");
                    x = extreme_points_inf1(shape, bound_seed, 1).front();
                } else {
                    x = sample_ball(shape, tuple.p1, tuple.p2, bound_seed, 1).front();
                }
            }
            auto params = choose_params(tuple, x.rows(), x.cols());
            if (bound_d)
                params.d = *bound_d;
            if (bound_k)
                params.k = *bound_k;

            ApproxResult result;
            if (kind == PartitionKind::Transposition) {
                if (x.rows() != x.cols())
                    throw UsageError("the transposition partition needs s = b");
                result = approximate(x, params, transposition_partition(x.rows()));
            } else if (x.rows() >= x.cols()) {
                result = approximate(x, params, good_partition(x.rows(), x.cols(), params.d));
            } else {
                result = grouped_subspace_approximate(x, params);
            }
            Json j;
            j["tuple"] = tuple.str();
            j["s"] = x.rows();
            j["b"] = x.cols();
            j["d"] = params.d;
            j["k"] = params.k;
            j["alpha"] = to_string(params.alpha);
            j["partition"] = to_string(kind);
            j["d0"] = d0_mixed(x.shape(), tuple.p1, tuple.p2, tuple.q1, tuple.q2);
            j["result"] = to_json(result, bound_approximant);
            emit(bound_out, j.dump(2) + "\n", out);
            return kExitOk;
        }

        if (*sweep_cmd) {
            tuple = sweep_tuple.parse();
            const auto sizes = parse_sizes(sweep_sizes);
            EvaluationOptions opts;
            opts.kind = parse_partition_kind(sweep_partition);
            opts.d = sweep_d;
            opts.k = sweep_k;
            opts.samples = sweep_samples;
            opts.seed = sweep_seed;

            std::vector<SizeEvaluation> rows;
            for (auto [s, b] : sizes)
                rows.push_back(evaluate_size(tuple, s, b, opts));

            std::string text;
            if (sweep_format == "csv") {
                text = std::string(kSweepCsvHeader) + "\n";
                for (const auto& r : rows) {
                    text += std::to_string(r.s) + "," + std::to_string(r.b) + "," +
                            std::to_string(r.d) + "," + std::to_string(r.k) + "," +
                            std::to_string(r.r) + "," + std::to_string(r.l) + "," +
                            std::to_string(r.dimension) + "," + format_double(r.d0) + "," +
                            format_double(r.sup_sampled_error) + "," + format_double(r.ratio) +
                            "," + format_double(r.certified_bound) + "\n";
                }
            } else {
                Json j;
                j["tuple"] = tuple.str();
                j["partition"] = to_string(opts.kind);
                j["seed"] = opts.seed;
                j["rows"] = Json::array();
                for (const auto& r : rows)
                    j["rows"].push_back(to_json(r));
                text = j.dump(2) + "\n";
            }
            emit(sweep_out, text, out);
            return kExitOk;
        }

        if (*example_cmd) {
            const ExponentTuple example{Exponent::infinity(), Exponent::from_int(1),
                                        Exponent::from_int(1), Exponent::from_int(2)};
            std::string text = example_format == "csv"
                                   ? "s,dim,error,d0,ratio,skew_dim,skew_error,skew_ratio\n"
                                   : "";
            Json rows = Json::array();
            for (auto [s, b] : parse_sizes(example_sizes)) {
                if (s != b)
                    throw UsageError("example-transpose takes square sizes only");
                const BlockShape shape(s, s);
                const SpreadOperator op(transposition_partition(s));
                auto params = choose_params(example, s, s);
                params.k = std::max<std::size_t>(params.k, 2);
                double error = 0.0, skew_error = 0.0;
                for (const auto& x : extreme_points_inf1(shape, example_seed, example_samples)) {
                    error = std::max(error, approximate(x, params, op).measured_error);
                    // x - (x - x^T) = x^T
                    skew_error = std::max(skew_error, mixed_norm(x.transposed(), {example.q1, example.q2}));
                }
                const double d0 = d0_mixed(shape, example.p1, example.p2, example.q1, example.q2);
                Json row;
                row["s"] = s;
                row["dim"] = op.dimension();
                row["error"] = error;
                row["d0"] = d0;
                row["ratio"] = error / d0;
                row["skew_dim"] = s * (s - 1) / 2;
                row["skew_error"] = skew_error;
                row["skew_ratio"] = skew_error / d0;
                rows.push_back(row);
                if (example_format == "csv")
                    text += std::to_string(s) + "," + std::to_string(op.dimension()) + "," +
                            format_double(error) + "," + format_double(d0) + "," +
                            format_double(error / d0) + "," + std::to_string(s * (s - 1) / 2) +
                            "," + format_double(skew_error) + "," +
                            format_double(skew_error / d0) + "\n";
            }
            if (example_format == "json")
                text = rows.dump(2) + "\n";
            emit(example_out, text, out);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        out << precondition_report(tuple, e.what()).dump(2) << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}

}  // namespace mixwidth::cli
