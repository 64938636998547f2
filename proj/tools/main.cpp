// dets2 -- batch front-end for the exact det^S2 toolkit.
//
// Exit codes: 0 success, 1 a mathematical guarantee failed to hold
// (a serialized counterexample accompanies the report), 2 bad usage or
// malformed input.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "dets2/io.hpp"
#include "dets2/verify.hpp"

namespace {

using dets2::json;

struct Output {
    std::string path; // empty: stdout

    void emit(const json& j) const {
        if (path.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            dets2::write_json_file(path, j);
        }
    }
};

dets2::FieldSpec field_from_flags(bool rational, std::uint64_t prime) {
    if (rational && prime != 0)
        throw dets2::InputError("choose either --rational or --prime, not both");
    if (prime != 0) return dets2::FieldSpec::prime(prime);
    return dets2::FieldSpec::rational();
}

int run_compute(const std::string& input, int omit, const Output& out) {
    auto instance = dets2::parse_instance(dets2::load_json_file(input));
    json rep = std::visit(
        [&](const auto& tensor) {
            if (omit < 1 || omit > dets2::vertex_count(tensor.d()))
                throw dets2::InputError("--omit must be between 1 and " +
                                        std::to_string(dets2::vertex_count(tensor.d())));
            auto raw = dets2::det_exact(dets2::reduced_matrix(tensor, omit));
            auto value = dets2::canonical_orientation(tensor.d()) < 0 ? -raw : raw;
            return json{{"det", value.str()}, {"nonzero", !is_zero(value)}};
        },
        instance);
    out.emit(rep);
    return 0;
}

int run_ed(int d, bool rational, std::uint64_t prime, const Output& out) {
    const auto spec = field_from_flags(rational, prime);
    if (spec.kind() == dets2::FieldSpec::Kind::rational)
        out.emit(dets2::instance_json(dets2::canonical_tensor(d, dets2::RationalField{})));
    else
        out.emit(dets2::instance_json(dets2::canonical_tensor(d, dets2::PrimeField(spec))));
    return 0;
}

int run_partition_check(const std::string& input, std::uint64_t prime, const Output& out) {
    const auto p = dets2::parse_partition(dets2::load_json_file(input));
    const bool cf = dets2::is_cycle_free(p);
    const bool homog = dets2::is_homogeneous(p);
    std::string det;
    bool nonzero = false;
    if (prime != 0) {
        dets2::PrimeField field(prime);
        auto v = dets2::det_s2(dets2::partition_to_tensor(p, field));
        det = v.str();
        nonzero = !is_zero(v);
    } else {
        auto v = dets2::det_s2(dets2::partition_to_tensor(p, dets2::RationalField{}));
        det = v.str();
        nonzero = !is_zero(v);
    }
    out.emit(json{{"cycle_free", cf}, {"homogeneous", homog}, {"det", det}, {"agrees", cf == nonzero}});
    return cf == nonzero ? 0 : 1;
}

json survey_json(const dets2::SurveyTable& t) {
    return json{{"samples", t.samples},
                {"cells",
                 {{"cyclic_det_zero", t.cells[0][0]},
                  {"cyclic_det_nonzero", t.cells[0][1]},
                  {"cycle_free_det_zero", t.cells[1][0]},
                  {"cycle_free_det_nonzero", t.cells[1][1]}}},
                {"disagreements", t.disagreements()}};
}

int run_partition_survey(int d, long long samples, std::optional<std::uint64_t> seed,
                         std::uint64_t prime, bool exhaustive, const Output& out) {
    dets2::SurveyTable table;
    if (exhaustive) {
        auto progress = [](long long done, long long total) {
            std::cerr << "survey: " << done << "/" << total << " partitions\n";
        };
        if (prime != 0)
            table = dets2::partition_survey_exhaustive(d, dets2::PrimeField(prime), true, progress);
        else
            table = dets2::partition_survey_exhaustive(d, dets2::RationalField{}, true, progress);
    } else {
        if (!seed) throw dets2::InputError("--seed is required unless --exhaustive is given");
        if (samples <= 0) throw dets2::InputError("--samples must be positive");
        if (prime != 0)
            table = dets2::partition_survey(d, dets2::PrimeField(prime), samples, *seed);
        else
            table = dets2::partition_survey(d, dets2::RationalField{}, samples, *seed);
    }
    out.emit(survey_json(table));
    return table.disagreements() == 0 ? 0 : 1;
}

int run_geom(const std::string& input, const Output& out) {
    auto points = dets2::parse_points(dets2::load_json_file(input));
    json rep = std::visit(
        [&](const auto& config) {
            const auto vanish = dets2::assert_vanishing(config);
            return json{{"det", vanish.det.str()},
                        {"witness", dets2::witness_json(vanish.witness.witness)},
                        {"case", dets2::witness_case_name(vanish.witness.branch)}};
        },
        points);
    out.emit(rep);
    return 0;
}

json suite_json(const dets2::SuiteResult& r) {
    json j{{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}};
    if (!r.counterexample.empty()) j["counterexample"] = json::parse(r.counterexample);
    return j;
}

int run_verify(int d, int trials, std::uint64_t seed, std::uint64_t prime, const Output& out) {
    dets2::PrimeField field(prime);
    dets2::SeededRng rng(seed);
    std::vector<dets2::SuiteResult> suites;
    suites.push_back(dets2::check_block_dependence(d, field, trials, rng));
    suites.push_back(dets2::check_invariance(d, field, trials, rng));
    suites.push_back(dets2::check_vanishing(d, field, std::max(1, trials / 10), rng));
    suites.push_back(dets2::check_multilinearity(d, field, trials, rng));
    auto geom = dets2::check_geometry(d, dets2::RationalField{}, trials, rng);
    suites.push_back(geom.suite);
    auto survey = dets2::partition_survey(d, field, trials, seed);
    dets2::SuiteResult survey_suite{"partition_survey", survey.samples, survey.disagreements()};
    suites.push_back(survey_suite);
    suites.push_back(dets2::check_planted_cycles(d, field, std::max(1, trials / 10), rng));
    suites.push_back(dets2::check_flip_antisymmetry(d, std::max(1, trials / 20), 5, rng));

    bool all = true;
    json arr = json::array();
    for (const auto& s : suites) {
        all = all && s.passed();
        arr.push_back(suite_json(s));
    }
    json rep{{"d", d},
             {"trials", trials},
             {"seed", seed},
             {"prime", prime},
             {"suites", arr},
             {"witness_cases", {{"I", geom.case_one}, {"II", geom.case_two}, {"degenerate", geom.degenerate}}},
             {"all_passed", all}};
    out.emit(rep);
    return all ? 0 : 1;
}

int run_oracle_regen(const std::string& path, bool check, const Output& out) {
    const auto fresh = dets2::regenerate_golden();
    if (check) {
        const auto committed = dets2::parse_golden(dets2::load_json_file(path));
        const bool match = committed == fresh;
        out.emit(json{{"match", match},
                      {"recomputed", dets2::golden_json(fresh)},
                      {"committed", dets2::golden_json(committed)}});
        return match ? 0 : 1;
    }
    dets2::write_json_file(path, dets2::golden_json(fresh));
    std::cerr << "wrote " << path << "\n";
    return 0;
}

int run_matrix_dump(const std::string& input, int equation, int omit, const Output& out) {
    if (equation != 0 && omit != 0)
        throw dets2::InputError("choose at most one of --equation and --omit");
    auto instance = dets2::parse_instance(dets2::load_json_file(input));
    json rep = std::visit(
        [&](const auto& tensor) {
            if (equation != 0) return dets2::matrix_json(dets2::equation_matrix(tensor, equation));
            if (omit != 0) return dets2::matrix_json(dets2::reduced_matrix(tensor, omit));
            return dets2::matrix_json(dets2::full_matrix(tensor));
        },
        instance);
    out.emit(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the det^S2 invariant of edge tensors on K_{2d}"};
    app.fallthrough(); // subcommands pass unmatched options (e.g. --out) up
    app.require_subcommand(1);

    std::function<int()> action;

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");
    auto output = [&]() { return Output{out_path}; };

    // compute
    {
        auto* cmd = app.add_subcommand("compute", "determinant of an instance file");
        auto input = std::make_shared<std::string>();
        auto omit = std::make_shared<int>(1);
        cmd->add_option("--input", *input, "instance JSON")->required();
        cmd->add_option("--omit", *omit, "which vertex equation to drop (default 1)");
        cmd->callback([&, input, omit]() { action = [&, input, omit]() { return run_compute(*input, *omit, output()); }; });
    }
    // ed
    {
        auto* cmd = app.add_subcommand("ed", "emit the canonical instance for a given d");
        auto d = std::make_shared<int>(0);
        auto rational = std::make_shared<bool>(false);
        auto prime = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--d", *d, "dimension (d >= 2)")->required();
        cmd->add_flag("--rational", *rational, "rational field (default)");
        cmd->add_option("--prime", *prime, "prime modulus");
        cmd->callback([&, d, rational, prime]() {
            action = [&, d, rational, prime]() { return run_ed(*d, *rational, *prime, output()); };
        });
    }
    // partition check | survey
    {
        auto* part = app.add_subcommand("partition", "d-partition utilities");
        part->require_subcommand(1);
        auto* check = part->add_subcommand("check", "cycle-freeness, homogeneity, and the invariant");
        auto input = std::make_shared<std::string>();
        auto prime = std::make_shared<std::uint64_t>(0);
        check->add_option("--input", *input, "partition JSON")->required();
        check->add_option("--prime", *prime, "evaluate over GF(p) instead of Q");
        check->callback([&, input, prime]() {
            action = [&, input, prime]() { return run_partition_check(*input, *prime, output()); };
        });

        auto* survey = part->add_subcommand("survey", "tabulate cycle-freeness against the invariant");
        auto d = std::make_shared<int>(0);
        auto samples = std::make_shared<long long>(0);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto sprime = std::make_shared<std::uint64_t>(32003);
        auto exhaustive = std::make_shared<bool>(false);
        survey->add_option("--d", *d, "dimension")->required();
        survey->add_option("--samples", *samples, "number of seeded samples");
        survey->add_option_function<std::uint64_t>(
            "--seed", [seed](const std::uint64_t& v) { *seed = v; }, "RNG seed (required unless --exhaustive)");
        survey->add_option("--prime", *sprime, "prime modulus (default 32003; 0 means Q)");
        survey->add_flag("--exhaustive", *exhaustive, "walk every coloring (d=2, or d=3: 3^15 instances)");
        survey->callback([&, d, samples, seed, sprime, exhaustive]() {
            action = [&, d, samples, seed, sprime, exhaustive]() {
                return run_partition_survey(*d, *samples, *seed, *sprime, *exhaustive, output());
            };
        });
    }
    // geom
    {
        auto* cmd = app.add_subcommand("geom", "difference tensor of a point configuration");
        auto input = std::make_shared<std::string>();
        cmd->add_option("--points", *input, "points JSON")->required();
        cmd->callback([&, input]() { action = [&, input]() { return run_geom(*input, output()); }; });
    }
    // verify
    {
        auto* cmd = app.add_subcommand("verify", "run the randomized property suites");
        auto d = std::make_shared<int>(0);
        auto trials = std::make_shared<int>(0);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto prime = std::make_shared<std::uint64_t>(32003);
        cmd->add_option("--d", *d, "dimension")->required();
        cmd->add_option("--trials", *trials, "trials per suite")->required();
        cmd->add_option("--seed", *seed, "RNG seed")->required();
        cmd->add_option("--prime", *prime, "prime modulus for the finite-field suites");
        cmd->callback([&, d, trials, seed, prime]() {
            action = [&, d, trials, seed, prime]() { return run_verify(*d, *trials, *seed, *prime, output()); };
        });
    }
    // oracle regen
    {
        auto* oracle = app.add_subcommand("oracle", "golden-value maintenance");
        oracle->require_subcommand(1);
        auto* regen = oracle->add_subcommand("regen", "recompute golden values with cross-checks");
        auto path = std::make_shared<std::string>("data/golden.json");
        auto check = std::make_shared<bool>(false);
        regen->add_option("--file", *path, "golden file path (default data/golden.json)");
        regen->add_flag("--check", *check, "compare against the committed file instead of rewriting");
        regen->callback([&, path, check]() {
            action = [&, path, check]() { return run_oracle_regen(*path, *check, output()); };
        });
    }
    // matrix dump
    {
        auto* matrix = app.add_subcommand("matrix", "system-matrix inspection");
        matrix->require_subcommand(1);
        auto* dump = matrix->add_subcommand("dump", "emit a system matrix as JSON");
        auto input = std::make_shared<std::string>();
        auto equation = std::make_shared<int>(0);
        auto omit = std::make_shared<int>(0);
        dump->add_option("--input", *input, "instance JSON")->required();
        dump->add_option("--equation", *equation, "emit the single-equation block M_k");
        dump->add_option("--omit", *omit, "emit the reduced square matrix with this equation dropped");
        dump->callback([&, input, equation, omit]() {
            action = [&, input, equation, omit]() { return run_matrix_dump(*input, *equation, *omit, output()); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const dets2::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const dets2::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
