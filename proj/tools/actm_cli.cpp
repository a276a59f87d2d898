// actm: construct, classify, decompose and compare algebraic curvature tensor
// models on pseudo-Euclidean spaces, plus the exact polynomial-metric
// curvature engine behind the built-in signature-(2,2) example.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "actm/classify.hpp"
#include "actm/decompose.hpp"
#include "actm/equiv.hpp"
#include "actm/generators.hpp"
#include "actm/geometry.hpp"
#include "actm/json_io.hpp"
#include "actm/report.hpp"

namespace {

using namespace actm;

constexpr int kExitAllPass = 0;
constexpr int kExitCheckFailure = 2;
constexpr int kExitInputError = 3;

std::vector<Rational> parse_point(const std::string& text, int expect) {
    std::vector<Rational> point;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) point.push_back(Rational::parse(item));
    if (static_cast<int>(point.size()) != expect)
        throw ParseError("point: expected " + std::to_string(expect) + " comma-separated coordinates");
    return point;
}

json seed_to_json_double(const Seed<double>& s) {
    json j;
    j["p"] = s.p();
    json gram = json::array();
    for (int i = 0; i < s.p(); ++i) {
        json row = json::array();
        for (int k = 0; k < s.p(); ++k) row.push_back(s.g.gram()(i, k));
        gram.push_back(std::move(row));
    }
    j["gram"] = std::move(gram);
    auto comps = [](const CurvTensor<double>& t) {
        json arr = json::array();
        for (const auto& [key, value] : t.components()) {
            json item;
            item["i"] = key[0] + 1;
            item["j"] = key[1] + 1;
            item["k"] = key[2] + 1;
            item["l"] = key[3] + 1;
            item["value"] = value;
            arr.push_back(std::move(item));
        }
        return arr;
    };
    j["A1"] = comps(s.A1);
    j["A2"] = comps(s.A2);
    return j;
}

int run_check(const std::string& path, bool as_json) {
    json doc = load_json_file(path);
    auto [form, tensor] = model_parts_from_json(doc);

    Report report;
    report.subject = path;
    if (tensor.dim() <= kMaxFullBianchiDim) {
        if (auto bad = first_bianchi_violation(tensor.dense())) {
            std::ostringstream os;
            os << "first Bianchi fails at (" << (*bad)[0] + 1 << "," << (*bad)[1] + 1 << "," << (*bad)[2] + 1
               << "," << (*bad)[3] + 1 << ")";
            report.add("curvature-symmetries", false, os.str());
            report.print(std::cout);
            return kExitCheckFailure;
        }
        report.add("curvature-symmetries", true);
    } else {
        report.add("curvature-symmetries", validate_act_sampled(tensor, 4096), "sampled");
    }

    Model<Rational> model = Model<Rational>::make_unchecked(form, tensor);
    const bool c3 = commuting_tensor_identity(model);
    const bool c1 = commuting_via_jacobi(model, 4);
    const bool c2 = commuting_via_skew_curv(model, 4);
    report.add("commuting-conditions-agree", c1 == c3 && c2 == c3,
               std::string("tensor-identity=") + (c3 ? "true" : "false"));

    Classification cls = classify_simple(model);
    report.add("classification", true, classification_to_json(cls)["variant"].get<std::string>());
    report.scalars["a1"] = cls.a1.to_string();
    report.scalars["a2_squared"] = cls.a2_squared.to_string();
    if (cls.kind == ModelKind::NotSimple) report.scalars["reason"] = to_string(cls.reason);

    Signature sig = signature(model.inner());
    report.scalars["signature"] = "(" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ")";

    if (as_json) {
        json out;
        out["subject"] = report.subject;
        json checks = json::array();
        for (const auto& c : report.checks) {
            json jc;
            jc["name"] = c.name;
            jc["status"] = c.pass ? "pass" : "fail";
            jc["detail"] = c.detail;
            checks.push_back(std::move(jc));
        }
        out["checks"] = std::move(checks);
        out["classification"] = classification_to_json(cls);
        out["signature"] = {sig.positive, sig.negative};
        std::cout << out.dump(2) << "\n";
    } else {
        report.print(std::cout);
    }
    return report.all_pass() ? kExitAllPass : kExitCheckFailure;
}

int run_construct(const std::string& seed_path, const std::string& out_path) {
    Seed<Rational> seed = seed_from_json(load_json_file(seed_path));
    Model<Rational> model = build_model(seed);
    if (!out_path.empty()) save_json_file(out_path, model_to_json(model));
    Report report;
    report.subject = seed_path;
    report.add("seed-valid", true);
    report.add("model-built", true, "dim " + std::to_string(model.dim()));
    report.scalars["a1"] = seed.a1.to_string();
    report.scalars["a2"] = seed.a2.to_string();
    report.print(std::cout);
    if (out_path.empty()) std::cout << model_to_json(model).dump(2) << "\n";
    return kExitAllPass;
}

int run_decompose(const std::string& model_path, const std::string& out_path, double tol) {
    Model<Rational> model = model_from_json(load_json_file(model_path));
    ExtractionReport rep;
    try {
        rep = extract_seed(model, tol);
    } catch (const NotSimpleComplex& e) {
        std::cout << "FAIL: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const ToleranceExceeded& e) {
        std::cout << "FAIL: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    if (!out_path.empty()) save_json_file(out_path, seed_to_json_double(rep.seed));

    Report report;
    report.subject = model_path;
    report.add("adapted-basis", rep.basis_residual <= tol, "residual " + std::to_string(rep.basis_residual));
    report.add("extracted-tensors-einstein", rep.einstein_residual <= tol,
               "residual " + std::to_string(rep.einstein_residual));
    report.add("reconstruction", rep.reconstruction_residual <= tol,
               "residual " + std::to_string(rep.reconstruction_residual));
    report.scalars["a1"] = std::to_string(rep.a1);
    report.scalars["a2"] = std::to_string(rep.a2);
    report.scalars["p"] = std::to_string(rep.seed.p());
    report.print(std::cout);

    std::cout << "adapted basis columns (e+ block, then e- block):\n";
    for (int r = 0; r < rep.basis.vectors.rows(); ++r) {
        std::cout << " ";
        for (int c = 0; c < rep.basis.vectors.cols(); ++c) std::cout << " " << rep.basis.vectors(r, c);
        std::cout << "\n";
    }
    return report.all_pass() ? kExitAllPass : kExitCheckFailure;
}

int run_equiv_apply(const std::string& seed_path, const std::string& t_path, const std::string& out_path,
                    const std::string& route) {
    Seed<Rational> seed = seed_from_json(load_json_file(seed_path));
    Matrix<Rational> t = matrix_file_from_json(load_json_file(t_path));
    Seed<Rational> out;
    try {
        out = route == "graph" ? transform_seed_graph(seed, t) : transform_seed_expanded(seed, t);
    } catch (const WitnessInvalid& e) {
        std::cout << "FAIL: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    if (!out_path.empty())
        save_json_file(out_path, seed_to_json(out));
    else
        std::cout << seed_to_json(out).dump(2) << "\n";
    Report report;
    report.subject = seed_path;
    report.add("witness-operator", true, route);
    report.scalars["a1"] = out.a1.to_string();
    report.scalars["a2"] = out.a2.to_string();
    report.print(std::cout);
    return kExitAllPass;
}

int run_equiv_verify(const std::string& seed_path, const std::string& tilde_path, const std::string& witness_path,
                     double tol) {
    Seed<Rational> seed = seed_from_json(load_json_file(seed_path));
    Seed<Rational> tilde = seed_from_json(load_json_file(tilde_path));
    Witness<Rational> witness = witness_from_json(load_json_file(witness_path));
    bool ok;
    try {
        ok = verify_witness(seed, tilde, witness, tol);
    } catch (const WitnessInvalid& e) {
        std::cout << "FAIL: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    Report report;
    report.subject = seed_path + " ~ " + tilde_path;
    report.add("witness-verifies", ok);
    report.print(std::cout);
    return ok ? kExitAllPass : kExitCheckFailure;
}

int run_example22(const std::string& s_text, const std::string& point_text) {
    const Rational s = Rational::parse(s_text);
    PolyMetric metric = example22_metric(s);
    std::vector<Rational> point = parse_point(point_text, 4);
    Model<Rational> model = riemann_model_at(metric, point);
    std::cout << model_to_json(model).dump(2) << "\n";

    Report report;
    report.subject = "example22 s=" + s.to_string() + " point=(" + point_text + ")";

    CurvTensor<Rational> expected(4);
    expected.set(0, 2, 0, 3, s);
    expected.set(0, 2, 1, 2, -s);
    expected.set(0, 3, 1, 3, s);
    expected.set(1, 2, 1, 3, -s);
    report.add("curvature-components", model.tensor() == expected,
               "R1314=s, R1323=-s, R1424=s, R2324=-s");

    Matrix<Rational> want(4, 4);
    want(1, 0) = Rational(-2) * s;
    want(0, 1) = Rational(2) * s;
    want(3, 2) = Rational(2) * s;
    want(2, 3) = Rational(-2) * s;
    report.add("ricci-table", ricci(model) == want, "rho d1=-2s d2, d2=2s d1, d3=2s d4, d4=-2s d3");

    report.add("locally-symmetric", is_locally_symmetric(metric));

    Classification cls = classify_simple(model);
    bool class_ok = s.is_zero() ? cls.kind == ModelKind::Einstein
                                : (cls.kind == ModelKind::SimpleComplex && cls.a1 == Rational(0) &&
                                   cls.a2_squared == Rational(4) * s * s);
    report.add("classification", class_ok, s.is_zero() ? "Einstein(0)" : "SimpleComplex");
    report.scalars["a1"] = cls.a1.to_string();
    report.scalars["a2_squared"] = cls.a2_squared.to_string();

    Signature sig = signature(model.inner());
    report.add("signature-neutral", sig == Signature{2, 2});

    report.print(std::cout);
    return report.all_pass() ? kExitAllPass : kExitCheckFailure;
}

int run_curvature(const std::string& metric_path, const std::string& point_text, const std::string& out_path) {
    PolyMetric metric = metric_from_json(load_json_file(metric_path));
    std::vector<Rational> point = parse_point(point_text, metric.nvars());
    Model<Rational> model = riemann_model_at(metric, point);
    if (!out_path.empty())
        save_json_file(out_path, model_to_json(model));
    else
        std::cout << model_to_json(model).dump(2) << "\n";
    return kExitAllPass;
}

int run_random_einstein(int dim, const std::string& kind, const std::string& constant_text, uint64_t rng_seed,
                        const std::string& out_path) {
    Model<Rational> model = random_einstein_model(dim, kind, Rational::parse(constant_text), rng_seed);
    auto a = is_einstein(model);
    Report report;
    report.subject = "random-einstein dim=" + std::to_string(dim) + " kind=" + kind;
    report.add("einstein", a.has_value(), a ? "constant " + a->to_string() : "");
    if (!out_path.empty())
        save_json_file(out_path, model_to_json(model));
    else
        std::cout << model_to_json(model).dump(2) << "\n";
    report.print(std::cout);
    return report.all_pass() ? kExitAllPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic curvature tensor models: construct, classify, decompose, compare"};
    app.require_subcommand(1);

    std::string model_path, seed_path, tilde_path, witness_path, t_path, metric_path;
    std::string out_path, point_text = "0,0,0,0", s_text = "1", constant_text = "1", kind = "constant";
    std::string route = "expanded";
    double tol = 1e-9;
    double verify_tol = 0.0;  // exact by default on rational inputs
    int dim = 4;
    uint64_t rng_seed = 0;
    bool as_json = false;

    auto* check = app.add_subcommand("check", "validate and classify a model file");
    check->add_option("model", model_path)->required();
    check->add_flag("--json", as_json, "print the report as JSON");

    auto* construct = app.add_subcommand("construct", "build the doubled model from a seed file");
    construct->add_option("seed", seed_path)->required();
    construct->add_option("-o,--output", out_path);

    auto* decompose_cmd = app.add_subcommand("decompose", "extract a seed from a simple non-Einstein model");
    decompose_cmd->add_option("model", model_path)->required();
    decompose_cmd->add_option("-o,--output", out_path);
    decompose_cmd->add_option("--tol", tol);

    auto* equiv_apply = app.add_subcommand("equiv-apply", "reparametrize a seed along a skew-adjoint T");
    equiv_apply->add_option("seed", seed_path)->required();
    equiv_apply->add_option("--T", t_path)->required();
    equiv_apply->add_option("-o,--output", out_path);
    equiv_apply->add_option("--route", route)->check(CLI::IsMember({"expanded", "graph"}));

    auto* equiv_verify = app.add_subcommand("equiv-verify", "verify an isomorphism witness (theta, T)");
    equiv_verify->add_option("seed", seed_path)->required();
    equiv_verify->add_option("seedtilde", tilde_path)->required();
    equiv_verify->add_option("--witness", witness_path)->required();
    equiv_verify->add_option("--tol", verify_tol);

    auto* example = app.add_subcommand("example22", "the built-in signature-(2,2) locally symmetric example");
    example->add_option("--s", s_text);
    example->add_option("--point", point_text);

    auto* curvature = app.add_subcommand("curvature", "curvature model of a polynomial metric at a point");
    curvature->add_option("metric", metric_path)->required();
    curvature->add_option("--point", point_text)->required();
    curvature->add_option("-o,--output", out_path);

    auto* random_e = app.add_subcommand("random-einstein", "deterministic random Einstein model");
    random_e->add_option("--dim", dim)->required();
    random_e->add_option("--kind", kind)->check(CLI::IsMember({"constant", "kaehler"}));
    random_e->add_option("--constant", constant_text);
    random_e->add_option("--rng-seed", rng_seed)->required();
    random_e->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(model_path, as_json);
        if (construct->parsed()) return run_construct(seed_path, out_path);
        if (decompose_cmd->parsed()) return run_decompose(model_path, out_path, tol);
        if (equiv_apply->parsed()) return run_equiv_apply(seed_path, t_path, out_path, route);
        if (equiv_verify->parsed()) return run_equiv_verify(seed_path, tilde_path, witness_path, verify_tol);
        if (example->parsed()) return run_example22(s_text, point_text);
        if (curvature->parsed()) return run_curvature(metric_path, point_text, out_path);
        if (random_e->parsed()) return run_random_einstein(dim, kind, constant_text, rng_seed, out_path);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InvalidTensor& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const SeedInvariantViolation& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
