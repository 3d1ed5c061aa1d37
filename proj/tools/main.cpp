// Command-line frontend: file I/O, fixtures, the isotropic-line demo, seeded
// random corpora and the property-suite driver.
//
// Exit codes: 0 success, 1 when a checked property is violated (a hole
// found, a saturation failure, a failed suite), 2 on input errors.

#include "wtpoly/corpus.hpp"
#include "wtpoly/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using wtpoly::io::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw wtpoly::io::ParseError("cannot write output file: " + output_path);
    out << j.dump(2) << "\n";
}

wtpoly::Mat load_matrix(const std::string& path) {
    return wtpoly::io::mat_from_json(wtpoly::io::load_json_file(path));
}

struct CommonOpts {
    std::string output;
};

int run_matroid(const std::string& matrix_path, std::size_t k, const CommonOpts& opts) {
    wtpoly::Matroid m = wtpoly::matroid_from_matrix(load_matrix(matrix_path), k);
    emit(wtpoly::io::matroid_to_json(m), opts.output);
    return kExitOk;
}

int run_wtset(const std::string& matrix_path, const std::string& lambda, const CommonOpts& opts) {
    wtpoly::WeightSet w =
        wtpoly::weight_set(load_matrix(matrix_path), wtpoly::io::parse_dominant(lambda));
    json j = wtpoly::io::pointset_to_json(w.points);
    j["grading"] = w.grading;
    emit(j, opts.output);
    return kExitOk;
}

int run_semistable(const std::string& matrix_path, const std::string& lambda,
                   const std::string& mu, const CommonOpts& opts) {
    wtpoly::Mat g = load_matrix(matrix_path);
    wtpoly::DominantWeight l = wtpoly::io::parse_dominant(lambda);
    wtpoly::WeightVec m(wtpoly::io::parse_int_list(mu));
    wtpoly::SemistabilityReport rep = wtpoly::semistable(g, l, m);
    emit(wtpoly::io::semistability_report_to_json(rep), opts.output);
    return kExitOk;
}

int run_saturation_check(const std::string& matrix_path, const std::string& lambda,
                         const std::string& points_path, const std::string& shift, bool use_b2,
                         const CommonOpts& opts) {
    wtpoly::SaturationReport rep;
    if (!matrix_path.empty()) {
        wtpoly::Mat g = load_matrix(matrix_path);
        wtpoly::DominantWeight l = wtpoly::io::parse_dominant(lambda);
        wtpoly::WeightSet w = wtpoly::weight_set(g, l);
        rep = wtpoly::root_saturation_check(w.points, wtpoly::type_a_roots(w.n), l.coords());
    } else {
        wtpoly::PointSet pts =
            wtpoly::io::pointset_from_json(wtpoly::io::load_json_file(points_path));
        wtpoly::RootSet rs = use_b2 ? wtpoly::b2_roots() : wtpoly::type_a_roots(pts.dim());
        wtpoly::Vec sh(pts.dim(), 0);
        if (!shift.empty()) sh = wtpoly::io::parse_int_list(shift);
        rep = wtpoly::root_saturation_check(pts, rs, sh);
    }
    emit(wtpoly::io::saturation_report_to_json(rep), opts.output);
    return rep.is_saturated ? kExitOk : kExitViolation;
}

int run_normality(const std::string& matrix_path, const std::string& lambda,
                  const std::string& generators_path, std::size_t max_degree,
                  const CommonOpts& opts) {
    wtpoly::HoleReport rep;
    if (!matrix_path.empty()) {
        rep = wtpoly::orbit_closure_normality(load_matrix(matrix_path),
                                              wtpoly::io::parse_dominant(lambda), max_degree);
    } else {
        wtpoly::PointSet gens =
            wtpoly::io::pointset_from_json(wtpoly::io::load_json_file(generators_path));
        rep = wtpoly::holes_up_to(wtpoly::GradedGenerators(std::move(gens)), max_degree);
    }
    emit(wtpoly::io::hole_report_to_json(rep), opts.output);
    return rep.normal_up_to_degree ? kExitOk : kExitViolation;
}

int run_extend_basis(const std::string& roots_path, std::size_t n, const CommonOpts& opts) {
    wtpoly::PointSet pts = wtpoly::io::pointset_from_json(wtpoly::io::load_json_file(roots_path));
    if (n == 0) n = pts.dim();
    std::vector<wtpoly::Vec> roots(pts.points().begin(), pts.points().end());
    auto out = wtpoly::extend_to_root_basis(roots, n);
    json j;
    if (auto* ext = std::get_if<wtpoly::BasisExtension>(&out)) {
        j["ok"] = true;
        json basis = json::array();
        for (const wtpoly::Vec& r : ext->basis) basis.push_back(r);
        j["basis"] = basis;
        json factors = json::array();
        for (const wtpoly::Integer& d : ext->invariant_factors) factors.push_back(d.str());
        j["invariant_factors"] = factors;
        emit(j, opts.output);
        return kExitOk;
    }
    const auto& fail = std::get<wtpoly::IndependenceFailure>(out);
    j["ok"] = false;
    json cyc = json::array();
    for (std::size_t v : fail.cycle_vertices) cyc.push_back(v + 1);
    j["cycle_vertices"] = cyc;
    json members = json::array();
    for (std::size_t e : fail.cycle_input_roots) members.push_back(e + 1);
    j["cycle_input_roots"] = members;
    emit(j, opts.output);
    return kExitViolation;
}

int run_so5_demo(const CommonOpts& opts) {
    wtpoly::So5Report rep = wtpoly::so5_demo();
    json j;
    j["weight_set"] = wtpoly::io::pointset_to_json(rep.weight_set);
    j["saturation"] = wtpoly::io::saturation_report_to_json(rep.saturation);
    j["origin_in_minkowski_square"] = rep.origin_in_square;
    j["matches_expected"] = rep.matches_expected;
    emit(j, opts.output);
    return rep.matches_expected ? kExitOk : kExitViolation;
}

int run_property_suite(const std::string& suite, const wtpoly::CorpusSpec& spec,
                       const CommonOpts& opts) {
    wtpoly::SuiteResult res = wtpoly::run_suite(suite, spec);
    json j;
    j["suite"] = res.suite;
    j["count"] = res.count;
    j["passes"] = res.passes;
    j["failures"] = res.count - res.passes;
    j["first_counterexample"] = res.first_counterexample;
    emit(j, opts.output);
    return res.all_passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact weight sets of flags: matroid polytopes, torus semistability "
                 "witnesses, root saturation, and orbit-closure normality certificates"};
    app.require_subcommand(1);
    CommonOpts opts;

    std::string matrix_path, lambda, mu, points_path, generators_path, roots_path, shift, suite;
    std::size_t k = 1, max_degree = 4, n = 0;
    bool use_b2 = false;
    wtpoly::CorpusSpec spec_in;

    auto* c_matroid = app.add_subcommand("matroid", "Bases of the rank-k matroid of a matrix");
    c_matroid->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    c_matroid->add_option("--k", k, "rank")->required();
    c_matroid->add_option("--output", opts.output, "write JSON here instead of stdout");

    auto* c_wtset = app.add_subcommand("wtset", "Weight set of a flag for a dominant weight");
    c_wtset->add_option("--matrix", matrix_path)->required();
    c_wtset->add_option("--lambda", lambda, "dominant weight, e.g. 2,1,0")->required();
    c_wtset->add_option("--output", opts.output);

    auto* c_semi = app.add_subcommand("semistable", "Semistability with bracket witness");
    c_semi->add_option("--matrix", matrix_path)->required();
    c_semi->add_option("--lambda", lambda)->required();
    c_semi->add_option("--mu", mu, "linearization weight, e.g. 1,1,1")->required();
    c_semi->add_option("--output", opts.output);

    auto* c_sat = app.add_subcommand("saturation-check", "Root saturation of a weight set or point set");
    c_sat->add_option("--matrix", matrix_path);
    c_sat->add_option("--lambda", lambda);
    c_sat->add_option("--points", points_path, "point set JSON file (alternative to --matrix)");
    c_sat->add_option("--shift", shift, "affine anchor for --points mode");
    c_sat->add_flag("--b2", use_b2, "use the rank-2 B-type root data in --points mode");
    c_sat->add_option("--output", opts.output);

    auto* c_norm = app.add_subcommand("normality", "Semigroup holes up to a degree bound");
    c_norm->add_option("--matrix", matrix_path);
    c_norm->add_option("--lambda", lambda);
    c_norm->add_option("--generators", generators_path, "graded generator point set JSON");
    c_norm->add_option("--max-degree", max_degree, "degree bound (default 4)");
    c_norm->add_option("--output", opts.output);

    auto* c_basis = app.add_subcommand("extend-basis", "Extend independent roots to a lattice basis");
    c_basis->add_option("--roots", roots_path, "point set JSON of type-A roots")->required();
    c_basis->add_option("--n", n, "ambient size (default: dimension of the file)");
    c_basis->add_option("--output", opts.output);

    auto* c_demo = app.add_subcommand("so5-demo", "The isotropic-line counterexample walkthrough");
    c_demo->add_option("--output", opts.output);

    auto* c_suite = app.add_subcommand("property-suite", "Seeded property suites");
    c_suite->add_option("--suite", suite, "ggms | saturation | sat-lemma | intersection | normality | basis")
        ->required();
    auto* o_seed = c_suite->add_option("--seed", spec_in.seed);
    auto* o_count = c_suite->add_option("--count", spec_in.count);
    auto* o_nmax = c_suite->add_option("--n-max", spec_in.n_max);
    auto* o_entry = c_suite->add_option("--entry-bound", spec_in.entry_bound);
    auto* o_lsum = c_suite->add_option("--lambda-sum-max", spec_in.lambda_sum_max);
    c_suite->add_option("--output", opts.output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_matroid->parsed()) return run_matroid(matrix_path, k, opts);
        if (c_wtset->parsed()) return run_wtset(matrix_path, lambda, opts);
        if (c_semi->parsed()) return run_semistable(matrix_path, lambda, mu, opts);
        if (c_sat->parsed()) {
            if (matrix_path.empty() == points_path.empty())
                throw wtpoly::io::ParseError("saturation-check needs exactly one of --matrix or --points");
            if (!matrix_path.empty() && lambda.empty())
                throw wtpoly::io::ParseError("saturation-check --matrix mode needs --lambda");
            return run_saturation_check(matrix_path, lambda, points_path, shift, use_b2, opts);
        }
        if (c_norm->parsed()) {
            if (matrix_path.empty() == generators_path.empty())
                throw wtpoly::io::ParseError("normality needs exactly one of --matrix or --generators");
            if (!matrix_path.empty() && lambda.empty())
                throw wtpoly::io::ParseError("normality --matrix mode needs --lambda");
            return run_normality(matrix_path, lambda, generators_path, max_degree, opts);
        }
        if (c_basis->parsed()) return run_extend_basis(roots_path, n, opts);
        if (c_demo->parsed()) return run_so5_demo(opts);
        if (c_suite->parsed()) {
            wtpoly::CorpusSpec spec = wtpoly::default_spec_for(suite);
            if (o_seed->count()) spec.seed = spec_in.seed;
            if (o_count->count()) spec.count = spec_in.count;
            if (o_nmax->count()) spec.n_max = spec_in.n_max;
            if (o_entry->count()) spec.entry_bound = spec_in.entry_bound;
            if (o_lsum->count()) spec.lambda_sum_max = spec_in.lambda_sum_max;
            return run_property_suite(suite, spec, opts);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        // A failed internal certificate is a violated property, not bad input.
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
