// Command-line front end: classify embedding queries, evaluate norms of step
// functions, and run the numeric verification harnesses.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glz/verify.hpp"

namespace {

glz::SpaceDescriptor space_from_arg(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return glz::SpaceDescriptor::from_json(text);
    return glz::SpaceDescriptor::parse(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << bytes;
}

int finish_reports(const std::vector<glz::VerificationReport>& reports,
                   const std::string& csv_path) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool all_pass = !reports.empty();
    for (const auto& rep : reports) {
        arr.push_back(nlohmann::ordered_json::parse(rep.to_json()));
        all_pass = all_pass && rep.pass;
    }
    std::cout << arr.dump(2) << "\n";
    if (!csv_path.empty()) write_file(csv_path, glz::reports_to_csv(reports));
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal Sobolev embeddings over the Lorentz-Zygmund scale"};
    app.require_subcommand(1);

    // classify
    int cls_m = 1, cls_n = 2;
    std::string cls_space;
    CLI::App* classify = app.add_subcommand("classify", "dispatch all tables for one query");
    classify->add_option("--m", cls_m, "Sobolev order")->required();
    classify->add_option("--n", cls_n, "ambient dimension")->required();
    classify->add_option("--space", cls_space, "source space, JSON or shorthand")->required();

    // norm
    std::string norm_space, norm_file;
    CLI::App* norm = app.add_subcommand("norm", "numeric norm of a step function");
    norm->add_option("--space", norm_space, "space, JSON or shorthand")->required();
    norm->add_option("--function", norm_file, "step function JSON file")->required();

    // verify
    CLI::App* verify = app.add_subcommand("verify", "numeric checks against symbolic claims");
    verify->require_subcommand(1);
    double band = 10.0;
    int kmin = 8, kmax = 36;
    std::string csv_path;
    std::string lam_str = "0", q_str = "2", alpha_str = "0", beta_str = "0",
                gamma_str = "0";
    CLI::App* lemma51 = verify->add_subcommand("lemma51", "head and tail kernel norms");
    lemma51->add_option("--lambda", lam_str, "power exponent")->required();
    lemma51->add_option("--q", q_str, "Lorentz exponent")->required();
    lemma51->add_option("--alpha", alpha_str, "first log exponent")->required();
    lemma51->add_option("--beta", beta_str, "second log exponent")->required();
    lemma51->add_option("--gamma", gamma_str, "third log exponent");

    std::string l52_q = "2", l52_lambda = "-1/2";
    CLI::App* lemma52 = verify->add_subcommand("lemma52", "three-log refinement norms");
    lemma52->add_option("--q", l52_q, "Lorentz exponent");
    lemma52->add_option("--lambda", l52_lambda, "tail power exponent, negative");

    int tr_m = 1, tr_n = 2;
    std::string tr_space;
    CLI::App* theta_rho = verify->add_subcommand("theta-rho", "reduction gauges vs germs");
    theta_rho->add_option("--m", tr_m, "Sobolev order")->required();
    theta_rho->add_option("--n", tr_n, "ambient dimension")->required();
    theta_rho->add_option("--space", tr_space, "source space, JSON or shorthand")->required();

    std::string du_space;
    int du_trials = 100;
    double du_bound = 50.0;
    CLI::App* duality = verify->add_subcommand("duality", "Hoelder pairing against associate norms");
    duality->add_option("--space", du_space, "space, JSON or shorthand")->required();
    duality->add_option("--trials", du_trials, "number of random pairs");
    duality->add_option("--bound", du_bound, "admissible pairing constant");

    CLI::App* fundamental =
        verify->add_subcommand("fundamental", "phi(r) phi'(r) ~ r on tabulated pairs");

    for (CLI::App* sub : {lemma51, lemma52, theta_rho, fundamental}) {
        sub->add_option("--band", band, "ratio band constant");
        sub->add_option("--kmin", kmin, "smallest grid exponent");
        sub->add_option("--kmax", kmax, "largest grid exponent");
        sub->add_option("--csv", csv_path, "write grid rows to this CSV file");
    }

    // sweep
    std::string suite = "full", json_path;
    CLI::App* sweep = app.add_subcommand("sweep", "table vs derivation over the whole grid");
    sweep->add_option("--suite", suite, "full, holder, morrey, or campanato");
    sweep->add_option("--json", json_path, "write the full report to this JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const glz::GridSpec grid{kmin, kmax, band};
        if (classify->parsed()) {
            glz::EmbeddingQuery q;
            q.m = cls_m;
            q.n = cls_n;
            q.space = space_from_arg(cls_space);
            std::cout << glz::classify(q) << "\n";
            return 0;
        }
        if (norm->parsed()) {
            const glz::SpaceDescriptor x = glz::canonical_space(space_from_arg(norm_space));
            const glz::StepFunction f = glz::StepFunction::from_json(read_file(norm_file));
            std::cout << glz::glz_norm_numeric(x, f, {}).to_json() << "\n";
            return 0;
        }
        if (lemma51->parsed()) {
            glz::PsiParams p;
            p.lambda = glz::Rational::parse(lam_str);
            p.q = glz::ExtendedRational::parse(q_str);
            p.alpha = glz::Rational::parse(alpha_str);
            p.beta = glz::Rational::parse(beta_str);
            p.gamma = glz::Rational::parse(gamma_str);
            return finish_reports(glz::verify_lemma51(p, grid, {}), csv_path);
        }
        if (lemma52->parsed()) {
            return finish_reports(
                glz::verify_lemma52(glz::ExtendedRational::parse(l52_q),
                                    glz::Rational::parse(l52_lambda), grid, {}),
                csv_path);
        }
        if (theta_rho->parsed()) {
            glz::EmbeddingQuery q;
            q.m = tr_m;
            q.n = tr_n;
            q.space = space_from_arg(tr_space);
            return finish_reports({glz::verify_theta_rho(q, grid, {})}, csv_path);
        }
        if (duality->parsed()) {
            const glz::DualityReport rep =
                glz::verify_duality(space_from_arg(du_space), du_trials, {}, du_bound);
            std::cout << rep.to_json() << "\n";
            return rep.pass ? 0 : 1;
        }
        if (fundamental->parsed()) {
            return finish_reports(glz::verify_fundamental(grid, {}), csv_path);
        }
        if (sweep->parsed()) {
            const glz::SweepReport rep = glz::sweep_suite(suite);
            if (!json_path.empty()) write_file(json_path, rep.to_json());
            std::map<std::string, std::pair<int, int>> by_table;
            for (const auto& row : rep.rows) {
                auto& [passed, total] = by_table[row.table];
                passed += row.pass ? 1 : 0;
                ++total;
                if (!row.pass)
                    std::cout << "FAIL " << row.table << " m=" << row.m << " n=" << row.n
                              << " " << row.space << ": " << row.note << "\n";
            }
            for (const auto& [table, counts] : by_table)
                std::cout << table << ": " << counts.first << "/" << counts.second
                          << " tuples\n";
            std::cout << "sweep " << rep.suite << ": " << rep.rows.size() << " tuples, "
                      << (rep.pass ? "pass" : "FAIL") << "\n";
            return rep.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
