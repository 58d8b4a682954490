// Command-line front end: count, vertices, formula, verify, table.
// Exit codes: 0 success/PASS, 1 usage error, 2 budget exceeded,
// 3 verification FAIL.

#include "magiccount/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>

namespace {

using namespace magiccount;

struct RunConfig {
    std::string cache_path;
    bool no_cache = false;
    int workers = 1;
    std::uint64_t budget = 1'000'000'000;
    bool allow_large = false;

    CountOptions count_options() const { return {budget, workers}; }

    std::unique_ptr<SampleCache> open_cache() const {
        if (no_cache) return std::make_unique<SampleCache>();
        return std::make_unique<SampleCache>(cache_path);
    }
};

// n >= 5 squares and large hypercubes explode the candidate-subset space
void check_size_gate(const ConstraintSystem& cs, const RunConfig& cfg) {
    const Index dim = cs.num_vars() - rank(cs.matrix);
    const bool large = (cs.cls.kind != SquareKind::Hypercube && cs.cls.n >= 5) ||
                       vertex_candidate_count(cs.num_vars(), dim) > 1'000'000;
    if (large && !cfg.allow_large) {
        throw std::runtime_error("vertex enumeration for " + class_spec(cs.cls) +
                                 " is expensive; rerun with --allow-large to proceed");
    }
}

std::string vertex_line(const RationalVector& v) {
    std::string s = "(";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += format_rational(v(i));
    }
    return s + ")";
}

int run_verify(const SquareClass& cls, long long range, const RunConfig& cfg) {
    auto cache = cfg.open_cache();
    const Reconstruction rec = reconstruct(cls, *cache, cfg.count_options());
    std::cout << "degree " << rec.formula.degree << " (dimension check PASS)\n";
    if (range < 0) range = rec.formula.degree + rec.formula.period + 2;
    const long long interior_max = cls.n <= 3 ? cls.n + 4 : 0;
    const ReciprocityReport rep =
        verify_reciprocity(rec.formula, cls, range, interior_max, cfg.count_options());
    const auto line = [](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    };
    line("reflection Q(-n-t) = " + std::string(rep.sign > 0 ? "+" : "-") + "Q(t), t = 0.." +
             std::to_string(range),
         rep.symmetry_pass);
    line("forced zeros Q(-1)..Q(-" + std::to_string(cls.n - 1) + ")", rep.zeros_pass);
    if (interior_max > 0) {
        line("interior reciprocity Q(-t) = (-1)^deg * strict(t), t = 1.." +
                 std::to_string(interior_max),
             rep.interior_pass);
    }
    return rep.pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of magic-square variants and the reconstruction of their "
                 "Ehrhart quasi-polynomials"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    if (const char* env = std::getenv("MAGICCOUNT_CACHE")) cfg.cache_path = env;
    if (cfg.cache_path.empty()) cfg.cache_path = "magiccount-cache.jsonl";
    app.add_option("--cache", cfg.cache_path, "Sample cache path (JSON lines)");
    app.add_flag("--no-cache", cfg.no_cache, "Disable the sample cache");
    app.add_option("--workers", cfg.workers, "Parallel workers")->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.budget, "DFS node budget")
        ->check(CLI::Range(std::uint64_t(1'000'000), std::uint64_t(1) << 62));
    app.add_flag("--allow-large", cfg.allow_large,
                 "Permit expensive vertex enumerations (n >= 5)");

    std::string spec;
    long long t_value = 0;
    long long range = -1;
    bool as_json = false, as_csv = false;

    CLI::App* c_count = app.add_subcommand("count", "Exact count at one line sum");
    c_count->add_option("spec", spec, "Class spec, e.g. magic:3 or hypercube:3:3")->required();
    c_count->add_option("--t", t_value, "Line sum")->required()->check(CLI::NonNegativeNumber);

    CLI::App* c_vert = app.add_subcommand("vertices", "Polytope vertices and period bound");
    c_vert->add_option("spec", spec)->required();
    c_vert->add_flag("--json", as_json, "JSON output");

    CLI::App* c_form = app.add_subcommand("formula", "Reconstructed quasi-polynomial");
    c_form->add_option("spec", spec)->required();
    c_form->add_flag("--json", as_json, "JSON output");
    c_form->add_flag("--csv", as_csv, "CSV output");

    CLI::App* c_verify = app.add_subcommand("verify", "Reciprocity and degree checks");
    c_verify->add_option("spec", spec)->required();
    c_verify->add_option("--range", range, "Reflection-check range (default degree+period+2)");

    CLI::App* c_table = app.add_subcommand("table", "Vertex counts and lcms for the n = 3, 4 classes");
    c_table->add_flag("--csv", as_csv, "CSV output");

    try {
        app.parse(argc, argv);

        if (c_count->parsed()) {
            const SquareClass cls = parse_class_spec(spec);
            auto cache = cfg.open_cache();
            std::cout << cache->get_or_compute(cls, t_value, false, cfg.count_options()).str()
                      << "\n";
        } else if (c_vert->parsed()) {
            const SquareClass cls = parse_class_spec(spec);
            const ConstraintSystem cs = build_constraints(cls);
            check_size_gate(cs, cfg);
            const VertexSet vs = enumerate_vertices(cs);
            if (as_json) {
                std::cout << vertex_set_to_json(vs).dump() << "\n";
            } else {
                std::cout << vs.vertices.size() << " vertices, lcm " << vs.period_bound.str()
                          << "\n";
                for (const auto& v : vs.vertices) std::cout << vertex_line(v) << "\n";
            }
        } else if (c_form->parsed()) {
            const SquareClass cls = parse_class_spec(spec);
            check_size_gate(build_constraints(cls), cfg);
            auto cache = cfg.open_cache();
            const Reconstruction rec = reconstruct(cls, *cache, cfg.count_options());
            const FormulaStyle style = as_json  ? FormulaStyle::Json
                                      : as_csv ? FormulaStyle::Csv
                                               : FormulaStyle::Human;
            std::cout << format(rec.formula, cls, style);
            if (style == FormulaStyle::Human) {
                std::cout << "\ndegree " << rec.formula.degree << ", period "
                          << rec.formula.period;
            }
            std::cout << "\n";
        } else if (c_verify->parsed()) {
            const SquareClass cls = parse_class_spec(spec);
            check_size_gate(build_constraints(cls), cfg);
            return run_verify(cls, range, cfg);
        } else if (c_table->parsed()) {
            const std::pair<std::string, std::string> rows[] = {
                {"M_3", "magic:3"},       {"S_3", "symmetric:3"}, {"P_3", "pandiagonal:3"},
                {"M_4", "magic:4"},       {"S_4", "symmetric:4"}, {"P_4", "pandiagonal:4"},
            };
            if (as_csv) std::cout << "polytope,vertices,lcm\n";
            for (const auto& [label, rowspec] : rows) {
                const VertexSet vs =
                    enumerate_vertices(build_constraints(parse_class_spec(rowspec)));
                if (as_csv) {
                    std::cout << label << "," << vs.vertices.size() << ","
                              << vs.period_bound.str() << "\n";
                } else {
                    std::cout << label << "  " << vs.vertices.size() << " vertices, lcm "
                              << vs.period_bound.str() << "\n";
                }
            }
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
