// quiverlab command-line front end.

#include "quiverlab/io.hpp"
#include "quiverlab/quiverlab.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace quiverlab;

namespace {

struct Report {
    std::string command;
    Json input = Json::object();
    Json result = Json::object();
    std::vector<std::string> warnings;
    std::ostringstream text;
    bool failed = false;

    void warn(std::string w)
    {
        text << "warning: " << w << "\n";
        warnings.push_back(std::move(w));
    }

    Json json() const
    {
        return Json{{"command", command}, {"input", input}, {"result", result}, {"warnings", warnings}, {"ok", !failed}};
    }
};

std::string str(const RatMatrix& m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

std::string fmt(double x, int decimals = 6)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << x;
    return os.str();
}

std::string profile_summary(const CycloProfile& p)
{
    if (!p.is_cyclotomic) return "not cyclotomic";
    std::string s = p.periodic ? "periodic, period " + std::to_string(*p.period) : "cyclotomic not periodic";
    s += "; witness (n,l)=(" + std::to_string(p.witness->n) + "," + std::to_string(p.witness->l) + ")";
    return s;
}

// "Finite; Coxeter periodic, period 6", "Affine; cyclotomic not periodic; witness (n,l)=(1,2)"
std::string classification_summary(const QuiverType& type, const CycloProfile& p)
{
    std::string s = type_name(type);
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (!p.is_cyclotomic) return s + "; Coxeter not cyclotomic";
    if (p.periodic) return s + "; Coxeter periodic, period " + std::to_string(*p.period);
    return s + "; cyclotomic not periodic; witness (n,l)=(" + std::to_string(p.witness->n) + "," + std::to_string(p.witness->l) + ")";
}

std::string load(Report& r, const std::string& path)
{
    std::string text = read_file(path);
    r.input = Json{{"path", path}, {"digest", input_digest(text)}};
    return text;
}

void cmd_classify(Report& r, const std::string& path)
{
    const Quiver q = parse_quiver(load(r, path));
    const QuiverType type = classify_quiver(q);
    r.result["quiver_type"] = to_json(type);
    r.text << "vertices: " << q.vertex_count() << ", arrows: " << q.arrow_count() << "\n";
    r.text << "type:     " << type_name(type);
    if (const auto* a = std::get_if<AffineType>(&type)) {
        r.text << ", radical vector (";
        for (std::size_t i = 0; i < a->radical_vector.size(); ++i) r.text << (i ? "," : "") << a->radical_vector[i];
        r.text << ")";
    }
    r.text << "\n";

    if (!q.is_acyclic()) {
        r.failed = true;
        r.text << "error: quiver has an oriented cycle; Cartan and Coxeter data need an acyclic quiver\n";
        r.result["error"] = "cyclic quiver: Cartan stage skipped";
        return;
    }
    const RatMatrix c = cartan_path_algebra(q);
    const RatMatrix phi = coxeter_matrix(c);
    const Polynomial chi = char_poly(phi);
    const CycloProfile profile = cyclotomic_profile(phi);
    const SerreVerdict verdict = graded_path_verdict(q);
    r.result["cartan"] = to_json(c);
    r.result["coxeter"] = to_json(phi);
    r.result["coxeter_char_poly"] = to_json(chi);
    r.result["cyclo_profile"] = to_json(profile);
    r.result["spectral_radius"] = approx_json(spectral_radius(phi), 1e-4);
    r.result["verdict"] = to_json(verdict);

    r.text << "cartan:   " << str(c) << "\n";
    r.text << "coxeter:  " << str(phi) << "\n";
    r.text << "charpoly: " << chi << "\n";
    r.text << "summary:  " << classification_summary(type, profile) << "\n";
    r.text << "verdict:  " << to_string(verdict) << " (" << reason(verdict) << ")\n";
}

std::vector<unsigned> parse_weights(const std::string& s)
{
    std::vector<unsigned> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw Error("invalid weight '" + item + "'");
        }
        if (used != item.size() || v < 1) throw Error("invalid weight '" + item + "'");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

std::vector<Rational> parse_lambdas(const std::string& s)
{
    std::vector<Rational> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
    return out;
}

void cmd_canonical(Report& r, const std::string& path, const std::string& weights, const std::optional<std::string>& lambdas)
{
    CanonicalSpec spec;
    if (!path.empty()) {
        spec = parse_canonical(load(r, path));
    } else {
        if (weights.empty()) throw Error("canonical: give --weights or a spec file");
        spec.weights = parse_weights(weights);
        r.input = Json{{"weights", spec.weights}};
        if (spec.weights.size() < 2) throw Error("canonical spec: t >= 2 required");
        if (lambdas) {
            spec.lambdas = parse_lambdas(*lambdas);
        } else {
            for (std::size_t i = 2; i < spec.weights.size(); ++i) spec.lambdas.push_back(Rational(static_cast<long>(i - 1)));
            if (!spec.lambdas.empty()) r.warn("lambdas not given; using 1, 2, ..., t-2");
        }
    }
    Json lam = Json::array();
    for (const auto& l : spec.lambdas) lam.push_back(to_json(l));
    r.input["lambdas"] = lam;

    const CanonicalVerdict v = canonical_verdict(spec);
    r.result["delta"] = v.delta.get_si();
    r.result["p"] = v.p;
    r.result["verdict"] = to_json(v.verdict);
    const EntropyLine line = entropy_line(v.verdict);
    r.result["entropy_line"] = Json{{"slope", to_json(line.slope)}, {"poly_entropy_bound", line.poly_entropy_bound}};

    const SCAlgebra a = canonical_algebra(spec);
    const RatMatrix phi = coxeter_matrix(cartan_matrix(a));
    const auto check = coxeter_necessary_check(phi, static_cast<std::uint64_t>(*order(v.verdict)), static_cast<std::uint64_t>(v.p));
    const bool consistent = check.status == CoxeterCheck::Status::Passes && v.p % static_cast<std::int64_t>(check.witness->n) == 0;
    r.result["algebra_dim"] = a.dim();
    r.result["coxeter_check"] = to_json(check);
    r.result["cross_check"] = consistent ? "pass" : "fail";
    if (!consistent) r.warn("Coxeter cross-check does not match the verdict");

    r.text << "weights:   (";
    for (std::size_t i = 0; i < spec.weights.size(); ++i) r.text << (i ? "," : "") << spec.weights[i];
    r.text << ")\n";
    r.text << "p:         " << v.p << "\n";
    r.text << "delta:     " << v.delta << "\n";
    r.text << "verdict:   " << to_string(v.verdict) << "\n";
    r.text << "entropy:   h_t = (" << line.slope << ") t, h_pol <= " << line.poly_entropy_bound << "\n";
    r.text << "dim A:     " << a.dim() << "\n";
    r.text << "coxeter:   " << profile_summary(check.profile) << "\n";
    r.text << "cross-check: " << (consistent ? "pass" : "fail") << " (" << check.message << ")\n";
}

void cmd_trivext(Report& r, const std::string& path, std::size_t steps, std::size_t dim_cap)
{
    const AlgebraInput in = parse_algebra(load(r, path));
    const SCAlgebra ta = trivial_extension(in.algebra);
    if (auto err = check_symmetric_form(ta)) throw Error("trivial extension: " + *err);
    const GlobalComplexity g = global_complexity(ta, steps, dim_cap);

    r.result["algebra"] = Json{{"kind", in.kind}, {"dim", in.algebra.dim()}};
    r.result["trivial_extension_dim"] = ta.dim();
    Json simples = Json::array();
    r.text << "algebra: " << in.kind << ", dim " << in.algebra.dim() << "; TA dim " << ta.dim() << "\n";
    for (std::size_t v = 0; v < g.traces.size(); ++v) {
        const auto& t = g.traces[v];
        Json s = to_json(t);
        s["vertex"] = ta.vertices()[v];
        s["estimate"] = to_json(g.per_simple[v]);
        simples.push_back(std::move(s));
        r.text << "S_" << ta.vertices()[v] << ": " << to_string(g.per_simple[v]) << ", " << to_string(t.truncated_by) << "\n  betti:";
        for (auto b : t.betti) r.text << " " << b;
        r.text << "\n";
        if (t.truncated_by == Truncation::DimensionCap)
            r.warn("resolution of S_" + ta.vertices()[v] + " stopped at the dimension cap after " + std::to_string(t.betti.size()) +
                   " terms");
    }
    r.result["simples"] = simples;
    r.result["global_complexity"] = to_json(g.estimate);
    r.text << "glcx estimate: " << to_string(g.estimate);
    if (!std::isnan(g.estimate.loglog_slope))
        r.text << " (log-log slope " << fmt(g.estimate.loglog_slope, 4) << ", exp slope " << fmt(g.estimate.exp_slope, 4) << ")";
    r.text << "\n";
}

void cmd_entropy(Report& r, const std::string& path, std::size_t iterations, double tol)
{
    const Quiver q = parse_quiver(load(r, path));
    if (!q.is_acyclic())
        throw Error("entropy: quiver has an oriented cycle (acyclic quiver required); use 'quiverlab classify' instead");
    const HereditaryEntropy h = hereditary_entropy(q, iterations, tol);
    const RatMatrix phi = coxeter_matrix(cartan_path_algebra(q));
    const GrowthDegree growth = growth_degree(phi, h.start, std::max<std::size_t>(iterations, 12));
    if (iterations < 12) r.warn("growth degree uses N = 12 (fewer iterations requested)");

    r.result["spectral_radius"] = approx_json(h.spectral_radius, tol);
    r.result["h0"] = approx_json(h.h0, tol);
    Json trace = Json::array();
    for (double x : h.trace) trace.push_back(fixed(x));
    r.result["trace"] = Json{{"values", trace}, {"exact", false}};
    r.result["growth"] = growth.exponential ? Json{{"kind", "exponential"}} : Json{{"kind", "polynomial"}, {"degree", growth.degree}};

    r.text << "spectral radius: " << fmt(h.spectral_radius) << "\n";
    r.text << "h0:              " << fmt(h.h0) << "\n";
    r.text << "trace[N]:        " << fmt(h.trace.back()) << " (N = " << iterations << ")\n";
    r.text << "growth:          " << to_string(growth) << "\n";
    r.text << "   k  (1/k) log |Phi^k v|_1\n";
    for (std::size_t k = 1; k <= h.trace.size(); ++k)
        if (k <= 5 || k % 10 == 0 || k == h.trace.size()) r.text << std::setw(4) << k << "  " << fmt(h.trace[k - 1]) << "\n";
}

void cmd_check_coxeter(Report& r, const std::string& path, std::uint64_t l_max, std::uint64_t n_max)
{
    const RatMatrix phi = parse_matrix(load(r, path));
    const auto check = coxeter_necessary_check(phi, l_max, n_max);
    r.result = to_json(check);
    r.result["char_poly"] = to_json(char_poly(phi));
    r.text << "matrix:   " << str(phi) << "\n";
    r.text << "charpoly: " << char_poly(phi) << "\n";
    r.text << "profile:  " << profile_summary(check.profile) << "\n";
    r.text << "result:   " << to_string(check.status) << ": " << check.message << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"quiverlab: quivers, Coxeter matrices, Serre cyclotomicity and trivial extensions"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    std::string file, weights;
    std::optional<std::string> lambdas;
    std::size_t steps = 40, dim_cap = 100000, iterations = 60;
    double tol = 1e-4;
    std::uint64_t l_max = 4, n_max = 1000;

    auto* classify = app.add_subcommand("classify", "trichotomy, Cartan and Coxeter data of a quiver");
    classify->add_option("quiver", file, "quiver JSON file")->required();

    auto* canonical = app.add_subcommand("canonical", "delta-rule verdict for a canonical algebra");
    canonical->add_option("spec", file, "canonical spec JSON file");
    canonical->add_option("--weights", weights, "comma separated weights, e.g. 2,3,5");
    canonical->add_option("--lambdas", lambdas, "comma separated lambda_3..lambda_t");

    auto* trivext = app.add_subcommand("trivext", "complexity of the trivial extension of an algebra");
    trivext->add_option("algebra", file, "quiver, gentle or canonical JSON file")->required();
    trivext->add_option("--steps", steps, "resolution length")->capture_default_str()->check(CLI::PositiveNumber);
    trivext->add_option("--dim-cap", dim_cap, "largest projective dimension")->capture_default_str()->check(CLI::PositiveNumber);

    auto* entropy = app.add_subcommand("entropy", "entropy of the Serre functor of a path algebra");
    entropy->add_option("quiver", file, "quiver JSON file")->required();
    entropy->add_option("--iterations", iterations, "N")->capture_default_str()->check(CLI::PositiveNumber);
    entropy->add_option("--tol", tol, "spectral radius tolerance")->capture_default_str()->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check-coxeter", "necessary condition (Phi^{2n} - I)^l = 0 on a matrix file");
    check->add_option("matrix", file, "JSON matrix of \"p/q\" strings")->required();
    check->add_option("--l-max", l_max, "largest l")->capture_default_str()->check(CLI::PositiveNumber);
    check->add_option("--n-max", n_max, "largest n")->capture_default_str()->check(CLI::PositiveNumber);

    for (auto* sub : {classify, canonical, trivext, entropy, check}) sub->add_flag("--json", json, "machine-readable JSON output");

    CLI11_PARSE(app, argc, argv);

    Report r;
    r.command = app.get_subcommands().front()->get_name();
    try {
        if (*classify) cmd_classify(r, file);
        if (*canonical) cmd_canonical(r, file, weights, lambdas);
        if (*trivext) cmd_trivext(r, file, steps, dim_cap);
        if (*entropy) cmd_entropy(r, file, iterations, tol);
        if (*check) cmd_check_coxeter(r, file, l_max, n_max);
    } catch (const std::exception& e) {
        r.failed = true;
        r.result["error"] = e.what();
        if (json)
            std::cout << r.json().dump(2) << "\n";
        else
            std::cerr << r.text.str() << "error: " << e.what() << "\n";
        return 1;
    }
    if (json)
        std::cout << r.json().dump(2) << "\n";
    else
        std::cout << r.text.str();
    return r.failed ? 1 : 0;
}
