#include "mforge/io.hpp"
#include "mforge/named.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace mforge;

namespace {

// exit codes: 0 success / positive verdict, 1 negative verdict, 2 bad input
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct AnyInput {
    std::optional<LabeledMatrix> matrix;
    Matroid matroid;
};

bool is_builtin(const std::string& spec) { return spec.rfind("builtin:", 0) == 0; }

BuiltinMatroid load_builtin(const std::string& spec) {
    std::string rest = spec.substr(8);
    size_t at = rest.rfind('@');
    if (at == std::string::npos) return builtin_matroid(rest);
    int q = std::stoi(rest.substr(at + 1));
    return builtin_matroid_over(rest.substr(0, at), GaloisField::of_order(q));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string first_token(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) return tok;
    }
    return "";
}

LabeledMatrix load_matrix(const std::string& spec) {
    if (is_builtin(spec)) {
        BuiltinMatroid b = load_builtin(spec);
        if (!b.matrix) throw std::runtime_error(spec + " has no defining matrix");
        return *b.matrix;
    }
    return read_matrix_file(spec);
}

AnyInput load_any(const std::string& spec) {
    if (is_builtin(spec)) {
        BuiltinMatroid b = load_builtin(spec);
        return {b.matrix, b.matroid};
    }
    std::string text = slurp(spec);
    std::string head = first_token(text);
    std::istringstream in(text);
    if (head == "matroid") return {std::nullopt, read_matroid(in, spec)};
    if (head == "field") {
        LabeledMatrix m = read_matrix(in, spec);
        Matroid matroid = matroid_of_matrix(m);
        return {std::move(m), std::move(matroid)};
    }
    throw std::runtime_error(spec + ": expected a 'field ...' or 'matroid ...' header");
}

GaloisField make_field(int q, const std::vector<int>& poly) {
    return poly.empty() ? GaloisField::of_order(q) : GaloisField::of_order(q, poly);
}

StandardForm standardized(const LabeledMatrix& m) {
    bool standard = m.cols() >= m.rows();
    for (int i = 0; standard && i < m.rows(); ++i)
        for (int j = 0; standard && j < m.rows(); ++j)
            if (m.at(i, j) != (i == j ? 1 : 0)) standard = false;
    if (standard) return as_standard_form(m);
    return to_standard_form(m, matroid_of_matrix(m).least_basis_labels());
}

// drops dependent rows so the equivalence engine sees full-row-rank inputs
LabeledMatrix compact_rows(const LabeledMatrix& m) {
    auto [red, rank] = rref(m);
    if (rank == m.rows()) return m;
    LabeledMatrix out(m.field(), rank, m.cols());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, red.at(i, j));
    out.set_labels(m.labels());
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("expected r:c pairs, got '" + item + "'");
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid-forge: equivalence, coordinatization and exhaustive "
                 "extension of matroid representations over GF(q)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.failure_message(CLI::FailureMessage::simple);

    bool json = false;
    int jobs = 1;
    app.add_flag("--json,!--plain", json, "machine-readable output")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for enumerative scans")
        ->envname("MATROID_FORGE_JOBS")
        ->check(CLI::PositiveNumber);

    // field
    auto* fieldCmd = app.add_subcommand("field", "describe GF(q) and its tables");
    int fieldQ = 0;
    std::vector<int> fieldPoly;
    bool fieldTables = false;
    fieldCmd->add_option("q", fieldQ, "field order (prime power)")->required();
    fieldCmd->add_option("--poly", fieldPoly, "reduction polynomial c0 c1 ...");
    fieldCmd->add_flag("--tables", fieldTables, "include addition and multiplication tables");

    // equiv
    auto* equivCmd = app.add_subcommand("equiv", "decide equivalence of two representations");
    std::string relationName = "projective";
    std::string equivA, equivB;
    bool wantWitness = false;
    equivCmd->add_option("--relation", relationName, "projective | algebraic | geometric")
        ->check(CLI::IsMember({"projective", "algebraic", "geometric"}));
    equivCmd->add_option("A", equivA, "first matrix (file or builtin:NAME[@q])")->required();
    equivCmd->add_option("B", equivB, "second matrix")->required();
    equivCmd->add_flag("--witness", wantWitness, "emit a transformation witness");

    // iso
    auto* isoCmd = app.add_subcommand("iso", "decide matroid isomorphism of two inputs");
    std::string isoA, isoB;
    isoCmd->add_option("A", isoA, "matrix or matroid input")->required();
    isoCmd->add_option("B", isoB, "matrix or matroid input")->required();

    // dual
    auto* dualCmd = app.add_subcommand("dual", "dual representation or dual matroid");
    std::string dualInput;
    dualCmd->add_option("INPUT", dualInput, "matrix or matroid input")->required();

    // coordinatize
    auto* coordCmd = app.add_subcommand("coordinatize",
                                        "all GF(q)-representations of an abstract matroid");
    std::string coordMatroid;
    int coordQ = 0;
    std::vector<int> coordPoly;
    std::string coordBasis, coordOnes;
    int maxUnknowns = 12;
    coordCmd->add_option("--matroid", coordMatroid, "matroid input")->required();
    coordCmd->add_option("--field", coordQ, "field order q")->required();
    coordCmd->add_option("--poly", coordPoly, "reduction polynomial for prime powers");
    coordCmd->add_option("--basis", coordBasis, "basis labels, e.g. 1,2,3");
    coordCmd->add_option("--ones", coordOnes, "pinned spanning forest, e.g. 1:4,2:4,...");
    coordCmd->add_option("--max-unknowns", maxUnknowns, "cap on the unknown count")
        ->capture_default_str();

    // extend / coextend
    auto* extendCmd = app.add_subcommand("extend", "single-element extension classes");
    auto* coextendCmd = app.add_subcommand("coextend", "single-element coextension classes");
    std::string extendInput, coextendInput;
    extendCmd->add_option("INPUT", extendInput, "matrix input")->required();
    coextendCmd->add_option("INPUT", coextendInput, "matrix input")->required();

    // catalog
    auto* catalogCmd = app.add_subcommand("catalog",
                                          "exhaustive non-isomorphic catalog from seeds");
    std::vector<std::string> catalogSeeds;
    int maxN = 0;
    catalogCmd->add_option("--max-n", maxN, "largest ground-set size")->required();
    catalogCmd->add_option("SEEDS", catalogSeeds, "seed matrices")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return kExitYes;
        }
        std::cerr << e.what() << "\n";
        return kExitError;
    }

    try {
        if (*fieldCmd) {
            GaloisField f = make_field(fieldQ, fieldPoly);
            std::cout << render_field(f, fieldTables,
                                      json ? ReportFormat::Json : ReportFormat::Plain);
            return kExitYes;
        }

        if (*equivCmd) {
            Relation rel = *relation_from_name(relationName);
            LabeledMatrix a = compact_rows(load_matrix(equivA));
            LabeledMatrix b = compact_rows(load_matrix(equivB));
            std::optional<TransformWitness> w = equivalent(a, b, rel);
            std::cout << render_equivalence(rel, w, wantWitness,
                                            json ? ReportFormat::Json : ReportFormat::Plain);
            return w ? kExitYes : kExitNo;
        }

        if (*isoCmd) {
            AnyInput a = load_any(isoA);
            AnyInput b = load_any(isoB);
            auto image = find_isomorphism(a.matroid, b.matroid);
            std::cout << render_isomorphism(a.matroid, b.matroid, image,
                                            json ? ReportFormat::Json : ReportFormat::Plain);
            return image ? kExitYes : kExitNo;
        }

        if (*dualCmd) {
            AnyInput input = load_any(dualInput);
            if (input.matrix) {
                StandardForm dual = dual_matrix(standardized(*input.matrix));
                std::cout << (json ? render_matrix_json(dual.base) + "\n"
                                   : matrix_to_text(dual.base));
            } else {
                std::cout << matroid_to_text(dual_matroid(input.matroid));
            }
            return kExitYes;
        }

        if (*coordCmd) {
            AnyInput input = load_any(coordMatroid);
            GaloisField f = make_field(coordQ, coordPoly);
            std::optional<std::vector<int>> basis;
            if (!coordBasis.empty()) basis = parse_int_list(coordBasis);
            std::optional<std::vector<std::pair<int, int>>> ones;
            if (!coordOnes.empty()) ones = parse_pair_list(coordOnes);
            CoordinatizationProblem prob = build_problem(input.matroid, basis, ones);
            CoordinatizationReport report = enumerate_representations(prob, f, maxUnknowns, jobs);
            std::cout << render_coordinatization(prob, report,
                                                 json ? ReportFormat::Json : ReportFormat::Plain);
            return report.representable ? kExitYes : kExitNo;
        }

        if (*extendCmd || *coextendCmd) {
            bool co = static_cast<bool>(*coextendCmd);
            LabeledMatrix m = load_matrix(co ? coextendInput : extendInput);
            StandardForm s = standardized(m);
            ExtensionReport report = co ? coextend_all(s, jobs) : extend_all(s, jobs);
            std::cout << render_extension(report, json ? ReportFormat::Json : ReportFormat::Plain);
            return kExitYes;
        }

        if (*catalogCmd) {
            std::vector<StandardForm> seeds;
            for (const std::string& spec : catalogSeeds)
                seeds.push_back(standardized(load_matrix(spec)));
            std::cout << render_catalog(generate_catalog(seeds, maxN, jobs));
            return kExitYes;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
