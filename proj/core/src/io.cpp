#include "mforge/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mforge {

namespace {

using ojson = nlohmann::ordered_json;

struct LineReader {
    std::istream& in;
    std::string source;
    int lineNo = 0;

    // next non-empty line with comments stripped, tokenized
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineNo;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            tokens.clear();
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error(source + ":" + std::to_string(lineNo) + ": " + what);
    }
};

int parse_int(const LineReader& r, const std::string& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        r.fail("expected an integer, got '" + tok + "'");
    }
}

GaloisField parse_field_header(LineReader& r, const std::vector<std::string>& tokens) {
    if (tokens.size() < 2 || tokens[0] != "field") r.fail("expected 'field q' header");
    int q = parse_int(r, tokens[1]);
    std::vector<int> poly;
    if (tokens.size() > 2) {
        if (tokens[2] != "poly") r.fail("expected 'poly' after the field order");
        for (size_t i = 3; i < tokens.size(); ++i) poly.push_back(parse_int(r, tokens[i]));
    }
    try {
        return poly.empty() ? GaloisField::of_order(q) : GaloisField::of_order(q, poly);
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
}

ojson field_json(const GaloisField& f) {
    ojson j;
    j["q"] = f.q();
    if (f.k() >= 2) j["poly"] = f.reduction();
    return j;
}

ojson matrix_json(const LabeledMatrix& m) {
    ojson j;
    j["field"] = field_json(m.field());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["labels"] = m.labels();
    return j;
}

ojson witness_json(const TransformWitness& w) {
    ojson j;
    j["frobPower"] = w.frobPower;
    int r = 0;
    while (r * r < static_cast<int>(w.rowTransform.size())) ++r;
    ojson grid = ojson::array();
    for (int i = 0; i < r; ++i) {
        ojson row = ojson::array();
        for (int c = 0; c < r; ++c) row.push_back(w.rowTransform[i * r + c]);
        grid.push_back(std::move(row));
    }
    j["rowTransform"] = std::move(grid);
    j["colScale"] = w.colScale;
    j["colPerm"] = w.colPerm;
    return j;
}

std::string column_text(const std::vector<int>& col) {
    std::string s = "(";
    for (size_t i = 0; i < col.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(col[i]);
    }
    return s + ")";
}

ojson partition_json(const ClassPartition& part) {
    ojson classes = ojson::array();
    for (const auto& cls : part.classes) classes.push_back(cls);
    ojson witnesses = ojson::array();
    for (size_t i = 0; i < part.witnessToRep.size(); ++i) {
        if (!part.witnessToRep[i]) continue;
        ojson w;
        w["item"] = i;
        w["to"] = part.representative(part.class_of(static_cast<int>(i)));
        w["witness"] = witness_json(*part.witnessToRep[i]);
        witnesses.push_back(std::move(w));
    }
    ojson j;
    j["classes"] = std::move(classes);
    j["witnesses"] = std::move(witnesses);
    return j;
}

}  // namespace

LabeledMatrix read_matrix(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    std::vector<std::string> tokens;
    if (!r.next(tokens)) r.fail("empty input");
    GaloisField f = parse_field_header(r, tokens);
    if (!r.next(tokens)) r.fail("missing 'rows R cols N' line");
    if (tokens.size() != 4 || tokens[0] != "rows" || tokens[2] != "cols")
        r.fail("expected 'rows R cols N'");
    int rows = parse_int(r, tokens[1]);
    int cols = parse_int(r, tokens[3]);
    if (rows < 1 || cols < 1) r.fail("rows and cols must be positive");

    std::vector<int> entries;
    entries.reserve(rows * cols);
    for (int i = 0; i < rows; ++i) {
        if (!r.next(tokens)) r.fail("missing matrix row " + std::to_string(i + 1));
        if (static_cast<int>(tokens.size()) != cols)
            r.fail("expected " + std::to_string(cols) + " entries, got " +
                   std::to_string(tokens.size()));
        for (const std::string& tok : tokens) {
            int v = parse_int(r, tok);
            if (v < 0 || v >= f.q()) r.fail("entry " + tok + " out of range for " + f.describe());
            entries.push_back(v);
        }
    }
    std::vector<int> labels;
    if (r.next(tokens)) {
        if (tokens[0] != "labels") r.fail("unexpected content after matrix rows");
        if (static_cast<int>(tokens.size()) != cols + 1)
            r.fail("labels line must list " + std::to_string(cols) + " labels");
        for (size_t i = 1; i < tokens.size(); ++i) labels.push_back(parse_int(r, tokens[i]));
        if (r.next(tokens)) r.fail("unexpected content after labels line");
    }
    try {
        return LabeledMatrix(f, rows, cols, std::move(entries), std::move(labels));
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
}

LabeledMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix(in, path);
}

std::string matrix_to_text(const LabeledMatrix& m) {
    std::ostringstream os;
    const GaloisField& f = m.field();
    os << "field " << f.q();
    if (f.k() >= 2) {
        os << " poly";
        for (int c : f.reduction()) os << " " << c;
    }
    os << "\n";
    os << "rows " << m.rows() << " cols " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m.at(i, j);
        }
        os << "\n";
    }
    os << "labels";
    for (int l : m.labels()) os << " " << l;
    os << "\n";
    return os.str();
}

Matroid read_matroid(std::istream& in, const std::string& source) {
    LineReader r{in, source};
    std::vector<std::string> tokens;
    if (!r.next(tokens)) r.fail("empty input");
    if (tokens.size() != 3 || tokens[0] != "matroid") r.fail("expected 'matroid n=N r=R' header");
    auto parse_kv = [&](const std::string& tok, const char* key) {
        std::string prefix = std::string(key) + "=";
        if (tok.rfind(prefix, 0) != 0) r.fail("expected '" + prefix + "...' in header");
        return parse_int(r, tok.substr(prefix.size()));
    };
    int n = parse_kv(tokens[1], "n");
    int rank = parse_kv(tokens[2], "r");
    if (n < 1 || rank < 0 || rank > n) r.fail("invalid matroid dimensions");

    std::vector<uint32_t> bases;
    while (r.next(tokens)) {
        if (tokens[0] != "basis") r.fail("expected 'basis ...' line");
        if (static_cast<int>(tokens.size()) != rank + 1)
            r.fail("basis must list exactly " + std::to_string(rank) + " elements");
        uint32_t mask = 0;
        for (size_t i = 1; i < tokens.size(); ++i) {
            int e = parse_int(r, tokens[i]);
            if (e < 1 || e > n) r.fail("basis element " + tokens[i] + " out of range 1.." +
                                       std::to_string(n));
            uint32_t bit = 1u << (e - 1);
            if (mask & bit) r.fail("repeated element in basis");
            mask |= bit;
        }
        bases.push_back(mask);
    }
    if (bases.empty()) r.fail("matroid needs at least one basis line");
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    try {
        return Matroid::from_bases(std::move(labels), rank, std::move(bases), /*validate=*/true);
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
}

Matroid read_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matroid(in, path);
}

std::string matroid_to_text(const Matroid& m) {
    std::ostringstream os;
    os << "matroid n=" << m.size() << " r=" << m.rank() << "\n";
    for (uint32_t b : m.bases()) {
        os << "basis";
        for (int l : m.labels_of_mask(b)) os << " " << l;
        os << "\n";
    }
    return os.str();
}

std::string render_witness(const TransformWitness& w) { return witness_json(w).dump(); }

std::string render_matrix_json(const LabeledMatrix& m) { return matrix_json(m).dump(); }

std::string render_field(const GaloisField& f, bool tables, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["q"] = f.q();
        j["p"] = f.p();
        j["k"] = f.k();
        if (f.k() >= 2) j["poly"] = f.reduction();
        if (tables) {
            ojson add = ojson::array(), mul = ojson::array();
            for (int a = 0; a < f.q(); ++a) {
                ojson addRow = ojson::array(), mulRow = ojson::array();
                for (int b = 0; b < f.q(); ++b) {
                    addRow.push_back(f.add(a, b));
                    mulRow.push_back(f.mul(a, b));
                }
                add.push_back(std::move(addRow));
                mul.push_back(std::move(mulRow));
            }
            j["add"] = std::move(add);
            j["mul"] = std::move(mul);
        }
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << f.describe() << "\n";
    if (tables) {
        auto table = [&](const char* name, auto op) {
            os << name << ":\n";
            for (int a = 0; a < f.q(); ++a) {
                for (int b = 0; b < f.q(); ++b) os << std::setw(4) << op(a, b);
                os << "\n";
            }
        };
        table("add", [&](int a, int b) { return f.add(a, b); });
        table("mul", [&](int a, int b) { return f.mul(a, b); });
    }
    return os.str();
}

std::string render_equivalence(Relation rel, const std::optional<TransformWitness>& w,
                               bool includeWitness, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["relation"] = relation_name(rel);
        j["equivalent"] = static_cast<bool>(w);
        if (w && includeWitness) j["witness"] = witness_json(*w);
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "relation " << relation_name(rel) << ": " << (w ? "equivalent" : "inequivalent") << "\n";
    if (w && includeWitness) os << "witness " << witness_json(*w).dump() << "\n";
    return os.str();
}

std::string render_isomorphism(const Matroid& a, const Matroid& b,
                               const std::optional<std::vector<int>>& image, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["isomorphic"] = static_cast<bool>(image);
        if (image) {
            ojson map = ojson::array();
            for (size_t i = 0; i < image->size(); ++i) {
                ojson pair = ojson::array();
                pair.push_back(a.labels()[i]);
                pair.push_back((*image)[i]);
                map.push_back(std::move(pair));
            }
            j["map"] = std::move(map);
        }
        return j.dump() + "\n";
    }
    std::ostringstream os;
    if (!image) {
        os << "not isomorphic\n";
    } else {
        os << "isomorphic:";
        for (size_t i = 0; i < image->size(); ++i)
            os << " " << a.labels()[i] << "->" << (*image)[i];
        os << "\n";
    }
    return os.str();
}

std::string render_coordinatization(const CoordinatizationProblem& prob,
                                    const CoordinatizationReport& report, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["status"] = report.representable ? "representable" : "not-representable";
        j["field"] = field_json(report.field);
        j["basis"] = prob.basisLabels;
        ojson forest = ojson::array();
        for (auto [a, b] : prob.forest) forest.push_back(ojson::array({a, b}));
        j["forest"] = std::move(forest);
        ojson unknowns = ojson::array();
        for (auto [a, b] : prob.unknowns) unknowns.push_back(ojson::array({a, b}));
        j["unknowns"] = std::move(unknowns);
        j["total_assignments"] = report.totalAssignments;
        j["assignments"] = report.assignments;
        j["projective_classes"] = report.projective_classes();
        j["geometric"] = partition_json(report.geometric);
        ojson mats = ojson::array();
        for (const auto& m : report.matrices) mats.push_back(matrix_json(m));
        j["matrices"] = std::move(mats);
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "field: " << report.field.describe() << "\n";
    os << "basis:";
    for (int b : prob.basisLabels) os << " " << b;
    os << "\n";
    os << "forest:";
    for (auto [a, b] : prob.forest) os << " " << a << ":" << b;
    os << "\n";
    os << "unknowns:";
    for (auto [a, b] : prob.unknowns) os << " " << a << ":" << b;
    os << "\n";
    os << "assignments tried: " << report.totalAssignments << "\n";
    if (!report.representable) {
        os << "not representable\n";
        return os.str();
    }
    os << "valid assignments:";
    for (const auto& a : report.assignments) os << " " << column_text(a);
    os << "\n";
    os << report.projective_classes() << " projective classes / " << report.geometric_classes()
       << " geometric classes\n";
    for (size_t c = 0; c < report.geometric.classes.size(); ++c) {
        os << "geometric class " << c << ":";
        for (int member : report.geometric.classes[c])
            os << " " << column_text(report.assignments[member]);
        os << "\n";
    }
    return os.str();
}

std::string render_extension(const ExtensionReport& report, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["status"] = "ok";
        j["kind"] = report.coextension ? "coextension" : "extension";
        j["base"] = matrix_json(report.base.base);
        j["new_label"] = report.newLabel;
        j["candidates"] = report.candidates;
        ojson classes = ojson::array();
        for (const ExtensionClass& ec : report.classes) {
            ojson c;
            c["class_id"] = ec.classId;
            c["representative_matrix"] = matrix_json(ec.representativeMatrix);
            c["columns"] = ec.groups;
            c["projective_rep_count"] = ec.projectiveRepCount;
            c["geometric_rep_count"] = ec.geometricRepCount;
            c["witnesses"] = partition_json(ec.geometric)["witnesses"];
            classes.push_back(std::move(c));
        }
        j["classes"] = std::move(classes);
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << (report.coextension ? "coextension" : "extension") << " classes: " << report.classes.size()
       << " (from " << report.candidates.size() << " candidate columns)\n";
    os << std::left << std::setw(6) << "class" << std::setw(10) << "columns" << std::setw(8)
       << "groups" << std::setw(12) << "projective" << std::setw(10) << "geometric" << "\n";
    for (const ExtensionClass& ec : report.classes) {
        os << std::left << std::setw(6) << ec.classId << std::setw(10) << ec.columns.size()
           << std::setw(8) << ec.groups.size() << std::setw(12) << ec.projectiveRepCount
           << std::setw(10) << ec.geometricRepCount << "\n";
    }
    for (const ExtensionClass& ec : report.classes) {
        os << "class " << ec.classId << " groups:";
        for (const auto& group : ec.groups) {
            os << " {";
            for (size_t i = 0; i < group.size(); ++i) {
                if (i) os << " ";
                os << column_text(group[i]);
            }
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

std::string render_catalog(const std::vector<CatalogEntry>& catalog) {
    std::ostringstream os;
    for (const CatalogEntry& e : catalog) {
        ojson j;
        j["id"] = e.id;
        j["n"] = e.n;
        j["r"] = e.r;
        j["q"] = e.representatives.empty() ? 0 : e.representatives[0].base.field().q();
        if (e.parentId >= 0) {
            j["parent"] = e.parentId;
            j["column"] = e.extendingColumn;
        } else {
            j["parent"] = nullptr;
            j["column"] = nullptr;
        }
        ojson reps = ojson::array();
        for (const StandardForm& s : e.representatives) reps.push_back(matrix_json(s.base));
        j["representatives"] = std::move(reps);
        os << j.dump() << "\n";
    }
    return os.str();
}

}  // namespace mforge
