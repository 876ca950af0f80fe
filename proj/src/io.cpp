#include "bggwb/io.hpp"

#include <fstream>
#include <sstream>

#include "bggwb/errors.hpp"
#include "json.hpp"

namespace bggwb {

using nlohmann::json;

namespace {

std::string scalar_text(const mpq_class& v) { return v.get_str(); }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_text(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json poly_matrix_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
    return obj.at(key);
}

int to_int(const json& v, const std::string& what) {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            const std::string s = v.get<std::string>();
            const int r = std::stoi(s, &used);
            if (used == s.size()) return r;
        } catch (const std::exception&) {
        }
    }
    throw ParseError(what + ": expected an integer");
}

std::size_t to_count(const json& v, const std::string& what) {
    const int r = to_int(v, what);
    if (r < 0) throw ParseError(what + ": expected a nonnegative integer");
    return static_cast<std::size_t>(r);
}

mpq_class to_scalar(const json& v, Field f, const std::string& what) {
    try {
        if (v.is_number_integer()) return normalize(mpq_class(v.get<long>()), f);
        if (v.is_string()) return normalize(parse_rational(v.get<std::string>()), f);
    } catch (const ParseError& e) {
        throw ParseError(what + ": " + e.what());
    }
    throw ParseError(what + ": expected a scalar string such as \"3/2\"");
}

Matrix to_matrix(const json& v, Field f, const std::string& what) {
    if (!v.is_array()) throw ParseError(what + ": expected an array of rows");
    if (v.empty()) return Matrix(f, 0, 0);
    const std::size_t cols = v.front().is_array() ? v.front().size() : 0;
    Matrix m(f, v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_array() || v[i].size() != cols) throw ParseError(what + ": ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.raw(i, j) = to_scalar(v[i][j], f, what);
    }
    return m;
}

PolyMatrix to_poly_matrix(const json& v, Field f, int nvars, std::size_t rows, std::size_t cols,
                          const std::string& what) {
    if (!v.is_array()) throw ParseError(what + ": expected an array of rows");
    if (v.size() != rows)
        throw DimensionMismatch(what + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
    PolyMatrix m(f, nvars, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            throw DimensionMismatch(what + ": expected " + std::to_string(cols) + " columns in row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j) {
            const json& c = v[i][j];
            try {
                if (c.is_number_integer())
                    m(i, j) = Polynomial::constant(f, nvars, mpq_class(c.get<long>()));
                else if (c.is_string())
                    m(i, j) = Polynomial::parse(f, nvars, c.get<std::string>());
                else
                    throw ParseError("expected a polynomial string");
            } catch (const ParseError& e) {
                throw ParseError(what + "[" + std::to_string(i) + "][" + std::to_string(j) + "]: " + e.what());
            }
        }
    }
    return m;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Index prefix "e1", "x2" -> 0-based index below `count`.
int prefixed_index(const std::string& key, char prefix, int count, const std::string& what) {
    if (key.size() < 2 || key[0] != prefix) throw ParseError(what + ": bad key \"" + key + "\"");
    int a = 0;
    try {
        std::size_t used = 0;
        a = std::stoi(key.substr(1), &used);
        if (used != key.size() - 1) throw ParseError("");
    } catch (const std::exception&) {
        throw ParseError(what + ": bad key \"" + key + "\"");
    }
    if (a < 1 || a > count)
        throw DimensionMismatch(what + ": \"" + key + "\" out of range (q=" + std::to_string(count) + ")");
    return a - 1;
}

GradedEModule parse_emodule(const json& j, Field f) {
    const int q = to_int(require_key(j, "q", "emodule"), "q");
    if (q < 0) throw ParseError("emodule: q must be nonnegative");
    const json& comps = require_key(j, "components", "emodule");
    if (!comps.is_object()) throw ParseError("emodule: components must be an object");
    std::map<int, std::size_t> dims;
    for (auto it = comps.begin(); it != comps.end(); ++it)
        dims[to_int(json(it.key()), "component degree")] = to_count(it.value(), "component " + it.key());
    GradedEModule m = dims.empty() ? GradedEModule::zero({q, f}) : [&] {
        std::vector<std::size_t> d;
        for (int t = dims.begin()->first; t <= dims.rbegin()->first; ++t) d.push_back(dims.count(t) ? dims[t] : 0);
        return GradedEModule({q, f}, dims.begin()->first, d);
    }();
    if (j.contains("action")) {
        const json& act = j.at("action");
        if (!act.is_object()) throw ParseError("emodule: action must be an object");
        for (auto it = act.begin(); it != act.end(); ++it) {
            const int a = prefixed_index(it.key(), 'e', q, "action");
            if (!it.value().is_object()) throw ParseError("action " + it.key() + ": expected degree -> matrix");
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
                const int deg = to_int(json(jt.key()), "action degree");
                const Matrix mat = to_matrix(jt.value(), f, "action " + it.key() + " at degree " + jt.key());
                if (mat.rows() == 0) continue;
                m.set_action(a, deg, mat);
            }
        }
    }
    require_valid(m, "emodule file");
    return m;
}

LinearSComplex parse_scomplex(const json& j, Field f) {
    const int q = to_int(require_key(j, "q", "scomplex"), "q");
    const json& rj = require_key(j, "ranks", "scomplex");
    if (!rj.is_array()) throw ParseError("scomplex: ranks must be an array");
    std::vector<std::size_t> ranks;
    for (const auto& r : rj) ranks.push_back(to_count(r, "rank"));
    const int first = j.contains("first_degree") ? to_int(j.at("first_degree"), "first_degree") : 0;
    LinearSComplex l({q, f}, ranks, first);
    if (j.contains("labels")) {
        const json& lj = j.at("labels");
        if (!lj.is_array() || lj.size() != ranks.size()) throw ParseError("scomplex: labels must match ranks");
        for (std::size_t n = 0; n < ranks.size(); ++n) l.labels[n] = lj[n].get<std::string>();
    }
    if (j.contains("coefficients")) {
        const json& cj = j.at("coefficients");
        for (auto it = cj.begin(); it != cj.end(); ++it) {
            const int a = prefixed_index(it.key(), 'x', q, "coefficients");
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
                const int n = to_int(json(jt.key()), "spot");
                const Matrix mat = to_matrix(jt.value(), f, "coefficient " + it.key() + " at spot " + jt.key());
                if (mat.rows() == 0) continue;
                if (n < 0) throw DimensionMismatch("coefficient spot " + jt.key() + " out of range");
                l.set_coefficient(a, static_cast<std::size_t>(n), mat);
            }
        }
    }
    const auto bad = l.square_violations();
    if (!bad.empty()) throw InvariantViolation("scomplex file: d^2 != 0: " + bad.front());
    return l;
}

FilteredFreeComplex parse_rcomplex(const json& j, Field f) {
    const int e = to_int(require_key(j, "nvars", "rcomplex"), "nvars");
    const int N = to_int(require_key(j, "precision", "rcomplex"), "precision");
    const int lo = j.contains("n_lo") ? to_int(j.at("n_lo"), "n_lo") : 0;
    const json& rj = require_key(j, "ranks", "rcomplex");
    if (!rj.is_array()) throw ParseError("rcomplex: ranks must be an array");
    std::vector<std::size_t> ranks;
    for (const auto& r : rj) ranks.push_back(to_count(r, "rank"));
    FilteredFreeComplex k(f, e, N, lo, ranks);
    if (j.contains("differentials")) {
        const json& dj = j.at("differentials");
        if (!dj.is_object()) throw ParseError("rcomplex: differentials must be an object");
        for (auto it = dj.begin(); it != dj.end(); ++it) {
            const int n = to_int(json(it.key()), "differential spot");
            k.set_differential(n, to_poly_matrix(it.value(), f, e, k.rank(n + 1), k.rank(n), "d^" + it.key()));
        }
    }
    require_valid(k, "rcomplex file");
    return k;
}

}  // namespace

WorkbenchObject parse_workbench(std::string_view text, std::optional<Field> field_override) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    const json& sj = require_key(j, "schema", "file");
    if (!sj.is_string()) throw ParseError("schema must be a string");
    const std::string schema = sj.get<std::string>();
    Field f = field_override ? *field_override : Field::parse(require_key(j, "field", "file").get<std::string>());
    try {
        if (schema == "emodule/1") return parse_emodule(j, f);
        if (schema == "scomplex/1") return parse_scomplex(j, f);
        if (schema == "rcomplex/1") return parse_rcomplex(j, f);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + schema + " payload: " + e.what());
    }
    throw ParseError("unsupported schema \"" + schema + "\"");
}

WorkbenchObject parse_file(const std::string& path, std::optional<Field> field_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_workbench(ss.str(), field_override);
}

GradedEModule read_emodule_file(const std::string& path, std::optional<Field> field_override) {
    auto o = parse_file(path, field_override);
    if (auto* m = std::get_if<GradedEModule>(&o)) return *m;
    throw ParseError(path + ": expected an emodule/1 file, got " + schema_name(o));
}

FilteredFreeComplex read_rcomplex_file(const std::string& path, std::optional<Field> field_override) {
    auto o = parse_file(path, field_override);
    if (auto* k = std::get_if<FilteredFreeComplex>(&o)) return *k;
    throw ParseError(path + ": expected an rcomplex/1 file, got " + schema_name(o));
}

std::string serialize(const GradedEModule& m) {
    json j;
    j["schema"] = "emodule/1";
    j["field"] = m.field().to_string();
    j["q"] = m.q();
    j["components"] = json::object();
    for (int t = m.lo(); m.has_interval() && t <= m.hi(); ++t) j["components"][std::to_string(t)] = m.dim(t);
    j["action"] = json::object();
    for (int a = 0; a < m.q(); ++a) {
        json per = json::object();
        for (int t = m.lo() + 1; m.has_interval() && t <= m.hi(); ++t) {
            const Matrix act = m.action(a, t);
            if (!act.is_zero()) per[std::to_string(t)] = matrix_json(act);
        }
        if (!per.empty()) j["action"]["e" + std::to_string(a + 1)] = per;
    }
    return j.dump(2) + "\n";
}

std::string serialize(const LinearSComplex& l) {
    json j;
    j["schema"] = "scomplex/1";
    j["field"] = l.field().to_string();
    j["q"] = l.q();
    j["first_degree"] = l.first_degree();
    j["ranks"] = l.ranks();
    j["labels"] = l.labels;
    j["coefficients"] = json::object();
    for (int a = 0; a < l.q(); ++a) {
        json per = json::object();
        for (std::size_t n = 0; n + 1 < l.spots(); ++n)
            if (!l.coefficient(a, n).is_zero()) per[std::to_string(n)] = matrix_json(l.coefficient(a, n));
        if (!per.empty()) j["coefficients"]["x" + std::to_string(a + 1)] = per;
    }
    return j.dump(2) + "\n";
}

std::string serialize(const FilteredFreeComplex& k) {
    json j;
    j["schema"] = "rcomplex/1";
    j["field"] = k.field().to_string();
    j["nvars"] = k.nvars();
    j["precision"] = k.precision();
    j["n_lo"] = k.n_lo();
    j["ranks"] = k.ranks();
    j["differentials"] = json::object();
    for (int n = k.n_lo(); n < k.n_hi(); ++n) j["differentials"][std::to_string(n)] = poly_matrix_json(k.differential(n));
    return j.dump(2) + "\n";
}

std::string serialize(const WorkbenchObject& o) {
    return std::visit([](const auto& x) { return serialize(x); }, o);
}

std::string schema_name(const WorkbenchObject& o) {
    switch (o.index()) {
        case 0: return "emodule/1";
        case 1: return "scomplex/1";
        default: return "rcomplex/1";
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

}  // namespace bggwb
