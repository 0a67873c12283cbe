#include "lckv/catalog.hpp"

#include "lckv/error.hpp"
#include "lckv/solver.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace lckv {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) { fail("SchemaError", path + ": " + msg); }

const json& req(const json& o, const char* key, const std::string& path) {
    if (!o.is_object()) schema(path, "expected an object");
    auto it = o.find(key);
    if (it == o.end()) schema(path, std::string("missing field '") + key + "'");
    return *it;
}

std::string str_of(const json& v, const std::string& path) {
    if (!v.is_string()) schema(path, "expected a string");
    return v.get<std::string>();
}

std::string opt_str(const json& o, const char* key, const std::string& path) {
    return o.contains(key) ? str_of(o[key], path + "." + key) : std::string();
}

int int_of(const json& v, const std::string& path) {
    if (!v.is_number_integer()) schema(path, "expected an integer");
    return v.get<int>();
}

mpq_class rational_of(const json& v, const std::string& path) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (!v.is_string()) schema(path, "expected a rational (integer or string)");
    try {
        Scalar s = parse_scalar(v.get<std::string>());
        if (!s.is_constant()) schema(path, "value is not a rational number");
        return s.constant_value();
    } catch (const Error& e) {
        if (e.kind() == "SchemaError") throw;
        schema(path, e.what());
    }
}

std::vector<std::string> strings_of(const json& v, const std::string& path) {
    if (!v.is_array()) schema(path, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(str_of(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::string> opt_strings(const json& o, const char* key, const std::string& path) {
    return o.contains(key) ? strings_of(o[key], path + "." + key) : std::vector<std::string>{};
}

Assignment assignment_of(const json& v, const std::string& path) {
    if (!v.is_object()) schema(path, "expected an object of parameter values");
    Assignment a;
    for (auto it = v.begin(); it != v.end(); ++it) a[it.key()] = rational_of(it.value(), path + "." + it.key());
    return a;
}

std::vector<Assignment> witnesses_of(const json& v, const std::string& path) {
    if (!v.is_array()) schema(path, "expected an array");
    std::vector<Assignment> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(assignment_of(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void add_vars(std::set<std::string>& out, const Scalar& s) {
    for (Var v : s.variables()) out.insert(*v);
}
void add_vars(std::set<std::string>& out, const KForm& f) {
    for (const auto& [m, c] : f.terms()) add_vars(out, c);
}
void add_vars(std::set<std::string>& out, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) add_vars(out, m(i, j));
}
void add_vars(std::set<std::string>& out, const LieAlgebra& g) {
    for (const auto& f : g.d_coframe()) add_vars(out, f);
}

// Run f, turning library errors into SchemaError at path.
template <class F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == "SchemaError") throw;
        schema(path, e.what());
    }
}

struct Loader {
    std::set<std::string> entry_ids, record_ids;

    // Every symbol used by the structure must be assigned, nothing else may be,
    // and every applicable constraint must hold.
    void check_witness(const CatalogEntry& e, const Assignment& w, const Assignment& fixed,
                       const std::set<std::string>& free, const std::vector<std::string>& constraints,
                       const std::string& path) {
        for (const auto& s : free)
            if (!w.count(s)) schema(path, "witness does not assign '" + s + "'");
        for (const auto& [k, v] : w)
            if (!free.count(k)) schema(path, "witness assigns unknown parameter '" + k + "'");
        Assignment all = w;
        for (const auto& [k, v] : fixed) all[k] = v;
        auto test = [&](const std::string& text, bool optional) {
            Constraint c = at(path, [&] { return parse_constraint(text, fixed); });
            for (Var v : c.diff.variables())
                if (!w.count(*v)) {
                    if (optional) return;
                    schema(path, "constraint '" + text + "' uses unassigned '" + *v + "'");
                }
            bool ok = at(path, [&] { return c.holds(w); });
            if (!ok) schema(path, "witness {" + witness_str(all) + "} violates '" + text + "'");
        };
        for (const auto& p : e.params)
            for (const auto& c : p.constraints) test(c, true);
        for (const auto& c : constraints) test(c, false);
    }

    void unique(const std::string& id, const std::string& path, bool entry = false) {
        if (id.empty()) schema(path, "empty id");
        if (!(entry ? entry_ids : record_ids).insert(id).second) schema(path, "duplicate id '" + id + "'");
    }

    void has_J(const CatalogEntry& e, const std::string& name, const std::string& path) {
        for (const auto& j : e.J)
            if (j.name == name) return;
        schema(path, "unknown complex structure '" + name + "'");
    }

    CatalogEntry entry(const json& o, const std::string& path);
};

CatalogEntry Loader::entry(const json& o, const std::string& path) {
    CatalogEntry e;
    e.id = str_of(req(o, "id", path), path + ".id");
    unique(e.id, path + ".id", true);
    e.name = o.contains("name") ? str_of(o["name"], path + ".name") : e.id;
    e.salamon = str_of(req(o, "salamon", path), path + ".salamon");
    e.note = opt_str(o, "note", path);
    if (o.contains("params")) {
        const json& ps = o["params"];
        if (!ps.is_array()) schema(path + ".params", "expected an array");
        for (std::size_t i = 0; i < ps.size(); ++i) {
            std::string pp = path + ".params[" + std::to_string(i) + "]";
            e.params.push_back({str_of(req(ps[i], "name", pp), pp + ".name"), opt_strings(ps[i], "constraints", pp)});
        }
    }
    LieAlgebra g = at(path + ".salamon", [&] { return parse_salamon(e.salamon, e.params, e.id); });
    e.dim = g.dim();
    int n = e.dim;
    std::set<std::string> declared;
    for (const auto& p : e.params) declared.insert(p.name);
    for (const auto& p : e.params)
        for (const auto& c : p.constraints) at(path + ".params", [&] { return parse_constraint(c); });

    auto matrix_of = [&](const json& v, const std::string& mp) {
        auto m = strings_of(v, mp);
        if (static_cast<int>(m.size()) != n * n) schema(mp, "expected " + std::to_string(n * n) + " entries");
        return m;
    };

    if (o.contains("J")) {
        for (std::size_t i = 0; i < o["J"].size(); ++i) {
            std::string jp = path + ".J[" + std::to_string(i) + "]";
            const json& j = o["J"][i];
            JRecord r{str_of(req(j, "name", jp), jp + ".name"), matrix_of(req(j, "matrix", jp), jp + ".matrix"),
                      opt_str(j, "note", jp)};
            for (const auto& x : e.J)
                if (x.name == r.name) schema(jp, "duplicate complex structure '" + r.name + "'");
            Matrix m = at(jp, [&] { return parse_matrix(r.matrix, n); });
            std::set<std::string> vs;
            add_vars(vs, m);
            for (const auto& s : vs)
                if (!declared.count(s)) schema(jp, "undeclared parameter '" + s + "'");
            e.J.push_back(std::move(r));
        }
    }
    if (!e.J.empty() && n % 2) schema(path, "complex structures on an odd-dimensional algebra");

    if (o.contains("lck")) {
        for (std::size_t i = 0; i < o["lck"].size(); ++i) {
            std::string fp = path + ".lck[" + std::to_string(i) + "]";
            const json& j = o["lck"][i];
            LcKFamily f;
            f.id = str_of(req(j, "id", fp), fp + ".id");
            unique(f.id, fp + ".id");
            f.J = str_of(req(j, "J", fp), fp + ".J");
            has_J(e, f.J, fp + ".J");
            f.theta = str_of(req(j, "theta", fp), fp + ".theta");
            f.omega = str_of(req(j, "omega", fp), fp + ".omega");
            f.note = opt_str(j, "note", fp);
            if (j.contains("fixed")) f.fixed = assignment_of(j["fixed"], fp + ".fixed");
            for (const auto& [k, v] : f.fixed)
                if (!declared.count(k)) schema(fp + ".fixed", "fixes undeclared parameter '" + k + "'");
            f.constraints = opt_strings(j, "constraints", fp);
            f.witnesses = witnesses_of(req(j, "witnesses", fp), fp + ".witnesses");
            if (f.witnesses.empty()) schema(fp + ".witnesses", "no witness");

            const json& v = req(j, "vaisman", fp);
            if (v.is_string() && v == "always") f.vaisman = LcKFamily::Vaisman::Always;
            else if (v.is_string() && v == "never") f.vaisman = LcKFamily::Vaisman::Never;
            else if (v.is_object() && v.contains("if")) {
                f.vaisman = LcKFamily::Vaisman::Conditional;
                f.vaisman_if = strings_of(v["if"], fp + ".vaisman.if");
            } else schema(fp + ".vaisman", "expected \"always\", \"never\" or {\"if\": [...]}");
            f.vaisman_vector = opt_strings(j, "vaisman_vector", fp);
            if (!f.vaisman_vector.empty() && static_cast<int>(f.vaisman_vector.size()) != n)
                schema(fp + ".vaisman_vector", "expected " + std::to_string(n) + " entries");

            std::set<std::string> free;
            at(fp, [&] {
                add_vars(free, g.substitute(f.fixed));
                add_vars(free, parse_matrix(e.find_J(f.J).matrix, n, f.fixed));
                add_vars(free, parse_form(f.theta, n, f.fixed));
                add_vars(free, parse_form(f.omega, n, f.fixed));
                for (const auto& c : f.constraints) add_vars(free, parse_constraint(c, f.fixed).diff);
                for (const auto& x : f.vaisman_vector) add_vars(free, parse_scalar(x, f.fixed));
                return 0;
            });
            for (const auto& c : f.vaisman_if) {
                Constraint k = at(fp + ".vaisman", [&] { return parse_constraint(c, f.fixed); });
                if (k.op != Constraint::Op::Eq) schema(fp + ".vaisman", "condition '" + c + "' is not an equality");
                for (Var s : k.diff.variables())
                    if (!free.count(*s) && !declared.count(*s))
                        schema(fp + ".vaisman", "condition uses undeclared '" + *s + "'");
            }
            for (std::size_t k = 0; k < f.witnesses.size(); ++k)
                check_witness(e, f.witnesses[k], f.fixed, free, f.constraints,
                              fp + ".witnesses[" + std::to_string(k) + "]");
            e.lck.push_back(std::move(f));
        }
    }

    if (o.contains("no_lck")) {
        for (std::size_t i = 0; i < o["no_lck"].size(); ++i) {
            std::string np = path + ".no_lck[" + std::to_string(i) + "]";
            const json& j = o["no_lck"][i];
            NoLcKRecord r;
            r.id = str_of(req(j, "id", np), np + ".id");
            unique(r.id, np + ".id");
            r.J = str_of(req(j, "J", np), np + ".J");
            has_J(e, r.J, np + ".J");
            r.theta_family = str_of(req(j, "theta_family", np), np + ".theta_family");
            at(np + ".theta_family", [&] { return parse_form(r.theta_family, n); });
            r.constraints = opt_strings(j, "constraints", np);
            r.note = opt_str(j, "note", np);
            int kinds = j.contains("obstruction_vector") + j.contains("obstruction_combination") + j.contains("obstruction");
            if (kinds != 1) schema(np, "exactly one obstruction descriptor expected");
            if (j.contains("obstruction_vector")) {
                r.kind = NoLcKRecord::Kind::Vector;
                r.vector = int_of(j["obstruction_vector"], np + ".obstruction_vector");
                if (r.vector < 1 || r.vector > n) schema(np + ".obstruction_vector", "index out of range");
            } else if (j.contains("obstruction_combination")) {
                r.kind = NoLcKRecord::Kind::Combination;
                const json& c = j["obstruction_combination"];
                std::string cp = np + ".obstruction_combination";
                if (!c.is_array() || c.empty()) schema(cp, "expected a nonempty array");
                for (std::size_t k = 0; k < c.size(); ++k) {
                    std::string kp = cp + "[" + std::to_string(k) + "]";
                    if (!c[k].is_array() || c[k].size() != 2) schema(kp, "expected [weight, unit vector]");
                    mpq_class w = rational_of(c[k][0], kp);
                    if (w <= 0) schema(kp, "weights must be positive");
                    const json& u = c[k][1];
                    if (!u.is_array() || static_cast<int>(u.size()) != n) schema(kp, "expected a unit vector");
                    int idx = 0, ones = 0;
                    for (int t = 0; t < n; ++t) {
                        int x = int_of(u[t], kp);
                        if (x != 0 && x != 1) schema(kp, "expected a unit vector");
                        if (x == 1) idx = t + 1, ++ones;
                    }
                    if (ones != 1) schema(kp, "expected a unit vector");
                    r.combination.emplace_back(w, idx);
                }
            } else {
                if (j["obstruction"] != "degenerate") schema(np + ".obstruction", "expected \"degenerate\"");
                r.kind = NoLcKRecord::Kind::Degenerate;
            }
            e.no_lck.push_back(std::move(r));
        }
    }

    if (o.contains("derivations")) {
        for (std::size_t i = 0; i < o["derivations"].size(); ++i) {
            std::string dp = path + ".derivations[" + std::to_string(i) + "]";
            const json& j = o["derivations"][i];
            DerivationRecord r;
            r.J = str_of(req(j, "J", dp), dp + ".J");
            has_J(e, r.J, dp + ".J");
            r.theta = str_of(req(j, "theta", dp), dp + ".theta");
            at(dp + ".theta", [&] { return parse_form(r.theta, n); });
            r.side = opt_str(j, "side", dp);
            r.twisted_dim = int_of(req(j, "twisted_dim", dp), dp + ".twisted_dim");
            if (j.contains("lck_dim")) r.lck_dim = int_of(j["lck_dim"], dp + ".lck_dim");
            e.derivations.push_back(std::move(r));
        }
    }

    if (o.contains("automorphisms")) {
        for (std::size_t i = 0; i < o["automorphisms"].size(); ++i) {
            std::string ap = path + ".automorphisms[" + std::to_string(i) + "]";
            const json& j = o["automorphisms"][i];
            AutomorphismRecord r;
            r.name = str_of(req(j, "name", ap), ap + ".name");
            r.matrix = matrix_of(req(j, "matrix", ap), ap + ".matrix");
            r.constraints = opt_strings(j, "constraints", ap);
            r.witnesses = witnesses_of(req(j, "witnesses", ap), ap + ".witnesses");
            r.preserves = opt_str(j, "preserves", ap);
            if (!r.preserves.empty()) has_J(e, r.preserves, ap + ".preserves");
            if (j.contains("relates")) {
                auto rel = strings_of(j["relates"], ap + ".relates");
                if (rel.size() != 2) schema(ap + ".relates", "expected two complex structures");
                has_J(e, rel[0], ap + ".relates");
                has_J(e, rel[1], ap + ".relates");
                r.relates = std::make_pair(rel[0], rel[1]);
            }
            if (r.preserves.empty() && !r.relates) schema(ap, "needs 'preserves' or 'relates'");
            std::set<std::string> free;
            at(ap, [&] {
                add_vars(free, parse_matrix(r.matrix, n));
                add_vars(free, g);
                for (const auto& c : r.constraints) add_vars(free, parse_constraint(c).diff);
                for (const auto& jn : {r.preserves, r.relates ? r.relates->first : std::string(),
                                       r.relates ? r.relates->second : std::string()})
                    if (!jn.empty()) add_vars(free, parse_matrix(e.find_J(jn).matrix, n));
                return 0;
            });
            for (std::size_t k = 0; k < r.witnesses.size(); ++k)
                check_witness(e, r.witnesses[k], {}, free, r.constraints, ap + ".witnesses[" + std::to_string(k) + "]");
            e.automorphisms.push_back(std::move(r));
        }
    }

    if (o.contains("equivalences")) {
        for (std::size_t i = 0; i < o["equivalences"].size(); ++i) {
            std::string qp = path + ".equivalences[" + std::to_string(i) + "]";
            const json& j = o["equivalences"][i];
            EquivalenceRecord r;
            r.id = str_of(req(j, "id", qp), qp + ".id");
            unique(r.id, qp + ".id");
            r.J = str_of(req(j, "J", qp), qp + ".J");
            has_J(e, r.J, qp + ".J");
            const json& gen = req(j, "generic", qp);
            r.theta = str_of(req(gen, "theta", qp + ".generic"), qp + ".generic.theta");
            r.omega = str_of(req(gen, "omega", qp + ".generic"), qp + ".generic.omega");
            const json& ch = req(j, "chain", qp);
            if (!ch.is_array()) schema(qp + ".chain", "expected an array of matrices");
            for (std::size_t k = 0; k < ch.size(); ++k)
                r.chain.push_back(matrix_of(ch[k], qp + ".chain[" + std::to_string(k) + "]"));
            r.witness = assignment_of(req(j, "witness", qp), qp + ".witness");
            const json& ex = req(j, "expected", qp);
            r.expected_theta = str_of(req(ex, "theta", qp + ".expected"), qp + ".expected.theta");
            r.expected_omega = str_of(req(ex, "omega", qp + ".expected"), qp + ".expected.omega");
            for (const auto& s : {r.theta, r.omega, r.expected_theta, r.expected_omega})
                at(qp, [&] { return parse_form(s, n); });
            e.equivalences.push_back(std::move(r));
        }
    }

    if (o.contains("identifications")) {
        for (std::size_t i = 0; i < o["identifications"].size(); ++i) {
            std::string ip = path + ".identifications[" + std::to_string(i) + "]";
            const json& j = o["identifications"][i];
            IdentificationRecord r;
            r.name = str_of(req(j, "name", ip), ip + ".name");
            r.J = str_of(req(j, "J", ip), ip + ".J");
            has_J(e, r.J, ip + ".J");
            r.params = opt_strings(j, "params", ip);
            r.matrix = matrix_of(req(j, "matrix", ip), ip + ".matrix");
            r.note = opt_str(j, "note", ip);
            std::set<std::string> allowed(r.params.begin(), r.params.end());
            std::set<std::string> used;
            at(ip + ".matrix", [&] { add_vars(used, parse_matrix(r.matrix, n)); return 0; });
            if (j.contains("J_params")) {
                const json& jp = j["J_params"];
                if (!jp.is_object()) schema(ip + ".J_params", "expected an object");
                for (auto it = jp.begin(); it != jp.end(); ++it) {
                    if (!declared.count(it.key())) schema(ip + ".J_params", "undeclared parameter '" + it.key() + "'");
                    std::string v = str_of(it.value(), ip + ".J_params." + it.key());
                    at(ip + ".J_params", [&] { add_vars(used, parse_scalar(v)); return 0; });
                    r.J_params.emplace_back(it.key(), v);
                }
            }
            for (const auto& s : used)
                if (!allowed.count(s)) schema(ip, "undeclared construction parameter '" + s + "'");
            e.identifications.push_back(std::move(r));
        }
    }

    if (o.contains("center")) {
        for (std::size_t i = 0; i < o["center"].size(); ++i) {
            std::string cp = path + ".center[" + std::to_string(i) + "]";
            const json& j = o["center"][i];
            CenterRecord r;
            r.witness = assignment_of(req(j, "witness", cp), cp + ".witness");
            r.note = opt_str(j, "note", cp);
            const json& b = req(j, "basis", cp);
            if (!b.is_array()) schema(cp + ".basis", "expected an array");
            for (std::size_t k = 0; k < b.size(); ++k) {
                std::string bp = cp + ".basis[" + std::to_string(k) + "]";
                if (!b[k].is_array() || static_cast<int>(b[k].size()) != n) schema(bp, "expected a vector of length " + std::to_string(n));
                std::vector<mpq_class> v;
                for (std::size_t t = 0; t < b[k].size(); ++t) v.push_back(rational_of(b[k][t], bp));
                r.basis.push_back(std::move(v));
            }
            std::set<std::string> free;
            add_vars(free, g);
            for (const auto& s : free)
                if (!r.witness.count(s)) schema(cp + ".witness", "witness does not assign '" + s + "'");
            e.center.push_back(std::move(r));
        }
    }
    return e;
}

std::string vec_str(const std::vector<mpq_class>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

// Same span: both families independent of equal size and jointly of that rank.
bool same_span(const std::vector<Vec>& a, const std::vector<std::vector<mpq_class>>& b, int n) {
    if (a.size() != b.size()) return false;
    Matrix m(a.size() + b.size(), n);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
        for (int j = 0; j < n; ++j) m(a.size() + i, j) = Scalar(b[i][j]);
    return rank(m) == a.size();
}

}  // namespace

const JRecord& CatalogEntry::find_J(const std::string& name) const {
    for (const auto& j : J)
        if (j.name == name) return j;
    fail("UnknownComplexStructure", id + ": " + name);
}

const CatalogEntry* Catalog::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

std::size_t Catalog::complex_structures() const {
    std::size_t k = 0;
    for (const auto& e : entries) k += e.J.size();
    return k;
}

std::size_t Catalog::lck_families() const {
    std::size_t k = 0;
    for (const auto& e : entries) k += e.lck.size();
    return k;
}

Catalog load_catalog(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        schema("<document>", e.what());
    }
    Catalog c;
    const json* list = &doc;
    if (doc.is_object()) {
        if (doc.contains("version")) c.version = int_of(doc["version"], "version");
        if (c.version != 1) schema("version", "unsupported catalog version " + std::to_string(c.version));
        list = &req(doc, "entries", "<document>");
    }
    if (!list->is_array()) schema("entries", "expected an array");
    Loader ld;
    for (std::size_t i = 0; i < list->size(); ++i) c.entries.push_back(ld.entry((*list)[i], "entries[" + std::to_string(i) + "]"));
    return c;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IOError", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

const Catalog& builtin_catalog() {
    static const Catalog c = load_catalog(builtin_catalog_text());
    return c;
}

Matrix parse_matrix(const std::vector<std::string>& m, int n, const Assignment& subs) {
    if (static_cast<int>(m.size()) != n * n) fail("DimensionMismatch", "matrix needs " + std::to_string(n * n) + " entries");
    Matrix a(n, n);
    for (int i = 0; i < n * n; ++i) a(i / n, i % n) = parse_scalar(m[i], subs);
    return a;
}

LieAlgebra build_algebra(const CatalogEntry& e, const Assignment& fixed) {
    LieAlgebra g = parse_salamon(e.salamon, e.params, e.id);
    return fixed.empty() ? g : g.substitute(fixed);
}

ComplexStructure build_J(const CatalogEntry& e, const std::string& name, const Assignment& fixed) {
    return {name, parse_matrix(e.find_J(name).matrix, e.dim, fixed)};
}

LcKStructure build_lck(const CatalogEntry& e, const LcKFamily& f) {
    LcKStructure s;
    s.theta = parse_form(f.theta, e.dim, f.fixed);
    s.omega = parse_form(f.omega, e.dim, f.fixed);
    s.J = build_J(e, f.J, f.fixed);
    for (const auto& p : e.params)
        for (const auto& c : p.constraints) {
            Constraint k = parse_constraint(c, f.fixed);
            bool covered = true;
            for (Var v : k.diff.variables()) covered = covered && f.witnesses.front().count(*v);
            if (covered) s.constraints.push_back(k);
        }
    for (const auto& c : f.constraints) s.constraints.push_back(parse_constraint(c, f.fixed));
    s.witnesses = f.witnesses;
    return s;
}

std::size_t EntryReport::failures() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += !c.pass;
    return k;
}

namespace {

struct Recorder {
    EntryReport& r;
    void operator()(std::string id, bool pass, std::string residual = "", std::string witness = "", std::string note = "") {
        r.checks.push_back({r.entry + "/" + id, pass, std::move(residual), std::move(witness), std::move(note)});
    }
    template <class F>
    void guard(const std::string& id, F&& f) {
        try {
            f();
        } catch (const Error& e) {
            (*this)(id, false, e.what());
        }
    }
};

void verify_lck_rows(const CatalogEntry& e, Recorder& add) {
    for (const auto& f : e.lck) {
        std::string base = "lck:" + f.id;
        add.guard(base, [&] {
            LieAlgebra g = build_algebra(e, f.fixed);
            LcKStructure s = build_lck(e, f);
            LcKReport rep = verify_lck(g, s);
            bool first = true;
            for (const auto& c : rep.checks) {
                add(base + "/" + c.id, c.pass, c.residual, c.witness, first ? f.note : "");
                first = false;
            }

            LeeResult lee = lee_form(g, s.omega);
            bool same = lee.theta == s.theta && lee.closed;
            add(base + "/lee_roundtrip", same, same ? "" : "recovered " + lee.theta.str());

            for (const auto& w : s.witnesses) {
                std::string ws = witness_str(w);
                bool expect = f.vaisman == LcKFamily::Vaisman::Always;
                if (f.vaisman == LcKFamily::Vaisman::Conditional) {
                    expect = true;
                    for (const auto& c : f.vaisman_if) expect = expect && parse_constraint(c, f.fixed).holds(w);
                }
                VaismanResult v = vaisman_test(g, s, w);
                add(base + "/vaisman", v.vaisman == expect,
                    "A = " + vec_str(v.A) + (v.vaisman ? ", Vaisman" : ", not Vaisman") +
                        (v.vaisman == expect ? "" : " (expected the opposite)"),
                    ws);
                if (!f.vaisman_vector.empty()) {
                    std::vector<mpq_class> want;
                    for (const auto& x : f.vaisman_vector) want.push_back(parse_scalar(x, f.fixed).eval(w));
                    add(base + "/vaisman_vector", want == v.A, "A = " + vec_str(v.A) + ", stored " + vec_str(want), ws);
                }
            }
        });
    }
}

void verify_no_lck(const CatalogEntry& e, Recorder& add) {
    LieAlgebra g = build_algebra(e);
    for (const auto& r : e.no_lck) {
        std::string id = "no_lck:" + r.id;
        add.guard(id, [&] {
            ComplexStructure J = build_J(e, r.J);
            KForm theta = parse_form(r.theta_family, e.dim);
            SolutionSpace s = lck_space(g, J, theta);
            bool sound = space_is_sound(g, theta, s, &J);
            add(id + "/space_sound", sound, sound ? "" : "basis form fails the defining identities");
            bool ok = false;
            std::string what;
            switch (r.kind) {
            case NoLcKRecord::Kind::Vector:
                ok = degeneracy_certificate(s, J, r.vector);
                what = "Omega(e" + std::to_string(r.vector) + ", J e" + std::to_string(r.vector) + ") = 0";
                break;
            case NoLcKRecord::Kind::Combination:
                ok = weighted_degeneracy_certificate(s, J, r.combination);
                what = "positive combination of Omega(e_v, J e_v) vanishes";
                break;
            case NoLcKRecord::Kind::Degenerate:
                ok = degenerate_space(s);
                what = "Omega^" + std::to_string(e.dim / 2) + " = 0";
                break;
            }
            std::string sides;
            for (const auto& c : s.side_conditions) sides += (sides.empty() ? "; assuming " : ", ") + c;
            add(id + "/certificate", ok, (ok ? "" : "fails: ") + what + " on a " + std::to_string(s.size()) + "-dim space" + sides,
                "", r.note);
        });
    }
}

void verify_derivations(const CatalogEntry& e, Recorder& add) {
    LieAlgebra g = build_algebra(e);
    for (std::size_t i = 0; i < e.derivations.size(); ++i) {
        const auto& d = e.derivations[i];
        std::string id = "derivation[" + std::to_string(i) + "]:" + d.theta;
        add.guard(id, [&] {
            ComplexStructure J = build_J(e, d.J);
            KForm theta = parse_form(d.theta, e.dim);
            SolutionSpace t = twisted_closed_space(g, theta);
            SolutionSpace l = lck_space(g, J, theta);
            bool ok = static_cast<int>(t.size()) == d.twisted_dim && (d.lck_dim < 0 || static_cast<int>(l.size()) == d.lck_dim);
            bool sound = space_is_sound(g, theta, t) && space_is_sound(g, theta, l, &J);
            add(id, ok && sound,
                "dims " + std::to_string(t.size()) + " -> " + std::to_string(l.size()) + ", recorded " +
                    std::to_string(d.twisted_dim) + " -> " + (d.lck_dim < 0 ? std::string("?") : std::to_string(d.lck_dim)) +
                    (sound ? "" : ", unsound basis"));
        });
    }
}

void verify_automorphisms(const CatalogEntry& e, Recorder& add) {
    LieAlgebra g = build_algebra(e);
    for (const auto& a : e.automorphisms) {
        for (const auto& w : a.witnesses) {
            std::string id = "automorphism:" + a.name;
            std::string ws = witness_str(w);
            add.guard(id, [&] {
                bool cons = true;
                for (const auto& c : a.constraints) cons = cons && parse_constraint(c).holds(w);
                Matrix A = parse_matrix(a.matrix, e.dim, w);
                bool hom = is_automorphism(g.substitute(w), A);
                bool jc = true;
                if (!a.preserves.empty()) jc = preserves_complex_structure(A, build_J(e, a.preserves, w).dual);
                if (a.relates) {
                    Matrix m1 = build_J(e, a.relates->first, w).dual, m2 = build_J(e, a.relates->second, w).dual;
                    jc = jc && (m1 * A - A * m2).is_zero();
                }
                std::string res;
                if (!cons) res += "constraint violated; ";
                if (!hom) res += "not a homomorphism; ";
                if (!jc) res += "does not intertwine J; ";
                add(id, cons && hom && jc, res, ws);
            });
        }
    }
}

void verify_center(const CatalogEntry& e, Recorder& add) {
    LieAlgebra g = build_algebra(e);
    for (const auto& c : e.center) {
        std::string ws = witness_str(c.witness);
        add.guard("center", [&] {
            auto z = center(g, c.witness);
            bool ok = same_span(z, c.basis, e.dim);
            std::string got;
            for (const auto& v : z) {
                std::vector<mpq_class> q;
                for (const auto& x : v) q.push_back(x.constant_value());
                got += vec_str(q);
            }
            add("center", ok, ok ? "" : "computed basis " + (got.empty() ? "{}" : got), ws, c.note);
        });
    }
}

}  // namespace

EntryReport verify_equivalence(const CatalogEntry& e) {
    EntryReport r{e.id, {}};
    Recorder add{r};
    LieAlgebra g = build_algebra(e);
    int n = e.dim;
    for (const auto& q : e.equivalences) {
        std::string base = "equivalence:" + q.id;
        std::string ws = witness_str(q.witness);
        const Assignment& w = q.witness;

        // the generic structure itself, symbolically
        ComplexStructure J = build_J(e, q.J);
        KForm th = parse_form(q.theta, n), om = parse_form(q.omega, n);
        bool lcs = (ce_d(g, om) - wedge(th, om)).is_zero() && ce_d(g, th).is_zero() && is_j_invariant(om, J);
        add(base + "/generic_lcs", lcs, lcs ? "" : "generic pair fails the lcK identities");

        LieAlgebra gw = g.substitute(w);
        Matrix M = J.dual.substitute(w);
        KForm t = th.substitute(w), o = om.substitute(w);
        for (std::size_t k = 0; k < q.chain.size(); ++k) {
            Matrix A = parse_matrix(q.chain[k], n, w);  // IrrationalRadical propagates
            std::string sid = base + "/step" + std::to_string(k + 1);
            bool hom = is_automorphism(gw, A);
            bool jc = preserves_complex_structure(A, M);
            add(sid, hom && jc, std::string(hom ? "" : "not an automorphism ") + (jc ? "" : "does not commute with J"), ws);
            t = pullback_form(A, t);
            o = pullback_form(A, o);
        }
        KForm et = parse_form(q.expected_theta, n, w), eo = parse_form(q.expected_omega, n, w);
        add(base + "/normal_form", t == et && o == eo,
            t == et && o == eo ? "theta = " + t.str() + ", Omega = " + o.str()
                               : "got theta = " + t.str() + ", Omega = " + o.str() + "; expected " + et.str() + ", " + eo.str(),
            ws);
    }
    return r;
}

EntryReport verify_entry(const CatalogEntry& e) {
    EntryReport r{e.id, {}};
    Recorder add{r};
    add.guard("jacobi", [&] { add("jacobi", jacobi_holds(build_algebra(e))); });
    for (const auto& j : e.J)
        add.guard("complex:" + j.name, [&] {
            add("complex:" + j.name, is_complex_structure(build_algebra(e), build_J(e, j.name)), "", "", j.note);
        });
    add.guard("center", [&] { verify_center(e, add); });
    verify_lck_rows(e, add);
    add.guard("no_lck", [&] { verify_no_lck(e, add); });
    add.guard("derivations", [&] { verify_derivations(e, add); });
    add.guard("automorphisms", [&] { verify_automorphisms(e, add); });
    add.guard("equivalences", [&] {
        EntryReport q = verify_equivalence(e);
        r.checks.insert(r.checks.end(), q.checks.begin(), q.checks.end());
    });
    return r;
}

const std::vector<ManifestRow>& table_manifest() {
    static const std::vector<ManifestRow> rows = {
        {"R^4", "R4", "R4-generic"},
        {"gl_2 J_{1,mu} real mu, theta = -mu1 e4", "gl2", "gl2-A"},
        {"gl_2 J_{1,mu} real mu, theta = theta4 e4", "gl2", "gl2-B-real"},
        {"gl_2 J_{1,mu} complex mu", "gl2", "gl2-B-complex"},
        {"u_2 J_{a,b}", "u2", "u2-a"},
        {"u_2 J_{0,b}", "u2", "u2-0"},
        {"rh_3", "rh3", "rh3"},
        {"rr_{3,0}", "rr30", "rr30"},
        {"rr_{3,1}", "rr31", "rr31"},
        {"rr'_{3,0}", "rrp30", "rrp30-generic"},
        {"rr'_{3,gamma} J1", "rrp3g", "rrp3g-J1"},
        {"rr'_{3,gamma} J2", "rrp3g", "rrp3g-J2"},
        {"r_2r_2 theta = -e3", "r2r2", "r2r2-e3"},
        {"r_2r_2 theta = -e1", "r2r2", "r2r2-e1"},
        {"r_2r_2 theta = sigma e1 + tau e3", "r2r2", "r2r2-st"},
        {"r'_2 J1 theta = theta1 e1 + theta2 e2", "rp2", "rp2-J1-t1t2"},
        {"r'_2 J1 theta = -2 e1", "rp2", "rp2-J1-2e1"},
        {"r'_2 J1 theta = theta1 e1", "rp2", "rp2-J1-t1"},
        {"r'_2 J2 (a,b) != (0,1)", "rp2", "rp2-J2-ab"},
        {"r'_2 J2 (a,b) = (0,1)", "rp2", "rp2-J2-01"},
        {"r_{4,1}", "r41", "r41-2e4"},
        {"r_{4,alpha,1}", "r4a1", "r4a1"},
        {"r_{4,alpha,alpha}", "r4aa", "r4aa"},
        {"r'_{4,0,delta} J1", "rp40d", "rp40d-J1"},
        {"r'_{4,0,delta} J2", "rp40d", "rp40d-J2"},
        {"r'_{4,gamma,delta} J1", "rp4gd", "rp4gd-J1"},
        {"r'_{4,gamma,delta} J2", "rp4gd", "rp4gd-J2"},
        {"d_4 J1", "d4", "d4-J1"},
        {"d_4 J2", "d4", "d4-J2-t4"},
        {"d_{4,1} theta = -e4", "d41", "d41-e4"},
        {"d_{4,1} theta = e2 + theta4 e4", "d41", "d41-e2"},
        {"d_{4,1/2} J1", "d4half", "d4half-J1"},
        {"d_{4,1/2} J2", "d4half", "d4half-J2"},
        {"d_{4,1/2} J3", "d4half", "d4half-J3"},
        {"d_{4,lambda} J1", "d4l", "d4l-J1"},
        {"d_{4,lambda} J2", "d4l", "d4l-J2"},
        {"d'_{4,0} J2", "dp40", "dp40-J2"},
        {"d'_{4,0} J3", "dp40", "dp40-J3"},
        {"d'_{4,delta} J1", "dp4d", "dp4d-J1"},
        {"d'_{4,delta} J2", "dp4d", "dp4d-J2"},
        {"d'_{4,delta} J3", "dp4d", "dp4d-J3"},
        {"d'_{4,delta} J4", "dp4d", "dp4d-J4"},
        {"h_4", "h4", "h4-t4"},
    };
    return rows;
}

std::vector<std::string> check_manifest(const Catalog& c) {
    std::vector<std::string> problems;
    std::set<std::string> seen;
    for (const auto& row : table_manifest()) {
        if (!seen.insert(row.record).second) problems.push_back("record " + row.record + " claimed by two rows");
        const CatalogEntry* e = c.find(row.entry);
        if (!e) {
            problems.push_back(row.row + ": missing entry " + row.entry);
            continue;
        }
        int hits = 0;
        for (const auto& f : e->lck) hits += f.id == row.record;
        for (const auto& f : e->no_lck) hits += f.id == row.record;
        if (hits != 1) problems.push_back(row.row + ": record " + row.record + " found " + std::to_string(hits) + " times");
    }
    return problems;
}

std::size_t omega_term_count(const CatalogEntry& e, std::size_t family) {
    const auto& f = e.lck.at(family);
    return parse_form(f.omega, e.dim, f.fixed).terms().size();
}

CatalogEntry flip_omega_sign(const CatalogEntry& e, std::size_t family, std::size_t term) {
    CatalogEntry m = e;
    auto& f = m.lck.at(family);
    KForm om = parse_form(f.omega, e.dim, f.fixed);
    if (term >= om.terms().size()) fail("IndexOutOfRange", "Omega has " + std::to_string(om.terms().size()) + " terms");
    auto it = std::next(om.terms().begin(), static_cast<long>(term));
    std::uint32_t mask = it->first;
    Scalar c = it->second;
    om.add_term(mask, c * Scalar(-2));
    f.omega = om.str();
    return m;
}

}  // namespace lckv
