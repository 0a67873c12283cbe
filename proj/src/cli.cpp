#include "lckv/cli.hpp"

#include "lckv/catalog.hpp"
#include "lckv/constructions.hpp"
#include "lckv/error.hpp"
#include "lckv/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace lckv {

using ojson = nlohmann::ordered_json;

namespace {

struct Item {
    std::string id, status, residual, witness, note;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    ojson arguments = ojson::object();
    std::vector<Item> items;
    ojson result = ojson::object();

    void add(std::string id, bool pass, std::string residual = "", std::string witness = "", std::string note = "") {
        items.push_back({std::move(id), pass ? "pass" : "fail", std::move(residual), std::move(witness), std::move(note)});
    }
    void skip(std::string id, std::string why) { items.push_back({std::move(id), "skipped", std::move(why), "", ""}); }
    void add(const Check& c) { add(c.id, c.pass, c.residual, c.witness, c.note); }
    std::size_t count(const char* s) const {
        return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [&](const Item& i) { return i.status == s; }));
    }
    int exit_code() const { return count("fail") ? 1 : 0; }

    ojson json() const {
        ojson j;
        j["schema"] = "lckv.report";
        j["schema_version"] = report_schema_version;
        j["tool"] = "lckv";
        j["tool_version"] = tool_version;
        j["command"] = command;
        j["arguments"] = arguments;
        ojson cs = ojson::array();
        for (const auto& i : items)
            cs.push_back({{"id", i.id}, {"status", i.status}, {"residual", i.residual}, {"witness", i.witness}, {"note", i.note}});
        j["checks"] = cs;
        j["summary"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"skipped", count("skipped")}};
        j["result"] = result;
        j["exit_code"] = exit_code();
        return j;
    }
};

std::string line(const Item& i) {
    std::string s = (i.status == "pass" ? "PASS " : i.status == "fail" ? "FAIL " : "SKIP ") + i.id;
    if (!i.residual.empty()) s += "  " + i.residual;
    if (!i.witness.empty()) s += "  [" + i.witness + "]";
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    out.push_back(cur);
    return out;
}

Assignment parse_assignment(const std::string& s) {
    Assignment a;
    if (s.empty()) return a;
    for (const auto& kv : split(s, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Usage("expected name=value, got '" + kv + "'");
        std::string k = kv.substr(0, eq);
        k.erase(std::remove(k.begin(), k.end(), ' '), k.end());
        Scalar v = parse_scalar(kv.substr(eq + 1));
        if (!v.is_constant()) throw Usage("value of " + k + " is not a number");
        a[k] = v.constant_value();
    }
    return a;
}

const Catalog& catalog_arg(const std::string& file, Catalog& storage) {
    if (file.empty()) return builtin_catalog();
    storage = load_catalog(read_file(file));
    return storage;
}

LieAlgebra algebra_arg(const std::string& s) {
    if (const CatalogEntry* e = builtin_catalog().find(s)) return build_algebra(*e);
    return parse_salamon(s);
}

std::vector<std::string> d_strings(const LieAlgebra& g) {
    std::vector<std::string> out;
    for (const auto& f : g.d_coframe()) out.push_back(f.is_zero() ? "0" : f.str());
    return out;
}

std::vector<std::string> matrix_strings(const Matrix& m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).str());
    return out;
}

std::string vector_str(const std::vector<mpq_class>& v) {
    Vec s;
    for (const auto& x : v) s.push_back(Scalar(x));
    return KForm::covector(static_cast<int>(v.size()), s).str();
}

ojson structure_json(const BuiltStructure& b) {
    return {{"dim", b.algebra.dim()},
            {"structure_equations", d_strings(b.algebra)},
            {"theta", b.structure.theta.str()},
            {"omega", b.structure.omega.str()},
            {"J", matrix_strings(b.structure.J.dual)}};
}

std::vector<std::string> json_strings(const nlohmann::json& v, const std::string& what) {
    if (!v.is_array()) fail("SchemaError", what + ": expected an array");
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return out;
}

Vec json_vector(const nlohmann::json& v, const std::string& what) {
    Vec out;
    for (const auto& s : json_strings(v, what)) out.push_back(parse_scalar(s));
    return out;
}

std::vector<Assignment> json_witnesses(const nlohmann::json& j) {
    std::vector<Assignment> out;
    if (!j.contains("witnesses")) return {Assignment{}};
    for (const auto& w : j["witnesses"]) {
        Assignment a;
        for (auto it = w.begin(); it != w.end(); ++it) {
            Scalar v = parse_scalar(it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
            a[it.key()] = v.constant_value();
        }
        out.push_back(a);
    }
    return out;
}

// ---- subcommands -------------------------------------------------------

void cmd_verify_table(Report& r, const std::string& entry, const std::string& file, bool& printed_summary, std::ostream& out,
                      bool verbose) {
    Catalog storage;
    const Catalog* cat = nullptr;
    try {
        cat = &catalog_arg(file, storage);
    } catch (const Error& e) {
        r.add("catalog:load", false, e.what());
        return;
    }
    r.add("catalog:load", true);
    std::vector<const CatalogEntry*> todo;
    for (const auto& e : cat->entries)
        if (entry.empty() || e.id == entry) todo.push_back(&e);
    if (todo.empty()) throw Usage("unknown entry '" + entry + "'");
    std::sort(todo.begin(), todo.end(), [](const CatalogEntry* a, const CatalogEntry* b) { return a->id < b->id; });

    std::vector<EntryReport> reports(todo.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < todo.size();) {
            try {
                reports[i] = verify_entry(*todo[i]);
            } catch (const Error& e) {
                reports[i] = EntryReport{todo[i]->id, {{todo[i]->id + "/verify", false, e.what(), "", ""}}};
            }
        }
    };
    unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(todo.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    ojson entries = ojson::array();
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) r.add(c);
        entries.push_back({{"id", rep.entry}, {"checks", rep.checks.size()}, {"failures", rep.failures()}});
        if (!verbose)
            out << std::left << std::setw(10) << rep.entry << std::right << std::setw(5) << rep.checks.size() << " checks  "
                << (rep.failures() ? std::to_string(rep.failures()) + " FAILED" : "ok") << "\n";
    }
    if (entry.empty()) {
        auto problems = check_manifest(*cat);
        for (const auto& row : table_manifest()) {
            std::string bad;
            for (const auto& p : problems)
                if (p.rfind(row.row + ":", 0) == 0 || p.find(" " + row.record + " ") != std::string::npos) bad = p;
            r.add("manifest:" + row.record, bad.empty(), bad, "", row.row);
        }
    }
    r.result = {{"catalog",
                 {{"version", cat->version},
                  {"entries", cat->entries.size()},
                  {"complex_structures", cat->complex_structures()},
                  {"lck_families", cat->lck_families()}}},
                {"entries", entries}};
    printed_summary = !verbose;
}

void cmd_vaisman(Report& r, const std::string& id, int witness, const std::string& file, std::ostream& out) {
    Catalog storage;
    const Catalog& cat = catalog_arg(file, storage);
    const CatalogEntry* e = cat.find(id);
    if (!e) throw Usage("unknown entry '" + id + "'");
    if (witness < 0) throw Usage("--witness counts from 1");
    ojson rows = ojson::array();
    for (const auto& f : e->lck) {
        std::string expect = f.vaisman == LcKFamily::Vaisman::Always  ? "always"
                             : f.vaisman == LcKFamily::Vaisman::Never ? "never"
                                                                      : "if " + [&] {
                                                                            std::string s;
                                                                            for (const auto& c : f.vaisman_if) s += (s.empty() ? "" : ", ") + c;
                                                                            return s;
                                                                        }();
        LieAlgebra g = build_algebra(*e, f.fixed);
        LcKStructure s = build_lck(*e, f);
        for (std::size_t k = 0; k < s.witnesses.size(); ++k) {
            if (witness && static_cast<int>(k) + 1 != witness) continue;
            const Assignment& w = s.witnesses[k];
            std::string cid = "vaisman:" + f.id;
            try {
                bool want = f.vaisman == LcKFamily::Vaisman::Always;
                if (f.vaisman == LcKFamily::Vaisman::Conditional) {
                    want = true;
                    for (const auto& c : f.vaisman_if) want = want && parse_constraint(c, f.fixed).holds(w);
                }
                VaismanResult v = vaisman_test(g, s, w);
                std::string a = vector_str(v.A);
                r.add(cid, v.vaisman == want, "A = " + a + (v.vaisman ? ", Vaisman" : ", not Vaisman"), witness_str(w));
                rows.push_back({{"family", f.id}, {"expected", expect}, {"witness", witness_str(w)}, {"vaisman", v.vaisman}, {"A", a}});
                out << f.id << ": " << expect << "; A = " << a << (v.vaisman ? "" : " (not Vaisman here)") << "  [" << witness_str(w)
                    << "]\n";
            } catch (const Error& ex) {
                r.add(cid, false, ex.what(), witness_str(w));
            }
        }
        if (witness && witness > static_cast<int>(s.witnesses.size())) r.skip("vaisman:" + f.id, "no witness " + std::to_string(witness));
    }
    if (e->lck.empty()) r.skip("vaisman:" + id, "entry has no lcK family");
    r.result = {{"entry", id}, {"rows", rows}};
}

void cmd_lee(Report& r, const std::string& alg, const std::string& omega, std::ostream& out) {
    LieAlgebra g = algebra_arg(alg);
    LeeResult l = lee_form(g, parse_form(omega, g.dim()));
    r.add("lee", l.closed, l.closed ? "" : "recovered theta is not closed");
    r.result = {{"theta", l.theta.str()}, {"closed", l.closed}};
    out << "theta = " << l.theta.str() << (l.closed ? "" : "  (not closed)") << "\n";
}

void cmd_mn(Report& r, const std::string& alg, const std::string& theta, const std::string& at, std::ostream& out) {
    LieAlgebra g = algebra_arg(alg);
    auto b = morse_novikov_betti(g, parse_form(theta, g.dim()), parse_assignment(at));
    r.add("morse_novikov", true);
    r.result = {{"betti", b}};
    out << "betti:";
    for (int x : b) out << " " << x;
    out << "\n";
}

ojson space_json(const SolutionSpace& s) {
    return {{"dim", s.size()}, {"basis", s.str()}, {"side_conditions", s.side_conditions}, {"generic", s.generic().str()}};
}

void print_space(std::ostream& out, const std::string& what, const SolutionSpace& s) {
    out << what << ": dim " << s.size() << "\n";
    if (!s.basis.empty()) out << "  generic " << s.generic().str() << "\n";
    for (const auto& c : s.side_conditions) out << "  assuming " << c << "\n";
}

void cmd_solve(Report& r, const std::string& alg, const std::string& theta_s, const std::string& jarg, std::ostream& out) {
    LieAlgebra g = algebra_arg(alg);
    KForm theta = parse_form(theta_s, g.dim());
    SolutionSpace t = twisted_closed_space(g, theta);
    r.add("twisted_space", space_is_sound(g, theta, t), "", "", "basis forms satisfy d Omega = theta ^ Omega");
    print_space(out, "twisted-closed 2-forms", t);
    r.result["twisted"] = space_json(t);
    if (jarg.empty()) return;

    ComplexStructure J;
    const CatalogEntry* e = builtin_catalog().find(alg);
    bool named = false;
    if (e)
        for (const auto& j : e->J) named = named || j.name == jarg;
    if (named) J = build_J(*e, jarg);
    else {
        std::string text = std::filesystem::exists(jarg) ? read_file(jarg) : jarg;
        std::replace(text.begin(), text.end(), '\n', ',');
        std::vector<std::string> m;
        for (auto& x : split(text, ','))
            if (x.find_first_not_of(" \t\r") != std::string::npos) m.push_back(x);
        J = {"J", parse_matrix(m, g.dim())};
    }
    r.add("complex_structure", is_complex_structure(g, J));
    SolutionSpace l = lck_space(g, J, theta);
    r.add("lck_space", space_is_sound(g, theta, l, &J), "", "", "basis forms are twisted-closed and J-invariant");
    bool degenerate = degenerate_space(l);
    print_space(out, "J-invariant twisted-closed 2-forms", l);
    if (degenerate) out << "  every form in the space is degenerate\n";
    r.result["lck"] = space_json(l);
    r.result["lck"]["degenerate"] = degenerate;
}

LcKExtensionSpec extension_spec_json(const nlohmann::json& j) {
    LcKExtensionSpec spec;
    const auto& base = j.at("base");
    std::vector<Parameter> params;
    if (base.contains("params"))
        for (const auto& p : base["params"]) params.push_back({p.get<std::string>(), {}});
    spec.base = parse_salamon(base.at("salamon").get<std::string>(), params);
    int n = spec.base.dim();
    spec.structure.theta = parse_form(j.at("theta").get<std::string>(), n);
    spec.structure.omega = parse_form(j.at("omega").get<std::string>(), n);
    spec.structure.J = {"J", parse_matrix(json_strings(j.at("J"), "J"), n)};
    if (j.contains("constraints"))
        for (const auto& c : j["constraints"]) spec.structure.constraints.push_back(parse_constraint(c.get<std::string>()));
    spec.structure.witnesses = json_witnesses(j);
    spec.n = j.at("n").get<int>();
    for (int i = 0; i < n; ++i) spec.rho.emplace_back(2 * spec.n, 2 * spec.n);
    if (j.contains("rho"))
        for (auto it = j["rho"].begin(); it != j["rho"].end(); ++it) {
            const std::string& k = it.key();
            int idx = (k.size() > 1 && k[0] == 'e') ? std::atoi(k.c_str() + 1) : 0;
            if (idx < 1 || idx > n) fail("SchemaError", "rho key '" + k + "' is not a basis vector e1..e" + std::to_string(n));
            spec.rho[idx - 1] = parse_matrix(json_strings(it.value(), "rho." + k), 2 * spec.n);
        }
    return spec;
}

void constructed_checks(Report& r, const BuiltStructure& b) {
    r.add("lck", true, "", "", "identities, positivity and integrability verified during construction");
    for (const auto& w : b.structure.witnesses) {
        VaismanResult v = vaisman_test(b.algebra, b.structure, w);
        r.add("not_vaisman", !v.vaisman, "A = " + vector_str(v.A), witness_str(w));
    }
}

void cmd_extend(Report& r, const std::string& file, std::ostream& out) {
    auto j = nlohmann::json::parse(read_file(file), nullptr, false);
    if (j.is_discarded()) fail("SchemaError", file + " is not valid JSON");
    LcKExtensionSpec spec = extension_spec_json(j);
    LcKExtension e = lck_extension(spec);
    constructed_checks(r, e);
    r.add("rho_kills_derived", e.rho_kills_derived, e.rho_kills_derived ? "" : "rho is nonzero on [h, h]");
    bool uni = unimodularity_check(spec);
    r.result = structure_json(e);
    r.result["unimodular"] = uni;
    out << "dim " << e.algebra.dim() << ", theta = " << e.structure.theta.str() << "\nOmega = " << e.structure.omega.str()
        << "\nunimodular: " << (uni ? "yes" : "no") << "\n";
}

void cmd_ot(Report& r, int n, const std::string& cs, std::ostream& out) {
    std::vector<mpq_class> c;
    for (const auto& s : split(cs, ',')) {
        Scalar v = parse_scalar(s);
        if (!v.is_constant()) throw Usage("--c takes rational numbers");
        c.push_back(v.constant_value());
    }
    if (static_cast<int>(c.size()) != n) throw Usage("--c needs exactly n values");
    BuiltStructure ot = ot_algebra(n, c);
    constructed_checks(r, ot);
    bool uni = true;
    for (int i = 0; i < ot.algebra.dim(); ++i) uni = uni && unimodular_character(ot.algebra, unit(ot.algebra.dim(), i)).is_zero();
    r.add("unimodular", uni);
    r.add("phi_identification", ot_phi_check(n, c), "", "", "aff(R)^n extension mapped onto the OT algebra");
    r.result = structure_json(ot);
    out << "dim " << ot.algebra.dim() << ", theta = " << ot.structure.theta.str() << "\nOmega = " << ot.structure.omega.str() << "\n";
}

CoKaehlerData cokahler_json(const nlohmann::json& j) {
    CoKaehlerData d;
    d.h = parse_salamon(j.at("h").get<std::string>());
    int m = d.h.dim();
    d.eta = json_vector(j.at("eta"), "eta");
    d.xi = json_vector(j.at("xi"), "xi");
    d.Phi = parse_matrix(json_strings(j.at("Phi"), "Phi"), m);
    d.metric = parse_matrix(json_strings(j.at("metric"), "metric"), m);
    d.D = parse_matrix(json_strings(j.at("D"), "D"), m);
    d.alpha = parse_scalar(j.at("alpha").is_string() ? j["alpha"].get<std::string>() : j["alpha"].dump());
    d.witnesses = json_witnesses(j);
    return d;
}

void cmd_cokahler(Report& r, const std::string& file, const std::string& example, std::ostream& out) {
    CoKaehlerData d;
    nlohmann::json j = nlohmann::json::object();
    if (!file.empty()) {
        j = nlohmann::json::parse(read_file(file), nullptr, false);
        if (j.is_discarded()) fail("SchemaError", file + " is not valid JSON");
        d = cokahler_json(j);
    } else {
        Scalar a = parse_scalar(example);
        if (!a.is_constant()) throw Usage("--example takes a rational alpha");
        d = cokahler_example(a.constant_value());
        j["identify"] = {{"entry", "rp2"}, {"name", "cokahler-mapping-torus"}, {"params", {{"alpha", example}}}};
    }
    for (const auto& c : cokahler_conditions(d)) r.add("condition:" + c.id, c.pass);
    BuiltStructure b = cokahler_mapping_torus(d);
    constructed_checks(r, b);
    r.result = structure_json(b);
    out << "dim " << b.algebra.dim() << ", theta = " << b.structure.theta.str() << "\nOmega = " << b.structure.omega.str() << "\n";
    if (j.contains("identify")) {
        const auto& id = j["identify"];
        const CatalogEntry* e = builtin_catalog().find(id.at("entry").get<std::string>());
        if (!e) fail("SchemaError", "identify: unknown entry");
        const IdentificationRecord* rec = nullptr;
        for (const auto& x : e->identifications)
            if (x.name == id.at("name").get<std::string>()) rec = &x;
        if (!rec) fail("SchemaError", "identify: unknown identification");
        Assignment p;
        if (id.contains("params"))
            for (auto it = id["params"].begin(); it != id["params"].end(); ++it)
                p[it.key()] = parse_scalar(it.value().is_string() ? it.value().get<std::string>() : it.value().dump()).constant_value();
        IdentificationReport ir = check_identification(*e, *rec, b, p);
        std::string tag = "identification:" + e->id + "/" + rec->name;
        r.add(tag + "/isomorphism", ir.isomorphism);
        r.add(tag + "/complex_structure", ir.complex_structure, "", "", rec->J);
        r.add(tag + "/lck", ir.lck, "theta = " + ir.theta.str() + ", Omega = " + ir.omega.str());
        r.result["identification"] = {{"entry", e->id}, {"theta", ir.theta.str()}, {"omega", ir.omega.str()}, {"J", rec->J}};
        out << "on " << e->name << " (" << rec->J << "): theta = " << ir.theta.str() << ", Omega = " << ir.omega.str() << "\n";
    }
}

}  // namespace

unsigned worker_count() {
    if (const char* s = std::getenv("LCKV_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of lcK structures on 4-dimensional Lie algebras", "lckv"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    std::string json_path, catalog_file, entry, algebra, theta, omega, jarg, at, spec, cs, example;
    int witness = 0, n = 0;
    bool verbose = false;
    auto json_opt = [&](CLI::App* s) { s->add_option("--json", json_path, "write the machine report to PATH ('-' for stdout)"); };

    auto* vt = app.add_subcommand("verify-table", "verify the whole catalog");
    vt->add_option("--entry", entry, "only this entry");
    vt->add_option("--catalog", catalog_file, "catalog file instead of the built-in one");
    vt->add_flag("--verbose,-v", verbose, "print every check");
    json_opt(vt);

    auto* so = app.add_subcommand("solve", "twisted-closed and lcK-compatible 2-forms for a Lee form");
    so->add_option("--algebra", algebra, "Salamon string or catalog entry id")->required();
    so->add_option("--theta", theta, "closed 1-form")->required();
    so->add_option("--J", jarg, "complex structure: entry J name, file, or n*n comma-separated entries");
    json_opt(so);

    auto* va = app.add_subcommand("vaisman", "Vaisman test on every lcK row of an entry");
    va->add_option("--entry", entry, "catalog entry id")->required();
    va->add_option("--witness", witness, "only the k-th witness (from 1)");
    va->add_option("--catalog", catalog_file, "catalog file instead of the built-in one");
    json_opt(va);

    auto* le = app.add_subcommand("lee", "Lee form of a nondegenerate 2-form");
    le->add_option("--algebra", algebra, "Salamon string or catalog entry id")->required();
    le->add_option("--omega", omega, "2-form")->required();
    json_opt(le);

    auto* mn = app.add_subcommand("mn", "Morse-Novikov Betti numbers");
    mn->add_option("--algebra", algebra, "Salamon string or catalog entry id")->required();
    mn->add_option("--theta", theta, "closed 1-form")->required();
    mn->add_option("--at", at, "parameter values, e.g. delta=1,lambda=2");
    json_opt(mn);

    auto* ex = app.add_subcommand("extend", "lcK extension by a Hermitian representation");
    ex->add_option("--spec", spec, "extension spec (JSON)")->required();
    json_opt(ex);

    auto* ot = app.add_subcommand("ot", "Oeljeklaus-Toma algebra with its lcK structure");
    ot->add_option("--n", n, "number of x_i")->required()->check(CLI::PositiveNumber);
    ot->add_option("--c", cs, "comma-separated rationals c_1..c_n")->required();
    json_opt(ot);

    auto* ck = app.add_subcommand("cokahler", "lcK structure on a coKaehler mapping torus");
    auto* spec_opt = ck->add_option("--spec", spec, "coKaehler data (JSON)");
    ck->add_option("--example", example, "built-in R^2 x| R example with this alpha")->excludes(spec_opt);
    json_opt(ck);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (ck->parsed() && spec.empty() && example.empty()) {
        err << "cokahler: one of --spec or --example is required\n";
        return 2;
    }

    Report r;
    auto started = std::chrono::steady_clock::now();
    bool summary_printed = false;
    try {
        try {
            if (vt->parsed()) {
                r.command = "verify-table";
                r.arguments = {{"entry", entry}, {"catalog", catalog_file}};
                cmd_verify_table(r, entry, catalog_file, summary_printed, out, verbose);
            } else if (so->parsed()) {
                r.command = "solve";
                r.arguments = {{"algebra", algebra}, {"theta", theta}, {"J", jarg}};
                cmd_solve(r, algebra, theta, jarg, out);
            } else if (va->parsed()) {
                r.command = "vaisman";
                r.arguments = {{"entry", entry}, {"witness", witness}, {"catalog", catalog_file}};
                cmd_vaisman(r, entry, witness, catalog_file, out);
            } else if (le->parsed()) {
                r.command = "lee";
                r.arguments = {{"algebra", algebra}, {"omega", omega}};
                cmd_lee(r, algebra, omega, out);
            } else if (mn->parsed()) {
                r.command = "mn";
                r.arguments = {{"algebra", algebra}, {"theta", theta}, {"at", at}};
                cmd_mn(r, algebra, theta, at, out);
            } else if (ex->parsed()) {
                r.command = "extend";
                r.arguments = {{"spec", spec}};
                cmd_extend(r, spec, out);
            } else if (ot->parsed()) {
                r.command = "ot";
                r.arguments = {{"n", n}, {"c", cs}};
                cmd_ot(r, n, cs, out);
            } else if (ck->parsed()) {
                r.command = "cokahler";
                r.arguments = {{"spec", spec}, {"example", example}};
                cmd_cokahler(r, spec, example, out);
            }
        } catch (const Error& e) {
            r.add(r.command + ":error", false, e.what());
        } catch (const nlohmann::json::exception& e) {
            r.add(r.command + ":error", false, std::string("SchemaError: ") + e.what());
        }
    } catch (const Usage& u) {
        err << r.command << ": " << u.what() << "\n";
        return 2;
    }

    if (!summary_printed || r.count("fail"))
        for (const auto& i : r.items)
            if (verbose || !summary_printed || i.status != "pass") out << line(i) << "\n";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    out << r.count("pass") << " passed, " << r.count("fail") << " failed, " << r.count("skipped") << " skipped ("
        << std::fixed << std::setprecision(2) << secs << " s)\n";

    if (!json_path.empty()) {
        std::string text = r.json().dump(2) + "\n";
        if (json_path == "-") out << text;
        else {
            std::ofstream f(json_path);
            if (!f) {
                err << "cannot write " << json_path << "\n";
                return 2;
            }
            f << text;
        }
    }
    return r.exit_code();
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace lckv
