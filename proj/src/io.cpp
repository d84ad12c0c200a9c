#include "qmckay/io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qmckay {

namespace {

using njson = nlohmann::ordered_json;

struct CycParser {
    const std::string& s;
    long conductor;
    size_t i = 0;

    [[noreturn]] void bad(const std::string& what) {
        fail(errc::schema, "bad coefficient '" + s + "': " + what);
    }
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    std::string digits(const char* what) {
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start) bad(what);
        return s.substr(start, i - start);
    }
    Rat rational() {
        mpz_class num(digits("expected digits"));
        if (i < s.size() && s[i] == '/') {
            ++i;
            mpz_class den(digits("expected denominator digits"));
            if (den == 0) bad("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }
    Cyc zterm(const Rat& a) {
        ++i;  // past 'z'
        long k = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            mpz_class e(digits("expected exponent digits"));
            if (!e.fits_slong_p()) bad("exponent out of range");
            k = e.get_si();
        }
        if (conductor == 1) bad("uses z but the conductor is 1");
        return Cyc(a) * root_of_unity(conductor, k);
    }
    Cyc term() {
        if (s[i] == 'z') return zterm(Rat(1));
        Rat a = rational();
        ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            ws();
            if (i >= s.size() || s[i] != 'z') bad("expected z after '*'");
            return zterm(a);
        }
        return Cyc(a);
    }
    Cyc parse() {
        ws();
        if (i >= s.size()) bad("empty");
        int sign = 1;
        if (s[i] == '-') {
            sign = -1;
            ++i;
            ws();
        }
        if (i >= s.size()) bad("missing term");
        Cyc total = Cyc(sign) * term();
        ws();
        while (i < s.size()) {
            if (s[i] == '+') sign = 1;
            else if (s[i] == '-') sign = -1;
            else bad("expected '+' or '-'");
            ++i;
            ws();
            if (i >= s.size()) bad("missing term");
            total = total + Cyc(sign) * term();
            ws();
        }
        return total;
    }
};

[[noreturn]] void bad_doc(const std::string& what) {
    fail(errc::schema, "invalid input document: " + what);
}

void check_keys(const njson& obj, std::initializer_list<const char*> allowed,
                const char* where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) ok = true;
        if (!ok) bad_doc("unknown key '" + item.key() + "' in " + where);
    }
}

long get_integer(const njson& v, const char* what, long lo, long hi) {
    if (!v.is_number_integer()) bad_doc(std::string(what) + " must be an integer");
    long x = v.get<long>();
    if (x < lo || x > hi) bad_doc(std::string(what) + " out of range");
    return x;
}

Cyc entry_to_cyc(const njson& v, long conductor, const char* where) {
    if (v.is_number_integer()) return Cyc(v.get<long>());
    if (v.is_string()) {
        CycParser p{v.get<std::string>(), conductor};
        return p.parse();
    }
    bad_doc(std::string(where) + " entries must be integers or coefficient strings");
}

Mat parse_matrix(const njson& rows, long conductor) {
    if (!rows.is_array() || rows.size() != 5) bad_doc("matrix generator must have 5 rows");
    Mat m(5, 5);
    for (int r = 0; r < 5; ++r) {
        const njson& row = rows[r];
        if (!row.is_array() || row.size() != 5) bad_doc("matrix generator rows must have 5 entries");
        for (int c = 0; c < 5; ++c) m.at(r, c) = entry_to_cyc(row[c], conductor, "matrix");
    }
    return m;
}

}  // namespace

Cyc parse_cyc(const std::string& text, long conductor) {
    CycParser p{text, conductor};
    return p.parse();
}

Mat parse_permutation(const std::string& cycles) {
    std::array<int, 5> sigma{0, 1, 2, 3, 4};
    std::array<bool, 5> seen{};
    size_t i = 0;
    auto ws = [&] {
        while (i < cycles.size() &&
               (std::isspace((unsigned char)cycles[i]) || cycles[i] == ','))
            ++i;
    };
    ws();
    if (i >= cycles.size()) fail(errc::schema, "empty permutation '" + cycles + "'");
    while (i < cycles.size()) {
        if (cycles[i] != '(') fail(errc::schema, "expected '(' in permutation '" + cycles + "'");
        ++i;
        std::vector<int> cyc;
        ws();
        while (i < cycles.size() && cycles[i] != ')') {
            if (!std::isdigit((unsigned char)cycles[i]))
                fail(errc::schema, "expected index in permutation '" + cycles + "'");
            int v = 0;
            while (i < cycles.size() && std::isdigit((unsigned char)cycles[i]))
                v = v * 10 + (cycles[i++] - '0');
            if (v < 1 || v > 5) fail(errc::schema, "permutation index out of range 1..5");
            if (seen[v - 1]) fail(errc::schema, "permutation cycles are not disjoint");
            seen[v - 1] = true;
            cyc.push_back(v - 1);
            ws();
        }
        if (i >= cycles.size()) fail(errc::schema, "unclosed cycle in permutation '" + cycles + "'");
        ++i;  // past ')'
        for (size_t j = 0; j < cyc.size(); ++j) sigma[cyc[j]] = cyc[(j + 1) % cyc.size()];
        ws();
    }
    Mat m(5, 5);
    for (int r = 0; r < 5; ++r) m.at(r, sigma[r]) = Cyc(1);
    return m;
}

AnalysisInput parse_input_text(const std::string& text) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const std::exception& e) {
        bad_doc(e.what());
    }
    if (!j.is_object()) bad_doc("top level must be an object");
    check_keys(j, {"conductor", "quintic", "generators", "options"}, "the document");
    if (!j.contains("conductor")) bad_doc("missing conductor");
    if (!j.contains("quintic")) bad_doc("missing quintic");

    AnalysisInput in;
    in.conductor = get_integer(j["conductor"], "conductor", 1, kMaxConductor);

    const njson& q = j["quintic"];
    if (!q.is_array()) bad_doc("quintic must be a list of terms");
    Poly p(5);
    for (const njson& t : q) {
        if (!t.is_object()) bad_doc("quintic terms must be objects");
        check_keys(t, {"coeff", "monomial"}, "a quintic term");
        if (!t.contains("coeff") || !t.contains("monomial"))
            bad_doc("quintic terms need coeff and monomial");
        const njson& mon = t["monomial"];
        if (!mon.is_array() || mon.size() != 5) bad_doc("monomial must list 5 exponents");
        std::vector<int> exp(5);
        for (int k = 0; k < 5; ++k) exp[k] = (int)get_integer(mon[k], "monomial exponent", 0, 5);
        p.add_term(std::move(exp), entry_to_cyc(t["coeff"], in.conductor, "coeff"));
    }
    in.quintic = make_quintic(std::move(p));

    if (j.contains("generators")) {
        const njson& gens = j["generators"];
        if (!gens.is_array()) bad_doc("generators must be a list");
        for (const njson& g : gens) {
            if (g.is_object()) {
                check_keys(g, {"perm"}, "a permutation generator");
                if (!g.contains("perm") || !g["perm"].is_string())
                    bad_doc("permutation generators need a perm string");
                in.generators.push_back(parse_permutation(g["perm"].get<std::string>()));
            } else {
                in.generators.push_back(parse_matrix(g, in.conductor));
            }
        }
    }

    if (j.contains("options")) {
        const njson& o = j["options"];
        if (!o.is_object()) bad_doc("options must be an object");
        check_keys(o, {"max_group_order", "emit_classes", "duality_check"}, "options");
        if (o.contains("max_group_order"))
            in.options.max_group_order = get_integer(o["max_group_order"], "max_group_order", 1, 1000000);
        if (o.contains("emit_classes")) {
            if (!o["emit_classes"].is_boolean()) bad_doc("emit_classes must be a boolean");
            in.options.emit_classes = o["emit_classes"].get<bool>();
        }
        if (o.contains("duality_check")) {
            if (!o["duality_check"].is_boolean()) bad_doc("duality_check must be a boolean");
            in.options.duality_check = o["duality_check"].get<bool>();
        }
    }

    for (size_t a = 0; a < in.generators.size(); ++a) {
        Mat na = normalize_projective(in.generators[a]);
        if (na == Mat::identity(5))
            in.warnings.push_back("generator " + std::to_string(a + 1) + " is the identity");
        for (size_t b = 0; b < a; ++b)
            if (na == normalize_projective(in.generators[b])) {
                in.warnings.push_back("generators " + std::to_string(b + 1) + " and " +
                                      std::to_string(a + 1) + " are projectively equal");
                break;
            }
    }
    return in;
}

AnalysisInput parse_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(errc::schema, "cannot read input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_input_text(buf.str());
}

std::string output_to_json(const AnalysisOutput& out) {
    njson j;
    j["group_order"] = out.group_order;
    j["num_classes"] = out.num_classes;
    if (out.include_classes) {
        njson arr = njson::array();
        for (const ClassReport& c : out.result.classes) {
            njson e;
            e["order"] = c.order;
            e["size"] = c.size;
            e["fixed_euler"] = c.fixed_euler;
            e["h11"] = c.h11;
            if (out.has_h22) e["h22"] = c.h22;
            arr.push_back(std::move(e));
        }
        j["classes"] = std::move(arr);
    }
    j["e_orbifold"] = out.result.euler;
    j["h11"] = out.result.h11;
    j["h21"] = out.result.h21;
    if (out.has_h22) j["h22_check"] = out.result.h22;
    njson pi;
    pi["order"] = out.result.pi1.order;
    pi["cyclic"] = out.result.pi1.cyclic;
    pi["abelian_invariants"] = out.result.pi1.abelian_invariants;
    j["pi1"] = std::move(pi);
    j["warnings"] = out.warnings;
    return j.dump(2) + "\n";
}

AnalysisOutput output_from_json(const std::string& text) {
    AnalysisOutput out;
    try {
        njson j = njson::parse(text);
        out.group_order = j.at("group_order").get<long>();
        out.num_classes = j.at("num_classes").get<long>();
        out.has_h22 = j.contains("h22_check");
        out.include_classes = j.contains("classes");
        if (out.include_classes)
            for (const njson& e : j.at("classes")) {
                ClassReport c;
                c.order = e.at("order").get<int>();
                c.size = e.at("size").get<int>();
                c.fixed_euler = e.at("fixed_euler").get<long>();
                c.h11 = e.at("h11").get<long>();
                if (out.has_h22) c.h22 = e.at("h22").get<long>();
                out.result.classes.push_back(c);
            }
        out.result.euler = j.at("e_orbifold").get<long>();
        out.result.h11 = j.at("h11").get<long>();
        out.result.h21 = j.at("h21").get<long>();
        if (out.has_h22) out.result.h22 = j.at("h22_check").get<long>();
        const njson& pi = j.at("pi1");
        out.result.pi1.order = pi.at("order").get<long>();
        out.result.pi1.cyclic = pi.at("cyclic").get<bool>();
        out.result.pi1.abelian_invariants =
            pi.at("abelian_invariants").get<std::vector<long>>();
        out.result.pi1.trivial = out.result.pi1.order == 1;
        long ab = 1;
        for (long d : out.result.pi1.abelian_invariants) ab *= d;
        out.result.pi1.abelian = ab == out.result.pi1.order;
        out.warnings = j.at("warnings").get<std::vector<std::string>>();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(errc::schema, std::string("invalid report document: ") + e.what());
    }
    return out;
}

std::string output_to_table(const AnalysisOutput& out) {
    std::ostringstream t;
    t << "group order " << out.group_order << ", " << out.num_classes << " classes\n";
    if (out.include_classes) {
        t << std::setw(5) << "ord" << std::setw(6) << "size" << std::setw(9) << "e(X^g)"
          << std::setw(7) << "h11_g";
        if (out.has_h22) t << std::setw(7) << "h22_g";
        t << "\n";
        for (const ClassReport& c : out.result.classes) {
            t << std::setw(5) << c.order << std::setw(6) << c.size << std::setw(9)
              << c.fixed_euler << std::setw(7) << c.h11;
            if (out.has_h22) t << std::setw(7) << c.h22;
            t << "\n";
        }
    }
    t << "e_orbifold " << out.result.euler << "\n";
    t << "h11 " << out.result.h11 << "   h21 " << out.result.h21;
    if (out.has_h22) t << "   h22_check " << out.result.h22;
    t << "\n";
    if (out.result.pi1.trivial) {
        t << "pi1 trivial\n";
    } else {
        t << "pi1 order " << out.result.pi1.order
          << (out.result.pi1.cyclic ? ", cyclic" : out.result.pi1.abelian ? ", abelian" : "")
          << ", invariants [";
        for (size_t k = 0; k < out.result.pi1.abelian_invariants.size(); ++k)
            t << (k ? " " : "") << out.result.pi1.abelian_invariants[k];
        t << "]\n";
    }
    for (const std::string& w : out.warnings) t << "warning: " << w << "\n";
    return t.str();
}

}  // namespace qmckay
