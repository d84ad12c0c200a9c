#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmckay/io.hpp"

using namespace qmckay;

namespace {

// Named fail-fast diagnostics before any group closure work starts.
void check_generators(const AnalysisInput& in) {
    for (size_t i = 0; i < in.generators.size(); ++i) {
        GorensteinReport rep = gorenstein_check(in.generators[i], in.quintic);
        if (!rep.preserves_form)
            fail(errc::not_gorenstein,
                 "generator " + std::to_string(i + 1) + " is not an automorphism of the form");
        if (!rep.gorenstein)
            fail(errc::not_gorenstein, "generator " + std::to_string(i + 1) +
                                           " is not Gorenstein: A(F) = mu F with mu != det A");
    }
}

AnalysisOutput run(const AnalysisInput& in) {
    check_generators(in);
    GroupTable t = close_group(in.generators, in.options.max_group_order);
    Session s(std::move(t), in.quintic);
    AnalysisOutput out;
    out.group_order = s.group().order();
    out.num_classes = s.group().num_classes();
    out.result = analyze(s, in.options.duality_check);
    out.include_classes = in.options.emit_classes;
    out.has_h22 = in.options.duality_check;
    out.warnings = in.warnings;
    return out;
}

int cmd_analyze(const std::string& path, bool table, long max_order, bool no_duality) {
    AnalysisInput in = parse_input(path);
    if (max_order > 0) in.options.max_group_order = max_order;
    if (no_duality) in.options.duality_check = false;
    AnalysisOutput out = run(in);
    std::cout << (table ? output_to_table(out) : output_to_json(out));
    return 0;
}

int cmd_classes(const std::string& path) {
    AnalysisInput in = parse_input(path);
    in.options.emit_classes = true;
    AnalysisOutput out = run(in);
    std::ostringstream t;
    t << std::setw(5) << "ord" << std::setw(6) << "size" << std::setw(9) << "e(X^g)"
      << std::setw(7) << "h11_g";
    if (out.has_h22) t << std::setw(7) << "h22_g";
    t << "\n";
    for (const ClassReport& c : out.result.classes) {
        t << std::setw(5) << c.order << std::setw(6) << c.size << std::setw(9) << c.fixed_euler
          << std::setw(7) << c.h11;
        if (out.has_h22) t << std::setw(7) << c.h22;
        t << "\n";
    }
    std::cout << t.str();
    return 0;
}

int cmd_verify(const std::string& path) {
    AnalysisInput in = parse_input(path);
    if (in.generators.empty()) std::cout << "no generators; the group is trivial\n";
    for (size_t i = 0; i < in.generators.size(); ++i) {
        const Mat& g = in.generators[i];
        GorensteinReport rep = gorenstein_check(g, in.quintic);
        std::cout << "generator " << i + 1 << ": automorphism "
                  << (rep.preserves_form ? "yes" : "no");
        if (!rep.preserves_form) {
            std::cout << "\n";
            continue;
        }
        std::cout << ", gorenstein " << (rep.gorenstein ? "yes" : "no");
        if (!rep.gorenstein) {
            std::cout << "\n";
            continue;
        }
        GroupTable t = close_group({g}, in.options.max_group_order);
        int idx = t.find(g);
        Session s(std::move(t), in.quintic);
        const FLift& l = s.lift(idx);
        Cyc tr(0);
        for (int r = 0; r < 5; ++r) tr = tr + l.a.at(r, r);
        long mult = 0;
        for (const auto& [value, basis] : l.eigen) mult = std::max(mult, (long)basis.cols);
        std::cout << ", projective order " << s.group().order_of[idx] << ", lift order "
                  << l.order << ", lift trace " << tr.str() << ", max eigenvalue multiplicity "
                  << mult << "\n";
    }
    for (const std::string& w : in.warnings) std::cout << "warning: " << w << "\n";
    return 0;
}

int cmd_batch(const std::string& dir, bool json_out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) fail(errc::schema, "not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    struct Row {
        std::string file;
        bool ok = false;
        AnalysisOutput out;
        std::string error;
    };
    std::vector<Row> rows;
    std::set<std::pair<long, long>> pairs;
    for (const fs::path& f : files) {
        Row r;
        r.file = f.filename().string();
        try {
            r.out = run(parse_input(f.string()));
            r.ok = true;
            pairs.insert({r.out.result.h11, r.out.result.h21});
        } catch (const std::exception& ex) {
            r.error = ex.what();
        }
        rows.push_back(std::move(r));
    }
    bool all_ok =
        std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.ok; });

    if (json_out) {
        nlohmann::ordered_json j;
        j["files"] = nlohmann::ordered_json::array();
        for (const Row& r : rows) {
            nlohmann::ordered_json e;
            e["file"] = r.file;
            e["ok"] = r.ok;
            if (r.ok)
                e["report"] = nlohmann::ordered_json::parse(output_to_json(r.out));
            else
                e["error"] = r.error;
            j["files"].push_back(std::move(e));
        }
        j["pairs"] = nlohmann::ordered_json::array();
        for (const auto& [a, b] : pairs) j["pairs"].push_back({a, b});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Row& r : rows) {
            if (r.ok)
                std::cout << r.file << ": h11 " << r.out.result.h11 << "  h21 "
                          << r.out.result.h21 << "  e " << r.out.result.euler << "  pi1 "
                          << r.out.result.pi1.order << "\n";
            else
                std::cout << r.file << ": FAILED (" << r.error << ")\n";
        }
        std::cout << "pairs:";
        for (const auto& [a, b] : pairs) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbifold invariants of quintic threefold quotients"};
    app.require_subcommand(1);

    std::string path, dir;
    bool as_json = false, as_table = false, no_duality = false;
    long max_order = 0;

    CLI::App* an = app.add_subcommand("analyze", "full invariant report for one input");
    an->add_option("file", path, "input document")->required();
    CLI::Option* jf = an->add_flag("--json", as_json, "machine format (the default)");
    CLI::Option* tf = an->add_flag("--table", as_table, "human-readable table");
    jf->excludes(tf);
    tf->excludes(jf);
    an->add_option("--max-group-order", max_order, "override the closure cap");
    an->add_flag("--no-duality-check", no_duality, "skip the h22 cross-check");

    CLI::App* ve = app.add_subcommand("verify", "per-generator diagnostics only");
    ve->add_option("file", path, "input document")->required();

    CLI::App* ba = app.add_subcommand("batch", "analyze every .json file in a directory");
    ba->add_option("dir", dir, "input directory")->required();
    ba->add_flag("--json", as_json, "machine format");

    CLI::App* cl = app.add_subcommand("classes", "per-class breakdown only");
    cl->add_option("file", path, "input document")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) return cmd_analyze(path, as_table, max_order, no_duality);
        if (ve->parsed()) return cmd_verify(path);
        if (ba->parsed()) return cmd_batch(dir, as_json);
        return cmd_classes(path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (int)e.kind;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (int)errc::internal;
    }
}
