// acm5: classification and compatible-connection reports for left-invariant
// almost contact metric structures in dimension five.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include "report.hpp"

#include "acm5/frame_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

using namespace acm5;
using acm5::cli::Doc;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct Source {
    FrameSpec frame;
    std::string origin; ///< "catalog" or the file path
};

Source resolve(const std::string& arg)
{
    for (const auto& r : examples())
        if (r.name() == arg)
            return {r.frame, "catalog"};
    if (std::filesystem::exists(arg))
        return {load_frame_file(arg), arg};
    throw FrameError("'" + arg + "' is neither a catalog name nor a readable file (catalog: " +
                     [] {
                         std::string s;
                         for (const auto& n : example_names())
                             s += (s.empty() ? "" : ", ") + n;
                         return s;
                     }() +
                     ")");
}

void emit(const Doc& d, const std::string& format)
{
    std::cout << (format == "machine" ? cli::render_machine(d) : cli::render_text(d));
}

std::vector<ConnectionKind> parse_kinds(const std::vector<std::string>& names)
{
    std::vector<ConnectionKind> out;
    auto add = [&](ConnectionKind k) {
        if (std::find(out.begin(), out.end(), k) == out.end())
            out.push_back(k);
    };
    for (const auto& n : names) {
        if (n == "vectorial")
            add(ConnectionKind::Vectorial);
        else if (n == "skew")
            add(ConnectionKind::Skew);
        else if (n == "traceless-cyclic")
            add(ConnectionKind::TracelessCyclic);
        else if (n == "all") {
            add(ConnectionKind::Vectorial);
            add(ConnectionKind::Skew);
            add(ConnectionKind::TracelessCyclic);
        }
    }
    return out;
}

int cmd_list(const std::string& cls, const std::string& format)
{
    Doc list = Doc::array();
    for (const auto& r : examples()) {
        const std::string c = cli::class_name(r.expected.strict_class);
        if (!cls.empty() && c != cls)
            continue;
        if (format == "machine") {
            Doc d;
            d["name"] = r.name();
            d["class"] = c;
            d["title"] = r.title;
            list.push_back(d);
        } else {
            std::cout << std::left << std::setw(22) << r.name() << std::setw(5) << c << r.title << "\n";
        }
    }
    if (format == "machine")
        std::cout << cli::render_machine(list);
    return 0;
}

int cmd_analyze(const std::string& source, const std::vector<std::string>& conns, bool curv, bool hol,
                const std::string& format)
{
    const Source s = resolve(source);
    cli::AnalyzeOptions opt;
    opt.connections = parse_kinds(conns);
    opt.explicit_connections = !conns.empty() && std::find(conns.begin(), conns.end(), "all") == conns.end();
    opt.curvature = curv;
    opt.holonomy = hol;
    emit(cli::analyze_doc(s.frame, s.origin, opt), format);
    return 0;
}

int cmd_verify(const std::vector<std::string>& names, const std::string& frame_file, bool verbose,
               const std::string& format)
{
    std::vector<const ExampleRecord*> recs;
    if (names.empty())
        for (const auto& r : examples())
            recs.push_back(&r);
    for (const auto& n : names)
        recs.push_back(&find_example(n));
    if (!frame_file.empty() && recs.size() != 1)
        throw FrameError("--frame needs exactly one example name");

    Doc out = Doc::array();
    int passed = 0;
    for (const ExampleRecord* r : recs) {
        ExampleRecord rec = *r;
        if (!frame_file.empty()) {
            FrameSpec f = load_frame_file(frame_file);
            f.name = rec.name();
            rec.frame = f;
        }
        const VerificationReport rep = run_example(rec);
        passed += rep.passed() ? 1 : 0;
        if (format == "machine") {
            out.push_back(cli::verify_doc(rep, verbose));
            continue;
        }
        std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.name << " (" << rep.fields.size() << " fields)\n";
        for (const auto& f : rep.fields)
            if (!f.pass || verbose)
                std::cout << "  " << (f.pass ? "ok   " : "FAIL ") << f.field << "\n      expected: " << f.expected
                          << "\n      actual:   " << f.actual << "\n";
    }
    if (format == "machine")
        std::cout << cli::render_machine(out);
    else
        std::cout << passed << "/" << recs.size() << " examples pass\n";
    return passed == static_cast<int>(recs.size()) ? 0 : kExitMismatch;
}

int cmd_export(const std::string& name, const std::string& output)
{
    const std::string text = frame_to_json(find_example(name).frame);
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output);
    if (!out)
        throw FrameError(output + ": cannot write file");
    out << text;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Intrinsic torsion classes and compatible connections of almost contact metric 5-manifolds"};
    app.require_subcommand(1);
    std::string format = "text";
    const std::vector<std::string> formats = {"text", "machine"};

    auto* list = app.add_subcommand("list", "List the built-in examples");
    std::string list_class;
    list->add_option("--class", list_class, "Only examples of this strict class, e.g. W3");
    list->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

    auto* analyze = app.add_subcommand("analyze", "Classify a frame and build compatible connections");
    std::string source;
    std::vector<std::string> conns;
    bool curv = false, hol = false;
    analyze->add_option("source", source, "Catalog name or FrameSpec JSON file")->required();
    analyze->add_option("--connections", conns, "Connections to construct")
        ->check(CLI::IsMember({"vectorial", "skew", "traceless-cyclic", "all"}))
        ->delimiter(',');
    analyze->add_flag("--curvature", curv, "Curvature and Ricci tensors");
    analyze->add_flag("--holonomy", hol, "Infinitesimal holonomy algebras");
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Recompute catalog examples and compare with expected results");
    std::vector<std::string> names;
    std::string frame_file;
    bool verbose = false;
    verify->add_option("names", names, "Examples to verify (default: all)");
    verify->add_option("--frame", frame_file, "Check one example's expectations against this frame file");
    verify->add_flag("-v,--verbose", verbose, "Show passing fields too");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

    auto* exp = app.add_subcommand("export", "Write a catalog frame as FrameSpec JSON");
    std::string exp_name, exp_out;
    exp->add_option("name", exp_name, "Catalog name")->required();
    exp->add_option("-o,--output", exp_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*list)
            return cmd_list(list_class, format);
        if (*analyze)
            return cmd_analyze(source, conns, curv, hol, format);
        if (*verify)
            return cmd_verify(names, frame_file, verbose, format);
        if (*exp)
            return cmd_export(exp_name, exp_out);
    } catch (const FrameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const UnknownExample& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const cli::RequestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
